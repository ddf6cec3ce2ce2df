#include "uag/error.hpp"

#include <sstream>

namespace uag {

namespace {

std::string format_parse(const std::string& message, std::size_t line, std::size_t column) {
  std::ostringstream out;
  out << "line " << line << ", column " << column << ": " << message;
  return out.str();
}

std::string format_cap(const std::string& what, std::size_t required, std::size_t cap) {
  std::ostringstream out;
  out << what << ": requires " << required << ", cap is " << cap;
  return out.str();
}

}  // namespace

ParseError::ParseError(const std::string& message, std::size_t line, std::size_t column)
    : InputError(format_parse(message, line, column)), detail_(message), line_(line), column_(column) {}

CapExceeded::CapExceeded(const std::string& what, std::size_t required, std::size_t cap)
    : Error(format_cap(what, required, cap)), required_(required), cap_(cap) {}

}  // namespace uag
