#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace uag::detail {

std::vector<std::string> split_lines(std::string_view text);
std::vector<std::string> split_words(std::string_view line);
std::string_view strip_comment(std::string_view line);
std::string trim(std::string_view s);
std::optional<std::uint64_t> parse_uint(std::string_view s);
std::optional<std::int64_t> parse_int(std::string_view s);
std::string read_file(const std::string& path);
std::string directory_of(const std::string& path);

}  // namespace uag::detail
