#include "uag/parser.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <unordered_set>

#include "text_util.hpp"
#include "uag/error.hpp"

namespace uag {

namespace {

enum class Tok { LParen, RParen, Comma, Equals, Name, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t column;  // 1-based
};

bool is_word_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

bool is_structural(char c) { return c == '(' || c == ')' || c == ',' || c == '='; }

std::vector<Token> tokenize(std::string_view src, const Signature& sig, std::size_t line) {
  std::vector<std::string> punct_names;
  for (const auto& s : sig.symbols()) {
    if (!s.name.empty() && !is_word_char(s.name[0])) punct_names.push_back(s.name);
  }
  std::sort(punct_names.begin(), punct_names.end(),
            [](const std::string& a, const std::string& b) { return a.size() > b.size(); });

  std::vector<Token> out;
  std::size_t i = 0;
  while (i < src.size()) {
    char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    const std::size_t col = i + 1;
    switch (c) {
      case '(': out.push_back({Tok::LParen, "(", col}); ++i; continue;
      case ')': out.push_back({Tok::RParen, ")", col}); ++i; continue;
      case ',': out.push_back({Tok::Comma, ",", col}); ++i; continue;
      case '=': out.push_back({Tok::Equals, "=", col}); ++i; continue;
      default: break;
    }
    if (is_word_char(c)) {
      std::size_t j = i;
      while (j < src.size() && is_word_char(src[j])) ++j;
      out.push_back({Tok::Name, std::string(src.substr(i, j - i)), col});
      i = j;
      continue;
    }
    bool matched = false;
    for (const auto& name : punct_names) {
      if (src.substr(i, name.size()) == name) {
        out.push_back({Tok::Name, name, col});
        i += name.size();
        matched = true;
        break;
      }
    }
    if (matched) continue;
    std::size_t j = i + 1;
    while (j < src.size() && !is_word_char(src[j]) && !is_structural(src[j]) &&
           !std::isspace(static_cast<unsigned char>(src[j]))) {
      ++j;
    }
    throw ParseError("unknown symbol '" + std::string(src.substr(i, j - i)) + "'", line, col);
  }
  out.push_back({Tok::End, "", src.size() + 1});
  return out;
}

/// Syntax tree before names are resolved against the signature and X.
struct Raw {
  std::string name;
  std::size_t column;
  bool call = false;
  std::vector<Raw> args;
};

class RawParser {
 public:
  RawParser(std::vector<Token> toks, const Signature& sig, std::size_t line)
      : toks_(std::move(toks)), sig_(sig), line_(line) {}

  Raw expr(int min_prec) {
    Raw lhs = primary();
    while (true) {
      const Token& t = peek();
      if (t.kind != Tok::Name) break;
      auto idx = sig_.find(t.text);
      if (!idx || !sig_[*idx].infix()) break;
      const int p = *sig_[*idx].precedence;
      if (p < min_prec) break;
      Token op = next();
      Raw rhs = expr(p + 1);
      Raw node{op.text, op.column, true, {}};
      node.args.push_back(std::move(lhs));
      node.args.push_back(std::move(rhs));
      lhs = std::move(node);
    }
    return lhs;
  }

  const Token& peek() const { return toks_[pos_]; }
  Token next() { return toks_[pos_++]; }

  [[noreturn]] void fail(const std::string& msg, const Token& at) const {
    throw ParseError(msg, line_, at.column);
  }

  void expect(Tok kind, const char* what) {
    if (peek().kind != kind) {
      const Token& t = peek();
      fail(std::string("expected ") + what + (t.kind == Tok::End ? " before end of input" : ", found '" + t.text + "'"), t);
    }
    next();
  }

  static int lowest() { return -(1 << 30); }

 private:
  Raw primary() {
    const Token& t = peek();
    if (t.kind == Tok::LParen) {
      next();
      Raw inner = expr(lowest());
      expect(Tok::RParen, "')'");
      return inner;
    }
    if (t.kind != Tok::Name) {
      fail(t.kind == Tok::End ? "unexpected end of input" : "unexpected '" + t.text + "'", t);
    }
    Token name = next();
    Raw node{name.text, name.column, false, {}};
    if (peek().kind == Tok::LParen) {
      next();
      node.call = true;
      node.args.push_back(expr(lowest()));
      while (peek().kind == Tok::Comma) {
        next();
        node.args.push_back(expr(lowest()));
      }
      expect(Tok::RParen, "')'");
    }
    return node;
  }

  std::vector<Token> toks_;
  const Signature& sig_;
  std::size_t line_;
  std::size_t pos_ = 0;
};

Term resolve(const Raw& r, const Signature& sig, const VarSet& vars, std::size_t line) {
  auto var_it = std::find(vars.begin(), vars.end(), r.name);
  if (!r.call && var_it != vars.end()) return Term::var(static_cast<std::size_t>(var_it - vars.begin()));
  auto idx = sig.find(r.name);
  if (!idx) {
    if (r.call) throw ParseError("unknown symbol '" + r.name + "'", line, r.column);
    throw ParseError("unknown variable '" + r.name + "'", line, r.column);
  }
  const Symbol& s = sig[*idx];
  if (r.args.size() != s.arity) {
    throw ParseError("arity mismatch: '" + s.name + "' takes " + std::to_string(s.arity) + " argument(s), given " +
                         std::to_string(r.args.size()),
                     line, r.column);
  }
  std::vector<Term> args;
  args.reserve(r.args.size());
  for (const auto& a : r.args) args.push_back(resolve(a, sig, vars, line));
  return Term::app(*idx, std::move(args));
}

}  // namespace

Term parse_term(std::string_view src, const Signature& sig, const VarSet& vars, std::size_t line) {
  RawParser p(tokenize(src, sig, line), sig, line);
  Raw raw = p.expr(RawParser::lowest());
  if (p.peek().kind != Tok::End) p.fail("unexpected '" + p.peek().text + "'", p.peek());
  return resolve(raw, sig, vars, line);
}

Equation parse_equation(std::string_view src, const Signature& sig, const VarSet& vars, std::size_t line) {
  RawParser p(tokenize(src, sig, line), sig, line);
  Raw lhs = p.expr(RawParser::lowest());
  p.expect(Tok::Equals, "'='");
  Raw rhs = p.expr(RawParser::lowest());
  if (p.peek().kind != Tok::End) p.fail("unexpected '" + p.peek().text + "'", p.peek());
  return Equation{resolve(lhs, sig, vars, line), resolve(rhs, sig, vars, line)};
}

EquationSystem parse_system(std::string_view text, const Signature& sig) {
  std::optional<EquationSystem> sys;
  std::size_t line_no = 0;
  for (const auto& raw : detail::split_lines(text)) {
    ++line_no;
    std::string_view line = detail::strip_comment(raw);
    auto words = detail::split_words(line);
    if (words.empty()) continue;
    if (words[0] == "vars") {
      if (sys) throw ParseError("duplicate 'vars' line", line_no, 1);
      VarSet vars(words.begin() + 1, words.end());
      std::unordered_set<std::string> seen;
      for (const auto& v : vars) {
        if (!seen.insert(v).second) throw ParseError("duplicate variable '" + v + "'", line_no, 1);
        if (sig.find(v)) throw ParseError("variable '" + v + "' clashes with a symbol name", line_no, 1);
        if (v.empty() || !std::all_of(v.begin(), v.end(), is_word_char)) {
          throw ParseError("invalid variable name '" + v + "'", line_no, 1);
        }
      }
      sys.emplace(std::move(vars));
      continue;
    }
    if (!sys) throw ParseError("expected 'vars ...' before the first equation", line_no, 1);
    sys->add(parse_equation(line, sig, sys->vars(), line_no));
  }
  if (!sys) throw ParseError("missing 'vars' line", line_no == 0 ? 1 : line_no, 1);
  return *sys;
}

EquationSystem load_system_file(const std::string& path, const Signature& sig) {
  return parse_system(detail::read_file(path), sig);
}

}  // namespace uag
