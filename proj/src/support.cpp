#include "nzeta/support.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>

namespace nzeta {
namespace {

bool is_letter(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }
bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

bool valid_identifier(std::string_view s) {
  if (s.empty() || !is_letter(s.front())) return false;
  return std::all_of(s.begin(), s.end(), [](char c) { return is_letter(c) || is_digit(c) || c == '_'; });
}

enum class Tok { Ident, Nat, Plus, Minus, Star, Caret, Other, End };

struct Token {
  Tok kind;
  std::string_view text;
  std::size_t pos;
};

class Lexer {
 public:
  explicit Lexer(std::string_view s) : s_(s) {}

  Token next() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    const std::size_t start = i_;
    if (i_ == s_.size()) return {Tok::End, {}, start};
    const char c = s_[i_];
    if (is_letter(c)) {
      while (i_ < s_.size() && (is_letter(s_[i_]) || is_digit(s_[i_]) || s_[i_] == '_')) ++i_;
      return {Tok::Ident, s_.substr(start, i_ - start), start};
    }
    if (is_digit(c)) {
      while (i_ < s_.size() && is_digit(s_[i_])) ++i_;
      return {Tok::Nat, s_.substr(start, i_ - start), start};
    }
    ++i_;
    switch (c) {
      case '+': return {Tok::Plus, s_.substr(start, 1), start};
      case '-': return {Tok::Minus, s_.substr(start, 1), start};
      case '*': return {Tok::Star, s_.substr(start, 1), start};
      case '^': return {Tok::Caret, s_.substr(start, 1), start};
      default: return {Tok::Other, s_.substr(start, 1), start};
    }
  }

 private:
  std::string_view s_;
  std::size_t i_ = 0;
};

std::string describe(const Token& t) {
  switch (t.kind) {
    case Tok::End: return "end of input";
    default: return "'" + std::string(t.text) + "'";
  }
}

class Parser {
 public:
  Parser(std::string_view text, const VariableMap& vars) : lex_(text), vars_(vars) { advance(); }

  std::map<Point, Integer> parse() {
    term(+1);
    while (cur_.kind == Tok::Plus || cur_.kind == Tok::Minus) {
      int sign = cur_.kind == Tok::Plus ? +1 : -1;
      advance();
      term(sign);
    }
    if (cur_.kind != Tok::End) throw ParseError("unexpected " + describe(cur_) + ", expected '+', '-' or end of input", cur_.pos);
    return std::move(terms_);
  }

 private:
  void advance() { cur_ = lex_.next(); }

  void term(int sign) {
    if (cur_.kind == Tok::Plus || cur_.kind == Tok::Minus) {
      if (cur_.kind == Tok::Minus) sign = -sign;
      advance();
    }
    Integer coef = sign;
    Point exps(vars_.size(), 0);
    if (cur_.kind == Tok::Nat) {
      coef *= Integer(std::string(cur_.text));
      advance();
      if (cur_.kind != Tok::Star) {
        accumulate(exps, coef);
        return;
      }
      advance();
      if (cur_.kind != Tok::Ident) throw ParseError("expected a variable after '*', found " + describe(cur_), cur_.pos);
    } else if (cur_.kind != Tok::Ident) {
      throw ParseError("expected a term, found " + describe(cur_), cur_.pos);
    }
    factor(exps);
    while (cur_.kind == Tok::Star) {
      advance();
      if (cur_.kind == Tok::Nat) throw ParseError("coefficient must precede the variables", cur_.pos);
      if (cur_.kind != Tok::Ident) throw ParseError("expected a variable after '*', found " + describe(cur_), cur_.pos);
      factor(exps);
    }
    accumulate(exps, coef);
  }

  void factor(Point& exps) {
    const std::size_t idx = vars_.index_of(cur_.text);
    if (idx == vars_.size()) throw ParseError("unknown variable '" + std::string(cur_.text) + "'", cur_.pos);
    advance();
    Integer e = 1;
    if (cur_.kind == Tok::Caret) {
      advance();
      if (cur_.kind == Tok::Minus) throw ParseError("negative exponent", cur_.pos);
      if (cur_.kind != Tok::Nat) throw ParseError("expected a non-negative integer exponent, found " + describe(cur_), cur_.pos);
      e = Integer(std::string(cur_.text));
      advance();
      if (cur_.kind == Tok::Other && (cur_.text == "." || cur_.text == "/"))
        throw ParseError("non-integer exponent", cur_.pos);
    }
    exps[idx] += e;
  }

  void accumulate(const Point& exps, const Integer& coef) { terms_[exps] += coef; }

  Lexer lex_;
  const VariableMap& vars_;
  Token cur_{Tok::End, {}, 0};
  std::map<Point, Integer> terms_;
};

}  // namespace

VariableMap::VariableMap(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.empty()) throw std::invalid_argument("variable list is empty");
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (!valid_identifier(names_[i])) throw std::invalid_argument("invalid variable name '" + names_[i] + "'");
    for (std::size_t j = 0; j < i; ++j)
      if (names_[j] == names_[i]) throw std::invalid_argument("duplicate variable name '" + names_[i] + "'");
  }
}

VariableMap VariableMap::parse(std::string_view list) {
  std::vector<std::string> names;
  std::size_t start = 0;
  while (true) {
    auto comma = list.find(',', start);
    auto piece = list.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    while (!piece.empty() && std::isspace(static_cast<unsigned char>(piece.front()))) piece.remove_prefix(1);
    while (!piece.empty() && std::isspace(static_cast<unsigned char>(piece.back()))) piece.remove_suffix(1);
    names.emplace_back(piece);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return VariableMap(std::move(names));
}

std::size_t VariableMap::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return names_.size();
}

GermSupport::GermSupport(std::size_t ambient_dim, std::vector<Point> points) : ambient_dim_(ambient_dim), points_(std::move(points)) {
  if (ambient_dim_ == 0) throw std::invalid_argument("support: ambient dimension must be positive");
  if (points_.empty()) throw SupportError("empty support: the zero germ has no Newton diagram");
  for (const auto& p : points_) {
    if (p.size() != ambient_dim_) throw std::invalid_argument("support: exponent vector of wrong length");
    for (const auto& x : p)
      if (x < 0) throw SupportError("support: negative exponent " + to_string(p));
    if (is_zero(p)) throw SupportError("germ does not vanish at origin (constant term present)");
  }
  std::sort(points_.begin(), points_.end());
  points_.erase(std::unique(points_.begin(), points_.end()), points_.end());
}

GermSupport parse_polynomial(std::string_view text, const VariableMap& vars) {
  auto terms = Parser(text, vars).parse();
  std::vector<Point> pts;
  for (auto& [exps, coef] : terms)
    if (coef != 0) pts.push_back(exps);
  if (pts.empty()) throw SupportError("empty support after cancellation: the zero germ has no Newton diagram");
  return GermSupport(vars.size(), std::move(pts));
}

VariableMap collect_variables(const std::vector<std::string>& texts) {
  std::vector<std::string> names;
  for (const auto& t : texts) {
    Lexer lex(t);
    for (auto tok = lex.next(); tok.kind != Tok::End; tok = lex.next()) {
      if (tok.kind != Tok::Ident) continue;
      std::string name(tok.text);
      if (std::find(names.begin(), names.end(), name) == names.end()) names.push_back(name);
    }
  }
  return VariableMap(std::move(names));
}

std::string render_support(const GermSupport& s, const VariableMap& vars) {
  if (vars.size() != s.ambient_dim()) throw std::invalid_argument("render_support: variable count mismatch");
  std::string out;
  for (const auto& p : s.points()) {
    if (!out.empty()) out += " + ";
    std::string mono;
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (p[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += vars.name(i);
      if (p[i] != 1) mono += "^" + p[i].get_str();
    }
    out += mono;
  }
  return out;
}

}  // namespace nzeta
