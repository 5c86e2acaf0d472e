#include <charconv>
#include <cstdlib>
#include <string>

#include "jpencil/scalar.hpp"

namespace jpencil {

std::string scalar_str(double x) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
  if (ec != std::errc()) throw InternalError("float formatting failed");
  return std::string(buf, ptr);
}

std::string scalar_str(const Rational& x) { return x.str(); }

std::string scalar_str(const QuadExt& x) {
  if (x.is_rational()) return x.rational_part().str();
  const std::string radical = "*sqrt(" + std::to_string(x.radicand()) + ")";
  if (x.rational_part().is_zero()) return x.radical_part().str() + radical;
  if (x.radical_part().sign() < 0) {
    return x.rational_part().str() + "-" + (-x.radical_part()).str() + radical;
  }
  return x.rational_part().str() + "+" + x.radical_part().str() + radical;
}

namespace {

struct Cursor {
  std::string s;
  std::size_t pos = 0;

  explicit Cursor(std::string_view text) {
    s.reserve(text.size());
    for (char c : text) {
      if (c != ' ' && c != '\t') s.push_back(c);
    }
  }

  bool done() const { return pos >= s.size(); }
  char peek() const { return pos < s.size() ? s[pos] : '\0'; }
  bool consume(std::string_view lit) {
    if (s.compare(pos, lit.size(), lit) == 0) {
      pos += lit.size();
      return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("invalid scalar '" + s + "': " + what);
  }

  std::string digits() {
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) fail("expected digits");
    return s.substr(start, pos - start);
  }

  Rational unsigned_rational() {
    std::string num = digits();
    if (consume("/")) return Rational::parse(num + "/" + digits());
    return Rational::parse(num);
  }

  long long radicand_suffix() {
    if (!consume("(")) fail("expected '(' after sqrt");
    const std::string d = digits();
    if (!consume(")")) fail("expected ')'");
    return std::strtoll(d.c_str(), nullptr, 10);
  }
};

}  // namespace

template <>
QuadExt scalar_parse<QuadExt>(std::string_view text) {
  Cursor c(text);
  QuadExt result(0);
  bool first = true;
  while (!c.done()) {
    int sign = 1;
    if (c.consume("+")) {
      sign = 1;
    } else if (c.consume("-")) {
      sign = -1;
    } else if (!first) {
      c.fail("expected '+' or '-' between terms");
    }
    QuadExt term(0);
    if (c.consume("sqrt")) {
      term = QuadExt::sqrt_of(c.radicand_suffix());
    } else {
      Rational r = c.unsigned_rational();
      if (c.consume("*sqrt")) {
        term = QuadExt(Rational(0), r, c.radicand_suffix());
      } else {
        term = QuadExt(std::move(r));
      }
    }
    result = (sign < 0) ? result - term : result + term;
    first = false;
  }
  if (first) c.fail("empty");
  return result;
}

template <>
Rational scalar_parse<Rational>(std::string_view text) {
  const QuadExt q = scalar_parse<QuadExt>(text);
  if (!q.is_rational()) {
    throw ParseError("'" + std::string(text) + "' is not rational");
  }
  return q.rational_part();
}

template <>
double scalar_parse<double>(std::string_view text) {
  std::size_t begin = text.find_first_not_of(" \t");
  std::size_t end = text.find_last_not_of(" \t");
  if (begin == std::string_view::npos) throw ParseError("empty scalar");
  const std::string_view trimmed = text.substr(begin, end - begin + 1);
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(trimmed.data(), trimmed.data() + trimmed.size(), value);
  if (ec == std::errc() && ptr == trimmed.data() + trimmed.size()) return value;
  // Fall back to the exact grammar so "1/2" and "1*sqrt(2)" work in f64 mode.
  return scalar_parse<QuadExt>(trimmed).to_double();
}

}  // namespace jpencil
