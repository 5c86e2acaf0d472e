#include "jpencil/rational.hpp"

namespace jpencil {

Rational::Rational(long long num, long long den) {
  if (den == 0) throw DivisionByZero("rational with zero denominator");
  v_ = mpq_class(static_cast<long>(num), static_cast<long>(den));
  v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  auto bad = [&] { return ParseError("invalid rational: '" + std::string(text) + "'"); };
  std::size_t begin = text.find_first_not_of(" \t");
  std::size_t end = text.find_last_not_of(" \t");
  if (begin == std::string_view::npos) throw bad();
  text = text.substr(begin, end - begin + 1);

  const std::size_t slash = text.find('/');
  const std::string num_s(text.substr(0, slash));
  mpz_class num, den(1);
  if (num_s.empty() || num.set_str(num_s, 10) != 0) throw bad();
  if (slash != std::string_view::npos) {
    const std::string den_s(text.substr(slash + 1));
    if (den_s.empty() || den.set_str(den_s, 10) != 0) throw bad();
    if (den == 0) throw DivisionByZero("rational with zero denominator");
  }
  mpq_class q(num, den);
  q.canonicalize();
  return Rational(q);
}

std::string Rational::str() const {
  if (v_.get_den() == 1) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

}  // namespace jpencil
