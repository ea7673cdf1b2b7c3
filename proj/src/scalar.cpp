#include "openkp/scalar.hpp"

#include <sstream>

namespace okp {

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_zero()) throw domain_error("division by zero scalar");
  if (im_ == 0 && o.im_ == 0) {
    re_ /= o.re_;
    return *this;
  }
  // (a+bi)/(c+di) = (a+bi)(c-di)/(c^2+d^2)
  mpq_class n = o.re_ * o.re_ + o.im_ * o.im_;
  Scalar num = *this * o.conj();
  re_ = num.re_ / n;
  im_ = num.im_ / n;
  return *this;
}

Scalar Scalar::inv() const { return Scalar(1) / *this; }

Scalar Scalar::pow(long e) const {
  if (e == 0) return Scalar(1);
  Scalar base = e > 0 ? *this : inv();
  unsigned long n = static_cast<unsigned long>(e > 0 ? e : -e);
  Scalar acc(1);
  while (n) {
    if (n & 1) acc *= base;
    base *= base;
    n >>= 1;
  }
  return acc;
}

Scalar Scalar::binomial(const Scalar& a, unsigned k) {
  Scalar acc(1);
  for (unsigned j = 0; j < k; ++j) acc *= (a - Scalar(static_cast<long>(j)));
  return acc / Scalar::factorial(k);
}

std::optional<Scalar> Scalar::sqrt_exact() const {
  if (im_ != 0 || re_ < 0) return std::nullopt;
  const mpz_class& num = re_.get_num();
  const mpz_class& den = re_.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) ||
      !mpz_perfect_square_p(den.get_mpz_t()))
    return std::nullopt;
  mpz_class sn, sd;
  mpz_sqrt(sn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(sd.get_mpz_t(), den.get_mpz_t());
  return Scalar(mpq_class(sn) / mpq_class(sd));
}

namespace {

std::string q_to_string(const mpq_class& q) {
  std::ostringstream os;
  if (q.get_den() == 1)
    os << q.get_num();
  else
    os << q.get_num() << "/" << q.get_den();
  return os.str();
}

mpq_class q_from_string(const std::string& s) {
  mpq_class q;
  if (q.set_str(s, 10) != 0) throw domain_error("bad rational literal: " + s);
  q.canonicalize();
  return q;
}

}  // namespace

std::string Scalar::to_string() const {
  if (im_ == 0) return q_to_string(re_);
  std::string istr = q_to_string(im_ < 0 ? mpq_class(-im_) : im_) + "*i";
  if (re_ == 0) return (im_ < 0 ? "-" : "") + istr;
  return q_to_string(re_) + (im_ < 0 ? "-" : "+") + istr;
}

Scalar Scalar::from_string(const std::string& s) {
  auto star = s.find("*i");
  if (star == std::string::npos) return Scalar(q_from_string(s));
  // split off the imaginary summand: find the sign separating the two parts
  // (skip a leading sign and any '/' context; the separator is the last '+'
  // or '-' before the imaginary numerator).
  std::string head = s.substr(0, star);
  size_t sep = std::string::npos;
  for (size_t p = 1; p < head.size(); ++p)
    if ((head[p] == '+' || head[p] == '-') && head[p - 1] != '/') sep = p;
  if (sep == std::string::npos)
    return Scalar(mpq_class(0), q_from_string(head));
  mpq_class re = q_from_string(head.substr(0, sep));
  mpq_class im = q_from_string(head.substr(sep + 1));
  if (head[sep] == '-') im = -im;
  return Scalar(re, im);
}

}  // namespace okp
