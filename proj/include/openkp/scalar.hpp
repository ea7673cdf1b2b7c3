#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>

namespace okp {

/// Raised when an input violates a mathematical precondition (bad constant
/// term, non-square radicand, zero eigenvalue, ...).
struct domain_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Raised when two objects cannot be combined (mismatched variable tables,
/// dimension mismatch, complex value in a real-only computation, ...).
struct structural_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Exact scalar: a rational number with an optional Gaussian (imaginary)
/// part.  Both components are arbitrary-precision rationals kept in
/// canonical form (positive denominator, reduced).
class Scalar {
 public:
  Scalar() : re_(0), im_(0) {}
  Scalar(long n) : re_(n), im_(0) {}  // NOLINT: implicit by design
  Scalar(long num, unsigned long den) : re_(num, den), im_(0) { re_.canonicalize(); }
  explicit Scalar(mpq_class re, mpq_class im = mpq_class(0))
      : re_(std::move(re)), im_(std::move(im)) {}

  static Scalar i() { return Scalar(mpq_class(0), mpq_class(1)); }
  static Scalar frac(long num, long den) {
    if (den == 0) throw domain_error("zero denominator");
    mpq_class q(num, den);
    q.canonicalize();
    return Scalar(q);
  }
  static Scalar factorial(unsigned n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return Scalar(mpq_class(f));
  }
  static Scalar pow2(long e) {
    Scalar two(2);
    return two.pow(e);
  }
  /// Generalized binomial coefficient binom(a, k) for rational a.
  static Scalar binomial(const Scalar& a, unsigned k);

  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }

  bool is_zero() const { return re_ == 0 && im_ == 0; }
  bool is_one() const { return re_ == 1 && im_ == 0; }
  bool is_real() const { return im_ == 0; }
  bool is_integer() const { return im_ == 0 && re_.get_den() == 1; }

  Scalar operator-() const { return Scalar(-re_, -im_); }
  Scalar conj() const { return Scalar(re_, -im_); }

  Scalar& operator+=(const Scalar& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  Scalar& operator-=(const Scalar& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  Scalar& operator*=(const Scalar& o) {
    if (im_ == 0 && o.im_ == 0) {
      re_ *= o.re_;
      return *this;
    }
    mpq_class r = re_ * o.re_ - im_ * o.im_;
    mpq_class i = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    im_ = std::move(i);
    return *this;
  }
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  Scalar inv() const;
  Scalar pow(long e) const;

  /// Exact square root of a non-negative rational; nullopt when the value is
  /// complex, negative, or not a perfect square of a rational.
  std::optional<Scalar> sqrt_exact() const;

  /// Canonical form: "p", "p/q", "p/q+r/t*i", "r*i", ...
  std::string to_string() const;
  /// Parses the canonical form produced by to_string.
  static Scalar from_string(const std::string& s);

  double to_double() const {
    if (im_ != 0) throw structural_error("complex scalar has no double value");
    return re_.get_d();
  }

 private:
  mpq_class re_, im_;
};

inline Scalar operator*(long a, const Scalar& b) { return Scalar(a) * b; }

}  // namespace okp
