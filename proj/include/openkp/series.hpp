#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "openkp/scalar.hpp"

namespace okp {

/// One formal variable: per-variable degree cap and (non-positive) minimum
/// exponent.  min_exp < 0 marks the variable Laurent-permitted with a proven
/// lower bound.
struct Var {
  std::string name;
  int cap = 0;
  int min_exp = 0;
};

class VarTable;
using VarTablePtr = std::shared_ptr<const VarTable>;

class VarTable {
 public:
  static VarTablePtr make(std::vector<Var> vars, bool complex_ok = false);

  size_t arity() const { return vars_.size(); }
  const Var& var(size_t i) const { return vars_[i]; }
  const std::vector<Var>& vars() const { return vars_; }
  bool complex_ok() const { return complex_ok_; }
  size_t index(const std::string& name) const;

  bool same_shape(const VarTable& o) const;

 private:
  std::vector<Var> vars_;
  bool complex_ok_ = false;
};

using ExpVec = std::vector<int16_t>;

/// Sparse truncated multivariate formal series over exact scalars.  Every
/// stored exponent vector respects the per-variable caps and minimum
/// exponents; zero coefficients are never stored, so equality is map
/// equality.  All arithmetic re-truncates, keeping results closed under the
/// caps.
class Series {
 public:
  Series() = default;
  explicit Series(VarTablePtr vt) : vt_(std::move(vt)) {}

  static Series constant(VarTablePtr vt, const Scalar& c);
  static Series variable(VarTablePtr vt, const std::string& name);
  static Series monomial(VarTablePtr vt, const ExpVec& e, const Scalar& c);

  const VarTablePtr& table() const { return vt_; }
  const std::map<ExpVec, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t size() const { return terms_.size(); }

  Scalar coefficient(const ExpVec& e) const;
  Scalar constant_term() const;
  /// Smallest exponent sum over stored terms (0 for the zero series).
  int min_total_degree() const;
  bool is_real() const;

  void add_term(const ExpVec& e, const Scalar& c);

  Series operator-() const;
  Series& operator+=(const Series& o);
  Series& operator-=(const Series& o);
  friend Series operator+(Series a, const Series& b) { return a += b; }
  friend Series operator-(Series a, const Series& b) { return a -= b; }
  friend Series operator*(const Series& a, const Series& b);
  Series& operator*=(const Series& o) { return *this = *this * o; }
  Series& operator*=(const Scalar& c);
  friend Series operator*(Series a, const Scalar& c) { return a *= c; }
  friend Series operator*(const Scalar& c, Series a) { return a *= c; }
  friend bool operator==(const Series& a, const Series& b);
  friend bool operator!=(const Series& a, const Series& b) { return !(a == b); }

  /// Multiplies by the monomial c*x^shift, dropping terms that leave the cap
  /// box; throws if a term would cross a variable's minimum exponent.
  Series shifted(const ExpVec& shift, const Scalar& c) const;

  Series exp() const;
  Series log() const;
  Series inv() const;
  Series sqrt() const;
  /// (1 + r)^alpha via the generalized binomial series; requires unit
  /// constant term.
  Series pow_binomial(const Scalar& alpha) const;
  Series pow(long n) const;

  Series derivative(size_t var) const;
  /// The derivation -x^3 d/dx in variable `var` (λ^{-1} d/dλ on x = λ^{-1}).
  Series lambda_derivation(size_t var) const;

  Series subst_zero(size_t var) const;
  Series subst_scalar(size_t var, const Scalar& value) const;
  /// Keeps only terms whose exponents satisfy the predicate.
  Series filtered(const std::function<bool(const ExpVec&)>& keep) const;
  /// Coefficient of var^k as a series in the remaining exponents (the var
  /// exponent is zeroed in the result).
  Series coefficient_of(size_t var, int k) const;
  int max_degree(size_t var) const;

  std::string to_string() const;
  /// JSON array of {"exponents": [...], "coefficient": "p/q"}.
  std::string to_json() const;

 private:
  void check_compatible(const Series& o) const;

  VarTablePtr vt_;
  std::map<ExpVec, Scalar> terms_;
};

/// Elementwise helpers shared by exp/log/inv/sqrt: f = x^base * c * (1 + r).
struct LeadingFactor {
  ExpVec base;
  Scalar c;
  Series r;
};
LeadingFactor factor_leading(const Series& f);

}  // namespace okp
