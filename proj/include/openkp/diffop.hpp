#pragma once

#include <string>
#include <vector>

#include "openkp/series.hpp"

namespace okp {

enum class DerivKind {
  Plain,   // d/dv
  Lambda,  // -v^3 d/dv, the eigenvalue derivation on v = λ^{-1}
};

struct Deriv {
  DerivKind kind;
  size_t var;
};

/// Formal differential operator: finite sum of Series-coefficient times a
/// word of basic derivations.  Exponentials are evaluated as terminating
/// sums; a termination certificate (some variable whose degree strictly
/// drops under every term) is required and checked.
class DiffOp {
 public:
  explicit DiffOp(VarTablePtr vt) : vt_(std::move(vt)) {}

  DiffOp& add_term(Series coeff, std::vector<Deriv> word);
  DiffOp& add_term(const Scalar& coeff, std::vector<Deriv> word);

  const VarTablePtr& table() const { return vt_; }
  bool empty() const { return terms_.empty(); }

  /// Single application: Σ_t coeff_t · word_t(f).
  Series apply(const Series& f) const;

  /// exp(op)·f as a terminating sum.  Throws domain_error naming the
  /// unbounded directions when no certificate variable exists.
  Series apply_exp(const Series& f) const;

  /// Variables whose degree strictly decreases under every term.
  std::vector<size_t> certificate_vars() const;

  std::string to_json() const;

 private:
  struct Term {
    Series coeff;
    std::vector<Deriv> word;
  };
  VarTablePtr vt_;
  std::vector<Term> terms_;
};

/// Moment form of the normalized complex Gaussian integral
/// (2π)^{-1}∫ F(z,z̄) e^{sz̄/2} e^{-zz̄/2}[dz] realized on series:
/// s_-^m s^n ↦ 2^m n!/(n-m)! s^{n-m} for m ≤ n and 0 otherwise.
/// Negative powers of s map to 0 when allow_laurent_s is set and are
/// rejected otherwise.
Series complex_integral_op(const Series& f, size_t s_var, size_t sminus_var,
                           bool allow_laurent_s = false);

enum class WeierstrassDir { Forward, Inverse };

/// exp(±t ∂_s²)·f, the heat-kernel convolution on polynomials in s.
Series weierstrass(const Series& f, size_t s_var, size_t t_var,
                   WeierstrassDir dir);

/// Checks ∂_{s_-}·Σ_i (λ_i²-s_-)^{k/2} = -(1/2) Σ_i λ_i^{-1}∂_{λ_i} ·
/// Σ_i (λ_i²-s_-)^{k/2} as series in s_- with symbolic x_i = λ_i^{-1}.
bool lambda_derivation_check(int k, int M, int sminus_cap);

}  // namespace okp
