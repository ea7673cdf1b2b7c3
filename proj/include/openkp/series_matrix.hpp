#pragma once

#include <vector>

#include "openkp/series.hpp"

namespace okp {

/// Square matrix with Series entries sharing one variable table.
class SeriesMatrix {
 public:
  SeriesMatrix(size_t n, VarTablePtr vt);
  static SeriesMatrix identity(size_t n, VarTablePtr vt);
  static SeriesMatrix diagonal(const std::vector<Series>& d);

  size_t dim() const { return n_; }
  const VarTablePtr& table() const { return vt_; }
  Series& at(size_t i, size_t j) { return e_[i * n_ + j]; }
  const Series& at(size_t i, size_t j) const { return e_[i * n_ + j]; }

  SeriesMatrix operator+(const SeriesMatrix& o) const;
  SeriesMatrix operator-(const SeriesMatrix& o) const;
  SeriesMatrix operator*(const SeriesMatrix& o) const;
  SeriesMatrix scaled(const Scalar& c) const;
  SeriesMatrix pow(unsigned k) const;
  Series trace() const;

  friend bool operator==(const SeriesMatrix& a, const SeriesMatrix& b);

 private:
  size_t n_;
  VarTablePtr vt_;
  std::vector<Series> e_;
};

/// Kronecker product: (A ⊗ B)_{(i,a),(j,b)} = A_{ij} B_{ab}.
SeriesMatrix kron(const SeriesMatrix& a, const SeriesMatrix& b);

/// Exact determinant by cofactor expansion (any n; intended for n ≤ 5).
Series det_cofactor(const SeriesMatrix& a);

/// det A for A = D(1 + R), D the diagonal of scalar leading terms and R of
/// strictly positive degree: returns (Π D_i) · exp(tr log(1 + R)).
Series det_trlog(const SeriesMatrix& a);

/// Matrix square root of 1 - A via the binomial series, truncated by caps;
/// A must have strictly positive-degree entries.
SeriesMatrix sqrt_one_minus(const SeriesMatrix& a);

}  // namespace okp
