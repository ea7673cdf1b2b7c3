#include "openkp/series_matrix.hpp"

namespace okp {

SeriesMatrix::SeriesMatrix(size_t n, VarTablePtr vt) : n_(n), vt_(std::move(vt)) {
  if (n_ == 0) throw structural_error("matrix dimension must be >= 1");
  e_.assign(n_ * n_, Series(vt_));
}

SeriesMatrix SeriesMatrix::identity(size_t n, VarTablePtr vt) {
  SeriesMatrix m(n, vt);
  for (size_t i = 0; i < n; ++i)
    m.at(i, i) = Series::constant(vt, Scalar(1));
  return m;
}

SeriesMatrix SeriesMatrix::diagonal(const std::vector<Series>& d) {
  if (d.empty()) throw structural_error("empty diagonal");
  SeriesMatrix m(d.size(), d[0].table());
  for (size_t i = 0; i < d.size(); ++i) m.at(i, i) = d[i];
  return m;
}

SeriesMatrix SeriesMatrix::operator+(const SeriesMatrix& o) const {
  if (n_ != o.n_) throw structural_error("dimension mismatch");
  SeriesMatrix r = *this;
  for (size_t k = 0; k < e_.size(); ++k) r.e_[k] += o.e_[k];
  return r;
}

SeriesMatrix SeriesMatrix::operator-(const SeriesMatrix& o) const {
  if (n_ != o.n_) throw structural_error("dimension mismatch");
  SeriesMatrix r = *this;
  for (size_t k = 0; k < e_.size(); ++k) r.e_[k] -= o.e_[k];
  return r;
}

SeriesMatrix SeriesMatrix::operator*(const SeriesMatrix& o) const {
  if (n_ != o.n_) throw structural_error("dimension mismatch");
  SeriesMatrix r(n_, vt_);
  for (size_t i = 0; i < n_; ++i)
    for (size_t j = 0; j < n_; ++j) {
      Series acc(vt_);
      for (size_t k = 0; k < n_; ++k) acc += at(i, k) * o.at(k, j);
      r.at(i, j) = std::move(acc);
    }
  return r;
}

SeriesMatrix SeriesMatrix::scaled(const Scalar& c) const {
  SeriesMatrix r = *this;
  for (auto& s : r.e_) s *= c;
  return r;
}

SeriesMatrix SeriesMatrix::pow(unsigned k) const {
  SeriesMatrix acc = identity(n_, vt_);
  for (unsigned i = 0; i < k; ++i) acc = acc * *this;
  return acc;
}

Series SeriesMatrix::trace() const {
  Series t(vt_);
  for (size_t i = 0; i < n_; ++i) t += at(i, i);
  return t;
}

bool operator==(const SeriesMatrix& a, const SeriesMatrix& b) {
  if (a.n_ != b.n_) return false;
  for (size_t k = 0; k < a.e_.size(); ++k)
    if (!(a.e_[k] == b.e_[k])) return false;
  return true;
}

SeriesMatrix kron(const SeriesMatrix& a, const SeriesMatrix& b) {
  const size_t m = a.dim(), n = b.dim();
  SeriesMatrix r(m * n, a.table());
  for (size_t i = 0; i < m; ++i)
    for (size_t j = 0; j < m; ++j)
      for (size_t p = 0; p < n; ++p)
        for (size_t q = 0; q < n; ++q)
          r.at(i * n + p, j * n + q) = a.at(i, j) * b.at(p, q);
  return r;
}

Series det_cofactor(const SeriesMatrix& a) {
  const size_t n = a.dim();
  if (n == 1) return a.at(0, 0);
  Series det(a.table());
  for (size_t k = 0; k < n; ++k) {
    if (a.at(0, k).is_zero()) continue;
    SeriesMatrix minor(n - 1, a.table());
    for (size_t i = 1; i < n; ++i) {
      size_t jj = 0;
      for (size_t j = 0; j < n; ++j) {
        if (j == k) continue;
        minor.at(i - 1, jj++) = a.at(i, j);
      }
    }
    Series term = a.at(0, k) * det_cofactor(minor);
    if (k % 2 == 1) term = -term;
    det += term;
  }
  return det;
}

Series det_trlog(const SeriesMatrix& a) {
  const size_t n = a.dim();
  auto vt = a.table();
  Scalar det_d(1);
  std::vector<Scalar> d(n);
  for (size_t i = 0; i < n; ++i) {
    d[i] = a.at(i, i).constant_term();
    if (d[i].is_zero())
      throw domain_error("det_trlog: non-invertible leading diagonal");
    det_d *= d[i];
  }
  SeriesMatrix r(n, vt);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      Series s = a.at(i, j) * d[i].inv();
      if (i == j) s -= Series::constant(vt, Scalar(1));
      if (!s.is_zero() && s.min_total_degree() < 1)
        throw domain_error("det_trlog: correction part not strictly positive degree");
      r.at(i, j) = std::move(s);
    }
  // tr log(1+R) = sum_k (-1)^{k+1} tr(R^k)/k, terminating under the caps
  Series acc(vt);
  SeriesMatrix p = r;
  int budget = 1;
  for (const auto& v : vt->vars()) budget += v.cap - v.min_exp;
  for (int k = 1; k <= budget; ++k) {
    Series t = p.trace();
    bool pzero = true;
    for (size_t i = 0; i < n && pzero; ++i)
      for (size_t j = 0; j < n && pzero; ++j)
        if (!p.at(i, j).is_zero()) pzero = false;
    if (pzero) break;
    Scalar c = Scalar(1) / Scalar(static_cast<long>(k));
    acc += t * (k % 2 == 0 ? -c : c);
    p = p * r;
  }
  return acc.exp() * det_d;
}

SeriesMatrix sqrt_one_minus(const SeriesMatrix& a) {
  const size_t n = a.dim();
  auto vt = a.table();
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      if (!a.at(i, j).is_zero() && a.at(i, j).min_total_degree() < 1)
        throw domain_error("sqrt_one_minus needs strictly positive-degree entries");
  SeriesMatrix acc = SeriesMatrix::identity(n, vt);
  SeriesMatrix p = SeriesMatrix::identity(n, vt);
  Scalar half = Scalar::frac(1, 2);
  int budget = 1;
  for (const auto& v : vt->vars()) budget += v.cap - v.min_exp;
  for (int k = 1; k <= budget; ++k) {
    p = p * a;
    bool pzero = true;
    for (size_t e = 0; e < n * n && pzero; ++e)
      if (!p.at(e / n, e % n).is_zero()) pzero = false;
    if (pzero) break;
    // binom(1/2, k) * (-1)^k
    Scalar c = Scalar::binomial(half, static_cast<unsigned>(k));
    if (k % 2 == 1) c = -c;
    acc = acc + p.scaled(c);
  }
  return acc;
}

}  // namespace okp
