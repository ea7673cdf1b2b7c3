#include "openkp/series.hpp"

#include <sstream>

namespace okp {

VarTablePtr VarTable::make(std::vector<Var> vars, bool complex_ok) {
  auto vt = std::make_shared<VarTable>();
  for (const auto& v : vars) {
    if (v.cap < 0) throw structural_error("negative cap for " + v.name);
    if (v.min_exp > 0) throw structural_error("positive min_exp for " + v.name);
    for (const auto& w : vt->vars_)
      if (w.name == v.name)
        throw structural_error("duplicate variable " + v.name);
    vt->vars_.push_back(v);
  }
  vt->complex_ok_ = complex_ok;
  return vt;
}

size_t VarTable::index(const std::string& name) const {
  for (size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i].name == name) return i;
  throw structural_error("unknown variable " + name);
}

bool VarTable::same_shape(const VarTable& o) const {
  if (vars_.size() != o.vars_.size() || complex_ok_ != o.complex_ok_)
    return false;
  for (size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i].name != o.vars_[i].name || vars_[i].cap != o.vars_[i].cap ||
        vars_[i].min_exp != o.vars_[i].min_exp)
      return false;
  return true;
}

void Series::check_compatible(const Series& o) const {
  if (vt_ == o.vt_) return;
  if (!vt_ || !o.vt_ || !vt_->same_shape(*o.vt_))
    throw structural_error("incompatible variable tables");
}

Series Series::constant(VarTablePtr vt, const Scalar& c) {
  Series s(std::move(vt));
  s.add_term(ExpVec(s.vt_->arity(), 0), c);
  return s;
}

Series Series::variable(VarTablePtr vt, const std::string& name) {
  size_t i = vt->index(name);
  Series s(std::move(vt));
  ExpVec e(s.vt_->arity(), 0);
  e[i] = 1;
  s.add_term(e, Scalar(1));
  return s;
}

Series Series::monomial(VarTablePtr vt, const ExpVec& e, const Scalar& c) {
  Series s(std::move(vt));
  s.add_term(e, c);
  return s;
}

Scalar Series::coefficient(const ExpVec& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Scalar(0) : it->second;
}

Scalar Series::constant_term() const {
  return coefficient(ExpVec(vt_->arity(), 0));
}

int Series::min_total_degree() const {
  int best = 0;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    int d = 0;
    for (auto x : e) d += x;
    if (first || d < best) best = d;
    first = false;
  }
  return best;
}

bool Series::is_real() const {
  for (const auto& [e, c] : terms_)
    if (!c.is_real()) return false;
  return true;
}

void Series::add_term(const ExpVec& e, const Scalar& c) {
  if (c.is_zero()) return;
  if (e.size() != vt_->arity()) throw structural_error("exponent arity");
  if (!c.is_real() && !vt_->complex_ok())
    throw structural_error("complex coefficient in real-only computation");
  for (size_t i = 0; i < e.size(); ++i) {
    if (e[i] > vt_->var(i).cap) return;  // truncated away
    if (e[i] < vt_->var(i).min_exp)
      throw domain_error("exponent of " + vt_->var(i).name +
                         " below its certified minimum");
  }
  auto [it, fresh] = terms_.emplace(e, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Series Series::operator-() const {
  Series r(vt_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

Series& Series::operator+=(const Series& o) {
  check_compatible(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Series& Series::operator-=(const Series& o) {
  check_compatible(o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Series& Series::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  if (!c.is_real() && !vt_->complex_ok())
    throw structural_error("complex coefficient in real-only computation");
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

Series operator*(const Series& a, const Series& b) {
  a.check_compatible(b);
  Series r(a.vt_);
  const size_t n = a.vt_->arity();
  ExpVec e(n);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      bool ok = true;
      for (size_t i = 0; i < n; ++i) {
        e[i] = static_cast<int16_t>(ea[i] + eb[i]);
        if (e[i] > a.vt_->var(i).cap) {
          ok = false;
          break;
        }
      }
      if (ok) r.add_term(e, ca * cb);
    }
  return r;
}

bool operator==(const Series& a, const Series& b) {
  a.check_compatible(b);
  return a.terms_ == b.terms_;
}

Series Series::shifted(const ExpVec& shift, const Scalar& c) const {
  Series r(vt_);
  const size_t n = vt_->arity();
  ExpVec e(n);
  for (const auto& [ea, ca] : terms_) {
    bool ok = true;
    for (size_t i = 0; i < n; ++i) {
      e[i] = static_cast<int16_t>(ea[i] + shift[i]);
      if (e[i] > vt_->var(i).cap) {
        ok = false;
        break;
      }
    }
    if (ok) r.add_term(e, ca * c);
  }
  return r;
}

LeadingFactor factor_leading(const Series& f) {
  if (f.is_zero()) throw domain_error("zero series has no leading factor");
  const size_t n = f.table()->arity();
  ExpVec base(n, 0);
  bool first = true;
  for (const auto& [e, c] : f.terms()) {
    for (size_t i = 0; i < n; ++i)
      base[i] = first ? e[i] : std::min(base[i], e[i]);
    first = false;
  }
  Scalar c0 = f.coefficient(base);
  if (c0.is_zero())
    throw domain_error(
        "series has no invertible leading term (componentwise minimum "
        "exponent is not attained by a single term)");
  ExpVec neg(n);
  for (size_t i = 0; i < n; ++i) neg[i] = static_cast<int16_t>(-base[i]);
  Series g = f.shifted(neg, c0.inv());
  LeadingFactor lf;
  lf.base = base;
  lf.c = c0;
  g.add_term(ExpVec(n, 0), Scalar(-1));
  if (!g.is_zero() && g.min_total_degree() < 1)
    throw domain_error(
        "correction term has non-positive total degree; truncated elementary "
        "functions would not terminate");
  lf.r = std::move(g);
  return lf;
}

namespace {

// sum_{k>=0} coeff(k) * r^k, where r has strictly positive total degree so
// the loop exhausts the cap box.
Series power_sum(const Series& r,
                 const std::function<Scalar(unsigned)>& coeff) {
  Series acc = Series::constant(r.table(), coeff(0));
  Series p = Series::constant(r.table(), Scalar(1));
  int budget = 1;
  for (const auto& v : r.table()->vars()) budget += v.cap - v.min_exp;
  for (int k = 1; k <= budget; ++k) {
    p = p * r;
    if (p.is_zero()) return acc;
    acc += p * coeff(static_cast<unsigned>(k));
  }
  if (!(p * r).is_zero())
    throw domain_error("elementary series did not terminate within caps");
  return acc;
}

}  // namespace

Series Series::exp() const {
  if (is_zero()) return constant(vt_, Scalar(1));
  if (!constant_term().is_zero())
    throw domain_error("exp requires zero constant term");
  if (min_total_degree() < 1)
    throw domain_error("exp argument must have positive total degree");
  Scalar fact(1);
  return power_sum(*this, [&](unsigned k) {
    if (k > 0) fact *= Scalar(static_cast<long>(k));
    return fact.inv();
  });
}

Series Series::log() const {
  auto lf = factor_leading(*this);
  bool base_zero =
      std::all_of(lf.base.begin(), lf.base.end(), [](auto x) { return x == 0; });
  if (!base_zero || !lf.c.is_one())
    throw domain_error("log requires unit constant term");
  return power_sum(lf.r, [](unsigned k) {
    if (k == 0) return Scalar(0);
    Scalar c = Scalar(1) / Scalar(static_cast<long>(k));
    return (k % 2 == 0) ? -c : c;
  });
}

Series Series::inv() const {
  auto lf = factor_leading(*this);
  Series s = power_sum(lf.r, [](unsigned k) {
    return (k % 2 == 0) ? Scalar(1) : Scalar(-1);
  });
  ExpVec neg(lf.base.size());
  for (size_t i = 0; i < neg.size(); ++i)
    neg[i] = static_cast<int16_t>(-lf.base[i]);
  return s.shifted(neg, lf.c.inv());
}

Series Series::sqrt() const {
  auto lf = factor_leading(*this);
  auto root = lf.c.sqrt_exact();
  if (!root)
    throw domain_error("sqrt requires an exact rational square leading term");
  ExpVec half(lf.base.size());
  for (size_t i = 0; i < half.size(); ++i) {
    if (lf.base[i] % 2 != 0)
      throw domain_error("sqrt requires even leading exponents");
    half[i] = static_cast<int16_t>(lf.base[i] / 2);
  }
  Scalar alpha = Scalar::frac(1, 2);
  Series s = power_sum(lf.r, [&](unsigned k) { return Scalar::binomial(alpha, k); });
  return s.shifted(half, *root);
}

Series Series::pow_binomial(const Scalar& alpha) const {
  auto lf = factor_leading(*this);
  bool base_zero =
      std::all_of(lf.base.begin(), lf.base.end(), [](auto x) { return x == 0; });
  if (!base_zero || !lf.c.is_one())
    throw domain_error("pow_binomial requires unit constant term");
  return power_sum(lf.r, [&](unsigned k) { return Scalar::binomial(alpha, k); });
}

Series Series::pow(long n) const {
  if (n == 0) return constant(vt_, Scalar(1));
  Series base = n > 0 ? *this : inv();
  unsigned long e = static_cast<unsigned long>(n > 0 ? n : -n);
  Series acc = constant(vt_, Scalar(1));
  while (e) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

Series Series::derivative(size_t var) const {
  Series r(vt_);
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    ExpVec d = e;
    d[var] = static_cast<int16_t>(d[var] - 1);
    if (d[var] < vt_->var(var).min_exp)
      throw domain_error("derivative crosses the minimum exponent of " +
                         vt_->var(var).name);
    r.add_term(d, c * Scalar(e[var]));
  }
  return r;
}

Series Series::lambda_derivation(size_t var) const {
  Series r(vt_);
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    ExpVec d = e;
    d[var] = static_cast<int16_t>(d[var] + 2);
    if (d[var] > vt_->var(var).cap) continue;
    r.add_term(d, c * Scalar(-e[var]));
  }
  return r;
}

Series Series::subst_zero(size_t var) const {
  Series r(vt_);
  for (const auto& [e, c] : terms_)
    if (e[var] == 0) r.add_term(e, c);
  return r;
}

Series Series::subst_scalar(size_t var, const Scalar& value) const {
  Series r(vt_);
  for (const auto& [e, c] : terms_) {
    ExpVec d = e;
    d[var] = 0;
    if (e[var] != 0 && value.is_zero()) {
      if (e[var] < 0) throw domain_error("zero substituted into a pole");
      continue;
    }
    r.add_term(d, c * value.pow(e[var]));
  }
  return r;
}

Series Series::filtered(const std::function<bool(const ExpVec&)>& keep) const {
  Series r(vt_);
  for (const auto& [e, c] : terms_)
    if (keep(e)) r.add_term(e, c);
  return r;
}

Series Series::coefficient_of(size_t var, int k) const {
  Series r(vt_);
  for (const auto& [e, c] : terms_)
    if (e[var] == k) {
      ExpVec d = e;
      d[var] = 0;
      r.add_term(d, c);
    }
  return r;
}

int Series::max_degree(size_t var) const {
  int best = 0;
  for (const auto& [e, c] : terms_) best = std::max(best, int(e[var]));
  return best;
}

std::string Series::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.to_string() << ")";
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      os << "*" << vt_->var(i).name;
      if (e[i] != 1) os << "^" << e[i];
    }
  }
  return os.str();
}

std::string Series::to_json() const {
  std::ostringstream os;
  os << "[";
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << ",";
    first = false;
    os << "{\"exponents\":[";
    for (size_t i = 0; i < e.size(); ++i) os << (i ? "," : "") << e[i];
    os << "],\"coefficient\":\"" << c.to_string() << "\"}";
  }
  os << "]";
  return os.str();
}

}  // namespace okp
