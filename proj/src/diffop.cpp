#include "openkp/diffop.hpp"

#include <sstream>

namespace okp {

DiffOp& DiffOp::add_term(Series coeff, std::vector<Deriv> word) {
  if (coeff.table() != vt_ && !coeff.table()->same_shape(*vt_))
    throw structural_error("operator coefficient on a different table");
  if (!coeff.is_zero()) terms_.push_back({std::move(coeff), std::move(word)});
  return *this;
}

DiffOp& DiffOp::add_term(const Scalar& coeff, std::vector<Deriv> word) {
  return add_term(Series::constant(vt_, coeff), std::move(word));
}

Series DiffOp::apply(const Series& f) const {
  Series out(vt_);
  for (const auto& t : terms_) {
    Series g = f;
    for (auto it = t.word.rbegin(); it != t.word.rend(); ++it) {
      g = it->kind == DerivKind::Plain ? g.derivative(it->var)
                                       : g.lambda_derivation(it->var);
      if (g.is_zero()) break;
    }
    if (!g.is_zero()) out += t.coeff * g;
  }
  return out;
}

std::vector<size_t> DiffOp::certificate_vars() const {
  std::vector<size_t> good;
  for (size_t v = 0; v < vt_->arity(); ++v) {
    bool ok = !terms_.empty();
    for (const auto& t : terms_) {
      int shift = t.coeff.max_degree(v);
      for (const auto& d : t.word) {
        if (d.var != v) continue;
        shift += d.kind == DerivKind::Plain ? -1 : 2;
      }
      if (shift >= 0) {
        ok = false;
        break;
      }
    }
    if (ok) good.push_back(v);
  }
  return good;
}

Series DiffOp::apply_exp(const Series& f) const {
  if (terms_.empty()) return f;
  auto cert = certificate_vars();
  if (cert.empty()) {
    std::ostringstream os;
    os << "no termination certificate for operator exponential; unbounded in";
    for (const auto& v : vt_->vars()) os << " " << v.name;
    throw domain_error(os.str());
  }
  const size_t v = cert.front();
  int span = f.max_degree(v) - vt_->var(v).min_exp;
  Series acc = f;
  Series g = f;
  Scalar fact(1);
  for (int k = 1; k <= span + 1; ++k) {
    g = apply(g);
    if (g.is_zero()) return acc;
    fact *= Scalar(k);
    acc += g * fact.inv();
  }
  if (!apply(g).is_zero())
    throw domain_error("operator exponential failed to terminate");
  return acc;
}

std::string DiffOp::to_json() const {
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < terms_.size(); ++i) {
    if (i) os << ",";
    os << "{\"coefficient\":" << terms_[i].coeff.to_json() << ",\"word\":[";
    for (size_t j = 0; j < terms_[i].word.size(); ++j) {
      const auto& d = terms_[i].word[j];
      os << (j ? "," : "") << "{\"kind\":\""
         << (d.kind == DerivKind::Plain ? "d" : "lambda") << "\",\"var\":\""
         << vt_->var(d.var).name << "\"}";
    }
    os << "]}";
  }
  os << "]";
  return os.str();
}

Series complex_integral_op(const Series& f, size_t s_var, size_t sminus_var,
                           bool allow_laurent_s) {
  auto vt = f.table();
  Series out(vt);
  for (const auto& [e, c] : f.terms()) {
    int m = e[sminus_var];
    int n = e[s_var];
    if (m < 0) throw domain_error("negative power of the conjugate variable");
    if (n < 0) {
      if (!allow_laurent_s)
        throw domain_error(
            "negative powers of s require the Laurent extension flag");
      continue;  // angular integral of z̄^m z^{-n'} vanishes
    }
    if (m > n) continue;
    // 2^m n!/(n-m)!
    Scalar w = Scalar::pow2(m);
    for (int j = n - m + 1; j <= n; ++j) w *= Scalar(j);
    ExpVec d = e;
    d[sminus_var] = 0;
    d[s_var] = static_cast<int16_t>(n - m);
    out.add_term(d, c * w);
  }
  return out;
}

Series weierstrass(const Series& f, size_t s_var, size_t t_var,
                   WeierstrassDir dir) {
  auto vt = f.table();
  Series t = Series::variable(vt, vt->var(t_var).name);
  if (dir == WeierstrassDir::Inverse) t = -t;
  DiffOp op(vt);
  op.add_term(t, {{DerivKind::Plain, s_var}, {DerivKind::Plain, s_var}});
  return op.apply_exp(f);
}

bool lambda_derivation_check(int k, int M, int sminus_cap) {
  const int a = std::abs(k);
  std::vector<Var> vars;
  for (int i = 0; i < M; ++i)
    vars.push_back({"x" + std::to_string(i + 1), a + 2 * sminus_cap + 2, -a});
  vars.push_back({"sm", sminus_cap, 0});
  auto vt = VarTable::make(vars);
  const size_t sm = vt->index("sm");

  // f = Σ_i x_i^{-k} (1 - sm x_i²)^{k/2}
  Series f(vt);
  for (int i = 0; i < M; ++i) {
    Series u = Series::constant(vt, Scalar(1));
    ExpVec e(vt->arity(), 0);
    e[i] = 2;
    e[sm] = 1;
    u -= Series::monomial(vt, e, Scalar(1));
    Series g = u.pow_binomial(Scalar::frac(k, 2));
    ExpVec shift(vt->arity(), 0);
    shift[i] = static_cast<int16_t>(-k);
    f += g.shifted(shift, Scalar(1));
  }

  Series lhs = f.derivative(sm);
  Series rhs(vt);
  for (int i = 0; i < M; ++i) rhs += f.lambda_derivation(i);
  rhs *= Scalar::frac(-1, 2);

  auto complete = [&](const ExpVec& e) { return e[sm] <= sminus_cap - 1; };
  return lhs.filtered(complete) == rhs.filtered(complete);
}

}  // namespace okp
