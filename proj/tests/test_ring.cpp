#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "openkp/series.hpp"
#include "openkp/series_matrix.hpp"

using namespace okp;

namespace {

VarTablePtr xy(int cap) {
  return VarTable::make({{"x", cap, 0}, {"y", cap, 0}});
}

Series var(const VarTablePtr& vt, const std::string& n) {
  return Series::variable(vt, n);
}

Series c1(const VarTablePtr& vt) { return Series::constant(vt, Scalar(1)); }

// deterministic small random series with positive-degree terms only
Series random_positive(const VarTablePtr& vt, std::mt19937_64& rng) {
  Series s(vt);
  std::uniform_int_distribution<int> coef(-6, 6), den(1, 4);
  const size_t n = vt->arity();
  for (int t = 0; t < 6; ++t) {
    ExpVec e(n, 0);
    int total = 0;
    for (size_t i = 0; i < n; ++i) {
      e[i] = static_cast<int16_t>(rng() % 3);
      total += e[i];
    }
    if (total == 0) e[rng() % n] = 1;
    s.add_term(e, Scalar::frac(coef(rng), den(rng)));
  }
  return s;
}

}  // namespace

TEST_CASE("scalar arithmetic and strings") {
  Scalar a = Scalar::frac(1, 2);
  Scalar b = Scalar::frac(1, 3);
  CHECK((a + b) == Scalar::frac(5, 6));
  CHECK((a * b) == Scalar::frac(1, 6));
  CHECK((a / b) == Scalar::frac(3, 2));
  CHECK(Scalar(7).to_string() == "7");
  CHECK(Scalar::frac(-5, 24).to_string() == "-5/24");
  Scalar z = Scalar::frac(1, 2) + Scalar::i() * Scalar::frac(-3, 4);
  CHECK(z.to_string() == "1/2-3/4*i");
  CHECK(Scalar::from_string("1/2-3/4*i") == z);
  CHECK(Scalar::from_string("-5/24") == Scalar::frac(-5, 24));
  CHECK((Scalar::i() * Scalar::i()) == Scalar(-1));
  CHECK(Scalar::frac(9, 4).sqrt_exact().value() == Scalar::frac(3, 2));
  CHECK(!Scalar::frac(2, 1).sqrt_exact().has_value());
  CHECK(Scalar::binomial(Scalar::frac(1, 2), 2) == Scalar::frac(-1, 8));
}

TEST_CASE("series arithmetic with truncation") {
  auto vt = xy(2);
  Series x = var(vt, "x");
  // (1+x)(1-x) cap 2 = 1 - x^2
  CHECK((c1(vt) + x) * (c1(vt) - x) == c1(vt) - x * x);
  // (1+x)^2 at cap 1 drops x^2
  auto vt1 = VarTable::make({{"x", 1, 0}});
  Series x1 = var(vt1, "x");
  Series sq = (Series::constant(vt1, Scalar(1)) + x1) *
              (Series::constant(vt1, Scalar(1)) + x1);
  CHECK(sq == Series::constant(vt1, Scalar(1)) + x1 * Scalar(2));
  // exact rational addition of coefficients
  Series s = x * Scalar::frac(1, 2) + x * Scalar::frac(1, 3);
  CHECK(s == x * Scalar::frac(5, 6));
}

TEST_CASE("incompatible tables rejected") {
  auto a = xy(2);
  auto b = VarTable::make({{"x", 2, 0}, {"z", 2, 0}});
  CHECK_THROWS_AS(var(a, "x") + var(b, "z"), structural_error);
}

TEST_CASE("elementary functions") {
  auto vt = VarTable::make({{"x", 4, 0}});
  Series x = var(vt, "x");
  Series one = c1(vt);

  CHECK((one + x).log().exp() == one + x);
  // inv(1-x) cap 3
  auto vt3 = VarTable::make({{"x", 3, 0}});
  Series x3 = var(vt3, "x");
  Series geo = (Series::constant(vt3, Scalar(1)) - x3).inv();
  Series expect = Series::constant(vt3, Scalar(1)) + x3 + x3 * x3 + x3 * x3 * x3;
  CHECK(geo == expect);

  // sqrt(4 - sm) to order 2: binomial-series oracle (1-u)^{1/2} at u = sm/4
  auto vs = VarTable::make({{"sm", 2, 0}});
  Series sm = var(vs, "sm");
  Series f = Series::constant(vs, Scalar(4)) - sm;
  Series r = f.sqrt();
  Series want = Series::constant(vs, Scalar(2)) - sm * Scalar::frac(1, 4) -
                sm * sm * Scalar::frac(1, 64);
  CHECK(r == want);
  CHECK(r * r == f);

  CHECK_THROWS_AS((Series::constant(vs, Scalar(2)) - sm).sqrt(), domain_error);
  CHECK_THROWS_AS((Series::constant(vs, Scalar(1)) + sm).exp(), domain_error);
}

TEST_CASE("sqrt and exp-log roundtrips on random series") {
  std::mt19937_64 rng(20240);
  for (int trial = 0; trial < 25; ++trial) {
    auto vt = xy(4);
    Series r = random_positive(vt, rng);
    Series f = c1(vt) + r;
    CHECK(f.sqrt() * f.sqrt() == f);
    CHECK(f.log().exp() == f);
    CHECK(f.inv() * f == c1(vt));
  }
}

TEST_CASE("truncation coherence: computing at larger caps then restricting") {
  std::mt19937_64 rng(77);
  auto small = xy(3);
  auto big = xy(6);
  for (int trial = 0; trial < 10; ++trial) {
    Series a_small(small), b_small(small), a_big(big), b_big(big);
    for (int t = 0; t < 5; ++t) {
      ExpVec e = {static_cast<int16_t>(rng() % 4), static_cast<int16_t>(rng() % 4)};
      Scalar c = Scalar::frac(int(rng() % 13) - 6, 1 + int(rng() % 3));
      if (e[0] + e[1] == 0) continue;
      if (e[0] <= 3 && e[1] <= 3) {
        a_small.add_term(e, c);
      }
      a_big.add_term(e, c);
      ExpVec e2 = {e[1], e[0]};
      if (e2[0] <= 3 && e2[1] <= 3) b_small.add_term(e2, c);
      b_big.add_term(e2, c);
    }
    Series prod_small = a_small * b_small;
    Series prod_big = a_big * b_big;
    auto inside = [](const ExpVec& e) { return e[0] <= 3 && e[1] <= 3; };
    Series restricted(big);
    for (const auto& [e, c] : prod_big.terms())
      if (inside(e)) restricted.add_term(e, c);
    // compare term maps across tables
    REQUIRE(prod_small.terms().size() == restricted.terms().size());
    for (const auto& [e, c] : prod_small.terms())
      CHECK(restricted.coefficient(e) == c);
  }
}

TEST_CASE("laurent bounds enforced") {
  auto vt = VarTable::make({{"x", 3, -2}});
  Series x = var(vt, "x");
  ExpVec e = {-2};
  Series low = Series::monomial(vt, e, Scalar(1));
  CHECK_THROWS_AS(low * low, domain_error);          // x^-4 below bound
  CHECK_THROWS_AS(low.derivative(0), domain_error);  // crosses the bound
  CHECK(low.lambda_derivation(0) ==
        Series::monomial(vt, ExpVec{0}, Scalar(2)));  // -x^3 d/dx x^-2 = 2
}

TEST_CASE("kron basics") {
  auto vt = xy(2);
  auto id2 = SeriesMatrix::identity(2, vt);
  auto id3 = SeriesMatrix::identity(3, vt);
  CHECK(kron(id2, id3) == SeriesMatrix::identity(6, vt));

  SeriesMatrix a(2, vt), b(2, vt);
  a.at(0, 0) = c1(vt);
  a.at(1, 1) = c1(vt);
  b.at(0, 0) = Series::constant(vt, Scalar(2));
  b.at(1, 1) = c1(vt);
  CHECK(kron(a, b).trace() == a.trace() * b.trace());
}

TEST_CASE("det_trlog matches the cofactor determinant") {
  auto vt = VarTable::make({{"x", 2, 0}, {"a", 2, 0}, {"b", 2, 0}, {"c", 2, 0}});
  Series x = var(vt, "x"), a = var(vt, "a"), b = var(vt, "b"), cc = var(vt, "c");
  SeriesMatrix m(2, vt);
  m.at(0, 0) = c1(vt) + a * x;
  m.at(0, 1) = b * x;
  m.at(1, 0) = cc * x;
  m.at(1, 1) = c1(vt);
  Series want = c1(vt) + a * x - b * cc * x * x;
  CHECK(det_trlog(m) == want);
  CHECK(det_cofactor(m) == want);

  // diag(2,3) -> 6
  SeriesMatrix d(2, vt);
  d.at(0, 0) = Series::constant(vt, Scalar(2));
  d.at(1, 1) = Series::constant(vt, Scalar(3));
  CHECK(det_trlog(d) == Series::constant(vt, Scalar(6)));

  CHECK(det_trlog(SeriesMatrix::identity(3, vt)) == c1(vt));
}

TEST_CASE("det_trlog vs cofactor, randomized dimensions up to 4") {
  std::mt19937_64 rng(4242);
  for (int trial = 0; trial < 50; ++trial) {
    size_t n = 1 + rng() % 4;
    auto vt = xy(4);
    SeriesMatrix m(n, vt);
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) {
        Series entry = random_positive(vt, rng);
        if (i == j) entry += Series::constant(vt, Scalar(1 + int(rng() % 3)));
        m.at(i, j) = entry;
      }
    CHECK(det_trlog(m) == det_cofactor(m));
  }
}

TEST_CASE("series json serialization") {
  auto vt = xy(2);
  Series s = var(vt, "x") * Scalar::frac(5, 6);
  CHECK(s.to_json() ==
        "[{\"exponents\":[1,0],\"coefficient\":\"5/6\"}]");
}
