#include <doctest.h>

#include "qmirror/error.hpp"
#include "support.hpp"

#include "qmirror/pochhammer.hpp"

using namespace qmirror;
using namespace qmirror::testing;

namespace {

const QRat q = QRat::q_power(1);
const QRat one = 1;

TruncationSpec a_spec(int n, int bound) {
  return TruncationSpec{std::vector<int>(n, 0), std::vector<int>(n, 1), 0, bound};
}

}  // namespace

TEST_CASE("finite Pochhammer examples") {
  const Monomial x = amono({1});
  CHECK(pochhammer_finite(1, x, 0, 1).is_constant());
  CHECK(pochhammer_finite(1, x, 0, 1).value() == one);
  CHECK(pochhammer_finite(q.pow(-1), Monomial(1), 2, -1).value() == (one - q.pow(-1)) * (one - q.pow(-2)));
  const LinearFactorProduct prod = pochhammer_finite(1, x, 1, 1) * pochhammer_finite(q.pow(-1), x, -1, -1);
  CHECK(prod.is_constant());
  CHECK(prod.value() == one);
}

TEST_CASE("finite Pochhammer factors") {
  const Monomial x = amono({1});
  LinearFactorProduct expected(x);
  expected.multiply_linear(q, 1);
  expected.multiply_linear(q * q, 1);
  CHECK(pochhammer_finite(q, x, 2, 1) == expected);
  LinearFactorProduct negative(x);
  negative.multiply_linear(1, -1);
  negative.multiply_linear(q.pow(-1), -1);
  // (q x; q)_{-2} = 1/((1 - x)(1 - q^-1 x))
  CHECK(pochhammer_finite(q, x, -2, 1) == negative);
}

TEST_CASE("negative-index identity for d in [-6, 6]") {
  std::mt19937 rng(41);
  std::uniform_int_distribution<int> e(-2, 2), qe(-3, 3);
  for (int trial = 0; trial < 20; ++trial) {
    Monomial x(2);
    do {
      for (int i = 0; i < 2; ++i) {
        x.z[i] = e(rng);
        x.a[i] = e(rng);
      }
    } while (x.is_one());
    const QRat scale = q.pow(qe(rng)) * QRat(trial % 3 + 1);
    for (int d = -6; d <= 6; ++d) {
      const LinearFactorProduct prod =
          pochhammer_finite(scale, x, d, 1) * pochhammer_finite(scale * q.pow(-1), x, -d, -1);
      REQUIRE(prod.is_constant());
      CHECK(prod.value() == one);
    }
  }
}

TEST_CASE("pure q-powers collapse, and vanishing reciprocals are poles") {
  CHECK(pochhammer_finite(q, Monomial(1), 3, 1).value() == q_factorial(3, 1));
  try {
    (void)pochhammer_finite(q, Monomial(1), -1, 1);
    FAIL("expected PoleAtTruncation");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::PoleAtTruncation);
  }
}

TEST_CASE("geometric expansions") {
  const TruncationSpec spec = a_spec(1, 2);
  const Monomial x = amono({1});
  TruncatedSeries expected = TruncatedSeries::one(spec);
  expected.add_term(x, q.pow(-1));
  expected.add_term(x.pow(2), q.pow(-2));
  CHECK(expand_inverse_linear(x, q.pow(-1), spec) == expected);
  const TruncatedSeries order1 = expand_inverse_linear(x, 1, a_spec(1, 1));
  CHECK(order1 == TruncatedSeries::one(a_spec(1, 1)) + TruncatedSeries::term(a_spec(1, 1), x));
  CHECK(expand_inverse_linear(x, 0, spec) == TruncatedSeries::one(spec));
  try {
    (void)expand_inverse_linear(zmono({1}), 1, spec);
    FAIL("expected NonPositiveGrading");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NonPositiveGrading);
  }
  CHECK_THROWS_AS((void)inv_infinite_pochhammer(amono({-1}), spec), Error);
}

TEST_CASE("q-binomial expansions to order 2") {
  const TruncationSpec spec = a_spec(1, 2);
  const Monomial x = amono({1});
  TruncatedSeries inv = TruncatedSeries::one(spec);
  inv.add_term(x, one / (one - q));
  inv.add_term(x.pow(2), one / ((one - q) * (one - q * q)));
  CHECK(inv_infinite_pochhammer(x, spec) == inv);
  TruncatedSeries direct = TruncatedSeries::one(spec);
  direct.add_term(x, q.pow(-1) / (one - q.pow(-1)));
  direct.add_term(x.pow(2), q.pow(-2) / ((one - q.pow(-1)) * (one - q.pow(-2))));
  CHECK(infinite_pochhammer(x, spec) == direct);
  // (x)_inf = (1 - x)(1 - q x)...: the linear coefficient is -1/(1-q)
  CHECK(direct.coefficient(x) == -one / (one - q));
}

TEST_CASE("1/(x)_inf times (x)_inf is 1 up to order 8") {
  for (int order = 0; order <= 8; ++order) {
    const TruncationSpec spec{{0, 0}, {1, 0}, 0, order};
    for (const Monomial& x : {amono({1, 0}), amono({1, -1}), amono({2, 1})}) {
      for (const QRat& scale : {one, q, QRat(3) * q.pow(-2)}) {
        const TruncatedSeries prod = inv_infinite_pochhammer(x, spec, scale) * infinite_pochhammer(x, spec, scale);
        CHECK(prod == TruncatedSeries::one(spec));
      }
    }
  }
}

TEST_CASE("tau(1/(x)_inf) = (q x)_inf up to order 8") {
  for (int order = 0; order <= 8; ++order) {
    const TruncationSpec spec{{1}, {0}, order, 0};
    const Contribution c{LogPrefactor(1), inv_infinite_pochhammer(zmono({1}), spec)};
    const Contribution t = apply_tau(c);
    CHECK(t.prefactor.is_zero());
    CHECK(t.series == infinite_pochhammer(amono({1}), spec.swapped(), q));
  }
}

TEST_CASE("1/(x)_inf agrees with the truncated product of geometric series") {
  // oracle: prod_{l<40} 1/(1 - q^l x) agrees up to O(q^40) in each coefficient
  const int order = 6;
  const TruncationSpec spec = a_spec(1, order);
  const Monomial x = amono({1});
  TruncatedSeries product = TruncatedSeries::one(spec);
  for (int l = 0; l < 40; ++l) product = product * expand_inverse_linear(x, q.pow(l), spec);
  const TruncatedSeries closed = inv_infinite_pochhammer(x, spec);
  for (int m = 0; m <= order; ++m) {
    // coefficient difference is O(q^40) as a power series in q
    const QRat diff = closed.coefficient(x.pow(m)) - product.coefficient(x.pow(m));
    if (diff.is_zero()) continue;
    CHECK(diff.num().valuation() - diff.den().valuation() >= 40);
  }
}

TEST_CASE("LinearFactorProduct expansion and rebasing") {
  const Monomial u = amono({1});
  LinearFactorProduct f(u.inverse());
  f.multiply_linear(1, -1);  // 1/(1 - u^-1)
  const LinearFactorProduct g = f.rebased(u);
  // 1/(1 - u^-1) = -u / (1 - u)
  LinearFactorProduct expected(u, -1);
  expected.multiply_power(1);
  expected.multiply_linear(1, -1);
  CHECK(g == expected);
  const LaurentSeries e = g.expand(4);
  CHECK(e.at(0) == QRat(0));
  for (int k = 1; k <= 4; ++k) CHECK(e.at(k) == QRat(-1));
  CHECK(to_series(g, a_spec(1, 3)).coefficient(u.pow(3)) == QRat(-1));
}
