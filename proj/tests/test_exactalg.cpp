#include <doctest.h>

#include "qmirror/error.hpp"
#include "support.hpp"

using namespace qmirror;
using namespace qmirror::testing;

namespace {

IntMatrix random_unimodular(std::mt19937& rng, int k) {
  IntMatrix m = IntMatrix::Identity(k, k);
  std::uniform_int_distribution<int> idx(0, k - 1), coef(-2, 2);
  for (int step = 0; step < 6; ++step) {
    const int i = idx(rng), j = idx(rng);
    if (i == j) continue;
    m.row(i) += Integer(coef(rng)) * m.row(j);
  }
  if (coef(rng) < 0) m.row(0) = -m.row(0);
  return m;
}

bool all_invariant_factors_one(const IntMatrix& basis) {
  const SmithForm s = smith_normal_form(basis);
  for (Index i = 0; i < s.rank; ++i)
    if (s.diagonal(i, i) != 1) return false;
  return s.rank == basis.cols();
}

}  // namespace

TEST_CASE("integer kernel of (1 1) is spanned by (1,-1)") {
  const IntMatrix k = integer_kernel(make_int_matrix({{1, 1}}));
  REQUIRE(k.cols() == 1);
  CHECK(k(0, 0) == 1);
  CHECK(k(1, 0) == -1);
}

TEST_CASE("integer kernel of the identity is empty") {
  const IntMatrix k = integer_kernel(IntMatrix::Identity(3, 3));
  CHECK(k.rows() == 3);
  CHECK(k.cols() == 0);
}

TEST_CASE("kernel of the Bl(P2) beta spans the columns of iota") {
  const IntMatrix beta = make_int_matrix({{1, 0, -1, -1}, {0, 1, 0, -1}});
  const IntMatrix iota = make_int_matrix({{1, 1}, {0, 1}, {1, 0}, {0, 1}});
  const IntMatrix k = integer_kernel(beta);
  REQUIRE(k.cols() == 2);
  CHECK((beta * k).isZero());
  CHECK(rank(k) == 2);
  // same saturated lattice: each basis expresses the other integrally
  IntMatrix both(4, 4);
  both << k, iota;
  CHECK(rank(both) == 2);
  CHECK(all_invariant_factors_one(k));
  CHECK(all_invariant_factors_one(iota));
}

TEST_CASE("cokernel maps") {
  SUBCASE("P^N gives a basis row-equivalent to e_i - e_{N+1}") {
    for (int n = 2; n <= 5; ++n) {
      const IntMatrix iota = IntMatrix::Ones(n, 1);
      const IntMatrix beta = cokernel_map(iota);
      CHECK(beta.rows() == n - 1);
      CHECK((beta * iota).isZero());
      IntMatrix paper(n - 1, n);
      paper.setZero();
      for (int i = 0; i < n - 1; ++i) {
        paper(i, i) = 1;
        paper(i, n - 1) = -1;
      }
      // row-equivalence over GL(N, Z): identical Hermite normal forms
      CHECK(hermite_normal_form(beta) == hermite_normal_form(paper));
    }
  }
  SUBCASE("Bl(P2) gives the printed beta") {
    const IntMatrix beta = cokernel_map(make_int_matrix({{1, 1}, {0, 1}, {1, 0}, {0, 1}}));
    CHECK(beta == make_int_matrix({{1, 0, -1, -1}, {0, 1, 0, -1}}));
  }
  SUBCASE("1 x 1 identity has an empty cokernel map") {
    const IntMatrix beta = cokernel_map(make_int_matrix({{1}}));
    CHECK(beta.rows() == 0);
    CHECK(beta.cols() == 1);
  }
  SUBCASE("rank deficiency is reported") {
    try {
      cokernel_map(make_int_matrix({{1, 2}, {2, 4}, {3, 6}}));
      FAIL("expected RankDeficient");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::RankDeficient);
    }
  }
}

TEST_CASE("maximal minors and total unimodularity") {
  const IntMatrix iota = make_int_matrix({{1, 1}, {0, 1}, {1, 0}, {0, 1}});
  const std::vector<Integer> expected{1, -1, 1, -1, 0, 1};
  CHECK(maximal_minors(iota) == expected);
  CHECK(is_totally_unimodular(iota));
  CHECK(is_totally_unimodular(IntMatrix::Ones(5, 1)));
  CHECK(maximal_minors(make_int_matrix({{2}, {1}})) == std::vector<Integer>{2, 1});
  CHECK_FALSE(is_totally_unimodular(make_int_matrix({{2}, {1}})));
}

TEST_CASE("unimodular inverses") {
  CHECK(invert_unimodular(make_int_matrix({{0, 1}, {1, 0}})) == make_int_matrix({{0, 1}, {1, 0}}));
  CHECK(invert_unimodular(make_int_matrix({{1, 1}, {0, 1}})) == make_int_matrix({{1, -1}, {0, 1}}));
  CHECK_THROWS_AS(invert_unimodular(make_int_matrix({{2, 0}, {0, 1}})), Error);
  try {
    invert_unimodular(make_int_matrix({{2, 0}, {0, 1}}));
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotUnimodular);
  }
  std::mt19937 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    const int k = 1 + trial % 4;
    const IntMatrix p = random_unimodular(rng, k);
    const IntMatrix inv = invert_unimodular(p);
    CHECK(p * inv == IntMatrix::Identity(k, k));
    CHECK(inv * p == IntMatrix::Identity(k, k));
  }
}

TEST_CASE("determinant agrees with cofactor expansion on random matrices") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> e(-4, 4);
  auto cofactor = [](auto&& self, const IntMatrix& m) -> Integer {
    if (m.rows() == 1) return m(0, 0);
    Integer s = 0;
    for (Index j = 0; j < m.cols(); ++j) {
      std::vector<int> rows, cols;
      for (int r = 1; r < m.rows(); ++r) rows.push_back(r);
      for (int c = 0; c < m.cols(); ++c)
        if (c != j) cols.push_back(c);
      const Integer sign = j % 2 == 0 ? 1 : -1;
      s += sign * m(0, j) * self(self, select_cols(select_rows(m, rows), cols));
    }
    return s;
  };
  for (int trial = 0; trial < 60; ++trial) {
    const int k = 1 + trial % 4;
    IntMatrix m(k, k);
    for (Index i = 0; i < k; ++i)
      for (Index j = 0; j < k; ++j) m(i, j) = e(rng);
    CHECK(determinant(m) == cofactor(cofactor, m));
  }
}

TEST_CASE("cokernel and kernel properties on random full-rank matrices") {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> e(-3, 3);
  for (int trial = 0; trial < 60; ++trial) {
    const int k = 1 + trial % 3, n = k + 1 + trial % 3;
    IntMatrix m(n, k);
    do {
      for (Index i = 0; i < n; ++i)
        for (Index j = 0; j < k; ++j) m(i, j) = e(rng);
    } while (rank(m) < k);
    const IntMatrix beta = cokernel_map(m);
    CHECK((beta * m).isZero());
    CHECK(rank(beta) == n - k);
    CHECK(beta == hermite_normal_form(beta));
    const IntMatrix ker = integer_kernel(IntMatrix(m.transpose()));
    CHECK(all_invariant_factors_one(ker));
    const SmithForm s = smith_normal_form(m);
    CHECK(s.left * m * s.right == s.diagonal);
    CHECK(abs(determinant(s.left)) == 1);
    CHECK(abs(determinant(s.right)) == 1);
    for (Index i = 0; i + 1 < s.rank; ++i) CHECK(s.diagonal(i + 1, i + 1) % s.diagonal(i, i) == 0);
  }
}

TEST_CASE("total unimodularity passes to the cokernel map on the corpus") {
  for (const IntMatrix& iota : {make_int_matrix({{1}, {1}}), make_int_matrix({{1}, {1}, {1}}),
                                make_int_matrix({{1, 1}, {0, 1}, {1, 0}, {0, 1}}),
                                make_int_matrix({{1, 0}, {0, 1}, {-1, 0}, {-1, -1}}),
                                make_int_matrix({{1, 0}, {1, 1}, {0, 1}, {1, 0}, {0, 1}})}) {
    const IntMatrix beta = cokernel_map(iota);
    CHECK(is_totally_unimodular(iota) == is_totally_unimodular(IntMatrix(beta.transpose())));
  }
}

TEST_CASE("combinations are lexicographic") {
  const auto c = combinations(4, 2);
  const std::vector<std::vector<int>> expected{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
  CHECK(c == expected);
  CHECK(combinations(3, 0).size() == 1);
  CHECK(combinations(2, 3).empty());
}
