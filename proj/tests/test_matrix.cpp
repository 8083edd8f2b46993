#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "homsol/matrix.hpp"
#include "homsol/subspace.hpp"

using namespace homsol;

namespace {

// Deterministic small-rational matrix generator for property tests.
QMat random_matrix(std::mt19937& rng, int rows, int cols) {
  std::uniform_int_distribution<int> num(-6, 6);
  std::uniform_int_distribution<int> den(1, 4);
  QMat m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = Rat(num(rng), den(rng));
  return m;
}

}  // namespace

TEST_CASE("rational parsing and printing") {
  CHECK(parse_rational("3/4") == Rat(3, 4));
  CHECK(parse_rational("-7") == Rat(-7));
  CHECK(rat_to_string(Rat(-10, 4)) == "-5/2");
  CHECK(rat_to_string(Rat(5)) == "5");
  CHECK_THROWS(parse_rational("1/0"));
}

TEST_CASE("tolerance only affects zero tests") {
  Tolerance exact{};
  CHECK(exact.is_zero(Rat(0)));
  CHECK(!exact.is_zero(Rat(1, 1000000000)));
  Tolerance loose{Rat(1, 1000)};
  CHECK(loose.is_zero(Rat(1, 2000)));
  CHECK(!loose.is_zero(Rat(1, 2)));
}

TEST_CASE("rref and rank on a fixed matrix") {
  // Hand-reduced example: rank 2, pivots in columns 0 and 1.
  QMat m{{Rat(1), Rat(2), Rat(3)}, {Rat(2), Rat(4), Rat(7)}, {Rat(1), Rat(3), Rat(5)}};
  CHECK(rank(m) == 3);
  QMat s{{Rat(1), Rat(2), Rat(3)}, {Rat(2), Rat(4), Rat(6)}, {Rat(1), Rat(3), Rat(5)}};
  CHECK(rank(s) == 2);
  QMat r = s;
  auto pivots = rref(r);
  CHECK(pivots == std::vector<int>{0, 1});
  QMat expect{{Rat(1), Rat(0), Rat(-1)}, {Rat(0), Rat(1), Rat(2)}, {Rat(0), Rat(0), Rat(0)}};
  CHECK(r == expect);
}

TEST_CASE("determinant and inverse on fixed matrices") {
  QMat m{{Rat(2), Rat(1)}, {Rat(5), Rat(3)}};
  CHECK(determinant(m) == Rat(1));
  auto inv = inverse(m);
  REQUIRE(inv.has_value());
  QMat expect{{Rat(3), Rat(-1)}, {Rat(-5), Rat(2)}};
  CHECK(*inv == expect);
  QMat sing{{Rat(1), Rat(2)}, {Rat(2), Rat(4)}};
  CHECK(determinant(sing) == Rat(0));
  CHECK(!inverse(sing).has_value());
}

TEST_CASE("solve_linear: feasible and infeasible systems") {
  QMat a{{Rat(1), Rat(1)}, {Rat(1), Rat(1)}};
  auto good = solve_linear(a, QVec{Rat(2), Rat(2)});
  REQUIRE(good.feasible);
  CHECK(good.particular[0] + good.particular[1] == Rat(2));
  CHECK(good.nullspace.size() == 1);
  auto bad = solve_linear(a, QVec{Rat(2), Rat(3)});
  CHECK(!bad.feasible);
}

TEST_CASE("kernel vectors annihilate and rank-nullity holds") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 25; ++trial) {
    int rows = 1 + trial % 5, cols = 1 + (trial * 3) % 6;
    QMat m = random_matrix(rng, rows, cols);
    auto ker = kernel_basis(m);
    CHECK(static_cast<int>(ker.size()) + rank(m) == cols);
    for (const auto& v : ker) CHECK(max_abs(m * v) == Rat(0));
  }
}

TEST_CASE("inverse round-trips on random invertible matrices") {
  std::mt19937 rng(11);
  int found = 0;
  while (found < 15) {
    QMat m = random_matrix(rng, 4, 4);
    auto inv = inverse(m);
    if (!inv) continue;
    ++found;
    CHECK((m * *inv) == QMat::identity(4));
    CHECK((*inv * m) == QMat::identity(4));
    CHECK(determinant(m) * determinant(*inv) == Rat(1));
  }
}

TEST_CASE("definiteness via leading minors") {
  QMat pd{{Rat(2), Rat(1)}, {Rat(1), Rat(2)}};
  CHECK(is_positive_definite(pd));
  CHECK(is_negative_definite(-pd));
  QMat indef{{Rat(1), Rat(0)}, {Rat(0), Rat(-1)}};
  CHECK(!is_positive_definite(indef));
  CHECK(!is_negative_definite(indef));
  QMat psd{{Rat(1), Rat(1)}, {Rat(1), Rat(1)}};
  CHECK(!is_positive_definite(psd));
}

TEST_CASE("subspace canonical form gives representation-free equality") {
  QVec v1{Rat(1), Rat(1), Rat(0)};
  QVec v2{Rat(0), Rat(1), Rat(1)};
  auto s1 = Subspace::span(3, {v1, v2});
  auto s2 = Subspace::span(3, {v1 + v2, Rat(3) * v2, v1});
  CHECK(s1 == s2);
  CHECK(s1.dim() == 2);
  CHECK(s1.contains(Rat(2) * v1 - v2));
  CHECK(!s1.contains(QVec{Rat(1), Rat(0), Rat(0)}));
  auto coords = s1.coordinates(v1 + Rat(5) * v2);
  QVec rebuilt(3, Rat(0));
  for (int j = 0; j < s1.dim(); ++j) rebuilt = rebuilt + coords[j] * s1.basis_vector(j);
  CHECK(rebuilt == v1 + Rat(5) * v2);
}

TEST_CASE("subspace sum and intersection") {
  auto x = Subspace::span(3, {QVec{Rat(1), Rat(0), Rat(0)}});
  auto y = Subspace::span(3, {QVec{Rat(0), Rat(1), Rat(0)}});
  auto xy = x.sum(y);
  CHECK(xy.dim() == 2);
  CHECK(xy.intersect(y) == y);
  CHECK(x.intersect(y).dim() == 0);
}
