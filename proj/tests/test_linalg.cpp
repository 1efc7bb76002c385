#include <catch_amalgamated.hpp>

#include <random>

#include "groupoidkit/linalg.hpp"
#include "groupoidkit/scalar.hpp"

using namespace gk;

namespace {

GaussianRational q(long num, long den = 1) { return {mpq_class(num, den), 0}; }

Matrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols) {
  Matrix m(rows, Vector(cols));
  for (auto& row : m)
    for (auto& x : row)
      if (rng() % 2) x = GaussianRational(mpq_class(static_cast<long>(rng() % 5) - 2),
                                          mpq_class(static_cast<long>(rng() % 3) - 1));
  return m;
}

}  // namespace

TEST_CASE("Gaussian rational arithmetic", "[scalar]") {
  const GaussianRational i = GaussianRational::i();
  CHECK(i * i == GaussianRational(-1));
  const GaussianRational z(mpq_class(3, 4), mpq_class(-1, 2));
  CHECK(z * z.inverse() == GaussianRational(1));
  CHECK((z * z.conj()).im() == 0);
  CHECK((z * z.conj()).re() == mpq_class(13, 16));
  CHECK(z / z == GaussianRational(1));
  CHECK_THROWS_AS(GaussianRational().inverse(), std::domain_error);
  CHECK(GaussianRational(mpq_class(2, 4), 0).re() == mpq_class(1, 2));
}

TEST_CASE("roots of unity stay reduced", "[scalar]") {
  CHECK(RootOfUnity(2, 4) == RootOfUnity(1, 2));
  CHECK(RootOfUnity(-1, 3) == RootOfUnity(2, 3));
  CHECK(RootOfUnity(1, 3) * RootOfUnity(2, 3) == RootOfUnity(0, 1));
  CHECK(RootOfUnity(1, 4).conj() == RootOfUnity(3, 4));
  CHECK(std::abs(RootOfUnity(1, 2).to_complex() - std::complex<double>(-1, 0)) < 1e-12);
  const CyclotomicEntry zero;
  CHECK_FALSE((zero * CyclotomicEntry(RootOfUnity(1, 2))).has_value());
}

TEST_CASE("rref and rank", "[linalg]") {
  const Matrix m = {{q(1), q(2), q(3)}, {q(2), q(4), q(6)}, {q(1), q(0), q(1)}};
  std::vector<std::size_t> pivots;
  const Matrix r = rref(m, &pivots);
  CHECK(rank(m) == 2);
  CHECK(pivots == std::vector<std::size_t>{0, 1});
  CHECK(r[0] == Vector{q(1), q(0), q(1)});
  CHECK(r[1] == Vector{q(0), q(1), q(1)});
  CHECK(rank({}) == 0);
}

TEST_CASE("nullspace vectors are annihilated", "[linalg][property]") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t rows = rng() % 5, cols = 1 + rng() % 6;
    const Matrix m = random_matrix(rng, rows, cols);
    const Matrix ker = nullspace(m, cols);
    CHECK(ker.size() + rank(m) == cols);
    CHECK(rank(ker) == ker.size());
    for (const auto& v : ker) CHECK(is_zero(mat_vec(m, v)));
  }
}

TEST_CASE("echelon basis membership", "[linalg]") {
  EchelonBasis b(3);
  CHECK(b.insert({q(1), q(1), q(0)}));
  CHECK(b.insert({q(0), q(1), q(1)}));
  CHECK_FALSE(b.insert({q(1), q(2), q(1)}));
  CHECK(b.rank() == 2);
  CHECK(b.contains({q(2), q(0), q(-2)}));
  CHECK_FALSE(b.contains({q(0), q(0), q(1)}));
  CHECK(is_zero(b.reduce({q(3), q(1), q(-2)})));
}

TEST_CASE("span comparisons", "[linalg]") {
  const Matrix a = {{q(1), q(0), q(0)}, {q(0), q(1), q(0)}};
  const Matrix b = {{q(0), q(1), q(0)}, {q(0), q(0), q(1)}};
  CHECK(intersection_dim(a, b, 3) == 1);
  CHECK(same_span(a, {{q(1), q(1), q(0)}, {q(1), q(-1), q(0)}}, 3));
  CHECK_FALSE(same_span(a, b, 3));
  CHECK(intersection_dim({}, b, 3) == 0);
}

TEST_CASE("matrix products", "[linalg]") {
  const Matrix a = {{q(1), q(2)}, {q(0), q(1)}};
  const Matrix b = {{q(1), q(-2)}, {q(0), q(1)}};
  CHECK(mat_mul(a, b) == Matrix{{q(1), q(0)}, {q(0), q(1)}});
  CHECK(mat_vec(a, {q(1), q(1)}) == Vector{q(3), q(1)});
}
