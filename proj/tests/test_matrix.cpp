#include "doctest.h"

#include <nlohmann/json.hpp>

#include "affgebra/matrix.hpp"
#include "affgebra/sna.hpp"
#include "test_support.hpp"

using namespace affgebra;

namespace {

Matrix substitute(const LinearSolution& sol, const Matrix& a) {
  Matrix out(a.rows(), 1, a.field());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Scalar acc = Scalar::zero(a.field());
    for (std::size_t j = 0; j < a.cols(); ++j) acc += a.at(i, j) * sol.particular[j];
    out.at(i, 0) = acc;
  }
  return out;
}

}  // namespace

TEST_SUITE("matrix") {

TEST_CASE("arithmetic basics") {
  const Field q = Field::rationals;
  const Matrix a00_0 = sna::generator("A00_0");
  const Matrix a01_0 = sna::generator("A01_0");

  CHECK(a00_0 * a01_0 == Matrix::identity(3, q));
  CHECK(Scalar::zero(q) * a00_0 == Matrix(3, 3, q));
  CHECK(a00_0 + Matrix(3, 3, q) == a00_0);
  CHECK(a00_0 - a00_0 == Matrix(3, 3, q));

  CHECK_THROWS_AS((void)(a00_0 + Matrix(2, 2, q)), DomainError);
  CHECK_THROWS_AS((void)(a00_0 * Matrix(4, 4, q)), DomainError);
  CHECK_THROWS_AS((void)(a00_0 + a00_0.to_field(Field::eisenstein)), DomainError);
}

TEST_CASE("trace and row/column sums") {
  CHECK(Matrix::identity(3, Field::rationals).trace() == Scalar::of_int(3, Field::rationals));
  const auto ones = std::vector<Scalar>(3, Scalar::one(Field::rationals));
  CHECK(sna::generator("A00_0").row_sums() == ones);
  CHECK(sna::generator("A10_0").col_sums() == ones);
  CHECK_THROWS_AS(Matrix(2, 3, Field::rationals).trace(), DomainError);
}

TEST_CASE("solve_linear: identity, inconsistent, substitution") {
  const Field q = Field::rationals;
  test::Rng rng(31);

  const Matrix eye = Matrix::identity(4, q);
  std::vector<Scalar> b;
  for (int i = 0; i < 4; ++i) b.push_back(rng.scalar(q, 9));
  const auto sol = solve_linear(eye, b);
  CHECK(sol.unique());
  CHECK(sol.particular == b);

  // 0 * x = 1 has no solution
  Matrix zero_row(1, 2, q);
  const auto bad = solve_linear(zero_row, std::vector<Scalar>{Scalar::one(q)});
  CHECK_FALSE(bad.consistent);

  // affine family: one equation, two unknowns
  Matrix wide(1, 2, q);
  wide.at(0, 0) = Scalar::one(q);
  wide.at(0, 1) = Scalar::one(q);
  const auto fam = solve_linear(wide, std::vector<Scalar>{Scalar::of_int(3, q)});
  CHECK(fam.consistent);
  CHECK(fam.nullspace.size() == 1);

  for (int k = 0; k < 120; ++k) {
    const std::size_t rows = 2 + rng.index(4);
    const std::size_t cols = 2 + rng.index(4);
    const Matrix a = rng.matrix(rows, cols, q, 5);
    std::vector<Scalar> rhs;
    for (std::size_t i = 0; i < rows; ++i) rhs.push_back(rng.scalar(q, 5));
    const auto s = solve_linear(a, rhs);
    if (!s.consistent) continue;
    const Matrix back = substitute(s, a);
    for (std::size_t i = 0; i < rows; ++i) CHECK(back.at(i, 0) == rhs[i]);
    // nullspace vectors solve the homogeneous system
    for (const auto& v : s.nullspace) {
      for (std::size_t i = 0; i < rows; ++i) {
        Scalar acc = Scalar::zero(q);
        for (std::size_t j = 0; j < cols; ++j) acc += a.at(i, j) * v[j];
        CHECK(acc.is_zero());
      }
    }
  }
}

TEST_CASE("barycentric system for a completed member has a sum-1 solution") {
  // coordinates of A^{11}_1 over the four generators: solve the 10x4 system
  // (9 entries plus the coefficient-sum row) and substitute back
  const Field q = Field::rationals;
  const Scalar one = Scalar::one(q);
  const std::vector<Scalar> pattern{one, one, one};
  const Matrix m = sna::complete(pattern, sna::SnaSpec{2, q});
  CHECK(sna::is_member(m, sna::SnaSpec{2, q}));

  const auto gens = sna::generators(q);
  Matrix system(10, 4, q);
  std::vector<Scalar> rhs;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      for (std::size_t k = 0; k < 4; ++k) system.at(i * 3 + j, k) = gens[k].at(i, j);
      rhs.push_back(m.at(i, j));
    }
  for (std::size_t k = 0; k < 4; ++k) system.at(9, k) = one;
  rhs.push_back(one);

  const auto sol = solve_linear(system, rhs);
  REQUIRE(sol.unique());
  Scalar sum = Scalar::zero(q);
  for (const auto& c : sol.particular) sum += c;
  CHECK(sum == one);
  // substitution: the combination reproduces every entry of m
  Matrix combo(3, 3, q);
  for (std::size_t k = 0; k < 4; ++k) combo = combo + sol.particular[k] * gens[k];
  CHECK(combo == m);
}

TEST_CASE("rank") {
  const Field q = Field::rationals;
  CHECK(rank(Matrix::identity(4, q)) == 4);
  CHECK(rank(Matrix(3, 3, q)) == 0);
  // SNA(2): 7 constraints (trace + 3 row sums + 3 column sums) on 9 unknowns
  // have rank 6, leaving the 3 free parameters
  const Matrix constraints = sna::constraint_matrix(sna::SnaSpec{2, q});
  CHECK(constraints.rows() == 7);
  CHECK(constraints.cols() == 9);
  CHECK(rank(constraints) == 6);
  CHECK(9 - rank(constraints) == sna::dimension(sna::SnaSpec{2, q}));
}

TEST_CASE("algebraic properties on random matrices") {
  test::Rng rng(37);
  for (const Field field : {Field::rationals, Field::eisenstein}) {
    for (int k = 0; k < 260; ++k) {
      const std::size_t n = k % 2 == 0 ? 3 : 4;
      const Matrix a = rng.matrix(n, n, field, 6);
      const Matrix b = rng.matrix(n, n, field, 6);
      const Matrix c = rng.matrix(n, n, field, 6);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK((a * b).trace() == (b * a).trace());
      CHECK(rank(a) == rank(a.transpose()));
    }
  }
}

TEST_CASE("text grammar round trip") {
  const Field q = Field::rationals;
  const Matrix a00_0 = sna::generator("A00_0");
  CHECK(format_matrix(a00_0) == "0,0,1;1,0,0;0,1,0");
  CHECK(parse_matrix("0,0,1;1,0,0;0,1,0", q) == a00_0);
  CHECK(parse_matrix("0, 0, 1; 1, 0, 0; 0, 1, 0", q) == a00_0);

  test::Rng rng(41);
  for (int k = 0; k < 200; ++k) {
    const Field field = k % 2 == 0 ? Field::rationals : Field::eisenstein;
    const Matrix m = rng.matrix(1 + rng.index(4), 1 + rng.index(4), field, 9);
    CHECK(parse_matrix(format_matrix(m), field) == m);
    CHECK(matrix_from_json(matrix_to_json(m), field) == m);
  }

  CHECK_THROWS_AS(parse_matrix("0,1;1", q), ParseError);
  CHECK_THROWS_AS(parse_matrix("", q), ParseError);
  CHECK_THROWS_AS(parse_matrix("0,x;1,0", q), ParseError);
  CHECK_THROWS_AS(matrix_from_json(nlohmann::json::array(), q), ParseError);
}

}  // TEST_SUITE
