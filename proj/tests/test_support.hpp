#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "affgebra/matrix.hpp"
#include "affgebra/sna.hpp"

namespace affgebra::test {

// Deterministic generator for property tests. Raw engine output with modulo
// keeps the streams identical across platforms.
struct Rng {
  std::mt19937_64 engine;

  explicit Rng(std::uint64_t seed) : engine(seed) {}

  std::uint64_t index(std::uint64_t n) { return engine() % n; }

  Rational rational(std::uint64_t bound) {
    const Int num = Int(engine() % (2 * bound + 1)) - Int(bound);
    const Int den = Int(engine() % bound) + 1;
    return make_rational(num, den);
  }

  Scalar scalar(Field field, std::uint64_t bound) {
    if (field == Field::rationals) return Scalar(rational(bound));
    Rational unit = rational(bound);
    return Scalar(std::move(unit), rational(bound));
  }

  Scalar nonzero_scalar(Field field, std::uint64_t bound) {
    for (;;) {
      Scalar s = scalar(field, bound);
      if (!s.is_zero()) return s;
    }
  }

  Matrix matrix(std::size_t rows, std::size_t cols, Field field, std::uint64_t bound) {
    Matrix m(rows, cols, field);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = scalar(field, bound);
    return m;
  }
};

inline std::vector<Matrix> random_sna_pool(const sna::SnaSpec& spec, std::size_t count,
                                           std::uint64_t seed0, std::uint64_t bound) {
  std::vector<Matrix> pool;
  pool.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    pool.push_back(sna::random_element(spec, seed0 + k, bound));
  }
  return pool;
}

}  // namespace affgebra::test
