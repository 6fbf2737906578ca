#include "affgebra/sna.hpp"

#include <random>

#include "affgebra/lie.hpp"

namespace affgebra::sna {

namespace {

Scalar one_of(const SnaSpec& spec) { return Scalar::one(spec.field); }

Matrix solve_unique_member(const SnaSpec& spec) {
  // Constraint system A x = rhs with x the row-major entries.
  const Matrix a = constraint_matrix(spec);
  std::vector<Scalar> rhs(a.rows(), one_of(spec));
  rhs[0] = Scalar::zero(spec.field);  // trace row
  const LinearSolution sol = solve_linear(a, rhs);
  if (!sol.unique()) {
    throw Error("SNA(" + std::to_string(spec.n) + ") constraint system is not uniquely solvable");
  }
  const std::size_t size = spec.size();
  Matrix m(size, size, spec.field);
  for (std::size_t i = 0; i < size; ++i)
    for (std::size_t j = 0; j < size; ++j) m.at(i, j) = sol.particular[i * size + j];
  return m;
}

}  // namespace

std::optional<std::string> membership_violation(const Matrix& m, const SnaSpec& spec) {
  const std::size_t size = spec.size();
  if (m.rows() != size || m.cols() != size) {
    return "shape is " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
           " (expected " + std::to_string(size) + "x" + std::to_string(size) + ")";
  }
  const Scalar zero = Scalar::zero(m.field());
  const Scalar one = Scalar::one(m.field());
  if (m.trace() != zero) {
    return "trace = " + format_scalar(m.trace()) + " (expected 0)";
  }
  const auto rows = m.row_sums();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i] != one) {
      return "row " + std::to_string(i + 1) + " sum = " + format_scalar(rows[i]) +
             " (expected 1)";
    }
  }
  const auto cols = m.col_sums();
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j] != one) {
      return "column " + std::to_string(j + 1) + " sum = " + format_scalar(cols[j]) +
             " (expected 1)";
    }
  }
  return std::nullopt;
}

bool is_member(const Matrix& m, const SnaSpec& spec) {
  return !membership_violation(m, spec).has_value();
}

affine::AffineSpace carrier(const SnaSpec& spec) {
  affine::AffineSpace sp;
  sp.field = spec.field;
  sp.name = "SNA(" + std::to_string(spec.n) + ", " + std::string(field_name(spec.field)) + ")";
  sp.contains = [spec](const Matrix& m) {
    return m.field() == spec.field && is_member(m, spec);
  };
  return sp;
}

std::vector<std::pair<std::size_t, std::size_t>> pattern_positions(const SnaSpec& spec) {
  std::vector<std::pair<std::size_t, std::size_t>> positions;
  positions.reserve(spec.free_parameter_count());
  const std::size_t n = spec.n;
  for (std::size_t i = 0; i + 1 < n; ++i)
    for (std::size_t j = 0; j < n; ++j) positions.emplace_back(i, j);
  if (n >= 2) {
    for (std::size_t j = 1; j < n; ++j) positions.emplace_back(n - 1, j);
  }
  return positions;
}

Matrix complete(std::span<const Scalar> pattern, const SnaSpec& spec) {
  if (pattern.size() != spec.free_parameter_count()) {
    throw DomainError("pattern has " + std::to_string(pattern.size()) + " entries, SNA(" +
                      std::to_string(spec.n) + ") needs " +
                      std::to_string(spec.free_parameter_count()));
  }
  const std::size_t n = spec.n;
  if (n == 1) return solve_unique_member(spec);

  const Scalar one = one_of(spec);
  Matrix m(n + 1, n + 1, spec.field);
  const auto positions = pattern_positions(spec);
  for (std::size_t k = 0; k < positions.size(); ++k) {
    m.at(positions[k].first, positions[k].second) = pattern[k].to_field(spec.field);
  }

  // Each dependent entry is pinned by one constraint in which it is the only
  // remaining unknown.
  for (std::size_t i = 0; i + 1 < n; ++i) {  // last column of rows 0..n-2, from row sums
    Scalar sum = Scalar::zero(spec.field);
    for (std::size_t j = 0; j < n; ++j) sum += m.at(i, j);
    m.at(i, n) = one - sum;
  }
  for (std::size_t j = 1; j < n; ++j) {  // last row, columns 1..n-1, from column sums
    Scalar sum = Scalar::zero(spec.field);
    for (std::size_t i = 0; i < n; ++i) sum += m.at(i, j);
    m.at(n, j) = one - sum;
  }
  {  // corner, from the trace
    Scalar sum = Scalar::zero(spec.field);
    for (std::size_t i = 0; i < n; ++i) sum += m.at(i, i);
    m.at(n, n) = -sum;
  }
  {  // entry (n-1, n), from the last column sum
    Scalar sum = Scalar::zero(spec.field);
    for (std::size_t i = 0; i < n + 1; ++i)
      if (i != n - 1) sum += m.at(i, n);
    m.at(n - 1, n) = one - sum;
  }
  for (std::size_t i : {n - 1, n}) {  // first column entries of the last two rows, from row sums
    Scalar sum = Scalar::zero(spec.field);
    for (std::size_t j = 1; j <= n; ++j) sum += m.at(i, j);
    m.at(i, 0) = one - sum;
  }

  // The first column sum is the one constraint not used above; it must come
  // out to 1 on its own, and full membership must hold.
  if (auto violation = membership_violation(m, spec)) {
    throw Error("completion produced a non-member (" + *violation + "); this is a bug");
  }
  return m;
}

std::vector<Scalar> extract_pattern(const Matrix& m, const SnaSpec& spec) {
  if (m.rows() != spec.size() || m.cols() != spec.size()) {
    throw DomainError("matrix shape does not match SNA(" + std::to_string(spec.n) + ")");
  }
  std::vector<Scalar> pattern;
  for (const auto& [i, j] : pattern_positions(spec)) pattern.push_back(m.at(i, j));
  return pattern;
}

std::size_t dimension(const SnaSpec& spec) { return spec.free_parameter_count(); }

Matrix constraint_matrix(const SnaSpec& spec) {
  const std::size_t size = spec.size();
  Matrix a(2 * spec.n + 3, size * size, spec.field);
  const Scalar one = one_of(spec);
  for (std::size_t i = 0; i < size; ++i) {
    a.at(0, i * size + i) = one;  // trace
    for (std::size_t j = 0; j < size; ++j) {
      a.at(1 + i, i * size + j) = one;           // row i sum
      a.at(1 + size + j, i * size + j) = one;    // column j sum
    }
  }
  return a;
}

std::size_t dimension_from_constraints(const SnaSpec& spec) {
  const std::size_t unknowns = spec.size() * spec.size();
  return unknowns - rank(constraint_matrix(spec));
}

Matrix generator(std::string_view name, Field field) {
  if (name == "A00_0") {
    return Matrix::of_ints({{0, 0, 1}, {1, 0, 0}, {0, 1, 0}}, field);
  }
  if (name == "A01_0") {
    return Matrix::of_ints({{0, 1, 0}, {0, 0, 1}, {1, 0, 0}}, field);
  }
  if (name == "A00_1") {
    return Matrix::of_ints({{0, 0, 1}, {-1, 1, 1}, {2, 0, -1}}, field);
  }
  if (name == "A10_0") {
    return Matrix::of_ints({{1, 0, 0}, {-1, 0, 2}, {1, 1, -1}}, field);
  }
  throw DomainError("unknown generator '" + std::string(name) + "'");
}

std::array<Matrix, 4> generators(Field field) {
  return {generator(generator_names[0], field), generator(generator_names[1], field),
          generator(generator_names[2], field), generator(generator_names[3], field)};
}

Scalar BarycentricCombo::sum() const {
  Scalar s = coefficients[0];
  for (std::size_t k = 1; k < coefficients.size(); ++k) s += coefficients[k];
  return s;
}

std::string BarycentricCombo::to_string() const {
  std::string out;
  for (std::size_t k = 0; k < coefficients.size(); ++k) {
    if (k > 0) out += ',';
    out += format_scalar(coefficients[k]);
  }
  return out;
}

std::string BarycentricCombo::to_combination() const {
  std::string out;
  const Scalar one = Scalar::one(coefficients[0].field());
  for (std::size_t k = 0; k < coefficients.size(); ++k) {
    const Scalar& c = coefficients[k];
    if (c.is_zero()) continue;
    const std::string name(generator_names[k]);
    if (!c.is_rational_valued()) {
      out += out.empty() ? "" : " + ";
      out += "(" + format_scalar(c) + ")*" + name;
      continue;
    }
    const bool negative = c.unit_part() < 0;
    const Scalar magnitude = negative ? -c : c;
    if (out.empty()) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    out += magnitude == one ? name : format_scalar(magnitude) + "*" + name;
  }
  return out.empty() ? "0*" + std::string(generator_names[0]) : out;
}

BarycentricCombo barycentric_coords(const Matrix& m) {
  const SnaSpec spec{2, m.field()};
  if (auto violation = membership_violation(m, spec)) {
    throw DomainError("barycentric coordinates need a member of SNA(2): " + *violation);
  }
  const auto gens = generators(m.field());

  // Nine entry equations plus the coefficient-sum constraint.
  Matrix system(10, 4, m.field());
  std::vector<Scalar> rhs;
  rhs.reserve(10);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      for (std::size_t k = 0; k < 4; ++k) system.at(i * 3 + j, k) = gens[k].at(i, j);
      rhs.push_back(m.at(i, j));
    }
  }
  for (std::size_t k = 0; k < 4; ++k) system.at(9, k) = Scalar::one(m.field());
  rhs.push_back(Scalar::one(m.field()));

  const LinearSolution sol = solve_linear(system, rhs);
  if (!sol.unique()) {
    throw Error("barycentric system is not uniquely solvable; this is a bug");
  }
  BarycentricCombo combo{{sol.particular[0], sol.particular[1], sol.particular[2],
                          sol.particular[3]}};
  if (combo.sum() != Scalar::one(m.field())) {
    throw Error("barycentric coefficients do not sum to 1; this is a bug");
  }
  return combo;
}

std::vector<BracketTableEntry> bracket_table(const SnaSpec& spec) {
  if (spec.n != 2) {
    throw DomainError("the bracket table is defined for n = 2");
  }
  const auto gens = generators(spec.field);
  std::vector<BracketTableEntry> table;
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = i + 1; j < 4; ++j) {
      Matrix value = lie::sna_bracket(gens[i], gens[j]);
      BarycentricCombo combo = barycentric_coords(value);
      table.push_back({i, j, std::move(value), std::move(combo)});
    }
  }
  return table;
}

bool sl0_membership(const Matrix& m, std::size_t n) {
  const std::size_t size = n + 1;
  if (m.rows() != size || m.cols() != size) return false;
  const Scalar zero = Scalar::zero(m.field());
  if (m.trace() != zero) return false;
  for (const Scalar& s : m.row_sums())
    if (s != zero) return false;
  for (const Scalar& s : m.col_sums())
    if (s != zero) return false;
  return true;
}

Matrix reduction_iso(const Matrix& o, const Matrix& a) { return a - o; }

Matrix reduction_iso_inverse(const Matrix& o, const Matrix& v) { return v + o; }

ChevalleyTriple chevalley_triple() {
  const Field field = Field::eisenstein;
  const auto gens = generators(field);
  const Matrix& a00_0 = gens[0];
  const Matrix& o = gens[1];  // A01_0
  const Matrix& a00_1 = gens[2];
  const Matrix& a10_0 = gens[3];

  const Scalar third(make_rational(1, 3), field);
  const Scalar omega = Scalar::omega();
  const Scalar omega_sq = omega * omega;
  const Scalar two = Scalar::of_int(2, field);
  // -(sqrt(3)/3) i on the {1, w} basis, using sqrt(3)*i = 2w + 1
  const Scalar h_coefficient = -(third * (two * omega + Scalar::one(field)));

  using affine::retract_add;
  using affine::vspace_scale;
  ChevalleyTriple t{
      vspace_scale(o, third, retract_add(o, a10_0, vspace_scale(o, omega, a00_1))),
      vspace_scale(o, third, retract_add(o, a10_0, vspace_scale(o, omega_sq, a00_1))),
      vspace_scale(o, h_coefficient, a00_0),
      o,
  };

  const lie::AffineBracket bracket = lie::make_sna_bracket();
  const auto relation_holds = [&](const Matrix& x, const Matrix& y, const Matrix& expected) {
    return lie::reduce_bracket(bracket, o, x, y) == expected;
  };
  if (!relation_holds(t.h, t.e, vspace_scale(o, two, t.e)) ||
      !relation_holds(t.h, t.f, vspace_scale(o, -two, t.f)) ||
      !relation_holds(t.e, t.f, t.h)) {
    throw Error("Chevalley relations failed to verify; this is a bug");
  }
  return t;
}

Matrix random_element(const SnaSpec& spec, std::uint64_t seed, std::uint64_t bound) {
  if (bound < 1) throw DomainError("random_element needs bound >= 1");
  std::mt19937_64 rng(seed);
  // Raw engine output with modulo keeps the stream identical across
  // platforms, unlike std::uniform_int_distribution.
  const auto draw_rational = [&rng, bound] {
    const Int num = Int(rng() % (2 * bound + 1)) - Int(bound);
    const Int den = Int(rng() % bound) + 1;
    return make_rational(num, den);
  };
  std::vector<Scalar> pattern;
  pattern.reserve(spec.free_parameter_count());
  for (std::size_t k = 0; k < spec.free_parameter_count(); ++k) {
    if (spec.field == Field::rationals) {
      pattern.emplace_back(draw_rational());
    } else {
      Rational unit = draw_rational();
      pattern.emplace_back(std::move(unit), draw_rational());
    }
  }
  return complete(pattern, spec);
}

}  // namespace affgebra::sna
