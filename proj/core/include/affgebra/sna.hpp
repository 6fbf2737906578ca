#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "affgebra/affine.hpp"
#include "affgebra/matrix.hpp"

namespace affgebra::sna {

/// Parameters of the space SNA(n): traceless (n+1)x(n+1) matrices over the
/// chosen field whose every row sum and every column sum equals one. The sums
/// run over all n+1 entries of each row and column; with that reading SNA(1)
/// is the singleton {[[0,1],[1,0]]} and the displayed 3x3 members of SNA(2)
/// qualify.
struct SnaSpec {
  std::size_t n = 2;
  Field field = Field::rationals;

  std::size_t size() const { return n + 1; }
  std::size_t free_parameter_count() const { return n * n - 1; }
};

/// Trace zero, all row sums one, all column sums one, shape (n+1)x(n+1).
bool is_member(const Matrix& m, const SnaSpec& spec);
/// As is_member, but names the first violated constraint.
std::optional<std::string> membership_violation(const Matrix& m, const SnaSpec& spec);

/// SNA(n) as an affine space: the standard matrix heap/action with the
/// membership predicate (including the field tag).
affine::AffineSpace carrier(const SnaSpec& spec);

/// Positions of the n^2 - 1 freely choosable entries, row-major: rows
/// 0..n-2 in columns 0..n-1, then row n-1 in columns 1..n-1 (0-based).
std::vector<std::pair<std::size_t, std::size_t>> pattern_positions(const SnaSpec& spec);

/// Extends a free-entry pattern to the unique member of SNA(n) with those
/// entries. For n >= 2 the dependent entries are filled one constraint at a
/// time (last column from row sums, last row from column sums, corner from
/// the trace, then the three remaining first-column/last-column entries),
/// and the leftover column sum is asserted. For n = 1 no sequential order
/// exists (every constraint involves two unknowns), so the 2x2 system is
/// solved exactly instead, certifying uniqueness.
Matrix complete(std::span<const Scalar> pattern, const SnaSpec& spec);

/// Reads the free entries back out of a member.
std::vector<Scalar> extract_pattern(const Matrix& m, const SnaSpec& spec);

/// n^2 - 1.
std::size_t dimension(const SnaSpec& spec);

/// The trace/row-sum/column-sum constraint system: (2n+3) x (n+1)^2 zero-one
/// coefficient matrix over spec.field, unknowns in row-major order.
Matrix constraint_matrix(const SnaSpec& spec);

/// (n+1)^2 minus the exact rank of the constraint system; the independent
/// route to `dimension`.
std::size_t dimension_from_constraints(const SnaSpec& spec);

/// The four barycentric generators of SNA(2), in the fixed order
/// (A00_0, A01_0, A00_1, A10_0) used for every coefficient vector.
inline constexpr std::array<std::string_view, 4> generator_names{"A00_0", "A01_0", "A00_1",
                                                                 "A10_0"};
Matrix generator(std::string_view name, Field field = Field::rationals);
std::array<Matrix, 4> generators(Field field = Field::rationals);

/// Coefficients over the four generators, summing to one.
struct BarycentricCombo {
  std::array<Scalar, 4> coefficients;

  Scalar sum() const;
  /// Comma-separated coefficients, e.g. "-3,1,1,2".
  std::string to_string() const;
  /// Combination over the generator names, e.g. "-3*A00_0 + A01_0 + A00_1 + 2*A10_0".
  std::string to_combination() const;
};

/// The unique barycentric coordinates of a member of SNA(2) over the four
/// generators (9 entry equations plus the coefficient-sum constraint).
BarycentricCombo barycentric_coords(const Matrix& m);

struct BracketTableEntry {
  std::size_t lhs_index = 0;  // indices into generator_names
  std::size_t rhs_index = 0;
  Matrix value;
  BarycentricCombo combo;
};

/// [G_i, G_j] for the six unordered generator pairs (i < j), each expressed
/// in barycentric coordinates.
std::vector<BracketTableEntry> bracket_table(const SnaSpec& spec);

/// Trace zero and all row and column sums zero: membership in sl(n+1)_0.
bool sl0_membership(const Matrix& m, std::size_t n);

/// The isomorphism V(SNA(n)_o) -> sl(n+1)_0, a |-> a - o; it sends the
/// reduced bracket to the plain matrix commutator.
Matrix reduction_iso(const Matrix& o, const Matrix& a);
/// Its inverse v |-> v + o.
Matrix reduction_iso_inverse(const Matrix& o, const Matrix& v);

/// e, f, h inside V(SNA(2)_o) with o = A01_0, over Q(w):
///   e = (1/3)(A10_0 + w A00_1),  f = (1/3)(A10_0 + w^2 A00_1),
///   h = -((2w+1)/3) A00_0,
/// all scalar multiples and sums taken in V(A_o). Since sqrt(3)*i = 2w + 1,
/// the h coefficient is -(sqrt(3)/3)i rewritten on the {1, w} basis. The
/// constructor verifies [h,e]_o = 2e, [h,f]_o = -2f, [e,f]_o = h exactly and
/// throws Error if any relation fails.
struct ChevalleyTriple {
  Matrix e, f, h;
  Matrix basepoint;
};
ChevalleyTriple chevalley_triple();

/// Deterministic pseudorandom member: a seeded free-entry pattern with
/// numerators in [-bound, bound] and denominators in [1, bound], completed.
/// Over Q(w) both basis coefficients of every entry are drawn.
Matrix random_element(const SnaSpec& spec, std::uint64_t seed, std::uint64_t bound);

}  // namespace affgebra::sna
