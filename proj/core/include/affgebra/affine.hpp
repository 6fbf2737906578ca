#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "affgebra/matrix.hpp"
#include "affgebra/report.hpp"

namespace affgebra::affine {

using HeapOp = std::function<Matrix(const Matrix&, const Matrix&, const Matrix&)>;
using ActionOp = std::function<Matrix(const Scalar&, const Matrix&, const Matrix&)>;
using AffineMap = std::function<Matrix(const Matrix&)>;

/// The ternary heap operation <a,b,c> realised on matrix carriers: a - b + c.
Matrix heap_op(const Matrix& a, const Matrix& b, const Matrix& c);

/// Repeated heap application to an odd number of elements. Para-associativity
/// and symmetry make the bracketing irrelevant, so internal brackets are
/// dropped: <x1,...,x2k+1> = x1 - x2 + x3 - ... + x2k+1.
Matrix heap_chain(std::span<const Matrix> elements);

/// The scalar action lambda |>_a b = lambda*b + (1 - lambda)*a.
Matrix action(const Scalar& lambda, const Matrix& a, const Matrix& b);

/// Group retract at basepoint o: a + b = <a,o,b>.
Matrix retract_add(const Matrix& o, const Matrix& a, const Matrix& b);
/// Inverse in the retract A_o: -a = <o,a,o>.
Matrix retract_neg(const Matrix& o, const Matrix& a);
/// Scalar multiplication of the vector space V(A_o): lambda * a = lambda |>_o a.
Matrix vspace_scale(const Matrix& o, const Scalar& lambda, const Matrix& a);

/// A vector of V(A_o) in point representation: `point` is the carrier element
/// standing for the arrow from `basepoint` to it. The zero vector is the
/// basepoint itself; `arrow()` gives the classical ambient-difference form.
struct VectorView {
  Matrix basepoint;
  Matrix point;

  Matrix arrow() const { return point - basepoint; }
  bool is_zero() const { return point == basepoint; }
};

/// A carrier set of matrices together with its affine operations. `contains`
/// is a decidable membership predicate (carriers such as SNA(n) over Q are
/// infinite, so sets are predicates, never enumerations); an empty predicate
/// means the carrier is unconstrained. The default operations are the ambient
/// matrix ones; checker self-tests swap in deliberately broken variants.
struct AffineSpace {
  Field field = Field::rationals;
  std::string name;
  std::function<bool(const Matrix&)> contains;
  HeapOp heap = heap_op;
  ActionOp act = action;
};

/// Carrier of all rows x cols matrices (an affine space over itself).
AffineSpace ambient_space(std::size_t rows, std::size_t cols, Field field);

/// Heap replaced by a - b + 2c; fails idempotence and closure.
AffineSpace mutated_heap_space(AffineSpace space);
/// Action replaced by lambda*b + (1 + lambda)*a; fails the unit law.
AffineSpace mutated_action_space(AffineSpace space);

/// Scalar probes for axiom suites. Always contains 0, 1 and -1, which pin the
/// degenerate action laws; over Q(w) it also contains w and w^2.
std::vector<Scalar> default_scalar_probes(Field field);

/// The linear map V(A_o) -> V(B_f(o)) induced by an affine f, in classical
/// vector form: a |-> f(a) - f(o). Additive and homogeneous with plain matrix
/// operations on its outputs when the inputs carry the V(A_o) structure.
AffineMap linearise(const AffineMap& f, const Matrix& basepoint);

/// As linearise, but first runs is_affine_map on the samples and throws
/// DomainError with the witness if f fails affinity.
AffineMap linearise_checked(const AffineMap& f, const Matrix& basepoint,
                            const AffineSpace& space, std::span<const Matrix> samples,
                            std::span<const Scalar> scalars);

/// Verifies on the sampled elements, exactly:
///   <<a,b,c>,d,e> = <a,b,<c,d,e>> = <a,<d,c,b>,e>   (para-associativity)
///   <a,a,b> = b                                     (idempotence)
///   <a,b,c> = <c,b,a>                               (symmetry)
/// plus carrier closure of <a,b,c>. Tuples are drawn from the samples in a
/// deterministic cyclic pattern together with repeated-argument instances;
/// the first counterexample in sample order is reported.
AxiomReport check_heap_axioms(const AffineSpace& space, std::span<const Matrix> samples);

/// Verifies the five action laws and the base-change law, exactly:
///   (l - m + n) |>_a b = <l |>_a b, m |>_a b, n |>_a b>
///   l |>_a <b,c,d>    = <l |>_a b, l |>_a c, l |>_a d>
///   (l m) |>_a b      = l |>_a (m |>_a b)
///   1 |>_a b = b,  0 |>_a b = a
///   l |>_a b          = <l |>_c b, l |>_c a, a>
/// plus carrier closure of the action.
AxiomReport check_action_axioms(const AffineSpace& space, std::span<const Matrix> samples,
                                std::span<const Scalar> scalars);

/// Checks that f preserves heaps, f<a,b,c> = <f a, f b, f c>, and actions,
/// f(l |>_a b) = l |>_{f a} f b, on the sampled inputs.
AxiomReport is_affine_map(const AffineMap& f, const AffineSpace& domain,
                          const AffineSpace& codomain, std::span<const Matrix> samples,
                          std::span<const Scalar> scalars);
AxiomReport is_affine_map(const AffineMap& f, const AffineSpace& space,
                          std::span<const Matrix> samples, std::span<const Scalar> scalars);

}  // namespace affgebra::affine
