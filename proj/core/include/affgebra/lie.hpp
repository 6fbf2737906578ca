#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>

#include "affgebra/affine.hpp"
#include "affgebra/matrix.hpp"

namespace affgebra::lie {

/// A binary operation on carrier members with a tag for reports. Lie brackets
/// on affine spaces are bi-affine and satisfy the heap-form antisymmetry and
/// Jacobi identities; both are checked by the suites below, not assumed.
struct AffineBracket {
  std::string tag;
  std::function<Matrix(const Matrix&, const Matrix&)> op;

  Matrix operator()(const Matrix& a, const Matrix& b) const { return op(a, b); }
};

/// The SNA bracket [a,b] = ab - ba + b. Inputs must be members of SNA(n) for
/// the n and field inferred from the shape; violations throw DomainError.
Matrix sna_bracket(const Matrix& a, const Matrix& b);
AffineBracket make_sna_bracket();

/// [x,y] = zeta |>_x y. Idempotent for every zeta, and a Lie bracket on any
/// affine space.
AffineBracket zeta_bracket(const Scalar& zeta);

// Deliberately broken brackets for checker self-tests. Note that any bracket
// of the form ab - ba + (linear in a, b) satisfies the antisymmetry identity,
// so the anti mutant has to damage the commutator part.
AffineBracket mutated_anti_bracket();      // ab + b: fails (anti)
AffineBracket mutated_jacobi_bracket();    // ab - ba + a: satisfies (anti), fails (Jacobi)
AffineBracket mutated_biaffine_bracket();  // ab - ba + b*b: fails bi-affinity

/// Verifies <[a,b],[a,a],[b,a]> = [b,b] exactly on sampled pairs (checked
/// once per unordered pair; the identity is symmetric in a and b), including
/// the diagonal a = b, plus carrier closure of the bracket.
AxiomReport check_anti_axiom(const AffineBracket& bracket, const affine::AffineSpace& space,
                             std::span<const Matrix> samples);

/// Verifies <[a,[b,c]],[a,a],[b,[c,a]],[b,b],[c,[a,b]]> = [c,c] exactly on
/// sampled triples, including repeated-argument instances.
AxiomReport check_jacobi_axiom(const AffineBracket& bracket, const affine::AffineSpace& space,
                               std::span<const Matrix> samples);

/// For sampled a, checks that [a,-] and [-,a] preserve the heap and the
/// action, i.e. the bracket is affine in each argument separately.
AxiomReport check_bi_affine(const AffineBracket& bracket, const affine::AffineSpace& space,
                            std::span<const Matrix> samples, std::span<const Scalar> scalars);

/// The vector-valued bracket [a,b]_v = [a,b] - b of an idempotent bracket,
/// as a vector of V(A_o) in point representation (point = [a,b] - b + o, so
/// arrow() recovers [a,b] - b and the diagonal maps to the zero vector o).
/// Idempotency is verified on the two arguments; a violation throws
/// DomainError naming the witness.
affine::VectorView vector_valued_bracket(const AffineBracket& bracket, const Matrix& o,
                                         const Matrix& a, const Matrix& b);

/// The basepoint reduction [a,b]_o = <[a,b],[a,o],[o,o],[o,b],o>, a genuine
/// Lie bracket on V(A_o) (bilinear, antisymmetric, Jacobi for the retract
/// operations). For the SNA bracket it equals (a-o)(b-o) - (b-o)(a-o) + o.
Matrix reduce_bracket(const AffineBracket& bracket, const Matrix& o, const Matrix& a,
                      const Matrix& b);

/// Whether the affine self-map of the line determined by f(a) = lambda |>_a b,
/// f(b) = mu |>_a b intertwines the zeta1- and zeta2-brackets on the
/// generating pair: (mu zeta2 - lambda zeta2 + lambda) = (mu zeta1 - lambda
/// zeta1 + lambda), equivalently (zeta1 - zeta2)(mu - lambda) = 0. With
/// zeta1 != zeta2 this forces lambda = mu, a non-surjective f, which is why
/// distinct zeta give non-isomorphic brackets on the line.
bool line_iso_obstruction(const Scalar& zeta1, const Scalar& zeta2, const Scalar& lambda,
                          const Scalar& mu);

/// The affine line through two distinct points, modelled concretely: the
/// carrier is {t |>_a b} and a point is addressed by its coordinate t.
/// Injectivity of t |-> t |>_a b (for a != b) makes `coordinate` well
/// defined.
class AffineLine {
 public:
  AffineLine(Matrix a, Matrix b);  // requires a != b

  const Matrix& origin() const { return a_; }
  const Matrix& second() const { return b_; }

  Matrix point(const Scalar& t) const;
  /// Inverse of `point`; nullopt for matrices off the line.
  std::optional<Scalar> coordinate(const Matrix& p) const;

  /// Applies the affine self-map with f(a) = lambda |>_a b, f(b) = mu |>_a b:
  /// the point with coordinate t goes to coordinate lambda + t(mu - lambda).
  Matrix apply_map(const Scalar& lambda, const Scalar& mu, const Matrix& p) const;

  /// The line as a checkable carrier (membership via `coordinate`).
  affine::AffineSpace space() const;

 private:
  Matrix a_, b_, direction_;
};

}  // namespace affgebra::lie
