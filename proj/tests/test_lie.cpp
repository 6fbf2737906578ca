#include "doctest.h"

#include "affgebra/lie.hpp"
#include "affgebra/sna.hpp"
#include "test_support.hpp"

using namespace affgebra;
using namespace affgebra::lie;

namespace {

const sna::SnaSpec kSna2{2, Field::rationals};

std::vector<Matrix> pool(std::size_t count, std::uint64_t seed = 900) {
  return test::random_sna_pool(kSna2, count, seed, 6);
}

Matrix combination(std::initializer_list<std::pair<long long, const Matrix*>> terms) {
  auto it = terms.begin();
  Matrix acc = Scalar::of_int(it->first, it->second->field()) * *it->second;
  for (++it; it != terms.end(); ++it) {
    acc = acc + Scalar::of_int(it->first, it->second->field()) * *it->second;
  }
  return acc;
}

}  // namespace

TEST_SUITE("lie") {

TEST_CASE("sna bracket basics") {
  const auto gens = sna::generators();
  const Matrix m = sna::random_element(kSna2, 5, 6);
  CHECK(sna_bracket(m, m) == m);  // aa - aa + a
  CHECK(sna_bracket(gens[0], gens[1]) == gens[1]);

  // [A01_0, A00_1] = -2*A10_0 + A01_0 + 2*A00_1
  const Matrix expected =
      combination({{-2, &gens[3]}, {1, &gens[1]}, {2, &gens[2]}});
  CHECK(sna_bracket(gens[1], gens[2]) == expected);
  CHECK(sna::is_member(sna_bracket(gens[1], gens[2]), kSna2));

  CHECK_THROWS_AS(sna_bracket(Matrix::identity(3, Field::rationals), gens[0]), DomainError);
  CHECK_THROWS_AS(sna_bracket(gens[0], Matrix(3, 3, Field::rationals)), DomainError);
}

TEST_CASE("anti axiom holds for the sna bracket and fails for the anti mutant") {
  const auto samples = pool(40);
  const auto space = sna::carrier(kSna2);
  const auto bracket = make_sna_bracket();

  CHECK(check_anti_axiom(bracket, space, samples).passed());

  const auto broken = check_anti_axiom(mutated_anti_bracket(), space, samples);
  REQUIRE_FALSE(broken.passed());

  // any bracket ab - ba + (linear) satisfies the anti identity; the jacobi
  // mutant is such a bracket, so anti alone cannot reject it
  CHECK(check_anti_axiom(mutated_jacobi_bracket(), space, samples).passed());
}

TEST_CASE("jacobi axiom holds for the sna bracket and fails for the jacobi mutant") {
  const auto samples = pool(30);
  const auto space = sna::carrier(kSna2);

  CHECK(check_jacobi_axiom(make_sna_bracket(), space, samples).passed());

  const auto broken = check_jacobi_axiom(mutated_jacobi_bracket(), space, samples);
  REQUIRE_FALSE(broken.passed());
  CHECK(broken.counterexample->identity == "bracket.jacobi");
}

TEST_CASE("bi-affinity holds for sna and zeta brackets, fails for the product mutant") {
  const auto samples = pool(25);
  const auto space = sna::carrier(kSna2);
  const auto probes = affine::default_scalar_probes(Field::rationals);

  CHECK(check_bi_affine(make_sna_bracket(), space, samples, probes).passed());
  CHECK(check_bi_affine(zeta_bracket(Scalar(make_rational(2, 3))), space, samples, probes)
            .passed());

  const auto broken = check_bi_affine(mutated_biaffine_bracket(), space, samples, probes);
  REQUIRE_FALSE(broken.passed());
}

TEST_CASE("vector-valued bracket") {
  const auto gens = sna::generators();
  const Matrix& o = gens[1];
  const auto bracket = make_sna_bracket();
  const Matrix a = sna::random_element(kSna2, 21, 6);
  const Matrix b = sna::random_element(kSna2, 22, 6);

  // the diagonal is the zero vector of V(A_o)
  const auto diag = vector_valued_bracket(bracket, o, a, a);
  CHECK(diag.is_zero());
  CHECK(diag.point == o);
  CHECK(diag.arrow() == Matrix(3, 3, Field::rationals));

  // [A00_0, A01_0] = A01_0, so the vector part vanishes
  const auto v = vector_valued_bracket(bracket, o, gens[0], gens[1]);
  CHECK(v.arrow().is_zero());

  // general arrow value is [a,b] - b
  const auto w = vector_valued_bracket(bracket, o, a, b);
  CHECK(w.arrow() == sna_bracket(a, b) - b);
  CHECK(w.basepoint == o);

  // zeta = 0 gives [a,b]_v = a - b
  const auto z = vector_valued_bracket(zeta_bracket(Scalar::zero(Field::rationals)), o, a, b);
  CHECK(z.arrow() == a - b);

  // a non-idempotent bracket is refused with a witness
  try {
    vector_valued_bracket(mutated_anti_bracket(), o, a, b);
    FAIL("expected DomainError");
  } catch (const DomainError& e) {
    CHECK(std::string(e.what()).find("not idempotent") != std::string::npos);
    CHECK(std::string(e.what()).find(format_matrix(a)) != std::string::npos);
  }
}

TEST_CASE("basepoint reduction matches the commutator of differences") {
  const auto bracket = make_sna_bracket();
  for (const std::size_t n : {2u, 3u}) {
    const sna::SnaSpec spec{n, Field::rationals};
    const auto samples = test::random_sna_pool(spec, 12, 40 + n, 5);
    for (std::size_t i = 0; i + 2 < samples.size(); ++i) {
      const Matrix& o = samples[i];
      const Matrix& a = samples[i + 1];
      const Matrix& b = samples[i + 2];
      const Matrix reduced = reduce_bracket(bracket, o, a, b);
      CHECK(reduced == (a - o) * (b - o) - (b - o) * (a - o) + o);
      CHECK(sna::is_member(reduced, spec));
    }
  }
}

TEST_CASE("reduction collapses against the basepoint and on the diagonal") {
  const auto bracket = make_sna_bracket();
  const Matrix o = sna::random_element(kSna2, 61, 6);
  const Matrix a = sna::random_element(kSna2, 62, 6);
  CHECK(reduce_bracket(bracket, o, a, o) == o);
  CHECK(reduce_bracket(bracket, o, o, a) == o);
  CHECK(reduce_bracket(bracket, o, a, a) == o);
}

TEST_CASE("reduced bracket is a Lie bracket on V(A_o)") {
  using affine::retract_add;
  using affine::retract_neg;
  using affine::vspace_scale;
  const auto bracket = make_sna_bracket();
  const auto samples = pool(16, 1200);
  const Matrix& o = samples[0];
  test::Rng rng(67);

  for (std::size_t i = 0; i + 3 < samples.size(); ++i) {
    const Matrix& a = samples[i + 1];
    const Matrix& b = samples[i + 2];
    const Matrix& c = samples[i + 3];

    // antisymmetry: [a,b]_o = -[b,a]_o in A_o
    CHECK(reduce_bracket(bracket, o, a, b) == retract_neg(o, reduce_bracket(bracket, o, b, a)));

    // Jacobi: cyclic sum vanishes in A_o
    const Matrix jac = retract_add(
        o, retract_add(o, reduce_bracket(bracket, o, reduce_bracket(bracket, o, a, b), c),
                       reduce_bracket(bracket, o, reduce_bracket(bracket, o, b, c), a)),
        reduce_bracket(bracket, o, reduce_bracket(bracket, o, c, a), b));
    CHECK(jac == o);

    // bilinearity against the V(A_o) operations
    const Scalar lambda = rng.scalar(Field::rationals, 6);
    CHECK(reduce_bracket(bracket, o, retract_add(o, a, c), b) ==
          retract_add(o, reduce_bracket(bracket, o, a, b), reduce_bracket(bracket, o, c, b)));
    CHECK(reduce_bracket(bracket, o, vspace_scale(o, lambda, a), b) ==
          vspace_scale(o, lambda, reduce_bracket(bracket, o, a, b)));
    CHECK(reduce_bracket(bracket, o, a, vspace_scale(o, lambda, b)) ==
          vspace_scale(o, lambda, reduce_bracket(bracket, o, a, b)));
  }
}

TEST_CASE("zeta bracket is idempotent and reduces to the zero bracket") {
  const auto samples = pool(12, 1500);
  const Matrix& o = samples[0];
  for (const char* text : {"0", "1", "-1", "1/2", "2/3"}) {
    const Scalar zeta = parse_scalar(text, Field::rationals);
    const auto bracket = zeta_bracket(zeta);
    for (std::size_t i = 0; i + 1 < samples.size(); ++i) {
      CHECK(bracket(samples[i], samples[i]) == samples[i]);
      // reduction of an action bracket is the zero bracket of V(A_o)
      CHECK(reduce_bracket(bracket, o, samples[i], samples[i + 1]) == o);
    }
  }
  const auto gens = sna::generators();
  CHECK(zeta_bracket(Scalar::one(Field::rationals))(gens[0], gens[1]) == gens[1]);
  CHECK(zeta_bracket(Scalar::zero(Field::rationals))(gens[0], gens[1]) == gens[0]);
  CHECK(zeta_bracket(Scalar(make_rational(1, 2)))(gens[0], gens[1]) ==
        Scalar(make_rational(1, 2)) * (gens[0] + gens[1]));
}

TEST_CASE("zeta brackets pass anti and jacobi on SNA and on the line") {
  const auto space = sna::carrier(kSna2);
  const auto samples = pool(20, 1600);

  const AffineLine line(sna::generator("A00_0"), sna::generator("A01_0"));
  std::vector<Matrix> line_points;
  test::Rng rng(71);
  for (int k = 0; k < 20; ++k) line_points.push_back(line.point(rng.scalar(Field::rationals, 8)));

  for (const char* text : {"0", "1", "-1", "1/2", "2/3"}) {
    const auto bracket = zeta_bracket(parse_scalar(text, Field::rationals));
    CHECK(check_anti_axiom(bracket, space, samples).passed());
    CHECK(check_jacobi_axiom(bracket, space, samples).passed());
    CHECK(check_anti_axiom(bracket, line.space(), line_points).passed());
    CHECK(check_jacobi_axiom(bracket, line.space(), line_points).passed());
  }
}

TEST_CASE("line iso obstruction agrees with the factored form") {
  const Field f = Field::rationals;
  const Scalar zeta1 = Scalar::one(f);
  const Scalar zeta2 = Scalar::of_int(2, f);
  CHECK_FALSE(line_iso_obstruction(zeta1, zeta2, Scalar::zero(f), Scalar::one(f)));

  test::Rng rng(73);
  for (int k = 0; k < 1200; ++k) {
    const Scalar z1 = rng.scalar(f, 7);
    const Scalar z2 = rng.scalar(f, 7);
    const Scalar l = rng.scalar(f, 7);
    const Scalar m = rng.scalar(f, 7);
    // independent route: (zeta1 - zeta2)(mu - lambda) = 0
    const bool factored = ((z1 - z2) * (m - l)).is_zero();
    CHECK(line_iso_obstruction(z1, z2, l, m) == factored);
  }
  // equal brackets are always preserved; equal images never separate them
  for (int k = 0; k < 50; ++k) {
    const Scalar z = rng.scalar(f, 7);
    CHECK(line_iso_obstruction(z, z, rng.scalar(f, 7), rng.scalar(f, 7)));
    const Scalar l = rng.scalar(f, 7);
    CHECK(line_iso_obstruction(rng.scalar(f, 7), rng.scalar(f, 7), l, l));
  }
}

TEST_CASE("the concrete line model realises the obstruction") {
  const Field f = Field::rationals;
  const AffineLine line(sna::generator("A00_0"), sna::generator("A01_0"));

  // coordinates are faithful: t |-> point(t) is injective with exact inverse
  test::Rng rng(79);
  for (int k = 0; k < 60; ++k) {
    const Scalar t = rng.scalar(f, 9);
    const auto back = line.coordinate(line.point(t));
    REQUIRE(back.has_value());
    CHECK(*back == t);
  }
  CHECK_FALSE(line.coordinate(sna::generator("A10_0")).has_value());

  // f intertwines the two brackets on the generating pair iff the
  // obstruction predicate says so
  const Matrix a = line.point(Scalar::zero(f));
  const Matrix b = line.point(Scalar::one(f));
  for (int k = 0; k < 200; ++k) {
    const Scalar z1 = rng.scalar(f, 5);
    const Scalar z2 = rng.scalar(f, 5);
    const Scalar l = rng.scalar(f, 5);
    const Scalar m = rng.scalar(f, 5);
    const Matrix lhs = line.apply_map(l, m, zeta_bracket(z1)(a, b));
    const Matrix rhs = zeta_bracket(z2)(line.apply_map(l, m, a), line.apply_map(l, m, b));
    CHECK((lhs == rhs) == line_iso_obstruction(z1, z2, l, m));
  }

  // lambda = mu preserves brackets but collapses the line: not onto
  const Scalar l = Scalar(make_rational(1, 3));
  CHECK(line.apply_map(l, l, a) == line.apply_map(l, l, b));

  CHECK_THROWS_AS(AffineLine(a, a), DomainError);
}

}  // TEST_SUITE
