#include "affgebra/lie.hpp"

#include <array>
#include <utility>

#include "affgebra/sna.hpp"

namespace affgebra::lie {

namespace {

const Matrix& pick(std::span<const Matrix> s, std::size_t i) { return s[i % s.size()]; }

std::string label(const char* name, const Matrix& m) {
  return std::string(name) + "=" + format_matrix(m);
}
std::string label(const char* name, const Scalar& s) {
  return std::string(name) + "=" + format_scalar(s);
}

struct Recorder {
  AxiomReport report;

  explicit Recorder(std::string suite) { report.suite = std::move(suite); }
  bool failed() const { return report.counterexample.has_value(); }

  bool equal(const char* identity, const Matrix& lhs, const Matrix& rhs,
             std::vector<std::string> inputs) {
    if (failed()) return false;
    ++report.checks;
    if (lhs == rhs) return true;
    report.counterexample =
        Counterexample{identity, std::move(inputs), format_matrix(lhs), format_matrix(rhs)};
    return false;
  }

  bool member(const char* identity, const affine::AffineSpace& space, const Matrix& value,
              std::vector<std::string> inputs) {
    if (failed()) return false;
    if (!space.contains) return true;
    ++report.checks;
    if (space.contains(value)) return true;
    report.counterexample = Counterexample{identity, std::move(inputs), format_matrix(value),
                                           "(a member of " + space.name + ")"};
    return false;
  }
};

void require_member(const Matrix& m, const char* which) {
  if (m.rows() != m.cols() || m.rows() < 2) {
    throw DomainError(std::string(which) + " is not a square matrix of size >= 2");
  }
  const sna::SnaSpec spec{m.rows() - 1, m.field()};
  if (auto violation = sna::membership_violation(m, spec)) {
    throw DomainError(std::string(which) + " is not a member of SNA(" + std::to_string(spec.n) +
                      "): " + *violation);
  }
}

void check_anti_instance(Recorder& rec, const AffineBracket& br, const affine::AffineSpace& sp,
                         const Matrix& a, const Matrix& b) {
  rec.member("bracket.closure", sp, br(a, b), {label("a", a), label("b", b)});
  rec.equal("bracket.anti", sp.heap(br(a, b), br(a, a), br(b, a)), br(b, b),
            {label("a", a), label("b", b)});
}

void check_jacobi_instance(Recorder& rec, const AffineBracket& br, const affine::AffineSpace& sp,
                           const Matrix& a, const Matrix& b, const Matrix& c) {
  const Matrix lhs =
      sp.heap(sp.heap(br(a, br(b, c)), br(a, a), br(b, br(c, a))), br(b, b), br(c, br(a, b)));
  rec.equal("bracket.jacobi", lhs, br(c, c), {label("a", a), label("b", b), label("c", c)});
}

}  // namespace

Matrix sna_bracket(const Matrix& a, const Matrix& b) {
  require_member(a, "left argument");
  require_member(b, "right argument");
  if (a.rows() != b.rows()) throw DomainError("bracket arguments of different sizes");
  return a * b - b * a + b;
}

AffineBracket make_sna_bracket() {
  return AffineBracket{"sna", [](const Matrix& a, const Matrix& b) { return sna_bracket(a, b); }};
}

AffineBracket zeta_bracket(const Scalar& zeta) {
  return AffineBracket{"zeta(" + format_scalar(zeta) + ")",
                       [zeta](const Matrix& x, const Matrix& y) { return affine::action(zeta, x, y); }};
}

AffineBracket mutated_anti_bracket() {
  return AffineBracket{"mutated-anti",
                       [](const Matrix& a, const Matrix& b) { return a * b + b; }};
}

AffineBracket mutated_jacobi_bracket() {
  return AffineBracket{"mutated-jacobi",
                       [](const Matrix& a, const Matrix& b) { return a * b - b * a + a; }};
}

AffineBracket mutated_biaffine_bracket() {
  return AffineBracket{"mutated-biaffine",
                       [](const Matrix& a, const Matrix& b) { return a * b - b * a + b * b; }};
}

AxiomReport check_anti_axiom(const AffineBracket& bracket, const affine::AffineSpace& space,
                             std::span<const Matrix> samples) {
  Recorder rec("bracket.anti[" + bracket.tag + "]");
  if (samples.empty()) throw DomainError("anti axiom suite needs samples");
  for (std::size_t i = 0; i < samples.size() && !rec.failed(); ++i) {
    const Matrix& a = pick(samples, i);
    const Matrix& b = pick(samples, i + 1);
    check_anti_instance(rec, bracket, space, a, b);
    check_anti_instance(rec, bracket, space, a, a);  // diagonal: both sides [a,a]
  }
  return rec.report;
}

AxiomReport check_jacobi_axiom(const AffineBracket& bracket, const affine::AffineSpace& space,
                               std::span<const Matrix> samples) {
  Recorder rec("bracket.jacobi[" + bracket.tag + "]");
  if (samples.empty()) throw DomainError("jacobi axiom suite needs samples");
  for (std::size_t i = 0; i < samples.size() && !rec.failed(); ++i) {
    const Matrix& a = pick(samples, i);
    const Matrix& b = pick(samples, i + 1);
    const Matrix& c = pick(samples, i + 2);
    check_jacobi_instance(rec, bracket, space, a, b, c);
    check_jacobi_instance(rec, bracket, space, a, a, b);
    check_jacobi_instance(rec, bracket, space, a, a, a);
  }
  return rec.report;
}

AxiomReport check_bi_affine(const AffineBracket& bracket, const affine::AffineSpace& space,
                            std::span<const Matrix> samples, std::span<const Scalar> scalars) {
  Recorder rec("bracket.biaffine[" + bracket.tag + "]");
  if (samples.empty() || scalars.empty()) {
    throw DomainError("bi-affinity suite needs samples and scalar probes");
  }
  for (std::size_t i = 0; i < samples.size() && !rec.failed(); ++i) {
    const Matrix& a = pick(samples, i);
    const Matrix& b = pick(samples, i + 1);
    const Matrix& c = pick(samples, i + 2);
    const Matrix& d = pick(samples, i + 3);
    const Scalar& l = scalars[i % scalars.size()];

    const auto inputs = [&](const char* role) {
      return std::vector<std::string>{std::string("slot=") + role, label("a", a), label("b", b),
                                      label("c", c), label("d", d), label("lambda", l)};
    };
    // [a,-] preserves heap and action
    rec.equal("bracket.right_slot.heap", bracket(a, space.heap(b, c, d)),
              space.heap(bracket(a, b), bracket(a, c), bracket(a, d)), inputs("right"));
    rec.equal("bracket.right_slot.action", bracket(a, space.act(l, b, c)),
              space.act(l, bracket(a, b), bracket(a, c)), inputs("right"));
    // [-,a] preserves heap and action
    rec.equal("bracket.left_slot.heap", bracket(space.heap(b, c, d), a),
              space.heap(bracket(b, a), bracket(c, a), bracket(d, a)), inputs("left"));
    rec.equal("bracket.left_slot.action", bracket(space.act(l, b, c), a),
              space.act(l, bracket(b, a), bracket(c, a)), inputs("left"));
  }
  return rec.report;
}

affine::VectorView vector_valued_bracket(const AffineBracket& bracket, const Matrix& o,
                                         const Matrix& a, const Matrix& b) {
  for (const Matrix* x : {&a, &b}) {
    if (bracket(*x, *x) != *x) {
      throw DomainError("bracket '" + bracket.tag +
                        "' is not idempotent: [x,x] != x at x=" + format_matrix(*x));
    }
  }
  return affine::VectorView{o, bracket(a, b) - b + o};
}

Matrix reduce_bracket(const AffineBracket& bracket, const Matrix& o, const Matrix& a,
                      const Matrix& b) {
  const std::array<Matrix, 5> chain{bracket(a, b), bracket(a, o), bracket(o, o), bracket(o, b),
                                    o};
  return affine::heap_chain(chain);
}

bool line_iso_obstruction(const Scalar& zeta1, const Scalar& zeta2, const Scalar& lambda,
                          const Scalar& mu) {
  const Scalar image_of_bracket1 = mu * zeta1 - lambda * zeta1 + lambda;
  const Scalar bracket2_of_images = mu * zeta2 - lambda * zeta2 + lambda;
  return image_of_bracket1 == bracket2_of_images;
}

AffineLine::AffineLine(Matrix a, Matrix b)
    : a_(std::move(a)), b_(std::move(b)), direction_(b_ - a_) {
  if (direction_.is_zero()) throw DomainError("an affine line needs two distinct points");
}

Matrix AffineLine::point(const Scalar& t) const { return affine::action(t, a_, b_); }

std::optional<Scalar> AffineLine::coordinate(const Matrix& p) const {
  if (p.rows() != a_.rows() || p.cols() != a_.cols()) return std::nullopt;
  const Matrix offset = p - a_;
  // t with offset = t * direction, read off at the first nonzero direction entry
  for (std::size_t i = 0; i < direction_.rows(); ++i) {
    for (std::size_t j = 0; j < direction_.cols(); ++j) {
      if (direction_.at(i, j).is_zero()) continue;
      const Scalar t = offset.at(i, j) / direction_.at(i, j);
      if (offset == t * direction_) return t;
      return std::nullopt;
    }
  }
  return std::nullopt;
}

Matrix AffineLine::apply_map(const Scalar& lambda, const Scalar& mu, const Matrix& p) const {
  const auto t = coordinate(p);
  if (!t) throw DomainError("point is not on the line");
  return point(lambda + *t * (mu - lambda));
}

affine::AffineSpace AffineLine::space() const {
  affine::AffineSpace sp;
  sp.field = a_.field();
  sp.name = "line";
  sp.contains = [line = *this](const Matrix& p) { return line.coordinate(p).has_value(); };
  return sp;
}

}  // namespace affgebra::lie
