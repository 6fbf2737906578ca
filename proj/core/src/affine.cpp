#include "affgebra/affine.hpp"

#include <utility>

namespace affgebra::affine {

namespace {

const Matrix& pick(std::span<const Matrix> s, std::size_t i) { return s[i % s.size()]; }
const Scalar& pick(std::span<const Scalar> s, std::size_t i) { return s[i % s.size()]; }

std::string label(const char* name, const Matrix& m) {
  return std::string(name) + "=" + format_matrix(m);
}
std::string label(const char* name, const Scalar& s) {
  return std::string(name) + "=" + format_scalar(s);
}

// Stateful recorder: runs comparisons until the first failure, counting
// verified instances, so checker bodies read as a flat list of identities.
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

  bool member(const char* identity, const AffineSpace& space, const Matrix& value,
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

Matrix chain(const HeapOp& heap, std::span<const Matrix> xs) {
  Matrix acc = xs[0];
  for (std::size_t k = 1; k + 1 < xs.size(); k += 2) {
    acc = heap(acc, xs[k], xs[k + 1]);
  }
  return acc;
}

void check_action_laws(Recorder& rec, const AffineSpace& sp, const Scalar& l, const Scalar& m,
                       const Scalar& n, const Matrix& a, const Matrix& b, const Matrix& c,
                       const Matrix& d) {
  const Scalar one = Scalar::one(sp.field);
  const Scalar zero = Scalar::zero(sp.field);

  rec.member("action.closure", sp, sp.act(l, a, b), {label("lambda", l), label("a", a), label("b", b)});
  rec.equal("action.heap_distributivity_scalar", sp.act(l - m + n, a, b),
            sp.heap(sp.act(l, a, b), sp.act(m, a, b), sp.act(n, a, b)),
            {label("lambda", l), label("mu", m), label("nu", n), label("a", a), label("b", b)});
  rec.equal("action.heap_distributivity_point", sp.act(l, a, sp.heap(b, c, d)),
            sp.heap(sp.act(l, a, b), sp.act(l, a, c), sp.act(l, a, d)),
            {label("lambda", l), label("a", a), label("b", b), label("c", c), label("d", d)});
  rec.equal("action.multiplicativity", sp.act(l * m, a, b), sp.act(l, a, sp.act(m, a, b)),
            {label("lambda", l), label("mu", m), label("a", a), label("b", b)});
  rec.equal("action.unit", sp.act(one, a, b), b, {label("a", a), label("b", b)});
  rec.equal("action.zero", sp.act(zero, a, b), a, {label("a", a), label("b", b)});
  rec.equal("action.base_change", sp.act(l, a, b),
            sp.heap(sp.act(l, c, b), sp.act(l, c, a), a),
            {label("lambda", l), label("a", a), label("b", b), label("c", c)});
}

void check_map_laws(Recorder& rec, const AffineMap& f, const AffineSpace& dom,
                    const AffineSpace& cod, const Scalar& l, const Matrix& a, const Matrix& b,
                    const Matrix& c) {
  rec.equal("map.heap", f(dom.heap(a, b, c)), cod.heap(f(a), f(b), f(c)),
            {label("a", a), label("b", b), label("c", c)});
  rec.equal("map.action", f(dom.act(l, a, b)), cod.act(l, f(a), f(b)),
            {label("lambda", l), label("a", a), label("b", b)});
}

}  // namespace

Matrix heap_op(const Matrix& a, const Matrix& b, const Matrix& c) { return a - b + c; }

Matrix heap_chain(std::span<const Matrix> elements) {
  if (elements.empty() || elements.size() % 2 == 0) {
    throw DomainError("heap chain needs an odd number of elements");
  }
  return chain(heap_op, elements);
}

Matrix action(const Scalar& lambda, const Matrix& a, const Matrix& b) {
  const Scalar one = Scalar::one(lambda.field());
  return lambda * b + (one - lambda) * a;
}

Matrix retract_add(const Matrix& o, const Matrix& a, const Matrix& b) {
  return heap_op(a, o, b);
}

Matrix retract_neg(const Matrix& o, const Matrix& a) { return heap_op(o, a, o); }

Matrix vspace_scale(const Matrix& o, const Scalar& lambda, const Matrix& a) {
  return action(lambda, o, a);
}

AffineSpace ambient_space(std::size_t rows, std::size_t cols, Field field) {
  AffineSpace sp;
  sp.field = field;
  sp.name = "M(" + std::to_string(rows) + "x" + std::to_string(cols) + ", " +
            std::string(field_name(field)) + ")";
  sp.contains = [rows, cols, field](const Matrix& m) {
    return m.rows() == rows && m.cols() == cols && m.field() == field;
  };
  return sp;
}

AffineSpace mutated_heap_space(AffineSpace space) {
  space.name += " [mutated heap]";
  space.heap = [](const Matrix& a, const Matrix& b, const Matrix& c) {
    return a - b + c + c;
  };
  return space;
}

AffineSpace mutated_action_space(AffineSpace space) {
  space.name += " [mutated action]";
  space.act = [](const Scalar& lambda, const Matrix& a, const Matrix& b) {
    const Scalar one = Scalar::one(lambda.field());
    return lambda * b + (one + lambda) * a;
  };
  return space;
}

std::vector<Scalar> default_scalar_probes(Field field) {
  std::vector<Scalar> probes{
      Scalar::zero(field),
      Scalar::one(field),
      Scalar::of_int(-1, field),
      Scalar(make_rational(1, 2), field),
      Scalar(make_rational(2, 3), field),
      Scalar::of_int(2, field),
      Scalar(make_rational(-3, 5), field),
  };
  if (field == Field::eisenstein) {
    probes.push_back(Scalar::omega());
    probes.push_back(Scalar::omega() * Scalar::omega());
  }
  return probes;
}

AffineMap linearise(const AffineMap& f, const Matrix& basepoint) {
  Matrix image_basepoint = f(basepoint);
  return [f, image_basepoint](const Matrix& a) { return f(a) - image_basepoint; };
}

AffineMap linearise_checked(const AffineMap& f, const Matrix& basepoint,
                            const AffineSpace& space, std::span<const Matrix> samples,
                            std::span<const Scalar> scalars) {
  AxiomReport report = is_affine_map(f, space, samples, scalars);
  if (!report.passed()) {
    throw DomainError("map is not affine: " + report.counterexample->identity + " fails at " +
                      report.counterexample->inputs.front());
  }
  return linearise(f, basepoint);
}

AxiomReport check_heap_axioms(const AffineSpace& space, std::span<const Matrix> samples) {
  Recorder rec("heap");
  if (samples.empty()) throw DomainError("heap axiom suite needs samples");

  for (std::size_t i = 0; i < samples.size() && !rec.failed(); ++i) {
    const Matrix& a = pick(samples, i);
    const Matrix& b = pick(samples, i + 1);
    const Matrix& c = pick(samples, i + 2);
    const Matrix& d = pick(samples, i + 3);
    const Matrix& e = pick(samples, i + 4);

    rec.member("heap.closure", space, space.heap(a, b, c),
               {label("a", a), label("b", b), label("c", c)});
    rec.equal("heap.idempotence", space.heap(a, a, b), b, {label("a", a), label("b", b)});
    rec.equal("heap.symmetry", space.heap(a, b, c), space.heap(c, b, a),
              {label("a", a), label("b", b), label("c", c)});

    const auto inputs5 = [&] {
      return std::vector<std::string>{label("a", a), label("b", b), label("c", c), label("d", d),
                                      label("e", e)};
    };
    const Matrix left = space.heap(space.heap(a, b, c), d, e);
    rec.equal("heap.para_associativity", left, space.heap(a, b, space.heap(c, d, e)), inputs5());
    // bracket redistribution: the middle slot may absorb a reversed triple
    rec.equal("heap.redistribution", left, space.heap(a, space.heap(d, c, b), e), inputs5());
    // repeated-argument instance
    rec.equal("heap.para_associativity", space.heap(space.heap(a, a, b), b, c),
              space.heap(a, a, space.heap(b, b, c)),
              {label("a", a), label("b", b), label("c", c)});
  }
  return rec.report;
}

AxiomReport check_action_axioms(const AffineSpace& space, std::span<const Matrix> samples,
                                std::span<const Scalar> scalars) {
  Recorder rec("action");
  if (samples.empty() || scalars.empty()) {
    throw DomainError("action axiom suite needs samples and scalar probes");
  }

  for (std::size_t i = 0; i < samples.size() && !rec.failed(); ++i) {
    check_action_laws(rec, space, pick(scalars, i), pick(scalars, i + 1), pick(scalars, i + 2),
                      pick(samples, i), pick(samples, i + 1), pick(samples, i + 2),
                      pick(samples, i + 3));
  }
  // exhaustive probe sweep on a fixed window of samples, catching scalar
  // combinations the cyclic pass misses
  for (std::size_t x = 0; x < scalars.size() && !rec.failed(); ++x) {
    for (std::size_t y = 0; y < scalars.size() && !rec.failed(); ++y) {
      for (std::size_t z = 0; z < scalars.size() && !rec.failed(); ++z) {
        check_action_laws(rec, space, scalars[x], scalars[y], scalars[z], pick(samples, 0),
                          pick(samples, 1), pick(samples, 2), pick(samples, 3));
      }
    }
  }
  return rec.report;
}

AxiomReport is_affine_map(const AffineMap& f, const AffineSpace& domain,
                          const AffineSpace& codomain, std::span<const Matrix> samples,
                          std::span<const Scalar> scalars) {
  Recorder rec("affine_map");
  if (samples.empty() || scalars.empty()) {
    throw DomainError("affine map check needs samples and scalar probes");
  }
  for (std::size_t i = 0; i < samples.size() && !rec.failed(); ++i) {
    check_map_laws(rec, f, domain, codomain, pick(scalars, i), pick(samples, i),
                   pick(samples, i + 1), pick(samples, i + 2));
  }
  for (std::size_t x = 0; x < scalars.size() && !rec.failed(); ++x) {
    check_map_laws(rec, f, domain, codomain, scalars[x], pick(samples, 0), pick(samples, 1),
                   pick(samples, 2));
  }
  return rec.report;
}

AxiomReport is_affine_map(const AffineMap& f, const AffineSpace& space,
                          std::span<const Matrix> samples, std::span<const Scalar> scalars) {
  return is_affine_map(f, space, space, samples, scalars);
}

}  // namespace affgebra::affine
