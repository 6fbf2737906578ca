// Command-line front end: membership tests, free-entry completion, brackets,
// the n=2 structure table, basepoint reductions, the Chevalley verification,
// axiom suites and the affine-line preservation check. All arithmetic is
// exact; matrices and scalars use the text grammars of the core library.
//
// Exit codes: 0 success/pass, 1 domain failure (non-member, axiom
// counterexample, bracket not preserved), 2 usage or parse error.

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "affgebra/affine.hpp"
#include "affgebra/lie.hpp"
#include "affgebra/matrix.hpp"
#include "affgebra/sna.hpp"

using namespace affgebra;
using nlohmann::json;

namespace {

struct Options {
  std::size_t n = 2;
  bool n_given = false;
  std::string field_text = "q";
  std::uint64_t seed = 0;
  std::size_t samples = 50;
  std::uint64_t bound = 10;
  bool as_json = false;

  Field field() const { return parse_field(field_text); }
};

// Arguments may be inline text or @file.
std::string read_argument(const std::string& arg) {
  if (arg.empty() || arg.front() != '@') return arg;
  const std::string path = arg.substr(1);
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read file '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  std::string text = buffer.str();
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.pop_back();
  return text;
}

void emit(const json& j) { std::cout << j.dump() << "\n"; }

std::size_t infer_n(const Options& opt, const Matrix& m) {
  if (opt.n_given) return opt.n;
  return m.rows() >= 2 ? m.rows() - 1 : 1;
}

int report_non_member(const Options& opt, const Matrix& m, const sna::SnaSpec& spec,
                      const char* role) {
  if (auto violation = sna::membership_violation(m, spec)) {
    if (opt.as_json) {
      emit(json{{"error", "non-member"}, {"argument", role}, {"violation", *violation}});
    } else {
      std::cerr << role << " is not a member of SNA(" << spec.n << "): " << *violation << "\n";
    }
    return 1;
  }
  return 0;
}

int cmd_member(const Options& opt, const std::string& matrix_arg) {
  const Matrix m = parse_matrix(read_argument(matrix_arg), opt.field());
  const sna::SnaSpec spec{infer_n(opt, m), opt.field()};
  const auto violation = sna::membership_violation(m, spec);
  if (opt.as_json) {
    json j{{"n", spec.n}, {"member", !violation.has_value()}};
    j["violation"] = violation ? json(*violation) : json(nullptr);
    emit(j);
  } else if (violation) {
    std::cout << "non-member: " << *violation << "\n";
  } else {
    std::cout << "member\n";
  }
  return violation ? 1 : 0;
}

int cmd_complete(const Options& opt, const std::string& pattern_arg) {
  const Field field = opt.field();
  const sna::SnaSpec spec{opt.n, field};
  const std::string text = read_argument(pattern_arg);

  std::vector<Scalar> pattern;
  if (!text.empty()) {
    std::size_t start = 0;
    while (start <= text.size()) {
      std::size_t end = text.find(',', start);
      if (end == std::string::npos) end = text.size();
      pattern.push_back(parse_scalar(std::string_view(text).substr(start, end - start), field));
      start = end + 1;
    }
  }
  if (pattern.size() != spec.free_parameter_count()) {
    throw ParseError("pattern has " + std::to_string(pattern.size()) + " entries, SNA(" +
                     std::to_string(spec.n) + ") needs " +
                     std::to_string(spec.free_parameter_count()));
  }
  const Matrix m = sna::complete(pattern, spec);
  if (opt.as_json) {
    emit(json{{"n", spec.n}, {"matrix", matrix_to_json(m)}});
  } else {
    std::cout << format_matrix(m) << "\n";
  }
  return 0;
}

int cmd_bracket(const Options& opt, const std::string& a_arg, const std::string& b_arg) {
  const Field field = opt.field();
  const Matrix a = parse_matrix(read_argument(a_arg), field);
  const Matrix b = parse_matrix(read_argument(b_arg), field);
  const sna::SnaSpec spec{infer_n(opt, a), field};
  if (int rc = report_non_member(opt, a, spec, "left argument")) return rc;
  if (int rc = report_non_member(opt, b, spec, "right argument")) return rc;

  const Matrix value = lie::sna_bracket(a, b);
  json j{{"n", spec.n}, {"bracket", matrix_to_json(value)}, {"coefficients", nullptr}};
  std::string coeff_line;
  if (spec.n == 2) {
    const auto combo = sna::barycentric_coords(value);
    json coeffs = json::array();
    for (const auto& c : combo.coefficients) coeffs.push_back(format_scalar(c));
    j["coefficients"] = coeffs;
    coeff_line = "coefficients: " + combo.to_string();
  }
  if (opt.as_json) {
    emit(j);
  } else {
    std::cout << format_matrix(value) << "\n";
    if (!coeff_line.empty()) std::cout << coeff_line << "\n";
  }
  return 0;
}

int cmd_table(const Options& opt) {
  const sna::SnaSpec spec{2, opt.field()};
  const auto table = sna::bracket_table(spec);
  if (opt.as_json) {
    json entries = json::array();
    for (const auto& entry : table) {
      json coeffs = json::array();
      for (const auto& c : entry.combo.coefficients) coeffs.push_back(format_scalar(c));
      entries.push_back(json{{"lhs", std::string(sna::generator_names[entry.lhs_index])},
                             {"rhs", std::string(sna::generator_names[entry.rhs_index])},
                             {"coefficients", coeffs},
                             {"matrix", matrix_to_json(entry.value)}});
    }
    json names = json::array();
    for (const auto& name : sna::generator_names) names.push_back(std::string(name));
    emit(json{{"ordering", names}, {"entries", entries}});
  } else {
    for (const auto& entry : table) {
      std::cout << "[" << sna::generator_names[entry.lhs_index] << ","
                << sna::generator_names[entry.rhs_index]
                << "] = " << entry.combo.to_combination() << "\n";
    }
  }
  return 0;
}

int cmd_reduce(const Options& opt, const std::string& o_arg, const std::string& a_arg,
               const std::string& b_arg) {
  const Field field = opt.field();
  const Matrix o = parse_matrix(read_argument(o_arg), field);
  const Matrix a = parse_matrix(read_argument(a_arg), field);
  const Matrix b = parse_matrix(read_argument(b_arg), field);
  const sna::SnaSpec spec{infer_n(opt, o), field};
  if (int rc = report_non_member(opt, o, spec, "basepoint")) return rc;
  if (int rc = report_non_member(opt, a, spec, "left argument")) return rc;
  if (int rc = report_non_member(opt, b, spec, "right argument")) return rc;

  const Matrix value = lie::reduce_bracket(lie::make_sna_bracket(), o, a, b);
  if (opt.as_json) {
    emit(json{{"n", spec.n}, {"reduced", matrix_to_json(value)}});
  } else {
    std::cout << format_matrix(value) << "\n";
  }
  return 0;
}

int cmd_chevalley(const Options& opt) {
  const Field f = Field::eisenstein;
  const auto triple = sna::chevalley_triple();
  const auto bracket = lie::make_sna_bracket();
  const Matrix& o = triple.basepoint;

  struct Relation {
    const char* name;
    Matrix lhs;
    Matrix rhs;
  };
  const std::vector<Relation> relations{
      {"[h,e]_o = 2e", lie::reduce_bracket(bracket, o, triple.h, triple.e),
       affine::vspace_scale(o, Scalar::of_int(2, f), triple.e)},
      {"[h,f]_o = -2f", lie::reduce_bracket(bracket, o, triple.h, triple.f),
       affine::vspace_scale(o, Scalar::of_int(-2, f), triple.f)},
      {"[e,f]_o = h", lie::reduce_bracket(bracket, o, triple.e, triple.f), triple.h},
  };

  bool all_verified = true;
  json jrel = json::array();
  for (const auto& r : relations) {
    const bool ok = r.lhs == r.rhs;
    all_verified = all_verified && ok;
    jrel.push_back(json{{"relation", r.name}, {"verified", ok}});
  }
  if (opt.as_json) {
    emit(json{{"basepoint", matrix_to_json(o)},
              {"e", matrix_to_json(triple.e)},
              {"f", matrix_to_json(triple.f)},
              {"h", matrix_to_json(triple.h)},
              {"relations", jrel},
              {"verified", all_verified}});
  } else {
    std::cout << "o = " << format_matrix(o) << "\n";
    std::cout << "e = " << format_matrix(triple.e) << "\n";
    std::cout << "f = " << format_matrix(triple.f) << "\n";
    std::cout << "h = " << format_matrix(triple.h) << "\n";
    for (const auto& r : relations) {
      std::cout << r.name << " : " << (r.lhs == r.rhs ? "verified" : "FAILED") << "\n";
    }
  }
  return all_verified ? 0 : 1;
}

int cmd_axioms(const Options& opt) {
  const Field field = opt.field();
  const sna::SnaSpec spec{opt.n, field};
  const auto space = sna::carrier(spec);
  const auto probes = affine::default_scalar_probes(field);

  std::vector<Matrix> pool;
  pool.reserve(opt.samples);
  for (std::size_t k = 0; k < opt.samples; ++k) {
    pool.push_back(sna::random_element(spec, opt.seed + k, opt.bound));
  }

  const auto bracket = lie::make_sna_bracket();
  std::vector<AxiomReport> suites;
  suites.push_back(affine::check_heap_axioms(space, pool));
  suites.push_back(affine::check_action_axioms(space, pool, probes));
  suites.push_back(lie::check_anti_axiom(bracket, space, pool));
  suites.push_back(lie::check_jacobi_axiom(bracket, space, pool));
  suites.push_back(lie::check_bi_affine(bracket, space, pool, probes));

  // each suite must also reject its built-in mutated operation
  struct Mutation {
    const char* suite;
    AxiomReport report;
  };
  const std::span<const Matrix> mutation_pool(pool.data(), std::min<std::size_t>(pool.size(), 8));
  std::vector<Mutation> mutations;
  mutations.push_back(
      {"heap", affine::check_heap_axioms(affine::mutated_heap_space(space), mutation_pool)});
  mutations.push_back({"action", affine::check_action_axioms(affine::mutated_action_space(space),
                                                             mutation_pool, probes)});
  mutations.push_back(
      {"anti", lie::check_anti_axiom(lie::mutated_anti_bracket(), space, mutation_pool)});
  mutations.push_back(
      {"jacobi", lie::check_jacobi_axiom(lie::mutated_jacobi_bracket(), space, mutation_pool)});
  mutations.push_back({"biaffine", lie::check_bi_affine(lie::mutated_biaffine_bracket(), space,
                                                        mutation_pool, probes)});

  bool passed = true;
  for (const auto& suite : suites) passed = passed && suite.passed();
  for (const auto& m : mutations) passed = passed && !m.report.passed();

  if (opt.as_json) {
    json jsuites = json::array();
    for (const auto& suite : suites) jsuites.push_back(suite.to_json());
    json jmut = json::array();
    for (const auto& m : mutations) {
      jmut.push_back(json{{"suite", m.suite}, {"rejected", !m.report.passed()}});
    }
    emit(json{{"seed", opt.seed},
              {"samples", opt.samples},
              {"bound", opt.bound},
              {"n", opt.n},
              {"field", std::string(field_name(field))},
              {"suites", jsuites},
              {"mutations", jmut},
              {"passed", passed}});
  } else {
    std::cout << "seed: " << opt.seed << "\n";
    std::cout << "samples: " << opt.samples << " (n=" << opt.n << ", field "
              << field_name(field) << ", bound " << opt.bound << ")\n";
    for (const auto& suite : suites) {
      std::cout << suite << "\n";
      if (!suite.passed()) std::cout << suite.to_json().dump() << "\n";
    }
    for (const auto& m : mutations) {
      std::cout << "mutation " << m.suite << ": "
                << (m.report.passed() ? "NOT rejected" : "rejected") << "\n";
    }
  }
  return passed ? 0 : 1;
}

int cmd_line_iso(const Options& opt, const std::string& z1_arg, const std::string& z2_arg,
                 const std::string& lambda_arg, const std::string& mu_arg) {
  const Field field = opt.field();
  const Scalar z1 = parse_scalar(z1_arg, field);
  const Scalar z2 = parse_scalar(z2_arg, field);
  const Scalar lambda = parse_scalar(lambda_arg, field);
  const Scalar mu = parse_scalar(mu_arg, field);
  const bool preserved = lie::line_iso_obstruction(z1, z2, lambda, mu);
  if (opt.as_json) {
    emit(json{{"zeta1", format_scalar(z1)},
              {"zeta2", format_scalar(z2)},
              {"lambda", format_scalar(lambda)},
              {"mu", format_scalar(mu)},
              {"preserved", preserved}});
  } else {
    std::cout << (preserved ? "preserved" : "not preserved") << "\n";
  }
  return preserved ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  Options opt;
  CLI::App app{"exact affine matrix spaces: SNA(n) membership, completion, Lie "
               "brackets, reductions and axiom suites"};
  app.fallthrough();
  app.require_subcommand(1);

  auto* n_option = app.add_option("--n", opt.n, "space parameter n (matrices are (n+1)x(n+1))")
                       ->check(CLI::PositiveNumber);
  app.add_option("--field", opt.field_text, "ground field: q (rationals) or qw (Eisenstein)")
      ->check(CLI::IsMember({"q", "qw"}));
  app.add_option("--seed", opt.seed, "seed for randomised commands (printed with results)");
  app.add_option("--samples", opt.samples, "number of sampled elements")
      ->check(CLI::PositiveNumber);
  app.add_option("--bound", opt.bound, "numerator/denominator bound for sampled entries")
      ->check(CLI::PositiveNumber);
  app.add_flag("--json", opt.as_json, "machine-readable JSON output");

  std::string matrix_arg, a_arg, b_arg, o_arg, pattern_arg;
  std::string z1_arg, z2_arg, lambda_arg, mu_arg;

  auto* member = app.add_subcommand("member", "test membership in SNA(n)");
  member->add_option("matrix", matrix_arg, "matrix text or @file")->required();

  auto* complete = app.add_subcommand("complete", "complete a free-entry pattern to a member");
  complete->add_option("pattern", pattern_arg, "comma-separated n^2-1 scalars or @file")
      ->required();

  auto* bracket = app.add_subcommand("bracket", "Lie bracket [a,b] = ab - ba + b");
  bracket->add_option("a", a_arg, "matrix text or @file")->required();
  bracket->add_option("b", b_arg, "matrix text or @file")->required();

  app.add_subcommand("table", "bracket table of the four SNA(2) generators");

  auto* reduce = app.add_subcommand("reduce", "basepoint-reduced bracket [a,b]_o");
  reduce->add_option("--o", o_arg, "basepoint matrix text or @file")->required();
  reduce->add_option("a", a_arg, "matrix text or @file")->required();
  reduce->add_option("b", b_arg, "matrix text or @file")->required();

  app.add_subcommand("chevalley", "verify the sl(2) Chevalley triple over Q(w)");

  app.add_subcommand("axioms", "run heap/action/bracket/bi-affinity axiom suites on SNA(n)");

  auto* line_iso = app.add_subcommand(
      "line-iso", "does the line map (lambda, mu) intertwine the zeta1- and zeta2-brackets?");
  line_iso->add_option("zeta1", z1_arg)->required();
  line_iso->add_option("zeta2", z2_arg)->required();
  line_iso->add_option("lambda", lambda_arg)->required();
  line_iso->add_option("mu", mu_arg)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  opt.n_given = n_option->count() > 0;

  try {
    if (member->parsed()) return cmd_member(opt, matrix_arg);
    if (complete->parsed()) return cmd_complete(opt, pattern_arg);
    if (bracket->parsed()) return cmd_bracket(opt, a_arg, b_arg);
    if (app.get_subcommand("table")->parsed()) return cmd_table(opt);
    if (reduce->parsed()) return cmd_reduce(opt, o_arg, a_arg, b_arg);
    if (app.get_subcommand("chevalley")->parsed()) return cmd_chevalley(opt);
    if (app.get_subcommand("axioms")->parsed()) return cmd_axioms(opt);
    if (line_iso->parsed()) return cmd_line_iso(opt, z1_arg, z2_arg, lambda_arg, mu_arg);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
