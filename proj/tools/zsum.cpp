// zsum: generate, analyze and verify finite commutative semigroups and
// rings with respect to their zero-sum / irreducible-sequence invariants.
//
// Exit codes: 0 success, 1 verification failure, 2 usage/input error,
// 3 resource cap exceeded.

#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "zsum/families.hpp"
#include "zsum/green.hpp"
#include "zsum/ring.hpp"
#include "zsum/search.hpp"
#include "zsum/semigroup.hpp"
#include "zsum/verify.hpp"

namespace {

using namespace zsum;

struct Input {
  Semigroup semigroup;
  std::optional<FiniteRing> ring;
};

Input load_input(const std::string& arg) {
  if (arg.find(':') != std::string::npos) {
    FamilySpec f = parse_family_spec(arg);
    return {std::move(f.semigroup), std::move(f.ring)};
  }
  nlohmann::json j;
  if (arg == "-") {
    std::cin >> j;
  } else {
    std::ifstream in(arg);
    if (!in) throw PreconditionViolated("cannot open input file \"" + arg + "\"");
    in >> j;
  }
  if (j.is_object() && j.contains("kind")) {
    FiniteRing r = FiniteRing::from_json(j);
    Semigroup s = mult_semigroup(r);
    return {std::move(s), std::move(r)};
  }
  return {Semigroup::from_json(j), std::nullopt};
}

std::string gamma_string(const std::vector<int>& factors) {
  if (factors.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i) out += 'x';
    out += std::to_string(factors[i]);
  }
  return out;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string witness_string(const Semigroup& s, const SequenceMS& t) {
  std::string out;
  bool first = true;
  for (ElementId e : t.expand()) {
    if (!first) out += ' ';
    out += s.label(e);
    first = false;
  }
  return out;
}

// The H-class / Psi / Gamma part of the per-element report; computable
// without the exhaustive search, used for partial rows when the search
// hits the node cap.
std::vector<ElementReport> green_rows(const Semigroup& s) {
  const AdjoinedSemigroup s0(s);
  const HClassDecomposition dec = h_classes(s0);
  const auto identity = s.identity();
  std::vector<ElementReport> rows(s.size());
  for (int a = 0; a < s.size(); ++a) {
    ElementReport& row = rows[a];
    row.element = a;
    const int cls = dec.class_of[a];
    row.h_class_size = static_cast<int>(dec.classes[cls].size());
    std::function<int(int)> up = [&](int u) {
      int best = 0;
      for (int v : dec.above[u]) best = std::max(best, 1 + up(v));
      return best;
    };
    row.psi = up(cls);
    const SchutzGroup sg = schutzenberger(s0, a);
    row.gamma_factors = sg.group.inv_factors;
    const int d_gamma = davenport_bruteforce(sg.group).value;
    row.eps_half = dec.class_of[s.op(a, a)] == cls;
    if (identity && a == *identity) {
      row.lower = row.upper = 0;
    } else {
      row.lower = row.eps_half ? (d_gamma + 1) / 2 : d_gamma;
      row.upper = row.psi + d_gamma - 1;
    }
  }
  return rows;
}

void emit_report(const Semigroup& s, const std::vector<ElementReport>& rows,
                 const std::string& status, const std::string& element_filter,
                 const std::string& format) {
  std::vector<const ElementReport*> selected;
  for (const ElementReport& row : rows) {
    if (!element_filter.empty() && s.label(row.element) != element_filter)
      continue;
    selected.push_back(&row);
  }
  if (!element_filter.empty() && selected.empty())
    throw PreconditionViolated("no element labelled \"" + element_filter +
                               "\"");
  if (format == "csv") {
    std::cout << "element,h_class_size,psi,gamma_factors,epsilon,lower,"
                 "upper,exact,witness,status\n";
    for (const ElementReport* row : selected) {
      std::cout << csv_field(s.label(row->element)) << ','
                << row->h_class_size << ',' << row->psi << ','
                << gamma_string(row->gamma_factors) << ','
                << (row->eps_half ? "1/2" : "1") << ',' << row->lower << ','
                << row->upper << ',' << row->exact << ','
                << csv_field(witness_string(s, row->witness)) << ',' << status
                << '\n';
    }
  } else {
    nlohmann::json out = nlohmann::json::array();
    for (const ElementReport* row : selected) {
      nlohmann::json witness = nlohmann::json::array();
      for (ElementId e : row->witness.expand()) witness.push_back(s.label(e));
      out.push_back({{"element", s.label(row->element)},
                     {"h_class_size", row->h_class_size},
                     {"psi", row->psi},
                     {"gamma_factors", row->gamma_factors},
                     {"epsilon", row->eps_half ? "1/2" : "1"},
                     {"lower", row->lower},
                     {"upper", row->upper},
                     {"exact", row->exact},
                     {"witness", witness},
                     {"status", status}});
    }
    std::cout << out.dump(2) << '\n';
  }
}

int cmd_gen(const std::string& spec) {
  FamilySpec f = parse_family_spec(spec);
  std::cout << f.semigroup.to_json().dump(2) << '\n';
  return 0;
}

int cmd_analyze(const std::string& input, const std::string& element,
                const std::string& format, const SearchOptions& opts) {
  Input in = load_input(input);
  try {
    DavenportReport rep = analyze(in.semigroup, opts);
    emit_report(in.semigroup, rep.rows, "OK", element, format);
  } catch (const SearchCapExceeded&) {
    emit_report(in.semigroup, green_rows(in.semigroup), "CAP_EXCEEDED",
                element, format);
    return 3;
  }
  return 0;
}

int cmd_verify(const std::string& suite, const std::string& corpus_filter,
               unsigned seed, const SearchOptions& opts) {
  const std::vector<SuiteResult> results =
      run_suites(suite, opts, corpus_filter, seed);
  int failures = 0;
  int checks = 0;
  for (const SuiteResult& r : results) {
    for (const CheckLine& l : r.lines) {
      std::cout << (l.pass ? "PASS" : "FAIL") << ' ' << l.entry << ' '
                << l.element << ' ' << l.detail << '\n';
      ++checks;
      if (!l.pass) ++failures;
    }
  }
  std::cout << checks << " checks, " << failures << " failures\n";
  return failures == 0 ? 0 : 1;
}

int cmd_witness(const std::string& input, const std::string& element,
                const SearchOptions& opts) {
  Input in = load_input(input);
  const Semigroup& s = in.semigroup;
  const auto a = s.element_by_label(element);
  if (!a) throw PreconditionViolated("no element labelled \"" + element + "\"");
  if (s.identity() && *a == *s.identity()) {
    std::cout << "D_a = 0 by convention\n";
    return 2;
  }
  const auto [value, witness] = relative_davenport(s, *a, opts);
  std::cout << witness_string(s, witness) << '\n';
  if (in.ring && !in.ring->is_unit(*a) && is_pir(*in.ring)) {
    SequenceMS constructive = extremal_sequence_pir(*in.ring, *a);
    if (constructive.length() != value)
      throw InternalInvariantViolation(
          "constructive witness length differs from D_a");
    std::cout << "constructive: " << witness_string(s, constructive)
              << " (equal length " << value << ")\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Zero-sum invariants of finite commutative semigroups and rings"};
  app.require_subcommand(1);

  std::string gen_spec;
  CLI::App* gen = app.add_subcommand(
      "gen", "Emit a family semigroup as JSON on standard output");
  gen->add_option("spec", gen_spec,
                  "family spec, e.g. s1:n=4,r=2 | s2:m=3 | zn:n=6 | zmod:12 "
                  "| zmodprod:2,4")
      ->required();

  std::string an_input, an_element, an_format = "csv";
  SearchOptions an_opts;
  CLI::App* an = app.add_subcommand(
      "analyze", "Per-element invariant report for a semigroup or ring");
  an->add_option("input", an_input,
                 "family spec, JSON file path, or - for standard input")
      ->required();
  an->add_option("--element", an_element, "restrict the report to one label");
  an->add_option("--format", an_format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  an->add_option("--jobs", an_opts.jobs, "worker threads (default 1)");
  an->add_option("--node-cap", an_opts.node_cap, "search node budget");

  std::string ve_suite, ve_corpus;
  unsigned ve_seed = 12345;
  SearchOptions ve_opts;
  CLI::App* ve = app.add_subcommand(
      "verify", "Run an invariant suite over the verification corpus");
  std::vector<std::string> suites = available_suites();
  suites.push_back("all");
  ve->add_option("suite", ve_suite, "suite name or all")
      ->required()
      ->check(CLI::IsMember(suites));
  ve->add_option("--corpus", ve_corpus, "restrict to one corpus entry");
  ve->add_option("--seed", ve_seed, "seed for randomized shrink checks");
  ve->add_option("--jobs", ve_opts.jobs, "worker threads (default 1)");
  ve->add_option("--node-cap", ve_opts.node_cap, "search node budget");

  std::string wi_input, wi_element;
  SearchOptions wi_opts;
  CLI::App* wi = app.add_subcommand(
      "witness", "Print a longest irreducible sequence with the given sum");
  wi->add_option("input", wi_input,
                 "family spec, JSON file path, or - for standard input")
      ->required();
  wi->add_option("--element", wi_element, "target element label")->required();
  wi->add_option("--jobs", wi_opts.jobs, "worker threads (default 1)");
  wi->add_option("--node-cap", wi_opts.node_cap, "search node budget");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (gen->parsed()) return cmd_gen(gen_spec);
    if (an->parsed()) return cmd_analyze(an_input, an_element, an_format, an_opts);
    if (ve->parsed()) return cmd_verify(ve_suite, ve_corpus, ve_seed, ve_opts);
    if (wi->parsed()) return cmd_witness(wi_input, wi_element, wi_opts);
  } catch (const SearchCapExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const BoundViolation& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const InternalInvariantViolation& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const ZsumError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
