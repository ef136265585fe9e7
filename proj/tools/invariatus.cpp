// invariatus: invariance properties of subgroups of finite abelian groups.
//
//   invariatus group 2x4x8 list-subgroups [--json]
//   invariatus group 2x4x8 report "0,2,0;1,0,2" [--verify] [--json]
//   invariatus group 2x4 lattice [--dot FILE|-] [--json]
//   invariatus suite examples [--jobs J] [--json] [--failures-only]
//   invariatus suite corpus --max-order N [--max-rank R] [--jobs J] [--json] [--failures-only]
//
// Exit codes: 0 pass, 1 check failure, 2 usage error, 3 resource limit.

#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "invariatus/suite.hpp"

using namespace invariatus;

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;
constexpr int kResource = 3;

const char* yes_no(bool b) { return b ? "yes" : "no"; }

int list_subgroups(const FiniteAbelianGroup& g, bool json) {
  const auto subs = enumerate_subgroups(g);
  if (json) {
    Json a = Json::array();
    for (const auto& h : subs) a.push_back(to_json(h));
    std::cout << a.dump(2) << '\n';
    return kPass;
  }
  for (const auto& h : subs) {
    std::cout << h.to_string() << "\torder " << h.order() << "\tshape " << Json(h.shape()).dump() << '\n';
  }
  return kPass;
}

void print_report(const InvarianceReport& r) {
  const auto& h = r.subject;
  std::cout << "subject: " << h.to_string() << " in " << h.ambient().to_string() << " (order " << h.order()
            << ")\n";
  for (Property p : kAllProperties) {
    std::cout << property_name(p) << ": " << yes_no(r.flag(p));
    if (r.witness(p)) std::cout << "  witness: " << r.witness(p)->to_string();
    std::cout << '\n';
  }
  std::cout << "classification:";
  if (r.classification.components.empty()) std::cout << " trivial group";
  for (const auto& c : r.classification.components) {
    std::cout << " p=" << c.prime << ' ' << verdict_name(c.verdict);
    if (c.verdict != StrictVerdict::NotStrictlyInvariant) std::cout << " n=" << c.n << "/" << c.exponent;
    std::cout << ';';
  }
  std::cout << '\n';
}

int report(const FiniteAbelianGroup& g, const std::string& gens, bool verify, bool json) {
  const auto h = span(g, parse_elements(g, gens));
  const auto r = invariance_report(h, verify ? Method::Verify : Method::Auto);
  if (json) {
    std::cout << to_json(r).dump(2) << '\n';
  } else {
    print_report(r);
  }
  return kPass;
}

int lattice(const FiniteAbelianGroup& g, const std::string& dot, bool json) {
  const auto t = strict_lattice(g);
  if (!dot.empty()) {
    if (dot == "-") {
      std::cout << to_dot(t);
    } else {
      std::ofstream out(dot);
      if (!out) throw InvalidInput("cannot write " + dot);
      out << to_dot(t);
    }
  }
  if (json) {
    std::cout << to_json(t).dump(2) << '\n';
  } else if (dot != "-") {
    std::cout << "T(" << g.to_string() << "): " << t.elements.size() << " members\n";
    for (std::size_t i = 0; i < t.elements.size(); ++i) {
      std::cout << i << '\t' << t.elements[i].to_string() << "\torder " << t.elements[i].order() << '\n';
    }
    std::cout << "covers:";
    for (auto [a, b] : t.covers) std::cout << ' ' << a << '<' << b;
    std::cout << '\n';
  }
  return t.join_failures.empty() ? kPass : kFail;
}

int suite(const SuiteResult& s, bool json, bool failures_only) {
  if (json) {
    std::cout << to_json(s).dump(2) << '\n';
  } else {
    std::cout << format_text(s, failures_only);
    std::cerr << s.name << " took " << s.seconds << " s\n";
  }
  return s.passed() ? kPass : kFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Invariance properties of subgroups of finite abelian groups"};
  app.require_subcommand(1);

  auto* group = app.add_subcommand("group", "Query one group");
  std::string spec;
  group->add_option("spec", spec, "Invariant factors, e.g. 2x4x8")->required();
  group->require_subcommand(1);
  bool json = false;

  auto* list = group->add_subcommand("list-subgroups", "All subgroups in canonical order");
  list->add_flag("--json", json, "JSON array");

  auto* rep = group->add_subcommand("report", "Invariance report for the subgroup generated by GENS");
  std::string gens;
  bool verify = false;
  rep->add_option("generators", gens, "Elements as \"a,b,c;d,e,f\"")->required();
  rep->add_flag("--verify", verify, "Cross-check closed forms against enumeration");
  rep->add_flag("--json", json, "JSON report");

  auto* lat = group->add_subcommand("lattice", "Lattice of strictly invariant subgroups");
  std::string dot;
  lat->add_option("--dot", dot, "Write a Hasse diagram in DOT to FILE, or - for stdout");
  lat->add_flag("--json", json, "JSON lattice");

  auto* st = app.add_subcommand("suite", "Verification suites");
  st->require_subcommand(1);
  unsigned jobs = 1;
  bool failures_only = false;
  auto* examples = st->add_subcommand("examples", "Worked examples, counterexamples and finite theorems");
  examples->alias("paper");
  examples->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
  examples->add_flag("--json", json, "JSON result");
  examples->add_flag("--failures-only", failures_only, "Print failing checks only");
  auto* corpus = st->add_subcommand("corpus", "Sweep every group of the corpus");
  CorpusOptions opts;
  corpus->add_option("--max-order", opts.max_order, "Largest group order")->default_val(64)->check(CLI::PositiveNumber);
  corpus->add_option("--max-rank", opts.max_rank, "Largest p-rank")->default_val(4)->check(CLI::PositiveNumber);
  corpus->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
  corpus->add_flag("--json", json, "JSON result");
  corpus->add_flag("--failures-only", failures_only, "Print failing checks only");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kUsage;
  }

  try {
    if (group->parsed()) {
      const auto g = parse_group(spec);
      if (list->parsed()) return list_subgroups(g, json);
      if (rep->parsed()) return report(g, gens, verify, json);
      return lattice(g, dot, json);
    }
    if (examples->parsed()) return suite(run_example_suite(jobs), json, failures_only);
    opts.jobs = jobs;
    return suite(run_corpus_suite(opts), json, failures_only);
  } catch (const InvalidInput& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ResourceLimit& e) {
    std::cerr << "resource limit: " << e.what() << '\n';
    return kResource;
  } catch (const std::exception& e) {
    std::cerr << "check failed: " << e.what() << '\n';
    return kFail;
  }
}
