#include "invariatus/suite.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <functional>
#include <mutex>
#include <sstream>
#include <thread>

#include "invariatus/corpus.hpp"

namespace invariatus {

namespace {

struct Outcome {
  bool passed = true;
  std::string detail;
};

struct Task {
  std::string id;
  std::string anchor;
  std::function<Outcome()> run;
};

// Conjecture counterexamples are collected across threads.
struct Shared {
  std::mutex mutex;
  std::vector<std::string> counterexamples;
  void report(std::string s) {
    std::lock_guard lock(mutex);
    counterexamples.push_back(std::move(s));
  }
};

std::vector<CheckResult> run_tasks(const std::vector<Task>& tasks, unsigned jobs) {
  std::vector<CheckResult> out(tasks.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr resource_error;
  std::mutex error_mutex;
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < tasks.size();) {
      const Task& t = tasks[i];
      CheckResult r{t.id, t.anchor, false, ""};
      try {
        const Outcome o = t.run();
        r.passed = o.passed;
        r.detail = o.detail;
      } catch (const ResourceLimit&) {
        std::lock_guard lock(error_mutex);
        if (!resource_error) resource_error = std::current_exception();
      } catch (const std::exception& e) {
        r.detail = std::string("exception: ") + e.what();
      }
      out[i] = std::move(r);
    }
  };
  const unsigned n = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(tasks.size())));
  std::vector<std::thread> pool;
  for (unsigned k = 1; k < n; ++k) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (resource_error) std::rethrow_exception(resource_error);
  std::sort(out.begin(), out.end(), [](const CheckResult& a, const CheckResult& b) { return a.id < b.id; });
  return out;
}

Outcome expect(bool ok, std::string detail = {}) { return {ok, std::move(detail)}; }

Element vec(std::initializer_list<Integer> xs) {
  Element e(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (Integer x : xs) e(i++) = x;
  return e;
}

std::vector<Subgroup> socle_chain(const FiniteAbelianGroup& g, Integer p) {
  std::vector<Subgroup> out;
  for (Integer q = 1;; q *= p) {
    const auto s = n_socle(g, q);
    if (out.empty() || !(out.back() == s)) out.push_back(s);
    if (s.is_whole()) return out;
  }
}

std::string where(const FiniteAbelianGroup& g, const Subgroup& h) {
  return h.to_string() + " in " + g.to_string();
}

// Per-group laws. Each returns an empty string on success.

std::string law_chart(const FiniteAbelianGroup& g) {
  const auto r = verify_implication_chart(g);
  return r.passed() ? "" : r.violations.front();
}

std::string law_verify(const FiniteAbelianGroup& g) {
  for (const auto& h : enumerate_subgroups(g)) {
    for (Property p : kAllProperties) check_property(h, p, Method::Verify);
    if (!(classify_strict(h).strictly_invariant() == is_strictly_invariant(h, Method::Exhaustive).holds)) {
      return "classifier disagrees on " + where(g, h);
    }
  }
  return "";
}

std::string law_lattice(const FiniteAbelianGroup& g, std::string& note) {
  const auto t = strict_lattice(g, Method::Verify);
  if (!t.join_failures.empty()) return "sum leaves T(G)";
  for (std::size_t i = 0; i < t.elements.size(); ++i) {
    for (std::size_t j = 0; j < t.elements.size(); ++j) {
      const auto m = t.meet[i][j];
      if (m == StrictLattice::kNone ||
          !is_subgroup_of(t.elements[m], intersect(t.elements[i], t.elements[j]))) {
        return "meet above intersection";
      }
    }
  }
  if (!t.non_sublattice.empty()) {
    note = std::to_string(t.non_sublattice.size()) + " meets below the intersection";
  }
  return "";
}

std::string law_operator(const FiniteAbelianGroup& g) {
  const auto t = strict_lattice(g);
  std::vector<Subgroup> image;
  for (const auto& k : enumerate_subgroups(g)) {
    const auto s = mono_socle(k);
    if (!is_subgroup_of(k, s)) return "not extensive at " + where(g, k);
    if (!(mono_socle(s) == s)) return "not idempotent at " + where(g, k);
    image.push_back(s);
  }
  std::sort(image.begin(), image.end());
  image.erase(std::unique(image.begin(), image.end()), image.end());
  return image == t.elements ? "" : "image differs from T(G)";
}

std::string law_transfer(const FiniteAbelianGroup& g) {
  const auto subs = enumerate_subgroups(g);
  const auto t = strict_lattice(g);
  for (const auto& h : t.elements) {
    const auto q = quotient(g, h);
    for (const auto& k : subs) {
      if (!is_subgroup_of(h, k)) continue;
      if (!is_strongly_invariant(q.image_of(k)).holds) continue;
      if (!is_strictly_invariant(k, Method::Exhaustive).holds) return "fails at " + where(g, k);
    }
  }
  return "";
}

std::string law_summand(const FiniteAbelianGroup& g) {
  const auto subs = enumerate_subgroups(g);
  for (const auto& h : subs) {
    if (!is_direct_summand(h, &subs).is_summand) continue;
    if (is_strictly_invariant(h, Method::Exhaustive).holds != is_fully_invariant(h, Method::Exhaustive).holds) {
      return "fails at " + where(g, h);
    }
  }
  return "";
}

std::string law_conjecture(const FiniteAbelianGroup& g, Shared& shared) {
  std::string first;
  for (const auto& h : enumerate_subgroups(g)) {
    const bool strict = is_strictly_invariant(h, Method::Exhaustive).holds;
    const bool strong = is_strongly_invariant(h, Method::Exhaustive).holds;
    if (strict && !strong) shared.report(where(g, h));
    if (strict != strong && first.empty()) first = "differs at " + where(g, h);
  }
  return first;
}

std::string law_cyclic(const FiniteAbelianGroup& g) {
  const auto r = all_subgroups_strictly_invariant(g);
  return r.agrees() ? "" : "brute force says " + std::string(r.brute_force ? "yes" : "no");
}

std::string law_socles(const FiniteAbelianGroup& g) {
  const auto primes = g.primes();
  const auto t = strict_lattice(g, Method::Exhaustive);
  if (primes.empty()) return t.elements.size() == 1 ? "" : "trivial group has a proper member";
  return t.elements == socle_chain(g, primes.front()) ? "" : "T(G) is not the socle chain";
}

std::string law_decomposition(const DirectSum& ds) {
  for (const auto& h : enumerate_subgroups(ds.group)) {
    const auto r = check_decomposition(ds, h);
    if (!r.passed()) return "fails at " + where(ds.group, h);
  }
  return "";
}

std::string law_corollary(const FiniteAbelianGroup& g) {
  for (const auto& h : enumerate_subgroups(g)) {
    if (!check_corollary_ch(h).passed()) return "fails at " + where(g, h);
  }
  return "";
}

Outcome from_law(const std::string& failure) { return {failure.empty(), failure}; }

bool is_p_group(const FiniteAbelianGroup& g) { return g.primes().size() == 1; }

std::vector<Task> corpus_tasks(const std::vector<FiniteAbelianGroup>& groups, Shared& shared,
                               const std::string& prefix) {
  std::vector<Task> tasks;
  char index[16];
  std::size_t n = 0;
  for (const auto& g : groups) {
    std::snprintf(index, sizeof index, "%04zu", n++);
    const std::string base = prefix + index + "-" + g.to_string() + "/";
    tasks.push_back({base + "chart", "implication chart on every subgroup", [g] { return from_law(law_chart(g)); }});
    tasks.push_back({base + "verify", "closed forms and classifier match enumeration",
                     [g] { return from_law(law_verify(g)); }});
    tasks.push_back({base + "lattice", "strictly invariant subgroups closed under sums", [g] {
                       std::string note;
                       const auto failure = law_lattice(g, note);
                       return failure.empty() ? Outcome{true, note} : Outcome{false, failure};
                     }});
    tasks.push_back({base + "operator", "mono socle extensive, idempotent, onto T(G)",
                     [g] { return from_law(law_operator(g)); }});
    tasks.push_back({base + "transfer", "H in T(G), K/H strongly invariant implies K in T(G)",
                     [g] { return from_law(law_transfer(g)); }});
    tasks.push_back({base + "summand", "direct summands: strict iff fully invariant",
                     [g] { return from_law(law_summand(g)); }});
    tasks.push_back({base + "conjecture", "strictly invariant iff strongly invariant",
                     [g, &shared] { return from_law(law_conjecture(g, shared)); }});
    tasks.push_back({base + "cyclic", "all subgroups strictly invariant iff cyclic",
                     [g] { return from_law(law_cyclic(g)); }});
    tasks.push_back({base + "consequences", "consequences of strict invariance",
                     [g] { return from_law(law_corollary(g)); }});
    if (is_p_group(g)) {
      tasks.push_back({base + "socles", "T(G) is the chain of G[p^n]", [g] { return from_law(law_socles(g)); }});
    }
    if (g.order() % 2 == 1 && g.rank() >= 2) {
      tasks.push_back({base + "decomposition", "strictly invariant subgroups of A+B split", [g] {
                         std::vector<Integer> rest(g.invariant_factors().begin() + 1, g.invariant_factors().end());
                         const auto ds = direct_sum(make_group({g.factor(0)}), make_group(rest));
                         return from_law(law_decomposition(ds));
                       }});
    }
  }
  return tasks;
}

// Sweeps whose subject is a whole family of groups.
Outcome sweep(const std::vector<FiniteAbelianGroup>& groups,
              const std::function<std::string(const FiniteAbelianGroup&)>& law) {
  for (const auto& g : groups) {
    const auto failure = law(g);
    if (!failure.empty()) return {false, g.to_string() + ": " + failure};
  }
  return {true, std::to_string(groups.size()) + " groups"};
}

std::vector<Task> example_tasks(Shared& shared) {
  std::vector<Task> t;
  t.push_back({"example/01-mixed-2x4x8", "characteristic but neither fully nor strictly invariant", [] {
                 const auto g = make_group({2, 4, 8});
                 const Element gens[] = {vec({0, 2, 0}), vec({1, 0, 2})};
                 const Element imgs[] = {vec({1, 0, 0}), vec({0, 1, 0})};
                 const auto h = span(g, gens);
                 const auto r = invariance_report(h, Method::Verify);
                 const auto f = Homomorphism::from_generator_images(h, g, gens, imgs);
                 return expect(r.flag(Property::Characteristic) && r.flag(Property::InjectiveInvariant) &&
                                   !r.flag(Property::FullyInvariant) &&
                                   !r.flag(Property::StrictlyInvariant) && f.is_injective() &&
                                   !f.maps_into(h),
                               "2a2 -> a1, a1+2a3 -> a2 leaves H");
               }});
  t.push_back({"example/02-quotient-2x4", "socle strictly invariant, its image in G/2K not", [] {
                 const auto m = make_group({2, 4});
                 const auto socle = n_socle(m, 2);
                 const auto q = quotient(m, span(m, {vec({0, 2})}));
                 return expect(is_strictly_invariant(socle, Method::Verify).holds &&
                               q.group == make_group({2, 2}) &&
                               !is_strictly_invariant(q.image_of(socle), Method::Verify).holds);
               }});
  t.push_back({"example/03-coordinate-2x2", "coordinate summand is neither characteristic nor strongly invariant", [] {
                 const auto g = make_group({2, 2});
                 const auto h = span(g, {vec({1, 0})});
                 const auto c = is_direct_summand(h);
                 return expect(!is_characteristic(h).holds && !is_strongly_invariant(h, Method::Verify).holds &&
                               c.is_summand && *c.complement == span(g, {vec({0, 1})}));
               }});
  t.push_back({"example/04-socle-fully-invariant", "G[2] fully invariant in 2-groups up to 64", [] {
                 return sweep(p_group_corpus(2, 64, 4), [](const FiniteAbelianGroup& g) {
                   return is_fully_invariant(n_socle(g, 2), Method::Verify).holds ? "" : "G[2] not fully invariant";
                 });
               }});
  t.push_back({"example/05-socle-operators", "mono socle and hom socle examples", [] {
                 const auto g = make_group({2, 4});
                 const auto z4 = make_group({4});
                 return expect(mono_socle(span(g, {vec({1, 0})})) == n_socle(g, 2) &&
                               hom_socle(z4, Subgroup::whole(make_group({2})), Method::Verify) ==
                                   span(z4, {vec({2})}));
               }});
  t.push_back({"example/06-lattices", "T(2x4) is a 3-chain, T(16) a 5-chain, T(1) a point", [] {
                 const auto a = strict_lattice(make_group({2, 4}), Method::Verify);
                 const auto b = strict_lattice(make_group({16}), Method::Verify);
                 const auto c = strict_lattice(FiniteAbelianGroup(), Method::Verify);
                 return expect(a.elements.size() == 3 && a.covers.size() == 2 && b.elements.size() == 5 &&
                               b.covers.size() == 4 && c.elements.size() == 1);
               }});
  t.push_back({"example/07-classifier", "G[4] in 2x4x8 is a socle", [] {
                 const auto c = classify_strict(n_socle(make_group({2, 4, 8}), 4));
                 return expect(c.components.size() == 1 && c.components[0].verdict == StrictVerdict::Socle &&
                               c.components[0].n == 2);
               }});
  t.push_back({"example/08-consequences", "consequences of strict invariance for G[2] in 2x4", [] {
                 return expect(check_corollary_ch(n_socle(make_group({2, 4}), 2)).passed());
               }});
  t.push_back({"ring/01-strict-not-strong", "strictly but not strongly invariant submodule", [] {
                 const auto ex = build_strict_not_strong_example();
                 std::ostringstream d;
                 d << "|R|=" << ex.ring.size() << " submodules(M)=" << ex.submodules.size()
                   << " |Hom(M,K)|=" << ex.hom_m_k << " |Hom(M,L)|=" << ex.hom_m_l
                   << " |Hom(M,KxL)|=" << ex.hom_m_kl << " monos=" << ex.mono_m_kl;
                 return expect(!ex.rho_image_splits, d.str());
               }});
  t.push_back({"ring/02-non-transitive", "non-transitivity, intersection and H <= L failures", [] {
                 build_non_transitive_example();
                 return expect(true);
               }});
  t.push_back({"ring/03-simple-top", "M/(S1+S2) is isomorphic to neither S1 nor S2", [] {
                 const auto ex = build_strict_not_strong_example();
                 return expect(!ex.top_isomorphic_to_s1 && !ex.top_isomorphic_to_s2 && !ex.s1_isomorphic_to_s2);
               }});
  t.push_back({"finite/01-p-group-socles", "T(G) = {G[p^n]} for p-groups up to 64, rank 3", [] {
                 std::vector<FiniteAbelianGroup> groups;
                 for (Integer p : {2, 3, 5}) {
                   for (auto& g : p_group_corpus(p, 64, 3)) groups.push_back(std::move(g));
                 }
                 return sweep(groups, law_socles);
               }});
  t.push_back({"finite/02-strict-is-strong", "strictly iff strongly invariant up to order 64",
               [&shared] {
                 return sweep(abelian_corpus(64, 4),
                              [&shared](const FiniteAbelianGroup& g) { return law_conjecture(g, shared); });
               }});
  t.push_back({"finite/03-all-strict-cyclic", "all subgroups strictly invariant iff cyclic, up to 48",
               [] { return sweep(abelian_corpus(48, 5), law_cyclic); }});
  t.push_back({"finite/04-odd-decomposition", "odd A+B up to 81: strictly invariant subgroups split", [] {
                 std::size_t pairs = 0;
                 for (const auto& a : abelian_corpus(27, 4)) {
                   if (a.order() % 2 == 0 || a.is_trivial()) continue;
                   for (const auto& b : abelian_corpus(81 / a.order(), 4)) {
                     if (b.order() % 2 == 0 || b.is_trivial()) continue;
                     ++pairs;
                     const auto failure = law_decomposition(direct_sum(a, b));
                     if (!failure.empty()) return expect(false, failure);
                   }
                 }
                 return expect(true, std::to_string(pairs) + " pairs");
               }});
  t.push_back({"law/01-operator", "mono socle laws up to 32", [] { return sweep(abelian_corpus(32, 5), law_operator); }});
  t.push_back({"law/02-lattice", "sums of strictly invariant subgroups up to 32", [] {
                 return sweep(abelian_corpus(32, 5), [](const FiniteAbelianGroup& g) {
                   std::string note;
                   return law_lattice(g, note);
                 });
               }});
  t.push_back({"law/03-summand", "direct summands: strict iff fully invariant, up to 32",
               [] { return sweep(abelian_corpus(32, 5), law_summand); }});
  t.push_back({"law/04-chart", "implication chart up to 32", [] { return sweep(abelian_corpus(32, 5), law_chart); }});
  t.push_back({"law/05-transfer", "strict H and strongly invariant K/H give strict K, up to 32",
               [] { return sweep(abelian_corpus(32, 5), law_transfer); }});
  t.push_back({"law/06-squares", "H+H strict in G+G iff H strict iff H strongly invariant, up to 8", [] {
                 return sweep(abelian_corpus(8, 3), [](const FiniteAbelianGroup& g) -> std::string {
                   const auto ds = direct_sum(g, g);
                   for (const auto& h : enumerate_subgroups(g)) {
                     const auto h2 = sum(ds.embed(0, h), ds.embed(1, h));
                     const bool a = is_strictly_invariant(h2, Method::Exhaustive).holds;
                     const bool b = is_strictly_invariant(h, Method::Exhaustive).holds;
                     const bool c = is_strongly_invariant(h, Method::Exhaustive).holds;
                     if (a != b || b != c) return "fails at " + where(g, h);
                   }
                   return "";
                 });
               }});
  t.push_back({"law/07-consequences", "consequences of strict invariance up to 32",
               [] { return sweep(abelian_corpus(32, 5), law_corollary); }});
  t.push_back({"law/08-mono-socle-consequences", "consequences of the mono socle up to 16", [] {
                 return sweep(abelian_corpus(16, 4), [](const FiniteAbelianGroup& g) -> std::string {
                   for (const auto& k : enumerate_subgroups(g)) {
                     if (!check_mono_socle_corollary(k).passed()) return "fails at " + where(g, k);
                   }
                   return "";
                 });
               }});
  return t;
}

SuiteResult finish(std::string name, std::vector<CheckResult> checks, Shared& shared,
                   std::chrono::steady_clock::time_point start) {
  SuiteResult s;
  s.name = std::move(name);
  s.checks = std::move(checks);
  s.conjecture_counterexamples = std::move(shared.counterexamples);
  std::sort(s.conjecture_counterexamples.begin(), s.conjecture_counterexamples.end());
  s.conjecture_counterexamples.erase(
      std::unique(s.conjecture_counterexamples.begin(), s.conjecture_counterexamples.end()),
      s.conjecture_counterexamples.end());
  s.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return s;
}

}  // namespace

bool SuiteResult::passed() const { return failures() == 0 && conjecture_counterexamples.empty(); }

std::size_t SuiteResult::failures() const {
  return static_cast<std::size_t>(
      std::count_if(checks.begin(), checks.end(), [](const CheckResult& c) { return !c.passed; }));
}

SuiteResult run_example_suite(unsigned jobs) {
  const auto start = std::chrono::steady_clock::now();
  Shared shared;
  auto checks = run_tasks(example_tasks(shared), jobs);
  return finish("examples", std::move(checks), shared, start);
}

SuiteResult run_corpus_suite(const CorpusOptions& options) {
  if (options.max_order < 1) throw InvalidInput("corpus: max order must be positive");
  if (options.max_rank < 1) throw InvalidInput("corpus: max rank must be positive");
  const auto start = std::chrono::steady_clock::now();
  Shared shared;
  const auto groups = abelian_corpus(options.max_order, options.max_rank);
  auto checks = run_tasks(corpus_tasks(groups, shared, "corpus/"), options.jobs);
  return finish("corpus", std::move(checks), shared, start);
}

Json to_json(const SuiteResult& s) {
  Json j;
  j["suite"] = s.name;
  j["passed"] = s.passed();
  j["failures"] = s.failures();
  Json checks = Json::array();
  for (const auto& c : s.checks) {
    Json e;
    e["id"] = c.id;
    e["anchor"] = c.anchor;
    e["status"] = c.passed ? "pass" : "fail";
    e["detail"] = c.detail;
    checks.push_back(std::move(e));
  }
  j["checks"] = std::move(checks);
  j["conjecture_counterexamples"] = s.conjecture_counterexamples;
  return j;
}

std::string format_text(const SuiteResult& s, bool failures_only) {
  std::ostringstream out;
  for (const auto& c : s.checks) {
    if (failures_only && c.passed) continue;
    out << (c.passed ? "PASS " : "FAIL ") << c.id << "  " << c.anchor;
    if (!c.detail.empty()) out << " [" << c.detail << "]";
    out << '\n';
  }
  for (const auto& w : s.conjecture_counterexamples) {
    out << "!!! CONJECTURE COUNTEREXAMPLE: strictly but not strongly invariant: " << w << '\n';
  }
  out << s.name << ": " << (s.checks.size() - s.failures()) << "/" << s.checks.size() << " checks passed, "
      << s.conjecture_counterexamples.size() << " conjecture counterexamples\n";
  return out.str();
}

}  // namespace invariatus
