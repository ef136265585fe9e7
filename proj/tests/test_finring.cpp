#include <algorithm>
#include <string>

#include "doctest.h"
#include "invariatus/corpus.hpp"
#include "invariatus/finring.hpp"
#include "oracles.hpp"

using namespace invariatus;

namespace {

Element el(std::initializer_list<Integer> xs) {
  Element e(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (Integer x : xs) e(i++) = x;
  return e;
}

std::string rejection(const auto& build) {
  try {
    build();
  } catch (const InvalidInput& e) {
    return e.what();
  }
  return "";
}

bool implies(bool a, bool b) { return !a || b; }

void check_chart(const FiniteModule& m) {
  for (const auto& h : enumerate_submodules(m)) {
    bool f[5];
    for (Property p : kAllProperties) f[static_cast<int>(p)] = check_module_property(m, h, p).holds;
    const bool fully = f[0], strongly = f[1], strictly = f[2], injective = f[3], chr = f[4];
    CHECK(implies(strongly, fully));
    CHECK(implies(fully, injective));
    CHECK(implies(injective, chr));
    CHECK(implies(strongly, strictly));
    CHECK(implies(strictly, injective));
  }
}

}  // namespace

TEST_CASE("ring and module axioms") {
  const auto r = triangular_ring();
  CHECK(r.size() == 32);
  CHECK(r.one() == el({1, 0, 0, 1, 1}));
  for (Integer n : {1, 2, 6, 12}) {
    const auto z = integers_mod(n);
    CHECK(z.size() == n);
    CHECK(regular_module(z).size() == n);
  }
  CHECK(row_module().size() == 8);
  CHECK(regular_module(r).size() == 32);
}

TEST_CASE("corrupted tables are rejected with the failing law") {
  const auto r = triangular_ring();
  auto product = r.table();
  product[7 * 32 + 9] ^= 1;
  const auto msg = rejection([&] { FiniteRing::from_table(r.additive(), product, r.one_index()); });
  CHECK(msg.rfind("ring: ", 0) == 0);
  CHECK(msg.find("fails at") != std::string::npos);
  CHECK(rejection([&] { FiniteRing::from_table(r.additive(), r.table(), 0); }).find("unit law") !=
        std::string::npos);
  const auto m = row_module();
  auto action = m.table();
  action[5 * 32 + 3] ^= 2;
  CHECK(rejection([&] { FiniteModule::from_table(m.additive(), r, action); }).rfind("module: ", 0) == 0);
  auto short_table = m.table();
  short_table.pop_back();
  CHECK(!rejection([&] { FiniteModule::from_table(m.additive(), r, short_table); }).empty());
  // Addition as multiplication breaks distributivity.
  CHECK(!rejection([] {
           make_ring(make_group({4}), [](const Element& x, const Element& y) { return Element(x + y); },
                     el({0}));
         }).empty());
}

TEST_CASE("submodules of the row module") {
  const auto m = row_module();
  const auto& g = m.additive();
  const auto subs = enumerate_submodules(m);
  const auto s1 = span(g, {el({0, 1, 0})});
  const auto s2 = span(g, {el({0, 0, 1})});
  const std::vector<Subgroup> expect = [&] {
    std::vector<Subgroup> v{Subgroup::zero(g), s1, s2, sum(s1, s2), Subgroup::whole(g)};
    std::sort(v.begin(), v.end());
    return v;
  }();
  CHECK(subs == expect);
  CHECK(oracle::count_submodules(m) == 5);
  CHECK(module_socle(m) == sum(s1, s2));
  CHECK(m.generate(std::vector<Element>{el({1, 0, 0})}).is_whole());
  CHECK(m.generate(std::vector<Element>{el({0, 1, 1})}) == sum(s1, s2));
  CHECK(enumerate_submodules(zero_module(m.ring())).size() == 1);
  CHECK(enumerate_submodules(regular_module(triangular_ring())).size() ==
        oracle::count_submodules(regular_module(triangular_ring())));
}

TEST_CASE("module homomorphisms") {
  const auto ex = build_strict_not_strong_example();
  CHECK(ex.hom_m_k == 2);
  CHECK(ex.hom_m_l == 2);
  CHECK(ex.hom_m_kl == 4);
  const FiniteModule* mods[] = {&ex.m, &ex.k.module, &ex.l.module, &ex.top.module, &ex.kl.module};
  for (const auto* a : mods) {
    const auto ends = enumerate_module_homs(*a, *a);
    CHECK(std::find(ends.begin(), ends.end(), Homomorphism::identity(a->additive())) != ends.end());
    for (const auto* b : mods) {
      const auto n = enumerate_module_homs(*a, *b).size();
      CHECK(n == oracle::count_module_homs(*a, *b));
      for (const auto* c : mods) {
        if (b->size() * c->size() > 64) continue;
        const auto bc = direct_sum_module(*b, *c);
        CHECK(enumerate_module_homs(*a, bc.module).size() == n * enumerate_module_homs(*a, *c).size());
      }
    }
  }
}

TEST_CASE("simple modules have endomorphism ring F_2 and are pairwise non-isomorphic") {
  const auto ex = build_strict_not_strong_example();
  const auto s1 = submodule_module(ex.m, ex.s1).module;
  const auto s2 = submodule_module(ex.m, ex.s2).module;
  for (const auto* s : {&s1, &s2, &ex.top.module}) {
    CHECK(enumerate_submodules(*s).size() == 2);
    CHECK(enumerate_module_homs(*s, *s).size() == 2);
  }
  CHECK_FALSE(ex.top_isomorphic_to_s1);
  CHECK_FALSE(ex.top_isomorphic_to_s2);
  CHECK_FALSE(ex.s1_isomorphic_to_s2);
  CHECK(modules_isomorphic(s1, s1));
  // K and L do not split.
  CHECK(enumerate_submodules(ex.k.module).size() == 3);
  CHECK(enumerate_submodules(ex.l.module).size() == 3);
}

TEST_CASE("strictly but not strongly invariant submodule") {
  const auto ex = build_strict_not_strong_example();
  CHECK(ex.ring.size() == 32);
  CHECK(ex.submodules.size() == 5);
  CHECK(ex.rho.is_injective());
  CHECK(ex.mono_m_kl == 1);
  CHECK(ex.strict.holds);
  CHECK_FALSE(ex.strong.holds);
  REQUIRE(ex.strong.witness.has_value());
  CHECK_FALSE(ex.strong.witness->maps_into(ex.rho_image));
  CHECK(is_module_hom(ex.kl.module, *ex.strong.witness, ex.kl.module));
  CHECK(is_module_hom(ex.kl.module, ex.epi_witness, ex.kl.module));
  CHECK(ex.epi_witness.image() == ex.kl.sum.embed(0, Subgroup::whole(ex.k.module.additive())));
  CHECK_FALSE(ex.rho_image_splits);
  CHECK(enumerate_submodules(ex.kl.module).size() == 10);
  CHECK(oracle::count_submodules(ex.kl.module) == 10);
  // As an abelian group the image is nothing special.
  CHECK_FALSE(is_strictly_invariant(ex.rho_image, Method::Exhaustive).holds);
}

TEST_CASE("non-transitivity and intersection failures") {
  const auto ex = build_non_transitive_example();
  CHECK(ex.s_strict_in_k);
  CHECK(ex.k_strict_in_m1);
  CHECK_FALSE(ex.s_strict_in_m1);
  CHECK(ex.socle_is_s_plus_s);
  CHECK(ex.socle_strict_in_m1);
  CHECK(ex.intersection_is_s_zero);
  CHECK_FALSE(ex.intersection_strict);
  CHECK(ex.h2_strict);
  CHECK_FALSE(ex.l2_strict);
  CHECK(is_subgroup_of(ex.h2, ex.l2));
}

TEST_CASE("chart holds on every submodule of the constructed modules") {
  const auto ex = build_strict_not_strong_example();
  const auto nt = build_non_transitive_example();
  for (const auto* m : {&ex.m, &ex.k.module, &ex.l.module, &ex.kl.module, &nt.m1.module,
                        &nt.m2.module}) {
    check_chart(*m);
  }
}

TEST_CASE("modules over Z/e agree with abelian groups") {
  for (const auto& g : abelian_corpus(16, 3)) {
    const auto ring = integers_mod(g.exponent());
    const auto m = make_module(g, ring, [&](const Element& x, const Element& r) {
      return scale(g, r.size() ? r(0) : 0, x);
    });
    const auto subs = enumerate_subgroups(g);
    CHECK(enumerate_submodules(m) == subs);
    for (const auto& h : subs) {
      for (Property p : kAllProperties) {
        const auto a = check_module_property(m, h, p);
        const auto b = check_property(h, p, Method::Exhaustive);
        CHECK(a.holds == b.holds);
        if (!a.holds) CHECK(*a.witness == *b.witness);
      }
    }
  }
}

TEST_CASE("submodule errors") {
  const auto m = row_module();
  const auto not_sub = span(m.additive(), {el({1, 0, 0})});
  CHECK_FALSE(m.is_submodule(not_sub));
  CHECK_THROWS_AS(quotient_module(m, not_sub), InvalidInput);
  CHECK_THROWS_AS(check_module_property(m, not_sub, Property::StrictlyInvariant), InvalidInput);
  CHECK_THROWS_AS(make_module(make_group({2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2}), integers_mod(2),
                              [](const Element& x, const Element&) { return x; }),
                  ResourceLimit);
}
