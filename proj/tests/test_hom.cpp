#include "doctest.h"
#include "invariatus/corpus.hpp"
#include "invariatus/hom.hpp"
#include "oracles.hpp"

using namespace invariatus;

namespace {

Element el(std::initializer_list<Integer> xs) {
  Element e(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (Integer x : xs) e(i++) = x;
  return e;
}

std::size_t count_monos(const Subgroup& h, const FiniteAbelianGroup& g) {
  std::size_t n = 0;
  for_each_mono(h, g, [&](const Homomorphism&) {
    ++n;
    return true;
  });
  return n;
}

std::size_t count_autos(const FiniteAbelianGroup& g) {
  std::size_t n = 0;
  for_each_auto(g, [&](const Homomorphism&) {
    ++n;
    return true;
  });
  return n;
}

}  // namespace

TEST_CASE("hom counts") {
  const auto z8 = make_group({8});
  const auto h = Subgroup::whole(make_group({2, 4}));
  CHECK(count_homs(h, z8) == 8);
  CHECK(enumerate_homs(h, z8).size() == 8);
  CHECK(oracle::count_homs_by_tuples(h.ambient(), h.basis(), z8) == 8);
  const auto g = make_group({2, 4, 8});
  const auto homs0 = enumerate_homs(Subgroup::zero(g), g);
  REQUIRE(homs0.size() == 1);
  CHECK(homs0[0].is_zero());
}

TEST_CASE("mono counts") {
  const auto z2 = Subgroup::whole(make_group({2}));
  CHECK(count_monos(z2, make_group({2, 4})) == 3);
  CHECK(count_monos(Subgroup::whole(make_group({4})), make_group({2, 2})) == 0);
  const auto g = make_group({2, 4});
  bool has_identity = false;
  for_each_mono(Subgroup::whole(g), g, [&](const Homomorphism& f) {
    if (f == Homomorphism::identity(g)) has_identity = true;
    return true;
  });
  CHECK(has_identity);
}

TEST_CASE("endomorphism and automorphism counts") {
  const auto v = make_group({2, 2});
  std::size_t endos = 0;
  for_each_endo(v, [&](const Homomorphism&) {
    ++endos;
    return true;
  });
  CHECK(endos == 16);
  CHECK(count_autos(v) == 6);
  for (Integer p : {2, 3, 5, 7, 11, 13}) CHECK(count_autos(make_group({p})) == static_cast<std::size_t>(p - 1));
  CHECK(count_autos(make_group({2, 2, 2})) == 168);
  CHECK(count_autos(make_group({2, 4})) == 8);
  CHECK(count_autos(FiniteAbelianGroup()) == 1);
}

TEST_CASE("count law against exhaustive enumeration") {
  const auto corpus = abelian_corpus(16, 4);
  for (const auto& src : corpus) {
    for (const auto& h : enumerate_subgroups(src)) {
      for (const auto& g : corpus) {
        if (count_homs(h, g) > 4096) continue;
        std::size_t n = 0;
        for_each_hom(h, g, [&](const Homomorphism&) {
          ++n;
          return true;
        });
        CHECK(static_cast<Integer>(n) == count_homs(h, g));
      }
    }
  }
  for (const auto& src : abelian_corpus(12, 3)) {
    for (const auto& g : abelian_corpus(8, 3)) {
      const auto whole = Subgroup::whole(src);
      CHECK(static_cast<Integer>(oracle::count_homs_by_tuples(src, whole.basis(), g)) ==
            count_homs(whole, g));
    }
  }
}

TEST_CASE("count law up to order 64") {
  const auto corpus = abelian_corpus(64, 4);
  for (const auto& src : corpus) {
    for (const auto& g : corpus) {
      const auto whole = Subgroup::whole(src);
      if (count_homs(whole, g) > 20000) continue;
      std::size_t n = 0;
      for_each_hom(whole, g, [&](const Homomorphism&) {
        ++n;
        return true;
      });
      CHECK(static_cast<Integer>(n) == count_homs(whole, g));
    }
  }
}

TEST_CASE("enumerated maps are additive, distinct and satisfy rank-nullity") {
  for (const auto& g : abelian_corpus(16, 3)) {
    for (const auto& h : enumerate_subgroups(g)) {
      std::set<std::vector<Integer>> seen;
      std::size_t monos_seen = 0;
      for_each_hom(h, g, [&](const Homomorphism& f) {
        CHECK(oracle::additive_on_domain(f));
        CHECK(h.order() == f.image().order() * f.kernel().order());
        std::vector<Integer> key;
        for (const auto& y : f.images()) key.push_back(g.index_of(y));
        CHECK(seen.insert(key).second);
        if (f.is_injective()) {
          ++monos_seen;
          CHECK(f.kernel().is_zero());
        }
        return true;
      });
      CHECK(count_monos(h, g) == monos_seen);
    }
  }
}

TEST_CASE("mono enumeration is the injective part of hom enumeration, in order") {
  for (const auto& g : abelian_corpus(24, 3)) {
    for (const auto& h : enumerate_subgroups(g)) {
      std::vector<Homomorphism> filtered;
      for_each_hom(h, g, [&](const Homomorphism& f) {
        if (f.is_injective()) filtered.push_back(f);
        return true;
      });
      CHECK(enumerate_monos(h, g) == filtered);
    }
  }
}

TEST_CASE("monic endomorphisms are automorphisms") {
  for (const auto& g : abelian_corpus(64, 4)) {
    std::size_t monic = 0;
    for_each_monic_endo(g, [&](const Homomorphism& f) {
      CHECK(f.image().is_whole());
      ++monic;
      return true;
    });
    CHECK(monic == count_autos(g));
  }
}

TEST_CASE("early exit stops the enumeration") {
  const auto g = make_group({4, 4});
  std::size_t n = 0;
  for_each_endo(g, [&](const Homomorphism&) { return ++n < 5; });
  CHECK(n == 5);
  n = 0;
  for_each_auto(g, [&](const Homomorphism&) { return ++n < 3; });
  CHECK(n == 3);
}

TEST_CASE("image, kernel and the mixed example map") {
  const auto g = make_group({2, 4, 8});
  const Element gens[] = {el({0, 2, 0}), el({1, 0, 2})};
  const Element imgs[] = {el({1, 0, 0}), el({0, 1, 0})};
  const auto h = span(g, gens);
  const auto f = Homomorphism::from_generator_images(h, g, gens, imgs);
  CHECK(f.apply(gens[0]) == imgs[0]);
  CHECK(f.apply(gens[1]) == imgs[1]);
  CHECK(f.image().order() == 8);
  CHECK(f.is_injective());
  CHECK(oracle::additive_on_domain(f));
  CHECK_FALSE(f.maps_into(h));

  CHECK(Homomorphism::zero(h, g).kernel() == h);
  CHECK(Homomorphism::identity(g).image().is_whole());
  CHECK(Homomorphism::inclusion(h).image() == h);

  const Element bad[] = {el({0, 1, 0}), el({0, 1, 0})};
  CHECK_THROWS_AS(Homomorphism::from_generator_images(h, g, gens, bad), InvalidInput);
  CHECK_THROWS_AS(Homomorphism(Subgroup::whole(make_group({2})), g, {el({0, 1, 0})}),
                  InvalidInput);
}

TEST_CASE("composition and restriction") {
  const auto g = make_group({2, 4});
  for (const auto& h : enumerate_subgroups(g)) {
    const auto inc = Homomorphism::inclusion(h);
    for_each_endo(g, [&](const Homomorphism& f) {
      const auto c = compose(f, inc);
      const auto r = restrict(f, h);
      CHECK(c == r);
      for (const auto& x : h.elements()) CHECK(c.apply(x) == f.apply(x));
      return true;
    });
  }
  const auto f = Homomorphism::identity(g);
  CHECK_THROWS_AS(restrict(f, Subgroup::whole(make_group({2}))), InvalidInput);
}

TEST_CASE("direct sums") {
  const auto a = make_group({2, 4});
  const auto b = make_group({6});
  const auto ds = direct_sum(a, b);
  CHECK(ds.group == make_group({2, 4, 6}));
  for (std::size_t i = 0; i < 2; ++i) {
    CHECK(ds.injections[i].is_injective());
    const auto& s = ds.summands[i];
    for (const auto& x : elements(s)) {
      CHECK(ds.projections[i].apply(ds.injections[i].apply(x)) == x);
      CHECK(ds.projections[1 - i].apply(ds.injections[i].apply(x)) == ds.summands[1 - i].zero());
    }
  }
  CHECK(sum(ds.injections[0].image(), ds.injections[1].image()).is_whole());
  CHECK(intersect(ds.injections[0].image(), ds.injections[1].image()).is_zero());
  for (const auto& x : elements(ds.group)) {
    CHECK(add(ds.group, ds.injections[0].apply(ds.projections[0].apply(x)),
              ds.injections[1].apply(ds.projections[1].apply(x))) == x);
  }
  const auto h = span(a, {el({1, 2})});
  CHECK(ds.embed(0, h).order() == 2);
}
