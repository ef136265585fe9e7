#include "doctest.h"
#include "invariatus/corpus.hpp"
#include "invariatus/hom.hpp"
#include "invariatus/subgroup.hpp"
#include "oracles.hpp"

using namespace invariatus;

namespace {

Element el(std::initializer_list<Integer> xs) {
  Element e(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (Integer x : xs) e(i++) = x;
  return e;
}

}  // namespace

TEST_CASE("span of the mixed generators in 2x4x8") {
  const auto g = make_group({2, 4, 8});
  const auto h = span(g, {el({0, 2, 0}), el({1, 0, 2})});
  CHECK(h.order() == 8);
  CHECK(h.shape() == std::vector<Integer>{2, 4});
  CHECK(oracle::mask_of(h) == oracle::closure(g, oracle::mask_of(g, {el({0, 2, 0}), el({1, 0, 2})})));
  CHECK(span(g, {}).is_zero());
  const auto all = elements(g);
  CHECK(span(g, all).is_whole());
  CHECK_THROWS_AS(span(g, {el({0, 4, 0})}), InvalidInput);
  CHECK_THROWS_AS(span(g, {el({0, 1})}), InvalidInput);
}

TEST_CASE("subgroup counts") {
  CHECK(enumerate_subgroups(make_group({2, 2})).size() == 5);
  CHECK(enumerate_subgroups(make_group({7})).size() == 2);
  CHECK(enumerate_subgroups(make_group({2, 4})).size() == 8);
  CHECK(enumerate_subgroups(FiniteAbelianGroup()).size() == 1);
  CHECK(oracle::count_closed_subsets(make_group({2, 2})) == 5);
  CHECK(oracle::count_closed_subsets(make_group({2, 4})) == 8);
}

TEST_CASE("literal subset enumeration agrees up to order 16") {
  for (const auto& g : abelian_corpus(16, 4)) {
    CHECK_MESSAGE(enumerate_subgroups(g).size() == oracle::count_closed_subsets(g), g.to_string());
  }
}

TEST_CASE("enumeration matches closure oracle up to order 32") {
  for (const auto& g : abelian_corpus(32, 5)) {
    const auto subs = enumerate_subgroups(g);
    std::set<oracle::Mask> masks;
    for (const auto& h : subs) masks.insert(oracle::mask_of(h));
    CHECK_MESSAGE(masks.size() == subs.size(), g.to_string());
    CHECK_MESSAGE(masks == oracle::subgroups_by_closure(g), g.to_string());
    CHECK(std::is_sorted(subs.begin(), subs.end()));
  }
}

TEST_CASE("budget is enforced") {
  CHECK_THROWS_AS(enumerate_subgroups(make_group({2, 2, 2, 2}), 10), ResourceLimit);
  CHECK(enumerate_subgroups(make_group({2, 2, 2, 2}), 67).size() == 67);
  CHECK_THROWS_AS(enumerate_subgroups(make_group({2, 2, 3, 3}), 20), ResourceLimit);
}

TEST_CASE("basis, membership and coordinates") {
  for (const auto& g : abelian_corpus(48, 3)) {
    for (const auto& h : enumerate_subgroups(g)) {
      Integer prod = 1;
      for (std::size_t i = 0; i < h.basis().size(); ++i) {
        CHECK(order(g, h.basis()[i]) == h.shape()[i]);
        CHECK(h.shape()[i] >= 2);
        if (i > 0) CHECK(h.shape()[i] % h.shape()[i - 1] == 0);
        prod *= h.shape()[i];
      }
      CHECK(prod == h.order());
      CHECK(span(g, h.basis()) == h);
      CHECK(span(g, h.generators()) == h);
      const oracle::Mask m = oracle::mask_of(h);
      CHECK(std::popcount(m) == h.order());
      for (const auto& x : elements(g)) {
        const bool in = m >> g.index_of(x) & 1;
        CHECK(h.contains(x) == in);
        if (in) CHECK(h.combine(h.coordinates(x)) == x);
      }
    }
  }
}

TEST_CASE("equal subgroups have identical canonical forms") {
  const auto g = make_group({2, 4, 8});
  const auto a = span(g, {el({0, 2, 0}), el({1, 0, 2})});
  const auto b = span(g, {el({1, 2, 2}), el({1, 0, 6}), el({0, 0, 4})});
  CHECK(a == b);
  CHECK(a.hnf() == b.hnf());
  CHECK(a.hash() == b.hash());
  CHECK((a <=> b) == std::strong_ordering::equal);
  CHECK(a.to_string() == b.to_string());
}

TEST_CASE("sum and intersect in 2x4") {
  const auto g = make_group({2, 4});
  const auto h = span(g, {el({1, 0})});
  const auto k = span(g, {el({0, 2})});
  CHECK(sum(h, k).order() == 4);
  CHECK(intersect(h, k).is_zero());
  CHECK(sum(h, Subgroup::zero(g)) == h);
  CHECK(intersect(h, h) == h);
  CHECK_THROWS_AS(sum(h, Subgroup::zero(make_group({8}))), InvalidInput);
  CHECK_THROWS_AS(intersect(h, Subgroup::zero(make_group({8}))), InvalidInput);
}

TEST_CASE("lattice laws and product formula corpus-wide") {
  for (const auto& g : abelian_corpus(32, 4)) {
    const auto subs = enumerate_subgroups(g);
    if (subs.size() > 40) continue;  // pairs and triples below stay cheap
    for (const auto& a : subs) {
      const auto ma = oracle::mask_of(a);
      for (const auto& b : subs) {
        const auto s = sum(a, b);
        const auto i = intersect(a, b);
        const auto mb = oracle::mask_of(b);
        CHECK(oracle::mask_of(i) == (ma & mb));
        CHECK(oracle::mask_of(s) == oracle::closure(g, ma | mb));
        CHECK(a.order() * b.order() == s.order() * i.order());
        CHECK(s == sum(b, a));
        CHECK(i == intersect(b, a));
        CHECK(sum(a, i) == a);
        CHECK(intersect(a, s) == a);
        CHECK(is_subgroup_of(a, b) == ((ma & mb) == ma));
      }
    }
    for (const auto& a : subs) {
      CHECK(sum(a, a) == a);
      CHECK(intersect(a, a) == a);
    }
    for (std::size_t x = 0; x < subs.size(); x += 3) {
      for (std::size_t y = 0; y < subs.size(); y += 2) {
        for (const auto& c : subs) {
          const auto& a = subs[x];
          const auto& b = subs[y];
          CHECK(sum(sum(a, b), c) == sum(a, sum(b, c)));
          CHECK(intersect(intersect(a, b), c) == intersect(a, intersect(b, c)));
        }
      }
    }
  }
}

TEST_CASE("torsion operators") {
  const auto g = make_group({2, 4, 8});
  CHECK(n_socle(g, 2).order() == 8);
  CHECK(n_socle(g, 1).is_zero());
  CHECK(n_socle(g, 8).is_whole());
  CHECK(n_socle(g, 0).is_whole());
  CHECK_THROWS_AS(n_socle(g, -1), InvalidInput);
  for (const auto& c : abelian_corpus(60, 3)) {
    for (Integer n = 1; n <= 12; ++n) {
      oracle::Mask m = 0;
      for (const auto& x : elements(c)) {
        if (scale(c, n, x).isZero()) m |= oracle::Mask{1} << c.index_of(x);
      }
      CHECK(oracle::mask_of(n_socle(c, n)) == m);
    }
    for (Integer p : c.primes()) {
      oracle::Mask m = 0;
      for (const auto& x : elements(c)) {
        Integer o = order(c, x);
        while (o % p == 0) o /= p;
        if (o == 1) m |= oracle::Mask{1} << c.index_of(x);
      }
      CHECK(oracle::mask_of(p_component(c, p)) == m);
      for (const auto& h : enumerate_subgroups(c)) {
        CHECK(p_part(h, p) == intersect(h, p_component(c, p)));
      }
    }
  }
}

TEST_CASE("multiples") {
  const auto g = make_group({2, 4, 8});
  CHECK(oracle::mask_of(multiple(Subgroup::whole(g), 2)) == oracle::multiples(g, 2));
  CHECK(multiple(Subgroup::whole(g), 8).is_zero());
}

TEST_CASE("quotients") {
  const auto m = make_group({2, 4});
  const auto two_k = span(m, {el({0, 2})});
  const auto q = quotient(m, two_k);
  CHECK(q.group == make_group({2, 2}));
  CHECK(quotient(m, Subgroup::zero(m)).group == m);
  CHECK(quotient(m, Subgroup::whole(m)).group.is_trivial());
  CHECK_THROWS_AS(quotient(make_group({8}), two_k), InvalidInput);

  for (const auto& g : abelian_corpus(36, 3)) {
    for (const auto& h : enumerate_subgroups(g)) {
      const auto qp = quotient(g, h);
      CHECK(qp.group.order() * h.order() == g.order());
      for (const auto& x : elements(g)) {
        CHECK(qp.project(x).isZero() == h.contains(x));
        CHECK(h.contains(subtract(g, qp.lift(qp.project(x)), x)));
      }
      for (const auto& y : elements(qp.group)) CHECK(qp.project(qp.lift(y)) == y);
      for (const auto& s : enumerate_subgroups(qp.group)) {
        const auto pre = qp.preimage(s);
        CHECK(is_subgroup_of(h, pre));
        CHECK(qp.image_of(pre) == s);
        CHECK(pre.order() == s.order() * h.order());
      }
    }
  }
}

TEST_CASE("direct summands") {
  const auto g = make_group({2, 4});
  const auto r = is_direct_summand(span(g, {el({0, 2})}));
  CHECK_FALSE(r.is_summand);
  CHECK_FALSE(r.complement.has_value());
  const auto v = make_group({2, 2});
  const auto s = is_direct_summand(span(v, {el({1, 0})}));
  CHECK(s.is_summand);
  REQUIRE(s.complement.has_value());
  CHECK(*s.complement == span(v, {el({0, 1})}));
  const auto w = is_direct_summand(Subgroup::whole(g));
  CHECK(w.is_summand);
  CHECK(w.complement->is_zero());

  for (const auto& c : abelian_corpus(32, 3)) {
    const auto subs = enumerate_subgroups(c);
    for (const auto& h : subs) {
      bool brute = false;
      for (const auto& k : subs) {
        const auto mh = oracle::mask_of(h);
        const auto mk = oracle::mask_of(k);
        if ((mh & mk) == 1 && oracle::closure(c, mh | mk) == oracle::mask_of(Subgroup::whole(c))) {
          brute = true;
          break;
        }
      }
      const auto d = is_direct_summand(h, &subs);
      CHECK(d.is_summand == brute);
      if (d.is_summand) {
        CHECK(intersect(h, *d.complement).is_zero());
        CHECK(sum(h, *d.complement).is_whole());
      }
    }
  }
}
