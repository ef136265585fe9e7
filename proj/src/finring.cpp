#include "invariatus/finring.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace invariatus {

namespace {

std::string show(const Element& x) {
  std::ostringstream out;
  out << '(';
  for (Eigen::Index i = 0; i < x.size(); ++i) out << (i ? "," : "") << x(i);
  out << ')';
  return out.str();
}

void require_table_size(const FiniteAbelianGroup& g, const char* what) {
  if (g.order() > kMaxTableElements) {
    throw ResourceLimit(std::string(what) + ": " + std::to_string(g.order()) +
                        " elements exceeds the table limit");
  }
}

// Index of x + y, tabulated once per group.
class AdditionTable {
 public:
  explicit AdditionTable(const FiniteAbelianGroup& g) : n_(g.order()) {
    table_.resize(static_cast<std::size_t>(n_ * n_));
    for (Integer a = 0; a < n_; ++a) {
      const Element x = g.element_at(a);
      for (Integer b = 0; b < n_; ++b) {
        table_[static_cast<std::size_t>(a * n_ + b)] = g.index_of(add(g, x, g.element_at(b)));
      }
    }
  }
  Integer operator()(Integer a, Integer b) const {
    return table_[static_cast<std::size_t>(a * n_ + b)];
  }

 private:
  Integer n_;
  std::vector<Integer> table_;
};

}  // namespace

FiniteRing::FiniteRing() : FiniteRing(integers_mod(1)) {}

FiniteRing FiniteRing::from_table(FiniteAbelianGroup additive, std::vector<Integer> product,
                                  Integer one) {
  require_table_size(additive, "ring");
  const Integer n = additive.order();
  if (static_cast<Integer>(product.size()) != n * n) {
    throw InvalidInput("ring: multiplication table has " + std::to_string(product.size()) +
                       " entries, expected " + std::to_string(n * n));
  }
  for (Integer v : product) {
    if (v < 0 || v >= n) throw InvalidInput("ring: table entry " + std::to_string(v) + " out of range");
  }
  if (one < 0 || one >= n) throw InvalidInput("ring: unit index out of range");
  const AdditionTable plus(additive);
  const auto mul = [&](Integer a, Integer b) { return product[static_cast<std::size_t>(a * n + b)]; };
  const auto fail = [&](const char* law, std::initializer_list<Integer> at) {
    std::string msg = std::string("ring: ") + law + " fails at";
    for (Integer a : at) msg += " " + show(additive.element_at(a));
    throw InvalidInput(msg);
  };
  for (Integer a = 0; a < n; ++a) {
    if (mul(one, a) != a || mul(a, one) != a) fail("unit law", {a});
  }
  for (Integer a = 0; a < n; ++a) {
    for (Integer b = 0; b < n; ++b) {
      const Integer ab = mul(a, b);
      for (Integer c = 0; c < n; ++c) {
        if (mul(ab, c) != mul(a, mul(b, c))) fail("associativity", {a, b, c});
        if (mul(a, plus(b, c)) != plus(ab, mul(a, c))) fail("left distributivity", {a, b, c});
        if (mul(plus(a, b), c) != plus(mul(a, c), mul(b, c))) fail("right distributivity", {a, b, c});
      }
    }
  }
  return FiniteRing(std::make_shared<const Rep>(Rep{std::move(additive), std::move(product), one}));
}

Element FiniteRing::multiply(const Element& x, const Element& y) const {
  const auto& g = additive();
  return g.element_at(multiply_index(g.index_of(x), g.index_of(y)));
}

FiniteRing make_ring(const FiniteAbelianGroup& additive, const BinaryOp& multiply,
                     const Element& one) {
  require_table_size(additive, "ring");
  const Integer n = additive.order();
  std::vector<Integer> product(static_cast<std::size_t>(n * n));
  for (Integer a = 0; a < n; ++a) {
    const Element x = additive.element_at(a);
    for (Integer b = 0; b < n; ++b) {
      product[static_cast<std::size_t>(a * n + b)] =
          additive.index_of(reduce(additive, multiply(x, additive.element_at(b))));
    }
  }
  return FiniteRing::from_table(additive, std::move(product), additive.index_of(reduce(additive, one)));
}

FiniteRing integers_mod(Integer n) {
  if (n < 1) throw InvalidInput("integers_mod: modulus must be positive");
  const auto g = n == 1 ? FiniteAbelianGroup() : make_group({n});
  Element one = g.zero();
  if (n > 1) one(0) = 1;
  return make_ring(
      g,
      [&](const Element& x, const Element& y) {
        Element z = x;
        if (n > 1) z(0) = x(0) * y(0) % n;
        return z;
      },
      one);
}

FiniteModule::FiniteModule() : FiniteModule(zero_module(FiniteRing())) {}

FiniteModule FiniteModule::from_table(FiniteAbelianGroup additive, FiniteRing ring,
                                      std::vector<Integer> action) {
  require_table_size(additive, "module");
  const Integer n = additive.order();
  const Integer r = ring.size();
  if (static_cast<Integer>(action.size()) != n * r) {
    throw InvalidInput("module: action table has " + std::to_string(action.size()) +
                       " entries, expected " + std::to_string(n * r));
  }
  for (Integer v : action) {
    if (v < 0 || v >= n) throw InvalidInput("module: table entry " + std::to_string(v) + " out of range");
  }
  const AdditionTable plus_m(additive);
  const AdditionTable plus_r(ring.additive());
  const auto act = [&](Integer x, Integer s) { return action[static_cast<std::size_t>(x * r + s)]; };
  const auto fail = [&](const char* law, Integer x, Integer y, std::initializer_list<Integer> rs) {
    std::string msg = std::string("module: ") + law + " fails at " + show(additive.element_at(x));
    if (y >= 0) msg += " " + show(additive.element_at(y));
    for (Integer s : rs) msg += " " + show(ring.additive().element_at(s));
    throw InvalidInput(msg);
  };
  for (Integer x = 0; x < n; ++x) {
    if (act(x, ring.one_index()) != x) fail("unit law", x, -1, {});
  }
  for (Integer x = 0; x < n; ++x) {
    for (Integer s = 0; s < r; ++s) {
      const Integer xs = act(x, s);
      for (Integer y = 0; y < n; ++y) {
        if (act(plus_m(x, y), s) != plus_m(xs, act(y, s))) fail("additivity in the element", x, y, {s});
      }
      for (Integer t = 0; t < r; ++t) {
        if (act(x, plus_r(s, t)) != plus_m(xs, act(x, t))) fail("additivity in the scalar", x, -1, {s, t});
        if (act(x, ring.multiply_index(s, t)) != act(xs, t)) fail("associativity", x, -1, {s, t});
      }
    }
  }
  return FiniteModule(
      std::make_shared<const Rep>(Rep{std::move(additive), std::move(ring), std::move(action)}));
}

Element FiniteModule::act(const Element& x, const Element& r) const {
  const auto& g = additive();
  return g.element_at(act_index(g.index_of(x), ring().additive().index_of(r)));
}

bool FiniteModule::is_submodule(const Subgroup& h) const {
  if (!(h.ambient() == additive())) return false;
  const auto& rg = ring().additive();
  for (const Element& b : h.basis()) {
    for (int i = 0; i < rg.rank(); ++i) {
      if (!h.contains(act(b, rg.generator(i)))) return false;
    }
  }
  return true;
}

Subgroup FiniteModule::generate(std::span<const Element> gens) const {
  Subgroup h = span(additive(), gens);
  const auto& rg = ring().additive();
  for (;;) {
    std::vector<Element> more = h.basis();
    for (const Element& b : h.basis()) {
      for (int i = 0; i < rg.rank(); ++i) more.push_back(act(b, rg.generator(i)));
    }
    Subgroup next = span(additive(), more);
    if (next == h) return h;
    h = std::move(next);
  }
}

FiniteModule make_module(const FiniteAbelianGroup& additive, const FiniteRing& ring,
                         const BinaryOp& act) {
  require_table_size(additive, "module");
  const Integer n = additive.order();
  const Integer r = ring.size();
  std::vector<Integer> action(static_cast<std::size_t>(n * r));
  for (Integer x = 0; x < n; ++x) {
    const Element ex = additive.element_at(x);
    for (Integer s = 0; s < r; ++s) {
      action[static_cast<std::size_t>(x * r + s)] =
          additive.index_of(reduce(additive, act(ex, ring.additive().element_at(s))));
    }
  }
  return FiniteModule::from_table(additive, ring, std::move(action));
}

FiniteModule regular_module(const FiniteRing& ring) {
  return FiniteModule::from_table(ring.additive(), ring, ring.table());
}

FiniteModule zero_module(const FiniteRing& ring) {
  return FiniteModule::from_table(FiniteAbelianGroup(), ring,
                                  std::vector<Integer>(static_cast<std::size_t>(ring.size()), 0));
}

std::vector<Subgroup> enumerate_submodules(const FiniteModule& m) {
  std::vector<Subgroup> out;
  for (auto& h : enumerate_subgroups(m.additive())) {
    if (m.is_submodule(h)) out.push_back(std::move(h));
  }
  return out;
}

Subgroup module_socle(const FiniteModule& m) {
  const auto subs = enumerate_submodules(m);
  Subgroup socle = Subgroup::zero(m.additive());
  for (const auto& s : subs) {
    if (s.is_zero()) continue;
    const bool minimal = std::none_of(subs.begin(), subs.end(), [&](const Subgroup& t) {
      return !t.is_zero() && t.order() < s.order() && is_subgroup_of(t, s);
    });
    if (minimal) socle = sum(socle, s);
  }
  return socle;
}

QuotientModule quotient_module(const FiniteModule& m, const Subgroup& s) {
  if (!m.is_submodule(s)) throw InvalidInput("quotient_module: " + s.to_string() + " is not a submodule");
  auto pres = quotient(m.additive(), s);
  auto mod = make_module(pres.group, m.ring(), [&](const Element& y, const Element& r) {
    return pres.project(m.act(pres.lift(y), r));
  });
  return {std::move(mod), std::move(pres)};
}

SubmoduleModule submodule_module(const FiniteModule& m, const Subgroup& h) {
  if (!m.is_submodule(h)) throw InvalidInput("submodule_module: " + h.to_string() + " is not a submodule");
  auto g = FiniteAbelianGroup::from_invariant_factors(h.shape());
  auto mod = make_module(g, m.ring(), [&](const Element& y, const Element& r) {
    return h.coordinates(m.act(h.combine(y), r));
  });
  std::vector<Element> images;
  const auto whole = Subgroup::whole(g);
  for (const Element& b : whole.basis()) images.push_back(h.combine(b));
  return {std::move(mod), Homomorphism(whole, m.additive(), std::move(images))};
}

DirectSumModule direct_sum_module(const FiniteModule& a, const FiniteModule& b) {
  auto ds = direct_sum(a.additive(), b.additive());
  const FiniteModule* parts[] = {&a, &b};
  auto mod = make_module(ds.group, a.ring(), [&](const Element& x, const Element& r) {
    Element y = ds.group.zero();
    for (std::size_t i = 0; i < 2; ++i) {
      y = add(ds.group, y, ds.injections[i].apply(parts[i]->act(ds.projections[i].apply(x), r)));
    }
    return y;
  });
  return {std::move(mod), std::move(ds)};
}

bool is_module_hom(const FiniteModule& source, const Homomorphism& f, const FiniteModule& target) {
  const auto& rg = source.ring().additive();
  for (const Element& b : f.domain().basis()) {
    const Element fb = f.apply(b);
    for (int i = 0; i < rg.rank(); ++i) {
      const Element r = rg.generator(i);
      if (f.apply(source.act(b, r)) != target.act(fb, r)) return false;
    }
  }
  return true;
}

void for_each_module_hom(const FiniteModule& source, const Subgroup& domain,
                         const FiniteModule& target, const HomVisitor& visit) {
  if (!source.is_submodule(domain)) {
    throw InvalidInput("module homs: " + domain.to_string() + " is not a submodule");
  }
  for_each_hom(domain, target.additive(), [&](const Homomorphism& f) {
    return !is_module_hom(source, f, target) || visit(f);
  });
}

void for_each_module_mono(const FiniteModule& source, const Subgroup& domain,
                          const FiniteModule& target, const HomVisitor& visit) {
  if (!source.is_submodule(domain)) {
    throw InvalidInput("module homs: " + domain.to_string() + " is not a submodule");
  }
  for_each_mono(domain, target.additive(), [&](const Homomorphism& f) {
    return !is_module_hom(source, f, target) || visit(f);
  });
}

std::vector<Homomorphism> enumerate_module_homs(const FiniteModule& source, const Subgroup& domain,
                                                const FiniteModule& target) {
  std::vector<Homomorphism> out;
  for_each_module_hom(source, domain, target, [&](const Homomorphism& f) {
    out.push_back(f);
    return true;
  });
  return out;
}

std::vector<Homomorphism> enumerate_module_homs(const FiniteModule& source,
                                                const FiniteModule& target) {
  return enumerate_module_homs(source, Subgroup::whole(source.additive()), target);
}

bool modules_isomorphic(const FiniteModule& a, const FiniteModule& b) {
  if (!(a.additive() == b.additive())) return false;
  bool found = false;
  for_each_module_mono(a, Subgroup::whole(a.additive()), b, [&](const Homomorphism&) {
    found = true;
    return false;
  });
  return found;
}

InvarianceCheck check_module_property(const FiniteModule& m, const Subgroup& h, Property p) {
  if (!m.is_submodule(h)) throw InvalidInput(h.to_string() + " is not a submodule");
  return check_by_enumeration(ModuleCategory(m), h, p);
}

FiniteRing triangular_ring() {
  const auto g = make_group({2, 2, 2, 2, 2});
  Element one = g.zero();
  one << 1, 0, 0, 1, 1;
  return make_ring(
      g,
      [](const Element& r, const Element& s) {
        Element t(5);
        t << r(0) * s(0), r(0) * s(1) + r(1) * s(3), r(0) * s(2) + r(2) * s(4), r(3) * s(3),
            r(4) * s(4);
        return t;
      },
      one);
}

FiniteModule row_module() {
  return make_module(make_group({2, 2, 2}), triangular_ring(), [](const Element& x, const Element& s) {
    Element y(3);
    y << x(0) * s(0), x(0) * s(1) + x(1) * s(3), x(0) * s(2) + x(2) * s(4);
    return y;
  });
}

namespace {

Element row(Integer a, Integer b, Integer c) {
  Element x(3);
  x << a, b, c;
  return x;
}

void require_fact(bool ok, const char* what) {
  if (!ok) throw std::logic_error(std::string("counterexample construction: ") + what);
}

std::size_t count_module_homs(const FiniteModule& a, const FiniteModule& b) {
  return enumerate_module_homs(a, b).size();
}

}  // namespace

StrictNotStrongExample build_strict_not_strong_example() {
  StrictNotStrongExample ex;
  ex.m = row_module();
  ex.ring = ex.m.ring();
  const auto& g = ex.m.additive();
  ex.s1 = span(g, {row(0, 1, 0)});
  ex.s2 = span(g, {row(0, 0, 1)});
  ex.submodules = enumerate_submodules(ex.m);
  ex.k = quotient_module(ex.m, ex.s2);
  ex.l = quotient_module(ex.m, ex.s1);
  ex.top = quotient_module(ex.m, sum(ex.s1, ex.s2));
  ex.kl = direct_sum_module(ex.k.module, ex.l.module);

  ex.phi = ex.k.presentation.projection;
  ex.psi = ex.l.presentation.projection;
  const auto& sum_group = ex.kl.sum.group;
  std::vector<Element> rho_images;
  const auto whole = Subgroup::whole(g);
  for (const Element& b : whole.basis()) {
    rho_images.push_back(add(sum_group, ex.kl.sum.injections[0].apply(ex.phi.apply(b)),
                             ex.kl.sum.injections[1].apply(ex.psi.apply(b))));
  }
  ex.rho = Homomorphism(whole, sum_group, std::move(rho_images));
  ex.rho_image = ex.rho.image();

  ex.hom_m_k = count_module_homs(ex.m, ex.k.module);
  ex.hom_m_l = count_module_homs(ex.m, ex.l.module);
  ex.hom_m_kl = count_module_homs(ex.m, ex.kl.module);
  std::vector<Homomorphism> monos;
  for_each_module_mono(ex.m, Subgroup::whole(g), ex.kl.module, [&](const Homomorphism& f) {
    monos.push_back(f);
    return true;
  });
  ex.mono_m_kl = monos.size();

  ex.strict = check_module_property(ex.kl.module, ex.rho_image, Property::StrictlyInvariant);
  ex.strong = check_module_property(ex.kl.module, ex.rho_image, Property::StronglyInvariant);

  // rho(M) -> M is the inverse of rho on its image.
  std::vector<Element> epi_images;
  for (const Element& b : ex.rho_image.basis()) {
    Element pre = g.zero();
    for (const Element& x : elements(g)) {
      if (ex.rho.apply(x) == b) pre = x;
    }
    epi_images.push_back(ex.kl.sum.injections[0].apply(ex.phi.apply(pre)));
  }
  ex.epi_witness = Homomorphism(ex.rho_image, sum_group, std::move(epi_images));

  ex.rho_image_splits =
      sum(intersect(ex.rho_image, ex.kl.sum.injections[0].image()),
          intersect(ex.rho_image, ex.kl.sum.injections[1].image())) == ex.rho_image;

  const auto s1_mod = submodule_module(ex.m, ex.s1).module;
  const auto s2_mod = submodule_module(ex.m, ex.s2).module;
  ex.top_isomorphic_to_s1 = modules_isomorphic(ex.top.module, s1_mod);
  ex.top_isomorphic_to_s2 = modules_isomorphic(ex.top.module, s2_mod);
  ex.s1_isomorphic_to_s2 = modules_isomorphic(s1_mod, s2_mod);

  require_fact(ex.ring.size() == 32, "ring has 32 elements");
  require_fact(ex.m.size() == 8, "M has 8 elements");
  require_fact(ex.submodules.size() == 5, "M has 5 submodules");
  require_fact(ex.hom_m_k == 2 && ex.hom_m_l == 2, "Hom(M,K) and Hom(M,L) have 2 elements");
  require_fact(ex.hom_m_kl == ex.hom_m_k * ex.hom_m_l, "Hom(M,KxL) is the product");
  require_fact(ex.rho.is_injective(), "rho is injective");
  require_fact(ex.mono_m_kl == 1 && monos.front() == ex.rho, "rho is the only monomorphism");
  require_fact(ex.strict.holds, "rho(M) is strictly invariant");
  require_fact(!ex.strong.holds, "rho(M) is not strongly invariant");
  require_fact(is_module_hom(ex.kl.module, ex.epi_witness, ex.kl.module) &&
                   !ex.epi_witness.maps_into(ex.rho_image),
               "M -> K -> K x 0 leaves rho(M)");
  return ex;
}

NonTransitiveExample build_non_transitive_example() {
  const auto m = row_module();
  const auto& g = m.additive();
  const auto s1 = span(g, {row(0, 1, 0)});
  const auto s2 = span(g, {row(0, 0, 1)});
  const auto kq = quotient_module(m, s2);

  NonTransitiveExample ex;
  ex.k = kq.module;
  ex.s_in_k = kq.presentation.image_of(s1);
  ex.s = submodule_module(m, s1).module;
  ex.s_strict_in_k = check_module_property(ex.k, ex.s_in_k, Property::StrictlyInvariant).holds;

  ex.m1 = direct_sum_module(ex.k, ex.s);
  const auto s_whole = Subgroup::whole(ex.s.additive());
  ex.s_zero = ex.m1.sum.embed(0, ex.s_in_k);
  ex.k_zero = ex.m1.sum.embed(0, Subgroup::whole(ex.k.additive()));
  ex.socle1 = module_socle(ex.m1.module);
  ex.k_strict_in_m1 = check_module_property(ex.m1.module, ex.k_zero, Property::StrictlyInvariant).holds;
  ex.s_strict_in_m1 = check_module_property(ex.m1.module, ex.s_zero, Property::StrictlyInvariant).holds;
  ex.socle_strict_in_m1 =
      check_module_property(ex.m1.module, ex.socle1, Property::StrictlyInvariant).holds;
  ex.socle_is_s_plus_s = ex.socle1 == sum(ex.s_zero, ex.m1.sum.embed(1, s_whole));
  const auto meet = intersect(ex.socle1, ex.k_zero);
  ex.intersection_is_s_zero = meet == ex.s_zero;
  ex.intersection_strict = check_module_property(ex.m1.module, meet, Property::StrictlyInvariant).holds;

  ex.m2 = direct_sum_module(ex.k, ex.k);
  ex.h2 = sum(ex.m2.sum.embed(0, ex.s_in_k), ex.m2.sum.embed(1, ex.s_in_k));
  ex.l2 = sum(ex.m2.sum.embed(0, Subgroup::whole(ex.k.additive())), ex.m2.sum.embed(1, ex.s_in_k));
  ex.h2_strict = check_module_property(ex.m2.module, ex.h2, Property::StrictlyInvariant).holds;
  ex.l2_strict = check_module_property(ex.m2.module, ex.l2, Property::StrictlyInvariant).holds;

  require_fact(ex.s_strict_in_k, "S is strictly invariant in K");
  require_fact(ex.k_strict_in_m1, "K+0 is strictly invariant in K+S");
  require_fact(!ex.s_strict_in_m1, "S+0 is not strictly invariant in K+S");
  require_fact(ex.socle_is_s_plus_s && ex.socle_strict_in_m1, "socle S+S is strictly invariant");
  require_fact(ex.intersection_is_s_zero && !ex.intersection_strict,
               "(S+S) n (K+0) = S+0 is not strictly invariant");
  require_fact(ex.h2_strict, "S+S is strictly invariant in K+K");
  require_fact(!ex.l2_strict, "K+S is not strictly invariant in K+K");
  return ex;
}

}  // namespace invariatus
