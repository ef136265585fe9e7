#include "invariatus/invariance.hpp"

#include <algorithm>
#include <stdexcept>

namespace invariatus {

namespace {

InvarianceCheck trivially_true() { return {}; }

bool degenerate(const Subgroup& h) { return h.is_zero() || h.is_whole(); }

void require_agreement(const InvarianceCheck& fast, const InvarianceCheck& slow, Property p,
                       const Subgroup& h, bool compare_witness) {
  bool same = fast.holds == slow.holds;
  if (same && compare_witness && fast.witness.has_value() && slow.witness.has_value()) {
    same = *fast.witness == *slow.witness;
  }
  if (!same) {
    throw std::logic_error(std::string(property_name(p)) + ": fast and exhaustive answers differ on " +
                           h.to_string() + " in " + h.ambient().to_string());
  }
}

// Hom(H, G) is a product of the sets G[ord b_i], so the lexicographically first
// violating tuple is zero except at the last position that can leave H.
InvarianceCheck strongly_closed_form(const Subgroup& h) {
  const auto& g = h.ambient();
  const auto& shape = h.shape();
  for (std::size_t i = shape.size(); i-- > 0;) {
    for (const Element& y : torsion_elements(g, shape[i])) {
      if (h.contains(y)) continue;
      std::vector<Element> images(shape.size(), g.zero());
      images[i] = y;
      return {false, Homomorphism(h, g, std::move(images))};
    }
  }
  return trivially_true();
}

// End(G) is additive over the standard generators: f(h) = sum_j h_j f(e_j). A
// violation needs some e_j -> x with h_j x outside H; the first violating map
// in enumeration order is the elementary one at the last such position.
std::optional<InvarianceCheck> fully_closed_form(const Subgroup& h) {
  const auto& g = h.ambient();
  const Subgroup whole = Subgroup::whole(g);
  for (int j = 0; j < g.rank(); ++j) {
    if (whole.basis()[static_cast<std::size_t>(j)] != g.generator(j)) return std::nullopt;
  }
  for (int j = g.rank(); j-- > 0;) {
    for (const Element& x : torsion_elements(g, g.factor(j))) {
      bool bad = false;
      for (const Element& b : h.basis()) {
        if (b(j) != 0 && !h.contains(scale(g, b(j), x))) {
          bad = true;
          break;
        }
      }
      if (!bad) continue;
      std::vector<Element> images(static_cast<std::size_t>(g.rank()), g.zero());
      images[static_cast<std::size_t>(j)] = x;
      return InvarianceCheck{false, Homomorphism(whole, g, std::move(images))};
    }
  }
  return trivially_true();
}

InvarianceCheck exhaustive(const Subgroup& h, Property p) {
  return check_by_enumeration(AbelianCategory(h.ambient()), h, p);
}

}  // namespace

std::string_view property_name(Property p) {
  switch (p) {
    case Property::FullyInvariant: return "fully_invariant";
    case Property::StronglyInvariant: return "strongly_invariant";
    case Property::StrictlyInvariant: return "strictly_invariant";
    case Property::InjectiveInvariant: return "injective_invariant";
    case Property::Characteristic: return "characteristic";
  }
  return "?";
}

std::string_view verdict_name(StrictVerdict v) {
  switch (v) {
    case StrictVerdict::NotStrictlyInvariant: return "not_strictly_invariant";
    case StrictVerdict::Socle: return "socle";
    case StrictVerdict::FullComponent: return "full_component";
  }
  return "?";
}

InvarianceCheck is_fully_invariant(const Subgroup& h, Method m) {
  if (degenerate(h)) return trivially_true();
  if (m == Method::Exhaustive) return exhaustive(h, Property::FullyInvariant);
  auto fast = fully_closed_form(h);
  if (!fast) return exhaustive(h, Property::FullyInvariant);
  if (m == Method::Verify) {
    require_agreement(*fast, exhaustive(h, Property::FullyInvariant), Property::FullyInvariant, h,
                      true);
  }
  return *fast;
}

InvarianceCheck is_strongly_invariant(const Subgroup& h, Method m) {
  if (degenerate(h)) return trivially_true();
  if (m == Method::Exhaustive) return exhaustive(h, Property::StronglyInvariant);
  auto fast = strongly_closed_form(h);
  if (m == Method::Verify) {
    require_agreement(fast, exhaustive(h, Property::StronglyInvariant),
                      Property::StronglyInvariant, h, true);
  }
  return fast;
}

InvarianceCheck is_strictly_invariant(const Subgroup& h, Method m) {
  if (degenerate(h)) return trivially_true();
  if (m == Method::Exhaustive) return exhaustive(h, Property::StrictlyInvariant);
  if (m == Method::Verify) {
    const auto slow = exhaustive(h, Property::StrictlyInvariant);
    InvarianceCheck fast;
    fast.holds = classify_strict(h).strictly_invariant();
    require_agreement(fast, slow, Property::StrictlyInvariant, h, false);
    return slow;
  }
  if (classify_strict(h).strictly_invariant()) return trivially_true();
  // The witness still comes from the enumeration, which stops at it.
  auto out = exhaustive(h, Property::StrictlyInvariant);
  if (out.holds) {
    throw std::logic_error("strict classifier rejected " + h.to_string() +
                           " but no violating monomorphism exists");
  }
  return out;
}

InvarianceCheck is_injective_invariant(const Subgroup& h, Method) {
  if (degenerate(h)) return trivially_true();
  return exhaustive(h, Property::InjectiveInvariant);
}

InvarianceCheck is_characteristic(const Subgroup& h, Method) {
  if (degenerate(h)) return trivially_true();
  return exhaustive(h, Property::Characteristic);
}

InvarianceCheck check_property(const Subgroup& h, Property p, Method m) {
  switch (p) {
    case Property::FullyInvariant: return is_fully_invariant(h, m);
    case Property::StronglyInvariant: return is_strongly_invariant(h, m);
    case Property::StrictlyInvariant: return is_strictly_invariant(h, m);
    case Property::InjectiveInvariant: return is_injective_invariant(h, m);
    case Property::Characteristic: return is_characteristic(h, m);
  }
  return trivially_true();
}

bool StrictClassification::strictly_invariant() const {
  return std::none_of(components.begin(), components.end(), [](const PrimeVerdict& v) {
    return v.verdict == StrictVerdict::NotStrictlyInvariant;
  });
}

StrictClassification classify_strict(const Subgroup& h) {
  const auto& g = h.ambient();
  StrictClassification out;
  for (Integer p : g.primes()) {
    PrimeVerdict v;
    v.prime = p;
    v.exponent = valuation(g.exponent(), p);
    const Subgroup hp = p_part(h, p);
    Integer q = 1;
    for (int n = 0; n <= v.exponent; ++n, q *= p) {
      if (hp == n_socle(g, q)) {
        v.n = n;
        v.verdict = n == v.exponent ? StrictVerdict::FullComponent : StrictVerdict::Socle;
        break;
      }
    }
    out.components.push_back(v);
  }
  return out;
}

std::vector<std::string> InvarianceReport::chart_violations() const {
  using P = Property;
  static constexpr std::pair<P, P> kChart[] = {
      {P::StronglyInvariant, P::FullyInvariant},     {P::StronglyInvariant, P::StrictlyInvariant},
      {P::FullyInvariant, P::InjectiveInvariant},    {P::StrictlyInvariant, P::InjectiveInvariant},
      {P::InjectiveInvariant, P::Characteristic},
  };
  std::vector<std::string> out;
  for (auto [a, b] : kChart) {
    if (flag(a) && !flag(b)) {
      out.push_back(std::string(property_name(a)) + " => " + std::string(property_name(b)));
    }
  }
  return out;
}

InvarianceReport invariance_report(const Subgroup& h, Method m) {
  InvarianceReport r{h, {}, {}, classify_strict(h)};
  for (Property p : kAllProperties) {
    auto c = check_property(h, p, m);
    r.flags[static_cast<std::size_t>(p)] = c.holds;
    r.witnesses[static_cast<std::size_t>(p)] = std::move(c.witness);
  }
  if (r.flag(Property::InjectiveInvariant) != r.flag(Property::Characteristic)) {
    throw std::logic_error("injective invariance and characteristic differ on " + h.to_string());
  }
  return r;
}

Subgroup mono_socle(const Subgroup& k) {
  const auto& g = k.ambient();
  Subgroup acc = k;  // the inclusion is a monomorphism
  for_each_mono(k, g, [&](const Homomorphism& f) {
    if (!f.maps_into(acc)) acc = sum(acc, f.image());
    return !acc.is_whole();
  });
  return acc;
}

Subgroup hom_socle(const FiniteAbelianGroup& a, const Subgroup& n, Method m) {
  if (m == Method::Auto) return n_socle(a, n.exponent());
  Subgroup acc = Subgroup::zero(a);
  for_each_hom(n, a, [&](const Homomorphism& f) {
    if (!f.maps_into(acc)) acc = sum(acc, f.image());
    return !acc.is_whole();
  });
  if (m == Method::Verify && !(acc == n_socle(a, n.exponent()))) {
    throw std::logic_error("hom socle differs from the torsion subgroup of the exponent");
  }
  return acc;
}

std::optional<std::size_t> StrictLattice::index_of(const Subgroup& h) const {
  auto it = std::lower_bound(elements.begin(), elements.end(), h);
  if (it == elements.end() || !(*it == h)) return std::nullopt;
  return static_cast<std::size_t>(it - elements.begin());
}

namespace {

// Sums of G[p^n_p] over all exponent choices.
std::vector<Subgroup> structural_strict_members(const FiniteAbelianGroup& g) {
  std::vector<Subgroup> out{Subgroup::zero(g)};
  for (Integer p : g.primes()) {
    const int e = valuation(g.exponent(), p);
    std::vector<Subgroup> next;
    for (const Subgroup& s : out) {
      Integer q = 1;
      for (int n = 0; n <= e; ++n, q *= p) next.push_back(sum(s, n_socle(g, q)));
    }
    out = std::move(next);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

StrictLattice strict_lattice(const FiniteAbelianGroup& g, Method m) {
  StrictLattice t;
  t.group = g;
  if (m == Method::Auto) {
    t.elements = structural_strict_members(g);
  } else {
    for (const Subgroup& h : enumerate_subgroups(g)) {
      if (is_strictly_invariant(h, Method::Exhaustive).holds) t.elements.push_back(h);
    }
    if (m == Method::Verify && t.elements != structural_strict_members(g)) {
      throw std::logic_error("strictly invariant subgroups of " + g.to_string() +
                             " differ from the torsion socles");
    }
  }
  const std::size_t n = t.elements.size();
  t.join.assign(n, std::vector<std::size_t>(n, StrictLattice::kNone));
  t.meet.assign(n, std::vector<std::size_t>(n, StrictLattice::kNone));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const auto& a = t.elements[i];
      const auto& b = t.elements[j];
      if (auto s = t.index_of(sum(a, b))) {
        t.join[i][j] = *s;
      } else {
        t.join_failures.emplace_back(i, j);
      }
      const Subgroup cap = intersect(a, b);
      std::size_t best = StrictLattice::kNone;
      for (std::size_t k = 0; k < n; ++k) {
        if (!is_subgroup_of(t.elements[k], cap)) continue;
        if (best == StrictLattice::kNone || t.elements[k].order() > t.elements[best].order()) best = k;
      }
      // The largest member below must contain every other one.
      for (std::size_t k = 0; k < n && best != StrictLattice::kNone; ++k) {
        if (is_subgroup_of(t.elements[k], cap) && !is_subgroup_of(t.elements[k], t.elements[best])) {
          best = StrictLattice::kNone;
        }
      }
      t.meet[i][j] = best;
      if (best == StrictLattice::kNone || !(t.elements[best] == cap)) t.non_sublattice.emplace_back(i, j);
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j || !is_subgroup_of(t.elements[i], t.elements[j])) continue;
      bool covered = true;
      for (std::size_t k = 0; k < n && covered; ++k) {
        if (k == i || k == j) continue;
        if (is_subgroup_of(t.elements[i], t.elements[k]) &&
            is_subgroup_of(t.elements[k], t.elements[j])) {
          covered = false;
        }
      }
      if (covered) t.covers.emplace_back(i, j);
    }
  }
  return t;
}

AllStrictResult all_subgroups_strictly_invariant(const FiniteAbelianGroup& g) {
  AllStrictResult r;
  r.predicted = g.is_cyclic();
  for (const Subgroup& h : enumerate_subgroups(g)) {
    if (!is_strictly_invariant(h, Method::Exhaustive).holds) {
      r.brute_force = false;
      r.counterexample = h;
      break;
    }
  }
  return r;
}

ChartReport verify_implication_chart(const FiniteAbelianGroup& g) {
  ChartReport r;
  r.group = g;
  std::vector<std::pair<Property, Property>> open;
  for (Property a : kAllProperties) {
    for (Property b : kAllProperties) {
      if (a != b) open.emplace_back(a, b);
    }
  }
  for (const Subgroup& h : enumerate_subgroups(g)) {
    ++r.subgroups_checked;
    InvarianceReport rep;
    try {
      rep = invariance_report(h, Method::Exhaustive);
    } catch (const std::logic_error& e) {
      r.violations.push_back(h.to_string() + ": " + e.what());
      continue;
    }
    for (const auto& v : rep.chart_violations()) r.violations.push_back(h.to_string() + ": " + v);
    std::erase_if(open, [&](const std::pair<Property, Property>& ab) {
      if (rep.flag(ab.first) && !rep.flag(ab.second)) {
        r.separations.push_back({ab.first, ab.second, h});
        return true;
      }
      return false;
    });
  }
  return r;
}

CorollaryReport check_corollary_ch(const Subgroup& h) {
  CorollaryReport r;
  r.applicable = is_strictly_invariant(h, Method::Exhaustive).holds;
  // For H = G every clause holds outright: f(H) <= H, f(H) n H = f(H), and
  // only L = 0 meets H trivially.
  if (!r.applicable || h.is_whole()) return r;
  const auto& g = h.ambient();
  for_each_hom(h, g, [&](const Homomorphism& f) {
    if (f.is_zero()) return true;
    const Subgroup cap = intersect(f.image(), h);
    if (cap.is_zero() && r.clause2.holds) {
      r.clause2 = {false, f, std::nullopt};
    }
    bool kills = true;
    for (const Element& b : cap.basis()) {
      if (!f.apply(b).isZero()) {
        kills = false;
        break;
      }
    }
    if (kills) {
      ++r.clause1_hypothesis_met;
      if (!f.maps_into(h) && r.clause1.holds) r.clause1 = {false, f, std::nullopt};
    }
    return true;
  });
  for (const Subgroup& l : enumerate_subgroups(g)) {
    if (l.is_zero() || !intersect(l, h).is_zero()) continue;
    const auto target = FiniteAbelianGroup::from_invariant_factors(l.shape());
    if (count_homs(h, target) > 1) {
      r.clause3 = {false, std::nullopt, l};
      break;
    }
  }
  return r;
}

MonoSocleReport check_mono_socle_corollary(const Subgroup& k) {
  const auto& g = k.ambient();
  MonoSocleReport r{mono_socle(k), {}, {}, {}};
  const auto homs = enumerate_homs(k, g);
  std::vector<const Homomorphism*> into_socle;
  for (const auto& a : homs) {
    if (a.maps_into(r.socle)) into_socle.push_back(&a);
  }
  for (const auto& f : homs) {
    if (f.is_zero()) continue;
    if (r.clause2.holds && intersect(f.image(), r.socle).is_zero()) r.clause2 = {false, f, std::nullopt};
    if (f.maps_into(r.socle) || !r.clause1.holds) continue;
    for (const Homomorphism* a : into_socle) {
      std::vector<Element> diff;
      for (std::size_t i = 0; i < f.images().size(); ++i) {
        diff.push_back(subtract(g, f.images()[i], a->images()[i]));
      }
      const Homomorphism d(k, g, std::move(diff));
      if (d.is_injective()) {
        r.clause1 = {false, f, std::nullopt};
        break;
      }
    }
  }
  for (const Subgroup& h : enumerate_subgroups(g)) {
    if (h.is_zero() || !intersect(h, r.socle).is_zero()) continue;
    const auto target = FiniteAbelianGroup::from_invariant_factors(k.shape());
    if (count_homs(h, target) > 1) {
      r.clause3 = {false, std::nullopt, h};
      break;
    }
  }
  return r;
}

bool DecompositionReport::passed() const {
  if (!applicable) return true;
  const bool parts = k_strict && l_strict && socle_a_ok && socle_b_ok;
  if (!a_has_involutions) return splits && parts;
  return !splits || parts;
}

DecompositionReport check_decomposition(const DirectSum& ds, const Subgroup& h) {
  if (ds.summands.size() != 2) throw InvalidInput("decomposition needs exactly two summands");
  if (!(h.ambient() == ds.group)) throw InvalidInput("subgroup does not live in the direct sum");
  const auto& a = ds.summands[0];
  const auto& b = ds.summands[1];
  DecompositionReport r;
  r.applicable = is_strictly_invariant(h, Method::Exhaustive).holds;
  r.a_has_involutions = a.order() % 2 == 0;
  auto part = [&](std::size_t i) {
    const Subgroup inside = intersect(h, ds.injections[i].image());
    std::vector<Element> gens;
    for (const Element& x : inside.basis()) gens.push_back(ds.projections[i].apply(x));
    return span(ds.summands[i], gens);
  };
  r.k = part(0);
  r.l = part(1);
  r.splits = sum(ds.embed(0, r.k), ds.embed(1, r.l)) == h;
  r.k_strict = is_strictly_invariant(r.k, Method::Exhaustive).holds;
  r.l_strict = is_strictly_invariant(r.l, Method::Exhaustive).holds;
  r.socle_a_ok = is_subgroup_of(hom_socle(a, r.l, Method::Exhaustive), r.k);
  r.socle_b_ok = is_subgroup_of(hom_socle(b, r.k, Method::Exhaustive), r.l);
  return r;
}

}  // namespace invariatus
