#pragma once

// Brute-force reference computations for tests. These only use element
// indexing and coordinatewise addition, never the lattice or Smith machinery
// they are checked against.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "invariatus/finring.hpp"
#include "invariatus/group.hpp"
#include "invariatus/hom.hpp"
#include "invariatus/subgroup.hpp"

namespace oracle {

using invariatus::Element;
using invariatus::FiniteAbelianGroup;
using invariatus::Integer;

/// Subsets of a group with at most 64 elements, as bitmasks over element indices.
using Mask = std::uint64_t;

inline Element plus(const FiniteAbelianGroup& g, const Element& x, const Element& y) {
  Element r = x;
  for (int i = 0; i < g.rank(); ++i) r(i) = (x(i) + y(i)) % g.factor(i);
  return r;
}

inline Integer order_by_addition(const FiniteAbelianGroup& g, const Element& x) {
  Integer n = 1;
  Element y = x;
  while (!y.isZero()) {
    y = plus(g, y, x);
    ++n;
  }
  return n;
}

/// Closure of a set under addition (finite, so this is the generated subgroup).
inline Mask closure(const FiniteAbelianGroup& g, Mask seed) {
  Mask s = seed | 1;  // zero has index 0
  for (;;) {
    Mask next = s;
    for (Integer a = 0; a < g.order(); ++a) {
      if (!(s >> a & 1)) continue;
      for (Integer b = a; b < g.order(); ++b) {
        if (!(s >> b & 1)) continue;
        next |= Mask{1} << g.index_of(plus(g, g.element_at(a), g.element_at(b)));
      }
    }
    if (next == s) return s;
    s = next;
  }
}

inline Mask mask_of(const invariatus::Subgroup& h) {
  Mask m = 0;
  for (const Element& x : h.elements()) m |= Mask{1} << h.ambient().index_of(x);
  return m;
}

inline Mask mask_of(const FiniteAbelianGroup& g, const std::vector<Element>& xs) {
  Mask m = 0;
  for (const Element& x : xs) m |= Mask{1} << g.index_of(x);
  return m;
}

/// All subgroups by closing up one element at a time (|G| <= 64).
inline std::set<Mask> subgroups_by_closure(const FiniteAbelianGroup& g) {
  std::set<Mask> seen{1};
  std::vector<Mask> todo{1};
  while (!todo.empty()) {
    const Mask s = todo.back();
    todo.pop_back();
    for (Integer a = 0; a < g.order(); ++a) {
      if (s >> a & 1) continue;
      const Mask t = closure(g, s | Mask{1} << a);
      if (seen.insert(t).second) todo.push_back(t);
    }
  }
  return seen;
}

/// Literal enumeration of addition-closed subsets (|G| <= 16).
inline std::size_t count_closed_subsets(const FiniteAbelianGroup& g) {
  const Integer n = g.order();
  std::size_t count = 0;
  for (Mask s = 0; s < (Mask{1} << n); ++s) {
    if (!(s & 1)) continue;
    bool closed = true;
    for (Integer a = 0; a < n && closed; ++a) {
      if (!(s >> a & 1)) continue;
      for (Integer b = 0; b < n; ++b) {
        if (!(s >> b & 1)) continue;
        if (!(s >> g.index_of(plus(g, g.element_at(a), g.element_at(b))) & 1)) {
          closed = false;
          break;
        }
      }
    }
    if (closed) ++count;
  }
  return count;
}

/// Number of homomorphisms from the subgroup generated by `gens` into `g`:
/// every tuple of images is tried and kept iff the induced assignment is
/// consistent over all coefficient vectors 0 <= c_j <= ord(gens[j]), which
/// covers every relation among the generators.
inline std::size_t count_homs_by_tuples(const FiniteAbelianGroup& src,
                                        const std::vector<Element>& gens,
                                        const FiniteAbelianGroup& g) {
  std::vector<Integer> ords;
  for (const Element& x : gens) ords.push_back(order_by_addition(src, x));
  const std::size_t m = gens.size();
  std::size_t count = 0;
  std::vector<Integer> pick(m, 0);
  for (;;) {
    std::vector<Element> ys;
    for (std::size_t j = 0; j < m; ++j) ys.push_back(g.element_at(pick[j]));
    std::map<Integer, Integer> table;
    bool ok = true;
    std::vector<Integer> c(m, 0);
    for (;;) {
      Element x = src.zero();
      Element y = g.zero();
      for (std::size_t j = 0; j < m; ++j) {
        for (Integer t = 0; t < c[j]; ++t) {
          x = plus(src, x, gens[j]);
          y = plus(g, y, ys[j]);
        }
      }
      auto [it, fresh] = table.emplace(src.index_of(x), g.index_of(y));
      if (!fresh && it->second != g.index_of(y)) {
        ok = false;
        break;
      }
      std::size_t j = m;
      bool done = true;
      while (j-- > 0) {
        if (++c[j] <= ords[j]) {
          done = false;
          break;
        }
        c[j] = 0;
      }
      if (done) break;
    }
    if (ok) ++count;
    std::size_t j = m;
    bool done = true;
    while (j-- > 0) {
      if (++pick[j] < g.order()) {
        done = false;
        break;
      }
      pick[j] = 0;
    }
    if (done) break;
  }
  return count;
}

/// p^n G as a set, by multiplying every element.
inline Mask multiples(const FiniteAbelianGroup& g, Integer k) {
  Mask m = 0;
  for (Integer a = 0; a < g.order(); ++a) {
    Element x = g.element_at(a);
    Element y = g.zero();
    for (Integer t = 0; t < k; ++t) y = plus(g, y, x);
    m |= Mask{1} << g.index_of(y);
  }
  return m;
}

/// f(x + y) == f(x) + f(y) on every pair of domain elements.
inline bool additive_on_domain(const invariatus::Homomorphism& f) {
  const auto xs = f.domain().elements();
  const auto& src = f.domain().ambient();
  const auto& g = f.codomain();
  for (const Element& x : xs) {
    for (const Element& y : xs) {
      if (f.apply(plus(src, x, y)) != plus(g, f.apply(x), f.apply(y))) return false;
    }
  }
  return true;
}

/// Every homomorphism from <gens> (inside src) to g, as a table from source
/// element index to target element index. Same consistency rule as above.
template <class Visit>
void for_each_hom_table(const FiniteAbelianGroup& src, const std::vector<Element>& gens,
                        const FiniteAbelianGroup& g, Visit visit) {
  std::vector<Integer> ords;
  for (const Element& x : gens) ords.push_back(order_by_addition(src, x));
  const std::size_t m = gens.size();
  std::vector<Integer> pick(m, 0);
  for (;;) {
    std::vector<Element> ys;
    for (std::size_t j = 0; j < m; ++j) ys.push_back(g.element_at(pick[j]));
    std::map<Integer, Integer> table;
    bool ok = true;
    std::vector<Integer> c(m, 0);
    for (;;) {
      Element x = src.zero();
      Element y = g.zero();
      for (std::size_t j = 0; j < m; ++j) {
        for (Integer t = 0; t < c[j]; ++t) {
          x = plus(src, x, gens[j]);
          y = plus(g, y, ys[j]);
        }
      }
      auto [it, fresh] = table.emplace(src.index_of(x), g.index_of(y));
      if (!fresh && it->second != g.index_of(y)) {
        ok = false;
        break;
      }
      std::size_t j = m;
      bool done = true;
      while (j-- > 0) {
        if (++c[j] <= ords[j]) {
          done = false;
          break;
        }
        c[j] = 0;
      }
      if (done) break;
    }
    if (ok) visit(table);
    std::size_t j = m;
    bool done = true;
    while (j-- > 0) {
      if (++pick[j] < g.order()) {
        done = false;
        break;
      }
      pick[j] = 0;
    }
    if (done) break;
  }
}

inline bool injective_table(const std::map<Integer, Integer>& t) {
  std::set<Integer> values;
  for (auto [k, v] : t) values.insert(v);
  return values.size() == t.size();
}

using Table = std::map<Integer, Integer>;

inline std::vector<Table> hom_tables(const FiniteAbelianGroup& src, const std::vector<Element>& gens,
                                     const FiniteAbelianGroup& g) {
  std::vector<Table> out;
  for_each_hom_table(src, gens, g, [&](const Table& t) { out.push_back(t); });
  return out;
}

/// Every table (or every injective one) sends the set mh into itself.
inline bool invariant_under(const std::vector<Table>& tables, Mask mh, bool injective_only) {
  for (const Table& t : tables) {
    if (injective_only && !injective_table(t)) continue;
    for (auto [k, v] : t) {
      if ((mh >> k & 1) && !(mh >> v & 1)) return false;
    }
  }
  return true;
}

/// Tables of End(G) on the standard generators.
inline std::vector<Table> endo_tables(const FiniteAbelianGroup& g) {
  std::vector<Element> gens;
  for (int i = 0; i < g.rank(); ++i) gens.push_back(g.generator(i));
  return hom_tables(g, gens, g);
}

/// Invariance decided from tables alone. `cls` is one of "end", "hom",
/// "mono", "monic_end", "aut"; `endos` are the tables of End(G).
inline bool invariant_by_tables(const invariatus::Subgroup& h, const std::string& cls,
                                const std::vector<Table>& endos) {
  const Mask mh = mask_of(h);
  if (cls == "hom" || cls == "mono") {
    return invariant_under(hom_tables(h.ambient(), h.generators(), h.ambient()), mh, cls == "mono");
  }
  return invariant_under(endos, mh, cls != "end");
}

/// Number of elements of each order in a subset; determines the
/// isomorphism type of a finite abelian group.
inline std::map<Integer, int> order_statistics(const FiniteAbelianGroup& g, Mask m) {
  std::map<Integer, int> out;
  for (Integer a = 0; a < g.order(); ++a) {
    if (m >> a & 1) out[order_by_addition(g, g.element_at(a))]++;
  }
  return out;
}

/// How many subgroups there are of each isomorphism type.
inline std::map<std::map<Integer, int>, int> isotype_counts(const FiniteAbelianGroup& g) {
  std::map<std::map<Integer, int>, int> out;
  for (Mask s : subgroups_by_closure(g)) out[order_statistics(g, s)]++;
  return out;
}

/// A subgroup is strictly invariant in a finite group iff no other subgroup
/// is isomorphic to it (a monomorphism maps it onto such a subgroup, and an
/// isomorphism onto any such subgroup is a monomorphism).
inline bool unique_of_its_type(const invariatus::Subgroup& h,
                               const std::map<std::map<Integer, int>, int>& counts) {
  return counts.at(order_statistics(h.ambient(), mask_of(h))) == 1;
}

/// Submodules as element sets: subgroups closed under every ring element.
inline std::size_t count_submodules(const invariatus::FiniteModule& m) {
  std::size_t count = 0;
  for (Mask s : subgroups_by_closure(m.additive())) {
    bool closed = true;
    for (Integer x = 0; x < m.size() && closed; ++x) {
      if (!(s >> x & 1)) continue;
      for (Integer r = 0; r < m.ring().size(); ++r) {
        if (!(s >> m.act_index(x, r) & 1)) {
          closed = false;
          break;
        }
      }
    }
    if (closed) ++count;
  }
  return count;
}

/// Additive tables commuting with every ring element on every element.
inline std::size_t count_module_homs(const invariatus::FiniteModule& a,
                                     const invariatus::FiniteModule& b) {
  std::vector<Element> gens;
  for (int i = 0; i < a.additive().rank(); ++i) gens.push_back(a.additive().generator(i));
  std::size_t count = 0;
  for_each_hom_table(a.additive(), gens, b.additive(), [&](const Table& t) {
    for (auto [x, y] : t) {
      for (Integer r = 0; r < a.ring().size(); ++r) {
        if (t.at(a.act_index(x, r)) != b.act_index(y, r)) return;
      }
    }
    ++count;
  });
  return count;
}

}  // namespace oracle
