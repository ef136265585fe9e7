#pragma once

#include <compare>
#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "invariatus/group.hpp"

namespace invariatus {

/// A subgroup H of a finite abelian group G.
///
/// H corresponds to the lattice L with d_1 Z + ... + d_k Z <= L <= Z^k; its
/// canonical form is the row-style Hermite normal form of L (k x k, upper
/// triangular, positive diagonal), so equal subgroups compare equal
/// field-for-field. An independent basis b_1, ..., b_m with
/// ord(b_1) | ... | ord(b_m) is derived from the Smith form of the relation
/// lattice and fixed once per subgroup; homomorphisms out of H are stated
/// against it.
class Subgroup {
 public:
  /// Zero subgroup of the trivial group.
  Subgroup();

  static Subgroup zero(const FiniteAbelianGroup& g);
  static Subgroup whole(const FiniteAbelianGroup& g);
  /// Trusts `hnf` to be the canonical lattice form over `g`.
  static Subgroup from_hnf(const FiniteAbelianGroup& g, Matrix<Integer> hnf);

  const FiniteAbelianGroup& ambient() const { return rep_->ambient; }
  const Matrix<Integer>& hnf() const { return rep_->hnf; }
  Integer order() const { return rep_->order; }
  Integer exponent() const { return rep_->shape.empty() ? 1 : rep_->shape.back(); }
  /// Invariant factors of H as an abstract group.
  const std::vector<Integer>& shape() const { return rep_->shape; }
  /// Independent generators; ord(basis()[i]) == shape()[i].
  const std::vector<Element>& basis() const { return rep_->basis; }
  /// Canonical generators: the HNF rows with a nontrivial pivot, reduced
  /// into G.
  const std::vector<Element>& generators() const { return rep_->generators; }

  bool is_zero() const { return rep_->order == 1; }
  bool is_whole() const { return rep_->order == rep_->ambient.order(); }

  bool contains(const Element& x) const;
  /// Residues of x against `basis()`. Requires contains(x).
  Element coordinates(const Element& x) const;
  /// sum_i c_i * basis()[i]
  Element combine(const Element& coords) const;
  /// All elements, in the order of their basis coordinates.
  std::vector<Element> elements() const;

  /// "<0,2,0; 1,0,2>" (canonical generators); "<>" for zero.
  std::string to_string() const;

  bool operator==(const Subgroup& other) const;
  /// (ambient, order, canonical generators), lexicographically.
  std::strong_ordering operator<=>(const Subgroup& other) const;

  std::size_t hash() const { return rep_->hash; }
  /// Identity of the shared representation (same object, not merely equal).
  bool same_object(const Subgroup& other) const { return rep_ == other.rep_; }

 private:
  struct Rep {
    FiniteAbelianGroup ambient;
    Matrix<Integer> hnf;
    Integer order = 1;
    std::vector<Integer> shape;
    std::vector<Element> basis;
    std::vector<Element> generators;
    Matrix<Integer> coord;  // k x m: coordinates = (x * hnf^-1) * coord
    std::size_t hash = 0;
  };
  explicit Subgroup(std::shared_ptr<const Rep> rep) : rep_(std::move(rep)) {}

  std::shared_ptr<const Rep> rep_;
};

struct SubgroupHash {
  std::size_t operator()(const Subgroup& h) const { return h.hash(); }
};

/// Subgroup-count budget: INVARIATUS_BUDGET if set, else 100000.
std::size_t default_subgroup_budget();

/// Smallest subgroup containing `elements`. Throws InvalidInput for an
/// element outside g.
Subgroup span(const FiniteAbelianGroup& g, std::span<const Element> elements);
inline Subgroup span(const FiniteAbelianGroup& g, std::initializer_list<Element> elements) {
  return span(g, std::span<const Element>(elements.begin(), elements.size()));
}

/// Every subgroup exactly once, sorted by (order, canonical form). Throws
/// ResourceLimit when the count would exceed `budget`.
std::vector<Subgroup> enumerate_subgroups(const FiniteAbelianGroup& g,
                                          std::size_t budget = default_subgroup_budget());

Subgroup sum(const Subgroup& a, const Subgroup& b);
Subgroup intersect(const Subgroup& a, const Subgroup& b);
/// a <= b
bool is_subgroup_of(const Subgroup& a, const Subgroup& b);
/// m * H
Subgroup multiple(const Subgroup& h, Integer m);

/// G[n] = { x : n x = 0 }; G[0] = G.
Subgroup n_socle(const FiniteAbelianGroup& g, Integer n);
/// Elements of p-power order.
Subgroup p_component(const FiniteAbelianGroup& g, Integer p);
/// H intersected with the p-component of its ambient.
Subgroup p_part(const Subgroup& h, Integer p);

struct DirectSummand {
  bool is_summand = false;
  std::optional<Subgroup> complement;
};

/// Searches the subgroups of complementary order, in canonical order.
/// `subgroups` may supply a precomputed enumeration of h.ambient().
DirectSummand is_direct_summand(const Subgroup& h,
                                const std::vector<Subgroup>* subgroups = nullptr);

namespace detail {
/// Canonical lattice form of the span of `gens` in g.
Matrix<Integer> lattice_hnf(const FiniteAbelianGroup& g, std::span<const Element> gens);
/// Membership of x in the lattice with canonical form `hnf`.
bool lattice_contains(const Matrix<Integer>& hnf, const Element& x);
}  // namespace detail

}  // namespace invariatus
