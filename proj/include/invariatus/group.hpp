#pragma once

#include <map>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "invariatus/types.hpp"

namespace invariatus {

/// Finite abelian group Z/d_1 + ... + Z/d_k in invariant-factor form
/// (d_i >= 2, d_i | d_{i+1}). Elements are residue vectors; see `Element`.
///
/// Copies share one immutable representation, so passing groups by value is
/// cheap and thread-safe.
class FiniteAbelianGroup {
 public:
  /// The trivial group.
  FiniteAbelianGroup();

  /// Requires an already canonical divisibility chain; use `make_group`
  /// for arbitrary factor lists.
  static FiniteAbelianGroup from_invariant_factors(std::vector<Integer> factors);

  const std::vector<Integer>& invariant_factors() const { return rep_->factors; }
  Integer factor(int i) const { return rep_->factors[static_cast<std::size_t>(i)]; }
  int rank() const { return static_cast<int>(rep_->factors.size()); }
  Integer order() const { return rep_->order; }
  Integer exponent() const { return rep_->factors.empty() ? 1 : rep_->factors.back(); }
  bool is_trivial() const { return rep_->factors.empty(); }
  bool is_cyclic() const { return rank() <= 1; }

  /// prime -> p-power factors of the p-component, ascending.
  const std::map<Integer, std::vector<Integer>>& primary_factors() const { return rep_->primary; }
  std::vector<Integer> primes() const;

  Element zero() const { return Element::Zero(rank()); }
  /// i-th standard generator.
  Element generator(int i) const;

  /// True iff `x` has this group's rank and reduced residues.
  bool contains(const Element& x) const;
  /// Throws InvalidInput unless `contains(x)`.
  void require(const Element& x) const;

  /// Mixed-radix index, first coordinate most significant; index order is
  /// lexicographic order of residue vectors.
  Integer index_of(const Element& x) const;
  Element element_at(Integer index) const;

  /// "2x4x8"; the trivial group prints as "1".
  std::string to_string() const;

  bool operator==(const FiniteAbelianGroup& other) const {
    return rep_ == other.rep_ || rep_->factors == other.rep_->factors;
  }

 private:
  struct Rep {
    std::vector<Integer> factors;
    Integer order = 1;
    std::map<Integer, std::vector<Integer>> primary;
  };
  explicit FiniteAbelianGroup(std::shared_ptr<const Rep> rep) : rep_(std::move(rep)) {}

  std::shared_ptr<const Rep> rep_;
};

/// Isomorphism between Z/n_1 + ... + Z/n_m (arbitrary n_i >= 2) and its
/// canonical form: canonical = source * to_canonical, and
/// source = canonical * from_canonical (both reduced).
struct CanonicalPresentation {
  std::vector<Integer> source_factors;
  FiniteAbelianGroup group;
  SmallMatrix to_canonical;    // m x rank
  SmallMatrix from_canonical;  // rank x m

  Element canonical(const Element& source) const;
  Element source(const Element& canonical) const;
};

/// Canonical invariant-factor form of the direct sum of the given cyclic
/// groups. Throws InvalidInput for a factor <= 1; an empty list is the
/// trivial group.
FiniteAbelianGroup make_group(std::span<const Integer> factors);
inline FiniteAbelianGroup make_group(std::initializer_list<Integer> factors) {
  return make_group(std::span<const Integer>(factors.begin(), factors.size()));
}

CanonicalPresentation canonical_presentation(std::span<const Integer> factors);

/// The p-component G_p as an abstract group, with the images of its standard
/// generators in G.
struct PrimaryComponent {
  Integer prime = 0;
  FiniteAbelianGroup group;
  std::vector<Element> embedding;

  Element embed(const FiniteAbelianGroup& ambient, const Element& y) const;
};

/// One component per prime dividing |G|, ascending by prime.
std::vector<PrimaryComponent> primary_decomposition(const FiniteAbelianGroup& g);

// Element arithmetic.
Element add(const FiniteAbelianGroup& g, const Element& x, const Element& y);
Element subtract(const FiniteAbelianGroup& g, const Element& x, const Element& y);
Element negate(const FiniteAbelianGroup& g, const Element& x);
Element scale(const FiniteAbelianGroup& g, Integer k, const Element& x);
/// Reduce an arbitrary integer row vector into the group.
Element reduce(const FiniteAbelianGroup& g, const Element& x);
Integer order(const FiniteAbelianGroup& g, const Element& x);
/// Largest n with x in p^n G; kInfiniteHeight when x lies in every p^n G.
int p_height(const FiniteAbelianGroup& g, const Element& x, Integer p);

/// All elements in lexicographic order.
std::vector<Element> elements(const FiniteAbelianGroup& g);
/// Elements with n * x == 0, in lexicographic order.
std::vector<Element> torsion_elements(const FiniteAbelianGroup& g, Integer n);

// Number theory helpers.
Integer gcd(Integer a, Integer b);
Integer lcm(Integer a, Integer b);
/// Prime factorization as (prime, exponent) pairs, ascending.
std::vector<std::pair<Integer, int>> factorize(Integer n);
/// Exponent of p in n (n != 0).
int valuation(Integer n, Integer p);
Integer ipow(Integer base, int exp);

}  // namespace invariatus
