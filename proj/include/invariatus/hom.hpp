#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "invariatus/subgroup.hpp"

namespace invariatus {

/// Homomorphism f : H -> G out of a subgroup H (possibly all of its
/// ambient), stored as the images of H's fixed basis. Well-definedness is the
/// condition ord(images[i]) | ord(basis[i]).
class Homomorphism {
 public:
  /// The map on the trivial group.
  Homomorphism() = default;
  /// Throws InvalidInput if an image lies outside `codomain` or violates the
  /// order condition.
  Homomorphism(Subgroup domain, FiniteAbelianGroup codomain, std::vector<Element> images);

  static Homomorphism zero(Subgroup domain, FiniteAbelianGroup codomain);
  static Homomorphism identity(const FiniteAbelianGroup& g);
  /// H -> ambient(H)
  static Homomorphism inclusion(const Subgroup& h);
  /// The map sending gens[j] to images[j]. Well-definedness is checked by
  /// exhausting coefficient vectors of the generators, so this is meant for
  /// small, user-supplied presentations.
  static Homomorphism from_generator_images(Subgroup domain, FiniteAbelianGroup codomain,
                                            std::span<const Element> gens,
                                            std::span<const Element> images);

  const Subgroup& domain() const { return domain_; }
  const FiniteAbelianGroup& codomain() const { return codomain_; }
  const std::vector<Element>& images() const { return images_; }

  Element apply(const Element& x) const;
  Subgroup image() const;
  Subgroup kernel() const;
  bool is_injective() const;
  bool is_zero() const;
  /// f(s) <= target, for s <= domain.
  bool maps_into(const Subgroup& s, const Subgroup& target) const;
  /// f(domain) <= target.
  bool maps_into(const Subgroup& target) const;

  /// "b_1 -> y_1, b_2 -> y_2" over the domain basis.
  std::string to_string() const;

  bool operator==(const Homomorphism& other) const {
    return domain_ == other.domain_ && codomain_ == other.codomain_ && images_ == other.images_;
  }

 private:
  struct Unchecked {};
  Homomorphism(Unchecked, Subgroup domain, FiniteAbelianGroup codomain,
               std::vector<Element> images)
      : domain_(std::move(domain)), codomain_(std::move(codomain)), images_(std::move(images)) {}

  friend class HomEnumerator;

  Subgroup domain_;
  FiniteAbelianGroup codomain_;
  std::vector<Element> images_;
};

/// f o g. Requires image(g) <= domain(f).
Homomorphism compose(const Homomorphism& f, const Homomorphism& g);
/// f restricted to a subgroup of its domain.
Homomorphism restrict(const Homomorphism& f, const Subgroup& sub);

/// Visitor over an enumeration; return false to stop early. The reference is
/// only valid during the call.
using HomVisitor = std::function<bool(const Homomorphism&)>;

/// Hom(H, G) in lexicographic order of image tuples (first basis image most
/// significant, elements in residue-lexicographic order).
void for_each_hom(const Subgroup& domain, const FiniteAbelianGroup& codomain,
                  const HomVisitor& visit);
/// Injective members of Hom(H, G), same order; pruned depth-first search.
void for_each_mono(const Subgroup& domain, const FiniteAbelianGroup& codomain,
                   const HomVisitor& visit);
void for_each_endo(const FiniteAbelianGroup& g, const HomVisitor& visit);
void for_each_monic_endo(const FiniteAbelianGroup& g, const HomVisitor& visit);
/// Bijective endomorphisms. For finite G these are exactly the monic
/// endomorphisms; a non-surjective mono is reported as a logic error.
void for_each_auto(const FiniteAbelianGroup& g, const HomVisitor& visit);

std::vector<Homomorphism> enumerate_homs(const Subgroup& domain, const FiniteAbelianGroup& codomain);
std::vector<Homomorphism> enumerate_monos(const Subgroup& domain,
                                          const FiniteAbelianGroup& codomain);

/// |Hom(H, G)| = prod_i |G[ord(b_i)]|.
Integer count_homs(const Subgroup& domain, const FiniteAbelianGroup& codomain);

/// Internal direct sum with canonical coordinates, injections and
/// projections.
struct DirectSum {
  FiniteAbelianGroup group;
  std::vector<FiniteAbelianGroup> summands;
  std::vector<Homomorphism> injections;
  std::vector<Homomorphism> projections;

  /// Image of the subgroup `h` of summand i.
  Subgroup embed(std::size_t i, const Subgroup& h) const;
};

DirectSum direct_sum(std::span<const FiniteAbelianGroup> summands);
inline DirectSum direct_sum(const FiniteAbelianGroup& a, const FiniteAbelianGroup& b) {
  const FiniteAbelianGroup both[] = {a, b};
  return direct_sum(both);
}

/// G/H with a verified projection and a section of representatives.
struct QuotientPresentation {
  Subgroup kernel;
  FiniteAbelianGroup group;
  Homomorphism projection;
  /// Preimage in G of each standard generator of `group`.
  std::vector<Element> section;

  Element project(const Element& x) const { return projection.apply(x); }
  Element lift(const Element& y) const;
  /// K/H for H <= K <= G (more generally, the projection of K).
  Subgroup image_of(const Subgroup& k) const;
  /// Full preimage of a subgroup of the quotient.
  Subgroup preimage(const Subgroup& s) const;
};

/// Throws InvalidInput unless h is a subgroup of g.
QuotientPresentation quotient(const FiniteAbelianGroup& g, const Subgroup& h);

}  // namespace invariatus
