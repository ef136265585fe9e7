#pragma once

#include <array>
#include <concepts>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "invariatus/hom.hpp"
#include "invariatus/subgroup.hpp"

namespace invariatus {

/// The five invariance properties, each quantified over a class of maps.
enum class Property {
  FullyInvariant,      // End(G)
  StronglyInvariant,   // Hom(H, G)
  StrictlyInvariant,   // Mon(H, G)
  InjectiveInvariant,  // monic endomorphisms of G
  Characteristic,      // Aut(G)
};

inline constexpr std::array<Property, 5> kAllProperties = {
    Property::FullyInvariant, Property::StronglyInvariant, Property::StrictlyInvariant,
    Property::InjectiveInvariant, Property::Characteristic};

/// "fully_invariant", "strongly_invariant", ...
std::string_view property_name(Property p);

/// How a predicate is decided.
///   Auto:       closed forms and the structural classifier, enumeration only
///               to find a witness.
///   Exhaustive: enumerate the whole class of maps.
///   Verify:     both; disagreement throws std::logic_error.
enum class Method { Auto, Exhaustive, Verify };

struct InvarianceCheck {
  bool holds = true;
  /// First map of the class, in enumeration order, with f(H) not inside H.
  std::optional<Homomorphism> witness;
};

/// Anything that can enumerate the five classes of maps for one ambient
/// object whose submodules are subgroups of `ambient()`.
template <class C>
concept MapCategory = requires(const C& c, const Subgroup& h, const HomVisitor& v) {
  { c.ambient() } -> std::convertible_to<const FiniteAbelianGroup&>;
  c.homs(h, v);
  c.monos(h, v);
  c.endos(v);
  c.monic_endos(v);
  c.autos(v);
};

/// Plain abelian groups: every homomorphism counts.
class AbelianCategory {
 public:
  explicit AbelianCategory(FiniteAbelianGroup g) : g_(std::move(g)) {}
  const FiniteAbelianGroup& ambient() const { return g_; }
  void homs(const Subgroup& h, const HomVisitor& v) const { for_each_hom(h, g_, v); }
  void monos(const Subgroup& h, const HomVisitor& v) const { for_each_mono(h, g_, v); }
  void endos(const HomVisitor& v) const { for_each_endo(g_, v); }
  void monic_endos(const HomVisitor& v) const { for_each_monic_endo(g_, v); }
  void autos(const HomVisitor& v) const { for_each_auto(g_, v); }

 private:
  FiniteAbelianGroup g_;
};

/// Decides a property by running through its class of maps. H = 0 and
/// H = ambient hold vacuously.
template <MapCategory C>
InvarianceCheck check_by_enumeration(const C& cat, const Subgroup& h, Property p) {
  InvarianceCheck out;
  if (h.is_zero() || h.is_whole()) return out;
  const HomVisitor visit = [&](const Homomorphism& f) {
    if (f.maps_into(h, h)) return true;
    out.holds = false;
    out.witness = f;
    return false;
  };
  switch (p) {
    case Property::FullyInvariant: cat.endos(visit); break;
    case Property::StronglyInvariant: cat.homs(h, visit); break;
    case Property::StrictlyInvariant: cat.monos(h, visit); break;
    case Property::InjectiveInvariant: cat.monic_endos(visit); break;
    case Property::Characteristic: cat.autos(visit); break;
  }
  return out;
}

InvarianceCheck is_fully_invariant(const Subgroup& h, Method m = Method::Auto);
InvarianceCheck is_strongly_invariant(const Subgroup& h, Method m = Method::Auto);
InvarianceCheck is_strictly_invariant(const Subgroup& h, Method m = Method::Auto);
InvarianceCheck is_injective_invariant(const Subgroup& h, Method m = Method::Auto);
InvarianceCheck is_characteristic(const Subgroup& h, Method m = Method::Auto);
InvarianceCheck check_property(const Subgroup& h, Property p, Method m = Method::Auto);

/// Structural verdict on one primary component.
enum class StrictVerdict { NotStrictlyInvariant, Socle, FullComponent };
std::string_view verdict_name(StrictVerdict v);

struct PrimeVerdict {
  Integer prime = 0;
  StrictVerdict verdict = StrictVerdict::NotStrictlyInvariant;
  /// H_p = G[p^n]; meaningful unless NotStrictlyInvariant.
  int n = 0;
  /// Exponent of G_p is p^exponent.
  int exponent = 0;
};

struct StrictClassification {
  std::vector<PrimeVerdict> components;
  bool strictly_invariant() const;
};

/// H is strictly invariant in finite G iff every H_p is some G[p^n].
/// FullComponent is reported for n equal to the exponent of G_p.
StrictClassification classify_strict(const Subgroup& h);

struct InvarianceReport {
  Subgroup subject;
  std::array<bool, 5> flags{};
  std::array<std::optional<Homomorphism>, 5> witnesses;
  StrictClassification classification;

  bool flag(Property p) const { return flags[static_cast<std::size_t>(p)]; }
  const std::optional<Homomorphism>& witness(Property p) const {
    return witnesses[static_cast<std::size_t>(p)];
  }
  /// Implications of the chart that these flags break, as "a => b".
  std::vector<std::string> chart_violations() const;
};

/// All five predicates and the classification. Throws std::logic_error if
/// injective invariance and characteristic disagree (they coincide for
/// finite groups).
InvarianceReport invariance_report(const Subgroup& h, Method m = Method::Auto);

/// Sum of f(K) over all monomorphisms f : K -> G.
Subgroup mono_socle(const Subgroup& k);
/// Sum of f(N) over all f in Hom(N, A); N may live in any group. Auto uses
/// S_A(N) = A[exp N].
Subgroup hom_socle(const FiniteAbelianGroup& a, const Subgroup& n, Method m = Method::Auto);

/// The lattice T(G) of strictly invariant subgroups.
struct StrictLattice {
  FiniteAbelianGroup group;
  /// Sorted canonically; elements.front() is 0 and elements.back() is G.
  std::vector<Subgroup> elements;
  /// Indices into `elements`; kNone marks a sum outside T(G).
  std::vector<std::vector<std::size_t>> join;
  /// Largest member below the intersection.
  std::vector<std::vector<std::size_t>> meet;
  /// Pairs whose sum left T(G); must be empty.
  std::vector<std::pair<std::size_t, std::size_t>> join_failures;
  /// Pairs whose meet differs from their intersection.
  std::vector<std::pair<std::size_t, std::size_t>> non_sublattice;
  /// Covering relations (lower, upper) of the Hasse diagram.
  std::vector<std::pair<std::size_t, std::size_t>> covers;

  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::optional<std::size_t> index_of(const Subgroup& h) const;
};

StrictLattice strict_lattice(const FiniteAbelianGroup& g, Method m = Method::Auto);

struct AllStrictResult {
  bool brute_force = true;
  /// Finite groups with every subgroup strictly invariant are the cyclic ones.
  bool predicted = true;
  std::optional<Subgroup> counterexample;
  bool agrees() const { return brute_force == predicted; }
};

AllStrictResult all_subgroups_strictly_invariant(const FiniteAbelianGroup& g);

struct ChartReport {
  FiniteAbelianGroup group;
  std::size_t subgroups_checked = 0;
  std::vector<std::string> violations;
  /// "a =/=> b" with the first subgroup having a but not b.
  struct Exhibit {
    Property from;
    Property to;
    Subgroup subject;
  };
  std::vector<Exhibit> separations;
  bool passed() const { return violations.empty(); }
};

/// Checks the chart on every subgroup by exhaustive enumeration.
ChartReport verify_implication_chart(const FiniteAbelianGroup& g);

struct ClauseResult {
  bool holds = true;
  std::optional<Homomorphism> witness;
  std::optional<Subgroup> subgroup;
};

/// Consequences of strict invariance for H:
///   1. f(H) <= H for nonzero f : H -> G with f(f(H) n H) = 0;
///   2. f(H) n H != 0 for nonzero f : H -> G;
///   3. Hom(H, L) = 0 for L <= G with L n H = 0.
struct CorollaryReport {
  bool applicable = false;
  ClauseResult clause1;
  ClauseResult clause2;
  ClauseResult clause3;
  /// Nonzero f meeting the hypothesis of clause 1; not counted for H = G.
  std::size_t clause1_hypothesis_met = 0;
  bool passed() const { return !applicable || (clause1.holds && clause2.holds && clause3.holds); }
};

CorollaryReport check_corollary_ch(const Subgroup& h);

/// Consequences of the mono-socle S = M(K):
///   1. f(K) not in S implies f - a is not injective for every a : K -> S;
///   2. f(K) n S != 0 for nonzero f : K -> G;
///   3. Hom(H, K) = 0 for H <= G with H n S = 0.
struct MonoSocleReport {
  Subgroup socle;
  ClauseResult clause1;
  ClauseResult clause2;
  ClauseResult clause3;
  bool passed() const { return clause1.holds && clause2.holds && clause3.holds; }
};

MonoSocleReport check_mono_socle_corollary(const Subgroup& k);

/// H <= A + B against the splitting statements for strictly invariant H.
struct DecompositionReport {
  bool applicable = false;  // H strictly invariant
  bool a_has_involutions = false;
  bool splits = false;
  Subgroup k;  // H n A, inside A
  Subgroup l;  // H n B, inside B
  bool k_strict = false;
  bool l_strict = false;
  bool socle_a_ok = false;  // S_A(L) <= K
  bool socle_b_ok = false;  // S_B(K) <= L
  /// Without involutions in A: split with all parts as stated. Otherwise the
  /// statements are only required when H happens to split.
  bool passed() const;
};

DecompositionReport check_decomposition(const DirectSum& ds, const Subgroup& h);

}  // namespace invariatus
