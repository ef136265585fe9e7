#pragma once

#include <functional>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "invariatus/hom.hpp"
#include "invariatus/invariance.hpp"
#include "invariatus/subgroup.hpp"

namespace invariatus {

/// Largest ring or module handled by the table representation.
inline constexpr Integer kMaxTableElements = Integer{1} << 12;

using BinaryOp = std::function<Element(const Element&, const Element&)>;

/// A finite unital ring as a multiplication table over the elements of its
/// additive group. All axioms are checked exhaustively on construction.
class FiniteRing {
 public:
  FiniteRing();
  /// `product[a * n + b]` is the index of element_at(a) * element_at(b).
  /// Throws InvalidInput naming the first failing law.
  static FiniteRing from_table(FiniteAbelianGroup additive, std::vector<Integer> product,
                               Integer one);

  const FiniteAbelianGroup& additive() const { return rep_->additive; }
  Integer size() const { return rep_->additive.order(); }
  Integer one_index() const { return rep_->one; }
  Element one() const { return rep_->additive.element_at(rep_->one); }
  const std::vector<Integer>& table() const { return rep_->product; }

  Integer multiply_index(Integer a, Integer b) const {
    return rep_->product[static_cast<std::size_t>(a * size() + b)];
  }
  Element multiply(const Element& x, const Element& y) const;

 private:
  struct Rep {
    FiniteAbelianGroup additive;
    std::vector<Integer> product;
    Integer one = 0;
  };
  explicit FiniteRing(std::shared_ptr<const Rep> rep) : rep_(std::move(rep)) {}
  std::shared_ptr<const Rep> rep_;
};

FiniteRing make_ring(const FiniteAbelianGroup& additive, const BinaryOp& multiply,
                     const Element& one);
/// Z/n.
FiniteRing integers_mod(Integer n);

/// A finite right module: `action[x * |R| + r]` is the index of x.r.
class FiniteModule {
 public:
  FiniteModule();
  /// Throws InvalidInput naming the first failing module law.
  static FiniteModule from_table(FiniteAbelianGroup additive, FiniteRing ring,
                                 std::vector<Integer> action);

  const FiniteAbelianGroup& additive() const { return rep_->additive; }
  const FiniteRing& ring() const { return rep_->ring; }
  Integer size() const { return rep_->additive.order(); }
  const std::vector<Integer>& table() const { return rep_->action; }

  Integer act_index(Integer x, Integer r) const {
    return rep_->action[static_cast<std::size_t>(x * rep_->ring.size() + r)];
  }
  Element act(const Element& x, const Element& r) const;

  bool is_submodule(const Subgroup& h) const;
  /// Smallest submodule containing `gens`.
  Subgroup generate(std::span<const Element> gens) const;

 private:
  struct Rep {
    FiniteAbelianGroup additive;
    FiniteRing ring;
    std::vector<Integer> action;
  };
  explicit FiniteModule(std::shared_ptr<const Rep> rep) : rep_(std::move(rep)) {}
  std::shared_ptr<const Rep> rep_;
};

FiniteModule make_module(const FiniteAbelianGroup& additive, const FiniteRing& ring,
                         const BinaryOp& act);
/// R as a right module over itself.
FiniteModule regular_module(const FiniteRing& ring);
FiniteModule zero_module(const FiniteRing& ring);

/// Submodules in canonical subgroup order.
std::vector<Subgroup> enumerate_submodules(const FiniteModule& m);
/// Sum of the minimal nonzero submodules.
Subgroup module_socle(const FiniteModule& m);

struct QuotientModule {
  FiniteModule module;
  QuotientPresentation presentation;
};
QuotientModule quotient_module(const FiniteModule& m, const Subgroup& s);

/// A submodule as a module in its own right, with its inclusion.
struct SubmoduleModule {
  FiniteModule module;
  Homomorphism inclusion;
};
SubmoduleModule submodule_module(const FiniteModule& m, const Subgroup& h);

struct DirectSumModule {
  FiniteModule module;
  DirectSum sum;
};
DirectSumModule direct_sum_module(const FiniteModule& a, const FiniteModule& b);

/// f commutes with the action, checked on a basis of the domain against the
/// additive generators of the ring.
bool is_module_hom(const FiniteModule& source, const Homomorphism& f, const FiniteModule& target);

/// Module homomorphisms from the submodule `domain` of `source` into `target`,
/// in the order of the underlying additive enumeration.
void for_each_module_hom(const FiniteModule& source, const Subgroup& domain,
                         const FiniteModule& target, const HomVisitor& visit);
void for_each_module_mono(const FiniteModule& source, const Subgroup& domain,
                          const FiniteModule& target, const HomVisitor& visit);
std::vector<Homomorphism> enumerate_module_homs(const FiniteModule& source,
                                                const FiniteModule& target);
std::vector<Homomorphism> enumerate_module_homs(const FiniteModule& source, const Subgroup& domain,
                                                const FiniteModule& target);
bool modules_isomorphic(const FiniteModule& a, const FiniteModule& b);

/// The map classes of one module, for check_by_enumeration.
class ModuleCategory {
 public:
  explicit ModuleCategory(FiniteModule m) : m_(std::move(m)) {}
  const FiniteAbelianGroup& ambient() const { return m_.additive(); }
  const FiniteModule& module() const { return m_; }
  void homs(const Subgroup& h, const HomVisitor& v) const { for_each_module_hom(m_, h, m_, v); }
  void monos(const Subgroup& h, const HomVisitor& v) const { for_each_module_mono(m_, h, m_, v); }
  void endos(const HomVisitor& v) const { homs(Subgroup::whole(m_.additive()), v); }
  void monic_endos(const HomVisitor& v) const { monos(Subgroup::whole(m_.additive()), v); }
  void autos(const HomVisitor& v) const { monic_endos(v); }

 private:
  FiniteModule m_;
};

/// Throws InvalidInput unless h is a submodule.
InvarianceCheck check_module_property(const FiniteModule& m, const Subgroup& h, Property p);

/// Upper triangular 3x3 matrices over F_2 with zero (2,3) and (3,2) entries,
/// coordinates (r11, r12, r13, r22, r33); 32 elements.
FiniteRing triangular_ring();
/// First-row matrices (a, b, c) as a right module over triangular_ring().
FiniteModule row_module();

/// A submodule that is strictly but not strongly invariant.
///   M = row module with simple submodules S1 = (0,*,0), S2 = (0,0,*);
///   K = M/S2, L = M/S1, phi: M -> K, psi: M -> L, rho = (phi, psi).
struct StrictNotStrongExample {
  FiniteRing ring;
  FiniteModule m;
  Subgroup s1;
  Subgroup s2;
  std::vector<Subgroup> submodules;
  QuotientModule k;
  QuotientModule l;
  QuotientModule top;  // M/(S1 + S2)
  DirectSumModule kl;
  Homomorphism phi;
  Homomorphism psi;
  Homomorphism rho;
  Subgroup rho_image;
  std::size_t hom_m_k = 0;
  std::size_t hom_m_l = 0;
  std::size_t hom_m_kl = 0;
  std::size_t mono_m_kl = 0;
  InvarianceCheck strict;
  InvarianceCheck strong;
  /// rho(M) -> M -> K -> K x 0.
  Homomorphism epi_witness;
  /// rho(M) == (rho(M) n K+0) + (rho(M) n 0+L).
  bool rho_image_splits = true;
  bool top_isomorphic_to_s1 = false;
  bool top_isomorphic_to_s2 = false;
  bool s1_isomorphic_to_s2 = false;
};

/// Builds the example and throws std::logic_error if any of its facts fails.
StrictNotStrongExample build_strict_not_strong_example();

/// Failures over K, a non-split extension of a simple S by a simple T.
///   M1 = K + S with S+0 <= K+0 <= M1, socle S+S, and K+0 n (S+S) = S+0;
///   M2 = K + K with H = S+S <= L = K+S.
struct NonTransitiveExample {
  FiniteModule k;
  Subgroup s_in_k;
  FiniteModule s;
  DirectSumModule m1;
  Subgroup s_zero;   // S+0 in M1
  Subgroup k_zero;   // K+0 in M1
  Subgroup socle1;   // socle of M1
  bool s_strict_in_k = false;
  bool k_strict_in_m1 = false;
  bool s_strict_in_m1 = true;
  bool socle_strict_in_m1 = false;
  bool socle_is_s_plus_s = false;
  bool intersection_is_s_zero = false;
  bool intersection_strict = true;
  DirectSumModule m2;
  Subgroup h2;  // S+S in M2
  Subgroup l2;  // K+S in M2
  bool h2_strict = false;
  bool l2_strict = true;
};

NonTransitiveExample build_non_transitive_example();

}  // namespace invariatus
