#include "invariatus/hom.hpp"

#include <sstream>
#include <unordered_map>

#include "invariatus/smith.hpp"

namespace invariatus {

namespace {

std::string element_string(const Element& x) {
  std::ostringstream os;
  os << '(';
  for (Eigen::Index i = 0; i < x.size(); ++i) os << (i ? "," : "") << x(i);
  os << ')';
  return os.str();
}

std::vector<Element> hnf_rows(const Matrix<Integer>& hnf) {
  std::vector<Element> rows;
  for (Eigen::Index i = 0; i < hnf.rows(); ++i) rows.emplace_back(hnf.row(i));
  return rows;
}

}  // namespace

Homomorphism::Homomorphism(Subgroup domain, FiniteAbelianGroup codomain,
                           std::vector<Element> images)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), images_(std::move(images)) {
  const auto& basis = domain_.basis();
  if (images_.size() != basis.size()) {
    throw InvalidInput("homomorphism needs one image per domain basis element");
  }
  for (std::size_t i = 0; i < basis.size(); ++i) {
    codomain_.require(images_[i]);
    if (domain_.shape()[i] % order(codomain_, images_[i]) != 0) {
      throw InvalidInput("image " + element_string(images_[i]) +
                         " has order not dividing that of its basis element");
    }
  }
}

Homomorphism Homomorphism::zero(Subgroup domain, FiniteAbelianGroup codomain) {
  std::vector<Element> images(domain.basis().size(), codomain.zero());
  return Homomorphism(Unchecked{}, std::move(domain), std::move(codomain), std::move(images));
}

Homomorphism Homomorphism::identity(const FiniteAbelianGroup& g) {
  return inclusion(Subgroup::whole(g));
}

Homomorphism Homomorphism::inclusion(const Subgroup& h) {
  return Homomorphism(Unchecked{}, h, h.ambient(), h.basis());
}

Homomorphism Homomorphism::from_generator_images(Subgroup domain, FiniteAbelianGroup codomain,
                                                 std::span<const Element> gens,
                                                 std::span<const Element> images) {
  if (gens.size() != images.size()) {
    throw InvalidInput("generator and image counts differ");
  }
  const auto& g = domain.ambient();
  std::vector<Integer> orders;
  Integer combos = 1;
  for (std::size_t j = 0; j < gens.size(); ++j) {
    if (!domain.contains(gens[j])) throw InvalidInput("generator outside the domain");
    codomain.require(images[j]);
    orders.push_back(order(g, gens[j]));
    if (__builtin_mul_overflow(combos, orders.back(), &combos) || combos > 4'000'000) {
      throw ResourceLimit("generator presentation too large to verify exhaustively");
    }
  }
  std::unordered_map<Integer, Element> table;
  std::vector<Integer> c(gens.size(), 0);
  for (Integer n = 0; n < combos; ++n) {
    Element x = g.zero();
    Element y = codomain.zero();
    for (std::size_t j = 0; j < gens.size(); ++j) {
      x = add(g, x, scale(g, c[j], gens[j]));
      y = add(codomain, y, scale(codomain, c[j], images[j]));
    }
    auto [it, fresh] = table.emplace(g.index_of(x), y);
    if (!fresh && it->second != y) {
      throw InvalidInput("generator images do not define a homomorphism: " + element_string(x) +
                         " would map to both " + element_string(it->second) + " and " +
                         element_string(y));
    }
    for (std::size_t j = gens.size(); j-- > 0;) {
      if (++c[j] < orders[j]) break;
      c[j] = 0;
    }
  }
  if (static_cast<Integer>(table.size()) != domain.order()) {
    throw InvalidInput("generators do not span the domain");
  }
  std::vector<Element> basis_images;
  for (const Element& b : domain.basis()) basis_images.push_back(table.at(g.index_of(b)));
  return Homomorphism(std::move(domain), std::move(codomain), std::move(basis_images));
}

Element Homomorphism::apply(const Element& x) const {
  const Element c = domain_.coordinates(x);
  Element y = codomain_.zero();
  for (std::size_t i = 0; i < images_.size(); ++i) {
    const Integer ci = c(static_cast<Eigen::Index>(i));
    if (ci != 0) y = add(codomain_, y, scale(codomain_, ci, images_[i]));
  }
  return y;
}

Subgroup Homomorphism::image() const { return span(codomain_, images_); }

Subgroup Homomorphism::kernel() const {
  std::vector<Element> gens;
  for (const Element& x : domain_.elements()) {
    if (apply(x).isZero()) gens.push_back(x);
  }
  return span(domain_.ambient(), gens);
}

bool Homomorphism::is_injective() const { return image().order() == domain_.order(); }

bool Homomorphism::is_zero() const {
  for (const Element& y : images_) {
    if (!y.isZero()) return false;
  }
  return true;
}

bool Homomorphism::maps_into(const Subgroup& target) const {
  for (const Element& y : images_) {
    if (!target.contains(y)) return false;
  }
  return true;
}

bool Homomorphism::maps_into(const Subgroup& s, const Subgroup& target) const {
  if (s.same_object(domain_)) return maps_into(target);
  for (const Element& b : s.basis()) {
    if (!target.contains(apply(b))) return false;
  }
  return true;
}

std::string Homomorphism::to_string() const {
  std::ostringstream os;
  const auto& basis = domain_.basis();
  if (basis.empty()) return "0";
  for (std::size_t i = 0; i < basis.size(); ++i) {
    os << (i ? ", " : "") << element_string(basis[i]) << " -> " << element_string(images_[i]);
  }
  return os.str();
}

Homomorphism compose(const Homomorphism& f, const Homomorphism& g) {
  if (!(g.codomain() == f.domain().ambient()) || !g.maps_into(f.domain())) {
    throw InvalidInput("composition undefined: image does not lie in the next domain");
  }
  std::vector<Element> images;
  for (const Element& y : g.images()) images.push_back(f.apply(y));
  return Homomorphism(g.domain(), f.codomain(), std::move(images));
}

Homomorphism restrict(const Homomorphism& f, const Subgroup& sub) {
  if (!is_subgroup_of(sub, f.domain())) {
    throw InvalidInput("restriction target is not a subgroup of the domain");
  }
  std::vector<Element> images;
  for (const Element& b : sub.basis()) images.push_back(f.apply(b));
  return Homomorphism(sub, f.codomain(), std::move(images));
}

// Drives the in-place enumerators; owns the one Homomorphism handed to
// visitors.
class HomEnumerator {
 public:
  HomEnumerator(const Subgroup& domain, const FiniteAbelianGroup& codomain)
      : current_(Homomorphism::zero(domain, codomain)) {}

  void all(const HomVisitor& visit) {
    const auto& shape = current_.domain().shape();
    const auto& g = current_.codomain();
    std::vector<std::vector<Element>> cand;
    for (Integer o : shape) cand.push_back(torsion_elements(g, o));
    const std::size_t m = cand.size();
    std::vector<std::size_t> pos(m, 0);
    for (;;) {
      for (std::size_t i = 0; i < m; ++i) current_.images_[i] = cand[i][pos[i]];
      if (!visit(current_)) return;
      std::size_t i = m;
      while (i > 0) {
        --i;
        if (++pos[i] < cand[i].size()) break;
        pos[i] = 0;
        if (i == 0) return;
      }
      if (m == 0) return;
    }
  }

  void injective(const HomVisitor& visit) {
    const auto& shape = current_.domain().shape();
    const auto& g = current_.codomain();
    const std::size_t m = shape.size();
    cand_.clear();
    cofactors_.clear();
    for (Integer o : shape) {
      std::vector<Element> exact;
      for (Element& y : torsion_elements(g, o)) {
        if (order(g, y) == o) exact.push_back(std::move(y));
      }
      cand_.push_back(std::move(exact));
      std::vector<Integer> cof;
      for (auto [p, e] : factorize(o)) cof.push_back(o / p);
      cofactors_.push_back(std::move(cof));
    }
    spans_.assign(m + 1, Matrix<Integer>());
    spans_[0] = detail::lattice_hnf(g, {});
    visit_ = &visit;
    descend(0);
  }

 private:
  // Extends an injective partial assignment on b_1..b_i; <y> must meet the
  // span of the earlier images trivially, i.e. its order-p elements avoid it.
  bool descend(std::size_t i) {
    if (i == cand_.size()) return (*visit_)(current_);
    const auto& g = current_.codomain();
    for (const Element& y : cand_[i]) {
      bool independent = true;
      for (Integer cof : cofactors_[i]) {
        if (detail::lattice_contains(spans_[i], scale(g, cof, y))) {
          independent = false;
          break;
        }
      }
      if (!independent) continue;
      current_.images_[i] = y;
      if (i + 1 < cand_.size()) {
        auto rows = hnf_rows(spans_[i]);
        rows.push_back(y);
        spans_[i + 1] = detail::lattice_hnf(g, rows);
      }
      if (!descend(i + 1)) return false;
    }
    return true;
  }

  Homomorphism current_;
  std::vector<std::vector<Element>> cand_;
  std::vector<std::vector<Integer>> cofactors_;
  std::vector<Matrix<Integer>> spans_;
  const HomVisitor* visit_ = nullptr;
};

void for_each_hom(const Subgroup& domain, const FiniteAbelianGroup& codomain,
                  const HomVisitor& visit) {
  HomEnumerator(domain, codomain).all(visit);
}

void for_each_mono(const Subgroup& domain, const FiniteAbelianGroup& codomain,
                   const HomVisitor& visit) {
  HomEnumerator(domain, codomain).injective(visit);
}

void for_each_endo(const FiniteAbelianGroup& g, const HomVisitor& visit) {
  for_each_hom(Subgroup::whole(g), g, visit);
}

void for_each_monic_endo(const FiniteAbelianGroup& g, const HomVisitor& visit) {
  for_each_mono(Subgroup::whole(g), g, visit);
}

void for_each_auto(const FiniteAbelianGroup& g, const HomVisitor& visit) {
  // A monic endomorphism of a finite group has |image| = |G|.
  for_each_mono(Subgroup::whole(g), g, [&](const Homomorphism& f) {
    if (f.image().order() != g.order()) {
      throw std::logic_error("monic endomorphism of a finite group is not onto");
    }
    return visit(f);
  });
}

std::vector<Homomorphism> enumerate_homs(const Subgroup& domain,
                                         const FiniteAbelianGroup& codomain) {
  std::vector<Homomorphism> out;
  for_each_hom(domain, codomain, [&](const Homomorphism& f) {
    out.push_back(f);
    return true;
  });
  return out;
}

std::vector<Homomorphism> enumerate_monos(const Subgroup& domain,
                                          const FiniteAbelianGroup& codomain) {
  std::vector<Homomorphism> out;
  for_each_mono(domain, codomain, [&](const Homomorphism& f) {
    out.push_back(f);
    return true;
  });
  return out;
}

Integer count_homs(const Subgroup& domain, const FiniteAbelianGroup& codomain) {
  Integer n = 1;
  for (Integer o : domain.shape()) {
    for (Integer d : codomain.invariant_factors()) n *= gcd(o, d);
  }
  return n;
}

Subgroup DirectSum::embed(std::size_t i, const Subgroup& h) const {
  std::vector<Element> gens;
  for (const Element& b : h.basis()) gens.push_back(injections[i].apply(b));
  return span(group, gens);
}

DirectSum direct_sum(std::span<const FiniteAbelianGroup> summands) {
  std::vector<Integer> factors;
  std::vector<int> offsets;
  for (const auto& a : summands) {
    offsets.push_back(static_cast<int>(factors.size()));
    for (Integer d : a.invariant_factors()) factors.push_back(d);
  }
  const auto pres = canonical_presentation(factors);
  DirectSum out;
  out.group = pres.group;
  const int total = static_cast<int>(factors.size());
  for (std::size_t s = 0; s < summands.size(); ++s) {
    const auto& a = summands[s];
    out.summands.push_back(a);
    std::vector<Element> inj;
    for (int t = 0; t < a.rank(); ++t) {
      Element src = Element::Zero(total);
      src(offsets[s] + t) = 1;
      inj.push_back(pres.canonical(src));
    }
    out.injections.emplace_back(Subgroup::whole(a), out.group, std::move(inj));
    std::vector<Element> proj;
    for (int j = 0; j < out.group.rank(); ++j) {
      const Element src = pres.source(out.group.generator(j));
      proj.emplace_back(src.segment(offsets[s], a.rank()));
    }
    out.projections.emplace_back(Subgroup::whole(out.group), a, std::move(proj));
  }
  return out;
}

Element QuotientPresentation::lift(const Element& y) const {
  const auto& g = kernel.ambient();
  Element x = g.zero();
  for (std::size_t i = 0; i < section.size(); ++i) {
    x = add(g, x, scale(g, y(static_cast<Eigen::Index>(i)), section[i]));
  }
  return x;
}

Subgroup QuotientPresentation::image_of(const Subgroup& k) const {
  std::vector<Element> gens;
  for (const Element& b : k.basis()) gens.push_back(project(b));
  return span(group, gens);
}

Subgroup QuotientPresentation::preimage(const Subgroup& s) const {
  auto gens = kernel.generators();
  for (const Element& y : s.generators()) gens.push_back(lift(y));
  return span(kernel.ambient(), gens);
}

QuotientPresentation quotient(const FiniteAbelianGroup& g, const Subgroup& h) {
  if (!(h.ambient() == g)) {
    throw InvalidInput("quotient: subgroup lives in " + h.ambient().to_string() + ", not " +
                       g.to_string());
  }
  // x -> x V carries the lattice of H onto the diagonal lattice of its Smith
  // form, so G/H = Z^k / diag(s) on the coordinates with s_i > 1.
  const auto snf = smith_normal_form(h.hnf());
  std::vector<Eigen::Index> kept;
  std::vector<Integer> factors;
  for (Eigen::Index i = 0; i < snf.d.rows(); ++i) {
    if (snf.d(i, i) > 1) {
      kept.push_back(i);
      factors.push_back(snf.d(i, i));
    }
  }
  auto q = FiniteAbelianGroup::from_invariant_factors(factors);
  std::vector<Element> proj;
  for (int j = 0; j < g.rank(); ++j) {
    Element y = q.zero();
    for (std::size_t t = 0; t < kept.size(); ++t) {
      y(static_cast<Eigen::Index>(t)) = snf.v(j, kept[t]);
    }
    proj.push_back(reduce(q, y));
  }
  std::vector<Element> section;
  for (Eigen::Index i : kept) section.push_back(reduce(g, Element(snf.v_inv.row(i))));

  QuotientPresentation out{h, q, Homomorphism(Subgroup::whole(g), q, std::move(proj)),
                           std::move(section)};
  if (g.order() != q.order() * h.order() || !(out.projection.kernel() == h) ||
      !out.projection.image().is_whole()) {
    throw std::logic_error("quotient projection failed verification");
  }
  return out;
}

}  // namespace invariatus
