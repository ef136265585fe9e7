#include "invariatus/subgroup.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <sstream>
#include <unordered_map>

#include "invariatus/smith.hpp"

namespace invariatus {

namespace {

Integer mod(Integer a, Integer d) {
  const Integer r = a % d;
  return r < 0 ? r + d : r;
}

// c with c * hnf == t (exact; t must lie in the lattice).
Element solve_lattice(const Matrix<Integer>& hnf, Element t) {
  const auto k = hnf.rows();
  Element c = Element::Zero(k);
  for (Eigen::Index col = 0; col < k; ++col) {
    c(col) = t(col) / hnf(col, col);
    if (c(col) != 0) t -= c(col) * hnf.row(col);
  }
  return c;
}

std::size_t hash_matrix(const Matrix<Integer>& m) {
  std::size_t h = static_cast<std::size_t>(m.rows()) * 0x9e3779b97f4a7c15ULL;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = i; j < m.cols(); ++j) {
      h ^= std::hash<Integer>{}(m(i, j)) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
  }
  return h;
}

struct MatrixKeyHash {
  std::size_t operator()(const Matrix<Integer>& m) const { return hash_matrix(m); }
};
struct MatrixKeyEq {
  bool operator()(const Matrix<Integer>& a, const Matrix<Integer>& b) const { return a == b; }
};

std::vector<Element> hnf_rows(const Matrix<Integer>& hnf) {
  std::vector<Element> rows;
  rows.reserve(static_cast<std::size_t>(hnf.rows()));
  for (Eigen::Index i = 0; i < hnf.rows(); ++i) rows.emplace_back(hnf.row(i));
  return rows;
}

// Subgroup lattice of one p-component, breadth first: every subgroup is
// reached through a chain whose steps have index p, so it suffices to adjoin
// elements g with g outside S and p g inside S.
std::vector<Matrix<Integer>> p_group_lattices(const FiniteAbelianGroup& pg, Integer p,
                                              std::size_t budget, const std::string& label) {
  std::vector<Matrix<Integer>> found;
  std::unordered_map<Matrix<Integer>, std::size_t, MatrixKeyHash, MatrixKeyEq> seen;
  const auto all = elements(pg);
  found.push_back(detail::lattice_hnf(pg, {}));
  seen.emplace(found.back(), 0);
  for (std::size_t next = 0; next < found.size(); ++next) {
    const Matrix<Integer> current = found[next];
    auto gens = hnf_rows(current);
    gens.push_back(pg.zero());
    for (const Element& g : all) {
      if (detail::lattice_contains(current, g)) continue;
      if (!detail::lattice_contains(current, scale(pg, p, g))) continue;
      gens.back() = g;
      Matrix<Integer> h = detail::lattice_hnf(pg, gens);
      if (seen.contains(h)) continue;
      if (found.size() >= budget) {
        throw ResourceLimit("subgroup count of " + label + " exceeds budget of " +
                            std::to_string(budget));
      }
      seen.emplace(h, found.size());
      found.push_back(std::move(h));
    }
  }
  return found;
}

}  // namespace

namespace detail {

Matrix<Integer> lattice_hnf(const FiniteAbelianGroup& g, std::span<const Element> gens) {
  const int k = g.rank();
  std::vector<Element> work;
  work.reserve(gens.size() + static_cast<std::size_t>(k));
  for (const Element& x : gens) {
    Element r = reduce(g, x);
    if (!r.isZero()) work.push_back(r);
  }
  for (int j = 0; j < k; ++j) {
    Element r = g.zero();
    r(j) = g.factor(j);
    work.push_back(r);
  }

  Matrix<Integer> h = Matrix<Integer>::Zero(k, k);
  for (int c = 0; c < k; ++c) {
    for (;;) {
      std::size_t best = work.size();
      for (std::size_t i = 0; i < work.size(); ++i) {
        if (work[i](c) == 0) continue;
        if (best == work.size() || std::abs(work[i](c)) < std::abs(work[best](c))) best = i;
      }
      if (best == work.size()) throw std::logic_error("lattice lost full rank");
      bool clean = true;
      for (std::size_t i = 0; i < work.size(); ++i) {
        if (i == best || work[i](c) == 0) continue;
        const Integer q = work[i](c) / work[best](c);
        work[i] -= q * work[best];
        for (int j = c + 1; j < k; ++j) work[i](j) = mod(work[i](j), g.factor(j));
        if (work[i](c) != 0) clean = false;
      }
      if (!clean) continue;
      Element pivot = work[best];
      if (pivot(c) < 0) pivot = -pivot;
      for (int j = c + 1; j < k; ++j) pivot(j) = mod(pivot(j), g.factor(j));
      h.row(c) = pivot;
      work.erase(work.begin() + static_cast<std::ptrdiff_t>(best));
      std::erase_if(work, [](const Element& r) { return r.isZero(); });
      break;
    }
  }
  for (int c = 0; c < k; ++c) {
    for (int r = 0; r < c; ++r) {
      const Integer q = detail::floor_div(h(r, c), h(c, c));
      if (q != 0) h.row(r) -= q * h.row(c);
    }
  }
  return h;
}

bool lattice_contains(const Matrix<Integer>& hnf, const Element& x) {
  Element t = x;
  for (Eigen::Index c = 0; c < hnf.rows(); ++c) {
    if (t(c) % hnf(c, c) != 0) return false;
    const Integer q = t(c) / hnf(c, c);
    if (q != 0) t.tail(hnf.cols() - c) -= q * hnf.row(c).tail(hnf.cols() - c);
  }
  return true;
}

}  // namespace detail

Subgroup::Subgroup() : Subgroup(zero(FiniteAbelianGroup())) {}

Subgroup Subgroup::zero(const FiniteAbelianGroup& g) {
  return from_hnf(g, detail::lattice_hnf(g, {}));
}

Subgroup Subgroup::whole(const FiniteAbelianGroup& g) {
  return from_hnf(g, Matrix<Integer>::Identity(g.rank(), g.rank()));
}

Subgroup Subgroup::from_hnf(const FiniteAbelianGroup& g, Matrix<Integer> hnf) {
  auto rep = std::make_shared<Rep>();
  rep->ambient = g;
  const int k = g.rank();
  Integer index = 1;
  for (int c = 0; c < k; ++c) index *= hnf(c, c);
  rep->order = g.order() / index;

  // The relations d_j e_j written in lattice coordinates.
  Matrix<Integer> rel(k, k);
  for (int j = 0; j < k; ++j) {
    Element t = g.zero();
    t(j) = g.factor(j);
    rel.row(j) = solve_lattice(hnf, t);
  }
  const auto snf = smith_normal_form(rel);
  std::vector<Eigen::Index> kept;
  for (int i = 0; i < k; ++i) {
    if (snf.d(i, i) > 1) kept.push_back(i);
  }
  rep->coord.resize(k, static_cast<Eigen::Index>(kept.size()));
  for (std::size_t j = 0; j < kept.size(); ++j) {
    const auto i = kept[j];
    rep->shape.push_back(snf.d(i, i));
    Element b = snf.v_inv.row(i) * hnf;
    rep->basis.push_back(reduce(g, b));
    rep->coord.col(static_cast<Eigen::Index>(j)) = snf.v.col(i);
  }
  for (int c = 0; c < k; ++c) {
    if (hnf(c, c) != g.factor(c)) rep->generators.push_back(reduce(g, hnf.row(c)));
  }
  rep->hash = hash_matrix(hnf) ^ std::hash<std::string>{}(g.to_string());
  rep->hnf = std::move(hnf);
  return Subgroup(std::move(rep));
}

bool Subgroup::contains(const Element& x) const {
  return detail::lattice_contains(rep_->hnf, x);
}

Element Subgroup::coordinates(const Element& x) const {
  const Element c = solve_lattice(rep_->hnf, x);
  Element y = c * rep_->coord;
  for (std::size_t i = 0; i < rep_->shape.size(); ++i) {
    y(static_cast<Eigen::Index>(i)) = mod(y(static_cast<Eigen::Index>(i)), rep_->shape[i]);
  }
  return y;
}

Element Subgroup::combine(const Element& coords) const {
  const auto& g = ambient();
  Element x = g.zero();
  for (std::size_t i = 0; i < rep_->basis.size(); ++i) {
    x = add(g, x, scale(g, coords(static_cast<Eigen::Index>(i)), rep_->basis[i]));
  }
  return x;
}

std::vector<Element> Subgroup::elements() const {
  std::vector<Element> out;
  out.reserve(static_cast<std::size_t>(order()));
  const auto m = static_cast<Eigen::Index>(rep_->shape.size());
  Element c = Element::Zero(m);
  for (Integer n = 0; n < order(); ++n) {
    out.push_back(combine(c));
    for (Eigen::Index i = m - 1; i >= 0; --i) {
      if (++c(i) < rep_->shape[static_cast<std::size_t>(i)]) break;
      c(i) = 0;
    }
  }
  return out;
}

std::string Subgroup::to_string() const {
  std::ostringstream os;
  os << '<';
  bool first = true;
  for (const Element& x : generators()) {
    os << (first ? "" : "; ");
    first = false;
    for (Eigen::Index i = 0; i < x.size(); ++i) os << (i ? "," : "") << x(i);
  }
  os << '>';
  return os.str();
}

bool Subgroup::operator==(const Subgroup& other) const {
  if (rep_ == other.rep_) return true;
  return rep_->hash == other.rep_->hash && ambient() == other.ambient() &&
         rep_->hnf == other.rep_->hnf;
}

std::strong_ordering Subgroup::operator<=>(const Subgroup& other) const {
  const auto& fa = ambient().invariant_factors();
  const auto& fb = other.ambient().invariant_factors();
  if (auto c = std::lexicographical_compare_three_way(fa.begin(), fa.end(), fb.begin(), fb.end());
      c != 0) {
    return c;
  }
  if (auto c = order() <=> other.order(); c != 0) return c;
  const auto& a = rep_->generators;
  const auto& b = other.rep_->generators;
  for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i) {
    for (Eigen::Index j = 0; j < a[i].size(); ++j) {
      if (auto c = a[i](j) <=> b[i](j); c != 0) return c;
    }
  }
  if (auto c = a.size() <=> b.size(); c != 0) return c;
  return std::strong_ordering::equal;
}

std::size_t default_subgroup_budget() {
  if (const char* env = std::getenv("INVARIATUS_BUDGET")) {
    char* end = nullptr;
    const auto v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return 100000;
}

Subgroup span(const FiniteAbelianGroup& g, std::span<const Element> elements) {
  for (const Element& x : elements) g.require(x);
  return Subgroup::from_hnf(g, detail::lattice_hnf(g, elements));
}

std::vector<Subgroup> enumerate_subgroups(const FiniteAbelianGroup& g, std::size_t budget) {
  const auto components = primary_decomposition(g);
  std::vector<std::vector<Matrix<Integer>>> per_prime;
  std::size_t total = 1;
  for (const auto& comp : components) {
    per_prime.push_back(p_group_lattices(comp.group, comp.prime, budget, g.to_string()));
    total *= per_prime.back().size();
    if (total > budget) {
      throw ResourceLimit("subgroup count of " + g.to_string() + " exceeds budget of " +
                          std::to_string(budget));
    }
  }

  // Direct product across primes: a subgroup is the sum of its p-parts.
  std::vector<Subgroup> out;
  out.reserve(total);
  std::vector<std::size_t> pick(components.size(), 0);
  for (std::size_t n = 0; n < total; ++n) {
    std::vector<Element> gens;
    for (std::size_t c = 0; c < components.size(); ++c) {
      const auto& h = per_prime[c][pick[c]];
      for (Eigen::Index r = 0; r < h.rows(); ++r) {
        gens.push_back(components[c].embed(g, reduce(components[c].group, h.row(r))));
      }
    }
    out.push_back(Subgroup::from_hnf(g, detail::lattice_hnf(g, gens)));
    for (std::size_t c = components.size(); c-- > 0;) {
      if (++pick[c] < per_prime[c].size()) break;
      pick[c] = 0;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {
void require_same_ambient(const Subgroup& a, const Subgroup& b) {
  if (!(a.ambient() == b.ambient())) {
    throw InvalidInput("subgroups live in different groups: " + a.ambient().to_string() +
                       " vs " + b.ambient().to_string());
  }
}
}  // namespace

Subgroup sum(const Subgroup& a, const Subgroup& b) {
  require_same_ambient(a, b);
  auto gens = a.generators();
  for (const Element& x : b.generators()) gens.push_back(x);
  return Subgroup::from_hnf(a.ambient(), detail::lattice_hnf(a.ambient(), gens));
}

Subgroup intersect(const Subgroup& a, const Subgroup& b) {
  require_same_ambient(a, b);
  const auto& g = a.ambient();
  const Eigen::Index k = g.rank();
  if (k == 0) return a;
  // Rows (x, x) for x in A and (y, 0) for y in B; the echelon rows with a
  // zero left half span {(0, z) : z in A and B}.
  Matrix<Integer> stacked = Matrix<Integer>::Zero(2 * k, 2 * k);
  stacked.block(0, 0, k, k) = a.hnf();
  stacked.block(0, k, k, k) = a.hnf();
  stacked.block(k, 0, k, k) = b.hnf();
  const Matrix<Integer> h = hermite_normal_form(stacked);
  std::vector<Element> gens;
  for (Eigen::Index i = 0; i < h.rows(); ++i) {
    if (h.row(i).head(k).isZero()) gens.emplace_back(h.row(i).tail(k));
  }
  return Subgroup::from_hnf(g, detail::lattice_hnf(g, gens));
}

bool is_subgroup_of(const Subgroup& a, const Subgroup& b) {
  require_same_ambient(a, b);
  if (a.order() > b.order() || b.order() % a.order() != 0) return false;
  for (const Element& x : a.generators()) {
    if (!b.contains(x)) return false;
  }
  return true;
}

Subgroup multiple(const Subgroup& h, Integer m) {
  std::vector<Element> gens;
  for (const Element& b : h.basis()) gens.push_back(scale(h.ambient(), m, b));
  return span(h.ambient(), gens);
}

Subgroup n_socle(const FiniteAbelianGroup& g, Integer n) {
  if (n < 0) throw InvalidInput("socle index must be >= 0");
  std::vector<Element> gens;
  for (int i = 0; i < g.rank(); ++i) {
    Element e = g.zero();
    e(i) = g.factor(i) / gcd(g.factor(i), n);
    gens.push_back(reduce(g, e));
  }
  return span(g, gens);
}

Subgroup p_component(const FiniteAbelianGroup& g, Integer p) {
  std::vector<Element> gens;
  for (int i = 0; i < g.rank(); ++i) {
    Element e = g.zero();
    e(i) = g.factor(i) / ipow(p, valuation(g.factor(i), p));
    gens.push_back(reduce(g, e));
  }
  return span(g, gens);
}

Subgroup p_part(const Subgroup& h, Integer p) {
  // Multiplying by the p'-part of the exponent is an automorphism of H_p
  // and kills every other primary part.
  const Integer e = h.ambient().exponent();
  return multiple(h, e / ipow(p, valuation(e, p)));
}

DirectSummand is_direct_summand(const Subgroup& h, const std::vector<Subgroup>* subgroups) {
  const auto& g = h.ambient();
  std::vector<Subgroup> local;
  if (subgroups == nullptr) {
    local = enumerate_subgroups(g);
    subgroups = &local;
  }
  const Integer want = g.order() / h.order();
  for (const Subgroup& c : *subgroups) {
    if (c.order() != want) continue;
    if (intersect(h, c).is_zero()) return {true, c};
  }
  return {false, std::nullopt};
}

}  // namespace invariatus
