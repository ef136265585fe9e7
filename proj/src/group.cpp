#include "invariatus/group.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include "invariatus/smith.hpp"

namespace invariatus {

Integer gcd(Integer a, Integer b) { return std::gcd(a, b); }

Integer lcm(Integer a, Integer b) { return std::lcm(a, b); }

std::vector<std::pair<Integer, int>> factorize(Integer n) {
  std::vector<std::pair<Integer, int>> out;
  for (Integer p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

int valuation(Integer n, Integer p) {
  int v = 0;
  n = n < 0 ? -n : n;
  while (n != 0 && n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

Integer ipow(Integer base, int exp) {
  Integer r = 1;
  while (exp-- > 0) r *= base;
  return r;
}

FiniteAbelianGroup::FiniteAbelianGroup() {
  static const auto trivial = std::make_shared<const Rep>();
  rep_ = trivial;
}

FiniteAbelianGroup FiniteAbelianGroup::from_invariant_factors(std::vector<Integer> factors) {
  if (static_cast<int>(factors.size()) > kMaxRank) {
    throw InvalidInput("group rank exceeds " + std::to_string(kMaxRank));
  }
  auto rep = std::make_shared<Rep>();
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (factors[i] < 2) throw InvalidInput("invariant factor must be >= 2");
    if (i > 0 && factors[i] % factors[i - 1] != 0) {
      throw InvalidInput("invariant factors must form a divisibility chain");
    }
    if (__builtin_mul_overflow(rep->order, factors[i], &rep->order)) {
      throw InvalidInput("group order overflows");
    }
  }
  for (Integer d : factors) {
    for (auto [p, e] : factorize(d)) rep->primary[p].push_back(ipow(p, e));
  }
  rep->factors = std::move(factors);
  return FiniteAbelianGroup(std::move(rep));
}

std::vector<Integer> FiniteAbelianGroup::primes() const {
  std::vector<Integer> out;
  for (const auto& [p, _] : rep_->primary) out.push_back(p);
  return out;
}

Element FiniteAbelianGroup::generator(int i) const {
  Element x = zero();
  x(i) = 1;
  return x;
}

bool FiniteAbelianGroup::contains(const Element& x) const {
  if (x.size() != rank()) return false;
  for (int i = 0; i < rank(); ++i) {
    if (x(i) < 0 || x(i) >= factor(i)) return false;
  }
  return true;
}

void FiniteAbelianGroup::require(const Element& x) const {
  if (!contains(x)) throw InvalidInput("element does not belong to group " + to_string());
}

Integer FiniteAbelianGroup::index_of(const Element& x) const {
  Integer idx = 0;
  for (int i = 0; i < rank(); ++i) idx = idx * factor(i) + x(i);
  return idx;
}

Element FiniteAbelianGroup::element_at(Integer index) const {
  Element x = zero();
  for (int i = rank() - 1; i >= 0; --i) {
    x(i) = index % factor(i);
    index /= factor(i);
  }
  return x;
}

std::string FiniteAbelianGroup::to_string() const {
  if (is_trivial()) return "1";
  std::ostringstream os;
  for (int i = 0; i < rank(); ++i) os << (i ? "x" : "") << factor(i);
  return os.str();
}

FiniteAbelianGroup make_group(std::span<const Integer> factors) {
  // Regroup prime powers: the j-th largest invariant factor collects the
  // j-th largest power of every prime.
  std::map<Integer, std::vector<int>> exps;
  for (Integer f : factors) {
    if (f <= 1) throw InvalidInput("cyclic factor must be >= 2, got " + std::to_string(f));
    for (auto [p, e] : factorize(f)) exps[p].push_back(e);
  }
  std::size_t k = 0;
  for (auto& [p, es] : exps) {
    std::sort(es.begin(), es.end(), std::greater<>());
    k = std::max(k, es.size());
  }
  std::vector<Integer> inv(k, 1);
  for (const auto& [p, es] : exps) {
    for (std::size_t j = 0; j < es.size(); ++j) inv[k - 1 - j] *= ipow(p, es[j]);
  }
  return FiniteAbelianGroup::from_invariant_factors(std::move(inv));
}

CanonicalPresentation canonical_presentation(std::span<const Integer> factors) {
  CanonicalPresentation out;
  out.source_factors.assign(factors.begin(), factors.end());
  out.group = make_group(factors);
  const auto m = static_cast<Eigen::Index>(factors.size());
  Matrix<Integer> rel = Matrix<Integer>::Zero(m, m);
  for (Eigen::Index i = 0; i < m; ++i) rel(i, i) = factors[static_cast<std::size_t>(i)];
  const auto snf = smith_normal_form(rel);

  std::vector<Eigen::Index> keep;
  for (Eigen::Index i = 0; i < m; ++i) {
    if (snf.d(i, i) > 1) keep.push_back(i);
  }
  const auto k = static_cast<Eigen::Index>(keep.size());
  if (k != out.group.rank()) throw std::logic_error("canonical presentation rank mismatch");
  out.to_canonical.resize(m, k);
  out.from_canonical.resize(k, m);
  for (Eigen::Index j = 0; j < k; ++j) {
    if (snf.d(keep[j], keep[j]) != out.group.factor(static_cast<int>(j))) {
      throw std::logic_error("canonical presentation factor mismatch");
    }
    out.to_canonical.col(j) = snf.v.col(keep[j]);
    out.from_canonical.row(j) = snf.v_inv.row(keep[j]);
  }
  return out;
}

Element CanonicalPresentation::canonical(const Element& source) const {
  return reduce(group, source * to_canonical);
}

Element CanonicalPresentation::source(const Element& canon) const {
  Element x = canon * from_canonical;
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    const Integer n = source_factors[static_cast<std::size_t>(i)];
    x(i) = ((x(i) % n) + n) % n;
  }
  return x;
}

Element PrimaryComponent::embed(const FiniteAbelianGroup& ambient, const Element& y) const {
  Element x = ambient.zero();
  for (Eigen::Index j = 0; j < y.size(); ++j) x += y(j) * embedding[static_cast<std::size_t>(j)];
  return reduce(ambient, x);
}

std::vector<PrimaryComponent> primary_decomposition(const FiniteAbelianGroup& g) {
  std::vector<PrimaryComponent> out;
  for (const auto& [p, powers] : g.primary_factors()) {
    PrimaryComponent c;
    c.prime = p;
    c.group = FiniteAbelianGroup::from_invariant_factors(powers);
    // Coordinates of G carrying a nontrivial p-part, in order; the p-parts
    // ascend with the invariant factors, so this is already canonical.
    for (int i = 0; i < g.rank(); ++i) {
      const Integer pe = ipow(p, valuation(g.factor(i), p));
      if (pe == 1) continue;
      Element e = g.zero();
      e(i) = g.factor(i) / pe;
      c.embedding.push_back(e);
    }
    out.push_back(std::move(c));
  }
  return out;
}

Element reduce(const FiniteAbelianGroup& g, const Element& x) {
  Element r(x.size());
  for (int i = 0; i < g.rank(); ++i) {
    const Integer d = g.factor(i);
    r(i) = ((x(i) % d) + d) % d;
  }
  return r;
}

Element add(const FiniteAbelianGroup& g, const Element& x, const Element& y) {
  Element r(x.size());
  for (int i = 0; i < g.rank(); ++i) {
    const Integer s = x(i) + y(i);
    r(i) = s >= g.factor(i) ? s - g.factor(i) : s;
  }
  return r;
}

Element negate(const FiniteAbelianGroup& g, const Element& x) {
  Element r(x.size());
  for (int i = 0; i < g.rank(); ++i) r(i) = x(i) == 0 ? 0 : g.factor(i) - x(i);
  return r;
}

Element subtract(const FiniteAbelianGroup& g, const Element& x, const Element& y) {
  return add(g, x, negate(g, y));
}

Element scale(const FiniteAbelianGroup& g, Integer k, const Element& x) {
  Element r(x.size());
  for (int i = 0; i < g.rank(); ++i) {
    const Integer d = g.factor(i);
    const Integer kk = ((k % d) + d) % d;
    r(i) = static_cast<Integer>((static_cast<__int128>(kk) * x(i)) % d);
  }
  return r;
}

Integer order(const FiniteAbelianGroup& g, const Element& x) {
  Integer o = 1;
  for (int i = 0; i < g.rank(); ++i) o = lcm(o, g.factor(i) / gcd(g.factor(i), x(i)));
  return o;
}

int p_height(const FiniteAbelianGroup& g, const Element& x, Integer p) {
  // x_i lies in p^n (Z/d_i) iff gcd(p^n, d_i) divides x_i.
  int h = kInfiniteHeight;
  for (int i = 0; i < g.rank(); ++i) {
    if (x(i) == 0) continue;
    const int vx = valuation(x(i), p);
    if (vx < valuation(g.factor(i), p)) h = std::min(h, vx);
  }
  return h;
}

std::vector<Element> elements(const FiniteAbelianGroup& g) {
  std::vector<Element> out;
  out.reserve(static_cast<std::size_t>(g.order()));
  for (Integer i = 0; i < g.order(); ++i) out.push_back(g.element_at(i));
  return out;
}

std::vector<Element> torsion_elements(const FiniteAbelianGroup& g, Integer n) {
  std::vector<Element> out;
  for (Integer i = 0; i < g.order(); ++i) {
    Element x = g.element_at(i);
    bool killed = true;
    for (int j = 0; j < g.rank() && killed; ++j) {
      killed = (static_cast<__int128>(n) * x(j)) % g.factor(j) == 0;
    }
    if (killed) out.push_back(std::move(x));
  }
  return out;
}

}  // namespace invariatus
