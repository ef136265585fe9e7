#include "invariatus/corpus.hpp"

#include <algorithm>

namespace invariatus {

namespace {

void partitions_into(int n, int max_part, int max_parts, std::vector<int>& cur,
                     std::vector<std::vector<int>>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  if (max_parts == 0) return;
  for (int part = std::min(n, max_part); part >= 1; --part) {
    cur.push_back(part);
    partitions_into(n - part, part, max_parts - 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<std::vector<int>> partitions(int n, int max_parts) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  partitions_into(n, n, max_parts, cur, out);
  return out;
}

std::vector<FiniteAbelianGroup> abelian_corpus(Integer max_order, int max_rank) {
  std::vector<FiniteAbelianGroup> out;
  for (Integer n = 1; n <= max_order; ++n) {
    // One partition per prime; the group is the sum of the prime-power parts.
    const auto fac = factorize(n);
    std::vector<std::vector<std::vector<int>>> choices;
    for (auto [p, e] : fac) choices.push_back(partitions(e, max_rank));
    if (std::any_of(choices.begin(), choices.end(), [](const auto& c) { return c.empty(); })) {
      continue;
    }
    std::vector<FiniteAbelianGroup> level;
    std::vector<std::size_t> pick(choices.size(), 0);
    for (;;) {
      std::vector<Integer> factors;
      for (std::size_t i = 0; i < fac.size(); ++i) {
        for (int a : choices[i][pick[i]]) factors.push_back(ipow(fac[i].first, a));
      }
      level.push_back(make_group(factors));
      bool done = true;
      for (std::size_t i = choices.size(); i-- > 0;) {
        if (++pick[i] < choices[i].size()) {
          done = false;
          break;
        }
        pick[i] = 0;
      }
      if (done) break;
    }
    std::sort(level.begin(), level.end(), [](const auto& a, const auto& b) {
      return a.invariant_factors() < b.invariant_factors();
    });
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

std::vector<FiniteAbelianGroup> p_group_corpus(Integer p, Integer max_order, int max_rank) {
  std::vector<FiniteAbelianGroup> out;
  int a = 0;
  for (Integer q = 1; q <= max_order; q *= p, ++a) {
    for (const auto& part : partitions(a, max_rank)) {
      std::vector<Integer> factors;
      for (int e : part) factors.push_back(ipow(p, e));
      out.push_back(make_group(factors));
    }
  }
  return out;
}

}  // namespace invariatus
