#pragma once

#include <vector>

#include "invariatus/group.hpp"

namespace invariatus {

/// Every abelian group of order <= max_order whose p-rank is at most
/// `max_rank` for every prime p, ordered by (order, invariant factors).
std::vector<FiniteAbelianGroup> abelian_corpus(Integer max_order, int max_rank = 4);

/// The p-groups of the corpus (order p^a <= max_order, rank <= max_rank).
std::vector<FiniteAbelianGroup> p_group_corpus(Integer p, Integer max_order, int max_rank);

/// Partitions of n into at most `max_parts` parts, each descending.
std::vector<std::vector<int>> partitions(int n, int max_parts);

}  // namespace invariatus
