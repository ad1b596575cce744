#pragma once

#include <cstddef>
#include <vector>

#include "partita/element_set.hpp"

namespace partita {

/// Exact-cover search: selects sets of rows that are pairwise disjoint and
/// whose union is exactly the universe. Backtracking with
/// minimum-remaining-candidates column selection; ties break toward the
/// lowest element index, and candidate rows are tried in ascending row order,
/// so the output order is deterministic for a fixed row order.
///
/// Each row must be nonempty and contained in the universe. An empty universe
/// has exactly one cover: the empty selection. Returns up to `limit`
/// solutions, each a sorted list of row indices.
std::vector<std::vector<int>> exact_cover(const ElementSet& universe,
                                          const std::vector<ElementSet>& rows,
                                          std::size_t limit = SIZE_MAX);

}  // namespace partita
