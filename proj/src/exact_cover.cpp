#include "partita/exact_cover.hpp"

#include <algorithm>

#include "partita/error.hpp"

namespace partita {

namespace {

struct Solver {
  const std::vector<ElementSet>& rows;
  std::size_t limit;
  std::vector<std::vector<int>> solutions;
  std::vector<int> chosen;

  bool solve(const ElementSet& remaining, const std::vector<int>& active) {
    if (remaining.empty()) {
      solutions.push_back(chosen);
      std::sort(solutions.back().begin(), solutions.back().end());
      return solutions.size() >= limit;
    }
    // Pick the uncovered element with the fewest candidate rows.
    int best = -1, best_count = -1;
    remaining.for_each([&](int e) {
      int c = 0;
      for (int r : active)
        if (rows[r].test(e)) ++c;
      if (best == -1 || c < best_count) {
        best = e;
        best_count = c;
      }
    });
    if (best_count == 0) return false;
    for (int r : active) {
      if (!rows[r].test(best)) continue;
      chosen.push_back(r);
      ElementSet next = remaining.minus(rows[r]);
      std::vector<int> next_active;
      next_active.reserve(active.size());
      for (int s : active)
        if (s != r && rows[s].subset_of(next)) next_active.push_back(s);
      bool done = solve(next, next_active);
      chosen.pop_back();
      if (done) return true;
    }
    return false;
  }
};

}  // namespace

std::vector<std::vector<int>> exact_cover(const ElementSet& universe,
                                          const std::vector<ElementSet>& rows,
                                          std::size_t limit) {
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].empty())
      throw ParameterError("exact_cover: row " + std::to_string(i) +
                           " is empty");
    if (!rows[i].subset_of(universe))
      throw ParameterError("exact_cover: row " + std::to_string(i) +
                           " is not contained in the universe");
  }
  if (limit == 0) return {};
  Solver solver{rows, limit, {}, {}};
  std::vector<int> active;
  active.reserve(rows.size());
  for (int i = 0; i < int(rows.size()); ++i) active.push_back(i);
  solver.solve(universe, active);
  return solver.solutions;
}

}  // namespace partita
