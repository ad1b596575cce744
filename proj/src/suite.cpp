#include "partita/suite.hpp"

#include <algorithm>

namespace partita {

std::vector<std::string> resolve_selection(const std::vector<std::string>& sel) {
  if (sel.empty()) return {};
  if (sel.size() == 1 && sel[0] == "all") return all_check_ids();
  for (const auto& id : sel) {
    const auto& ids = all_check_ids();
    if (std::find(ids.begin(), ids.end(), id) == ids.end())
      throw ParameterError("unknown check id: " + id);
  }
  return sel;
}

std::vector<VerdictReport> run_suite(Corpus& corpus,
                                     const std::vector<std::string>& selection,
                                     ExecMode mode, std::size_t cert_bound) {
  auto checks = resolve_selection(selection);
  std::vector<std::vector<VerdictReport>> per(corpus.size());
  parallel_for(corpus.size(), mode, [&](std::size_t i) {
    if (checks.empty()) return;
    try {
      CheckSession session(corpus.group(i), corpus.lattice(i),
                           corpus.entry(i).tags, cert_bound);
      for (const auto& id : checks) {
        VerdictReport r = run_check(id, session);
        r.group = corpus.entry(i).name;
        per[i].push_back(std::move(r));
      }
    } catch (const std::exception& ex) {
      VerdictReport r{"error", corpus.entry(i).name, {}, 0};
      r.clauses.push_back({std::string("check aborted: ") + ex.what(),
                           Status::Fail, {}});
      per[i] = {std::move(r)};
    }
  });
  std::vector<VerdictReport> out;
  for (auto& v : per)
    for (auto& r : v) out.push_back(std::move(r));
  std::stable_sort(out.begin(), out.end(),
                   [](const VerdictReport& a, const VerdictReport& b) {
                     if (a.theorem != b.theorem) return a.theorem < b.theorem;
                     return a.group < b.group;
                   });
  return out;
}

bool suite_has_fail(const std::vector<VerdictReport>& reports) {
  for (const auto& r : reports)
    if (r.has_fail()) return true;
  return false;
}

nlohmann::json reports_to_json(const std::vector<VerdictReport>& reports) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& r : reports) j.push_back(r.to_json());
  return j;
}

}  // namespace partita
