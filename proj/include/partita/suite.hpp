#pragma once

#include "partita/corpus.hpp"
#include "partita/theorems.hpp"

namespace partita {

/// Expands "all" / validates a list of check ids.
std::vector<std::string> resolve_selection(const std::vector<std::string>& sel);

/// Runs the selected checks over every corpus group. Groups are independent
/// and may run in parallel; reports are merged deterministically by
/// (theorem id, group name). Builder or lattice errors are reported per
/// group without aborting the suite.
std::vector<VerdictReport> run_suite(Corpus& corpus,
                                     const std::vector<std::string>& selection,
                                     ExecMode mode = ExecMode::Serial,
                                     std::size_t cert_bound = 10000);

bool suite_has_fail(const std::vector<VerdictReport>& reports);
nlohmann::json reports_to_json(const std::vector<VerdictReport>& reports);

}  // namespace partita
