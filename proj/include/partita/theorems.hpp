#pragma once

#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include <nlohmann/json.hpp>

#include "partita/constructions.hpp"
#include "partita/partition.hpp"

namespace partita {

enum class Status { Pass, Fail, Vacuous, Skipped };
const char* status_name(Status s);

struct Clause {
  std::string description;
  Status status = Status::Pass;
  nlohmann::json witness;  // null when absent
};

struct VerdictReport {
  std::string theorem;
  std::string group;
  std::vector<Clause> clauses;
  double ms = 0.0;

  bool has_fail() const {
    for (const auto& c : clauses)
      if (c.status == Status::Fail) return true;
    return false;
  }
  nlohmann::json to_json() const;
};

/// Per-group verification state: one group, its lattice, its corpus tags, and
/// memoized derived data shared by the individual theorem checks. Sessions
/// are not thread-safe; different groups get different sessions and may run
/// concurrently.
class CheckSession {
 public:
  CheckSession(const FiniteGroup& g, const Lattice& lat,
               std::vector<std::string> tags = {},
               std::size_t cert_bound = 10000);

  const FiniteGroup& group() const { return *g_; }
  const Lattice& lattice() const { return *lat_; }
  const std::vector<std::string>& tags() const { return tags_; }
  std::size_t cert_bound() const { return bound_; }

  bool nilpotent();
  const ElementSet& hyper();
  bool subgroup_nilpotent(int id);
  bool subgroup_solvable(int id);

  /// Strict/ES search over a subgroup of g, with the pi-lemma asserted on
  /// every equal-orders certificate that comes back.
  std::vector<PartitionCertificate> search(int ambient_id, int kernel_id,
                                           bool equal_only, std::size_t limit);
  bool has_es_with_kernel(int ambient_id, int kernel_id);
  /// Does the subgroup admit an ES-partition for any kernel?
  bool has_es_within(int ambient_id);

  struct EsEnumeration {
    std::vector<std::pair<int, PartitionCertificate>> certs;  // by kernel id
    std::vector<int> bounded_kernels;  // kernels whose enumeration hit the bound
  };
  /// Every ES-partition certificate of g over every kernel, bounded per
  /// kernel; memoized.
  const EsEnumeration& es_enumeration();

  std::vector<nlohmann::json> drain_pi_violations();

  /// Quotient data for zapa1, cached per normal subgroup id.
  struct QuotientContext {
    LiftMap lift;
    Lattice lattice;
  };
  const QuotientContext& quotient_context(int n_id);

 private:
  const FiniteGroup* g_;
  const Lattice* lat_;
  std::vector<std::string> tags_;
  std::size_t bound_;

  std::optional<bool> nilpotent_;
  std::optional<ElementSet> hyper_;
  std::unordered_map<int, bool> sub_nilpotent_;
  std::unordered_map<int, bool> sub_solvable_;
  std::unordered_map<long long, bool> es_kernel_memo_;  // (ambient, kernel)
  std::unordered_map<int, bool> es_within_memo_;
  std::optional<EsEnumeration> es_enum_;
  std::vector<nlohmann::json> pi_violations_;
  std::unordered_map<int, std::unique_ptr<QuotientContext>> quot_;
};

// ---- individual checks -------------------------------------------------------

/// t1: nilpotent <=> ES-partition with normal kernel inside the hypercenter
/// <=> every non-cyclic subgroup has an ES-partition. Skipped for cyclic
/// groups.
VerdictReport check_main_theorem(CheckSession& s);

/// lr1: for every ES-partition certificate, nilpotency of the group is
/// equivalent to the kernel being normal and inside the hypercenter.
VerdictReport check_lr1(CheckSession& s);

/// co1: square-free order admits no ES-partition.
VerdictReport check_squarefree(CheckSession& s);

struct SchmidtFlags {
  bool schmidt = false;         // non-nilpotent, all proper subgroups nilpotent
  bool minimal_non_es = false;  // non-cyclic, no ES-partition, every proper
                                // non-cyclic subgroup has one
};
SchmidtFlags schmidt_flags(CheckSession& s);

/// co35: Schmidt <=> minimal non-ES-partition group.
VerdictReport check_schmidt(CheckSession& s);

struct EfOutcome {
  bool applicable = false;  // false for cyclic groups
  bool predicate = false;   // exists a nontrivial F working for every proper
                            // non-cyclic subgroup
  int witness_f = -1;       // lattice id of such an F, or -1
  bool vacuous = false;     // no proper non-cyclic subgroups at all
  bool recognizer = false;  // structural match against the classified list
  std::string tag;          // which class matched
  bool boundary = false;    // Z2 x Q8 shaped: reported, never asserted
};
EfOutcome ef_outcome(CheckSession& s);

/// t2: the EF-partition predicate versus the structural recognizers for the
/// classified groups. Disagreements are reported with an annotation, never
/// silently reconciled and never failed.
VerdictReport ef_predicate(CheckSession& s);

/// prop0: an ES-partition with a solvable kernel forces a solvable group.
VerdictReport check_prop_solvable(CheckSession& s);

struct Zapa1Counts {
  std::size_t upstairs = 0;
  std::size_t downstairs = 0;
  bool bounded = false;     // an enumeration hit the bound; nothing asserted
  bool bijective = false;   // counts equal and certificates correspond
  std::string detail;
};
/// Counts strict s-partitions of g against strict (s/n)-partitions of g/n and
/// checks the projection/lift bijection between them.
Zapa1Counts zapa1_counts(CheckSession& s, int n_id, int s_id);

/// zapa1 over every (normal n, s >= n) pair of the group.
VerdictReport check_zapa1(CheckSession& s);

/// zapa2 structural consequences for every strict partition with a
/// nontrivial antinormal kernel.
VerdictReport check_zapa2(CheckSession& s);

/// Baer-Kegel-Suzuki: existence of a kernel-1 partition against the
/// recognizable classification branches (p-group with proper Hughes subgroup,
/// Frobenius, Hughes-Thompson, tagged PSL/PGL). Unrecognized classes are
/// skipped, not failed.
VerdictReport classification_crosscheck(CheckSession& s);

const std::vector<std::string>& all_check_ids();
/// Runs one check by id ("t1", "lr1", "co1", "co35", "t2", "prop0", "zapa1",
/// "zapa2", "class"), fills in elapsed time and any pi-lemma violations.
VerdictReport run_check(const std::string& id, CheckSession& s);

}  // namespace partita
