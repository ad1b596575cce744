#pragma once

#include <optional>
#include <string>
#include <vector>

#include "partita/lattice.hpp"
#include "partita/parallel.hpp"

#include <nlohmann/json_fwd.hpp>

namespace partita {

/// A strict S-partition of a group (or of one of its subgroups): a kernel S
/// plus at least two components, each properly between S and the partitioned
/// set, pairwise intersecting exactly in S and jointly covering it.
struct PartitionCertificate {
  std::string group_name;
  ElementSet ambient;              // the partitioned subgroup (usually all of G)
  ElementSet kernel;
  std::vector<ElementSet> components;  // sorted by (order, element list)
  bool equal_orders = false;
  int n_components = 0;
};

struct ValidationResult {
  bool ok = false;
  std::string reason;  // empty when ok
};

/// Re-checks every certificate invariant from the raw element sets,
/// independently of how the certificate was produced.
ValidationResult validate_partition(const FiniteGroup& g,
                                    const PartitionCertificate& cert);

PartitionCertificate make_certificate(const FiniteGroup& g, ElementSet ambient,
                                      ElementSet kernel,
                                      std::vector<ElementSet> components);

/// All strict s-partitions of g (up to `limit`), found by exact cover over
/// the rows {H \ s : s < H < g}. With equal_only, candidate component orders
/// d are scanned in increasing order, restricted to (d - |s|) dividing
/// (|g| - |s|).
std::vector<PartitionCertificate> strict_partitions(const FiniteGroup& g,
                                                    const Lattice& lat,
                                                    int kernel_id,
                                                    bool equal_only,
                                                    std::size_t limit);

/// Same search, but partitioning the subgroup `ambient_id` of g instead of g
/// itself. Components and kernels are drawn from the lattice members below
/// the ambient subgroup.
std::vector<PartitionCertificate> strict_partitions_within(
    const FiniteGroup& g, const Lattice& lat, int ambient_id, int kernel_id,
    bool equal_only, std::size_t limit);

/// Every kernel admitting at least one ES-partition of g, with a sample
/// certificate. Kernels are scanned independently (optionally in parallel);
/// the result order is by kernel id either way.
std::vector<std::pair<int, PartitionCertificate>> es_kernels(
    const FiniteGroup& g, const Lattice& lat,
    ExecMode mode = ExecMode::Serial);

struct FrobeniusStructure {
  int kernel_id = -1;
  int complement_id = -1;
};

/// Searches the lattice for a Frobenius complement H (H meets each of its
/// conjugates trivially) and verifies that the complement-free part
/// K = (G \ union of conjugates of H\{1}) u {1} is a normal subgroup with
/// G = K.H and K n H = 1.
std::optional<FrobeniusStructure> frobenius_structure(const FiniteGroup& g,
                                                      const Lattice& lat);

struct Zapa2Report {
  bool applicable = false;
  std::string skip_reason;
  struct Item {
    std::string description;
    bool pass;
  };
  std::vector<Item> items;
  bool all_pass() const {
    for (const auto& i : items)
      if (!i.pass) return false;
    return true;
  }
};

/// Structural consequences of a strict s-partition with a nontrivial
/// antinormal kernel: the group is Frobenius with s a cyclic complement, the
/// Frobenius kernel K is a p-group, and every component factors as s.K_i
/// where {K_i} is a nontrivial partition of K.
Zapa2Report zapa2_crosscheck(const FiniteGroup& g, const Lattice& lat,
                             int kernel_id, const PartitionCertificate& cert);

nlohmann::json certificate_to_json(const FiniteGroup& g,
                                   const PartitionCertificate& cert);

}  // namespace partita
