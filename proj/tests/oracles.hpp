#pragma once

#include <set>
#include <vector>

#include "partita/lattice.hpp"
#include "partita/partition.hpp"

// Independent reference implementations used only by the tests. They avoid
// the production search paths on purpose: subgroup counting enumerates raw
// subsets, and the partition oracle enumerates subgroup subsets and checks
// the definition directly instead of reducing to exact cover.
namespace partita::oracles {

/// Number of subgroups, by testing every subset containing the identity for
/// closure. Exponential in |g|; keep |g| <= 24.
std::size_t count_subgroups_naive(const FiniteGroup& g);

/// Every strict kernel-partition of the ambient subgroup, by depth-first
/// enumeration of subsets of the candidate subgroup list with the
/// pairwise-intersection and union conditions checked from the definition.
std::vector<PartitionCertificate> strict_partitions_naive(
    const FiniteGroup& g, const Lattice& lat, int ambient_id, int kernel_id,
    bool equal_only);

using CertKey = std::pair<std::vector<int>, std::vector<std::vector<int>>>;
CertKey certificate_key(const PartitionCertificate& cert);
std::set<CertKey> certificate_keys(
    const std::vector<PartitionCertificate>& certs);

}  // namespace partita::oracles
