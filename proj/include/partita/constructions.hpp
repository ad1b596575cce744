#pragma once

#include <unordered_map>

#include "partita/partition.hpp"

namespace partita {

/// Quotient projection with subgroup lifting. Lifting a quotient subgroup
/// and projecting it back is the identity; every lifted subgroup contains
/// the normal subgroup the quotient was taken by.
class LiftMap {
 public:
  LiftMap(const FiniteGroup& g, const ElementSet& normal_subgroup);

  const FiniteGroup& parent() const { return *parent_; }
  const FiniteGroup& quotient_group() const { return quot_; }
  const std::vector<int>& projection() const { return proj_; }

  /// Preimage of a quotient subset (cached per subset).
  ElementSet lift(const ElementSet& quotient_set) const;
  /// Image of a parent subset.
  ElementSet project(const ElementSet& parent_set) const;

 private:
  LiftMap(const FiniteGroup& g, QuotientResult q);

  const FiniteGroup* parent_;
  FiniteGroup quot_;
  std::vector<int> proj_;
  mutable std::unordered_map<ElementSet, ElementSet, ElementSetHash> cache_;
};

/// The equally partition of a p-group of exponent p: kernel 1, components all
/// cyclic subgroups of order p, n = (|g|-1)/(p-1). Requires |g| > p.
PartitionCertificate exponent_p_partition(const FiniteGroup& g);

/// Pulls a strict partition of the quotient back through the projection. The
/// lifted kernel is the preimage of the quotient kernel; equal orders are
/// preserved.
PartitionCertificate lift_partition(const LiftMap& lm,
                                    const PartitionCertificate& quotient_cert);

/// ES-partition of a non-cyclic p-group with kernel its Frattini subgroup:
/// composes the Frattini quotient (elementary abelian), the exponent-p
/// partition, and the lift.
PartitionCertificate frattini_es_partition(const FiniteGroup& p_group);

struct ExtendedPartition {
  FiniteGroup group;  // the semidirect product
  PartitionCertificate cert;
};

/// From an ES-partition {H_i} of g and an action of g on h, the ES-partition
/// {H_i x| h} of the semidirect product, with kernel S x| h.
ExtendedPartition extend_partition_semidirect(
    const FiniteGroup& g, const FiniteGroup& h,
    const std::vector<std::vector<int>>& action,
    const PartitionCertificate& cert_on_g);

/// ES-partition of any non-cyclic nilpotent group: applies the Frattini
/// construction to the non-cyclic Sylow subgroup with the smallest prime and
/// extends across the product of the remaining Sylow subgroups.
PartitionCertificate nilpotent_es_partition(const FiniteGroup& g);

struct DihedralPartition {
  FiniteGroup group;  // D_2n
  PartitionCertificate cert;
};

/// For even n >= 4: the centralizers of D_2n form a strict Z(D_2n)-partition
/// with components <x> and the n/2 reflection centralizers of order 4.
/// Equal orders exactly when n = 4.
DihedralPartition dihedral_centralizer_partition(int n);

struct Example108 {
  FiniteGroup group;  // (Z3 x Z3 x Z3) x| (Z2 x Z2), order 108
  PartitionCertificate cert;
};

/// The order-108 group with a non-nilpotent ES-partition whose kernel is the
/// abelian normal subgroup of order 27; the three components have order 54.
Example108 example_group_108();

}  // namespace partita
