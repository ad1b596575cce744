#pragma once

#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "partita/group.hpp"

namespace partita {

/// One subgroup inside a computed lattice. Subgroups are identified by their
/// literal element set; ids index the canonical (order, elements) sort.
struct Subgroup {
  int id = -1;
  int order = 0;
  bool normal = false;
  bool cyclic = false;
  ElementSet elements;
};

/// The full subgroup lattice of a finite group: every subgroup exactly once,
/// sorted by (order, element list), plus the containment matrix and the
/// lattice-dependent distinguished subgroups.
class Lattice {
 public:
  /// Enumerates all subgroups by seeding with the cyclic subgroups and
  /// closing under pairwise joins. Throws SizeError if |g| exceeds the cap.
  static Lattice enumerate(const FiniteGroup& g, int cap = 200);

  /// The lattice owns a copy of the group, so it stays valid on its own;
  /// element sets remain compatible with the original (same tag).
  const FiniteGroup& group() const { return *g_; }
  int size() const { return int(subs_.size()); }
  const Subgroup& at(int id) const { return subs_[id]; }
  int trivial_id() const { return 0; }
  int whole_id() const { return size() - 1; }

  /// Lattice id of an element set, or -1 when the set is not a subgroup.
  int id_of(const ElementSet& s) const;
  /// a <= b as subgroups.
  bool le(int a, int b) const { return leq_[a][size_t(b)]; }
  bool is_maximal(int id) const { return maximal_[id]; }
  /// Maximal subgroups of the whole group.
  std::vector<int> maximal_ids() const;
  /// All ids strictly between s and ambient: s < H < ambient.
  std::vector<int> between(int s, int ambient) const;
  /// All ids contained in ambient (including it).
  std::vector<int> under(int ambient) const;

  /// Largest normal subgroup of G inside s (the intersection of all
  /// conjugates of s).
  int normal_core(int s) const;
  bool is_antinormal(int s) const { return normal_core(s) == trivial_id(); }
  /// Intersection of all maximal subgroups.
  int frattini() const;
  /// A Sylow p-subgroup (the canonically first one). p must divide |G|.
  int sylow(int p) const;
  /// Hughes subgroup: generated by every element whose order is not p.
  int hughes(int p) const;
  std::vector<int> proper_noncyclic() const;

 private:
  std::shared_ptr<const FiniteGroup> g_;
  std::vector<Subgroup> subs_;
  std::vector<std::vector<bool>> leq_;
  std::vector<bool> maximal_;
  std::unordered_map<ElementSet, int, ElementSetHash> index_;
};

/// Least subgroup containing the seed. The seed must be nonempty.
ElementSet generated_subgroup(const FiniteGroup& g, const ElementSet& seed);

}  // namespace partita
