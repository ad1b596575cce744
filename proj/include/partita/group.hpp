#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "partita/element_set.hpp"
#include "partita/error.hpp"

namespace partita {

/// A finite group given by its complete multiplication table over element
/// indices 0..n-1, with the identity always at index 0. The table invariants
/// (identity, Latin square, associativity) are verified eagerly at
/// construction, so a FiniteGroup that exists is a group.
///
/// Instances are immutable after construction and safe to share across
/// threads.
class FiniteGroup {
 public:
  /// Hard cap on the order; the library targets small groups and the table
  /// checks are cubic.
  static constexpr int kMaxOrder = 512;

  FiniteGroup(std::string name, int order, std::vector<int> table,
              std::vector<std::string> labels = {});

  int order() const { return n_; }
  int mul(int a, int b) const { return table_[a * n_ + b]; }
  int inv(int a) const { return inv_[a]; }
  /// Conjugate of x by g: g^-1 x g.
  int conj(int x, int g) const { return mul(mul(inv_[g], x), g); }
  /// [a, b] = a^-1 b^-1 a b.
  int commutator(int a, int b) const {
    return mul(mul(inv_[a], inv_[b]), mul(a, b));
  }

  /// Least k >= 1 with x^k = identity.
  int element_order(int x) const;

  const std::string& name() const { return name_; }
  const std::string& label(int i) const { return labels_[i]; }
  std::uint32_t tag() const { return tag_; }

  ElementSet make_set() const { return ElementSet(tag_, n_); }
  ElementSet full_set() const;
  ElementSet singleton(int i) const;
  ElementSet set_of(const std::vector<int>& xs) const;

 private:
  std::string name_;
  int n_;
  std::vector<int> table_;
  std::vector<int> inv_;
  std::vector<std::string> labels_;
  std::uint32_t tag_;
};

// ---- family builders -------------------------------------------------------

FiniteGroup cyclic_group(int n);
/// Direct product of cyclic groups Z_f1 x Z_f2 x ...; empty list gives the
/// trivial group.
FiniteGroup abelian_group(const std::vector<int>& factors);
/// Dihedral group of order 2n: <x, y | x^n = y^2 = 1, y x y = x^-1>.
/// Elements: x^i at index i, x^i y at index n + i.
FiniteGroup dihedral_group(int n);
/// Generalized quaternion group of order 2^k (k >= 3):
/// <a, b | a^(2^(k-1)) = 1, b^2 = a^(2^(k-2)), b^-1 a b = a^-1>.
FiniteGroup quaternion_group(int order);
/// Symmetric group on n <= 5 letters, elements enumerated in lexicographic
/// permutation order. Product sigma*tau acts as sigma after tau.
FiniteGroup symmetric_group(int n);
FiniteGroup alternating_group(int n);
/// Metacyclic group <a, b | a^p = b^(q^m) = 1, b^-1 a b = a^r> with p, q
/// distinct primes, r != 1 (mod p) and r^q = 1 (mod p).
FiniteGroup metacyclic_group(int p, int q, int m, long long r);

/// Semidirect product with `normal` embedded as a normal subgroup and
/// `acting` as a complement. `action` maps each element a of `acting` to a
/// permutation of the elements of `normal`; it must be a homomorphism into
/// the automorphisms of `normal` (checked). Element (k, n) sits at index
/// k * |normal| + n.
FiniteGroup semidirect_product(const FiniteGroup& acting,
                               const FiniteGroup& normal,
                               const std::vector<std::vector<int>>& action,
                               const std::string& name = "");
FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b,
                           const std::string& name = "");

/// The identity permutation action of `acting` on `normal` elements.
std::vector<std::vector<int>> trivial_action(const FiniteGroup& acting,
                                             const FiniteGroup& normal);
/// Every element of `acting` acts by inversion on an abelian `normal`.
/// Only valid when |acting| has exponent dividing 2.
std::vector<std::vector<int>> inversion_action(const FiniteGroup& acting,
                                               const FiniteGroup& normal);

// ---- Cayley-table file format ----------------------------------------------
// First line "n", then n lines of n whitespace-separated integers; optional
// "# labels:" trailer line listing n display strings.

FiniteGroup group_from_cayley(std::istream& in, const std::string& name);
FiniteGroup group_from_cayley_file(const std::string& path,
                                   const std::string& name);
std::string group_to_cayley(const FiniteGroup& g);

// ---- structural operations ---------------------------------------------------

struct QuotientResult {
  FiniteGroup group;             // G/N on coset representatives
  std::vector<int> projection;   // element index -> coset index
};
/// Quotient by a normal subgroup; throws ConstructionError naming a
/// conjugating element if n is not normal.
QuotientResult quotient(const FiniteGroup& g, const ElementSet& n);

/// The subgroup generated by a set (identity is always included).
ElementSet closure(const FiniteGroup& g, const ElementSet& seed);
/// Whether a set is closed under multiplication and contains the identity.
bool is_subgroup_set(const FiniteGroup& g, const ElementSet& s);
/// Element-wise product set {a*b : a in A, b in B}.
ElementSet set_product(const FiniteGroup& g, const ElementSet& a,
                       const ElementSet& b);
ElementSet conjugate_set(const FiniteGroup& g, const ElementSet& s, int x);

ElementSet center(const FiniteGroup& g);
ElementSet centralizer(const FiniteGroup& g, int x);
/// Z(G) together with the centralizer of every element.
std::pair<ElementSet, std::vector<ElementSet>> center_and_centralizers(
    const FiniteGroup& g);

enum class SeriesKind { Derived, LowerCentral, UpperCentral };

struct SeriesChain {
  SeriesKind kind;
  std::vector<ElementSet> terms;  // stabilized: the last term repeats from there on
};

SeriesChain series(const FiniteGroup& g, SeriesKind kind);
ElementSet hypercenter(const FiniteGroup& g);
bool is_nilpotent(const FiniteGroup& g);
bool is_solvable(const FiniteGroup& g);
bool is_cyclic(const FiniteGroup& g);
/// lcm of all element orders.
int exponent(const FiniteGroup& g);

/// Map order -> number of elements of that order.
std::map<int, int> order_statistics(const FiniteGroup& g);

struct InducedSubgroup {
  FiniteGroup group;
  std::vector<int> to_parent;  // induced index -> parent index
};
/// The subgroup on its own element indices (sorted ascending, so the parent
/// identity lands at index 0).
InducedSubgroup induced_subgroup(const FiniteGroup& g, const ElementSet& h,
                                 const std::string& name = "");

bool is_prime(long long n);
/// |G| = p^k for some prime p; reports p.
bool is_prime_power(int n, int* p = nullptr);
/// Largest power of p dividing n.
int p_part(int n, int p);
bool is_squarefree(int n);

}  // namespace partita
