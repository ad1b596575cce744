#include "partita/constructions.hpp"

#include <algorithm>
#include <set>

namespace partita {

LiftMap::LiftMap(const FiniteGroup& g, const ElementSet& normal_subgroup)
    : LiftMap(g, quotient(g, normal_subgroup)) {}

LiftMap::LiftMap(const FiniteGroup& g, QuotientResult q)
    : parent_(&g), quot_(std::move(q.group)), proj_(std::move(q.projection)) {}

ElementSet LiftMap::lift(const ElementSet& quotient_set) const {
  auto it = cache_.find(quotient_set);
  if (it != cache_.end()) return it->second;
  ElementSet out = parent_->make_set();
  for (int x = 0; x < parent_->order(); ++x)
    if (quotient_set.test(proj_[x])) out.set(x);
  cache_.emplace(quotient_set, out);
  return out;
}

ElementSet LiftMap::project(const ElementSet& parent_set) const {
  ElementSet out = quot_.make_set();
  parent_set.for_each([&](int x) { out.set(proj_[x]); });
  return out;
}

PartitionCertificate exponent_p_partition(const FiniteGroup& g) {
  int p = 0;
  if (!is_prime_power(g.order(), &p))
    throw ParameterError("exponent_p_partition: group is not a p-group");
  if (g.order() == p)
    throw ParameterError(
        "exponent_p_partition: group of order p is cyclic and has no "
        "partition");
  if (exponent(g) != p)
    throw ParameterError("exponent_p_partition: exponent is not p");

  std::set<std::vector<int>> lines;
  for (int x = 1; x < g.order(); ++x)
    lines.insert(closure(g, g.singleton(x)).to_indices());
  std::vector<ElementSet> comps;
  for (const auto& l : lines) comps.push_back(g.set_of(l));
  ElementSet triv = g.make_set();
  triv.set(0);
  auto cert = make_certificate(g, g.full_set(), triv, std::move(comps));
  if (cert.n_components != (g.order() - 1) / (p - 1))
    throw Error("exponent_p_partition: unexpected component count");
  auto v = validate_partition(g, cert);
  if (!v.ok) throw Error("exponent_p_partition: " + v.reason);
  return cert;
}

PartitionCertificate lift_partition(const LiftMap& lm,
                                    const PartitionCertificate& qcert) {
  auto v = validate_partition(lm.quotient_group(), qcert);
  if (!v.ok)
    throw ValidationError("lift_partition: quotient certificate invalid: " +
                          v.reason);
  if (qcert.ambient.count() != lm.quotient_group().order())
    throw ValidationError(
        "lift_partition: certificate must partition the whole quotient");
  std::vector<ElementSet> comps;
  comps.reserve(qcert.components.size());
  for (const auto& c : qcert.components) comps.push_back(lm.lift(c));
  auto cert = make_certificate(lm.parent(), lm.parent().full_set(),
                               lm.lift(qcert.kernel), std::move(comps));
  auto vv = validate_partition(lm.parent(), cert);
  if (!vv.ok) throw Error("lift_partition: lifted certificate invalid: " + vv.reason);
  return cert;
}

PartitionCertificate frattini_es_partition(const FiniteGroup& g) {
  int p = 0;
  if (!is_prime_power(g.order(), &p))
    throw ParameterError("frattini_es_partition: group is not a p-group");
  if (is_cyclic(g))
    throw ParameterError(
        "frattini_es_partition: cyclic p-group has no partition (quotient by "
        "the Frattini subgroup is cyclic of order p)");
  Lattice lat = Lattice::enumerate(g);
  const ElementSet& phi = lat.at(lat.frattini()).elements;
  LiftMap lm(g, phi);
  return lift_partition(lm, exponent_p_partition(lm.quotient_group()));
}

ExtendedPartition extend_partition_semidirect(
    const FiniteGroup& g, const FiniteGroup& h,
    const std::vector<std::vector<int>>& action,
    const PartitionCertificate& cert_on_g) {
  auto v = validate_partition(g, cert_on_g);
  if (!v.ok)
    throw ValidationError("extend_partition_semidirect: certificate invalid: " +
                          v.reason);
  if (!cert_on_g.equal_orders)
    throw ValidationError(
        "extend_partition_semidirect: certificate must have equal component "
        "orders");
  if (cert_on_g.ambient.count() != g.order())
    throw ValidationError(
        "extend_partition_semidirect: certificate must partition the whole "
        "group");
  FiniteGroup prod = semidirect_product(g, h, action);
  int nh = h.order();
  auto blow_up = [&](const ElementSet& s) {
    // (k, x) for k in s, x in h; index k * |h| + x.
    ElementSet out = prod.make_set();
    s.for_each([&](int k) {
      for (int x = 0; x < nh; ++x) out.set(k * nh + x);
    });
    return out;
  };
  std::vector<ElementSet> comps;
  for (const auto& c : cert_on_g.components) comps.push_back(blow_up(c));
  auto cert = make_certificate(prod, prod.full_set(), blow_up(cert_on_g.kernel),
                               std::move(comps));
  auto vv = validate_partition(prod, cert);
  if (!vv.ok)
    throw Error("extend_partition_semidirect: extended certificate invalid: " +
                vv.reason);
  return {std::move(prod), std::move(cert)};
}

PartitionCertificate nilpotent_es_partition(const FiniteGroup& g) {
  if (is_cyclic(g))
    throw ParameterError("nilpotent_es_partition: group is cyclic");
  if (!is_nilpotent(g))
    throw ParameterError("nilpotent_es_partition: group is not nilpotent");

  // In a nilpotent group the p-elements form the (unique, normal) Sylow
  // p-subgroup, and elements of coprime order commute.
  std::vector<int> primes;
  for (int d = 2, n = g.order(); d <= n; ++d)
    if (n % d == 0) {
      primes.push_back(d);
      while (n % d == 0) n /= d;
    }
  int chosen = -1;
  ElementSet sylow = g.make_set();
  for (int p : primes) {
    ElementSet s = g.make_set();
    for (int x = 0; x < g.order(); ++x) {
      int o = g.element_order(x), pp = p_part(o, p);
      if (o == pp) s.set(x);
    }
    bool cyc = false;
    int so = s.count();
    s.for_each([&](int x) {
      if (g.element_order(x) == so) cyc = true;
    });
    if (!cyc) {
      chosen = p;
      sylow = s;
      break;
    }
  }
  if (chosen < 0) throw Error("nilpotent_es_partition: all Sylow subgroups cyclic");

  ElementSet rest = g.make_set();  // product of the other Sylow subgroups
  for (int x = 0; x < g.order(); ++x)
    if (g.element_order(x) % chosen != 0) rest.set(x);

  auto sub = induced_subgroup(g, sylow);
  auto scert = frattini_es_partition(sub.group);
  auto to_parent = [&](const ElementSet& s) {
    ElementSet out = g.make_set();
    s.for_each([&](int i) { out.set(sub.to_parent[i]); });
    return out;
  };
  std::vector<ElementSet> comps;
  for (const auto& c : scert.components)
    comps.push_back(set_product(g, to_parent(c), rest));
  auto cert = make_certificate(g, g.full_set(),
                               set_product(g, to_parent(scert.kernel), rest),
                               std::move(comps));
  auto v = validate_partition(g, cert);
  if (!v.ok) throw Error("nilpotent_es_partition: " + v.reason);
  return cert;
}

DihedralPartition dihedral_centralizer_partition(int n) {
  if (n < 4 || n % 2 != 0)
    throw ParameterError(
        "dihedral_centralizer_partition: n must be even and at least 4");
  FiniteGroup d = dihedral_group(n);
  ElementSet z = center(d);
  std::vector<ElementSet> comps;
  comps.push_back(centralizer(d, 1));  // C(x) = <x>
  for (int i = 0; i < n / 2; ++i) comps.push_back(centralizer(d, n + i));
  auto cert = make_certificate(d, d.full_set(), std::move(z), std::move(comps));
  auto v = validate_partition(d, cert);
  if (!v.ok) throw Error("dihedral_centralizer_partition: " + v.reason);
  return {std::move(d), std::move(cert)};
}

Example108 example_group_108() {
  FiniteGroup a = abelian_group({3, 3, 3});
  FiniteGroup b = abelian_group({2, 2});
  // The three involutions of B act by the sign patterns (-,-,+), (-,+,-)
  // and (+,-,-) on the coordinates of A.
  auto sign_perm = [&](int s1, int s2, int s3) {
    std::vector<int> perm(27);
    for (int x1 = 0; x1 < 3; ++x1)
      for (int x2 = 0; x2 < 3; ++x2)
        for (int x3 = 0; x3 < 3; ++x3) {
          int y1 = (s1 * x1 % 3 + 3) % 3;
          int y2 = (s2 * x2 % 3 + 3) % 3;
          int y3 = (s3 * x3 % 3 + 3) % 3;
          perm[x1 + 3 * x2 + 9 * x3] = y1 + 3 * y2 + 9 * y3;
        }
    return perm;
  };
  std::vector<std::vector<int>> action(4);
  action[0] = sign_perm(1, 1, 1);
  action[1] = sign_perm(-1, -1, 1);   // b1 = (1,0)
  action[2] = sign_perm(-1, 1, -1);   // b2 = (0,1)
  action[3] = sign_perm(1, -1, -1);   // b3 = (1,1)
  FiniteGroup g = semidirect_product(b, a, action, "example108");

  ElementSet aset = g.make_set();
  for (int x = 0; x < 27; ++x) aset.set(x);
  std::vector<ElementSet> comps;
  for (int k = 1; k < 4; ++k)
    comps.push_back(closure(g, aset | g.singleton(27 * k)));  // A<b_k>
  auto cert = make_certificate(g, g.full_set(), aset, std::move(comps));
  auto v = validate_partition(g, cert);
  if (!v.ok) throw Error("example_group_108: " + v.reason);
  return {std::move(g), std::move(cert)};
}

}  // namespace partita
