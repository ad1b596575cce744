#include "partita/partition.hpp"

#include <algorithm>
#include <map>

#include <nlohmann/json.hpp>

#include "partita/exact_cover.hpp"

namespace partita {

PartitionCertificate make_certificate(const FiniteGroup& g, ElementSet ambient,
                                      ElementSet kernel,
                                      std::vector<ElementSet> components) {
  std::sort(components.begin(), components.end(),
            [](const ElementSet& a, const ElementSet& b) {
              int ca = a.count(), cb = b.count();
              if (ca != cb) return ca < cb;
              return a.lex_less(b);
            });
  PartitionCertificate cert;
  cert.group_name = g.name();
  cert.ambient = std::move(ambient);
  cert.kernel = std::move(kernel);
  cert.components = std::move(components);
  cert.n_components = int(cert.components.size());
  cert.equal_orders = true;
  for (const auto& c : cert.components)
    if (c.count() != cert.components.front().count()) cert.equal_orders = false;
  return cert;
}

ValidationResult validate_partition(const FiniteGroup& g,
                                    const PartitionCertificate& cert) {
  if (cert.n_components != int(cert.components.size()))
    return {false, "component count mismatch"};
  if (cert.n_components < 2) return {false, "fewer than 2 components"};
  if (!is_subgroup_set(g, cert.ambient))
    return {false, "ambient set not a subgroup"};
  if (!is_subgroup_set(g, cert.kernel)) return {false, "kernel not a subgroup"};
  if (!cert.kernel.subset_of(cert.ambient))
    return {false, "kernel not inside the ambient subgroup"};
  for (const auto& h : cert.components) {
    if (!is_subgroup_set(g, h)) return {false, "component not a subgroup"};
    if (!cert.kernel.subset_of(h))
      return {false, "kernel not contained in component"};
    if (h == cert.kernel) return {false, "component equals kernel"};
    if (!h.subset_of(cert.ambient) || h == cert.ambient)
      return {false, "component not proper"};
  }
  for (std::size_t i = 0; i < cert.components.size(); ++i)
    for (std::size_t j = i + 1; j < cert.components.size(); ++j)
      if ((cert.components[i] & cert.components[j]) != cert.kernel)
        return {false, "pairwise intersection exceeds kernel"};
  ElementSet un = cert.kernel;
  for (const auto& h : cert.components) un = un | h;
  if (un != cert.ambient) return {false, "union shortfall"};
  bool equal = true;
  for (const auto& h : cert.components)
    if (h.count() != cert.components.front().count()) equal = false;
  if (equal != cert.equal_orders) return {false, "equal-orders flag mismatch"};
  return {true, ""};
}

namespace {

std::vector<PartitionCertificate> run_cover(const FiniteGroup& g,
                                            const ElementSet& ambient,
                                            const ElementSet& kernel,
                                            const std::vector<int>& candidates,
                                            const Lattice& lat,
                                            std::size_t limit) {
  ElementSet universe = ambient.minus(kernel);
  std::vector<ElementSet> rows;
  rows.reserve(candidates.size());
  for (int id : candidates) rows.push_back(lat.at(id).elements.minus(kernel));
  std::vector<PartitionCertificate> out;
  for (const auto& sol : exact_cover(universe, rows, limit)) {
    std::vector<ElementSet> comps;
    comps.reserve(sol.size());
    for (int r : sol) comps.push_back(lat.at(candidates[r]).elements);
    auto cert = make_certificate(g, ambient, kernel, std::move(comps));
    auto v = validate_partition(g, cert);
    if (!v.ok) throw Error("search produced an invalid certificate: " + v.reason);
    out.push_back(std::move(cert));
  }
  return out;
}

}  // namespace

std::vector<PartitionCertificate> strict_partitions_within(
    const FiniteGroup& g, const Lattice& lat, int ambient_id, int kernel_id,
    bool equal_only, std::size_t limit) {
  if (kernel_id == ambient_id || !lat.le(kernel_id, ambient_id))
    throw ParameterError(
        "strict_partitions: kernel must be a proper subgroup of the "
        "partitioned subgroup");
  const ElementSet& ambient = lat.at(ambient_id).elements;
  const ElementSet& kernel = lat.at(kernel_id).elements;
  std::vector<int> candidates = lat.between(kernel_id, ambient_id);

  if (!equal_only)
    return run_cover(g, ambient, kernel, candidates, lat, limit);

  int ks = kernel.count();
  int total = ambient.count() - ks;
  std::map<int, std::vector<int>> by_order;
  for (int id : candidates) by_order[lat.at(id).order].push_back(id);
  std::vector<PartitionCertificate> out;
  for (const auto& [d, ids] : by_order) {
    if (total % (d - ks) != 0) continue;
    std::size_t want = limit - out.size();
    auto found = run_cover(g, ambient, kernel, ids, lat, want);
    for (auto& c : found) out.push_back(std::move(c));
    if (out.size() >= limit) break;
  }
  return out;
}

std::vector<PartitionCertificate> strict_partitions(const FiniteGroup& g,
                                                    const Lattice& lat,
                                                    int kernel_id,
                                                    bool equal_only,
                                                    std::size_t limit) {
  return strict_partitions_within(g, lat, lat.whole_id(), kernel_id,
                                  equal_only, limit);
}

std::vector<std::pair<int, PartitionCertificate>> es_kernels(
    const FiniteGroup& g, const Lattice& lat, ExecMode mode) {
  int m = lat.size();
  std::vector<std::optional<PartitionCertificate>> found(m);
  parallel_for(std::size_t(m) - 1, mode, [&](std::size_t s) {
    auto certs = strict_partitions(g, lat, int(s), /*equal_only=*/true, 1);
    if (!certs.empty()) found[s] = std::move(certs.front());
  });
  std::vector<std::pair<int, PartitionCertificate>> out;
  for (int s = 0; s < m; ++s)
    if (found[s]) out.emplace_back(s, std::move(*found[s]));
  return out;
}

namespace {

// H n H^x = 1 for every x outside H.
bool complement_property(const FiniteGroup& g, const ElementSet& h) {
  for (int x = 0; x < g.order(); ++x) {
    if (h.test(x)) continue;
    if ((h & conjugate_set(g, h, x)).count() > 1) return false;
  }
  return true;
}

// The identity together with everything missed by all conjugates of h.
ElementSet frobenius_kernel_set(const FiniteGroup& g, const ElementSet& h) {
  ElementSet un = g.make_set();
  for (int x = 0; x < g.order(); ++x) un = un | conjugate_set(g, h, x);
  ElementSet k = g.full_set().minus(un);
  k.set(0);
  return k;
}

}  // namespace

std::optional<FrobeniusStructure> frobenius_structure(const FiniteGroup& g,
                                                      const Lattice& lat) {
  for (int hid = 1; hid < lat.whole_id(); ++hid) {
    const ElementSet& h = lat.at(hid).elements;
    if (!complement_property(g, h)) continue;
    ElementSet k = frobenius_kernel_set(g, h);
    if (k.count() * h.count() != g.order()) continue;
    if (!is_subgroup_set(g, k)) continue;
    int kid = lat.id_of(k);
    if (kid < 0 || !lat.at(kid).normal) continue;
    if ((k & h).count() != 1) continue;
    return FrobeniusStructure{kid, hid};
  }
  return std::nullopt;
}

Zapa2Report zapa2_crosscheck(const FiniteGroup& g, const Lattice& lat,
                             int kernel_id, const PartitionCertificate& cert) {
  Zapa2Report rep;
  const Subgroup& s = lat.at(kernel_id);
  if (s.order == 1) {
    rep.skip_reason = "kernel is trivial";
    return rep;
  }
  if (!lat.is_antinormal(kernel_id)) {
    rep.skip_reason = "kernel is not antinormal";
    return rep;
  }
  auto v = validate_partition(g, cert);
  if (!v.ok || cert.kernel != s.elements ||
      cert.ambient != lat.at(lat.whole_id()).elements) {
    rep.skip_reason = "certificate is not a strict partition with this kernel";
    return rep;
  }
  rep.applicable = true;

  bool comp_prop = complement_property(g, s.elements);
  ElementSet k = frobenius_kernel_set(g, s.elements);
  bool frob = comp_prop && is_subgroup_set(g, k) &&
              k.count() * s.order == g.order() && (k & s.elements).count() == 1;
  int kid = frob ? lat.id_of(k) : -1;
  frob = frob && kid >= 0 && lat.at(kid).normal;
  rep.items.push_back({"group is Frobenius with S as complement", frob});
  rep.items.push_back({"S is cyclic", s.cyclic});
  int p = 0;
  rep.items.push_back(
      {"Frobenius kernel is a p-group", is_prime_power(k.count(), &p)});

  bool factor = true;
  std::vector<ElementSet> parts;
  for (const auto& h : cert.components) {
    ElementSet ki = h & k;
    parts.push_back(ki);
    if (set_product(g, s.elements, ki) != h) factor = false;
  }
  bool k_partition = parts.size() >= 2;
  ElementSet un = g.make_set();
  un.set(0);
  for (std::size_t i = 0; i < parts.size() && k_partition; ++i) {
    if (parts[i].count() <= 1 || parts[i] == k || !is_subgroup_set(g, parts[i]))
      k_partition = false;
    for (std::size_t j = i + 1; j < parts.size() && k_partition; ++j)
      if ((parts[i] & parts[j]).count() != 1) k_partition = false;
    un = un | parts[i];
  }
  if (un != k) k_partition = false;
  rep.items.push_back({"components factor as S.K_i with {K_i} a nontrivial "
                       "partition of K",
                       factor && k_partition});
  return rep;
}

nlohmann::json certificate_to_json(const FiniteGroup& g,
                                   const PartitionCertificate& cert) {
  nlohmann::json j;
  j["group"] = cert.group_name;
  if (cert.ambient.count() != g.order())
    j["ambient"] = {{"order", cert.ambient.count()},
                    {"elements", cert.ambient.to_indices()}};
  j["kernel"] = {{"order", cert.kernel.count()},
                 {"elements", cert.kernel.to_indices()}};
  j["components"] = nlohmann::json::array();
  for (const auto& c : cert.components)
    j["components"].push_back(
        {{"order", c.count()}, {"elements", c.to_indices()}});
  j["equal"] = cert.equal_orders;
  return j;
}

}  // namespace partita
