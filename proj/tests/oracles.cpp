#include "oracles.hpp"

namespace partita::oracles {

std::size_t count_subgroups_naive(const FiniteGroup& g) {
  int n = g.order();
  if (n > 24) throw Error("naive subgroup oracle: order too large");
  std::size_t count = 0;
  std::vector<int> elems;
  elems.reserve(n);
  for (std::uint32_t mask = 1; mask < (1u << n); mask += 2) {
    elems.clear();
    std::uint32_t m = mask;
    while (m) {
      elems.push_back(__builtin_ctz(m));
      m &= m - 1;
    }
    bool closed = true;
    for (std::size_t i = 0; i < elems.size() && closed; ++i)
      for (std::size_t j = 0; j < elems.size(); ++j)
        if (!((mask >> g.mul(elems[i], elems[j])) & 1u)) {
          closed = false;
          break;
        }
    if (closed) ++count;
  }
  return count;
}

namespace {

struct NaiveSearch {
  const FiniteGroup& g;
  const Lattice& lat;
  const ElementSet& ambient;
  const ElementSet& kernel;
  const std::vector<int>& candidates;
  bool equal_only;
  std::vector<int> chosen;
  std::vector<PartitionCertificate> found;

  void record() {
    if (chosen.size() < 2) return;
    if (equal_only) {
      int d = lat.at(chosen.front()).order;
      for (int id : chosen)
        if (lat.at(id).order != d) return;
    }
    std::vector<ElementSet> comps;
    for (int id : chosen) comps.push_back(lat.at(id).elements);
    found.push_back(make_certificate(g, ambient, kernel, std::move(comps)));
  }

  void dfs(std::size_t start, const ElementSet& covered) {
    if (covered == ambient) {
      record();
      return;  // nothing else can stay pairwise-disjoint outside the kernel
    }
    for (std::size_t i = start; i < candidates.size(); ++i) {
      const ElementSet& h = lat.at(candidates[i]).elements;
      bool ok = true;
      for (int id : chosen)
        if ((h & lat.at(id).elements) != kernel) {
          ok = false;
          break;
        }
      if (!ok) continue;
      chosen.push_back(candidates[i]);
      dfs(i + 1, covered | h);
      chosen.pop_back();
    }
  }
};

}  // namespace

std::vector<PartitionCertificate> strict_partitions_naive(
    const FiniteGroup& g, const Lattice& lat, int ambient_id, int kernel_id,
    bool equal_only) {
  const ElementSet& ambient = lat.at(ambient_id).elements;
  const ElementSet& kernel = lat.at(kernel_id).elements;
  std::vector<int> candidates = lat.between(kernel_id, ambient_id);
  NaiveSearch search{g, lat, ambient, kernel, candidates, equal_only, {}, {}};
  search.dfs(0, kernel);
  return std::move(search.found);
}

CertKey certificate_key(const PartitionCertificate& cert) {
  CertKey k;
  k.first = cert.kernel.to_indices();
  for (const auto& c : cert.components) k.second.push_back(c.to_indices());
  return k;
}

std::set<CertKey> certificate_keys(
    const std::vector<PartitionCertificate>& certs) {
  std::set<CertKey> keys;
  for (const auto& c : certs) keys.insert(certificate_key(c));
  return keys;
}

}  // namespace partita::oracles
