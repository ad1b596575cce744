#include "partita/lattice.hpp"

#include <algorithm>
#include <unordered_set>

namespace partita {

ElementSet generated_subgroup(const FiniteGroup& g, const ElementSet& seed) {
  if (seed.empty()) throw ParameterError("generated_subgroup: empty seed");
  return closure(g, seed);
}

Lattice Lattice::enumerate(const FiniteGroup& g, int cap) {
  if (g.order() > cap)
    throw SizeError("subgroup lattice: group order " +
                    std::to_string(g.order()) + " exceeds cap " +
                    std::to_string(cap));
  Lattice lat;
  lat.g_ = std::make_shared<FiniteGroup>(g);

  std::unordered_set<ElementSet, ElementSetHash> seen;
  std::vector<ElementSet> sets;
  auto add = [&](const ElementSet& s) {
    if (seen.insert(s).second) sets.push_back(s);
  };
  ElementSet triv = g.make_set();
  triv.set(0);
  add(triv);
  for (int x = 1; x < g.order(); ++x) add(closure(g, g.singleton(x)));

  // Join pairs to a fixed point; new subgroups are appended and later joined
  // with everything before them.
  for (std::size_t i = 0; i < sets.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) {
      if (sets[j].subset_of(sets[i]) || sets[i].subset_of(sets[j])) continue;
      add(closure(g, sets[i] | sets[j]));
    }

  std::sort(sets.begin(), sets.end(), [](const ElementSet& a, const ElementSet& b) {
    int ca = a.count(), cb = b.count();
    if (ca != cb) return ca < cb;
    return a.lex_less(b);
  });

  int m = int(sets.size());
  lat.subs_.resize(m);
  for (int i = 0; i < m; ++i) {
    Subgroup& s = lat.subs_[i];
    s.id = i;
    s.elements = sets[i];
    s.order = sets[i].count();
    s.cyclic = false;
    sets[i].for_each([&](int x) {
      if (g.element_order(x) == s.order) s.cyclic = true;
    });
    s.normal = true;
    for (int x = 0; x < g.order() && s.normal; ++x)
      sets[i].for_each([&](int h) {
        if (!sets[i].test(g.conj(h, x))) s.normal = false;
      });
    lat.index_[sets[i]] = i;
  }

  lat.leq_.assign(m, std::vector<bool>(m, false));
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      lat.leq_[a][b] = lat.subs_[a].elements.subset_of(lat.subs_[b].elements);

  lat.maximal_.assign(m, false);
  int whole = m - 1;
  for (int a = 0; a < m; ++a) {
    if (a == whole) continue;
    bool maximal = true;
    for (int b = 0; b < m && maximal; ++b)
      if (b != a && b != whole && lat.leq_[a][b]) maximal = false;
    lat.maximal_[a] = maximal;
  }
  return lat;
}

int Lattice::id_of(const ElementSet& s) const {
  auto it = index_.find(s);
  return it == index_.end() ? -1 : it->second;
}

std::vector<int> Lattice::maximal_ids() const {
  std::vector<int> out;
  for (int i = 0; i < size(); ++i)
    if (maximal_[i]) out.push_back(i);
  return out;
}

std::vector<int> Lattice::between(int s, int ambient) const {
  std::vector<int> out;
  for (int i = 0; i < size(); ++i)
    if (i != s && i != ambient && leq_[s][size_t(i)] && leq_[i][size_t(ambient)])
      out.push_back(i);
  return out;
}

std::vector<int> Lattice::under(int ambient) const {
  std::vector<int> out;
  for (int i = 0; i < size(); ++i)
    if (leq_[i][size_t(ambient)]) out.push_back(i);
  return out;
}

int Lattice::normal_core(int s) const {
  ElementSet core = subs_[s].elements;
  for (int x = 0; x < g_->order(); ++x) {
    core = core & conjugate_set(*g_, subs_[s].elements, x);
    if (core.count() == 1) break;
  }
  int id = id_of(core);
  if (id < 0) throw Error("normal core missing from lattice");
  return id;
}

int Lattice::frattini() const {
  ElementSet f = subs_[whole_id()].elements;
  for (int id : maximal_ids()) f = f & subs_[id].elements;
  int out = id_of(f);
  if (out < 0) throw Error("Frattini subgroup missing from lattice");
  return out;
}

int Lattice::sylow(int p) const {
  if (!is_prime(p))
    throw ParameterError("sylow: " + std::to_string(p) + " is not prime");
  if (g_->order() % p != 0)
    throw ParameterError("sylow: " + std::to_string(p) +
                         " does not divide the group order");
  int pp = p_part(g_->order(), p);
  for (int i = 0; i < size(); ++i)
    if (subs_[i].order == pp) return i;
  throw Error("Sylow subgroup missing from lattice");
}

int Lattice::hughes(int p) const {
  ElementSet gen = g_->make_set();
  for (int x = 0; x < g_->order(); ++x)
    if (g_->element_order(x) != p) gen.set(x);
  int id = id_of(closure(*g_, gen));
  if (id < 0) throw Error("Hughes subgroup missing from lattice");
  return id;
}

std::vector<int> Lattice::proper_noncyclic() const {
  std::vector<int> out;
  for (int i = 0; i < whole_id(); ++i)
    if (!subs_[i].cyclic) out.push_back(i);
  return out;
}

}  // namespace partita
