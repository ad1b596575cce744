#include "partita/group.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <numeric>
#include <sstream>

namespace partita {

namespace {
std::atomic<std::uint32_t> next_tag{1};

std::string default_label(int i) { return "g" + std::to_string(i); }
}  // namespace

FiniteGroup::FiniteGroup(std::string name, int order, std::vector<int> table,
                         std::vector<std::string> labels)
    : name_(std::move(name)),
      n_(order),
      table_(std::move(table)),
      labels_(std::move(labels)),
      tag_(next_tag.fetch_add(1)) {
  if (n_ < 1) throw ConstructionError(name_ + ": order must be positive");
  if (n_ > kMaxOrder)
    throw SizeError(name_ + ": order " + std::to_string(n_) +
                    " exceeds the supported cap " + std::to_string(kMaxOrder));
  if (table_.size() != std::size_t(n_) * n_)
    throw ConstructionError(name_ + ": table size does not match order");
  for (int v : table_)
    if (v < 0 || v >= n_)
      throw ConstructionError(name_ + ": table entry out of range");

  for (int x = 0; x < n_; ++x)
    if (mul(0, x) != x || mul(x, 0) != x)
      throw ConstructionError(name_ + ": index 0 is not an identity (fails at " +
                              std::to_string(x) + ")");

  // Latin square: every row and column is a permutation.
  std::vector<char> seen(n_);
  for (int a = 0; a < n_; ++a) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int b = 0; b < n_; ++b) {
      if (seen[mul(a, b)]++)
        throw ConstructionError(name_ + ": row " + std::to_string(a) +
                                " is not a permutation");
    }
    std::fill(seen.begin(), seen.end(), 0);
    for (int b = 0; b < n_; ++b) {
      if (seen[mul(b, a)]++)
        throw ConstructionError(name_ + ": column " + std::to_string(a) +
                                " is not a permutation");
    }
  }

  for (int a = 0; a < n_; ++a)
    for (int b = 0; b < n_; ++b) {
      int ab = mul(a, b);
      for (int c = 0; c < n_; ++c)
        if (mul(ab, c) != mul(a, mul(b, c)))
          throw ConstructionError(
              name_ + ": associativity fails at (" + std::to_string(a) + "," +
              std::to_string(b) + "," + std::to_string(c) + ")");
    }

  inv_.resize(n_);
  for (int a = 0; a < n_; ++a)
    for (int b = 0; b < n_; ++b)
      if (mul(a, b) == 0) {
        inv_[a] = b;
        break;
      }

  if (labels_.empty()) {
    labels_.reserve(n_);
    for (int i = 0; i < n_; ++i) labels_.push_back(default_label(i));
  } else if (labels_.size() != std::size_t(n_)) {
    throw ConstructionError(name_ + ": label count does not match order");
  }
}

int FiniteGroup::element_order(int x) const {
  int k = 1, y = x;
  while (y != 0) {
    y = mul(y, x);
    ++k;
  }
  return k;
}

ElementSet FiniteGroup::full_set() const {
  ElementSet s = make_set();
  for (int i = 0; i < n_; ++i) s.set(i);
  return s;
}

ElementSet FiniteGroup::singleton(int i) const {
  ElementSet s = make_set();
  s.set(i);
  return s;
}

ElementSet FiniteGroup::set_of(const std::vector<int>& xs) const {
  ElementSet s = make_set();
  for (int x : xs) s.set(x);
  return s;
}

// ---- number-theory helpers --------------------------------------------------

bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

bool is_prime_power(int n, int* p) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) {
      while (n % d == 0) n /= d;
      if (n != 1) return false;
      if (p) *p = d;
      return true;
    }
  if (p) *p = n;  // n itself prime
  return true;
}

int p_part(int n, int p) {
  int pp = 1;
  while (n % p == 0) {
    n /= p;
    pp *= p;
  }
  return pp;
}

bool is_squarefree(int n) {
  for (int d = 2; d * d <= n; ++d)
    if (n % (d * d) == 0) return false;
  return true;
}

// ---- builders ----------------------------------------------------------------

FiniteGroup cyclic_group(int n) {
  if (n < 1) throw ParameterError("cyclic: n must be positive");
  std::vector<int> t(std::size_t(n) * n);
  std::vector<std::string> labels(n);
  for (int a = 0; a < n; ++a) {
    labels[a] = std::to_string(a);
    for (int b = 0; b < n; ++b) t[a * n + b] = (a + b) % n;
  }
  return FiniteGroup("Z" + std::to_string(n), n, std::move(t),
                     std::move(labels));
}

FiniteGroup abelian_group(const std::vector<int>& factors) {
  int n = 1;
  std::string name;
  for (int f : factors) {
    if (f < 1) throw ParameterError("abelian: factors must be positive");
    n *= f;
    if (!name.empty()) name += "x";
    name += "Z" + std::to_string(f);
  }
  if (name.empty()) name = "Z1";
  auto decode = [&](int idx) {
    std::vector<int> c(factors.size());
    for (std::size_t i = 0; i < factors.size(); ++i) {
      c[i] = idx % factors[i];
      idx /= factors[i];
    }
    return c;
  };
  auto encode = [&](const std::vector<int>& c) {
    int idx = 0;
    for (std::size_t i = factors.size(); i-- > 0;)
      idx = idx * factors[i] + c[i];
    return idx;
  };
  std::vector<int> t(std::size_t(n) * n);
  std::vector<std::string> labels(n);
  for (int a = 0; a < n; ++a) {
    auto ca = decode(a);
    std::string lab = "(";
    for (std::size_t i = 0; i < ca.size(); ++i)
      lab += (i ? "," : "") + std::to_string(ca[i]);
    labels[a] = lab + ")";
    for (int b = 0; b < n; ++b) {
      auto cb = decode(b);
      std::vector<int> cc(factors.size());
      for (std::size_t i = 0; i < factors.size(); ++i)
        cc[i] = (ca[i] + cb[i]) % factors[i];
      t[a * n + b] = encode(cc);
    }
  }
  return FiniteGroup(std::move(name), n, std::move(t), std::move(labels));
}

FiniteGroup dihedral_group(int n) {
  if (n < 1) throw ParameterError("dihedral: n must be positive");
  int m = 2 * n;
  std::vector<int> t(std::size_t(m) * m);
  std::vector<std::string> labels(m);
  auto idx = [&](int rot, int refl) { return refl ? n + rot : rot; };
  for (int i = 0; i < n; ++i) {
    labels[i] = i == 0 ? "e" : "x^" + std::to_string(i);
    labels[n + i] = i == 0 ? "y" : "x^" + std::to_string(i) + "y";
  }
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      int ar = a % n, br = b % n;
      bool af = a >= n, bf = b >= n;
      int r = af ? ((ar - br) % n + n) % n : (ar + br) % n;
      t[a * m + b] = idx(r, af ^ bf);
    }
  return FiniteGroup("D" + std::to_string(m), m, std::move(t),
                     std::move(labels));
}

FiniteGroup quaternion_group(int order) {
  // order = 2^k, k >= 3; a has order 2^(k-1), b^2 = a^(2^(k-2)).
  if (order < 8 || (order & (order - 1)) != 0)
    throw ParameterError("quaternion: order must be a power of 2, at least 8");
  int h = order / 2;  // order of a
  std::vector<int> t(std::size_t(order) * order);
  std::vector<std::string> labels(order);
  auto idx = [&](int i, int withb) { return withb ? h + i : i; };
  for (int i = 0; i < h; ++i) {
    labels[i] = i == 0 ? "e" : "a^" + std::to_string(i);
    labels[h + i] = i == 0 ? "b" : "a^" + std::to_string(i) + "b";
  }
  int bsq = h / 2;  // b^2 = a^(h/2)
  for (int a = 0; a < order; ++a)
    for (int b = 0; b < order; ++b) {
      int ai = a % h, bi = b % h;
      bool ab_ = a >= h, bb = b >= h;
      int r;
      bool rb;
      if (!ab_ && !bb) {
        r = (ai + bi) % h;
        rb = false;
      } else if (!ab_ && bb) {
        r = (ai + bi) % h;
        rb = true;
      } else if (ab_ && !bb) {
        r = ((ai - bi) % h + h) % h;
        rb = true;
      } else {
        r = (((ai - bi) % h + h) + bsq) % h;
        rb = false;
      }
      t[a * order + b] = idx(r, rb);
    }
  return FiniteGroup("Q" + std::to_string(order), order, std::move(t),
                     std::move(labels));
}

namespace {

std::vector<std::vector<int>> permutations_lex(int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> all;
  do {
    all.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return all;
}

bool perm_even(const std::vector<int>& p) {
  int inv = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) ++inv;
  return inv % 2 == 0;
}

std::string cycle_label(const std::vector<int>& p) {
  std::string out;
  std::vector<char> done(p.size(), 0);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (done[i] || p[i] == int(i)) continue;
    out += "(";
    std::size_t j = i;
    bool first = true;
    while (!done[j]) {
      done[j] = 1;
      out += (first ? "" : " ") + std::to_string(j + 1);
      first = false;
      j = p[j];
    }
    out += ")";
  }
  return out.empty() ? "e" : out;
}

FiniteGroup permutation_group(const std::string& name, int n,
                              const std::vector<std::vector<int>>& perms) {
  int m = int(perms.size());
  std::map<std::vector<int>, int> index;
  for (int i = 0; i < m; ++i) index[perms[i]] = i;
  std::vector<int> t(std::size_t(m) * m);
  std::vector<std::string> labels(m);
  for (int a = 0; a < m; ++a) {
    labels[a] = cycle_label(perms[a]);
    for (int b = 0; b < m; ++b) {
      std::vector<int> c(n);
      for (int i = 0; i < n; ++i) c[i] = perms[a][perms[b][i]];
      t[a * m + b] = index.at(c);
    }
  }
  return FiniteGroup(name, m, std::move(t), std::move(labels));
}

}  // namespace

FiniteGroup symmetric_group(int n) {
  if (n < 1 || n > 5)
    throw ParameterError("symmetric: n must be between 1 and 5");
  return permutation_group("S" + std::to_string(n), n, permutations_lex(n));
}

FiniteGroup alternating_group(int n) {
  if (n < 1 || n > 5)
    throw ParameterError("alternating: n must be between 1 and 5");
  std::vector<std::vector<int>> evens;
  for (auto& p : permutations_lex(n))
    if (perm_even(p)) evens.push_back(p);
  return permutation_group("A" + std::to_string(n), n, evens);
}

FiniteGroup metacyclic_group(int p, int q, int m, long long r) {
  if (!is_prime(p)) throw ParameterError("metacyclic: p must be prime");
  if (!is_prime(q)) throw ParameterError("metacyclic: q must be prime");
  if (p == q) throw ParameterError("metacyclic: p and q must be distinct");
  if (m < 1) throw ParameterError("metacyclic: m must be at least 1");
  r = ((r % p) + p) % p;
  if (r == 1 % p)
    throw ParameterError("metacyclic: r == 1 (mod p) violates r != 1 (mod p)");
  long long rq = 1;
  for (int i = 0; i < q; ++i) rq = (rq * r) % p;
  if (rq != 1)
    throw ParameterError(
        "metacyclic: r^q == 1 (mod p) violated (r^q = " + std::to_string(rq) +
        " mod " + std::to_string(p) + ")");
  int qm = 1;
  for (int i = 0; i < m; ++i) qm *= q;

  FiniteGroup zp = cyclic_group(p);
  FiniteGroup zqm = cyclic_group(qm);
  // b^j acts on <a> by a -> a^(r^j).
  std::vector<std::vector<int>> action(qm, std::vector<int>(p));
  long long rj = 1;
  for (int j = 0; j < qm; ++j) {
    for (int x = 0; x < p; ++x) action[j][x] = int((rj * x) % p);
    rj = (rj * r) % p;
  }
  std::string name = "Z" + std::to_string(p) + ":Z" + std::to_string(qm);
  return semidirect_product(zqm, zp, action, name);
}

FiniteGroup semidirect_product(const FiniteGroup& g, const FiniteGroup& h,
                               const std::vector<std::vector<int>>& action,
                               const std::string& name) {
  int ng = g.order(), nh = h.order();
  if (int(action.size()) != ng)
    throw ConstructionError("semidirect: action must map every element of " +
                            g.name());
  for (int a = 0; a < ng; ++a) {
    const auto& pa = action[a];
    if (int(pa.size()) != nh)
      throw ConstructionError("semidirect: action of element " +
                              std::to_string(a) + " has wrong size");
    std::vector<char> seen(nh, 0);
    for (int x : pa) {
      if (x < 0 || x >= nh || seen[x]++)
        throw ConstructionError("semidirect: action of element " +
                                std::to_string(a) + " is not a permutation");
    }
    // automorphism check
    for (int x = 0; x < nh; ++x)
      for (int y = 0; y < nh; ++y)
        if (pa[h.mul(x, y)] != h.mul(pa[x], pa[y]))
          throw ConstructionError(
              "semidirect: action of element " + std::to_string(a) +
              " is not an automorphism (fails at pair (" + std::to_string(x) +
              "," + std::to_string(y) + "))");
  }
  // homomorphism check: action(a*b) = action(a) o action(b)
  for (int a = 0; a < ng; ++a)
    for (int b = 0; b < ng; ++b) {
      int ab = g.mul(a, b);
      for (int x = 0; x < nh; ++x)
        if (action[ab][x] != action[a][action[b][x]])
          throw ConstructionError(
              "semidirect: action is not a homomorphism (fails at pair (" +
              std::to_string(a) + "," + std::to_string(b) + "))");
    }

  int n = ng * nh;
  std::vector<int> t(std::size_t(n) * n);
  std::vector<std::string> labels(n);
  auto idx = [&](int k, int x) { return k * nh + x; };
  for (int k = 0; k < ng; ++k)
    for (int x = 0; x < nh; ++x)
      labels[idx(k, x)] = "(" + g.label(k) + "," + h.label(x) + ")";
  // (x1, k1) * (x2, k2) = (x1 * k1(x2), k1 k2) with the normal part written first.
  for (int k1 = 0; k1 < ng; ++k1)
    for (int x1 = 0; x1 < nh; ++x1)
      for (int k2 = 0; k2 < ng; ++k2)
        for (int x2 = 0; x2 < nh; ++x2)
          t[std::size_t(idx(k1, x1)) * n + idx(k2, x2)] =
              idx(g.mul(k1, k2), h.mul(x1, action[k1][x2]));
  std::string nm = name.empty() ? g.name() + "|x" + h.name() : name;
  return FiniteGroup(nm, n, std::move(t), std::move(labels));
}

std::vector<std::vector<int>> trivial_action(const FiniteGroup& acting,
                                             const FiniteGroup& normal) {
  std::vector<int> id(normal.order());
  std::iota(id.begin(), id.end(), 0);
  return std::vector<std::vector<int>>(acting.order(), id);
}

std::vector<std::vector<int>> inversion_action(const FiniteGroup& acting,
                                               const FiniteGroup& normal) {
  std::vector<int> invp(normal.order());
  for (int x = 0; x < normal.order(); ++x) invp[x] = normal.inv(x);
  std::vector<std::vector<int>> a(acting.order());
  for (int k = 0; k < acting.order(); ++k) {
    if (k == 0) {
      a[k].resize(normal.order());
      std::iota(a[k].begin(), a[k].end(), 0);
    } else {
      a[k] = invp;
    }
  }
  return a;
}

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b,
                           const std::string& name) {
  std::string nm = name.empty() ? a.name() + "x" + b.name() : name;
  return semidirect_product(a, b, trivial_action(a, b), nm);
}

// ---- Cayley file -------------------------------------------------------------

FiniteGroup group_from_cayley(std::istream& in, const std::string& name) {
  int n;
  if (!(in >> n) || n < 1)
    throw ParameterError("cayley: expected a positive order on the first line");
  std::vector<int> t(std::size_t(n) * n);
  for (auto& v : t)
    if (!(in >> v)) throw ParameterError("cayley: table is truncated");
  std::vector<std::string> labels;
  std::string line;
  std::getline(in, line);  // finish current line
  while (std::getline(in, line)) {
    auto pos = line.find("# labels:");
    if (pos != std::string::npos) {
      std::istringstream ls(line.substr(pos + 9));
      std::string lab;
      while (ls >> lab) labels.push_back(lab);
    }
  }
  return FiniteGroup(name, n, std::move(t), std::move(labels));
}

FiniteGroup group_from_cayley_file(const std::string& path,
                                   const std::string& name) {
  std::ifstream in(path);
  if (!in) throw ParameterError("cayley: cannot open file " + path);
  return group_from_cayley(in, name);
}

std::string group_to_cayley(const FiniteGroup& g) {
  std::ostringstream out;
  int n = g.order();
  out << n << "\n";
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) out << (b ? " " : "") << g.mul(a, b);
    out << "\n";
  }
  out << "# labels:";
  for (int i = 0; i < n; ++i) out << " " << g.label(i);
  out << "\n";
  return out.str();
}

// ---- structural operations ----------------------------------------------------

ElementSet closure(const FiniteGroup& g, const ElementSet& seed) {
  ElementSet bits = g.make_set();
  bits.set(0);
  std::vector<int> mem{0};
  seed.for_each([&](int x) {
    if (!bits.test(x)) {
      bits.set(x);
      mem.push_back(x);
    }
  });
  int n = g.order();
  for (std::size_t i = 0; i < mem.size(); ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      int p = g.mul(mem[i], mem[j]);
      if (!bits.test(p)) {
        bits.set(p);
        mem.push_back(p);
      }
      p = g.mul(mem[j], mem[i]);
      if (!bits.test(p)) {
        bits.set(p);
        mem.push_back(p);
      }
    }
    if (int(mem.size()) == n) return g.full_set();
  }
  return bits;
}

bool is_subgroup_set(const FiniteGroup& g, const ElementSet& s) {
  if (s.tag() != g.tag()) throw Error("set belongs to a different group");
  if (!s.test(0)) return false;
  auto xs = s.to_indices();
  for (int a : xs)
    for (int b : xs)
      if (!s.test(g.mul(a, b))) return false;
  return true;
}

ElementSet set_product(const FiniteGroup& g, const ElementSet& a,
                       const ElementSet& b) {
  ElementSet out = g.make_set();
  a.for_each([&](int x) { b.for_each([&](int y) { out.set(g.mul(x, y)); }); });
  return out;
}

ElementSet conjugate_set(const FiniteGroup& g, const ElementSet& s, int x) {
  ElementSet out = g.make_set();
  s.for_each([&](int h) { out.set(g.conj(h, x)); });
  return out;
}

QuotientResult quotient(const FiniteGroup& g, const ElementSet& n) {
  if (!is_subgroup_set(g, n))
    throw ParameterError("quotient: the given set is not a subgroup");
  auto ns = n.to_indices();
  for (int x = 0; x < g.order(); ++x)
    for (int h : ns)
      if (!n.test(g.conj(h, x)))
        throw ConstructionError("quotient: subgroup is not normal (element " +
                                std::to_string(h) + " conjugated by " +
                                std::to_string(x) + " escapes)");
  int m = g.order() / n.count();
  std::vector<int> proj(g.order(), -1);
  std::vector<int> reps;
  for (int x = 0; x < g.order(); ++x) {
    if (proj[x] != -1) continue;
    int id = int(reps.size());
    reps.push_back(x);
    for (int h : ns) proj[g.mul(h, x)] = id;
  }
  std::vector<int> t(std::size_t(m) * m);
  std::vector<std::string> labels(m);
  for (int a = 0; a < m; ++a) {
    labels[a] = g.label(reps[a]) + "N";
    for (int b = 0; b < m; ++b)
      t[a * m + b] = proj[g.mul(reps[a], reps[b])];
  }
  FiniteGroup q(g.name() + "/N" + std::to_string(n.count()), m, std::move(t),
                std::move(labels));
  return {std::move(q), std::move(proj)};
}

ElementSet center(const FiniteGroup& g) {
  ElementSet z = g.make_set();
  for (int x = 0; x < g.order(); ++x) {
    bool central = true;
    for (int y = 0; y < g.order() && central; ++y)
      central = g.mul(x, y) == g.mul(y, x);
    if (central) z.set(x);
  }
  return z;
}

ElementSet centralizer(const FiniteGroup& g, int x) {
  ElementSet c = g.make_set();
  for (int y = 0; y < g.order(); ++y)
    if (g.mul(x, y) == g.mul(y, x)) c.set(y);
  return c;
}

std::pair<ElementSet, std::vector<ElementSet>> center_and_centralizers(
    const FiniteGroup& g) {
  std::vector<ElementSet> cs;
  cs.reserve(g.order());
  ElementSet z = g.full_set();
  for (int x = 0; x < g.order(); ++x) {
    cs.push_back(centralizer(g, x));
    z = z & cs.back();
  }
  return {z, cs};
}

namespace {

ElementSet commutator_span(const FiniteGroup& g, const ElementSet& a,
                           const ElementSet& b) {
  ElementSet gens = g.make_set();
  a.for_each([&](int x) {
    b.for_each([&](int y) { gens.set(g.commutator(x, y)); });
  });
  return closure(g, gens);
}

}  // namespace

SeriesChain series(const FiniteGroup& g, SeriesKind kind) {
  SeriesChain chain{kind, {}};
  if (kind == SeriesKind::UpperCentral) {
    ElementSet z = g.make_set();
    z.set(0);
    chain.terms.push_back(z);
    for (;;) {
      const ElementSet& prev = chain.terms.back();
      ElementSet next = g.make_set();
      for (int x = 0; x < g.order(); ++x) {
        bool in = true;
        for (int y = 0; y < g.order() && in; ++y)
          in = prev.test(g.commutator(x, y));
        if (in) next.set(x);
      }
      if (next == prev) break;
      chain.terms.push_back(next);
      if (next.count() == g.order()) break;
    }
    return chain;
  }
  ElementSet full = g.full_set();
  chain.terms.push_back(full);
  for (;;) {
    const ElementSet& prev = chain.terms.back();
    ElementSet next = kind == SeriesKind::Derived
                          ? commutator_span(g, prev, prev)
                          : commutator_span(g, prev, full);
    if (next == prev) break;
    chain.terms.push_back(next);
    if (next.count() == 1) break;
  }
  return chain;
}

ElementSet hypercenter(const FiniteGroup& g) {
  return series(g, SeriesKind::UpperCentral).terms.back();
}

bool is_nilpotent(const FiniteGroup& g) {
  return series(g, SeriesKind::LowerCentral).terms.back().count() == 1;
}

bool is_solvable(const FiniteGroup& g) {
  return series(g, SeriesKind::Derived).terms.back().count() == 1;
}

bool is_cyclic(const FiniteGroup& g) {
  for (int x = 0; x < g.order(); ++x)
    if (g.element_order(x) == g.order()) return true;
  return false;
}

int exponent(const FiniteGroup& g) {
  long long e = 1;
  for (int x = 0; x < g.order(); ++x)
    e = std::lcm(e, (long long)g.element_order(x));
  return int(e);
}

std::map<int, int> order_statistics(const FiniteGroup& g) {
  std::map<int, int> stats;
  for (int x = 0; x < g.order(); ++x) ++stats[g.element_order(x)];
  return stats;
}

InducedSubgroup induced_subgroup(const FiniteGroup& g, const ElementSet& h,
                                 const std::string& name) {
  if (!is_subgroup_set(g, h))
    throw ParameterError("induced subgroup: set is not a subgroup");
  auto elems = h.to_indices();  // ascending, so parent identity -> index 0
  int m = int(elems.size());
  std::vector<int> pos(g.order(), -1);
  for (int i = 0; i < m; ++i) pos[elems[i]] = i;
  std::vector<int> t(std::size_t(m) * m);
  std::vector<std::string> labels(m);
  for (int a = 0; a < m; ++a) {
    labels[a] = g.label(elems[a]);
    for (int b = 0; b < m; ++b)
      t[a * m + b] = pos[g.mul(elems[a], elems[b])];
  }
  std::string nm = name.empty()
                       ? g.name() + "[" + std::to_string(m) + "]"
                       : name;
  return {FiniteGroup(nm, m, std::move(t), std::move(labels)),
          std::move(elems)};
}

}  // namespace partita
