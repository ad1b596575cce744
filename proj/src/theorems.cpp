#include "partita/theorems.hpp"

#include <algorithm>
#include <chrono>
#include <set>

namespace partita {

const char* status_name(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Vacuous: return "vacuous";
    case Status::Skipped: return "skipped";
  }
  return "?";
}

nlohmann::json VerdictReport::to_json() const {
  nlohmann::json j;
  j["theorem"] = theorem;
  j["group"] = group;
  j["clauses"] = nlohmann::json::array();
  for (const auto& c : clauses) {
    nlohmann::json cj;
    cj["desc"] = c.description;
    cj["status"] = status_name(c.status);
    if (!c.witness.is_null()) cj["witness"] = c.witness;
    j["clauses"].push_back(cj);
  }
  j["ms"] = ms;
  return j;
}

namespace {

std::set<int> prime_set(int n) {
  std::set<int> out;
  for (int d = 2; d <= n; ++d)
    if (n % d == 0) {
      out.insert(d);
      while (n % d == 0) n /= d;
    }
  return out;
}

nlohmann::json subgroup_json(const Lattice& lat, int id) {
  const Subgroup& s = lat.at(id);
  return {{"id", s.id},
          {"order", s.order},
          {"elements", s.elements.to_indices()},
          {"normal", s.normal},
          {"cyclic", s.cyclic}};
}

using CertKey = std::pair<std::vector<int>, std::vector<std::vector<int>>>;

CertKey cert_key(const PartitionCertificate& c) {
  CertKey k;
  k.first = c.kernel.to_indices();
  for (const auto& h : c.components) k.second.push_back(h.to_indices());
  return k;
}

}  // namespace

CheckSession::CheckSession(const FiniteGroup& g, const Lattice& lat,
                           std::vector<std::string> tags,
                           std::size_t cert_bound)
    : g_(&g), lat_(&lat), tags_(std::move(tags)), bound_(cert_bound) {}

bool CheckSession::nilpotent() {
  if (!nilpotent_) nilpotent_ = is_nilpotent(*g_);
  return *nilpotent_;
}

const ElementSet& CheckSession::hyper() {
  if (!hyper_) hyper_ = hypercenter(*g_);
  return *hyper_;
}

bool CheckSession::subgroup_nilpotent(int id) {
  if (id == lat_->whole_id()) return nilpotent();
  auto it = sub_nilpotent_.find(id);
  if (it != sub_nilpotent_.end()) return it->second;
  bool v = is_nilpotent(induced_subgroup(*g_, lat_->at(id).elements).group);
  sub_nilpotent_[id] = v;
  return v;
}

bool CheckSession::subgroup_solvable(int id) {
  auto it = sub_solvable_.find(id);
  if (it != sub_solvable_.end()) return it->second;
  bool v = is_solvable(induced_subgroup(*g_, lat_->at(id).elements).group);
  sub_solvable_[id] = v;
  return v;
}

std::vector<PartitionCertificate> CheckSession::search(int ambient_id,
                                                       int kernel_id,
                                                       bool equal_only,
                                                       std::size_t limit) {
  auto certs =
      strict_partitions_within(*g_, *lat_, ambient_id, kernel_id, equal_only, limit);
  auto pg = prime_set(lat_->at(ambient_id).order);
  for (const auto& c : certs) {
    if (!c.equal_orders) continue;
    for (const auto& h : c.components)
      if (prime_set(h.count()) != pg) {
        pi_violations_.push_back(certificate_to_json(*g_, c));
        break;
      }
  }
  return certs;
}

bool CheckSession::has_es_with_kernel(int ambient_id, int kernel_id) {
  long long key = (long long)ambient_id * lat_->size() + kernel_id;
  auto it = es_kernel_memo_.find(key);
  if (it != es_kernel_memo_.end()) return it->second;
  bool v = !search(ambient_id, kernel_id, /*equal_only=*/true, 1).empty();
  es_kernel_memo_[key] = v;
  return v;
}

bool CheckSession::has_es_within(int ambient_id) {
  auto it = es_within_memo_.find(ambient_id);
  if (it != es_within_memo_.end()) return it->second;
  bool v = false;
  for (int k = 0; k < lat_->size() && !v; ++k)
    if (k != ambient_id && lat_->le(k, ambient_id))
      v = has_es_with_kernel(ambient_id, k);
  es_within_memo_[ambient_id] = v;
  return v;
}

const CheckSession::EsEnumeration& CheckSession::es_enumeration() {
  if (es_enum_) return *es_enum_;
  EsEnumeration e;
  int whole = lat_->whole_id();
  for (int k = 0; k < whole; ++k) {
    auto certs = search(whole, k, /*equal_only=*/true, bound_ + 1);
    if (certs.size() > bound_) {
      e.bounded_kernels.push_back(k);
      continue;
    }
    for (auto& c : certs) e.certs.emplace_back(k, std::move(c));
  }
  es_enum_ = std::move(e);
  return *es_enum_;
}

std::vector<nlohmann::json> CheckSession::drain_pi_violations() {
  auto out = std::move(pi_violations_);
  pi_violations_.clear();
  return out;
}

const CheckSession::QuotientContext& CheckSession::quotient_context(int n_id) {
  auto it = quot_.find(n_id);
  if (it != quot_.end()) return *it->second;
  auto ctx = std::make_unique<QuotientContext>(QuotientContext{
      LiftMap(*g_, lat_->at(n_id).elements), Lattice()});
  ctx->lattice = Lattice::enumerate(ctx->lift.quotient_group());
  auto& ref = *ctx;
  quot_[n_id] = std::move(ctx);
  return ref;
}

// ---- t1 -----------------------------------------------------------------------

VerdictReport check_main_theorem(CheckSession& s) {
  const FiniteGroup& g = s.group();
  const Lattice& lat = s.lattice();
  VerdictReport rep{"t1", g.name(), {}, 0};
  if (is_cyclic(g)) {
    rep.clauses.push_back({"group is cyclic; the statement is about non-cyclic groups",
                           Status::Skipped, {}});
    return rep;
  }
  bool a = s.nilpotent();

  // (b) some ES-partition whose kernel is normal and inside the hypercenter
  std::optional<PartitionCertificate> bcert;
  for (int k = 0; k < lat.whole_id() && !bcert; ++k) {
    if (!lat.at(k).normal || !lat.at(k).elements.subset_of(s.hyper())) continue;
    auto certs = s.search(lat.whole_id(), k, true, 1);
    if (!certs.empty()) bcert = std::move(certs.front());
  }
  bool b = bcert.has_value();

  // (c) every non-cyclic subgroup (including g itself) has an ES-partition
  std::optional<int> bad_h;
  for (int h = 0; h < lat.size() && !bad_h; ++h) {
    if (lat.at(h).cyclic) continue;
    if (!s.has_es_within(h)) bad_h = h;
  }
  bool c = !bad_h.has_value();

  {
    Clause cl;
    cl.description = "nilpotent (" + std::string(a ? "true" : "false") +
                     ") <=> ES-partition with normal kernel inside the "
                     "hypercenter (" +
                     (b ? "true" : "false") + ")";
    cl.status = a == b ? Status::Pass : Status::Fail;
    if (bcert) cl.witness = certificate_to_json(g, *bcert);
    else if (cl.status == Status::Fail)
      cl.witness = {{"nilpotent", a}, {"normal_hypercentral_kernel", b}};
    rep.clauses.push_back(std::move(cl));
  }
  {
    Clause cl;
    cl.description = "nilpotent (" + std::string(a ? "true" : "false") +
                     ") <=> every non-cyclic subgroup has an ES-partition (" +
                     (c ? "true" : "false") + ")";
    cl.status = a == c ? Status::Pass : Status::Fail;
    if (bad_h)
      cl.witness = {{"subgroup_without_es_partition", subgroup_json(lat, *bad_h)}};
    else if (cl.status == Status::Fail)
      cl.witness = {{"nilpotent", a}, {"every_noncyclic_subgroup_has_es", c}};
    rep.clauses.push_back(std::move(cl));
  }
  return rep;
}

// ---- lr1 ----------------------------------------------------------------------

VerdictReport check_lr1(CheckSession& s) {
  VerdictReport rep{"lr1", s.group().name(), {}, 0};
  const auto& e = s.es_enumeration();
  for (int k : e.bounded_kernels)
    rep.clauses.push_back({"kernel id " + std::to_string(k) +
                               ": certificate enumeration hit the bound",
                           Status::Skipped, subgroup_json(s.lattice(), k)});
  if (e.certs.empty() && e.bounded_kernels.empty()) {
    rep.clauses.push_back(
        {"group has no ES-partition", Status::Vacuous, {}});
    return rep;
  }
  bool nil = s.nilpotent();
  for (const auto& [kid, cert] : e.certs) {
    const Subgroup& ker = s.lattice().at(kid);
    bool central = ker.elements.subset_of(s.hyper());
    bool rhs = ker.normal && central;
    Clause cl;
    cl.description = "kernel id " + std::to_string(kid) + " (order " +
                     std::to_string(ker.order) + "): nilpotent=" +
                     (nil ? "true" : "false") + ", kernel normal=" +
                     (ker.normal ? "true" : "false") +
                     ", kernel inside hypercenter=" + (central ? "true" : "false");
    cl.status = (nil == rhs) ? Status::Pass : Status::Fail;
    if (cl.status == Status::Fail)
      cl.witness = certificate_to_json(s.group(), cert);
    rep.clauses.push_back(std::move(cl));
  }
  return rep;
}

// ---- co1 ----------------------------------------------------------------------

VerdictReport check_squarefree(CheckSession& s) {
  VerdictReport rep{"co1", s.group().name(), {}, 0};
  if (!is_squarefree(s.group().order())) {
    rep.clauses.push_back(
        {"group order is not square-free", Status::Vacuous, {}});
    return rep;
  }
  bool any = s.has_es_within(s.lattice().whole_id());
  Clause cl;
  cl.description = "square-free order admits no ES-partition";
  cl.status = any ? Status::Fail : Status::Pass;
  if (any) {
    const auto& e = s.es_enumeration();
    if (!e.certs.empty())
      cl.witness = certificate_to_json(s.group(), e.certs.front().second);
    else
      cl.witness = {{"note", "certificate enumeration hit the bound"}};
  }
  rep.clauses.push_back(std::move(cl));
  return rep;
}

// ---- co35 ---------------------------------------------------------------------

SchmidtFlags schmidt_flags(CheckSession& s) {
  const Lattice& lat = s.lattice();
  SchmidtFlags f;
  f.schmidt = !s.nilpotent();
  for (int h = 0; h < lat.whole_id() && f.schmidt; ++h)
    if (!s.subgroup_nilpotent(h)) f.schmidt = false;

  f.minimal_non_es = !is_cyclic(s.group()) && !s.has_es_within(lat.whole_id());
  for (int h = 0; h < lat.whole_id() && f.minimal_non_es; ++h)
    if (!lat.at(h).cyclic && !s.has_es_within(h)) f.minimal_non_es = false;
  return f;
}

VerdictReport check_schmidt(CheckSession& s) {
  VerdictReport rep{"co35", s.group().name(), {}, 0};
  SchmidtFlags f = schmidt_flags(s);
  Clause cl;
  cl.description =
      std::string("Schmidt (") + (f.schmidt ? "true" : "false") +
      ") <=> minimal non-ES-partition group (" +
      (f.minimal_non_es ? "true" : "false") + ")";
  cl.status = f.schmidt == f.minimal_non_es ? Status::Pass : Status::Fail;
  if (cl.status == Status::Fail)
    cl.witness = {{"schmidt", f.schmidt}, {"minimal_non_es", f.minimal_non_es}};
  rep.clauses.push_back(std::move(cl));
  return rep;
}

// ---- t2 -----------------------------------------------------------------------

namespace {

int involution_count(const FiniteGroup& g, const ElementSet& h) {
  int c = 0;
  h.for_each([&](int x) {
    if (x != 0 && g.mul(x, x) == 0) ++c;
  });
  return c;
}

struct T2Recognizer {
  bool matched = false;
  std::string tag = "none";
  bool boundary = false;
};

T2Recognizer recognize_t2(CheckSession& s) {
  const FiniteGroup& g = s.group();
  const Lattice& lat = s.lattice();
  int n = g.order();
  int inv = involution_count(g, g.full_set());
  int p = 0;

  if (is_prime_power(n, &p) && n == p * p && exponent(g) == p)
    return {true, "Zp x Zp (p=" + std::to_string(p) + ")", false};
  if (n == 8 && !is_cyclic(g) && inv == 1) return {true, "Q8", false};
  if (n % 8 == 0 && is_prime(n / 8) && n / 8 >= 3 && inv == 1 &&
      !is_cyclic(g) && s.nilpotent())
    return {true, "Zp x Q8 (p=" + std::to_string(n / 8) + ")", false};
  if (n == 24 && inv == 1 && !s.nilpotent() && !lat.at(lat.sylow(2)).cyclic)
    return {true, "Z3 x| Q8", false};
  // metacyclic <a,b | a^p = b^(q^m) = 1, b^-1 a b = a^r>
  {
    auto primes = prime_set(n);
    if (primes.size() == 2) {
      bool nonabelian = center(g).count() != n;
      for (int pp : primes) {
        if (p_part(n, pp) != pp) continue;  // p appears to the first power
        int q = 0;
        for (int other : primes)
          if (other != pp) q = other;
        if (nonabelian && lat.at(lat.sylow(pp)).normal &&
            lat.at(lat.sylow(q)).cyclic) {
          int m = 0, qm = p_part(n, q);
          while (qm > 1) {
            qm /= q;
            ++m;
          }
          return {true,
                  "metacyclic(p=" + std::to_string(pp) +
                      ",q=" + std::to_string(q) + ",m=" + std::to_string(m) + ")",
                  false};
        }
      }
    }
  }
  // Z2 x Q8: the boundary case the classified list leaves open.
  if (n == 16 && s.nilpotent()) {
    for (int h = 0; h < lat.whole_id(); ++h) {
      const Subgroup& sub = lat.at(h);
      if (sub.order != 8 || sub.cyclic) continue;
      if (involution_count(g, sub.elements) != 1) continue;
      ElementSet z = center(g);
      bool outside_central_involution = false;
      z.for_each([&](int x) {
        if (x != 0 && g.mul(x, x) == 0 && !sub.elements.test(x))
          outside_central_involution = true;
      });
      if (outside_central_involution) return {true, "Z2 x Q8", true};
    }
  }
  return {};
}

}  // namespace

EfOutcome ef_outcome(CheckSession& s) {
  EfOutcome out;
  if (is_cyclic(s.group())) return out;
  out.applicable = true;
  const Lattice& lat = s.lattice();

  std::vector<int> ph = lat.proper_noncyclic();
  if (ph.empty()) {
    out.predicate = true;
    out.vacuous = true;
  } else {
    ElementSet meet = lat.at(ph.front()).elements;
    for (int h : ph) meet = meet & lat.at(h).elements;
    for (int f = 1; f < lat.size() && !out.predicate; ++f) {
      if (lat.at(f).order <= 1) continue;
      if (!lat.at(f).elements.subset_of(meet)) continue;
      bool works = true;
      for (int h : ph) {
        if (f == h || !s.has_es_with_kernel(h, f)) {
          works = false;
          break;
        }
      }
      if (works) {
        out.predicate = true;
        out.witness_f = f;
      }
    }
  }

  T2Recognizer rec = recognize_t2(s);
  out.recognizer = rec.matched;
  out.tag = rec.tag;
  out.boundary = rec.boundary;
  return out;
}

VerdictReport ef_predicate(CheckSession& s) {
  VerdictReport rep{"t2", s.group().name(), {}, 0};
  EfOutcome o = ef_outcome(s);
  if (!o.applicable) {
    rep.clauses.push_back({"group is cyclic; the statement is about non-cyclic groups",
                           Status::Skipped, {}});
    return rep;
  }
  std::string pv = o.predicate ? "true" : "false";
  std::string rv = o.recognizer ? "true" : "false";
  Clause cl;
  nlohmann::json w;
  if (o.witness_f >= 0) w["F"] = subgroup_json(s.lattice(), o.witness_f);
  if (o.vacuous) w["note"] = "no proper non-cyclic subgroups";
  if (o.boundary) {
    cl.description = "boundary case " + o.tag + ": predicate=" + pv +
                     "; membership in the classified list is reported, not "
                     "asserted";
    cl.status = Status::Skipped;
  } else if (o.predicate == o.recognizer) {
    cl.description =
        "predicate=" + pv + ", recognizer=" + rv + " (" + o.tag + ")";
    cl.status = Status::Pass;
  } else {
    cl.description = "disagreement with the classified list: predicate=" + pv +
                     ", recognizer=" + rv + " (" + o.tag +
                     "); reported, not asserted";
    cl.status = Status::Skipped;
  }
  cl.witness = w.is_null() || w.empty() ? nlohmann::json() : w;
  rep.clauses.push_back(std::move(cl));
  return rep;
}

// ---- prop0 --------------------------------------------------------------------

VerdictReport check_prop_solvable(CheckSession& s) {
  VerdictReport rep{"prop0", s.group().name(), {}, 0};
  const Lattice& lat = s.lattice();
  std::vector<int> solvable_kernels;
  for (int k = 0; k < lat.whole_id(); ++k)
    if (s.has_es_with_kernel(lat.whole_id(), k) && s.subgroup_solvable(k))
      solvable_kernels.push_back(k);
  if (solvable_kernels.empty()) {
    rep.clauses.push_back({"no ES-partition with a solvable kernel",
                           Status::Vacuous, {}});
    return rep;
  }
  bool solv = is_solvable(s.group());
  Clause cl;
  cl.description = "ES-partition with solvable kernel (ids";
  for (int k : solvable_kernels) cl.description += " " + std::to_string(k);
  cl.description += ") forces a solvable group: solvable=";
  cl.description += solv ? "true" : "false";
  cl.status = solv ? Status::Pass : Status::Fail;
  if (cl.status == Status::Fail)
    cl.witness = {{"solvable_kernel_ids", solvable_kernels}};
  rep.clauses.push_back(std::move(cl));
  return rep;
}

// ---- zapa1 --------------------------------------------------------------------

Zapa1Counts zapa1_counts(CheckSession& s, int n_id, int s_id) {
  Zapa1Counts out;
  const Lattice& lat = s.lattice();
  const auto& ctx = s.quotient_context(n_id);
  std::size_t bound = s.cert_bound();

  auto up = s.search(lat.whole_id(), s_id, false, bound + 1);
  if (up.size() > bound) {
    out.bounded = true;
    out.detail = "upstairs enumeration hit the bound";
    return out;
  }
  int sq_id = ctx.lattice.id_of(ctx.lift.project(lat.at(s_id).elements));
  if (sq_id < 0) {
    out.detail = "projected kernel is not a subgroup of the quotient";
    return out;
  }
  std::vector<PartitionCertificate> down;
  if (sq_id != ctx.lattice.whole_id()) {
    down = strict_partitions(ctx.lift.quotient_group(), ctx.lattice, sq_id,
                             false, bound + 1);
    if (down.size() > bound) {
      out.bounded = true;
      out.detail = "downstairs enumeration hit the bound";
      return out;
    }
  }
  out.upstairs = up.size();
  out.downstairs = down.size();

  std::set<CertKey> down_keys;
  for (const auto& c : down) down_keys.insert(cert_key(c));
  std::set<CertKey> up_keys;
  for (const auto& c : up) up_keys.insert(cert_key(c));

  // project every upstairs certificate and find it downstairs
  std::set<CertKey> projected;
  for (const auto& c : up) {
    std::vector<ElementSet> comps;
    for (const auto& h : c.components) comps.push_back(ctx.lift.project(h));
    auto qc = make_certificate(ctx.lift.quotient_group(),
                               ctx.lift.quotient_group().full_set(),
                               ctx.lift.project(c.kernel), std::move(comps));
    auto v = validate_partition(ctx.lift.quotient_group(), qc);
    if (!v.ok) {
      out.detail = "projection of an upstairs certificate is not a strict "
                   "partition: " + v.reason;
      return out;
    }
    projected.insert(cert_key(qc));
  }
  // lift every downstairs certificate and find it upstairs
  std::set<CertKey> lifted;
  for (const auto& c : down) {
    PartitionCertificate lc = lift_partition(ctx.lift, c);
    if (lat.id_of(lc.kernel) != s_id) {
      out.detail = "lift of a downstairs certificate has the wrong kernel";
      return out;
    }
    lifted.insert(cert_key(lc));
  }
  out.bijective = up.size() == down.size() && projected == down_keys &&
                  lifted == up_keys;
  if (!out.bijective && out.detail.empty())
    out.detail = "certificate sets do not correspond";
  return out;
}

VerdictReport check_zapa1(CheckSession& s) {
  VerdictReport rep{"zapa1", s.group().name(), {}, 0};
  const Lattice& lat = s.lattice();
  for (int n = 1; n < lat.whole_id(); ++n) {
    if (!lat.at(n).normal) continue;
    for (int sid = 0; sid < lat.whole_id(); ++sid) {
      if (!lat.le(n, sid)) continue;
      Zapa1Counts c = zapa1_counts(s, n, sid);
      std::string head = "N id " + std::to_string(n) + " (order " +
                         std::to_string(lat.at(n).order) + "), S id " +
                         std::to_string(sid) + " (order " +
                         std::to_string(lat.at(sid).order) + "): ";
      if (c.bounded) {
        rep.clauses.push_back({head + c.detail, Status::Skipped, {}});
        continue;
      }
      Clause cl;
      cl.description = head + std::to_string(c.upstairs) + " strict partitions "
                       "upstairs <-> " + std::to_string(c.downstairs) +
                       " downstairs";
      cl.status = c.bijective ? Status::Pass : Status::Fail;
      if (!c.bijective)
        cl.witness = {{"detail", c.detail},
                      {"upstairs", c.upstairs},
                      {"downstairs", c.downstairs}};
      rep.clauses.push_back(std::move(cl));
    }
  }
  if (rep.clauses.empty())
    rep.clauses.push_back({"no nontrivial proper normal subgroup",
                           Status::Vacuous, {}});
  return rep;
}

// ---- zapa2 --------------------------------------------------------------------

VerdictReport check_zapa2(CheckSession& s) {
  VerdictReport rep{"zapa2", s.group().name(), {}, 0};
  const Lattice& lat = s.lattice();
  for (int sid = 1; sid < lat.whole_id(); ++sid) {
    if (!lat.is_antinormal(sid)) continue;
    auto certs = s.search(lat.whole_id(), sid, false, s.cert_bound() + 1);
    if (certs.size() > s.cert_bound()) {
      rep.clauses.push_back({"kernel id " + std::to_string(sid) +
                                 ": enumeration hit the bound",
                             Status::Skipped, {}});
      continue;
    }
    for (const auto& cert : certs) {
      Zapa2Report z = zapa2_crosscheck(s.group(), lat, sid, cert);
      Clause cl;
      cl.description = "kernel id " + std::to_string(sid) + " (order " +
                       std::to_string(lat.at(sid).order) + "), " +
                       std::to_string(cert.n_components) + " components:";
      for (const auto& item : z.items)
        cl.description += std::string(" [") + (item.pass ? "ok" : "FAIL") +
                          "] " + item.description + ";";
      cl.status = z.applicable && z.all_pass() ? Status::Pass : Status::Fail;
      if (cl.status == Status::Fail)
        cl.witness = certificate_to_json(s.group(), cert);
      rep.clauses.push_back(std::move(cl));
    }
  }
  if (rep.clauses.empty())
    rep.clauses.push_back(
        {"no strict partition with a nontrivial antinormal kernel",
         Status::Vacuous, {}});
  return rep;
}

// ---- classification -----------------------------------------------------------

VerdictReport classification_crosscheck(CheckSession& s) {
  VerdictReport rep{"class", s.group().name(), {}, 0};
  const FiniteGroup& g = s.group();
  const Lattice& lat = s.lattice();
  if (g.order() == 1) {
    rep.clauses.push_back({"trivial group", Status::Vacuous, {}});
    return rep;
  }
  bool has = !s.search(lat.whole_id(), lat.trivial_id(), false, 1).empty();

  std::vector<std::string> branches;
  int p = 0;
  if (is_prime_power(g.order(), &p)) {
    if (g.order() > p && lat.hughes(p) != lat.whole_id())
      branches.push_back("p-group with proper Hughes subgroup (p=" +
                         std::to_string(p) + ")");
  } else {
    for (int q : prime_set(g.order()))
      if (lat.hughes(q) != lat.whole_id()) {
        branches.push_back("Hughes-Thompson type (p=" + std::to_string(q) + ")");
        break;
      }
  }
  if (frobenius_structure(g, lat)) branches.push_back("Frobenius");
  for (const auto& t : s.tags())
    if (t.rfind("psl-", 0) == 0 || t.rfind("pgl-", 0) == 0)
      branches.push_back("corpus tag " + t);

  bool recognized = !branches.empty();
  Clause cl;
  cl.description = std::string("kernel-1 partition ") +
                   (has ? "exists" : "does not exist") + "; recognized classes:";
  if (branches.empty()) cl.description += " none";
  for (const auto& b : branches) cl.description += " [" + b + "]";
  if (has == recognized) {
    cl.status = Status::Pass;
  } else if (has && !recognized) {
    cl.status = Status::Skipped;
    cl.description += " (unrecognized class)";
  } else {
    cl.status = Status::Fail;  // classification promises a partition
    cl.witness = {{"partition_exists", has}, {"branches", branches}};
  }
  rep.clauses.push_back(std::move(cl));
  return rep;
}

// ---- dispatch -----------------------------------------------------------------

const std::vector<std::string>& all_check_ids() {
  static const std::vector<std::string> ids{"t1",    "lr1",   "co1",
                                            "co35",  "t2",    "prop0",
                                            "zapa1", "zapa2", "class"};
  return ids;
}

VerdictReport run_check(const std::string& id, CheckSession& s) {
  auto start = std::chrono::steady_clock::now();
  VerdictReport rep;
  if (id == "t1") rep = check_main_theorem(s);
  else if (id == "lr1") rep = check_lr1(s);
  else if (id == "co1") rep = check_squarefree(s);
  else if (id == "co35") rep = check_schmidt(s);
  else if (id == "t2") rep = ef_predicate(s);
  else if (id == "prop0") rep = check_prop_solvable(s);
  else if (id == "zapa1") rep = check_zapa1(s);
  else if (id == "zapa2") rep = check_zapa2(s);
  else if (id == "class") rep = classification_crosscheck(s);
  else throw ParameterError("unknown check id: " + id);
  for (auto& w : s.drain_pi_violations())
    rep.clauses.push_back({"pi-lemma violated by an encountered certificate",
                           Status::Fail, std::move(w)});
  rep.ms = std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - start)
               .count();
  return rep;
}

}  // namespace partita
