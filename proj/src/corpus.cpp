#include "partita/corpus.hpp"

#include <algorithm>
#include <fstream>

#include "partita/constructions.hpp"

namespace partita {

const std::vector<std::string>& corpus_kinds() {
  static const std::vector<std::string> kinds{
      "cyclic",    "abelian",    "dihedral",   "quaternion",
      "symmetric", "alternating", "direct",     "semidirect",
      "metacyclic", "cayley-file", "example108"};
  return kinds;
}

void CorpusManifest::validate() const {
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const auto& e = entries[i];
    if (e.name.empty())
      throw ManifestError("entry " + std::to_string(i) + ": empty name");
    const auto& ks = corpus_kinds();
    if (std::find(ks.begin(), ks.end(), e.kind) == ks.end())
      throw ManifestError("entry " + std::to_string(i) + " (" + e.name +
                          "): unknown builder kind '" + e.kind + "'");
    for (std::size_t j = 0; j < i; ++j)
      if (entries[j].name == e.name)
        throw ManifestError("entry " + std::to_string(i) +
                            ": duplicate name '" + e.name + "'");
  }
}

int CorpusManifest::find(const std::string& name) const {
  for (std::size_t i = 0; i < entries.size(); ++i)
    if (entries[i].name == name) return int(i);
  return -1;
}

CorpusManifest CorpusManifest::from_json(const nlohmann::json& j) {
  CorpusManifest m;
  if (!j.is_object() || !j.contains("entries") || !j["entries"].is_array())
    throw ManifestError("manifest must be an object with an 'entries' array");
  for (std::size_t i = 0; i < j["entries"].size(); ++i) {
    const auto& ej = j["entries"][i];
    CorpusEntry e;
    try {
      e.name = ej.at("name").get<std::string>();
      e.kind = ej.at("kind").get<std::string>();
      if (ej.contains("params")) e.params = ej["params"];
      if (ej.contains("tags"))
        e.tags = ej["tags"].get<std::vector<std::string>>();
      if (ej.contains("order")) e.order = ej["order"].get<int>();
    } catch (const nlohmann::json::exception& ex) {
      throw ManifestError("entry " + std::to_string(i) + ": " + ex.what());
    }
    m.entries.push_back(std::move(e));
  }
  m.validate();
  return m;
}

CorpusManifest CorpusManifest::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ManifestError("cannot open manifest " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& ex) {
    throw ManifestError("manifest " + path + " is not valid JSON: " +
                        ex.what());
  }
  return from_json(j);
}

nlohmann::json CorpusManifest::to_json() const {
  nlohmann::json j;
  j["entries"] = nlohmann::json::array();
  for (const auto& e : entries) {
    nlohmann::json ej;
    ej["name"] = e.name;
    ej["kind"] = e.kind;
    if (!e.params.empty()) ej["params"] = e.params;
    if (!e.tags.empty()) ej["tags"] = e.tags;
    if (e.order) ej["order"] = *e.order;
    j["entries"].push_back(std::move(ej));
  }
  return j;
}

namespace {

const FiniteGroup& resolve_ref(const nlohmann::json& v,
                               const CorpusEntry& e,
                               const std::vector<std::optional<FiniteGroup>>& built,
                               const CorpusManifest& manifest) {
  if (!v.is_string())
    throw ManifestError(e.name + ": group references must be entry names");
  std::string name = v.get<std::string>();
  int idx = manifest.find(name);
  if (idx < 0 || std::size_t(idx) >= built.size())
    throw ManifestError(e.name + ": reference '" + name +
                        "' must name an earlier entry");
  if (!built[idx])
    throw ManifestError(e.name + ": referenced entry '" + name +
                        "' failed to build");
  return *built[idx];
}

}  // namespace

FiniteGroup build_entry(const CorpusEntry& e,
                        const std::vector<std::optional<FiniteGroup>>& built,
                        const CorpusManifest& manifest) {
  const auto& p = e.params;
  auto geti = [&](const char* key) {
    if (!p.contains(key))
      throw ManifestError(e.name + ": missing parameter '" + key + "'");
    return p.at(key).get<int>();
  };
  FiniteGroup g = [&]() -> FiniteGroup {
    if (e.kind == "cyclic") return cyclic_group(geti("n"));
    if (e.kind == "abelian")
      return abelian_group(p.at("factors").get<std::vector<int>>());
    if (e.kind == "dihedral") return dihedral_group(geti("n"));
    if (e.kind == "quaternion") return quaternion_group(geti("order"));
    if (e.kind == "symmetric") return symmetric_group(geti("n"));
    if (e.kind == "alternating") return alternating_group(geti("n"));
    if (e.kind == "metacyclic")
      return metacyclic_group(geti("p"), geti("q"), geti("m"),
                              p.at("r").get<long long>());
    if (e.kind == "direct") {
      const auto& of = p.at("of");
      if (!of.is_array() || of.size() < 2)
        throw ManifestError(e.name + ": 'of' must list at least two entries");
      FiniteGroup acc = resolve_ref(of[0], e, built, manifest);
      for (std::size_t i = 1; i < of.size(); ++i)
        acc = direct_product(acc, resolve_ref(of[i], e, built, manifest));
      return acc;
    }
    if (e.kind == "semidirect") {
      const FiniteGroup& acting = resolve_ref(p.at("acting"), e, built, manifest);
      const FiniteGroup& normal = resolve_ref(p.at("normal"), e, built, manifest);
      auto action = p.at("action").get<std::vector<std::vector<int>>>();
      return semidirect_product(acting, normal, action);
    }
    if (e.kind == "cayley-file")
      return group_from_cayley_file(p.at("path").get<std::string>(), e.name);
    if (e.kind == "example108") return example_group_108().group;
    throw ManifestError(e.name + ": unknown builder kind '" + e.kind + "'");
  }();
  if (e.order && g.order() != *e.order)
    throw ManifestError(e.name + ": built order " + std::to_string(g.order()) +
                        " does not match declared order " +
                        std::to_string(*e.order));
  return g;
}

CorpusManifest CorpusManifest::builtin() {
  CorpusManifest m;
  auto add = [&](std::string name, std::string kind, nlohmann::json params,
                 int order, std::vector<std::string> tags = {}) {
    CorpusEntry e;
    e.name = std::move(name);
    e.kind = std::move(kind);
    e.params = std::move(params);
    e.tags = std::move(tags);
    e.order = order;
    m.entries.push_back(std::move(e));
  };

  for (int n = 1; n <= 16; ++n)
    add("z" + std::to_string(n), "cyclic", {{"n", n}}, n);
  add("v4", "abelian", {{"factors", {2, 2}}}, 4);
  add("z3xz3", "abelian", {{"factors", {3, 3}}}, 9);
  add("z2xz2xz2", "abelian", {{"factors", {2, 2, 2}}}, 8);
  add("z4xz2", "abelian", {{"factors", {4, 2}}}, 8);
  add("d8", "dihedral", {{"n", 4}}, 8);
  add("d10", "dihedral", {{"n", 5}}, 10, {"frobenius", "schmidt-expected"});
  add("d12", "dihedral", {{"n", 6}}, 12);
  add("q8", "quaternion", {{"order", 8}}, 8);
  add("q16", "quaternion", {{"order", 16}}, 16);
  add("s3", "symmetric", {{"n", 3}}, 6,
      {"frobenius", "schmidt-expected", "psl-2-2"});
  add("a4", "alternating", {{"n", 4}}, 12,
      {"frobenius", "schmidt-expected", "psl-2-3"});
  add("s4", "symmetric", {{"n", 4}}, 24, {"pgl-2-3"});
  add("a5", "alternating", {{"n", 5}}, 60, {"psl-2-4", "psl-2-5"});
  add("z7sdz3", "metacyclic", {{"p", 7}, {"q", 3}, {"m", 1}, {"r", 2}}, 21,
      {"frobenius", "schmidt-expected"});

  {  // (Z3 x Z3) x| Z2, the involution inverting everything
    FiniteGroup a = abelian_group({3, 3});
    FiniteGroup z2 = cyclic_group(2);
    add("z3z3sdz2", "semidirect",
        {{"acting", "z2"},
         {"normal", "z3xz3"},
         {"action", inversion_action(z2, a)}},
        18, {"frobenius"});
  }
  {  // SL(2,3) as Z3 x| Q8: the order-3 automorphism cycling i -> j -> k
    std::vector<std::vector<int>> action(3);
    action[0] = {0, 1, 2, 3, 4, 5, 6, 7};
    action[1] = {0, 4, 2, 6, 5, 1, 7, 3};
    for (int x = 0; x < 8; ++x) action[2].push_back(action[1][action[1][x]]);
    add("sl23", "semidirect",
        {{"acting", "z3"}, {"normal", "q8"}, {"action", action}}, 24,
        {"schmidt-expected"});
  }
  add("z3xq8", "direct", {{"of", {"z3", "q8"}}}, 24);
  add("z5xq8", "direct", {{"of", {"z5", "q8"}}}, 40);
  add("z2xq8", "direct", {{"of", {"z2", "q8"}}}, 16, {"t2-boundary"});
  add("example108", "example108", nlohmann::json::object(), 108);

  m.validate();
  return m;
}

Corpus::Corpus(CorpusManifest manifest, int lattice_cap)
    : manifest_(std::move(manifest)), cap_(lattice_cap) {
  manifest_.validate();
  errors_.resize(manifest_.entries.size());
  for (std::size_t i = 0; i < manifest_.entries.size(); ++i) {
    try {
      groups_.emplace_back(build_entry(manifest_.entries[i], groups_, manifest_));
    } catch (const std::exception& ex) {
      errors_[i] = ex.what();
      groups_.emplace_back(std::nullopt);
    }
  }
  lattices_.resize(groups_.size());
}

const FiniteGroup& Corpus::group(std::size_t i) const {
  if (!groups_[i])
    throw ManifestError(manifest_.entries[i].name + ": " + errors_[i]);
  return *groups_[i];
}

const Lattice& Corpus::lattice(std::size_t i) const {
  {
    std::lock_guard<std::mutex> lock(mu_);
    if (lattices_[i]) return *lattices_[i];
  }
  auto lat = std::make_unique<Lattice>(Lattice::enumerate(group(i), cap_));
  std::lock_guard<std::mutex> lock(mu_);
  if (!lattices_[i]) lattices_[i] = std::move(lat);
  return *lattices_[i];
}

void Corpus::build_all_lattices(ExecMode mode) {
  parallel_for(size(), mode, [&](std::size_t i) {
    if (!build_failed(i)) lattice(i);
  });
}

}  // namespace partita
