#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "partita/lattice.hpp"
#include "partita/parallel.hpp"

namespace partita {

/// One corpus entry: a named group builder with parameters and free-form
/// tags. Kinds: cyclic, abelian, dihedral, quaternion, symmetric,
/// alternating, direct, semidirect, metacyclic, cayley-file, example108.
/// direct/semidirect refer to earlier entries by name.
struct CorpusEntry {
  std::string name;
  std::string kind;
  nlohmann::json params = nlohmann::json::object();
  std::vector<std::string> tags;
  std::optional<int> order;  // declared order, checked after building
};

struct CorpusManifest {
  std::vector<CorpusEntry> entries;

  /// The curated default corpus (Z1..Z16, the small abelian, dihedral and
  /// quaternion groups, S3/A4/S4/A5, the Frobenius and Schmidt examples, the
  /// Q8 products and the order-108 example).
  static CorpusManifest builtin();
  static CorpusManifest from_json(const nlohmann::json& j);
  static CorpusManifest load_file(const std::string& path);
  nlohmann::json to_json() const;

  /// Unique names, registered kinds. Throws ManifestError naming the entry.
  void validate() const;
  int find(const std::string& name) const;  // index or -1
};

const std::vector<std::string>& corpus_kinds();

/// Builds one entry; `built` holds the groups of all earlier entries (empty
/// slots for entries that failed to build) for direct/semidirect references.
FiniteGroup build_entry(const CorpusEntry& e,
                        const std::vector<std::optional<FiniteGroup>>& built,
                        const CorpusManifest& manifest);

/// A fully built corpus: every group constructed eagerly (declared orders
/// checked), lattices built on demand and cached. A builder failure is
/// recorded per entry instead of aborting the whole corpus; accessing the
/// failed group rethrows it.
class Corpus {
 public:
  explicit Corpus(CorpusManifest manifest, int lattice_cap = 200);

  std::size_t size() const { return manifest_.entries.size(); }
  const CorpusManifest& manifest() const { return manifest_; }
  const CorpusEntry& entry(std::size_t i) const { return manifest_.entries[i]; }
  /// Throws the recorded builder error when the entry failed to build.
  const FiniteGroup& group(std::size_t i) const;
  const Lattice& lattice(std::size_t i) const;
  bool build_failed(std::size_t i) const { return !errors_[i].empty(); }
  int find(const std::string& name) const { return manifest_.find(name); }

  void build_all_lattices(ExecMode mode);

 private:
  CorpusManifest manifest_;
  int cap_;
  std::vector<std::optional<FiniteGroup>> groups_;
  std::vector<std::string> errors_;
  mutable std::vector<std::unique_ptr<Lattice>> lattices_;
  mutable std::mutex mu_;
};

}  // namespace partita
