#include "partita/cli.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <ostream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "partita/constructions.hpp"
#include "partita/suite.hpp"

namespace partita {

namespace {

using nlohmann::json;

CorpusManifest manifest_from_option(const std::string& corpus_opt) {
  if (!corpus_opt.empty() && corpus_opt != "builtin")
    return CorpusManifest::load_file(corpus_opt);
  if (corpus_opt.empty()) {
    if (const char* env = std::getenv("PARTITA_CORPUS"))
      if (*env) return CorpusManifest::load_file(env);
  }
  return CorpusManifest::builtin();
}

int require_group(const Corpus& corpus, const std::string& name,
                  std::ostream& err) {
  int idx = corpus.find(name);
  if (idx < 0) err << "unknown group '" << name << "'; see `catalog list`\n";
  return idx;
}

void print_certificate(const FiniteGroup& g, const PartitionCertificate& cert,
                       std::ostream& out) {
  out << "kernel order " << cert.kernel.count() << ", " << cert.n_components
      << " components of order";
  for (const auto& c : cert.components) out << " " << c.count();
  out << (cert.equal_orders ? " (equal)" : " (unequal)") << "\n";
  out << "  kernel: {";
  bool first = true;
  cert.kernel.for_each([&](int x) {
    out << (first ? "" : ", ") << g.label(x);
    first = false;
  });
  out << "}\n";
  for (const auto& c : cert.components) {
    out << "  component: {";
    first = true;
    c.for_each([&](int x) {
      out << (first ? "" : ", ") << g.label(x);
      first = false;
    });
    out << "}\n";
  }
}

struct KernelSelection {
  std::vector<int> ids;
  std::string error;
};

KernelSelection parse_kernel(const Lattice& lat, const std::string& spec) {
  KernelSelection sel;
  if (spec.empty()) {
    for (int s = 0; s < lat.whole_id(); ++s) sel.ids.push_back(s);
    return sel;
  }
  if (spec == "center") {
    int id = lat.id_of(center(lat.group()));
    if (id == lat.whole_id()) {
      sel.error = "center is the whole group; no proper kernel";
      return sel;
    }
    sel.ids.push_back(id);
    return sel;
  }
  if (spec == "frattini") {
    sel.ids.push_back(lat.frattini());
    return sel;
  }
  if (spec.rfind("order:", 0) == 0) {
    char* end = nullptr;
    long k = std::strtol(spec.c_str() + 6, &end, 10);
    if (!end || *end != '\0' || k <= 0) {
      sel.error = "bad kernel order in '" + spec + "'";
      return sel;
    }
    for (int s = 0; s < lat.whole_id(); ++s)
      if (lat.at(s).order == k) sel.ids.push_back(s);
    if (sel.ids.empty()) sel.error = "no proper subgroup of order " + spec.substr(6);
    return sel;
  }
  char* end = nullptr;
  long id = std::strtol(spec.c_str(), &end, 10);
  if (end && *end == '\0' && id >= 0 && id < lat.whole_id()) {
    sel.ids.push_back(int(id));
    return sel;
  }
  sel.error = "bad kernel spec '" + spec +
              "' (use a subgroup id, order:k, center or frattini)";
  return sel;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"finite-group strict/equal-strict partition toolkit"};
  app.require_subcommand(1);
  app.fallthrough();  // app-level options may follow the subcommand

  std::string corpus_opt;
  app.add_option("--corpus", corpus_opt,
                 "corpus manifest path (default: $PARTITA_CORPUS or builtin)");

  // catalog list
  auto* catalog = app.add_subcommand("catalog", "corpus catalog");
  bool catalog_json = false;
  auto* catalog_list = catalog->add_subcommand("list", "list corpus entries");
  catalog_list->add_flag("--json", catalog_json, "machine-readable output");

  // group show <name>
  auto* groupc = app.add_subcommand("group", "single-group information");
  auto* group_show = groupc->add_subcommand("show", "structural summary");
  std::string show_name;
  bool show_json = false;
  group_show->add_option("name", show_name, "group name")->required();
  group_show->add_flag("--json", show_json);

  // subgroups <name>
  auto* subgroups = app.add_subcommand("subgroups", "dump the subgroup lattice");
  std::string sub_name;
  bool sub_json = false;
  subgroups->add_option("name", sub_name, "group name")->required();
  subgroups->add_flag("--json", sub_json);

  // partition search <name> [--kernel ...] [--equal] [--limit N] [--json]
  auto* partition = app.add_subcommand("partition", "strict partition search");
  auto* psearch = partition->add_subcommand("search", "search for partitions");
  std::string search_name, kernel_spec;
  bool search_equal = false, search_json = false;
  std::size_t search_limit = 10;
  psearch->add_option("name", search_name, "group name")->required();
  psearch->add_option("--kernel", kernel_spec,
                      "subgroup-id | order:k | center | frattini (default: all"
                      " proper subgroups)");
  psearch->add_flag("--equal", search_equal, "equal component orders only");
  psearch->add_option("--limit", search_limit, "max certificates per kernel");
  psearch->add_flag("--json", search_json);

  // construct es <name> | construct example108
  auto* construct = app.add_subcommand("construct", "partition constructors");
  auto* ces = construct->add_subcommand(
      "es", "ES-partition of a non-cyclic nilpotent group");
  std::string ces_name;
  bool ces_json = false;
  ces->add_option("name", ces_name, "group name")->required();
  ces->add_flag("--json", ces_json);
  auto* c108 = construct->add_subcommand(
      "example108", "the order-108 group and its certificate");
  bool c108_json = false;
  c108->add_flag("--json", c108_json);

  // verify <check> [--json out] [--serial] [--bound N]
  auto* verify = app.add_subcommand("verify", "run theorem checks over the corpus");
  std::string verify_what = "all", verify_json_path;
  bool verify_serial = false;
  std::size_t verify_bound = 10000;
  verify->add_option("check", verify_what,
                     "all|t1|lr1|co1|co35|t2|prop0|zapa1|zapa2|class");
  verify->add_option("--json", verify_json_path, "write the JSON report here");
  verify->add_flag("--serial", verify_serial, "disable the parallel scan");
  verify->add_option("--bound", verify_bound, "certificate enumeration bound");

  std::vector<const char*> argv;
  argv.push_back("partita");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(int(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  }

  try {
    Corpus corpus(manifest_from_option(corpus_opt));

    if (catalog_list->parsed()) {
      if (catalog_json) {
        json j = json::array();
        for (std::size_t i = 0; i < corpus.size(); ++i) {
          const auto& e = corpus.entry(i);
          j.push_back({{"name", e.name},
                       {"kind", e.kind},
                       {"order", corpus.group(i).order()},
                       {"tags", e.tags}});
        }
        out << j.dump(2) << "\n";
      } else {
        for (std::size_t i = 0; i < corpus.size(); ++i) {
          const auto& e = corpus.entry(i);
          out << e.name << "  order " << corpus.group(i).order();
          if (!e.tags.empty()) {
            out << "  [";
            for (std::size_t t = 0; t < e.tags.size(); ++t)
              out << (t ? " " : "") << e.tags[t];
            out << "]";
          }
          out << "\n";
        }
      }
      return 0;
    }

    if (group_show->parsed()) {
      int idx = require_group(corpus, show_name, err);
      if (idx < 0) return 1;
      const FiniteGroup& g = corpus.group(idx);
      auto stats = order_statistics(g);
      ElementSet z = center(g);
      bool nil = is_nilpotent(g), solv = is_solvable(g);
      if (show_json) {
        json j;
        j["name"] = corpus.entry(idx).name;
        j["order"] = g.order();
        j["center_order"] = z.count();
        j["nilpotent"] = nil;
        j["solvable"] = solv;
        j["cyclic"] = is_cyclic(g);
        j["exponent"] = exponent(g);
        j["order_statistics"] = json::object();
        for (auto [o, c] : stats)
          j["order_statistics"][std::to_string(o)] = c;
        out << j.dump(2) << "\n";
      } else {
        out << corpus.entry(idx).name << ": order " << g.order()
            << ", center order " << z.count() << ", nilpotent "
            << (nil ? "true" : "false") << ", solvable "
            << (solv ? "true" : "false") << ", exponent " << exponent(g)
            << "\n";
        out << "element orders:";
        for (auto [o, c] : stats) out << " " << o << ":" << c;
        out << "\n";
      }
      return 0;
    }

    if (subgroups->parsed()) {
      int idx = require_group(corpus, sub_name, err);
      if (idx < 0) return 1;
      const Lattice& lat = corpus.lattice(idx);
      if (sub_json) {
        json j = json::array();
        for (int i = 0; i < lat.size(); ++i) {
          const Subgroup& s = lat.at(i);
          j.push_back({{"id", s.id},
                       {"order", s.order},
                       {"elements", s.elements.to_indices()},
                       {"normal", s.normal},
                       {"cyclic", s.cyclic}});
        }
        out << j.dump(2) << "\n";
      } else {
        out << lat.size() << " subgroups\n";
        for (int i = 0; i < lat.size(); ++i) {
          const Subgroup& s = lat.at(i);
          out << "#" << s.id << " order " << s.order
              << (s.normal ? " normal" : "") << (s.cyclic ? " cyclic" : "")
              << "\n";
        }
      }
      return 0;
    }

    if (psearch->parsed()) {
      int idx = require_group(corpus, search_name, err);
      if (idx < 0) return 1;
      const FiniteGroup& g = corpus.group(idx);
      const Lattice& lat = corpus.lattice(idx);
      auto sel = parse_kernel(lat, kernel_spec);
      if (!sel.error.empty()) {
        err << sel.error << "\n";
        return 1;
      }
      json jcerts = json::array();
      std::size_t total = 0;
      for (int k : sel.ids) {
        auto certs = strict_partitions(g, lat, k, search_equal, search_limit);
        for (const auto& c : certs) {
          ++total;
          if (search_json)
            jcerts.push_back(certificate_to_json(g, c));
          else {
            out << "kernel id " << k << ": ";
            print_certificate(g, c, out);
          }
        }
      }
      if (search_json)
        out << jcerts.dump(2) << "\n";
      else
        out << total << " certificate(s)\n";
      return 0;
    }

    if (ces->parsed()) {
      int idx = require_group(corpus, ces_name, err);
      if (idx < 0) return 1;
      const FiniteGroup& g = corpus.group(idx);
      auto cert = nilpotent_es_partition(g);
      if (ces_json)
        out << certificate_to_json(g, cert).dump(2) << "\n";
      else
        print_certificate(g, cert, out);
      return 0;
    }

    if (c108->parsed()) {
      auto ex = example_group_108();
      if (c108_json) {
        json j = certificate_to_json(ex.group, ex.cert);
        j["order"] = ex.group.order();
        j["nilpotent"] = is_nilpotent(ex.group);
        out << j.dump(2) << "\n";
      } else {
        out << "group of order " << ex.group.order() << ", nilpotent "
            << (is_nilpotent(ex.group) ? "true" : "false") << "\n";
        print_certificate(ex.group, ex.cert, out);
      }
      return 0;
    }

    if (verify->parsed()) {
      try {
        resolve_selection({verify_what});
      } catch (const ParameterError& pe) {
        err << pe.what() << "\n";
        return 2;
      }
      auto t0 = std::chrono::steady_clock::now();
      auto reports = run_suite(
          corpus, {verify_what},
          verify_serial ? ExecMode::Serial : ExecMode::Parallel, verify_bound);
      double ms = std::chrono::duration<double, std::milli>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
      int fails = 0, clauses = 0;
      for (const auto& r : reports) {
        clauses += int(r.clauses.size());
        bool bad = r.has_fail();
        if (bad) ++fails;
        out << r.theorem << " " << r.group << ": "
            << (bad ? "FAIL" : "ok") << " (" << r.clauses.size()
            << " clause(s))\n";
        for (const auto& c : r.clauses)
          if (c.status == Status::Fail)
            out << "  FAIL: " << c.description << "\n";
      }
      out << reports.size() << " reports, " << clauses << " clauses, "
          << fails << " failing report(s), " << int(ms) << " ms\n";
      if (!verify_json_path.empty()) {
        std::ofstream jf(verify_json_path);
        if (!jf) {
          err << "cannot write " << verify_json_path << "\n";
          return 1;
        }
        jf << reports_to_json(reports).dump(2) << "\n";
      }
      return fails == 0 ? 0 : 1;
    }
  } catch (const std::exception& ex) {
    err << "error: " << ex.what() << "\n";
    return 1;
  }
  err << "no subcommand\n";
  return 2;
}

}  // namespace partita
