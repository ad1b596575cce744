#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "partita/cli.hpp"
#include "partita/corpus.hpp"

using namespace partita;

namespace {

struct CliResult {
  int exit;
  std::string out;
  std::string err;
};

CliResult cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("builtin corpus builds completely") {
  CorpusManifest m = CorpusManifest::builtin();
  CHECK(m.entries.size() >= 22);
  Corpus corpus(m);
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    CAPTURE(corpus.entry(i).name);
    CHECK_FALSE(corpus.build_failed(i));
    REQUIRE(corpus.entry(i).order.has_value());
    CHECK(corpus.group(i).order() == *corpus.entry(i).order);
  }
  for (const char* name :
       {"v4", "z3xz3", "z2xz2xz2", "d8", "d10", "d12", "q8", "q16", "z9",
        "z4xz2", "s3", "a4", "s4", "a5", "z7sdz3", "z3z3sdz2", "sl23",
        "z3xq8", "z5xq8", "z2xq8", "example108"})
    CHECK(corpus.find(name) >= 0);

  // the boundary probes carry their documentation tags
  int zq = corpus.find("z2xq8");
  CHECK(std::find(corpus.entry(zq).tags.begin(), corpus.entry(zq).tags.end(),
                  "t2-boundary") != corpus.entry(zq).tags.end());

  // sl23 really is SL(2,3): order statistics 1,1,8,6,8
  int sl = corpus.find("sl23");
  CHECK(order_statistics(corpus.group(sl)) ==
        std::map<int, int>{{1, 1}, {2, 1}, {3, 8}, {4, 6}, {6, 8}});
}

TEST_CASE("manifest validation errors carry locations") {
  nlohmann::json j = {
      {"entries",
       {{{"name", "a"}, {"kind", "cyclic"}, {"params", {{"n", 3}}}},
        {{"name", "a"}, {"kind", "cyclic"}, {"params", {{"n", 4}}}}}}};
  CHECK_THROWS_WITH_AS(CorpusManifest::from_json(j),
                       doctest::Contains("duplicate name"), ManifestError);

  nlohmann::json bad_kind = {
      {"entries", {{{"name", "x"}, {"kind", "sporadic"}}}}};
  CHECK_THROWS_WITH_AS(CorpusManifest::from_json(bad_kind),
                       doctest::Contains("unknown builder kind"),
                       ManifestError);

  // a metacyclic entry violating r^q = 1 (mod p) is rejected when built,
  // with the congruence named
  CorpusManifest m;
  CorpusEntry e;
  e.name = "badmeta";
  e.kind = "metacyclic";
  e.params = {{"p", 5}, {"q", 2}, {"m", 1}, {"r", 2}};
  m.entries = {e};
  Corpus corpus(std::move(m));
  CHECK(corpus.build_failed(0));
  CHECK_THROWS_WITH_AS(corpus.group(0), doctest::Contains("r^q == 1"),
                       ManifestError);
}

TEST_CASE("manifest round trip") {
  CorpusManifest m = CorpusManifest::builtin();
  nlohmann::json j = m.to_json();
  CorpusManifest back = CorpusManifest::from_json(j);
  CHECK(back.to_json() == j);
  CHECK(back.entries.size() == m.entries.size());

  // empty document, empty corpus
  CorpusManifest empty = CorpusManifest::from_json(
      nlohmann::json{{"entries", nlohmann::json::array()}});
  CHECK(empty.entries.empty());
  CHECK(Corpus(empty).size() == 0);
}

TEST_CASE("cayley-file corpus entries") {
  std::string path = "cayley_tmp_test.txt";
  {
    std::ofstream f(path);
    f << group_to_cayley(dihedral_group(3));
  }
  CorpusManifest m;
  CorpusEntry e;
  e.name = "fromfile";
  e.kind = "cayley-file";
  e.params = {{"path", path}};
  e.order = 6;
  m.entries = {e};
  Corpus corpus(std::move(m));
  REQUIRE_FALSE(corpus.build_failed(0));
  CHECK(corpus.group(0).order() == 6);
  CHECK(corpus.group(0).label(1) == "x^1");
  std::remove(path.c_str());
}

TEST_CASE("cli catalog and group show") {
  auto list = cli({"catalog", "list"});
  CHECK(list.exit == 0);
  CHECK(list.out.find("q8") != std::string::npos);
  CHECK(list.out.find("example108") != std::string::npos);

  auto show = cli({"group", "show", "q8"});
  CHECK(show.exit == 0);
  CHECK(show.out.find("order 8") != std::string::npos);
  CHECK(show.out.find("center order 2") != std::string::npos);
  CHECK(show.out.find("nilpotent true") != std::string::npos);

  auto showj = cli({"group", "show", "q8", "--json"});
  auto j = nlohmann::json::parse(showj.out);
  CHECK(j["order"] == 8);
  CHECK(j["center_order"] == 2);
  CHECK(j["nilpotent"] == true);

  auto missing = cli({"group", "show", "nosuch"});
  CHECK(missing.exit == 1);
  CHECK(missing.err.find("unknown group") != std::string::npos);
}

TEST_CASE("cli subgroups dump") {
  auto r = cli({"subgroups", "q8", "--json"});
  REQUIRE(r.exit == 0);
  auto j = nlohmann::json::parse(r.out);
  REQUIRE(j.size() == 6);
  for (const auto& s : j) {
    CHECK(s.contains("id"));
    CHECK(s.contains("order"));
    CHECK(s.contains("elements"));
    CHECK(s.contains("normal"));
    CHECK(s.contains("cyclic"));
  }
  CHECK(j[0]["order"] == 1);
  CHECK(j[5]["order"] == 8);
}

TEST_CASE("cli partition search") {
  auto r = cli({"partition", "search", "q8", "--equal", "--json"});
  REQUIRE(r.exit == 0);
  auto j = nlohmann::json::parse(r.out);
  REQUIRE(j.size() == 1);
  CHECK(j[0]["kernel"]["order"] == 2);
  CHECK(j[0]["components"].size() == 3);
  CHECK(j[0]["equal"] == true);

  auto none = cli({"partition", "search", "s3", "--equal"});
  CHECK(none.exit == 0);
  CHECK(none.out.find("0 certificate(s)") != std::string::npos);

  auto frat = cli({"partition", "search", "d8", "--kernel", "frattini"});
  CHECK(frat.exit == 0);
  CHECK(frat.out.find("3 components") != std::string::npos);

  auto byorder = cli({"partition", "search", "d12", "--kernel", "order:3"});
  CHECK(byorder.exit == 0);
  CHECK(byorder.out.find("certificate") != std::string::npos);

  auto badk = cli({"partition", "search", "q8", "--kernel", "wat"});
  CHECK(badk.exit == 1);

  // deterministic output
  auto again = cli({"partition", "search", "q8", "--equal", "--json"});
  CHECK(again.out == r.out);
}

TEST_CASE("cli construct") {
  auto es = cli({"construct", "es", "d8", "--json"});
  REQUIRE(es.exit == 0);
  auto j = nlohmann::json::parse(es.out);
  CHECK(j["kernel"]["order"] == 2);
  CHECK(j["components"].size() == 3);

  auto cyc = cli({"construct", "es", "z6"});
  CHECK(cyc.exit == 1);
  CHECK(cyc.err.find("cyclic") != std::string::npos);

  auto ex = cli({"construct", "example108", "--json"});
  REQUIRE(ex.exit == 0);
  auto je = nlohmann::json::parse(ex.out);
  CHECK(je["order"] == 108);
  CHECK(je["nilpotent"] == false);
  CHECK(je["kernel"]["order"] == 27);
}

TEST_CASE("cli verify") {
  auto co1 = cli({"verify", "co1"});
  CHECK(co1.exit == 0);
  CHECK(co1.out.find("failing report(s)") != std::string::npos);

  auto bogus = cli({"verify", "bogus"});
  CHECK(bogus.exit == 2);

  auto json_out = cli({"verify", "co1", "--json", "verify_tmp_test.json"});
  CHECK(json_out.exit == 0);
  std::ifstream jf("verify_tmp_test.json");
  REQUIRE(jf.good());
  nlohmann::json j;
  jf >> j;
  CHECK(j.is_array());
  CHECK(j.size() > 0);
  CHECK(j[0].contains("theorem"));
  std::remove("verify_tmp_test.json");
}

TEST_CASE("cli usage errors") {
  CHECK(cli({"frobnicate"}).exit == 2);
  CHECK(cli({"catalog", "list", "--frob"}).exit == 2);
  CHECK(cli({}).exit == 2);
  CHECK(cli({"--help"}).exit == 0);
}

TEST_CASE("PARTITA_CORPUS environment override") {
  std::string path = "corpus_tmp_test.json";
  {
    CorpusManifest m;
    CorpusEntry e;
    e.name = "lonely";
    e.kind = "cyclic";
    e.params = {{"n", 5}};
    m.entries = {e};
    std::ofstream f(path);
    f << m.to_json().dump();
  }
  setenv("PARTITA_CORPUS", path.c_str(), 1);
  auto r = cli({"catalog", "list"});
  unsetenv("PARTITA_CORPUS");
  CHECK(r.exit == 0);
  CHECK(r.out.find("lonely") != std::string::npos);
  CHECK(r.out.find("q8") == std::string::npos);

  // --corpus wins over the environment
  auto builtin = cli({"--corpus", "builtin", "catalog", "list"});
  CHECK(builtin.out.find("q8") != std::string::npos);
  std::remove(path.c_str());
}

TEST_CASE("cli kernel selector edge cases") {
  CHECK(cli({"partition", "search", "q8", "--kernel", "order:zzz"}).exit == 1);
  CHECK(cli({"partition", "search", "q8", "--kernel", "order:7"}).exit == 1);
  CHECK(cli({"partition", "search", "q8", "--kernel", "99"}).exit == 1);
  // the whole group is not a kernel
  auto r = cli({"partition", "search", "v4", "--kernel", "center"});
  CHECK(r.exit == 1);
  CHECK(r.err.find("whole group") != std::string::npos);
}
