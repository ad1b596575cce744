// Compares the serial reference scan against the OpenMP path on the built-in
// corpus: lattice construction, the per-kernel ES scan, and the full
// verification suite.

#include <chrono>
#include <iostream>

#include "partita/partition.hpp"
#include "partita/suite.hpp"

using namespace partita;

namespace {

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - t0)
      .count();
}

double time_lattices(ExecMode mode) {
  Corpus corpus(CorpusManifest::builtin());
  auto t0 = std::chrono::steady_clock::now();
  corpus.build_all_lattices(mode);
  return ms_since(t0);
}

double time_es_scan(Corpus& corpus, ExecMode mode, std::size_t* kernels) {
  auto t0 = std::chrono::steady_clock::now();
  std::size_t total = 0;
  for (std::size_t i = 0; i < corpus.size(); ++i)
    total += es_kernels(corpus.group(i), corpus.lattice(i), mode).size();
  if (kernels) *kernels = total;
  return ms_since(t0);
}

double time_suite(Corpus& corpus, ExecMode mode, bool* ok) {
  auto t0 = std::chrono::steady_clock::now();
  auto reports = run_suite(corpus, {"all"}, mode);
  if (ok) *ok = !suite_has_fail(reports);
  return ms_since(t0);
}

void row(const char* name, double serial, double parallel) {
  std::printf("%-28s %10.1f ms %10.1f ms %8.2fx\n", name, serial, parallel,
              parallel > 0 ? serial / parallel : 0.0);
}

}  // namespace

int main() {
  std::printf("threads: %d\n", hardware_threads());
  std::printf("%-28s %13s %13s %9s\n", "benchmark", "serial", "openmp",
              "speedup");

  double lat_s = time_lattices(ExecMode::Serial);
  double lat_p = time_lattices(ExecMode::Parallel);
  row("corpus lattices", lat_s, lat_p);

  Corpus corpus(CorpusManifest::builtin());
  corpus.build_all_lattices(ExecMode::Parallel);

  std::size_t k_s = 0, k_p = 0;
  double es_s = time_es_scan(corpus, ExecMode::Serial, &k_s);
  double es_p = time_es_scan(corpus, ExecMode::Parallel, &k_p);
  row("ES kernel scan", es_s, es_p);
  if (k_s != k_p) {
    std::printf("mode mismatch: %zu vs %zu kernels\n", k_s, k_p);
    return 1;
  }

  bool ok_s = false, ok_p = false;
  double su_s = time_suite(corpus, ExecMode::Serial, &ok_s);
  double su_p = time_suite(corpus, ExecMode::Parallel, &ok_p);
  row("verification suite", su_s, su_p);
  if (ok_s != ok_p) {
    std::printf("mode mismatch in suite outcome\n");
    return 1;
  }
  std::printf("suite outcome identical across modes: %s\n",
              ok_s ? "pass" : "has failures");
  return 0;
}
