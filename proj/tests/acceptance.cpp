// One PASS/FAIL line per acceptance criterion. Exit status 1 if any fails.

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "sparsehg/suite.hpp"

using namespace sparsehg;

namespace {

struct Criterion {
  int id;
  std::string title;
  std::string suite;
  std::vector<std::string> properties;
  double limit_seconds;  // 0: none
};

struct Timed {
  SuiteReport report;
  double seconds;
};

}  // namespace

int main(int argc, char** argv) {
  std::uint64_t seed = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 1;

  const std::vector<Criterion> criteria = {
      {1, "oracle agreement for sparsity", "oracle", {"sparsity-oracle", "distribution-oracle"}, 60},
      {2, "degree <= 2k implies k-sparse", "lemmas", {"degree-2k-sparse"}, 30},
      {3, "grids up to 4x5 are 3-sparse", "lemmas", {"grid-3-sparse"}, 60},
      {4, "bounded orientation", "oracle", {"bounded-orientation"}, 0},
      {5, "antisymmetric orientation", "oracle", {"antisymmetric-orientation"}, 0},
      {6, "DFST validity", "lemmas", {"dfst-validity"}, 30},
      {7, "priority-tree properties", "lemmas", {"priority-tree"}, 0},
      {8, "delta-flow construction", "pipeline", {"delta-flow"}, 0},
      {9, "cycle cancelling", "pipeline", {"cycle-cancelling"}, 0},
      {10, "path decomposition", "pipeline", {"path-decomposition"}, 0},
      {11, "coding sets by vertices", "pipeline", {"encoding"}, 60},
  };

  std::map<std::string, Timed> runs;
  for (const char* name : {"oracle", "lemmas", "pipeline"}) {
    auto start = std::chrono::steady_clock::now();
    auto report = run_suite(name, seed);
    std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
    runs[name] = {std::move(report), elapsed.count()};
  }

  bool all = true;
  for (const auto& c : criteria) {
    const Timed& run = runs.at(c.suite);
    bool ok = true;
    std::string detail;
    std::vector<const PropertyResult*> failed;
    for (const auto& name : c.properties) {
      const PropertyResult* p = run.report.find(name);
      if (!p) {
        ok = false;
        detail += " " + name + "=missing";
        continue;
      }
      detail += " " + name + "=" + std::to_string(p->passed) + "/" + std::to_string(p->total);
      if (!p->ok() || p->total == 0) {
        ok = false;
        failed.push_back(p);
      }
    }
    if (c.limit_seconds > 0 && run.seconds >= c.limit_seconds) {
      ok = false;
      detail += " time-limit-exceeded";
    }
    std::cout << (ok ? "PASS " : "FAIL ") << c.id << " " << c.title << ":" << detail << "\n";
    for (const PropertyResult* p : failed)
      for (std::string ce : p->counterexamples) {
        while (!ce.empty() && ce.back() == '\n') ce.pop_back();
        for (std::size_t at = ce.find('\n'); at != std::string::npos; at = ce.find('\n', at + 3))
          ce.replace(at, 1, "\n  ");
        std::cout << "  " << ce << "\n";
      }
    all = all && ok;
  }

  bool deterministic = true;
  for (auto& [name, run] : runs)
    if (format_report(run_suite(name, seed)) != format_report(run.report)) deterministic = false;
  std::cout << (deterministic ? "PASS " : "FAIL ") << 12
            << " determinism: oracle, lemmas and pipeline reports byte-identical on rerun\n";
  all = all && deterministic;

  std::cout << "seed " << seed << "; suite seconds: oracle " << runs["oracle"].seconds << ", lemmas "
            << runs["lemmas"].seconds << ", pipeline " << runs["pipeline"].seconds << "\n";
  return all ? 0 : 1;
}
