// Integration against external tools, when installed: NuSMV verdicts on
// exported models must match the solver. Exits 77 (ctest skip) when no tool
// is available.

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include "covplan/exporters.hpp"
#include "covplan/generate.hpp"
#include "covplan/search.hpp"

namespace fs = std::filesystem;
using namespace covplan;

namespace {

bool have_tool(const std::string& name) {
  std::string cmd = "command -v " + name + " > /dev/null 2>&1";
  return std::system(cmd.c_str()) == 0;
}

std::string capture(const std::string& cmd) {
  std::array<char, 4096> buf{};
  std::string out;
  FILE* pipe = popen((cmd + " 2>&1").c_str(), "r");
  if (!pipe) return out;
  while (std::size_t got = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), got);
  pclose(pipe);
  return out;
}

}  // namespace

int main() {
  std::string nusmv;
  for (const char* candidate : {"NuSMV", "nusmv", "nuXmv"})
    if (have_tool(candidate)) {
      nusmv = candidate;
      break;
    }
  if (nusmv.empty()) {
    std::puts("no model checker found; skipping external-tool integration");
    return 77;
  }

  fs::path dir("external_tmp");
  fs::remove_all(dir);
  fs::create_directories(dir);

  int checked = 0, failures = 0;
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    std::size_t nv = 2 + seed % 4;
    std::size_t n = 1 + seed % 2;
    auto g = random_graph(nv, 0.45, 0.5, seed % 2 == 0, seed % 3 == 0, 9900 + seed);
    auto ours = solve_coverage(g, n);
    if (ours.verdict == Verdict::timeout) continue;

    auto model = to_smv(g, n, ExportGoal::cover());
    auto path = (dir / ("m" + std::to_string(seed) + ".smv")).string();
    std::ofstream(path) << model;
    auto output = capture(nusmv + " " + path);
    bool counterexample = output.find("is false") != std::string::npos;
    bool holds = output.find("is true") != std::string::npos;
    if (!counterexample && !holds) {
      std::printf("unparseable NuSMV output for seed %llu\n",
                  static_cast<unsigned long long>(seed));
      ++failures;
      continue;
    }
    bool smv_solvable = counterexample;  // counterexample to !F(goal) is a plan
    bool ours_solvable = ours.verdict == Verdict::solvable;
    if (smv_solvable != ours_solvable) {
      std::printf("verdict mismatch on seed %llu\n", static_cast<unsigned long long>(seed));
      ++failures;
    }
    ++checked;
  }
  std::printf("%d instances cross-checked against %s, %d failures\n", checked, nusmv.c_str(),
              failures);
  return failures == 0 ? 0 : 1;
}
