// Acceptance battery: one line per criterion with its wall time and budget.
// argv[1], when given, is the CLI binary used for the determinism criterion.
#include <array>
#include <cstdio>
#include <iomanip>
#include <iostream>
#include <string>

#include "soergel/selftest.hpp"

namespace {

std::string capture(const std::string& cmd, int& status) {
  std::string out;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) {
    status = -1;
    return out;
  }
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), n);
  status = pclose(p);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  const std::uint64_t seed = 42;
  bool all = true;
  for (int id = 1; id <= soergel::kCriterionCount; ++id) {
    soergel::CriterionResult r = soergel::run_criterion(id, seed);
    std::string detail = r.detail;
    bool pass = r.pass && r.seconds <= r.budget_seconds;
    if (id == 10 && argc > 1) {
      const std::string cmd = std::string(argv[1]) + " selftest --seed 42 2>/dev/null";
      int s1 = 0, s2 = 0;
      const std::string a = capture(cmd, s1), b = capture(cmd, s2);
      const bool same = s1 == 0 && s2 == 0 && !a.empty() && a == b;
      pass = pass && same;
      detail += same ? "; selftest --seed 42 twice: byte-identical (" + std::to_string(a.size()) + " bytes)"
                     : "; selftest --seed 42 twice: outputs differ or failed";
    }
    all = all && pass;
    std::cout << (pass ? "PASS" : "FAIL") << " criterion " << id << " " << r.name << " [" << std::fixed
              << std::setprecision(2) << r.seconds << " s / " << std::setprecision(0) << r.budget_seconds
              << " s]: " << detail << "\n";
  }
  std::cout << (all ? "ACCEPTANCE PASSED" : "ACCEPTANCE FAILED") << "\n";
  return all ? 0 : 1;
}
