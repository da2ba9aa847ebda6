#include "schubert/checks.hpp"

#include <cstdlib>
#include <cstring>
#include <iostream>
#include <string>

// Usage: acceptance [--n N] [--slow] [--only K]
int main(int argc, char** argv) {
  schubert::CheckOptions opt;
  int only = 0;
  for (int k = 1; k < argc; ++k) {
    if (!std::strcmp(argv[k], "--slow")) {
      opt.slow = true;
    } else if (!std::strcmp(argv[k], "--n") && k + 1 < argc) {
      opt.n = std::atoi(argv[++k]);
    } else if (!std::strcmp(argv[k], "--only") && k + 1 < argc) {
      only = std::atoi(argv[++k]);
    } else {
      std::cerr << "usage: acceptance [--n N] [--slow] [--only K]\n";
      return 2;
    }
  }
  bool ok = true;
  for (int id = 1; id <= schubert::criterion_count; ++id) {
    if (only && id != only) continue;
    auto r = schubert::run_criterion(id, opt);
    std::cout << (r.pass ? "PASS" : "FAIL") << " criterion " << r.id << " (" << r.title << "): " << r.detail << " ["
              << r.seconds << " s]" << std::endl;
    ok = ok && r.pass;
  }
  return ok ? 0 : 1;
}
