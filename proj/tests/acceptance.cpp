// One line per acceptance criterion; exit status 1 if any fails.
#include <cstdio>
#include <string>

#include "ppreal/verify.hpp"

int main(int argc, char** argv) {
  ppreal::SuiteOptions options;
  options.seed = 20240611;
  if (argc > 1) options.seed = std::stoull(argv[1]);

  int failed = 0;
  int index = 0;
  for (const auto& suite : ppreal::suites()) {
    ++index;
    const ppreal::SuiteReport r = ppreal::run_suite(suite.name, options);
    std::printf("[%s] %2d %-22s %8zu cases  %s\n", r.passed() ? "PASS" : "FAIL", index,
                r.name.c_str(), r.cases, suite.description.c_str());
    for (const auto& f : r.failures) std::printf("       %s\n", f.c_str());
    if (!r.passed()) ++failed;
  }
  std::printf("%d of %d criteria passed\n", index - failed, index);
  return failed == 0 ? 0 : 1;
}
