// Acceptance suite: runs criteria A1..A10 at their stated bounds and prints
// one pass/fail line per criterion. An optional argument restricts the run
// to one criterion ("A6"). Exit status is the number of failures.

#include <cstdio>
#include <cstring>

#include "a2web/verify.hpp"

int main(int argc, char** argv) {
  const char* only = argc > 1 ? argv[1] : nullptr;
  auto results = a2web::run_verification(a2web::VerifyBounds::acceptance());
  int failures = 0, ran = 0;
  for (const auto& r : results) {
    std::string id = r.name.substr(0, r.name.find(' '));
    if (only && id != only) continue;
    ++ran;
    std::printf("%s %s (%.1fs): %s\n", id.c_str(), r.pass ? "PASS" : "FAIL",
                r.seconds, r.detail.c_str());
    if (!r.pass) ++failures;
  }
  if (only && ran == 0) {
    std::printf("unknown criterion %s\n", only);
    return 1;
  }
  std::printf("%d/%d criteria passed\n", ran - failures, ran);
  return failures;
}
