// Acceptance suite: runs every reproduction criterion at its stated tolerance
// and prints one pass/fail line per criterion. Exit code 0 iff all pass.

#include <chronoflip/reproduce.hpp>
#include <chronoflip/version.hpp>

#include <cstdio>
#include <cstdlib>
#include <cstring>

int main(int argc, char** argv) {
  std::uint64_t seed = 42;
  if (const char* env = std::getenv("CHRONOFLIP_SEED")) seed = std::strtoull(env, nullptr, 10);
  for (int i = 1; i < argc - 1; ++i)
    if (std::strcmp(argv[i], "--seed") == 0) seed = std::strtoull(argv[i + 1], nullptr, 10);

  std::printf("chronoflip acceptance suite (version %s, seed %llu)\n", chronoflip::kVersion,
              static_cast<unsigned long long>(seed));

  const auto results = chronoflip::run_all_criteria(seed);
  int failures = 0;
  for (const auto& r : results) {
    if (!r.passed) ++failures;
    std::printf("[%2d] %s  %-52s measured=%.3e threshold=%.3e  (%.0f ms)\n", r.index,
                r.passed ? "PASS" : "FAIL", r.name.c_str(), r.measured, r.threshold,
                r.wall_ms);
    if (!r.detail.empty()) std::printf("      %s\n", r.detail.c_str());
  }
  std::printf("%zu/%zu criteria passed\n", results.size() - failures, results.size());
  return failures == 0 ? 0 : 1;
}
