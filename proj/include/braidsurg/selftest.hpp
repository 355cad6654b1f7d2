#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "braidsurg/pipeline.hpp"

namespace braidsurg {

// Deterministic generator (splitmix64) so that a fixed seed reproduces the
// same trials bit-for-bit on every platform; the standard distributions are
// implementation-defined and would not.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform-ish on [lo, hi] by modulo; bias is irrelevant for fuzzing.
  long long uniform(long long lo, long long hi) {
    return lo + static_cast<long long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  bool coin() { return (next() & 1) != 0; }

private:
  std::uint64_t state_;
};

BraidWord random_word(Rng& rng, int max_strands, int max_length);
SurgeryPresentation random_presentation(Rng& rng, int max_components, long long max_linking,
                                        long long max_pq);
BraidSurgeryDiagram random_diagram(Rng& rng, int max_strands, int max_length, long long max_pq);

struct SelftestConfig {
  std::uint64_t seed = 1729;  // documented default; override with --seed
  int trials = 200;
  int max_strands = 6;
  int max_length = 24;
  TwistMode mode = TwistMode::lemma;
};

struct SuiteResult {
  std::string name;
  long long checks = 0;
  long long failures = 0;
  std::string detail;  // first failure message, or a rate summary

  bool passed() const { return failures == 0; }
};

// The five seeded property suites plus the two exhaustive ones. Output is a
// pure function of the config.
std::vector<SuiteResult> run_selftest(const SelftestConfig& config);

// Individual suites, reused by the acceptance harness with pinned sizes.
SuiteResult suite_garside_lemma(std::uint64_t seed, int trials, int max_strands, int max_length);
SuiteResult suite_delta_over_sigma(int max_strands);
SuiteResult suite_centrality(std::uint64_t seed, int trials, int max_strands, int max_length);
SuiteResult suite_simple_elements();
SuiteResult suite_rolfsen(std::uint64_t seed, int trials);
SuiteResult suite_pipeline(std::uint64_t seed, int trials, int max_strands, int max_length,
                           TwistMode mode);
SuiteResult suite_fault_injection(std::uint64_t seed, int trials, double min_detection_rate);

}  // namespace braidsurg
