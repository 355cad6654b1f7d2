#include "braidsurg/selftest.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>

namespace braidsurg {

namespace {

std::string describe_word(const BraidWord& w) {
  std::ostringstream out;
  out << "B_" << w.strands() << " [";
  for (std::size_t i = 0; i < w.letters().size(); ++i) {
    if (i) out << ' ';
    out << w.letters()[i];
  }
  out << ']';
  return out.str();
}

// Records the first failing check's message; later ones only bump the count.
struct Recorder {
  SuiteResult& r;

  void check(bool ok, const std::string& what) {
    ++r.checks;
    if (!ok && r.failures++ == 0) r.detail = what;
  }

  void error(const std::string& what) {
    ++r.checks;
    if (r.failures++ == 0) r.detail = what;
  }
};

// Counts crossings per unordered strand pair along the word.
bool pairs_cross_at_most_once(const BraidWord& w) {
  const int k = w.strands();
  std::vector<int> strand_at(static_cast<std::size_t>(k));
  std::iota(strand_at.begin(), strand_at.end(), 1);
  std::vector<int> count(static_cast<std::size_t>(k) * static_cast<std::size_t>(k), 0);
  for (int letter : w.letters()) {
    const int i = std::abs(letter);
    const int s = strand_at[static_cast<std::size_t>(i - 1)];
    const int t = strand_at[static_cast<std::size_t>(i)];
    const int lo = std::min(s, t);
    const int hi = std::max(s, t);
    if (++count[static_cast<std::size_t>(lo - 1) * static_cast<std::size_t>(k) +
                static_cast<std::size_t>(hi - 1)] > 1)
      return false;
    std::swap(strand_at[static_cast<std::size_t>(i - 1)], strand_at[static_cast<std::size_t>(i)]);
  }
  return true;
}

RationalCoeff random_coeff(Rng& rng, long long max_pq) {
  Int p = rng.uniform(-max_pq, max_pq);
  Int q = rng.uniform(0, max_pq);
  if (p == 0 && q == 0) p = 1;
  return normalize_coeff(p, q);
}

}  // namespace

BraidWord random_word(Rng& rng, int max_strands, int max_length) {
  const int k = static_cast<int>(rng.uniform(2, max_strands));
  const int len = static_cast<int>(rng.uniform(0, max_length));
  std::vector<int> letters;
  letters.reserve(static_cast<std::size_t>(len));
  for (int i = 0; i < len; ++i) {
    const int gen = static_cast<int>(rng.uniform(1, k - 1));
    letters.push_back(rng.coin() ? gen : -gen);
  }
  return BraidWord(k, std::move(letters));
}

SurgeryPresentation random_presentation(Rng& rng, int max_components, long long max_linking,
                                        long long max_pq) {
  const int m = static_cast<int>(rng.uniform(1, max_components));
  SurgeryPresentation pres;
  pres.linking.assign(static_cast<std::size_t>(m), std::vector<Int>(static_cast<std::size_t>(m), 0));
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      const Int lk = rng.uniform(-max_linking, max_linking);
      pres.linking[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = lk;
      pres.linking[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = lk;
    }
  for (int i = 0; i < m; ++i) {
    pres.coeffs.push_back(random_coeff(rng, max_pq));
    pres.unknotted.push_back(rng.coin());
  }
  return pres;
}

BraidSurgeryDiagram random_diagram(Rng& rng, int max_strands, int max_length, long long max_pq) {
  BraidSurgeryDiagram d;
  d.word = random_word(rng, max_strands, max_length);
  const Components comp = components(d.word);
  for (int j = 0; j < comp.component_count; ++j) d.coeffs.push_back(random_coeff(rng, max_pq));
  return d;
}

SuiteResult suite_garside_lemma(std::uint64_t seed, int trials, int max_strands, int max_length) {
  SuiteResult r;
  r.name = "garside-lemma";
  Recorder rec{r};
  Rng rng(seed);
  for (int t = 0; t < trials; ++t) {
    const BraidWord w = random_word(rng, max_strands, max_length);
    const std::string tag = "trial " + std::to_string(t) + " " + describe_word(w);
    try {
      const int k = w.strands();
      const long long n = negative_letter_count(w);
      const BraidWord pos = positify(w, n);
      rec.check(is_positive_word(pos), tag + ": positified word has a negative letter");
      rec.check(static_cast<long long>(pos.length()) ==
                    exponent_sum(w) + n * static_cast<long long>(k) * (k - 1),
                tag + ": positified length off the exact count");
      BraidWord lhs = w;
      for (long long i = 0; i < n; ++i) lhs = concat(full_twist_word(k), lhs);
      rec.check(braids_equal(pos, lhs), tag + ": positified word is a different braid");
      rec.check(minimal_twist_power(w) <= n, tag + ": minimal power above the letter count");
    } catch (const std::exception& e) {
      rec.error(tag + ": " + e.what());
    }
  }
  return r;
}

SuiteResult suite_delta_over_sigma(int max_strands) {
  SuiteResult r;
  r.name = "delta-over-sigma";
  Recorder rec{r};
  for (int k = 2; k <= max_strands; ++k) {
    for (int i = 1; i < k; ++i) {
      const std::string tag = "k=" + std::to_string(k) + " i=" + std::to_string(i);
      try {
        const BraidWord expansion = concat(half_twist_word(k), delta_over_sigma(k, i));
        rec.check(is_positive_word(expansion), tag + ": expansion not positive");
        rec.check(static_cast<long long>(expansion.length()) ==
                      static_cast<long long>(k) * (k - 1) - 1,
                  tag + ": expansion length wrong");
        rec.check(braids_equal(concat(expansion, BraidWord(k, {i})), full_twist_word(k)),
                  tag + ": expansion times sigma_i is not the full twist");
      } catch (const std::exception& e) {
        rec.error(tag + ": " + e.what());
      }
    }
  }
  return r;
}

SuiteResult suite_centrality(std::uint64_t seed, int trials, int max_strands, int max_length) {
  SuiteResult r;
  r.name = "full-twist-centrality";
  Recorder rec{r};
  Rng rng(seed);
  for (int t = 0; t < trials; ++t) {
    const BraidWord w = random_word(rng, max_strands, max_length);
    const std::string tag = "trial " + std::to_string(t) + " " + describe_word(w);
    try {
      const BraidWord ft = full_twist_word(w.strands());
      rec.check(braids_equal(concat(ft, w), concat(w, ft)), tag + ": full twist not central");
    } catch (const std::exception& e) {
      rec.error(tag + ": " + e.what());
    }
  }
  return r;
}

SuiteResult suite_simple_elements() {
  SuiteResult r;
  r.name = "simple-elements";
  Recorder rec{r};
  for (int k = 1; k <= 4; ++k) {
    std::vector<int> images(static_cast<std::size_t>(k));
    std::iota(images.begin(), images.end(), 1);
    do {
      const Permutation perm(images);
      std::ostringstream tag;
      tag << "perm [";
      for (int v : images) tag << ' ' << v;
      tag << " ]";
      try {
        const SimpleFactor sf = simple_word(perm);
        rec.check(sf.perm == perm, tag.str() + ": stored permutation differs");
        rec.check(underlying_permutation(sf.word) == perm,
                  tag.str() + ": word realizes a different permutation");
        rec.check(is_positive_word(sf.word), tag.str() + ": word not positive");
        rec.check(static_cast<long long>(sf.word.length()) == perm.inversions(),
                  tag.str() + ": length differs from inversion count");
        rec.check(pairs_cross_at_most_once(sf.word), tag.str() + ": a pair crosses twice");
      } catch (const std::exception& e) {
        rec.error(tag.str() + ": " + e.what());
      }
    } while (std::next_permutation(images.begin(), images.end()));
  }
  return r;
}

SuiteResult suite_rolfsen(std::uint64_t seed, int trials) {
  SuiteResult r;
  r.name = "rolfsen-twist";
  Recorder rec{r};
  Rng rng(seed);
  for (int t = 0; t < trials; ++t) {
    const std::string tag = "trial " + std::to_string(t);
    try {
      SurgeryPresentation pres = random_presentation(rng, 5, 6, 9);
      const int u = static_cast<int>(rng.uniform(0, pres.size() - 1));
      pres.unknotted[static_cast<std::size_t>(u)] = true;
      const long long n = rng.uniform(-5, 5);
      const SurgeryPresentation twisted = rolfsen_twist(pres, u, n);
      validate(twisted);
      rec.check(h1_equal(pres, twisted), tag + ": twist changed the homology");
      rec.check(rolfsen_twist(twisted, u, -n) == pres, tag + ": reverse twist not exact");
    } catch (const std::exception& e) {
      rec.error(tag + ": " + e.what());
    }
  }
  return r;
}

SuiteResult suite_pipeline(std::uint64_t seed, int trials, int max_strands, int max_length,
                           TwistMode mode) {
  SuiteResult r;
  r.name = mode == TwistMode::lemma ? "pipeline-lemma" : "pipeline-minimal";
  Recorder rec{r};
  Rng rng(seed);
  for (int t = 0; t < trials; ++t) {
    const BraidSurgeryDiagram d = random_diagram(rng, max_strands, max_length, 9);
    const std::string tag = "trial " + std::to_string(t) + " " + describe_word(d.word);
    try {
      const auto [out, rep] = braid_positive_surgery(d, mode);
      validate(out);
      rec.check(rep.word_positive, tag + ": output word not positive");
      rec.check(rep.component_bound_ok, tag + ": component count bound violated");
      rec.check(rep.h1_match, tag + ": homology changed");
      rec.check(rep.linking_law_ok, tag + ": linking law violated");
      rec.check(rep.length_law_ok, tag + ": length law violated");
      if (rep.n_used > 0)
        rec.check(out.axis && *out.axis == normalize_coeff(1, rep.n_used),
                  tag + ": axis coefficient is not 1/n");
      else
        rec.check(!out.axis, tag + ": axis present though no twist was used");
      if (mode == TwistMode::minimal)
        rec.check(rep.n_used <= negative_letter_count(free_reduce(d.word)),
                  tag + ": minimal power above the letter count");
    } catch (const std::exception& e) {
      rec.error(tag + ": " + e.what());
    }
  }
  return r;
}

SuiteResult suite_fault_injection(std::uint64_t seed, int trials, double min_detection_rate) {
  SuiteResult r;
  r.name = "fault-injection";
  Rng rng(seed);
  long long detected = 0;
  for (int t = 0; t < trials; ++t) {
    const BraidSurgeryDiagram d = random_diagram(rng, 6, 24, 9);
    const auto [out, rep] = braid_positive_surgery(d, TwistMode::lemma);
    const SurgeryPresentation before = diagram_to_presentation(d);
    SurgeryPresentation mutated = diagram_to_presentation(out);
    const int m = mutated.size();

    // Perturb one output datum by 1: a linking entry (kept symmetric) or a
    // coefficient numerator. An infinity framing absorbs numerator shifts,
    // so those mutate the denominator instead.
    const long long delta = rng.coin() ? 1 : -1;
    if (m >= 2 && rng.coin()) {
      const int i = static_cast<int>(rng.uniform(0, m - 1));
      int j = static_cast<int>(rng.uniform(0, m - 2));
      if (j >= i) ++j;
      mutated.linking[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] += delta;
      mutated.linking[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] += delta;
    } else {
      RationalCoeff& c = mutated.coeffs[static_cast<std::size_t>(rng.uniform(0, m - 1))];
      c = c.is_infinity() ? normalize_coeff(c.p, 1) : normalize_coeff(c.p + delta, c.q);
    }

    const Components comp = components(d.word);
    if (!h1_equal(before, mutated) ||
        !linking_law_holds(before, mutated, rep.n_used, comp.strand_counts))
      ++detected;
  }
  r.checks = trials;
  const double rate = trials == 0 ? 1.0 : static_cast<double>(detected) / trials;
  std::ostringstream detail;
  detail << "detected " << detected << "/" << trials << " mutations";
  r.detail = detail.str();
  if (rate < min_detection_rate) r.failures = 1;
  return r;
}

std::vector<SuiteResult> run_selftest(const SelftestConfig& config) {
  std::vector<SuiteResult> results;
  results.push_back(
      suite_garside_lemma(config.seed, config.trials, config.max_strands, config.max_length));
  results.push_back(suite_delta_over_sigma(config.max_strands));
  results.push_back(
      suite_centrality(config.seed + 1, config.trials, config.max_strands, config.max_length));
  results.push_back(suite_simple_elements());
  results.push_back(suite_rolfsen(config.seed + 2, config.trials));
  results.push_back(suite_pipeline(config.seed + 3, config.trials, config.max_strands,
                                   config.max_length, config.mode));
  results.push_back(suite_fault_injection(config.seed + 4, config.trials, 0.95));
  return results;
}

}  // namespace braidsurg
