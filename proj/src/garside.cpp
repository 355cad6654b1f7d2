#include "braidsurg/garside.hpp"

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>

namespace braidsurg {

namespace {

// tau(p) = (half twist)^{-1} p (half twist), the index-reversing conjugation:
// tau(sigma_i) = sigma_{k-i}. On permutations: conjugate by the reversal.
std::vector<int> tau(const std::vector<int>& images) {
  const int k = static_cast<int>(images.size());
  std::vector<int> out(images.size());
  for (int s = 1; s <= k; ++s)
    out[static_cast<std::size_t>(s) - 1] = k + 1 - images[static_cast<std::size_t>(k - s)];
  return out;
}

bool is_identity_images(const std::vector<int>& images) {
  for (int i = 0; i < static_cast<int>(images.size()); ++i)
    if (images[static_cast<std::size_t>(i)] != i + 1) return false;
  return true;
}

bool is_reversal_images(const std::vector<int>& images) {
  const int k = static_cast<int>(images.size());
  for (int i = 0; i < k; ++i)
    if (images[static_cast<std::size_t>(i)] != k - i) return false;
  return true;
}

long long inversions_of(const std::vector<int>& images) {
  long long count = 0;
  const int k = static_cast<int>(images.size());
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      if (images[static_cast<std::size_t>(i)] > images[static_cast<std::size_t>(j)]) ++count;
  return count;
}

// sigma_i right-divides the permutation braid of p iff the values i, i+1
// appear in inverted positions; mask[i] set accordingly (1-based index i).
std::vector<char> finishing_mask(const std::vector<int>& images) {
  const int k = static_cast<int>(images.size());
  std::vector<int> pos(static_cast<std::size_t>(k) + 1);
  for (int s = 1; s <= k; ++s) pos[static_cast<std::size_t>(images[static_cast<std::size_t>(s) - 1])] = s;
  std::vector<char> mask(static_cast<std::size_t>(k) + 1, 0);
  for (int i = 1; i <= k - 1; ++i)
    mask[static_cast<std::size_t>(i)] = pos[static_cast<std::size_t>(i)] > pos[static_cast<std::size_t>(i) + 1];
  return mask;
}

// a := a * sigma_i (swap the values i, i+1).
void right_multiply(std::vector<int>& a, int i) {
  for (int& v : a) {
    if (v == i)
      v = i + 1;
    else if (v == i + 1)
      v = i;
  }
}

// b := sigma_i^{-1}-side removal, i.e. b := t_i * b (swap the inputs i, i+1).
void left_multiply(std::vector<int>& b, int i) {
  std::swap(b[static_cast<std::size_t>(i) - 1], b[static_cast<std::size_t>(i)]);
}

// Left-weight the adjacent pair (a, b): while some sigma_i left-divides b
// but does not right-divide a, move it from the head of b to the tail of a.
// Returns true if anything moved.
bool slide_pair(std::vector<int>& a, std::vector<int>& b) {
  const int k = static_cast<int>(a.size());
  bool changed = false;
  for (;;) {
    auto fin = finishing_mask(a);
    int move = 0;
    for (int i = 1; i <= k - 1; ++i) {
      if (b[static_cast<std::size_t>(i) - 1] > b[static_cast<std::size_t>(i)] && !fin[static_cast<std::size_t>(i)]) {
        move = i;
        break;
      }
    }
    if (move == 0) return changed;
    right_multiply(a, move);
    left_multiply(b, move);
    changed = true;
  }
}

}  // namespace

BraidWord half_twist_word(int k) {
  if (k < 1) fail(errc::bad_input, "strand count must be >= 1");
  std::vector<int> letters;
  letters.reserve(static_cast<std::size_t>(k) * static_cast<std::size_t>(k - 1) / 2);
  for (int r = 1; r <= k - 1; ++r)
    for (int i = r; i >= 1; --i) letters.push_back(i);
  return BraidWord(k, std::move(letters));
}

SimpleFactor simple_word(const Permutation& perm) {
  std::vector<int> seq = perm.inverse().images();
  const int k = perm.size();
  std::vector<int> swaps;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 0; i + 1 < k; ++i) {
      if (seq[static_cast<std::size_t>(i)] > seq[static_cast<std::size_t>(i) + 1]) {
        std::swap(seq[static_cast<std::size_t>(i)], seq[static_cast<std::size_t>(i) + 1]);
        swaps.push_back(i + 1);
        changed = true;
      }
    }
  }
  std::reverse(swaps.begin(), swaps.end());
  return SimpleFactor{BraidWord(k, std::move(swaps)), perm};
}

BraidWord delta_over_sigma(int k, int i) {
  if (i < 1 || i > k - 1)
    fail(errc::index_out_of_range,
         "generator index " + std::to_string(i) + " not in [1," + std::to_string(k - 1) + "]");
  return simple_word(compose(Permutation::reversal(k), Permutation::transposition(k, i))).word;
}

BraidWord positify(const BraidWord& w, long long n) {
  const int k = w.strands();
  const long long neg = negative_letter_count(w);
  if (n < neg)
    fail(errc::insufficient_twists, std::to_string(n) + " full twists < " + std::to_string(neg) +
                                        " negative letters");
  const BraidWord half_twist = half_twist_word(k);
  const std::vector<int>& half = half_twist.letters();
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(std::max<long long>(
      0, exponent_sum(w) + n * static_cast<long long>(k) * (k - 1))));
  for (long long t = 0; t < n - neg; ++t) {
    out.insert(out.end(), half.begin(), half.end());
    out.insert(out.end(), half.begin(), half.end());
  }
  for (int e : w.letters()) {
    if (e > 0) {
      out.push_back(e);
    } else {
      out.insert(out.end(), half.begin(), half.end());
      const BraidWord rest = delta_over_sigma(k, -e);
      out.insert(out.end(), rest.letters().begin(), rest.letters().end());
    }
  }
  return BraidWord(k, std::move(out));
}

BraidWord twisted_positive_word(const BraidWord& w, long long n) {
  if (n >= negative_letter_count(w)) return positify(w, n);
  const int k = w.strands();
  const BraidWord full = full_twist_word(k);
  std::vector<int> letters;
  letters.reserve(static_cast<std::size_t>(n) * full.length() + w.length());
  for (long long t = 0; t < n; ++t)
    letters.insert(letters.end(), full.letters().begin(), full.letters().end());
  letters.insert(letters.end(), w.letters().begin(), w.letters().end());
  const NormalForm nf = left_normal_form(BraidWord(k, std::move(letters)));
  if (nf.infimum < 0)
    fail(errc::insufficient_twists,
         std::to_string(n) + " full twists leave a negative infimum of " +
             std::to_string(nf.infimum));
  return normal_form_word(nf);
}

NormalForm left_normal_form(const BraidWord& w) {
  const int k = w.strands();
  const std::vector<int> rev = Permutation::reversal(k).images();

  // Each letter contributes a (half-twist power, simple factor) pair:
  // sigma_i is (0, t_i); sigma_i^{-1} = delta^{-1} (delta sigma_i^{-1}) is
  // (-1, reversal composed with t_i).
  const std::size_t len = w.length();
  std::vector<long long> exps(len);
  std::vector<std::vector<int>> perms(len);
  for (std::size_t j = 0; j < len; ++j) {
    const int e = w.letters()[j];
    const int i = e < 0 ? -e : e;
    if (e > 0) {
      exps[j] = 0;
      perms[j] = Permutation::transposition(k, i).images();
    } else {
      exps[j] = -1;
      perms[j] = compose(Permutation::reversal(k), Permutation::transposition(k, i)).images();
    }
  }

  // Slide every half-twist power to the front; a factor is conjugated by tau
  // once per power crossing it from the right.
  long long infimum = 0;
  {
    long long suffix = 0;
    for (std::size_t j = len; j-- > 0;) {
      if (suffix % 2 != 0) perms[j] = tau(perms[j]);
      suffix += exps[j];
    }
    infimum = suffix;
  }

  // Greedy pre-merge: fuse adjacent factors whenever the product is still a
  // permutation braid (inversion counts add). Pure optimization before the
  // left-weighting fixpoint.
  std::vector<std::vector<int>> factors;
  std::vector<long long> invs;
  factors.reserve(len);
  for (std::size_t j = 0; j < len; ++j) {
    if (is_identity_images(perms[j])) continue;
    const long long inv_j = inversions_of(perms[j]);
    if (!factors.empty()) {
      const std::vector<int>& prev = factors.back();
      std::vector<int> merged(prev.size());
      for (std::size_t s = 0; s < prev.size(); ++s)
        merged[s] = perms[j][static_cast<std::size_t>(prev[s]) - 1];
      if (inversions_of(merged) == invs.back() + inv_j) {
        factors.back() = std::move(merged);
        invs.back() += inv_j;
        continue;
      }
    }
    factors.push_back(std::move(perms[j]));
    invs.push_back(inv_j);
  }

  // Local left-weighting passes to a fixed point; factors that empty out are
  // dropped. At the fixed point every half twist has migrated to a leading
  // run, which is then absorbed into the infimum.
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t t = 0; t + 1 < factors.size(); ++t) {
      if (slide_pair(factors[t], factors[t + 1])) changed = true;
      if (is_identity_images(factors[t + 1])) {
        factors.erase(factors.begin() + static_cast<std::ptrdiff_t>(t) + 1);
        --t;
      }
    }
  }
  std::size_t lead = 0;
  while (lead < factors.size() && is_reversal_images(factors[lead])) ++lead;
  infimum += static_cast<long long>(lead);

  NormalForm nf;
  nf.strands = k;
  nf.infimum = infimum;
  nf.factors.reserve(factors.size() - lead);
  for (std::size_t t = lead; t < factors.size(); ++t)
    nf.factors.push_back(simple_word(Permutation(std::move(factors[t]))));
  return nf;
}

bool braids_equal(const BraidWord& a, const BraidWord& b) {
  if (a.strands() != b.strands())
    fail(errc::strand_mismatch, "comparing words on " + std::to_string(a.strands()) + " and " +
                                    std::to_string(b.strands()) + " strands");
  return left_normal_form(a) == left_normal_form(b);
}

long long minimal_twist_power(const BraidWord& w) {
  const long long inf = left_normal_form(w).infimum;
  if (inf >= 0) return 0;
  return (-inf + 1) / 2;
}

std::vector<int> starting_set(const Permutation& p) {
  std::vector<int> out;
  for (int i = 1; i <= p.size() - 1; ++i)
    if (p.apply(i) > p.apply(i + 1)) out.push_back(i);
  return out;
}

std::vector<int> finishing_set(const Permutation& p) {
  const Permutation inv = p.inverse();
  std::vector<int> out;
  for (int i = 1; i <= p.size() - 1; ++i)
    if (inv.apply(i) > inv.apply(i + 1)) out.push_back(i);
  return out;
}

BraidWord normal_form_word(const NormalForm& nf) {
  const BraidWord half = half_twist_word(nf.strands);
  BraidWord out(nf.strands, {});
  if (nf.infimum >= 0) {
    for (long long t = 0; t < nf.infimum; ++t) out = concat(out, half);
  } else {
    const BraidWord half_inv = inverse(half);
    for (long long t = 0; t < -nf.infimum; ++t) out = concat(out, half_inv);
  }
  for (const SimpleFactor& f : nf.factors) out = concat(out, f.word);
  return out;
}

}  // namespace braidsurg
