#pragma once

#include <vector>

#include "braidsurg/braid.hpp"

namespace braidsurg {

// Positive braid word in which each pair of strands crosses at most once,
// together with its permutation. Permutation braids are in bijection with
// permutations; the word is the fixed canonical representative produced by
// simple_word.
struct SimpleFactor {
  BraidWord word;
  Permutation perm;

  friend bool operator==(const SimpleFactor&, const SimpleFactor&) = default;
};

// Garside left normal form: (half twist)^infimum * factors, factors
// left-weighted simple elements, none the identity and none the half twist.
// Canonical: two words represent the same braid iff their normal forms are
// identical component-wise. The full twist of the braid group is the square
// of the half twist, so a full-twist power shifts infimum by 2.
struct NormalForm {
  int strands = 1;
  long long infimum = 0;
  std::vector<SimpleFactor> factors;

  friend bool operator==(const NormalForm&, const NormalForm&) = default;
};

// The half twist (sigma_1)(sigma_2 sigma_1)...(sigma_{k-1}...sigma_1) of
// length k(k-1)/2; its underlying permutation is the order reversal and its
// square is the full twist.
BraidWord half_twist_word(int k);

// Canonical positive word realizing perm with length = inversion count.
// Scheme (fixed): bubble-sort the one-line form of perm^{-1}, recording the
// positions of the adjacent swaps, and emit them in reverse order.
SimpleFactor simple_word(const Permutation& perm);

// Positive word p with p * sigma_i = half twist as braids, of length
// k(k-1)/2 - 1. Concatenating the half twist in front gives a positive word
// for "full twist times sigma_i^{-1}".
BraidWord delta_over_sigma(int k, int i);

// Positive word representing (full twist)^n * w, built by the rewriting of
// the Garside lemma: positive letters pass through, each negative letter -i
// consumes one full twist and expands to half_twist * delta_over_sigma(k,i),
// and unconsumed full twists are prepended. Requires
// n >= negative_letter_count(w); output length is exactly
// exponent_sum(w) + n*k(k-1).
BraidWord positify(const BraidWord& w, long long n);

// Positive word representing (full twist)^n * w for any
// n >= minimal_twist_power(w): the rewriting of positify when n covers every
// negative letter, otherwise the word read off the left normal form of the
// twisted braid (positify alone needs one twist per negative letter).
BraidWord twisted_positive_word(const BraidWord& w, long long n);

NormalForm left_normal_form(const BraidWord& w);

// Word-problem oracle: equality of left normal forms.
bool braids_equal(const BraidWord& a, const BraidWord& b);

// Least n >= 0 such that (full twist)^n * w is a positive element, namely
// max(0, ceil(-infimum/2)).
long long minimal_twist_power(const BraidWord& w);

// Indices i such that sigma_i is a left (resp. right) divisor of the
// permutation braid of p: descents of p (resp. of p^{-1}).
std::vector<int> starting_set(const Permutation& p);
std::vector<int> finishing_set(const Permutation& p);

// A word representative of the normal form: |infimum| half twists (inverted
// when infimum < 0) followed by the factor words. Positive iff infimum >= 0.
BraidWord normal_form_word(const NormalForm& nf);

}  // namespace braidsurg
