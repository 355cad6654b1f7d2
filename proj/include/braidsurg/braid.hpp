#pragma once

#include <cstddef>
#include <vector>

#include "braidsurg/errors.hpp"

namespace braidsurg {

// Permutation of {1,...,k} in one-line notation: images()[i-1] is the image
// of i. Used for strand endpoints of braids and for permutation braids.
class Permutation {
public:
  Permutation() = default;  // permutation of the empty set
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int k);
  static Permutation reversal(int k);       // i -> k+1-i
  static Permutation transposition(int k, int i);  // swaps i and i+1

  int size() const { return static_cast<int>(images_.size()); }
  int apply(int i) const { return images_[static_cast<std::size_t>(i) - 1]; }
  const std::vector<int>& images() const { return images_; }

  Permutation inverse() const;
  bool is_identity() const;
  long long inversions() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

private:
  std::vector<int> images_;
};

// Apply a first, then b.
Permutation compose(const Permutation& a, const Permutation& b);

// A word in the Artin generators of B_k. Letter +i encodes sigma_i, letter
// -i encodes sigma_i^{-1}, with 1 <= i <= strands-1. Words are read left to
// right; stacking two braids concatenates their words in that order.
class BraidWord {
public:
  BraidWord() = default;  // identity braid of B_1
  BraidWord(int strands, std::vector<int> letters);

  int strands() const { return strands_; }
  const std::vector<int>& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }

  friend bool operator==(const BraidWord&, const BraidWord&) = default;

private:
  int strands_ = 1;
  std::vector<int> letters_;
};

// Group multiplication by stacking; strand counts must agree.
BraidWord concat(const BraidWord& a, const BraidWord& b);

// Letters reversed with signs flipped.
BraidWord inverse(const BraidWord& w);

// Deletes adjacent cancelling pairs (+i,-i) / (-i,+i) until none remain.
// Never applied implicitly by other operations.
BraidWord free_reduce(const BraidWord& w);

long long exponent_sum(const BraidWord& w);

// Count of negative letters of the word as given, before any reduction.
long long negative_letter_count(const BraidWord& w);

// Composition of the transpositions (i,i+1) in word order; sign-independent.
Permutation underlying_permutation(const BraidWord& w);

// The full twist (sigma_1 ... sigma_{k-1})^k, a positive word of length
// k(k-1). Central in B_k.
BraidWord full_twist_word(int k);

// Syntactic check on the word: every letter positive.
bool is_positive_word(const BraidWord& w);

}  // namespace braidsurg
