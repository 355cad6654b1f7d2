#include "braidsurg/braid.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace braidsurg {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  const int k = static_cast<int>(images_.size());
  std::vector<bool> seen(static_cast<std::size_t>(k), false);
  for (int v : images_) {
    if (v < 1 || v > k || seen[static_cast<std::size_t>(v) - 1])
      fail(errc::bad_input, "images are not a bijection of 1.." + std::to_string(k));
    seen[static_cast<std::size_t>(v) - 1] = true;
  }
}

Permutation Permutation::identity(int k) {
  std::vector<int> im(static_cast<std::size_t>(k));
  std::iota(im.begin(), im.end(), 1);
  return Permutation(std::move(im));
}

Permutation Permutation::reversal(int k) {
  std::vector<int> im(static_cast<std::size_t>(k));
  for (int i = 1; i <= k; ++i) im[static_cast<std::size_t>(i) - 1] = k + 1 - i;
  return Permutation(std::move(im));
}

Permutation Permutation::transposition(int k, int i) {
  if (i < 1 || i > k - 1)
    fail(errc::index_out_of_range,
         "transposition index " + std::to_string(i) + " not in [1," + std::to_string(k - 1) + "]");
  Permutation p = identity(k);
  std::swap(p.images_[static_cast<std::size_t>(i) - 1], p.images_[static_cast<std::size_t>(i)]);
  return p;
}

Permutation Permutation::inverse() const {
  std::vector<int> im(images_.size());
  for (int i = 1; i <= size(); ++i) im[static_cast<std::size_t>(apply(i)) - 1] = i;
  return Permutation(std::move(im));
}

bool Permutation::is_identity() const {
  for (int i = 1; i <= size(); ++i)
    if (apply(i) != i) return false;
  return true;
}

long long Permutation::inversions() const {
  long long count = 0;
  for (int i = 1; i <= size(); ++i)
    for (int j = i + 1; j <= size(); ++j)
      if (apply(i) > apply(j)) ++count;
  return count;
}

Permutation compose(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) fail(errc::bad_input, "composing permutations of different sizes");
  std::vector<int> im(static_cast<std::size_t>(a.size()));
  for (int i = 1; i <= a.size(); ++i) im[static_cast<std::size_t>(i) - 1] = b.apply(a.apply(i));
  return Permutation(std::move(im));
}

BraidWord::BraidWord(int strands, std::vector<int> letters)
    : strands_(strands), letters_(std::move(letters)) {
  if (strands_ < 1) fail(errc::bad_input, "strand count must be >= 1");
  for (int e : letters_) {
    const int idx = e < 0 ? -e : e;
    if (e == 0 || idx > strands_ - 1)
      fail(errc::letter_out_of_range,
           "letter " + std::to_string(e) + " invalid in B_" + std::to_string(strands_));
  }
}

BraidWord concat(const BraidWord& a, const BraidWord& b) {
  if (a.strands() != b.strands())
    fail(errc::strand_mismatch, "concat of B_" + std::to_string(a.strands()) + " and B_" +
                                    std::to_string(b.strands()) + " words");
  std::vector<int> letters = a.letters();
  letters.insert(letters.end(), b.letters().begin(), b.letters().end());
  return BraidWord(a.strands(), std::move(letters));
}

BraidWord inverse(const BraidWord& w) {
  std::vector<int> letters(w.letters().rbegin(), w.letters().rend());
  for (int& e : letters) e = -e;
  return BraidWord(w.strands(), std::move(letters));
}

BraidWord free_reduce(const BraidWord& w) {
  std::vector<int> out;
  out.reserve(w.length());
  for (int e : w.letters()) {
    if (!out.empty() && out.back() == -e)
      out.pop_back();
    else
      out.push_back(e);
  }
  return BraidWord(w.strands(), std::move(out));
}

long long exponent_sum(const BraidWord& w) {
  long long sum = 0;
  for (int e : w.letters()) sum += e > 0 ? 1 : -1;
  return sum;
}

long long negative_letter_count(const BraidWord& w) {
  long long count = 0;
  for (int e : w.letters())
    if (e < 0) ++count;
  return count;
}

Permutation underlying_permutation(const BraidWord& w) {
  const int k = w.strands();
  // pos_to_strand[p-1] = strand currently occupying position p.
  std::vector<int> pos_to_strand(static_cast<std::size_t>(k));
  std::iota(pos_to_strand.begin(), pos_to_strand.end(), 1);
  for (int e : w.letters()) {
    const int i = e < 0 ? -e : e;
    std::swap(pos_to_strand[static_cast<std::size_t>(i) - 1], pos_to_strand[static_cast<std::size_t>(i)]);
  }
  // images[s-1] = final position of strand s.
  std::vector<int> images(static_cast<std::size_t>(k));
  for (int p = 1; p <= k; ++p) images[static_cast<std::size_t>(pos_to_strand[static_cast<std::size_t>(p) - 1]) - 1] = p;
  return Permutation(std::move(images));
}

BraidWord full_twist_word(int k) {
  if (k < 1) fail(errc::bad_input, "strand count must be >= 1");
  std::vector<int> letters;
  letters.reserve(static_cast<std::size_t>(k) * static_cast<std::size_t>(k - 1));
  for (int rep = 0; rep < k; ++rep)
    for (int i = 1; i <= k - 1; ++i) letters.push_back(i);
  return BraidWord(k, std::move(letters));
}

bool is_positive_word(const BraidWord& w) {
  return std::all_of(w.letters().begin(), w.letters().end(), [](int e) { return e > 0; });
}

}  // namespace braidsurg
