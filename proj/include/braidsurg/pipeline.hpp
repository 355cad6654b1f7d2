#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "braidsurg/braid.hpp"
#include "braidsurg/closure.hpp"
#include "braidsurg/garside.hpp"
#include "braidsurg/surgery.hpp"

namespace braidsurg {

// How many full twists to spend: `lemma` counts the negative letters of the
// freely reduced word (always sufficient); `minimal` takes the least power
// that makes the element positive.
enum class TwistMode { lemma, minimal };

// A surgery diagram presented as a braid closure: one coefficient per
// closure component (component labels as in the closure module), plus an
// optional coefficient on the braid axis. The axis links component j in
// exactly strand_count(j) points, so its linking data is always derived,
// never stored.
struct BraidSurgeryDiagram {
  BraidWord word;
  std::vector<RationalCoeff> coeffs;
  std::optional<RationalCoeff> axis;

  friend bool operator==(const BraidSurgeryDiagram&, const BraidSurgeryDiagram&) = default;
};

// Throws unless the coefficient count matches the closure component count.
void validate(const BraidSurgeryDiagram& d);

// Linking matrix of the closure, extended by an axis row/column (entries =
// strand counts) when the axis is present. The axis is flagged unknotted;
// closure components are not certified.
SurgeryPresentation diagram_to_presentation(const BraidSurgeryDiagram& d);

// Twist count for the transformation, computed on the freely reduced word.
long long compute_twist_number(const BraidWord& w, TwistMode mode);

// Outcome of the checkable consequences of the transformation.
struct TransformReport {
  long long n_used = 0;
  TwistMode mode = TwistMode::lemma;
  BraidSurgeryDiagram input;
  BraidSurgeryDiagram output;
  bool word_positive = false;
  bool component_bound_ok = false;
  bool h1_match = false;
  bool linking_law_ok = false;
  bool length_law_ok = false;
  HomologyInvariants h1_before;
  HomologyInvariants h1_after;

  bool all_passed() const {
    return word_positive && component_bound_ok && h1_match && linking_law_ok && length_law_ok;
  }
};

// Transform a plain braid-closure surgery diagram into one whose word is
// positive: insert an infinity-framed axis and perform an N-fold Rolfsen
// twist along it, realized on the braid side by positify. For N = 0 the
// axis is skipped entirely. Coefficients shift by N * strand_count^2 and
// the axis ends up with coefficient 1/N. The returned report carries the
// verification outcomes; the surgered manifold's first homology is
// preserved exactly.
std::pair<BraidSurgeryDiagram, TransformReport> braid_positive_surgery(
    const BraidSurgeryDiagram& d, TwistMode mode = TwistMode::lemma);

// Re-runs the five checks for a claimed input/output pair: (a) output word
// positive, (b) component count grows by at most one, (c) first homology
// invariants agree, (d) old-component linking obeys lk' = lk + n s_a s_b
// and the axis row equals the strand counts, (e) output length equals
// exponent_sum(reduced input) + n k(k-1).
TransformReport verify_transform(const BraidSurgeryDiagram& input,
                                 const BraidSurgeryDiagram& output, long long n_used,
                                 TwistMode mode = TwistMode::lemma);

// The two checks that can see injected faults, exposed for direct use on
// (possibly perturbed) presentations.
bool h1_equal(const SurgeryPresentation& a, const SurgeryPresentation& b);
bool linking_law_holds(const SurgeryPresentation& before, const SurgeryPresentation& after,
                       long long n, const std::vector<int>& strand_counts);

}  // namespace braidsurg
