#include <doctest.h>

#include "braidsurg/pipeline.hpp"
#include "braidsurg/selftest.hpp"

using namespace braidsurg;

namespace {

BraidSurgeryDiagram make_diagram(BraidWord w, std::vector<std::pair<long long, long long>> coeffs) {
  BraidSurgeryDiagram d;
  d.word = std::move(w);
  for (auto& [p, q] : coeffs) d.coeffs.push_back(RationalCoeff{p, q});
  return d;
}

}  // namespace

TEST_CASE("diagram validation") {
  CHECK_NOTHROW(validate(make_diagram(BraidWord(2, {1, 1}), {{0, 1}, {0, 1}})));
  CHECK_THROWS_AS(validate(make_diagram(BraidWord(2, {1, 1}), {{0, 1}})), Error);
  CHECK_THROWS_AS(validate(make_diagram(BraidWord(2, {1, 1, 1}), {{0, 1}, {0, 1}})), Error);

  BraidSurgeryDiagram denormal = make_diagram(BraidWord(2, {1, 1}), {{2, 4}, {0, 1}});
  CHECK_THROWS_AS(validate(denormal), Error);
}

TEST_CASE("diagram to presentation") {
  const SurgeryPresentation hopf =
      diagram_to_presentation(make_diagram(BraidWord(2, {1, 1}), {{0, 1}, {0, 1}}));
  CHECK(hopf.size() == 2);
  CHECK(hopf.linking == IntMatrix{{0, 1}, {1, 0}});
  CHECK(hopf.unknotted == std::vector<bool>{false, false});

  const SurgeryPresentation lens =
      diagram_to_presentation(make_diagram(BraidWord(1, {}), {{5, 1}}));
  CHECK(lens.size() == 1);
  CHECK(h1_invariants(lens) == HomologyInvariants{{5}, 0});

  BraidSurgeryDiagram trefoil = make_diagram(BraidWord(2, {1, 1, 1}), {{1, 1}});
  trefoil.axis = RationalCoeff{1, 0};
  const SurgeryPresentation with_axis = diagram_to_presentation(trefoil);
  CHECK(with_axis.size() == 2);
  CHECK(with_axis.linking == IntMatrix{{0, 2}, {2, 0}});
  CHECK(with_axis.unknotted == std::vector<bool>{false, true});
}

TEST_CASE("twist number per mode") {
  CHECK(compute_twist_number(BraidWord(3, {1, 2}), TwistMode::lemma) == 0);
  CHECK(compute_twist_number(BraidWord(3, {1, 2}), TwistMode::minimal) == 0);
  CHECK(compute_twist_number(BraidWord(2, {-1, -1, -1}), TwistMode::lemma) == 3);
  CHECK(compute_twist_number(BraidWord(2, {-1, -1, -1}), TwistMode::minimal) == 2);
  CHECK(compute_twist_number(BraidWord(3, {1, -1, -2}), TwistMode::lemma) == 1);
}

TEST_CASE("braid positive surgery on the one-crossing example") {
  const auto [out, rep] = braid_positive_surgery(make_diagram(BraidWord(2, {-1}), {{-1, 1}}));
  CHECK(rep.n_used == 1);
  CHECK(out.word == BraidWord(2, {1}));
  CHECK(out.coeffs == std::vector<RationalCoeff>{RationalCoeff{3, 1}});
  REQUIRE(out.axis.has_value());
  CHECK(*out.axis == RationalCoeff{1, 1});

  CHECK(rep.all_passed());
  CHECK(rep.h1_before == HomologyInvariants{});
  CHECK(rep.h1_after == HomologyInvariants{});

  const IntMatrix after = h1_matrix(diagram_to_presentation(out));
  CHECK(after == IntMatrix{{3, 2}, {2, 1}});
}

TEST_CASE("positive inputs pass through") {
  const BraidSurgeryDiagram d = make_diagram(BraidWord(3, {1, 2, 2}), {{4, 3}, {2, 1}});
  const auto [out, rep] = braid_positive_surgery(d);
  CHECK(rep.n_used == 0);
  CHECK(out.word == d.word);
  CHECK(out.coeffs == d.coeffs);
  CHECK_FALSE(out.axis.has_value());
  CHECK(rep.all_passed());
}

TEST_CASE("two-strand mixed example end to end") {
  const BraidSurgeryDiagram d = make_diagram(BraidWord(3, {1, -2}), {{2, 1}});
  const auto [out, rep] = braid_positive_surgery(d);
  CHECK(rep.n_used == 1);
  CHECK(out.word.length() == 6);
  CHECK(is_positive_word(out.word));
  REQUIRE(out.axis.has_value());
  CHECK(*out.axis == RationalCoeff{1, 1});
  // Single closure component with all 3 strands: coefficient shifts by 9.
  CHECK(out.coeffs == std::vector<RationalCoeff>{RationalCoeff{11, 1}});
  CHECK(rep.all_passed());
}

TEST_CASE("axis input is rejected") {
  BraidSurgeryDiagram d = make_diagram(BraidWord(2, {1, 1}), {{0, 1}, {0, 1}});
  d.axis = RationalCoeff{1, 0};
  CHECK_THROWS_AS(braid_positive_surgery(d), Error);
}

TEST_CASE("verify transform flags an off-by-one coefficient") {
  const BraidSurgeryDiagram d = make_diagram(BraidWord(2, {-1}), {{-1, 1}});
  auto [out, rep] = braid_positive_surgery(d);
  REQUIRE(rep.all_passed());

  BraidSurgeryDiagram mutated = out;
  mutated.coeffs[0] = normalize_coeff(mutated.coeffs[0].p + 1, mutated.coeffs[0].q);
  const TransformReport bad = verify_transform(d, mutated, rep.n_used, rep.mode);
  CHECK_FALSE(bad.h1_match);
  CHECK_FALSE(bad.all_passed());
}

TEST_CASE("verify transform checks the linking law") {
  // Claiming n = 2 for an n = 1 output must fail the linking or length law.
  const BraidSurgeryDiagram d = make_diagram(BraidWord(2, {1, 1, -1, -1, 1, 1}), {{0, 1}, {0, 1}});
  const auto [out, rep] = braid_positive_surgery(d);
  REQUIRE(rep.all_passed());
  const TransformReport bad = verify_transform(d, out, rep.n_used + 1, rep.mode);
  CHECK_FALSE(bad.linking_law_ok);
  CHECK_FALSE(bad.length_law_ok);
}

TEST_CASE("minimal mode spends fewer twists") {
  const BraidSurgeryDiagram d = make_diagram(BraidWord(2, {-1, -1, -1}), {{-1, 1}});
  const auto [lemma_out, lemma_rep] = braid_positive_surgery(d, TwistMode::lemma);
  const auto [min_out, min_rep] = braid_positive_surgery(d, TwistMode::minimal);
  CHECK(lemma_rep.n_used == 3);
  CHECK(min_rep.n_used == 2);
  CHECK(lemma_rep.all_passed());
  CHECK(min_rep.all_passed());
  CHECK(min_out.word.length() < lemma_out.word.length());
}

TEST_CASE("random diagrams pass all checks in both modes") {
  Rng rng(79);
  for (int t = 0; t < 100; ++t) {
    const BraidSurgeryDiagram d = random_diagram(rng, 6, 20, 9);
    for (const TwistMode mode : {TwistMode::lemma, TwistMode::minimal}) {
      const auto [out, rep] = braid_positive_surgery(d, mode);
      CHECK(rep.all_passed());
      if (rep.n_used > 0) {
        REQUIRE(out.axis.has_value());
        CHECK(*out.axis == RationalCoeff{1, rep.n_used});
      } else {
        CHECK_FALSE(out.axis.has_value());
      }
    }
  }
}
