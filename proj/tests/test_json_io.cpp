#include <doctest.h>

#include <nlohmann/json.hpp>

#include "braidsurg/json_io.hpp"
#include "braidsurg/selftest.hpp"

using namespace braidsurg;

TEST_CASE("coefficient json round trip") {
  for (const RationalCoeff& c : {RationalCoeff{3, 4}, RationalCoeff{-5, 1}, RationalCoeff{1, 0},
                                 RationalCoeff{0, 1}}) {
    CHECK(coeff_from_json(to_json(c)) == c);
  }

  const Int big("123456789012345678901234567890");
  const RationalCoeff huge = normalize_coeff(big, 7);
  const Json j = to_json(huge);
  CHECK(j.at("p").is_string());  // beyond 64 bits, serialized as decimal text
  CHECK(coeff_from_json(j) == huge);

  CHECK(coeff_from_json(Json{{"p", "12"}, {"q", "5"}}) == RationalCoeff{12, 5});
  CHECK(coeff_from_json(Json{{"p", 2}, {"q", 4}}) == RationalCoeff{1, 2});  // normalized on parse
  CHECK_THROWS_AS(coeff_from_json(Json{{"p", 1}}), Error);
  CHECK_THROWS_AS(coeff_from_json(Json{{"p", "x"}, {"q", 1}}), Error);
  CHECK_THROWS_AS(coeff_from_json(Json{{"p", 0}, {"q", 0}}), Error);
}

TEST_CASE("presentation json round trip") {
  Rng rng(83);
  for (int t = 0; t < 60; ++t) {
    const SurgeryPresentation pres = random_presentation(rng, 5, 6, 9);
    const Json j = to_json(pres);
    CHECK(j.at("m").get<int>() == pres.size());
    CHECK(presentation_from_json(j) == pres);
    CHECK(presentation_from_json(Json::parse(j.dump())) == pres);
  }

  const char* doc = R"({"m":1,"linking":[[0]],"coefficients":[{"p":5,"q":1}],"unknotted":[true]})";
  const SurgeryPresentation lens = presentation_from_json(Json::parse(doc));
  CHECK(lens.coeffs[0] == RationalCoeff{5, 1});
  CHECK(lens.unknotted[0]);

  CHECK_THROWS_AS(presentation_from_json(Json::parse(R"({"m":1})")), Error);
  CHECK_THROWS_AS(
      presentation_from_json(Json::parse(
          R"({"m":2,"linking":[[0,1],[2,0]],"coefficients":[{"p":1,"q":1},{"p":1,"q":1}],"unknotted":[true,true]})")),
      Error);
}

TEST_CASE("diagram json round trip") {
  Rng rng(89);
  for (int t = 0; t < 60; ++t) {
    BraidSurgeryDiagram d = random_diagram(rng, 6, 20, 9);
    if (rng.coin()) d.axis = RationalCoeff{1, rng.uniform(1, 5)};
    const Json j = to_json(d);
    CHECK(j.contains("axis"));
    CHECK(j.at("axis").is_null() == !d.axis.has_value());
    CHECK(diagram_from_json(j) == d);
    CHECK(diagram_from_json(Json::parse(j.dump())) == d);
  }

  const char* doc = R"({"strands":2,"word":[-1],"coefficients":[{"p":-1,"q":1}],"axis":null})";
  const BraidSurgeryDiagram d = diagram_from_json(Json::parse(doc));
  CHECK(d.word == BraidWord(2, {-1}));
  CHECK_FALSE(d.axis.has_value());

  CHECK_THROWS_AS(diagram_from_json(Json::parse(R"({"strands":2,"word":[9],"coefficients":[]})")),
                  Error);
  CHECK_THROWS_AS(
      diagram_from_json(Json::parse(R"({"strands":2,"word":[],"coefficients":[{"p":1,"q":1}]})")),
      Error);  // one coefficient for a two-component closure
}

TEST_CASE("report and info serializations carry their fields") {
  const ClosureInfo info = linking_matrix(BraidWord(2, {1, 1}));
  const Json ji = to_json(info);
  CHECK(ji.at("component_count") == 2);
  CHECK(ji.at("linking") == Json::parse("[[0,1],[1,0]]"));

  const NormalForm nf = left_normal_form(BraidWord(3, {1, 2}));
  const Json jn = to_json(nf);
  CHECK(jn.at("infimum") == 0);
  CHECK(jn.at("factors") == Json::parse("[[1,2]]"));

  BraidSurgeryDiagram d;
  d.word = BraidWord(2, {-1});
  d.coeffs = {RationalCoeff{-1, 1}};
  const auto [out, rep] = braid_positive_surgery(d);
  const Json jr = to_json(rep);
  CHECK(jr.at("n_used") == 1);
  CHECK(jr.at("mode") == "lemma");
  CHECK(jr.at("all_passed") == true);
  CHECK(jr.at("h1_before") == jr.at("h1_after"));
}

TEST_CASE("word text format") {
  CHECK(parse_word_text(3, "1 -2 1") == BraidWord(3, {1, -2, 1}));
  CHECK(parse_word_text(4, "") == BraidWord(4, {}));
  CHECK(parse_word_text(4, "  3  ") == BraidWord(4, {3}));
  CHECK(word_to_text(BraidWord(3, {1, -2, 1})) == "1 -2 1");
  CHECK(word_to_text(BraidWord(2, {})) == "");

  CHECK_THROWS_AS(parse_word_text(3, "1 x"), Error);
  CHECK_THROWS_AS(parse_word_text(3, "1 2z"), Error);
  CHECK_THROWS_AS(parse_word_text(2, "3"), Error);
}

TEST_CASE("coefficient text format") {
  CHECK(parse_coeff_text("3/4") == RationalCoeff{3, 4});
  CHECK(parse_coeff_text("-5") == RationalCoeff{-5, 1});
  CHECK(parse_coeff_text("inf") == RationalCoeff{1, 0});
  CHECK(parse_coeff_text("1/0") == RationalCoeff{1, 0});
  CHECK(parse_coeff_text("6/-4") == RationalCoeff{-3, 2});
  CHECK(parse_coeff_text(" 7 / 2 ") == RationalCoeff{7, 2});

  CHECK(coeff_to_text(RationalCoeff{1, 0}) == "inf");
  CHECK(coeff_to_text(RationalCoeff{-2, 3}) == "-2/3");
  CHECK(coeff_to_text(RationalCoeff{4, 1}) == "4");

  CHECK_THROWS_AS(parse_coeff_text("a/b"), Error);
  CHECK_THROWS_AS(parse_coeff_text("0/0"), Error);
}

TEST_CASE("mode names") {
  CHECK(mode_from_name("lemma") == TwistMode::lemma);
  CHECK(mode_from_name("minimal") == TwistMode::minimal);
  CHECK(mode_name(TwistMode::minimal) == std::string("minimal"));
  CHECK_THROWS_AS(mode_from_name("fast"), Error);
}
