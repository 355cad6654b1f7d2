#include "braidsurg/json_io.hpp"

#include <nlohmann/json.hpp>
#include <sstream>

namespace braidsurg {

namespace {

Json int_to_json(const Int& v) {
  static const Int lo = std::numeric_limits<long long>::min();
  static const Int hi = std::numeric_limits<long long>::max();
  if (v >= lo && v <= hi) return static_cast<long long>(v);
  return v.str();
}

Int int_from_json(const Json& j) {
  if (j.is_number_integer()) return Int(j.get<long long>());
  if (j.is_string()) {
    try {
      return Int(j.get<std::string>());
    } catch (const std::exception&) {
      fail(errc::bad_input, "not an integer: " + j.dump());
    }
  }
  fail(errc::bad_input, "expected an integer, got " + j.dump());
}

const Json& member(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    fail(errc::bad_input, std::string("missing field \"") + key + "\"");
  return j.at(key);
}

}  // namespace

Json to_json(const RationalCoeff& c) {
  return Json{{"p", int_to_json(c.p)}, {"q", int_to_json(c.q)}};
}

RationalCoeff coeff_from_json(const Json& j) {
  Int p = int_from_json(member(j, "p"));
  Int q = int_from_json(member(j, "q"));
  return normalize_coeff(std::move(p), std::move(q));
}

Json to_json(const SurgeryPresentation& pres) {
  Json linking = Json::array();
  for (const auto& row : pres.linking) {
    Json jrow = Json::array();
    for (const Int& v : row) jrow.push_back(int_to_json(v));
    linking.push_back(std::move(jrow));
  }
  Json coeffs = Json::array();
  for (const RationalCoeff& c : pres.coeffs) coeffs.push_back(to_json(c));
  Json unknotted = Json::array();
  for (bool b : pres.unknotted) unknotted.push_back(b);
  return Json{{"m", pres.size()},
              {"linking", std::move(linking)},
              {"coefficients", std::move(coeffs)},
              {"unknotted", std::move(unknotted)}};
}

SurgeryPresentation presentation_from_json(const Json& j) {
  SurgeryPresentation pres;
  const Json& linking = member(j, "linking");
  const Json& coeffs = member(j, "coefficients");
  const Json& unknotted = member(j, "unknotted");
  if (!linking.is_array() || !coeffs.is_array() || !unknotted.is_array())
    fail(errc::bad_input, "presentation fields must be arrays");
  for (const Json& row : linking) {
    if (!row.is_array()) fail(errc::bad_input, "linking rows must be arrays");
    std::vector<Int> r;
    for (const Json& v : row) r.push_back(int_from_json(v));
    pres.linking.push_back(std::move(r));
  }
  for (const Json& c : coeffs) pres.coeffs.push_back(coeff_from_json(c));
  for (const Json& b : unknotted) {
    if (!b.is_boolean()) fail(errc::bad_input, "unknotted entries must be booleans");
    pres.unknotted.push_back(b.get<bool>());
  }
  if (j.contains("m") && member(j, "m").get<long long>() != pres.size())
    fail(errc::bad_input, "field \"m\" disagrees with the coefficient count");
  validate(pres);
  return pres;
}

Json to_json(const BraidSurgeryDiagram& d) {
  Json word = Json::array();
  for (int e : d.word.letters()) word.push_back(e);
  Json coeffs = Json::array();
  for (const RationalCoeff& c : d.coeffs) coeffs.push_back(to_json(c));
  Json out{{"strands", d.word.strands()},
           {"word", std::move(word)},
           {"coefficients", std::move(coeffs)}};
  out["axis"] = d.axis ? to_json(*d.axis) : Json(nullptr);
  return out;
}

BraidSurgeryDiagram diagram_from_json(const Json& j) {
  const Json& strands = member(j, "strands");
  const Json& word = member(j, "word");
  const Json& coeffs = member(j, "coefficients");
  if (!strands.is_number_integer() || !word.is_array() || !coeffs.is_array())
    fail(errc::bad_input, "malformed diagram document");
  std::vector<int> letters;
  for (const Json& e : word) {
    if (!e.is_number_integer()) fail(errc::bad_input, "word letters must be integers");
    letters.push_back(e.get<int>());
  }
  BraidSurgeryDiagram d;
  d.word = BraidWord(strands.get<int>(), std::move(letters));
  for (const Json& c : coeffs) d.coeffs.push_back(coeff_from_json(c));
  if (j.contains("axis") && !j.at("axis").is_null()) d.axis = coeff_from_json(j.at("axis"));
  validate(d);
  return d;
}

Json to_json(const ClosureInfo& info) {
  Json linking = Json::array();
  for (const auto& row : info.linking) linking.push_back(row);
  return Json{{"strands", info.strands},
              {"component_count", info.component_count},
              {"strand_to_component", info.strand_to_component},
              {"strand_counts", info.strand_counts},
              {"linking", std::move(linking)}};
}

Json to_json(const NormalForm& nf) {
  Json factors = Json::array();
  for (const SimpleFactor& f : nf.factors) factors.push_back(f.word.letters());
  return Json{{"strands", nf.strands}, {"infimum", nf.infimum}, {"factors", std::move(factors)}};
}

Json to_json(const HomologyInvariants& h) {
  Json torsion = Json::array();
  for (const Int& d : h.torsion) torsion.push_back(int_to_json(d));
  return Json{{"torsion", std::move(torsion)}, {"free_rank", h.free_rank}};
}

Json to_json(const TransformReport& rep) {
  return Json{{"n_used", rep.n_used},
              {"mode", mode_name(rep.mode)},
              {"input", to_json(rep.input)},
              {"output", to_json(rep.output)},
              {"word_positive", rep.word_positive},
              {"component_bound_ok", rep.component_bound_ok},
              {"h1_match", rep.h1_match},
              {"linking_law_ok", rep.linking_law_ok},
              {"length_law_ok", rep.length_law_ok},
              {"h1_before", to_json(rep.h1_before)},
              {"h1_after", to_json(rep.h1_after)},
              {"all_passed", rep.all_passed()}};
}

BraidWord parse_word_text(int strands, const std::string& text) {
  std::istringstream in(text);
  std::vector<int> letters;
  std::string token;
  while (in >> token) {
    try {
      std::size_t used = 0;
      const int e = std::stoi(token, &used);
      if (used != token.size()) throw std::invalid_argument(token);
      letters.push_back(e);
    } catch (const std::exception&) {
      fail(errc::bad_input, "bad word letter \"" + token + "\"");
    }
  }
  return BraidWord(strands, std::move(letters));
}

std::string word_to_text(const BraidWord& w) {
  std::string out;
  for (std::size_t i = 0; i < w.letters().size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(w.letters()[i]);
  }
  return out;
}

RationalCoeff parse_coeff_text(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s == "inf" || s == "1/0") return RationalCoeff{1, 0};
  try {
    const std::size_t slash = s.find('/');
    if (slash == std::string::npos) return normalize_coeff(Int(s), 1);
    return normalize_coeff(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
  } catch (const Error&) {
    throw;
  } catch (const std::exception&) {
    fail(errc::bad_input, "bad coefficient \"" + text + "\"");
  }
}

std::string coeff_to_text(const RationalCoeff& c) {
  if (c.is_infinity()) return "inf";
  if (c.q == 1) return c.p.str();
  return c.p.str() + "/" + c.q.str();
}

const char* mode_name(TwistMode mode) {
  return mode == TwistMode::lemma ? "lemma" : "minimal";
}

TwistMode mode_from_name(const std::string& name) {
  if (name == "lemma") return TwistMode::lemma;
  if (name == "minimal") return TwistMode::minimal;
  fail(errc::bad_input, "unknown mode \"" + name + "\"");
}

}  // namespace braidsurg
