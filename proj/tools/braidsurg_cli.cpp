#include <CLI11.hpp>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>
#include <sstream>
#include <string>

#include "braidsurg/json_io.hpp"
#include "braidsurg/selftest.hpp"

namespace {

using braidsurg::Json;

// "-" reads the document from stdin.
std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path);
  if (!in) braidsurg::fail(braidsurg::errc::bad_input, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Json parse_json(const std::string& text) {
  Json j = Json::parse(text, nullptr, false);
  if (j.is_discarded()) braidsurg::fail(braidsurg::errc::bad_input, "malformed JSON input");
  return j;
}

std::string homology_text(const braidsurg::HomologyInvariants& h) {
  std::string out;
  if (h.free_rank == 1) out = "Z";
  else if (h.free_rank > 1) out = "Z^" + std::to_string(h.free_rank);
  for (const braidsurg::Int& d : h.torsion) {
    if (!out.empty()) out += " + ";
    out += "Z/" + d.str();
  }
  return out.empty() ? "0" : out;
}

void print_presentation_text(const braidsurg::SurgeryPresentation& pres, std::ostream& out) {
  out << "components " << pres.size() << "\n";
  for (int i = 0; i < pres.size(); ++i) {
    out << "  " << (i + 1) << ": coefficient " << coeff_to_text(pres.coeffs[static_cast<std::size_t>(i)])
        << (pres.unknotted[static_cast<std::size_t>(i)] ? " (unknotted)" : "") << "\n";
  }
  out << "linking\n";
  for (int i = 0; i < pres.size(); ++i) {
    out << " ";
    for (int j = 0; j < pres.size(); ++j)
      out << ' ' << pres.linking[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    out << "\n";
  }
}

void print_diagram_text(const braidsurg::BraidSurgeryDiagram& d, std::ostream& out) {
  out << "strands " << d.word.strands() << "\n";
  out << "word " << braidsurg::word_to_text(d.word) << "\n";
  for (std::size_t i = 0; i < d.coeffs.size(); ++i)
    out << "component " << (i + 1) << ": " << coeff_to_text(d.coeffs[i]) << "\n";
  if (d.axis) out << "axis: " << coeff_to_text(*d.axis) << "\n";
}

struct PositifyArgs {
  int strands = 2;
  std::string word;
  long long n = -1;  // <0 means "use the letter count"
  bool minimal = false;
};

int run_positify(const PositifyArgs& args, const std::string& format) {
  const braidsurg::BraidWord w = braidsurg::parse_word_text(args.strands, args.word);
  long long n = args.n;
  braidsurg::BraidWord out;
  if (args.minimal) {
    n = braidsurg::minimal_twist_power(w);
    out = braidsurg::twisted_positive_word(w, n);
  } else {
    if (n < 0) n = braidsurg::negative_letter_count(w);
    out = braidsurg::positify(w, n);
  }
  if (format == "json") {
    Json j{{"strands", out.strands()}, {"word", out.letters()}, {"twists", n}};
    std::cout << j.dump() << "\n";
  } else {
    std::cout << braidsurg::word_to_text(out) << "\n";
  }
  return 0;
}

int run_closure(int strands, const std::string& word, const std::string& format) {
  const braidsurg::BraidWord w = braidsurg::parse_word_text(strands, word);
  const braidsurg::ClosureInfo info = braidsurg::linking_matrix(w);
  if (format == "json") {
    std::cout << to_json(info).dump() << "\n";
    return 0;
  }
  std::cout << "components " << info.component_count << "\n";
  for (int j = 0; j < info.component_count; ++j)
    std::cout << "  " << (j + 1) << ": " << info.strand_counts[static_cast<std::size_t>(j)]
              << " strands\n";
  std::cout << "linking\n";
  for (int i = 0; i < info.component_count; ++i) {
    std::cout << " ";
    for (int j = 0; j < info.component_count; ++j)
      std::cout << ' ' << info.linking[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    std::cout << "\n";
  }
  return 0;
}

// Accepts either document shape: a presentation carries "linking", a braid
// diagram carries "word".
braidsurg::SurgeryPresentation presentation_from_any(const Json& j) {
  if (j.is_object() && j.contains("word"))
    return diagram_to_presentation(braidsurg::diagram_from_json(j));
  return braidsurg::presentation_from_json(j);
}

int run_h1(const std::string& input, const std::string& format) {
  const braidsurg::SurgeryPresentation pres = presentation_from_any(parse_json(read_input(input)));
  const braidsurg::HomologyInvariants h = h1_invariants(pres);
  if (format == "json") std::cout << to_json(h).dump() << "\n";
  else std::cout << homology_text(h) << "\n";
  return 0;
}

int run_twist(const std::string& input, int component, long long n, const std::string& format) {
  const braidsurg::SurgeryPresentation pres =
      braidsurg::presentation_from_json(parse_json(read_input(input)));
  if (component < 1 || component > pres.size())
    braidsurg::fail(braidsurg::errc::index_out_of_range,
                    "component " + std::to_string(component) + " of " +
                        std::to_string(pres.size()) + " (components are numbered from 1)");
  const braidsurg::SurgeryPresentation out = rolfsen_twist(pres, component - 1, n);
  if (format == "json") std::cout << to_json(out).dump() << "\n";
  else print_presentation_text(out, std::cout);
  return 0;
}

int run_transform(const std::string& input, const std::string& mode_name,
                  const std::string& format) {
  const braidsurg::BraidSurgeryDiagram d =
      braidsurg::diagram_from_json(parse_json(read_input(input)));
  const braidsurg::TwistMode mode = braidsurg::mode_from_name(mode_name);
  const auto [out, rep] = braid_positive_surgery(d, mode);
  if (format == "json") {
    Json j{{"diagram", to_json(out)}, {"report", to_json(rep)}};
    std::cout << j.dump() << "\n";
  } else {
    std::cout << "twists " << rep.n_used << " (" << braidsurg::mode_name(rep.mode) << ")\n";
    print_diagram_text(out, std::cout);
    std::cout << "checks " << (rep.all_passed() ? "pass" : "FAIL") << ": word_positive="
              << rep.word_positive << " component_bound=" << rep.component_bound_ok
              << " h1=" << rep.h1_match << " linking_law=" << rep.linking_law_ok
              << " length_law=" << rep.length_law_ok << "\n";
    std::cout << "h1 " << homology_text(rep.h1_before) << " -> " << homology_text(rep.h1_after)
              << "\n";
  }
  return rep.all_passed() ? 0 : 1;
}

int run_selftest_cmd(const braidsurg::SelftestConfig& config, const std::string& format) {
  const std::vector<braidsurg::SuiteResult> results = run_selftest(config);
  bool ok = true;
  if (format == "json") {
    Json arr = Json::array();
    for (const braidsurg::SuiteResult& r : results) {
      arr.push_back(Json{{"name", r.name},
                         {"checks", r.checks},
                         {"failures", r.failures},
                         {"detail", r.detail}});
      ok = ok && r.passed();
    }
    std::cout << Json{{"seed", config.seed}, {"suites", arr}}.dump() << "\n";
  } else {
    for (const braidsurg::SuiteResult& r : results) {
      if (r.passed()) {
        std::cout << "ok   " << r.name << " (" << r.checks << " checks"
                  << (r.detail.empty() ? "" : ", " + r.detail) << ")\n";
      } else {
        ok = false;
        std::cout << "FAIL " << r.name << " (" << r.failures << "/" << r.checks
                  << " failed): " << r.detail << "\n";
      }
    }
  }
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Braid-positive surgery presentations: positify a braid word, twist a surgery "
               "presentation, compare first homology"};
  app.require_subcommand(1);

  std::string format = "text";
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();

  PositifyArgs pos_args;
  CLI::App* positify = app.add_subcommand("positify", "Rewrite a word as a positive word times "
                                                      "full twists");
  positify->add_option("--strands", pos_args.strands, "Strand count")->required();
  positify->add_option("--word", pos_args.word, "Braid word, e.g. \"1 -2 1\"")->required();
  positify->add_option("--n", pos_args.n, "Full twists to spend (default: negative letter count)");
  positify->add_flag("--minimal", pos_args.minimal, "Spend the least sufficient power instead");

  int closure_strands = 2;
  std::string closure_word;
  CLI::App* closure = app.add_subcommand("closure", "Components and linking matrix of a braid "
                                                    "closure");
  closure->add_option("--strands", closure_strands, "Strand count")->required();
  closure->add_option("--word", closure_word, "Braid word")->required();

  std::string h1_input = "-";
  CLI::App* h1 = app.add_subcommand("h1", "First homology of a surgery presentation or braid "
                                          "diagram");
  h1->add_option("--input", h1_input, "JSON file, or - for stdin")->capture_default_str();

  std::string twist_input = "-";
  int twist_component = 1;
  long long twist_n = 1;
  CLI::App* twist = app.add_subcommand("twist", "Rolfsen twist along an unknotted component");
  twist->add_option("--input", twist_input, "Presentation JSON file, or - for stdin")
      ->capture_default_str();
  twist->add_option("--component", twist_component, "Component to twist, numbered from 1")
      ->required();
  twist->add_option("--n", twist_n, "Number of full twists")->required();

  std::string transform_input = "-";
  std::string transform_mode = "lemma";
  CLI::App* transform = app.add_subcommand("transform", "Produce a braid-positive surgery "
                                                        "diagram plus its verification report");
  transform->add_option("--input", transform_input, "Diagram JSON file, or - for stdin")
      ->capture_default_str();
  transform->add_option("--mode", transform_mode, "Twist count to spend")
      ->check(CLI::IsMember({"lemma", "minimal"}))
      ->capture_default_str();

  braidsurg::SelftestConfig st;
  std::string selftest_mode = "lemma";
  CLI::App* selftest = app.add_subcommand("selftest", "Seeded property suites; nonzero exit on "
                                                      "any failure");
  selftest->add_option("--seed", st.seed, "RNG seed")->capture_default_str();
  selftest->add_option("--trials", st.trials, "Trials per random suite")->capture_default_str();
  selftest->add_option("--max-strands", st.max_strands, "Strand bound")->capture_default_str();
  selftest->add_option("--max-length", st.max_length, "Word length bound")->capture_default_str();
  selftest->add_option("--mode", selftest_mode, "Pipeline twist mode")
      ->check(CLI::IsMember({"lemma", "minimal"}))
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (positify->parsed()) return run_positify(pos_args, format);
    if (closure->parsed()) return run_closure(closure_strands, closure_word, format);
    if (h1->parsed()) return run_h1(h1_input, format);
    if (twist->parsed()) return run_twist(twist_input, twist_component, twist_n, format);
    if (transform->parsed()) return run_transform(transform_input, transform_mode, format);
    if (selftest->parsed()) {
      st.mode = braidsurg::mode_from_name(selftest_mode);
      return run_selftest_cmd(st, format);
    }
  } catch (const braidsurg::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
