#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cctype>
#include <nlohmann/json.hpp>
#include <string>
#include <vector>

#include "braidsurg/json_io.hpp"
#include "braidsurg/selftest.hpp"

namespace py = pybind11;

namespace {

using braidsurg::BraidWord;
using braidsurg::Json;

// Structured arguments and results cross the boundary as plain dicts and
// lists with the same schema as the JSON documents of the command line tool.
// Integers beyond 64 bits appear as decimal strings on both sides.
Json to_document(const py::handle& obj) {
  if (obj.is_none()) return Json(nullptr);
  if (py::isinstance<py::bool_>(obj)) return Json(obj.cast<bool>());
  if (py::isinstance<py::int_>(obj)) {
    try {
      return Json(obj.cast<long long>());
    } catch (const py::cast_error&) {
      return Json(py::str(obj).cast<std::string>());
    }
  }
  if (py::isinstance<py::float_>(obj)) return Json(obj.cast<double>());
  if (py::isinstance<py::str>(obj)) return Json(obj.cast<std::string>());
  if (py::isinstance<py::dict>(obj)) {
    Json out = Json::object();
    for (const auto& item : obj.cast<py::dict>())
      out[py::str(item.first).cast<std::string>()] = to_document(item.second);
    return out;
  }
  if (py::isinstance<py::sequence>(obj)) {
    Json out = Json::array();
    for (const auto& item : obj.cast<py::sequence>()) out.push_back(to_document(item));
    return out;
  }
  throw py::type_error("unsupported value in document: " +
                       py::str(py::type::of(obj)).cast<std::string>());
}

py::object from_document(const Json& j) {
  switch (j.type()) {
    case Json::value_t::null: return py::none();
    case Json::value_t::boolean: return py::bool_(j.get<bool>());
    case Json::value_t::number_integer: return py::int_(j.get<long long>());
    case Json::value_t::number_unsigned: return py::int_(j.get<unsigned long long>());
    case Json::value_t::number_float: return py::float_(j.get<double>());
    case Json::value_t::string: {
      // Out-of-range integers were serialized as decimal strings; surface
      // them as Python ints again.
      const std::string& s = j.get_ref<const std::string&>();
      if (!s.empty() && (std::isdigit(static_cast<unsigned char>(s[0])) || s[0] == '-') &&
          s.find_first_not_of("-0123456789") == std::string::npos && s != "-") {
        PyObject* v = PyLong_FromString(s.c_str(), nullptr, 10);
        if (v) return py::reinterpret_steal<py::object>(v);
        PyErr_Clear();
      }
      return py::str(s);
    }
    case Json::value_t::array: {
      py::list out;
      for (const Json& e : j) out.append(from_document(e));
      return out;
    }
    case Json::value_t::object: {
      py::dict out;
      for (const auto& [key, value] : j.items()) out[py::str(key)] = from_document(value);
      return out;
    }
    default: throw py::value_error("unsupported document value");
  }
}

braidsurg::SurgeryPresentation presentation_from_any(const Json& j) {
  if (j.is_object() && j.contains("word"))
    return diagram_to_presentation(braidsurg::diagram_from_json(j));
  return braidsurg::presentation_from_json(j);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Braid-positive surgery presentations: Garside positification, Rolfsen "
            "twists, and first-homology verification";

  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const braidsurg::Error& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    }
  });

  m.def(
      "positify",
      [](int strands, const std::vector<int>& word, py::object n, bool minimal) {
        const BraidWord w(strands, word);
        if (minimal)
          return braidsurg::twisted_positive_word(w, braidsurg::minimal_twist_power(w)).letters();
        const long long twists =
            n.is_none() ? braidsurg::negative_letter_count(w) : n.cast<long long>();
        return braidsurg::positify(w, twists).letters();
      },
      py::arg("strands"), py::arg("word"), py::arg("n") = py::none(),
      py::arg("minimal") = false,
      "Positive word equal to (full twist)^n times the given word; n defaults to the "
      "negative letter count, or pass minimal=True for the least sufficient power.");

  m.def(
      "minimal_twist_power",
      [](int strands, const std::vector<int>& word) {
        return braidsurg::minimal_twist_power(BraidWord(strands, word));
      },
      py::arg("strands"), py::arg("word"),
      "Least n >= 0 with (full twist)^n times the word positive.");

  m.def(
      "negative_letter_count",
      [](int strands, const std::vector<int>& word) {
        return braidsurg::negative_letter_count(BraidWord(strands, word));
      },
      py::arg("strands"), py::arg("word"));

  m.def(
      "braids_equal",
      [](int strands, const std::vector<int>& a, const std::vector<int>& b) {
        return braids_equal(BraidWord(strands, a), BraidWord(strands, b));
      },
      py::arg("strands"), py::arg("a"), py::arg("b"),
      "Whether two words represent the same braid group element.");

  m.def(
      "left_normal_form",
      [](int strands, const std::vector<int>& word) {
        return from_document(to_json(left_normal_form(BraidWord(strands, word))));
      },
      py::arg("strands"), py::arg("word"),
      "Left normal form as {'strands', 'infimum', 'factors'}.");

  m.def(
      "closure",
      [](int strands, const std::vector<int>& word) {
        return from_document(to_json(linking_matrix(BraidWord(strands, word))));
      },
      py::arg("strands"), py::arg("word"),
      "Closure components and pairwise linking matrix.");

  m.def(
      "h1",
      [](const py::dict& doc) {
        return from_document(to_json(h1_invariants(presentation_from_any(to_document(doc)))));
      },
      py::arg("presentation"),
      "First homology {'torsion', 'free_rank'} of a surgery presentation or braid "
      "diagram document.");

  m.def(
      "rolfsen_twist",
      [](const py::dict& doc, int component, long long n) {
        const braidsurg::SurgeryPresentation pres =
            braidsurg::presentation_from_json(to_document(doc));
        if (component < 1 || component > pres.size())
          throw py::value_error("component " + std::to_string(component) + " of " +
                                std::to_string(pres.size()) +
                                " (components are numbered from 1)");
        return from_document(to_json(rolfsen_twist(pres, component - 1, n)));
      },
      py::arg("presentation"), py::arg("component"), py::arg("n"),
      "N-fold Rolfsen twist along an unknotted component (numbered from 1).");

  m.def(
      "transform",
      [](const py::dict& doc, const std::string& mode) {
        const auto [out, rep] = braid_positive_surgery(
            braidsurg::diagram_from_json(to_document(doc)), braidsurg::mode_from_name(mode));
        py::dict result;
        result["diagram"] = from_document(to_json(out));
        result["report"] = from_document(to_json(rep));
        return result;
      },
      py::arg("diagram"), py::arg("mode") = "lemma",
      "Braid-positive surgery diagram plus its verification report.");

  m.def(
      "selftest",
      [](std::uint64_t seed, int trials, int max_strands, int max_length,
         const std::string& mode) {
        braidsurg::SelftestConfig config;
        config.seed = seed;
        config.trials = trials;
        config.max_strands = max_strands;
        config.max_length = max_length;
        config.mode = braidsurg::mode_from_name(mode);
        py::list out;
        for (const braidsurg::SuiteResult& r : run_selftest(config)) {
          py::dict suite;
          suite["name"] = r.name;
          suite["checks"] = r.checks;
          suite["failures"] = r.failures;
          suite["detail"] = r.detail;
          out.append(suite);
        }
        return out;
      },
      py::arg("seed") = 1729, py::arg("trials") = 200, py::arg("max_strands") = 6,
      py::arg("max_length") = 24, py::arg("mode") = "lemma",
      "Run the seeded property suites; returns one dict per suite.");
}
