#include "braidsurg/pipeline.hpp"

#include <string>
#include <utility>

namespace braidsurg {

void validate(const BraidSurgeryDiagram& d) {
  const Components comp = components(d.word);
  if (static_cast<int>(d.coeffs.size()) != comp.component_count)
    fail(errc::bad_input, std::to_string(d.coeffs.size()) + " coefficients for " +
                              std::to_string(comp.component_count) + " closure components");
  for (const RationalCoeff& c : d.coeffs)
    if (normalize_coeff(c.p, c.q) != c) fail(errc::bad_input, "coefficient not normalized");
  if (d.axis && normalize_coeff(d.axis->p, d.axis->q) != *d.axis)
    fail(errc::bad_input, "axis coefficient not normalized");
}

SurgeryPresentation diagram_to_presentation(const BraidSurgeryDiagram& d) {
  validate(d);
  const ClosureInfo info = linking_matrix(d.word);
  const int m = info.component_count;
  const int total = m + (d.axis ? 1 : 0);

  SurgeryPresentation pres;
  pres.linking.assign(static_cast<std::size_t>(total),
                      std::vector<Int>(static_cast<std::size_t>(total), 0));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      pres.linking[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          info.linking[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  pres.coeffs = d.coeffs;
  pres.unknotted.assign(static_cast<std::size_t>(m), false);
  if (d.axis) {
    const std::vector<int> axis_lk = axis_linking(info);
    for (int j = 0; j < m; ++j) {
      pres.linking[static_cast<std::size_t>(j)][static_cast<std::size_t>(m)] =
          axis_lk[static_cast<std::size_t>(j)];
      pres.linking[static_cast<std::size_t>(m)][static_cast<std::size_t>(j)] =
          axis_lk[static_cast<std::size_t>(j)];
    }
    pres.coeffs.push_back(*d.axis);
    pres.unknotted.push_back(true);
  }
  return pres;
}

long long compute_twist_number(const BraidWord& w, TwistMode mode) {
  const BraidWord reduced = free_reduce(w);
  if (mode == TwistMode::lemma) return negative_letter_count(reduced);
  return minimal_twist_power(reduced);
}

bool h1_equal(const SurgeryPresentation& a, const SurgeryPresentation& b) {
  return h1_invariants(a) == h1_invariants(b);
}

bool linking_law_holds(const SurgeryPresentation& before, const SurgeryPresentation& after,
                       long long n, const std::vector<int>& strand_counts) {
  const int m = before.size();
  const bool has_axis = after.size() == m + 1;
  if (!has_axis && after.size() != m) return false;
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) {
      if (a == b) continue;
      const Int expected =
          before.linking[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] +
          Int(n) * strand_counts[static_cast<std::size_t>(a)] *
              strand_counts[static_cast<std::size_t>(b)];
      if (after.linking[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] != expected)
        return false;
    }
  }
  if (has_axis) {
    for (int j = 0; j < m; ++j) {
      if (after.linking[static_cast<std::size_t>(j)][static_cast<std::size_t>(m)] !=
          strand_counts[static_cast<std::size_t>(j)])
        return false;
      if (after.linking[static_cast<std::size_t>(m)][static_cast<std::size_t>(j)] !=
          strand_counts[static_cast<std::size_t>(j)])
        return false;
    }
  }
  return true;
}

TransformReport verify_transform(const BraidSurgeryDiagram& input,
                                 const BraidSurgeryDiagram& output, long long n_used,
                                 TwistMode mode) {
  TransformReport rep;
  rep.n_used = n_used;
  rep.mode = mode;
  rep.input = input;
  rep.output = output;

  rep.word_positive = is_positive_word(output.word);

  const Components in_comp = components(input.word);
  const Components out_comp = components(output.word);
  const int in_total = in_comp.component_count + (input.axis ? 1 : 0);
  const int out_total = out_comp.component_count + (output.axis ? 1 : 0);
  rep.component_bound_ok =
      out_total <= in_total + 1 && (n_used == 0 ? out_total == in_total : true);

  const SurgeryPresentation before = diagram_to_presentation(input);
  const SurgeryPresentation after = diagram_to_presentation(output);
  rep.h1_before = h1_invariants(before);
  rep.h1_after = h1_invariants(after);
  rep.h1_match = rep.h1_before == rep.h1_after;

  rep.linking_law_ok = linking_law_holds(before, after, n_used, in_comp.strand_counts);

  const BraidWord reduced = free_reduce(input.word);
  const int k = input.word.strands();
  rep.length_law_ok =
      static_cast<long long>(output.word.length()) ==
      exponent_sum(reduced) + n_used * static_cast<long long>(k) * static_cast<long long>(k - 1);

  return rep;
}

std::pair<BraidSurgeryDiagram, TransformReport> braid_positive_surgery(
    const BraidSurgeryDiagram& d, TwistMode mode) {
  validate(d);
  if (d.axis) fail(errc::bad_input, "input diagram already carries an axis component");

  const long long n = compute_twist_number(d.word, mode);
  const BraidWord reduced = free_reduce(d.word);

  BraidSurgeryDiagram out;
  out.coeffs = d.coeffs;
  if (n == 0) {
    // No twist needed. In minimal mode the reduced word can still carry
    // negative letters even though the element is positive; fall back to a
    // positive representative read off the normal form.
    out.word = is_positive_word(reduced) ? reduced : twisted_positive_word(reduced, 0);
  } else {
    out.word = twisted_positive_word(reduced, n);
    const Components comp = components(d.word);
    for (int j = 0; j < comp.component_count; ++j) {
      const std::size_t sj = static_cast<std::size_t>(j);
      const Int s = comp.strand_counts[sj];
      out.coeffs[sj] = normalize_coeff(d.coeffs[sj].p + Int(n) * s * s * d.coeffs[sj].q,
                                       d.coeffs[sj].q);
    }
    out.axis = normalize_coeff(1, n);
  }

  TransformReport rep = verify_transform(d, out, n, mode);
  return {std::move(out), std::move(rep)};
}

}  // namespace braidsurg
