#include "braidsurg/surgery.hpp"

#include <algorithm>
#include <string>
#include <utility>

namespace braidsurg {

namespace mp = boost::multiprecision;

RationalCoeff normalize_coeff(Int p, Int q) {
  if (p == 0 && q == 0) fail(errc::zero_zero_coefficient, "coefficient 0/0 is not a slope");
  if (q == 0) return RationalCoeff{1, 0};
  const Int g = mp::gcd(mp::abs(p), mp::abs(q));
  p /= g;
  q /= g;
  if (q < 0) {
    p = -p;
    q = -q;
  }
  return RationalCoeff{std::move(p), std::move(q)};
}

void validate(const SurgeryPresentation& pres) {
  const std::size_t m = pres.coeffs.size();
  if (pres.linking.size() != m || pres.unknotted.size() != m)
    fail(errc::bad_input, "presentation field sizes disagree");
  for (std::size_t i = 0; i < m; ++i) {
    if (pres.linking[i].size() != m) fail(errc::bad_input, "linking matrix is not square");
    if (pres.linking[i][i] != 0) fail(errc::bad_input, "linking diagonal must be zero");
    for (std::size_t j = 0; j < m; ++j)
      if (pres.linking[i][j] != pres.linking[j][i])
        fail(errc::bad_input, "linking matrix must be symmetric");
  }
  for (const RationalCoeff& c : pres.coeffs) {
    if (c.p == 0 && c.q == 0) fail(errc::zero_zero_coefficient, "coefficient 0/0");
    if (normalize_coeff(c.p, c.q) != c)
      fail(errc::bad_input, "coefficient not in lowest terms with q >= 0");
  }
}

SurgeryPresentation rolfsen_twist(const SurgeryPresentation& pres, int u, long long n) {
  const int m = pres.size();
  if (u < 0 || u >= m) fail(errc::index_out_of_range, "component " + std::to_string(u));
  if (!pres.unknotted[static_cast<std::size_t>(u)])
    fail(errc::not_certified_unknotted,
         "component " + std::to_string(u) + " is not certified unknotted");

  SurgeryPresentation out = pres;
  const std::size_t su = static_cast<std::size_t>(u);
  const RationalCoeff& cu = pres.coeffs[su];
  out.coeffs[su] = normalize_coeff(cu.p, n * cu.p + cu.q);
  for (int j = 0; j < m; ++j) {
    if (j == u) continue;
    const std::size_t sj = static_cast<std::size_t>(j);
    const Int lk = pres.linking[sj][su];
    const RationalCoeff& cj = pres.coeffs[sj];
    out.coeffs[sj] = normalize_coeff(cj.p + n * lk * lk * cj.q, cj.q);
  }
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      if (i == j || i == u || j == u) continue;
      const std::size_t si = static_cast<std::size_t>(i), sj = static_cast<std::size_t>(j);
      out.linking[si][sj] = pres.linking[si][sj] + n * pres.linking[si][su] * pres.linking[sj][su];
    }
  }
  return out;
}

SurgeryPresentation remove_infinity_component(const SurgeryPresentation& pres, int u) {
  const int m = pres.size();
  if (u < 0 || u >= m) fail(errc::index_out_of_range, "component " + std::to_string(u));
  if (!pres.coeffs[static_cast<std::size_t>(u)].is_infinity())
    fail(errc::not_infinity_framed, "component " + std::to_string(u) + " is not 1/0-framed");

  SurgeryPresentation out;
  for (int i = 0; i < m; ++i) {
    if (i == u) continue;
    const std::size_t si = static_cast<std::size_t>(i);
    out.coeffs.push_back(pres.coeffs[si]);
    out.unknotted.push_back(pres.unknotted[si]);
    std::vector<Int> row;
    for (int j = 0; j < m; ++j)
      if (j != u) row.push_back(pres.linking[si][static_cast<std::size_t>(j)]);
    out.linking.push_back(std::move(row));
  }
  return out;
}

IntMatrix h1_matrix(const SurgeryPresentation& pres) {
  const int m = pres.size();
  IntMatrix r(static_cast<std::size_t>(m), std::vector<Int>(static_cast<std::size_t>(m), 0));
  for (int i = 0; i < m; ++i) {
    const std::size_t si = static_cast<std::size_t>(i);
    r[si][si] = pres.coeffs[si].p;
    for (int j = 0; j < m; ++j) {
      if (j == i) continue;
      r[si][static_cast<std::size_t>(j)] =
          pres.coeffs[si].q * pres.linking[si][static_cast<std::size_t>(j)];
    }
  }
  return r;
}

namespace {

struct SnfState {
  IntMatrix a;
  int rows = 0;
  int cols = 0;

  Int& at(int i, int j) { return a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; }

  bool pivot_is_lone(int t) {
    for (int i = t + 1; i < rows; ++i)
      if (at(i, t) != 0) return false;
    for (int j = t + 1; j < cols; ++j)
      if (at(t, j) != 0) return false;
    return true;
  }

  // Smallest-nonzero-magnitude entry of the (t,t) block, if any.
  bool find_pivot(int t, int& pi, int& pj) {
    bool found = false;
    Int best = 0;
    for (int i = t; i < rows; ++i) {
      for (int j = t; j < cols; ++j) {
        if (at(i, j) == 0) continue;
        Int av = mp::abs(at(i, j));
        if (!found || av < best) {
          found = true;
          best = std::move(av);
          pi = i;
          pj = j;
        }
      }
    }
    return found;
  }

  void move_to_corner(int t, int pi, int pj) {
    std::swap(a[static_cast<std::size_t>(t)], a[static_cast<std::size_t>(pi)]);
    if (pj != t)
      for (auto& row : a)
        std::swap(row[static_cast<std::size_t>(t)], row[static_cast<std::size_t>(pj)]);
  }

  // Euclidean sweeps until row t and column t vanish beyond the pivot; each
  // surviving remainder is strictly smaller than the pivot it replaces.
  void clear_cross(int t) {
    while (!pivot_is_lone(t)) {
      for (int i = t + 1; i < rows; ++i) {
        const Int f = at(i, t) / at(t, t);
        if (f == 0) continue;
        for (int j = t; j < cols; ++j) at(i, j) -= f * at(t, j);
      }
      for (int j = t + 1; j < cols; ++j) {
        const Int f = at(t, j) / at(t, t);
        if (f == 0) continue;
        for (int i = t; i < rows; ++i) at(i, j) -= f * at(i, t);
      }
      int pi = 0, pj = 0;
      if (!find_pivot(t, pi, pj)) break;
      move_to_corner(t, pi, pj);
    }
  }
};

}  // namespace

SmithResult smith_normal_form(IntMatrix m) {
  SnfState st;
  st.rows = static_cast<int>(m.size());
  st.cols = st.rows == 0 ? 0 : static_cast<int>(m[0].size());
  for (const auto& row : m)
    if (static_cast<int>(row.size()) != st.cols) fail(errc::bad_input, "ragged matrix");
  st.a = std::move(m);

  SmithResult res;
  res.rows = st.rows;
  res.cols = st.cols;

  const int bound = std::min(st.rows, st.cols);
  for (int t = 0; t < bound; ++t) {
    int pi = 0, pj = 0;
    if (!st.find_pivot(t, pi, pj)) break;
    st.move_to_corner(t, pi, pj);
    st.clear_cross(t);

    // Divisibility fixup: fold an offending row into row t and re-reduce;
    // the pivot magnitude strictly shrinks, so this settles.
    for (;;) {
      int oi = 0;
      bool offending = false;
      for (int i = t + 1; i < st.rows && !offending; ++i)
        for (int j = t + 1; j < st.cols && !offending; ++j)
          if (st.at(i, j) % st.at(t, t) != 0) {
            oi = i;
            offending = true;
          }
      if (!offending) break;
      for (int c = t; c < st.cols; ++c) st.at(t, c) += st.at(oi, c);
      st.clear_cross(t);
    }

    Int d = st.at(t, t);
    if (d < 0) d = -d;
    res.invariant_factors.push_back(std::move(d));
    ++res.rank;
  }
  return res;
}

HomologyInvariants cokernel_invariants(const SmithResult& snf, int generators) {
  HomologyInvariants out;
  for (const Int& d : snf.invariant_factors)
    if (d > 1) out.torsion.push_back(d);
  out.free_rank = generators - snf.rank;
  return out;
}

HomologyInvariants h1_invariants(const SurgeryPresentation& pres) {
  return cokernel_invariants(smith_normal_form(h1_matrix(pres)), pres.size());
}

}  // namespace braidsurg
