#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

#include "braidsurg/errors.hpp"

namespace braidsurg {

// Exact integers throughout the surgery calculus: twist bookkeeping and
// Smith reduction blow entries past any fixed width.
using Int = boost::multiprecision::cpp_int;
using IntMatrix = std::vector<std::vector<Int>>;

// Surgery coefficient p/q in lowest terms with q >= 0; 1/0 is the unique
// form of infinity. Measured with respect to the Seifert framing.
struct RationalCoeff {
  Int p = 0;
  Int q = 1;

  bool is_infinity() const { return q == 0; }
  friend bool operator==(const RationalCoeff&, const RationalCoeff&) = default;
};

RationalCoeff normalize_coeff(Int p, Int q);

// Abstract shadow of a surgery diagram: the linking matrix, the coefficient
// of each component, and a caller-certified unknottedness flag per component
// (unknottedness is not decidable from linking data alone).
struct SurgeryPresentation {
  IntMatrix linking;                  // m x m, symmetric, zero diagonal
  std::vector<RationalCoeff> coeffs;  // size m
  std::vector<bool> unknotted;        // size m

  int size() const { return static_cast<int>(coeffs.size()); }
  friend bool operator==(const SurgeryPresentation&, const SurgeryPresentation&) = default;
};

// Throws on dimension mismatch, asymmetry, nonzero diagonal, or a coefficient
// not in normal form.
void validate(const SurgeryPresentation& pres);

// N-fold Rolfsen twist along the (certified unknotted) component u, for any
// integer n; n = 1 is one right-handed full twist. Coefficients change as
//   u:        p/q -> 1/(n + q/p), in lowest terms p/(n p + q)
//   j != u:   p_j/q_j -> p_j/q_j + n lk(j,u)^2
// and the linking matrix picks up n lk(i,u) lk(j,u) off the twisted row.
SurgeryPresentation rolfsen_twist(const SurgeryPresentation& pres, int u, long long n);

// Deletes a component carrying the coefficient 1/0; the surgered manifold is
// unchanged.
SurgeryPresentation remove_infinity_component(const SurgeryPresentation& pres, int u);

// Relation matrix presenting the first homology on the meridian generators:
// row i is p_i mu_i + q_i sum_j lk(i,j) mu_j = 0.
IntMatrix h1_matrix(const SurgeryPresentation& pres);

struct SmithResult {
  std::vector<Int> invariant_factors;  // d_1 | d_2 | ..., all >= 1, rank many
  int rank = 0;
  int rows = 0;
  int cols = 0;
};

// Exact integer diagonalization by row/column operations; pivot choice is
// the smallest nonzero magnitude in the remaining block.
SmithResult smith_normal_form(IntMatrix m);

// First homology in canonical form: invariant factors > 1 plus the free rank.
struct HomologyInvariants {
  std::vector<Int> torsion;
  int free_rank = 0;

  friend bool operator==(const HomologyInvariants&, const HomologyInvariants&) = default;
};

// Cokernel of the matrix on `generators` generators (matrix rows are
// relations): torsion keeps the factors > 1, free rank is generators - rank.
HomologyInvariants cokernel_invariants(const SmithResult& snf, int generators);

HomologyInvariants h1_invariants(const SurgeryPresentation& pres);

}  // namespace braidsurg
