#pragma once

#include <cstdint>
#include <vector>

#include "sweedler/errors.hpp"
#include "sweedler/measuring.hpp"
#include "sweedler/structures.hpp"

namespace sweedler {

/// A based space with an integer degree on every basis vector.
struct GradedSpace {
  FieldSpec field;
  std::vector<long> degrees;

  std::size_t dim() const noexcept { return degrees.size(); }
  friend bool operator==(const GradedSpace&, const GradedSpace&) = default;
};

/// Degrees of V (x) W in the row-major basis: deg(i) + deg(j).
GradedSpace tensor(const GradedSpace& v, const GradedSpace& w);

/// e_i (x) e_j -> (-1)^(deg i * deg j) e_j (x) e_i.
LinMap koszul_swap(const GradedSpace& v, const GradedSpace& w);

struct GradedAlgebraData {
  AlgebraData alg;
  GradedSpace space;
};
struct GradedCoalgebraData {
  CoalgebraData coalg;
  GradedSpace space;
};
struct GradedBialgebraData {
  BialgebraData bialg;
  GradedSpace space;
};
struct GradedHopfData {
  HopfData hopf;
  GradedSpace space;
};

/// Attaches degrees; DimensionMismatch or FieldMismatch if they do not fit.
GradedAlgebraData make_graded(AlgebraData a, std::vector<long> degrees);
GradedCoalgebraData make_graded(CoalgebraData c, std::vector<long> degrees);
GradedBialgebraData make_graded(BialgebraData b, std::vector<long> degrees);
GradedHopfData make_graded(HopfData h, std::vector<long> degrees);

/// Records "<name> homogeneous" with the first offending column (unflattened
/// along dom_factors) when f : V -> W sends some basis vector outside the
/// component of its degree.
void check_homogeneous(ValidationReport& report, const std::string& name, const LinMap& f,
                       const GradedSpace& dom, const GradedSpace& cod,
                       const std::vector<std::size_t>& dom_factors);

/// Homogeneity of every structure map plus the ungraded axioms, with the
/// Koszul swap as the symmetry of the bialgebra compatibility.
ValidationReport validate_graded(const GradedAlgebraData& a);
ValidationReport validate_graded(const GradedCoalgebraData& c);
ValidationReport validate_graded(const GradedBialgebraData& b);
ValidationReport validate_graded(const GradedHopfData& h);

/// Degrees negated; structure maps transposed in the dual basis.
GradedSpace graded_dual(const GradedSpace& v);
GradedCoalgebraData graded_dual(const GradedAlgebraData& a);
GradedAlgebraData graded_dual(const GradedCoalgebraData& c);

/// Exactly one basis vector in degree 0. Throws NegativeDegree.
bool is_connected(const GradedSpace& v);

/// Degree-preserving algebra morphisms, exhaustively. Prime fields only.
std::vector<LinMap> graded_algebra_morphisms(const GradedAlgebraData& a, const GradedAlgebraData& b,
                                             std::uint64_t budget = kDefaultBudget);

/// The subalgebra spanned by the degree-0 basis vectors. Throws NotClosed if
/// it does not contain the unit or is not closed under mult.
AlgebraData degree0_part(const GradedAlgebraData& a);
/// Concentrates an ungraded structure in degree 0.
GradedAlgebraData include_degree0(const AlgebraData& a);
GradedHopfData include_degree0(const HopfData& h);

/// Hom(X, Y) with basis E_yx at index y*dim(X) + x in degree deg y - deg x.
GradedSpace hom_space(const GradedSpace& x, const GradedSpace& y);
/// The comparison X* (x) Y -> Hom(X, Y), e^x (x) e_y -> E_yx.
LinMap dual_comparison_map(const GradedSpace& x, const GradedSpace& y);

/// A measuring whose spaces carry degrees.
struct GradedMeasuring {
  Measuring m;
  GradedSpace a_space;
  GradedSpace b_space;
  GradedSpace x_space;
};

/// Homogeneity of psi ("psi homogeneous") plus the ungraded diagrams.
ValidationReport validate_graded(const GradedMeasuring& m);

/// The tensor product of measurings with Koszul swaps in place of the plain
/// ones; B must be graded commutative.
GradedMeasuring graded_tensor_measuring(const GradedMeasuring& m1, const GradedMeasuring& m2,
                                        const GradedBialgebraData& h);

}  // namespace sweedler
