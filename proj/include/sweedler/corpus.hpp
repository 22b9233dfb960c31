#pragma once

#include <string>
#include <vector>

#include "sweedler/graded.hpp"
#include "sweedler/structures.hpp"

// Small standard examples shared by the tests, the acceptance suite and the
// fixture documents.
namespace sweedler::corpus {

template <class T>
struct Named {
  std::string name;
  T value;
};

/// k[C_n] with basis g0 = 1, g1, ..., g_{n-1}.
HopfData cyclic_group_algebra(FieldSpec field, std::size_t n);

HopfData rational_c2();  // Q[C2]
HopfData f3_c2();        // F3[C2]
HopfData f2_c3();        // F2[C3]
HopfData trivial(FieldSpec field);

/// Sweedler's four-dimensional Hopf algebra over F3, basis 1, g, x, gx with
/// g^2 = 1, x^2 = 0, xg = -gx, Delta g = g (x) g, Delta x = x (x) 1 + g (x) x.
HopfData sweedler_h4();

/// F2{1, e} with e^2 = e and Delta m = m (x) m on both basis vectors.
BialgebraData idempotent_monoid();

/// F2[g]/(g^2 + 1), basis 1, g.
AlgebraData f2_involution();
/// F2[y]/(y^2), basis 1, y.
AlgebraData f2_dual_numbers();
/// M2(F2).
AlgebraData m2_f2();

/// F2[x]/(x^2) with Delta x = 1 (x) x + x (x) 1, s = id, x in degree deg_x.
GradedHopfData f2_exterior(long deg_x = 1);
/// F2[y]/(y^2) with y in degree deg_y.
GradedAlgebraData f2_dual_numbers_graded(long deg_y);

/// The bialgebras used for antipode and fusion checks.
std::vector<Named<BialgebraData>> bialgebras();
/// The Hopf algebras among them.
std::vector<Named<HopfData>> hopf_algebras();
/// Every algebra of the corpus.
std::vector<Named<AlgebraData>> algebras();
/// Nonnegatively graded algebras.
std::vector<Named<GradedAlgebraData>> graded_algebras();

}  // namespace sweedler::corpus
