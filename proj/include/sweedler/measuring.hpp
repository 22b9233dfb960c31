#pragma once

#include <cstdint>
#include <vector>

#include "sweedler/errors.hpp"
#include "sweedler/structures.hpp"

namespace sweedler {

/// A measuring psi : A (x) X -> X (x) B on the based space X = k^xdim.
/// Domain index a*xdim + x, codomain index x*dim(B) + b.
struct Measuring {
  AlgebraData a;
  AlgebraData b;
  std::size_t xdim = 0;
  LinMap psi{FieldSpec::rationals(), 0, 0};

  friend bool operator==(const Measuring&, const Measuring&) = default;
};

/// Checks shapes and fields only.
Measuring make_measuring(AlgebraData a, AlgebraData b, std::size_t xdim, LinMap psi);

/// Failures are reported as "measuring multiplicative" (witness a, a', x) and
/// "measuring unital" (witness x).
ValidationReport validate_measuring(const Measuring& m);

/// rho : A -> M_n(B) as a map dim(A) -> n*n*dim(B) in the basis of
/// matrix_algebra. The measuring is psi(a (x) e_j) = sum_i e_i (x) rho(a)_ij.
/// Throws NotAMorphism unless rho is an algebra morphism.
Measuring measuring_from_matrix_morphism(const LinMap& rho, const AlgebraData& a,
                                         const AlgebraData& b, std::size_t n);
LinMap matrix_morphism_from_measuring(const Measuring& m);

/// f : X -> Y intertwines when (f (x) 1_B) . psi_X = psi_Y . (1_A (x) f).
bool is_intertwiner(const LinMap& f, const Measuring& source, const Measuring& target);
/// Basis of the intertwiner space, in reduced echelon form of the flattened
/// maps (entry (y, x) at index y*dim(X) + x). Throws IncompatibleMeasurings
/// unless both measurings share A and B.
std::vector<LinMap> intertwiners(const Measuring& source, const Measuring& target);

// Orbits under conjugation.

/// Every invertible n x n matrix over a prime field, in lexicographic order of
/// the row-major entries.
std::vector<LinMap> general_linear_group(FieldSpec field, std::size_t n,
                                         std::uint64_t budget = kDefaultBudget);

/// Column-wise lexicographic order: images of e_0 first, then e_1, ...
bool lex_less(const LinMap& f, const LinMap& g);

struct PointOrbit {
  LinMap representative;
  std::uint64_t size;
};

/// Partitions points (maps into k^(n*n*entry_dim), read as tuples of n x n
/// matrices with entries in a space of dimension entry_dim) into orbits of
/// simultaneous conjugation X -> M X M^-1, M in GL_n. Every conjugate of a
/// point must be a point. Representatives are lex_less-minimal; orbits are
/// listed in order of their representatives.
std::vector<PointOrbit> conjugation_orbits(std::vector<LinMap> points, std::size_t n,
                                           std::size_t entry_dim,
                                           std::uint64_t budget = kDefaultBudget);

/// The action of M on such tuples: kron(M, transpose(M^-1), id_entry_dim).
LinMap conjugation_operator(const LinMap& m, std::size_t entry_dim);

struct Orbit {
  Measuring representative;
  std::uint64_t size;
};

struct OrbitReport {
  std::uint64_t total_count = 0;
  std::vector<Orbit> orbits;
};

/// All n-dimensional measurings A -> B (via algebra morphisms A -> M_n(B)),
/// grouped into GL_n orbits. Prime fields only.
OrbitReport enumerate_measurings(const AlgebraData& a, const AlgebraData& b, std::size_t n,
                                 std::uint64_t budget = kDefaultBudget);

// Tensor products and composition.

/// The measuring of H on X (x) Y, psi = (1 (x) 1 (x) mu_B) . (1 (x) c (x) 1) .
/// (psi1 (x) psi2) . (1 (x) c (x) 1) . (Delta (x) 1 (x) 1). B must be
/// commutative (NotCommutative).
Measuring tensor_measuring_bialgebra(const Measuring& m1, const Measuring& m2,
                                     const BialgebraData& h);

/// The one-dimensional measuring iota_B . epsilon_H.
Measuring unit_measuring(const BialgebraData& h, const AlgebraData& b);

/// The one-dimensional measuring A (x) k -> k (x) A, psi = id_A.
Measuring identity_measuring(const AlgebraData& a);

/// For measurings A -> A: (X (x) psi2) . (psi1 (x) Y) on X (x) Y.
Measuring tensor_measuring_endo(const Measuring& m1, const Measuring& m2);

/// Measurings A -> B on X and B -> C on Y give A -> C on X (x) Y via
/// (X (x) psi_bc) . (psi_ab (x) Y).
Measuring compose_measuring(const Measuring& m_ab, const Measuring& m_bc);

/// psi . (u (x) 1) for an algebra morphism u : A' -> A.
Measuring restrict_measuring(const AlgebraData& a_prime, const LinMap& u, const Measuring& m);
/// (1 (x) v) . psi for an algebra morphism v : B -> B'.
Measuring corestrict_measuring(const Measuring& m, const LinMap& v, const AlgebraData& b_prime);

namespace detail {

/// Braidings used by the bialgebra tensor product; the defaults are plain
/// swaps. c_ax : A (x) X -> X (x) A, c_by : B (x) Y -> Y (x) B and
/// c_bb : B (x) B -> B (x) B (for the commutativity check).
struct MeasuringBraidings {
  LinMap c_ax;
  LinMap c_by;
  LinMap c_bb;
};

Measuring tensor_measuring_braided(const Measuring& m1, const Measuring& m2,
                                   const BialgebraData& h, const MeasuringBraidings& c);

}  // namespace detail

}  // namespace sweedler
