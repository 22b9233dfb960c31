#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "sweedler/errors.hpp"
#include "sweedler/structures.hpp"

namespace sweedler {

// Validation. Failure of an axiom is reported, not thrown. Where a symmetry
// enters (the product on B (x) B, opposite structures, opfusion operators) it
// defaults to swap_map and may be replaced by another symmetry of B (x) B,
// e.g. the Koszul sign swap of a graded space.

ValidationReport validate_algebra(const AlgebraData& a);
ValidationReport validate_coalgebra(const CoalgebraData& c);
ValidationReport validate_bialgebra(const BialgebraData& b,
                                    const std::optional<LinMap>& symmetry = std::nullopt);
ValidationReport validate_hopf(const HopfData& h,
                               const std::optional<LinMap>& symmetry = std::nullopt);

bool is_commutative(const AlgebraData& a);
bool is_cocommutative(const CoalgebraData& c);

/// f : A -> B preserves units and products.
bool is_algebra_morphism(const LinMap& f, const AlgebraData& a, const AlgebraData& b);
/// f : C -> D preserves counits and coproducts.
bool is_coalgebra_morphism(const LinMap& f, const CoalgebraData& c, const CoalgebraData& d);

/// mult . (mult (x) 1) style composites used everywhere.
LinMap tensor_product_mult(const AlgebraData& a, const std::optional<LinMap>& symmetry = std::nullopt);
LinMap tensor_product_comult(const CoalgebraData& c,
                             const std::optional<LinMap>& symmetry = std::nullopt);

// Constructions.

/// The one-dimensional algebra k.
AlgebraData ground_algebra(FieldSpec field);
/// The one-dimensional coalgebra k with its unique grouplike.
CoalgebraData ground_coalgebra(FieldSpec field);
/// The unit bialgebra / Hopf algebra k.
HopfData ground_hopf(FieldSpec field);

/// M_n(B) with basis e_ij (x) b at index (i*n + j)*dim(B) + b.
AlgebraData matrix_algebra(const AlgebraData& b, std::size_t n);

/// k[G] for the group with multiplication table cayley[i][j] = index of g_i g_j.
/// Throws NotAGroup unless the table is associative with identity and inverses.
HopfData group_algebra(FieldSpec field, const std::vector<std::vector<std::size_t>>& cayley,
                       std::vector<std::string> labels = {});

/// Linear duals in the dual basis: structure maps transposed.
CoalgebraData dual_coalgebra(const AlgebraData& a);
AlgebraData dual_algebra(const CoalgebraData& c);

AlgebraData opposite(const AlgebraData& a, const std::optional<LinMap>& symmetry = std::nullopt);
CoalgebraData coopposite(const CoalgebraData& c,
                         const std::optional<LinMap>& symmetry = std::nullopt);

/// The convolution algebra [C, B]. A linear map f : C -> B is the basis
/// element with flattened index b*dim(C) + c of its matrix entry (b, c).
AlgebraData convolution_algebra(const CoalgebraData& c, const AlgebraData& b);
/// Flattens f : C -> B into a vector of the convolution algebra and back.
LinMap flatten_map(const LinMap& f);
LinMap unflatten_map(const LinMap& v, std::size_t cod, std::size_t dom);

// Hopf structure.

/// Throws InvalidBialgebra if b fails validation.
FusionOperators fusion_operators(const BialgebraData& b,
                                 const std::optional<LinMap>& symmetry = std::nullopt);

/// Solves mu . (s (x) 1) . Delta = iota . epsilon for s and verifies the mirror
/// identity. The answer is cross-checked against invertibility of h and h';
/// disagreement throws std::logic_error.
std::optional<HopfData> find_antipode(const BialgebraData& b);

/// Same for the opposite comultiplication; cross-checked against h-bar, h-bar'.
std::optional<LinMap> find_opantipode(const BialgebraData& b,
                                      const std::optional<LinMap>& symmetry = std::nullopt);

// Exhaustive search (prime fields).

/// Explicit candidate box for grouplike search over Q: vectors supported on
/// `axes` with coordinates drawn from `values`.
struct GrouplikeCandidates {
  std::vector<std::size_t> axes;
  std::vector<Scalar> values;
};

/// All x with Delta x = x (x) x and epsilon(x) = 1, as column vectors in
/// lexicographic order of their coordinates. Prime fields only (otherwise
/// UnsupportedField).
std::vector<LinMap> grouplikes(const CoalgebraData& c, std::uint64_t budget = kDefaultBudget);
/// Grouplikes inside the declared candidate box; works over any field.
std::vector<LinMap> grouplikes(const CoalgebraData& c, const GrouplikeCandidates& candidates,
                               std::uint64_t budget = kDefaultBudget);

/// All unit-preserving multiplicative maps A -> B, ordered lexicographically
/// by the tuple of images (f(e_0), f(e_1), ...). Prime fields only.
std::vector<LinMap> algebra_morphisms(const AlgebraData& a, const AlgebraData& b,
                                      std::uint64_t budget = kDefaultBudget);

/// q^exponent, saturating at UINT64_MAX.
std::uint64_t saturating_power(std::uint64_t q, std::uint64_t exponent);

}  // namespace sweedler
