#pragma once

#include <vector>

#include "sweedler/measuring.hpp"
#include "sweedler/structures.hpp"

namespace sweedler {

/// The comatrix coalgebra on X* (x) X: basis f_ij at index i*xdim + j,
/// Delta f_ij = sum_k f_ik (x) f_kj, epsilon f_ij = delta_ij.
CoalgebraData coend_coalgebra(std::size_t xdim, FieldSpec field);

/// delta : X -> X (x) C is coassociative and counital.
bool is_comodule(const LinMap& delta, const CoalgebraData& c);

/// The coalgebra morphism coend(X) -> C with delta(e_j) = sum_i e_i (x) phi(f_ij).
/// Throws NotAComodule.
LinMap comodule_to_coend_morphism(const LinMap& delta, const CoalgebraData& c);
/// Inverse construction. Throws NotAMorphism unless phi is a coalgebra
/// morphism coend(X) -> C.
LinMap comodule_from_coend_morphism(const LinMap& phi, std::size_t xdim, const CoalgebraData& c);

/// The pairing A (x) coend(X) -> B of a measuring, f_ij -> rho(a)_ij.
LinMap coend_pairing(const Measuring& m);

/// An intertwiner between generators `source` and `target` of a reconstruct call.
struct IndexedIntertwiner {
  std::size_t source;
  std::size_t target;
  LinMap map;
};

/// A finite-dimensional subcoalgebra D of the universal measuring coalgebra,
/// generated by a family of measurings.
struct GeneratedSubcoalgebra {
  AlgebraData a;
  AlgebraData b;
  CoalgebraData d;
  /// beta : A (x) D -> B, domain index a*dim(D) + d.
  LinMap pairing;
  /// coend(X_i) -> D for each generator.
  std::vector<LinMap> projections;
  std::vector<Measuring> generators;
  /// Positions in the concatenated coend bases that form the basis of D.
  std::vector<std::size_t> quotient_basis;

  friend bool operator==(const GeneratedSubcoalgebra&, const GeneratedSubcoalgebra&) = default;
};

/// D is the quotient of the direct sum of the coend(X_i) by the relations
/// induced by intertwiners. With auto_intertwiners a basis of every Hom space
/// between every ordered pair of generators is used, in addition to `extra`.
/// The induced structure and every invariant are verified before returning;
/// failures throw InducedStructureIllDefined. Throws IncompatibleMeasurings if
/// the generators do not share A and B, and NotAMorphism for an `extra` map
/// that does not intertwine.
GeneratedSubcoalgebra reconstruct(const std::vector<Measuring>& measurings,
                                  bool auto_intertwiners = true,
                                  const std::vector<IndexedIntertwiner>& extra = {});
/// For an empty family the algebras cannot be inferred.
GeneratedSubcoalgebra reconstruct_empty(const AlgebraData& a, const AlgebraData& b);

/// Coalgebra axioms for D; beta multiplicative and unital ("pairing
/// multiplicative", "pairing unital"); each projection a coalgebra morphism
/// ("projection comultiplicative", "projection counital") that transports the
/// generator's pairing ("projection pairing").
ValidationReport verify_generated(const GeneratedSubcoalgebra& g);

/// The D-comodule structure on generator i induced by its projection.
LinMap induced_comodule(const GeneratedSubcoalgebra& g, std::size_t i);
/// (1 (x) beta) . (c (x) 1) . (1 (x) delta_i) reproduces psi_i.
bool verify_universal_factorization(const GeneratedSubcoalgebra& g, std::size_t i);

/// For B = k: the map D -> A* with entries beta(a (x) d). Throws
/// PreconditionViolated unless dim(B) = 1.
LinMap pairing_map_to_dual(const GeneratedSubcoalgebra& g);

/// The linear dual of A with comultiplication transpose(mult).
CoalgebraData finite_dual(const AlgebraData& a);

/// Generator `product` of g12 is the tensor measuring of generator `left` of
/// g1 with generator `right` of g2.
struct GeneratorTriple {
  std::size_t left;
  std::size_t right;
  std::size_t product;
};

/// The coalgebra morphism D1 (x) D2 -> D12 induced by
/// coend(X) (x) coend(Y) -> coend(X (x) Y). Requires the triples to cover
/// every pair of generators that contributes a basis vector and to agree on
/// overlaps; otherwise PreconditionViolated.
LinMap product_on_generated(const BialgebraData& h, const GeneratedSubcoalgebra& g1,
                            const GeneratedSubcoalgebra& g2, const GeneratedSubcoalgebra& g12,
                            const std::vector<GeneratorTriple>& triples);

/// The coalgebra C1 (x) C2 with (1 (x) swap (x) 1) . (Delta1 (x) Delta2).
CoalgebraData tensor_coalgebra(const CoalgebraData& c1, const CoalgebraData& c2);

/// The dual Hopf algebra of h (mult = transpose(Delta), comult =
/// transpose(mu), antipode = transpose(s)), after checking that it validates
/// and that find_antipode recovers transpose(s). Throws InvalidHopf for an
/// invalid input.
HopfData dual_hopf_check(const HopfData& h);

}  // namespace sweedler
