#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "sweedler/linmap.hpp"

namespace sweedler {

/// An associative unital algebra by structure constants: unit is 1 -> dim and
/// mult is dim^2 -> dim. dim >= 1.
struct AlgebraData {
  FieldSpec field;
  std::size_t dim;
  LinMap unit;
  LinMap mult;
  std::vector<std::string> basis;  // labels; defaults to e0, e1, ...

  friend bool operator==(const AlgebraData&, const AlgebraData&) = default;
};

/// A coassociative counital coalgebra: counit is dim -> 1 and comult is
/// dim -> dim^2. dim 0 is allowed.
struct CoalgebraData {
  FieldSpec field;
  std::size_t dim;
  LinMap counit;
  LinMap comult;
  std::vector<std::string> basis;

  friend bool operator==(const CoalgebraData&, const CoalgebraData&) = default;
};

struct BialgebraData {
  AlgebraData alg;
  CoalgebraData coalg;

  FieldSpec field() const { return alg.field; }
  std::size_t dim() const { return alg.dim; }

  friend bool operator==(const BialgebraData&, const BialgebraData&) = default;
};

struct HopfData {
  BialgebraData bialg;
  LinMap antipode;

  friend bool operator==(const HopfData&, const HopfData&) = default;
};

/// The fusion operators h, h' and the opfusion operators h-bar, h-bar' of a
/// bialgebra, all dim^2 -> dim^2:
///   h      = (1 (x) mu) . (Delta (x) 1)
///   h'     = (mu (x) 1) . (1 (x) Delta)
///   h-bar  = (mu (x) 1) . (1 (x) c) . (Delta (x) 1)
///   h-bar' = (1 (x) mu) . (c (x) 1) . (1 (x) Delta)
struct FusionOperators {
  LinMap h;
  LinMap h_prime;
  LinMap h_bar;
  LinMap h_bar_prime;
};

std::vector<std::string> default_labels(std::size_t dim, const std::string& prefix = "e");

/// Checked constructors; they verify shapes and fields only (DimensionMismatch,
/// FieldMismatch), not axioms.
AlgebraData make_algebra(LinMap unit, LinMap mult, std::vector<std::string> basis = {});
CoalgebraData make_coalgebra(LinMap counit, LinMap comult, std::vector<std::string> basis = {});
BialgebraData make_bialgebra(AlgebraData alg, CoalgebraData coalg);
HopfData make_hopf(BialgebraData bialg, LinMap antipode);

/// Structure-constant equality, ignoring basis labels.
bool same_structure(const AlgebraData& a, const AlgebraData& b);
bool same_structure(const CoalgebraData& a, const CoalgebraData& b);

/// One failed axiom with its first failing basis-index witness.
struct AxiomFailure {
  std::string axiom;
  std::vector<std::size_t> witness;
  /// Output basis index at which the two sides differ, when requested.
  std::vector<std::size_t> component;

  friend bool operator==(const AxiomFailure&, const AxiomFailure&) = default;
};

struct ValidationReport {
  std::vector<AxiomFailure> failures;

  bool ok() const noexcept { return failures.empty(); }
  explicit operator bool() const noexcept { return ok(); }
  bool failed(const std::string& axiom) const;
  void merge(const ValidationReport& other);
  std::string summary() const;
};

/// Compares two maps with equal shape; on the first column where they differ
/// records a failure whose witness is that column index unflattened along
/// `factors` (row-major). With `cod_factors`, the first differing row is
/// recorded the same way as the failure's component.
void compare_maps(ValidationReport& report, const std::string& axiom, const LinMap& lhs,
                  const LinMap& rhs, const std::vector<std::size_t>& factors,
                  const std::vector<std::size_t>& cod_factors = {});

}  // namespace sweedler
