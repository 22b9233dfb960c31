#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sweedler/errors.hpp"
#include "sweedler/measuring.hpp"
#include "sweedler/structures.hpp"

namespace sweedler {

/// A word in the generators, as generator indices; the empty word is 1.
using Word = std::vector<std::size_t>;

/// A noncommutative polynomial; absent words have coefficient zero and stored
/// coefficients are nonzero.
struct Polynomial {
  std::map<Word, Scalar> terms;

  bool is_zero() const { return terms.empty(); }
  void add(const Word& w, const Scalar& c);
  friend bool operator==(const Polynomial&, const Polynomial&) = default;
};

Polynomial operator+(const Polynomial& p, const Polynomial& q);
Polynomial operator*(const Polynomial& p, const Polynomial& q);
Polynomial scaled(const Polynomial& p, const Scalar& c);

/// An algebra given by generators and relations, without normal forms.
struct PresentedAlgebra {
  FieldSpec field;
  std::vector<std::string> generators;
  std::vector<Polynomial> relations;

  friend bool operator==(const PresentedAlgebra&, const PresentedAlgebra&) = default;
};

/// The coefficient x_{i,beta} of delta(e_beta) along a_i: a generator, or a
/// constant once eliminated by delta(1_B) = 1_A (x) 1.
struct TambaraCoordinate {
  std::optional<std::size_t> generator;
  Scalar constant;
};

/// The coendomorphism algebra a(A, B) with its universal coaction
/// delta : B -> A (x) a(A, B).
struct TambaraPresentation {
  AlgebraData a;
  AlgebraData b;
  PresentedAlgebra algebra;
  /// coordinates[i][beta]
  std::vector<std::vector<TambaraCoordinate>> coordinates;
};

/// Generators x_{i,beta} labelled "x_{<a label>,<b label>}". When 1_B is a
/// basis vector its coordinates are eliminated as x_{i,1} = (1_A)_i;
/// otherwise unit relations are kept. Multiplicativity relations that vanish
/// identically are omitted.
TambaraPresentation tambara_presentation(const AlgebraData& a, const AlgebraData& b);

/// Evaluates p on matrices (one n x n matrix per generator).
LinMap evaluate(const Polynomial& p, const std::vector<LinMap>& matrices, std::size_t n);

/// n-dimensional modules of a(A, B), each stored as an n*n x #generators map
/// whose column g is the row-major matrix of generator g.
struct ModuleReport {
  std::uint64_t total_count = 0;
  std::vector<LinMap> modules;     // lexicographic order
  std::vector<PointOrbit> orbits;  // GL_n conjugation classes
};

/// Every assignment of matrices satisfying the relations. Prime fields only.
ModuleReport tambara_modules(const TambaraPresentation& p, std::size_t n,
                             std::uint64_t budget = kDefaultBudget);

/// The algebra morphism B -> M_n(A), beta -> (sum_i X(x_{i,beta})_jl a_i)_jl.
LinMap module_to_morphism(const TambaraPresentation& p, const LinMap& module, std::size_t n);

/// Intertwiners f with f X_g = Y_g f for every generator, in the same
/// flattened echelon form as measuring intertwiners.
std::vector<LinMap> module_intertwiners(const LinMap& x, std::size_t n, const LinMap& y,
                                        std::size_t m);

struct CorrespondenceReport {
  std::size_t n = 0;
  std::uint64_t module_count = 0;
  std::uint64_t morphism_count = 0;
  bool bijective = false;
  std::size_t module_orbits = 0;
  std::size_t morphism_orbits = 0;
  bool orbits_match = false;
  bool intertwiners_match = false;

  bool ok() const {
    return bijective && orbits_match && intertwiners_match && module_count == morphism_count &&
           module_orbits == morphism_orbits;
  }
};

/// Compares n-dimensional a(A, B)-modules with algebra morphisms
/// B -> M_n(A): counts, the canonical identification, orbits, and the
/// intertwiner spaces between orbit representatives.
CorrespondenceReport correspondence_check(const AlgebraData& a, const AlgebraData& b,
                                          std::size_t n, std::uint64_t budget = kDefaultBudget);

}  // namespace sweedler
