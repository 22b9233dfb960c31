#pragma once

#include <cstddef>
#include <optional>
#include <variant>
#include <vector>

#include "sweedler/linmap.hpp"

namespace sweedler {

/// Reduced row echelon form. Pivots are chosen leftmost-first; pivot rows are
/// normalised to a leading 1 and cleared above and below.
struct Echelon {
  LinMap reduced;
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

Echelon row_echelon(const LinMap& m);
std::size_t rank(const LinMap& m);

/// Basis of ker f. The vectors are the rows of the reduced row echelon form of
/// the kernel, so the result only depends on the subspace.
std::vector<std::vector<Scalar>> kernel_basis(const LinMap& f);
/// Same basis, as the columns of a dom x k map.
LinMap kernel_matrix(const LinMap& f);

/// Two-sided inverse; throws Singular (carrying the rank) otherwise.
LinMap invert(const LinMap& f);
bool is_invertible(const LinMap& f);

/// Some x with a . x = b (free variables set to zero), or nullopt.
std::optional<LinMap> solve(const LinMap& a, const LinMap& b);

/// A subspace of k^width grown one vector at a time and kept in reduced row
/// echelon form.
class RowSpace {
 public:
  RowSpace(FieldSpec field, std::size_t width);

  FieldSpec field() const noexcept { return field_; }
  std::size_t width() const noexcept { return width_; }
  std::size_t dim() const;

  /// Inserts every column of v (v.cod() == width). Returns true if the
  /// subspace grew.
  bool insert_columns(const LinMap& v);
  bool contains(const LinMap& column) const;
  /// The canonical residue of each column of v modulo the subspace.
  LinMap reduce(const LinMap& v) const;

  /// Basis rows in reduced row echelon form (dim x width).
  LinMap basis() const;
  std::vector<std::size_t> pivots() const;

 private:
  template <class Ring>
  struct Impl {
    Ring ring;
    std::vector<std::vector<typename Ring::Elem>> rows;
    std::vector<std::size_t> pivots;
  };

  FieldSpec field_;
  std::size_t width_;
  std::variant<Impl<detail::ModRing>, Impl<detail::RatRing>> impl_;
};

}  // namespace sweedler
