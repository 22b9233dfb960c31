#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <variant>
#include <vector>

#include "sweedler/detail/ring.hpp"
#include "sweedler/field.hpp"
#include "sweedler/scalar.hpp"

namespace sweedler {

/// A linear map k^dom -> k^cod stored as a dense cod x dom matrix.
///
/// Tensor products of based spaces are flattened row-major throughout the
/// library: e_i (x) e_j in k^m (x) k^n has index i*n + j. Zero-dimensional
/// domains and codomains are allowed.
class LinMap {
 public:
  using ResidueStore = std::vector<std::uint32_t>;
  using RationalStore = std::vector<mpq_class>;

  /// The zero map.
  LinMap(FieldSpec field, std::size_t cod, std::size_t dom);

  static LinMap identity(FieldSpec field, std::size_t n);
  /// Entries given row-major, reduced into the field.
  static LinMap from_ints(FieldSpec field, std::size_t cod, std::size_t dom,
                          const std::vector<long>& row_major);
  static LinMap from_scalars(FieldSpec field, std::size_t cod, std::size_t dom,
                             const std::vector<Scalar>& row_major);
  /// A column vector (dom = 1).
  static LinMap column_vector(FieldSpec field, const std::vector<Scalar>& entries);
  /// The column vector e_i in k^n.
  static LinMap basis_vector(FieldSpec field, std::size_t n, std::size_t i);
  /// Place the given columns side by side; each must have cod rows.
  static LinMap from_columns(FieldSpec field, std::size_t cod, const std::vector<LinMap>& columns);

  FieldSpec field() const noexcept { return field_; }
  std::size_t cod() const noexcept { return cod_; }
  std::size_t dom() const noexcept { return dom_; }

  Scalar at(std::size_t row, std::size_t col) const;
  void set(std::size_t row, std::size_t col, const Scalar& value);
  /// Adds value to the entry; value must belong to the map's field.
  void add_to(std::size_t row, std::size_t col, const Scalar& value);

  bool is_zero() const;
  bool is_identity() const;
  bool is_zero_column(std::size_t col) const;

  std::vector<Scalar> column(std::size_t col) const;
  LinMap column_map(std::size_t col) const;
  /// Columns [first, first + count) as a map.
  LinMap columns(std::size_t first, std::size_t count) const;
  LinMap transpose() const;

  LinMap& operator+=(const LinMap& o);
  LinMap& operator-=(const LinMap& o);
  friend LinMap operator+(LinMap a, const LinMap& b) { return a += b; }
  friend LinMap operator-(LinMap a, const LinMap& b) { return a -= b; }
  LinMap scaled(const Scalar& s) const;

  friend bool operator==(const LinMap& a, const LinMap& b);

  /// Row-major flattening of the entries as residues; prime fields only.
  const ResidueStore& residues() const { return std::get<ResidueStore>(data_); }
  ResidueStore& residues() { return std::get<ResidueStore>(data_); }
  const RationalStore& rationals() const { return std::get<RationalStore>(data_); }
  RationalStore& rationals() { return std::get<RationalStore>(data_); }

  /// Calls fn(ring, store) with the arithmetic back end matching the field.
  template <class Fn>
  decltype(auto) visit(Fn&& fn) const {
    if (field_.is_prime()) return fn(detail::ModRing{field_.characteristic()}, residues());
    return fn(detail::RatRing{}, rationals());
  }
  template <class Fn>
  decltype(auto) visit(Fn&& fn) {
    if (field_.is_prime()) return fn(detail::ModRing{field_.characteristic()}, residues());
    return fn(detail::RatRing{}, rationals());
  }

 private:
  void check_index(std::size_t row, std::size_t col) const;

  FieldSpec field_;
  std::size_t cod_;
  std::size_t dom_;
  std::variant<ResidueStore, RationalStore> data_;
};

std::ostream& operator<<(std::ostream& os, const LinMap& m);

/// f . g; requires g.cod() == f.dom().
LinMap compose(const LinMap& f, const LinMap& g);

template <class... Rest>
LinMap compose(const LinMap& f, const LinMap& g, const Rest&... rest) {
  return compose(f, compose(g, rest...));
}

/// Kronecker product f (x) g under the row-major index convention.
LinMap kron(const LinMap& f, const LinMap& g);

template <class... Rest>
LinMap kron(const LinMap& f, const LinMap& g, const Rest&... rest) {
  return kron(kron(f, g), rest...);
}

/// The symmetry k^m (x) k^n -> k^n (x) k^m, e_i (x) e_j -> e_j (x) e_i.
LinMap swap_map(std::size_t m, std::size_t n, FieldSpec field);

/// Direct sum f (+) g as a block-diagonal map.
LinMap direct_sum(const LinMap& f, const LinMap& g);

}  // namespace sweedler
