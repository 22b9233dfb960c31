#include "sweedler/linalg.hpp"

#include <algorithm>

#include "sweedler/errors.hpp"

namespace sweedler {

namespace {

// In-place RREF of a rows x cols row-major block; returns pivot columns.
template <class Ring, class Store>
std::vector<std::size_t> rref_in_place(const Ring& ring, Store& a, std::size_t rows,
                                       std::size_t cols, std::size_t pivot_limit) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < pivot_limit && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && ring.is_zero(a[p * cols + c])) ++p;
    if (p == rows) continue;
    if (p != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(a[p * cols + j], a[r * cols + j]);
    const auto inv = ring.inv(a[r * cols + c]);
    for (std::size_t j = c; j < cols; ++j) a[r * cols + j] = ring.mul(a[r * cols + j], inv);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || ring.is_zero(a[i * cols + c])) continue;
      const auto factor = a[i * cols + c];
      for (std::size_t j = c; j < cols; ++j)
        a[i * cols + j] = ring.sub(a[i * cols + j], ring.mul(factor, a[r * cols + j]));
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

Echelon row_echelon(const LinMap& m) {
  LinMap reduced = m;
  std::vector<std::size_t> pivots = reduced.visit([&](const auto& ring, auto& store) {
    return rref_in_place(ring, store, m.cod(), m.dom(), m.dom());
  });
  return {std::move(reduced), std::move(pivots)};
}

std::size_t rank(const LinMap& m) { return row_echelon(m).pivots.size(); }

LinMap kernel_matrix(const LinMap& f) {
  const auto [reduced, pivots] = row_echelon(f);
  const std::size_t n = f.dom();
  std::vector<bool> is_pivot(n, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::size_t> free;
  for (std::size_t c = 0; c < n; ++c)
    if (!is_pivot[c]) free.push_back(c);

  // Standard null vectors, one per free column, as rows of a k x n matrix.
  LinMap null_rows(f.field(), free.size(), n);
  for (std::size_t k = 0; k < free.size(); ++k) {
    null_rows.set(k, free[k], Scalar::one(f.field()));
    for (std::size_t r = 0; r < pivots.size(); ++r)
      null_rows.set(k, pivots[r], -reduced.at(r, free[k]));
  }
  // Canonicalise: the RREF rows of the kernel itself.
  return row_echelon(null_rows).reduced.transpose();
}

std::vector<std::vector<Scalar>> kernel_basis(const LinMap& f) {
  const LinMap k = kernel_matrix(f);
  std::vector<std::vector<Scalar>> out;
  for (std::size_t c = 0; c < k.dom(); ++c) out.push_back(k.column(c));
  return out;
}

LinMap invert(const LinMap& f) {
  if (f.cod() != f.dom())
    throw DimensionMismatch("invert: map is " + std::to_string(f.cod()) + "x" +
                            std::to_string(f.dom()));
  const std::size_t n = f.dom();
  LinMap aug(f.field(), n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug.set(r, c, f.at(r, c));
    aug.set(r, n + r, Scalar::one(f.field()));
  }
  const auto pivots = aug.visit(
      [&](const auto& ring, auto& store) { return rref_in_place(ring, store, n, 2 * n, n); });
  if (pivots.size() != n) throw Singular(pivots.size());
  return aug.columns(n, n);
}

bool is_invertible(const LinMap& f) { return f.cod() == f.dom() && rank(f) == f.dom(); }

std::optional<LinMap> solve(const LinMap& a, const LinMap& b) {
  if (a.field() != b.field()) throw FieldMismatch("solve: field mismatch");
  if (a.cod() != b.cod()) throw DimensionMismatch("solve: right-hand side has wrong height");
  const std::size_t n = a.dom(), k = b.dom(), rows = a.cod();
  LinMap aug(a.field(), rows, n + k);
  aug.visit([&](const auto&, auto& store) {
    using Store = std::decay_t<decltype(store)>;
    const Store* as = nullptr;
    const Store* bs = nullptr;
    if constexpr (std::is_same_v<Store, LinMap::ResidueStore>) {
      as = &a.residues();
      bs = &b.residues();
    } else {
      as = &a.rationals();
      bs = &b.rationals();
    }
    for (std::size_t r = 0; r < rows; ++r) {
      for (std::size_t c = 0; c < n; ++c) store[r * (n + k) + c] = (*as)[r * n + c];
      for (std::size_t c = 0; c < k; ++c) store[r * (n + k) + n + c] = (*bs)[r * k + c];
    }
  });
  const auto pivots = aug.visit(
      [&](const auto& ring, auto& store) { return rref_in_place(ring, store, rows, n + k, n); });
  // Inconsistent iff a zero row of the coefficient part has a nonzero rhs.
  for (std::size_t r = pivots.size(); r < rows; ++r)
    for (std::size_t c = 0; c < k; ++c)
      if (!aug.at(r, n + c).is_zero()) return std::nullopt;
  LinMap x(a.field(), n, k);
  for (std::size_t r = 0; r < pivots.size(); ++r)
    for (std::size_t c = 0; c < k; ++c) x.set(pivots[r], c, aug.at(r, n + c));
  return x;
}

// ---------------------------------------------------------------------------

RowSpace::RowSpace(FieldSpec field, std::size_t width) : field_(field), width_(width) {
  if (field.is_prime())
    impl_ = Impl<detail::ModRing>{detail::ModRing{field.characteristic()}, {}, {}};
  else
    impl_ = Impl<detail::RatRing>{};
}

std::size_t RowSpace::dim() const {
  return std::visit([](const auto& impl) { return impl.rows.size(); }, impl_);
}

namespace {

template <class Impl, class Row>
void reduce_row(const Impl& impl, Row& row) {
  const auto& ring = impl.ring;
  for (std::size_t i = 0; i < impl.rows.size(); ++i) {
    const std::size_t p = impl.pivots[i];
    if (ring.is_zero(row[p])) continue;
    const auto factor = row[p];
    const auto& basis = impl.rows[i];
    for (std::size_t j = p; j < row.size(); ++j)
      if (!ring.is_zero(basis[j])) row[j] = ring.sub(row[j], ring.mul(factor, basis[j]));
  }
}

template <class Impl>
auto column_of(const Impl&, const LinMap& v, std::size_t c) {
  using Elem = typename decltype(Impl::ring)::Elem;
  std::vector<Elem> row(v.cod());
  if constexpr (std::is_same_v<Elem, std::uint32_t>) {
    const auto& s = v.residues();
    for (std::size_t r = 0; r < v.cod(); ++r) row[r] = s[r * v.dom() + c];
  } else {
    const auto& s = v.rationals();
    for (std::size_t r = 0; r < v.cod(); ++r) row[r] = s[r * v.dom() + c];
  }
  return row;
}

}  // namespace

bool RowSpace::insert_columns(const LinMap& v) {
  if (v.field() != field_) throw FieldMismatch("RowSpace: field mismatch");
  if (v.cod() != width_) throw DimensionMismatch("RowSpace: vector has wrong length");
  return std::visit(
      [&](auto& impl) {
        const auto& ring = impl.ring;
        bool grew = false;
        for (std::size_t c = 0; c < v.dom(); ++c) {
          if (impl.rows.size() == width_) break;
          auto row = column_of(impl, v, c);
          reduce_row(impl, row);
          std::size_t p = 0;
          while (p < width_ && ring.is_zero(row[p])) ++p;
          if (p == width_) continue;
          const auto inv = ring.inv(row[p]);
          for (std::size_t j = p; j < width_; ++j) row[j] = ring.mul(row[j], inv);
          // keep existing rows reduced against the new pivot
          for (auto& basis : impl.rows) {
            if (ring.is_zero(basis[p])) continue;
            const auto factor = basis[p];
            for (std::size_t j = p; j < width_; ++j)
              if (!ring.is_zero(row[j])) basis[j] = ring.sub(basis[j], ring.mul(factor, row[j]));
          }
          const auto pos = std::lower_bound(impl.pivots.begin(), impl.pivots.end(), p) -
                           impl.pivots.begin();
          impl.pivots.insert(impl.pivots.begin() + pos, p);
          impl.rows.insert(impl.rows.begin() + pos, std::move(row));
          grew = true;
        }
        return grew;
      },
      impl_);
}

LinMap RowSpace::reduce(const LinMap& v) const {
  if (v.field() != field_) throw FieldMismatch("RowSpace: field mismatch");
  if (v.cod() != width_) throw DimensionMismatch("RowSpace: vector has wrong length");
  LinMap out(field_, width_, v.dom());
  std::visit(
      [&](const auto& impl) {
        for (std::size_t c = 0; c < v.dom(); ++c) {
          auto row = column_of(impl, v, c);
          reduce_row(impl, row);
          out.visit([&](const auto&, auto& store) {
            using Store = std::decay_t<decltype(store)>;
            if constexpr (std::is_same_v<typename Store::value_type,
                                         typename std::decay_t<decltype(row)>::value_type>)
              for (std::size_t r = 0; r < width_; ++r) store[r * v.dom() + c] = row[r];
          });
        }
      },
      impl_);
  return out;
}

bool RowSpace::contains(const LinMap& column) const { return reduce(column).is_zero(); }

LinMap RowSpace::basis() const {
  LinMap out(field_, dim(), width_);
  std::visit(
      [&](const auto& impl) {
        out.visit([&](const auto&, auto& store) {
          using Store = std::decay_t<decltype(store)>;
          if constexpr (std::is_same_v<typename Store::value_type,
                                       typename std::decay_t<decltype(impl.rows[0])>::value_type>)
            for (std::size_t i = 0; i < impl.rows.size(); ++i)
              for (std::size_t j = 0; j < width_; ++j) store[i * width_ + j] = impl.rows[i][j];
        });
      },
      impl_);
  return out;
}

std::vector<std::size_t> RowSpace::pivots() const {
  return std::visit([](const auto& impl) { return impl.pivots; }, impl_);
}

}  // namespace sweedler
