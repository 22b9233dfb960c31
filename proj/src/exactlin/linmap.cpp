#include "sweedler/linmap.hpp"

#include <ostream>
#include <string>

#include "sweedler/errors.hpp"

namespace sweedler {

namespace {

std::string dims(const LinMap& m) {
  return std::to_string(m.cod()) + "x" + std::to_string(m.dom());
}

void check_field(const LinMap& a, const LinMap& b, const char* op) {
  if (a.field() != b.field())
    throw FieldMismatch(std::string(op) + ": fields " + a.field().name() + " and " +
                        b.field().name());
}

}  // namespace

LinMap::LinMap(FieldSpec field, std::size_t cod, std::size_t dom)
    : field_(field), cod_(cod), dom_(dom) {
  if (field.is_prime())
    data_ = ResidueStore(cod * dom, 0);
  else
    data_ = RationalStore(cod * dom);
}

LinMap LinMap::identity(FieldSpec field, std::size_t n) {
  LinMap m(field, n, n);
  m.visit([&](const auto& ring, auto& store) {
    for (std::size_t i = 0; i < n; ++i) store[i * n + i] = ring.one();
  });
  return m;
}

LinMap LinMap::from_ints(FieldSpec field, std::size_t cod, std::size_t dom,
                         const std::vector<long>& row_major) {
  if (row_major.size() != cod * dom)
    throw DimensionMismatch("from_ints: expected " + std::to_string(cod * dom) + " entries");
  LinMap m(field, cod, dom);
  for (std::size_t r = 0; r < cod; ++r)
    for (std::size_t c = 0; c < dom; ++c) m.set(r, c, Scalar(field, row_major[r * dom + c]));
  return m;
}

LinMap LinMap::from_scalars(FieldSpec field, std::size_t cod, std::size_t dom,
                            const std::vector<Scalar>& row_major) {
  if (row_major.size() != cod * dom)
    throw DimensionMismatch("from_scalars: expected " + std::to_string(cod * dom) + " entries");
  LinMap m(field, cod, dom);
  for (std::size_t r = 0; r < cod; ++r)
    for (std::size_t c = 0; c < dom; ++c) m.set(r, c, row_major[r * dom + c]);
  return m;
}

LinMap LinMap::column_vector(FieldSpec field, const std::vector<Scalar>& entries) {
  return from_scalars(field, entries.size(), 1, entries);
}

LinMap LinMap::basis_vector(FieldSpec field, std::size_t n, std::size_t i) {
  LinMap m(field, n, 1);
  m.set(i, 0, Scalar::one(field));
  return m;
}

LinMap LinMap::from_columns(FieldSpec field, std::size_t cod, const std::vector<LinMap>& columns) {
  LinMap m(field, cod, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    const LinMap& col = columns[c];
    if (col.cod() != cod || col.dom() != 1)
      throw DimensionMismatch("from_columns: column " + std::to_string(c) + " is " + dims(col));
    check_field(m, col, "from_columns");
    m.visit([&](const auto&, auto& store) {
      using Store = std::decay_t<decltype(store)>;
      const auto& src = std::get<Store>(col.data_);
      for (std::size_t r = 0; r < cod; ++r) store[r * columns.size() + c] = src[r];
    });
  }
  return m;
}

void LinMap::check_index(std::size_t row, std::size_t col) const {
  if (row >= cod_ || col >= dom_)
    throw DimensionMismatch("index (" + std::to_string(row) + "," + std::to_string(col) +
                            ") outside " + dims(*this));
}

Scalar LinMap::at(std::size_t row, std::size_t col) const {
  check_index(row, col);
  if (field_.is_prime())
    return Scalar(Scalar::Residue{residues()[row * dom_ + col], field_.characteristic()});
  return Scalar(rationals()[row * dom_ + col]);
}

void LinMap::set(std::size_t row, std::size_t col, const Scalar& value) {
  check_index(row, col);
  if (value.field() != field_)
    throw FieldMismatch("set: " + value.field().name() + " entry in " + field_.name() + " map");
  if (field_.is_prime())
    residues()[row * dom_ + col] = value.residue();
  else
    rationals()[row * dom_ + col] = value.rational();
}

void LinMap::add_to(std::size_t row, std::size_t col, const Scalar& value) {
  set(row, col, at(row, col) + value);
}

bool LinMap::is_zero() const {
  return visit([](const auto& ring, const auto& store) {
    for (const auto& e : store)
      if (!ring.is_zero(e)) return false;
    return true;
  });
}

bool LinMap::is_identity() const {
  return cod_ == dom_ && *this == identity(field_, cod_);
}

bool LinMap::is_zero_column(std::size_t col) const {
  check_index(0, col);
  return visit([&](const auto& ring, const auto& store) {
    for (std::size_t r = 0; r < cod_; ++r)
      if (!ring.is_zero(store[r * dom_ + col])) return false;
    return true;
  });
}

std::vector<Scalar> LinMap::column(std::size_t col) const {
  std::vector<Scalar> out;
  out.reserve(cod_);
  for (std::size_t r = 0; r < cod_; ++r) out.push_back(at(r, col));
  return out;
}

LinMap LinMap::column_map(std::size_t col) const { return columns(col, 1); }

LinMap LinMap::columns(std::size_t first, std::size_t count) const {
  if (first + count > dom_) throw DimensionMismatch("columns: range outside " + dims(*this));
  LinMap out(field_, cod_, count);
  out.visit([&](const auto&, auto& dst) {
    using Store = std::decay_t<decltype(dst)>;
    const auto& src = std::get<Store>(data_);
    for (std::size_t r = 0; r < cod_; ++r)
      for (std::size_t c = 0; c < count; ++c) dst[r * count + c] = src[r * dom_ + first + c];
  });
  return out;
}

LinMap LinMap::transpose() const {
  LinMap out(field_, dom_, cod_);
  out.visit([&](const auto&, auto& dst) {
    using Store = std::decay_t<decltype(dst)>;
    const auto& src = std::get<Store>(data_);
    for (std::size_t r = 0; r < cod_; ++r)
      for (std::size_t c = 0; c < dom_; ++c) dst[c * cod_ + r] = src[r * dom_ + c];
  });
  return out;
}

LinMap& LinMap::operator+=(const LinMap& o) {
  check_field(*this, o, "add");
  if (cod_ != o.cod_ || dom_ != o.dom_)
    throw DimensionMismatch("add: " + dims(*this) + " vs " + dims(o));
  visit([&](const auto& ring, auto& store) {
    using Store = std::decay_t<decltype(store)>;
    const auto& src = std::get<Store>(o.data_);
    for (std::size_t i = 0; i < store.size(); ++i) store[i] = ring.add(store[i], src[i]);
  });
  return *this;
}

LinMap& LinMap::operator-=(const LinMap& o) {
  check_field(*this, o, "subtract");
  if (cod_ != o.cod_ || dom_ != o.dom_)
    throw DimensionMismatch("subtract: " + dims(*this) + " vs " + dims(o));
  visit([&](const auto& ring, auto& store) {
    using Store = std::decay_t<decltype(store)>;
    const auto& src = std::get<Store>(o.data_);
    for (std::size_t i = 0; i < store.size(); ++i) store[i] = ring.sub(store[i], src[i]);
  });
  return *this;
}

LinMap LinMap::scaled(const Scalar& s) const {
  if (s.field() != field_) throw FieldMismatch("scaled: field mismatch");
  LinMap out = *this;
  if (field_.is_prime()) {
    detail::ModRing ring{field_.characteristic()};
    for (auto& e : out.residues()) e = ring.mul(e, s.residue());
  } else {
    for (auto& e : out.rationals()) e *= s.rational();
  }
  return out;
}

bool operator==(const LinMap& a, const LinMap& b) {
  return a.field_ == b.field_ && a.cod_ == b.cod_ && a.dom_ == b.dom_ && a.data_ == b.data_;
}

std::ostream& operator<<(std::ostream& os, const LinMap& m) {
  os << "[";
  for (std::size_t r = 0; r < m.cod(); ++r) {
    os << (r ? "; " : "");
    for (std::size_t c = 0; c < m.dom(); ++c) os << (c ? " " : "") << m.at(r, c);
  }
  return os << "]";
}

LinMap compose(const LinMap& f, const LinMap& g) {
  check_field(f, g, "compose");
  if (g.cod() != f.dom())
    throw DimensionMismatch("compose: " + dims(f) + " after " + dims(g));
  LinMap out(f.field(), f.cod(), g.dom());
  const std::size_t n = f.cod(), k = f.dom(), m = g.dom();
  out.visit([&](const auto& ring, auto& dst) {
    using Store = std::decay_t<decltype(dst)>;
    const Store* fs = nullptr;
    const Store* gs = nullptr;
    if constexpr (std::is_same_v<Store, LinMap::ResidueStore>) {
      fs = &f.residues();
      gs = &g.residues();
    } else {
      fs = &f.rationals();
      gs = &g.rationals();
    }
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t l = 0; l < k; ++l) {
        const auto& a = (*fs)[i * k + l];
        if (ring.is_zero(a)) continue;
        for (std::size_t j = 0; j < m; ++j) ring.fma(dst[i * m + j], a, (*gs)[l * m + j]);
      }
  });
  return out;
}

LinMap kron(const LinMap& f, const LinMap& g) {
  check_field(f, g, "kron");
  const std::size_t fr = f.cod(), fc = f.dom(), gr = g.cod(), gc = g.dom();
  LinMap out(f.field(), fr * gr, fc * gc);
  const std::size_t width = fc * gc;
  out.visit([&](const auto& ring, auto& dst) {
    using Store = std::decay_t<decltype(dst)>;
    const Store* fs = nullptr;
    const Store* gs = nullptr;
    if constexpr (std::is_same_v<Store, LinMap::ResidueStore>) {
      fs = &f.residues();
      gs = &g.residues();
    } else {
      fs = &f.rationals();
      gs = &g.rationals();
    }
    for (std::size_t a = 0; a < fr; ++a)
      for (std::size_t b = 0; b < fc; ++b) {
        const auto& x = (*fs)[a * fc + b];
        if (ring.is_zero(x)) continue;
        for (std::size_t c = 0; c < gr; ++c)
          for (std::size_t d = 0; d < gc; ++d)
            dst[(a * gr + c) * width + b * gc + d] = ring.mul(x, (*gs)[c * gc + d]);
      }
  });
  return out;
}

LinMap swap_map(std::size_t m, std::size_t n, FieldSpec field) {
  LinMap out(field, n * m, m * n);
  const Scalar one = Scalar::one(field);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) out.set(j * m + i, i * n + j, one);
  return out;
}

LinMap direct_sum(const LinMap& f, const LinMap& g) {
  check_field(f, g, "direct_sum");
  LinMap out(f.field(), f.cod() + g.cod(), f.dom() + g.dom());
  for (std::size_t r = 0; r < f.cod(); ++r)
    for (std::size_t c = 0; c < f.dom(); ++c) out.set(r, c, f.at(r, c));
  for (std::size_t r = 0; r < g.cod(); ++r)
    for (std::size_t c = 0; c < g.dom(); ++c) out.set(f.cod() + r, f.dom() + c, g.at(r, c));
  return out;
}

}  // namespace sweedler
