#include <string>

#include "sweedler/hopfcore.hpp"

namespace sweedler {

AlgebraData ground_algebra(FieldSpec field) {
  return make_algebra(LinMap::identity(field, 1), LinMap::identity(field, 1), {"1"});
}

CoalgebraData ground_coalgebra(FieldSpec field) {
  return make_coalgebra(LinMap::identity(field, 1), LinMap::identity(field, 1), {"1"});
}

HopfData ground_hopf(FieldSpec field) {
  return make_hopf(make_bialgebra(ground_algebra(field), ground_coalgebra(field)),
                   LinMap::identity(field, 1));
}

AlgebraData matrix_algebra(const AlgebraData& b, std::size_t n) {
  if (n == 0) throw DimensionMismatch("matrix_algebra needs n >= 1");
  const std::size_t db = b.dim;
  const std::size_t dim = n * n * db;
  const auto index = [&](std::size_t i, std::size_t j, std::size_t x) {
    return (i * n + j) * db + x;
  };
  LinMap mult(b.field, dim, dim * dim);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t l = 0; l < n; ++l)
        for (std::size_t x = 0; x < db; ++x)
          for (std::size_t y = 0; y < db; ++y) {
            // (e_ij (x) x)(e_jl (x) y) = e_il (x) xy; other products vanish
            const std::size_t col = index(i, j, x) * dim + index(j, l, y);
            for (std::size_t z = 0; z < db; ++z) {
              const Scalar c = b.mult.at(z, x * db + y);
              if (!c.is_zero()) mult.set(index(i, l, z), col, c);
            }
          }
  LinMap unit(b.field, dim, 1);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t x = 0; x < db; ++x) unit.set(index(i, i, x), 0, b.unit.at(x, 0));

  std::vector<std::string> labels;
  labels.reserve(dim);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t x = 0; x < db; ++x) {
        std::string l = "E" + std::to_string(i + 1) + (n >= 10 ? "_" : "") + std::to_string(j + 1);
        if (db > 1) l += "." + b.basis[x];
        labels.push_back(std::move(l));
      }
  return make_algebra(std::move(unit), std::move(mult), std::move(labels));
}

HopfData group_algebra(FieldSpec field, const std::vector<std::vector<std::size_t>>& cayley,
                       std::vector<std::string> labels) {
  const std::size_t n = cayley.size();
  if (n == 0) throw NotAGroup("empty multiplication table");
  for (const auto& row : cayley) {
    if (row.size() != n) throw NotAGroup("multiplication table is not square");
    for (auto v : row)
      if (v >= n) throw NotAGroup("multiplication table entry out of range");
  }
  std::optional<std::size_t> identity;
  for (std::size_t e = 0; e < n && !identity; ++e) {
    bool ok = true;
    for (std::size_t g = 0; g < n && ok; ++g) ok = cayley[e][g] == g && cayley[g][e] == g;
    if (ok) identity = e;
  }
  if (!identity) throw NotAGroup("no identity element");
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (cayley[cayley[a][b]][c] != cayley[a][cayley[b][c]])
          throw NotAGroup("not associative at (" + std::to_string(a) + "," + std::to_string(b) +
                          "," + std::to_string(c) + ")");
  std::vector<std::size_t> inverse(n, n);
  for (std::size_t g = 0; g < n; ++g)
    for (std::size_t h = 0; h < n; ++h)
      if (cayley[g][h] == *identity && cayley[h][g] == *identity) inverse[g] = h;
  for (std::size_t g = 0; g < n; ++g)
    if (inverse[g] == n) throw NotAGroup("element " + std::to_string(g) + " has no inverse");

  const Scalar one = Scalar::one(field);
  LinMap mult(field, n, n * n), comult(field, n * n, n), counit(field, 1, n), antipode(field, n, n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) mult.set(cayley[a][b], a * n + b, one);
    comult.set(a * n + a, a, one);
    counit.set(0, a, one);
    antipode.set(inverse[a], a, one);
  }
  if (labels.empty()) labels = default_labels(n, "g");
  auto alg = make_algebra(LinMap::basis_vector(field, n, *identity), std::move(mult), labels);
  auto coalg = make_coalgebra(std::move(counit), std::move(comult), labels);
  return make_hopf(make_bialgebra(std::move(alg), std::move(coalg)), std::move(antipode));
}

namespace {

std::vector<std::string> starred(const std::vector<std::string>& labels) {
  std::vector<std::string> out;
  for (const auto& l : labels) out.push_back(l + "*");
  return out;
}

std::vector<std::string> unstarred(const std::vector<std::string>& labels) {
  std::vector<std::string> out;
  for (const auto& l : labels)
    out.push_back(!l.empty() && l.back() == '*' ? l.substr(0, l.size() - 1) : l + "*");
  return out;
}

}  // namespace

CoalgebraData dual_coalgebra(const AlgebraData& a) {
  return make_coalgebra(a.unit.transpose(), a.mult.transpose(), starred(a.basis));
}

AlgebraData dual_algebra(const CoalgebraData& c) {
  return make_algebra(c.counit.transpose(), c.comult.transpose(), unstarred(c.basis));
}

AlgebraData opposite(const AlgebraData& a, const std::optional<LinMap>& symmetry) {
  const LinMap c = symmetry ? *symmetry : swap_map(a.dim, a.dim, a.field);
  return make_algebra(a.unit, compose(a.mult, c), a.basis);
}

CoalgebraData coopposite(const CoalgebraData& c, const std::optional<LinMap>& symmetry) {
  const LinMap s = symmetry ? *symmetry : swap_map(c.dim, c.dim, c.field);
  return make_coalgebra(c.counit, compose(s, c.comult), c.basis);
}

LinMap flatten_map(const LinMap& f) {
  LinMap v(f.field(), f.cod() * f.dom(), 1);
  for (std::size_t r = 0; r < f.cod(); ++r)
    for (std::size_t c = 0; c < f.dom(); ++c) v.set(r * f.dom() + c, 0, f.at(r, c));
  return v;
}

LinMap unflatten_map(const LinMap& v, std::size_t cod, std::size_t dom) {
  if (v.cod() != cod * dom || v.dom() != 1) throw DimensionMismatch("unflatten_map: bad length");
  LinMap f(v.field(), cod, dom);
  for (std::size_t r = 0; r < cod; ++r)
    for (std::size_t c = 0; c < dom; ++c) f.set(r, c, v.at(r * dom + c, 0));
  return f;
}

AlgebraData convolution_algebra(const CoalgebraData& c, const AlgebraData& b) {
  if (c.field != b.field) throw FieldMismatch("convolution_algebra: fields differ");
  const std::size_t dc = c.dim, db = b.dim, dim = dc * db;
  if (dim == 0) throw DimensionMismatch("convolution algebra of a zero coalgebra is zero");
  // E_{x,u} * E_{y,v} sends e_w to sum Delta[(u,v),w] mu_B(e_x e_y)
  LinMap mult(b.field, dim, dim * dim);
  for (std::size_t x = 0; x < db; ++x)
    for (std::size_t u = 0; u < dc; ++u)
      for (std::size_t y = 0; y < db; ++y)
        for (std::size_t v = 0; v < dc; ++v) {
          const std::size_t col = (x * dc + u) * dim + (y * dc + v);
          for (std::size_t w = 0; w < dc; ++w) {
            const Scalar delta = c.comult.at(u * dc + v, w);
            if (delta.is_zero()) continue;
            for (std::size_t z = 0; z < db; ++z) {
              const Scalar m = b.mult.at(z, x * db + y);
              if (!m.is_zero()) mult.add_to(z * dc + w, col, delta * m);
            }
          }
        }
  LinMap unit(b.field, dim, 1);
  for (std::size_t z = 0; z < db; ++z)
    for (std::size_t w = 0; w < dc; ++w) unit.set(z * dc + w, 0, b.unit.at(z, 0) * c.counit.at(0, w));
  std::vector<std::string> labels;
  for (std::size_t z = 0; z < db; ++z)
    for (std::size_t w = 0; w < dc; ++w) labels.push_back(c.basis[w] + "->" + b.basis[z]);
  return make_algebra(std::move(unit), std::move(mult), std::move(labels));
}

}  // namespace sweedler
