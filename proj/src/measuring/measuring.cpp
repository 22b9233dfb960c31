#include "sweedler/measuring.hpp"

#include "sweedler/hopfcore.hpp"
#include "sweedler/linalg.hpp"

namespace sweedler {

Measuring make_measuring(AlgebraData a, AlgebraData b, std::size_t xdim, LinMap psi) {
  if (a.field != b.field || psi.field() != a.field)
    throw FieldMismatch("measuring: algebras and psi must share a field");
  if (psi.dom() != a.dim * xdim || psi.cod() != xdim * b.dim)
    throw DimensionMismatch("measuring: psi must be " + std::to_string(xdim * b.dim) + "x" +
                            std::to_string(a.dim * xdim));
  return Measuring{std::move(a), std::move(b), xdim, std::move(psi)};
}

ValidationReport validate_measuring(const Measuring& m) {
  const std::size_t da = m.a.dim, db = m.b.dim, n = m.xdim;
  const FieldSpec k = m.a.field;
  const auto id_x = LinMap::identity(k, n);
  const auto id_a = LinMap::identity(k, da);
  const auto id_b = LinMap::identity(k, db);
  ValidationReport report;
  compare_maps(report, "measuring multiplicative", compose(m.psi, kron(m.a.mult, id_x)),
               compose(kron(id_x, m.b.mult), kron(m.psi, id_b), kron(id_a, m.psi)), {da, da, n});
  compare_maps(report, "measuring unital", compose(m.psi, kron(m.a.unit, id_x)),
               kron(id_x, m.b.unit), {n});
  return report;
}

Measuring measuring_from_matrix_morphism(const LinMap& rho, const AlgebraData& a,
                                         const AlgebraData& b, std::size_t n) {
  const std::size_t da = a.dim, db = b.dim;
  if (rho.dom() != da || rho.cod() != n * n * db)
    throw DimensionMismatch("rho must map A into M_n(B)");
  if (n > 0 && !is_algebra_morphism(rho, a, matrix_algebra(b, n)))
    throw NotAMorphism("rho is not an algebra morphism A -> M_n(B)");
  LinMap psi(a.field, n * db, da * n);
  for (std::size_t x = 0; x < da; ++x)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t beta = 0; beta < db; ++beta) {
          const Scalar c = rho.at((i * n + j) * db + beta, x);
          if (!c.is_zero()) psi.set(i * db + beta, x * n + j, c);
        }
  return make_measuring(a, b, n, std::move(psi));
}

LinMap matrix_morphism_from_measuring(const Measuring& m) {
  const std::size_t da = m.a.dim, db = m.b.dim, n = m.xdim;
  LinMap rho(m.a.field, n * n * db, da);
  for (std::size_t x = 0; x < da; ++x)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t beta = 0; beta < db; ++beta) {
          const Scalar c = m.psi.at(i * db + beta, x * n + j);
          if (!c.is_zero()) rho.set((i * n + j) * db + beta, x, c);
        }
  return rho;
}

namespace {

void require_compatible(const Measuring& s, const Measuring& t) {
  if (!same_structure(s.a, t.a) || !same_structure(s.b, t.b))
    throw IncompatibleMeasurings("measurings act between different algebras");
}

}  // namespace

bool is_intertwiner(const LinMap& f, const Measuring& source, const Measuring& target) {
  require_compatible(source, target);
  if (f.dom() != source.xdim || f.cod() != target.xdim) return false;
  const FieldSpec k = source.a.field;
  return compose(kron(f, LinMap::identity(k, source.b.dim)), source.psi) ==
         compose(target.psi, kron(LinMap::identity(k, source.a.dim), f));
}

std::vector<LinMap> intertwiners(const Measuring& source, const Measuring& target) {
  require_compatible(source, target);
  const std::size_t da = source.a.dim, db = source.b.dim;
  const std::size_t n = source.xdim, m = target.xdim;
  const FieldSpec k = source.a.field;
  // Column y*n + x holds (E_yx (x) 1) . psi_s - psi_t . (1 (x) E_yx), flattened
  // with row index (y' * db + beta) * (da * n) + (a * n + x').
  const std::size_t width = da * n;
  LinMap system(k, m * db * width, m * n);
  for (std::size_t y = 0; y < m; ++y)
    for (std::size_t x = 0; x < n; ++x) {
      const std::size_t col = y * n + x;
      for (std::size_t beta = 0; beta < db; ++beta)
        for (std::size_t a = 0; a < da; ++a)
          for (std::size_t xp = 0; xp < n; ++xp) {
            const Scalar c = source.psi.at(x * db + beta, a * n + xp);
            if (!c.is_zero()) system.add_to((y * db + beta) * width + a * n + xp, col, c);
          }
      for (std::size_t yp = 0; yp < m; ++yp)
        for (std::size_t beta = 0; beta < db; ++beta)
          for (std::size_t a = 0; a < da; ++a) {
            const Scalar c = target.psi.at(yp * db + beta, a * m + y);
            if (!c.is_zero()) system.add_to((yp * db + beta) * width + a * n + x, col, -c);
          }
    }
  std::vector<LinMap> out;
  for (const auto& v : kernel_basis(system))
    out.push_back(unflatten_map(LinMap::column_vector(k, v), m, n));
  return out;
}

Measuring restrict_measuring(const AlgebraData& a_prime, const LinMap& u, const Measuring& m) {
  if (!is_algebra_morphism(u, a_prime, m.a))
    throw NotAMorphism("restriction map is not an algebra morphism A' -> A");
  return make_measuring(a_prime, m.b, m.xdim,
                        compose(m.psi, kron(u, LinMap::identity(m.a.field, m.xdim))));
}

Measuring corestrict_measuring(const Measuring& m, const LinMap& v, const AlgebraData& b_prime) {
  if (!is_algebra_morphism(v, m.b, b_prime))
    throw NotAMorphism("corestriction map is not an algebra morphism B -> B'");
  return make_measuring(m.a, b_prime, m.xdim,
                        compose(kron(LinMap::identity(m.a.field, m.xdim), v), m.psi));
}

}  // namespace sweedler
