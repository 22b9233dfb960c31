#include "sweedler/hopfcore.hpp"
#include "sweedler/measuring.hpp"

namespace sweedler {

namespace detail {

Measuring tensor_measuring_braided(const Measuring& m1, const Measuring& m2,
                                   const BialgebraData& h, const MeasuringBraidings& c) {
  if (!same_structure(m1.a, h.alg) || !same_structure(m2.a, h.alg))
    throw IncompatibleMeasurings("tensor: both measurings must be measured by the bialgebra");
  if (!same_structure(m1.b, m2.b))
    throw IncompatibleMeasurings("tensor: measurings land in different algebras");
  const AlgebraData& b = m1.b;
  if (compose(b.mult, c.c_bb) != b.mult) throw NotCommutative("tensor: target algebra is not commutative");
  const FieldSpec k = b.field;
  const std::size_t n = m1.xdim, m = m2.xdim;
  const auto id_a = LinMap::identity(k, h.dim());
  const auto id_b = LinMap::identity(k, b.dim);
  const auto id_x = LinMap::identity(k, n);
  const auto id_y = LinMap::identity(k, m);
  LinMap psi = compose(kron(id_x, id_y, b.mult), kron(id_x, c.c_by, id_b), kron(m1.psi, m2.psi),
                       kron(id_a, c.c_ax, id_y), kron(h.coalg.comult, id_x, id_y));
  return make_measuring(h.alg, b, n * m, std::move(psi));
}

}  // namespace detail

Measuring tensor_measuring_bialgebra(const Measuring& m1, const Measuring& m2,
                                     const BialgebraData& h) {
  const FieldSpec k = h.field();
  const std::size_t db = m1.b.dim;
  return detail::tensor_measuring_braided(
      m1, m2, h,
      {swap_map(h.dim(), m1.xdim, k), swap_map(db, m2.xdim, k), swap_map(db, db, k)});
}

Measuring unit_measuring(const BialgebraData& h, const AlgebraData& b) {
  return make_measuring(h.alg, b, 1, compose(b.unit, h.coalg.counit));
}

Measuring identity_measuring(const AlgebraData& a) {
  return make_measuring(a, a, 1, LinMap::identity(a.field, a.dim));
}

Measuring compose_measuring(const Measuring& m_ab, const Measuring& m_bc) {
  if (!same_structure(m_ab.b, m_bc.a))
    throw IncompatibleMeasurings("compose: target of the first is not the source of the second");
  const FieldSpec k = m_ab.a.field;
  LinMap psi = compose(kron(LinMap::identity(k, m_ab.xdim), m_bc.psi),
                       kron(m_ab.psi, LinMap::identity(k, m_bc.xdim)));
  return make_measuring(m_ab.a, m_bc.b, m_ab.xdim * m_bc.xdim, std::move(psi));
}

Measuring tensor_measuring_endo(const Measuring& m1, const Measuring& m2) {
  if (!same_structure(m1.a, m1.b) || !same_structure(m2.a, m2.b) || !same_structure(m1.a, m2.a))
    throw IncompatibleMeasurings("tensor_measuring_endo: both measurings must be A -> A");
  return compose_measuring(m1, m2);
}

}  // namespace sweedler
