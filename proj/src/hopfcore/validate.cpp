#include "sweedler/hopfcore.hpp"

namespace sweedler {

namespace {

LinMap symmetry_or_swap(const std::optional<LinMap>& symmetry, std::size_t dim, FieldSpec field) {
  if (!symmetry) return swap_map(dim, dim, field);
  if (symmetry->cod() != dim * dim || symmetry->dom() != dim * dim)
    throw DimensionMismatch("symmetry must act on the square of the space");
  return *symmetry;
}

}  // namespace

LinMap tensor_product_mult(const AlgebraData& a, const std::optional<LinMap>& symmetry) {
  const auto id = LinMap::identity(a.field, a.dim);
  const LinMap c = symmetry_or_swap(symmetry, a.dim, a.field);
  return compose(kron(a.mult, a.mult), kron(id, c, id));
}

LinMap tensor_product_comult(const CoalgebraData& c, const std::optional<LinMap>& symmetry) {
  const auto id = LinMap::identity(c.field, c.dim);
  const LinMap s = symmetry_or_swap(symmetry, c.dim, c.field);
  return compose(kron(id, s, id), kron(c.comult, c.comult));
}

ValidationReport validate_algebra(const AlgebraData& a) {
  ValidationReport report;
  const std::size_t d = a.dim;
  const auto id = LinMap::identity(a.field, d);
  compare_maps(report, "associativity", compose(a.mult, kron(a.mult, id)),
               compose(a.mult, kron(id, a.mult)), {d, d, d});
  compare_maps(report, "left unit", compose(a.mult, kron(a.unit, id)), id, {d});
  compare_maps(report, "right unit", compose(a.mult, kron(id, a.unit)), id, {d});
  return report;
}

ValidationReport validate_coalgebra(const CoalgebraData& c) {
  ValidationReport report;
  const std::size_t d = c.dim;
  const auto id = LinMap::identity(c.field, d);
  compare_maps(report, "coassociativity", compose(kron(c.comult, id), c.comult),
               compose(kron(id, c.comult), c.comult), {d}, {d, d, d});
  compare_maps(report, "left counit", compose(kron(c.counit, id), c.comult), id, {d});
  compare_maps(report, "right counit", compose(kron(id, c.counit), c.comult), id, {d});
  return report;
}

ValidationReport validate_bialgebra(const BialgebraData& b, const std::optional<LinMap>& symmetry) {
  ValidationReport report = validate_algebra(b.alg);
  report.merge(validate_coalgebra(b.coalg));
  const std::size_t d = b.dim();
  const FieldSpec k = b.field();
  const auto& alg = b.alg;
  const auto& co = b.coalg;
  compare_maps(report, "counit multiplicative", compose(co.counit, alg.mult),
               kron(co.counit, co.counit), {d, d});
  compare_maps(report, "counit unital", compose(co.counit, alg.unit), LinMap::identity(k, 1), {1});
  compare_maps(report, "comult multiplicative", compose(co.comult, alg.mult),
               compose(tensor_product_mult(alg, symmetry), kron(co.comult, co.comult)), {d, d});
  compare_maps(report, "comult unital", compose(co.comult, alg.unit), kron(alg.unit, alg.unit),
               {1});
  return report;
}

ValidationReport validate_hopf(const HopfData& h, const std::optional<LinMap>& symmetry) {
  ValidationReport report = validate_bialgebra(h.bialg, symmetry);
  const std::size_t d = h.bialg.dim();
  const auto id = LinMap::identity(h.bialg.field(), d);
  const auto& alg = h.bialg.alg;
  const auto& co = h.bialg.coalg;
  const LinMap unit_counit = compose(alg.unit, co.counit);
  compare_maps(report, "left antipode", compose(alg.mult, kron(h.antipode, id), co.comult),
               unit_counit, {d});
  compare_maps(report, "right antipode", compose(alg.mult, kron(id, h.antipode), co.comult),
               unit_counit, {d});
  return report;
}

bool is_commutative(const AlgebraData& a) {
  return compose(a.mult, swap_map(a.dim, a.dim, a.field)) == a.mult;
}

bool is_cocommutative(const CoalgebraData& c) {
  return compose(swap_map(c.dim, c.dim, c.field), c.comult) == c.comult;
}

bool is_algebra_morphism(const LinMap& f, const AlgebraData& a, const AlgebraData& b) {
  if (f.field() != a.field || f.field() != b.field || f.dom() != a.dim || f.cod() != b.dim)
    return false;
  return compose(f, a.unit) == b.unit && compose(f, a.mult) == compose(b.mult, kron(f, f));
}

bool is_coalgebra_morphism(const LinMap& f, const CoalgebraData& c, const CoalgebraData& d) {
  if (f.field() != c.field || f.field() != d.field || f.dom() != c.dim || f.cod() != d.dim)
    return false;
  return compose(d.counit, f) == c.counit && compose(d.comult, f) == compose(kron(f, f), c.comult);
}

}  // namespace sweedler
