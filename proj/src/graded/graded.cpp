#include "sweedler/graded.hpp"

#include <algorithm>

#include "sweedler/detail/enumerate.hpp"
#include "sweedler/hopfcore.hpp"

namespace sweedler {

namespace {

GradedSpace space_of(FieldSpec field, std::vector<long> degrees, std::size_t dim) {
  if (degrees.size() != dim) throw DimensionMismatch("one degree per basis vector expected");
  return GradedSpace{field, std::move(degrees)};
}

GradedSpace unit_space(FieldSpec field) { return GradedSpace{field, {0}}; }

std::vector<std::size_t> unflatten(std::size_t index, const std::vector<std::size_t>& factors) {
  std::vector<std::size_t> out(factors.size());
  for (std::size_t i = factors.size(); i-- > 0;) {
    out[i] = index % factors[i];
    index /= factors[i];
  }
  return out;
}

}  // namespace

GradedSpace tensor(const GradedSpace& v, const GradedSpace& w) {
  if (v.field != w.field) throw FieldMismatch("tensor: fields differ");
  GradedSpace out{v.field, {}};
  for (auto a : v.degrees)
    for (auto b : w.degrees) out.degrees.push_back(a + b);
  return out;
}

LinMap koszul_swap(const GradedSpace& v, const GradedSpace& w) {
  if (v.field != w.field) throw FieldMismatch("koszul_swap: fields differ");
  const std::size_t m = v.dim(), n = w.dim();
  LinMap c(v.field, n * m, m * n);
  const Scalar one = Scalar::one(v.field);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const bool odd = (v.degrees[i] % 2 != 0) && (w.degrees[j] % 2 != 0);
      c.set(j * m + i, i * n + j, odd ? -one : one);
    }
  return c;
}

GradedAlgebraData make_graded(AlgebraData a, std::vector<long> degrees) {
  auto space = space_of(a.field, std::move(degrees), a.dim);
  return {std::move(a), std::move(space)};
}
GradedCoalgebraData make_graded(CoalgebraData c, std::vector<long> degrees) {
  auto space = space_of(c.field, std::move(degrees), c.dim);
  return {std::move(c), std::move(space)};
}
GradedBialgebraData make_graded(BialgebraData b, std::vector<long> degrees) {
  auto space = space_of(b.field(), std::move(degrees), b.dim());
  return {std::move(b), std::move(space)};
}
GradedHopfData make_graded(HopfData h, std::vector<long> degrees) {
  auto space = space_of(h.bialg.field(), std::move(degrees), h.bialg.dim());
  return {std::move(h), std::move(space)};
}

void check_homogeneous(ValidationReport& report, const std::string& name, const LinMap& f,
                       const GradedSpace& dom, const GradedSpace& cod,
                       const std::vector<std::size_t>& dom_factors) {
  if (f.dom() != dom.dim() || f.cod() != cod.dim())
    throw DimensionMismatch(name + ": map does not fit its graded spaces");
  for (std::size_t c = 0; c < f.dom(); ++c)
    for (std::size_t r = 0; r < f.cod(); ++r)
      if (cod.degrees[r] != dom.degrees[c] && !f.at(r, c).is_zero()) {
        report.failures.push_back({name + " homogeneous", unflatten(c, dom_factors), {}});
        return;
      }
}

ValidationReport validate_graded(const GradedAlgebraData& a) {
  ValidationReport report = validate_algebra(a.alg);
  const auto& v = a.space;
  check_homogeneous(report, "mult", a.alg.mult, tensor(v, v), v, {v.dim(), v.dim()});
  check_homogeneous(report, "unit", a.alg.unit, unit_space(v.field), v, {1});
  return report;
}

ValidationReport validate_graded(const GradedCoalgebraData& c) {
  ValidationReport report = validate_coalgebra(c.coalg);
  const auto& v = c.space;
  check_homogeneous(report, "comult", c.coalg.comult, v, tensor(v, v), {v.dim()});
  check_homogeneous(report, "counit", c.coalg.counit, v, unit_space(v.field), {v.dim()});
  return report;
}

ValidationReport validate_graded(const GradedBialgebraData& b) {
  const auto& v = b.space;
  ValidationReport report = validate_bialgebra(b.bialg, koszul_swap(v, v));
  check_homogeneous(report, "mult", b.bialg.alg.mult, tensor(v, v), v, {v.dim(), v.dim()});
  check_homogeneous(report, "unit", b.bialg.alg.unit, unit_space(v.field), v, {1});
  check_homogeneous(report, "comult", b.bialg.coalg.comult, v, tensor(v, v), {v.dim()});
  check_homogeneous(report, "counit", b.bialg.coalg.counit, v, unit_space(v.field), {v.dim()});
  return report;
}

ValidationReport validate_graded(const GradedHopfData& h) {
  const auto& v = h.space;
  ValidationReport report = validate_graded(GradedBialgebraData{h.hopf.bialg, v});
  ValidationReport antipode = validate_hopf(h.hopf, koszul_swap(v, v));
  for (const auto& f : antipode.failures)
    if (f.axiom == "left antipode" || f.axiom == "right antipode") report.failures.push_back(f);
  check_homogeneous(report, "antipode", h.hopf.antipode, v, v, {v.dim()});
  return report;
}

GradedSpace graded_dual(const GradedSpace& v) {
  GradedSpace out{v.field, v.degrees};
  for (auto& d : out.degrees) d = -d;
  return out;
}

GradedCoalgebraData graded_dual(const GradedAlgebraData& a) {
  return {dual_coalgebra(a.alg), graded_dual(a.space)};
}

GradedAlgebraData graded_dual(const GradedCoalgebraData& c) {
  return {dual_algebra(c.coalg), graded_dual(c.space)};
}

bool is_connected(const GradedSpace& v) {
  if (std::any_of(v.degrees.begin(), v.degrees.end(), [](long d) { return d < 0; }))
    throw NegativeDegree("is_connected needs a nonnegative grading");
  return std::count(v.degrees.begin(), v.degrees.end(), 0L) == 1;
}

std::vector<LinMap> graded_algebra_morphisms(const GradedAlgebraData& a, const GradedAlgebraData& b,
                                             std::uint64_t budget) {
  std::vector<std::vector<bool>> support(a.alg.dim, std::vector<bool>(b.alg.dim));
  for (std::size_t i = 0; i < a.alg.dim; ++i)
    for (std::size_t x = 0; x < b.alg.dim; ++x)
      support[i][x] = a.space.degrees[i] == b.space.degrees[x];
  return detail::enumerate_algebra_morphisms(a.alg, b.alg, support, budget);
}

AlgebraData degree0_part(const GradedAlgebraData& a) {
  const std::size_t d = a.alg.dim;
  std::vector<std::size_t> keep;
  std::vector<bool> in_zero(d, false);
  for (std::size_t i = 0; i < d; ++i)
    if (a.space.degrees[i] == 0) {
      keep.push_back(i);
      in_zero[i] = true;
    }
  const FieldSpec k = a.alg.field;
  for (std::size_t r = 0; r < d; ++r)
    if (!in_zero[r] && !a.alg.unit.at(r, 0).is_zero())
      throw NotClosed("the unit has a component outside degree 0");
  const std::size_t n = keep.size();
  if (n == 0) throw NotClosed("the degree-0 component is zero");
  LinMap unit(k, n, 1), mult(k, n, n * n);
  std::vector<std::string> labels;
  for (std::size_t s = 0; s < n; ++s) {
    unit.set(s, 0, a.alg.unit.at(keep[s], 0));
    labels.push_back(a.alg.basis[keep[s]]);
    for (std::size_t t = 0; t < n; ++t) {
      const std::size_t col = keep[s] * d + keep[t];
      for (std::size_t r = 0; r < d; ++r) {
        const Scalar c = a.alg.mult.at(r, col);
        if (c.is_zero()) continue;
        if (!in_zero[r])
          throw NotClosed("product of " + a.alg.basis[keep[s]] + " and " + a.alg.basis[keep[t]] +
                          " leaves degree 0");
        const std::size_t pos = std::lower_bound(keep.begin(), keep.end(), r) - keep.begin();
        mult.set(pos, s * n + t, c);
      }
    }
  }
  return make_algebra(std::move(unit), std::move(mult), std::move(labels));
}

GradedAlgebraData include_degree0(const AlgebraData& a) {
  return make_graded(a, std::vector<long>(a.dim, 0));
}

GradedHopfData include_degree0(const HopfData& h) {
  return make_graded(h, std::vector<long>(h.bialg.dim(), 0));
}

GradedSpace hom_space(const GradedSpace& x, const GradedSpace& y) {
  if (x.field != y.field) throw FieldMismatch("hom_space: fields differ");
  GradedSpace out{x.field, {}};
  for (auto dy : y.degrees)
    for (auto dx : x.degrees) out.degrees.push_back(dy - dx);
  return out;
}

LinMap dual_comparison_map(const GradedSpace& x, const GradedSpace& y) {
  if (x.field != y.field) throw FieldMismatch("dual_comparison_map: fields differ");
  const std::size_t m = x.dim(), n = y.dim();
  LinMap c(x.field, n * m, m * n);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) c.set(j * m + i, i * n + j, Scalar::one(x.field));
  return c;
}

ValidationReport validate_graded(const GradedMeasuring& gm) {
  const auto& m = gm.m;
  if (gm.a_space.dim() != m.a.dim || gm.b_space.dim() != m.b.dim || gm.x_space.dim() != m.xdim)
    throw DimensionMismatch("graded measuring: degrees do not fit");
  ValidationReport report = validate_measuring(m);
  check_homogeneous(report, "psi", m.psi, tensor(gm.a_space, gm.x_space),
                    tensor(gm.x_space, gm.b_space), {m.a.dim, m.xdim});
  return report;
}

GradedMeasuring graded_tensor_measuring(const GradedMeasuring& m1, const GradedMeasuring& m2,
                                        const GradedBialgebraData& h) {
  const auto& a = h.space;
  const auto& b = m1.b_space;
  Measuring m = detail::tensor_measuring_braided(
      m1.m, m2.m, h.bialg,
      {koszul_swap(a, m1.x_space), koszul_swap(b, m2.x_space), koszul_swap(b, b)});
  return {std::move(m), a, b, tensor(m1.x_space, m2.x_space)};
}

}  // namespace sweedler
