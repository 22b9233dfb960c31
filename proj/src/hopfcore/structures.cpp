#include "sweedler/structures.hpp"

#include <algorithm>

#include "sweedler/errors.hpp"

namespace sweedler {

std::vector<std::string> default_labels(std::size_t dim, const std::string& prefix) {
  std::vector<std::string> out;
  out.reserve(dim);
  for (std::size_t i = 0; i < dim; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

namespace {

void expect_shape(const LinMap& m, std::size_t cod, std::size_t dom, const char* what) {
  if (m.cod() != cod || m.dom() != dom)
    throw DimensionMismatch(std::string(what) + " must be " + std::to_string(cod) + "x" +
                            std::to_string(dom) + ", got " + std::to_string(m.cod()) + "x" +
                            std::to_string(m.dom()));
}

std::vector<std::string> labels_or_default(std::vector<std::string> basis, std::size_t dim) {
  if (basis.empty()) return default_labels(dim);
  if (basis.size() != dim) throw DimensionMismatch("basis label count differs from dimension");
  return basis;
}

}  // namespace

AlgebraData make_algebra(LinMap unit, LinMap mult, std::vector<std::string> basis) {
  const std::size_t dim = mult.cod();
  if (dim == 0) throw DimensionMismatch("an algebra needs dimension >= 1");
  expect_shape(unit, dim, 1, "unit");
  expect_shape(mult, dim, dim * dim, "mult");
  if (unit.field() != mult.field()) throw FieldMismatch("unit and mult over different fields");
  const FieldSpec field = mult.field();
  return AlgebraData{field, dim, std::move(unit), std::move(mult),
                     labels_or_default(std::move(basis), dim)};
}

CoalgebraData make_coalgebra(LinMap counit, LinMap comult, std::vector<std::string> basis) {
  const std::size_t dim = comult.dom();
  expect_shape(counit, 1, dim, "counit");
  expect_shape(comult, dim * dim, dim, "comult");
  if (counit.field() != comult.field())
    throw FieldMismatch("counit and comult over different fields");
  const FieldSpec field = comult.field();
  return CoalgebraData{field, dim, std::move(counit), std::move(comult),
                       labels_or_default(std::move(basis), dim)};
}

BialgebraData make_bialgebra(AlgebraData alg, CoalgebraData coalg) {
  if (alg.field != coalg.field) throw FieldMismatch("algebra and coalgebra over different fields");
  if (alg.dim != coalg.dim) throw DimensionMismatch("algebra and coalgebra dimensions differ");
  coalg.basis = alg.basis;
  return BialgebraData{std::move(alg), std::move(coalg)};
}

HopfData make_hopf(BialgebraData bialg, LinMap antipode) {
  expect_shape(antipode, bialg.dim(), bialg.dim(), "antipode");
  if (antipode.field() != bialg.field()) throw FieldMismatch("antipode over a different field");
  return HopfData{std::move(bialg), std::move(antipode)};
}

bool same_structure(const AlgebraData& a, const AlgebraData& b) {
  return a.field == b.field && a.dim == b.dim && a.unit == b.unit && a.mult == b.mult;
}

bool same_structure(const CoalgebraData& a, const CoalgebraData& b) {
  return a.field == b.field && a.dim == b.dim && a.counit == b.counit && a.comult == b.comult;
}

bool ValidationReport::failed(const std::string& axiom) const {
  return std::any_of(failures.begin(), failures.end(),
                     [&](const AxiomFailure& f) { return f.axiom == axiom; });
}

void ValidationReport::merge(const ValidationReport& other) {
  failures.insert(failures.end(), other.failures.begin(), other.failures.end());
}

std::string ValidationReport::summary() const {
  if (ok()) return "valid";
  std::string out;
  for (const auto& f : failures) {
    if (!out.empty()) out += "; ";
    out += f.axiom + " fails at (";
    for (std::size_t i = 0; i < f.witness.size(); ++i)
      out += (i ? "," : "") + std::to_string(f.witness[i]);
    out += ")";
  }
  return out;
}

namespace {

std::vector<std::size_t> unflatten(std::size_t index, const std::vector<std::size_t>& factors) {
  std::vector<std::size_t> out(factors.size());
  for (std::size_t i = factors.size(); i-- > 0;) {
    out[i] = index % factors[i];
    index /= factors[i];
  }
  return out;
}

}  // namespace

void compare_maps(ValidationReport& report, const std::string& axiom, const LinMap& lhs,
                  const LinMap& rhs, const std::vector<std::size_t>& factors,
                  const std::vector<std::size_t>& cod_factors) {
  if (lhs.cod() != rhs.cod() || lhs.dom() != rhs.dom())
    throw DimensionMismatch("compare_maps: shapes differ for " + axiom);
  const LinMap diff = lhs - rhs;
  for (std::size_t c = 0; c < diff.dom(); ++c) {
    if (diff.is_zero_column(c)) continue;
    std::vector<std::size_t> component;
    if (!cod_factors.empty())
      for (std::size_t r = 0; r < diff.cod(); ++r)
        if (!diff.at(r, c).is_zero()) {
          component = unflatten(r, cod_factors);
          break;
        }
    report.failures.push_back({axiom, unflatten(c, factors), std::move(component)});
    return;
  }
}

}  // namespace sweedler
