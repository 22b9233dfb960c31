#include "sweedler/tambara.hpp"

#include <algorithm>

#include "sweedler/hopfcore.hpp"
#include "sweedler/linalg.hpp"

namespace sweedler {

void Polynomial::add(const Word& w, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms.emplace(w, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms.erase(it);
}

Polynomial operator+(const Polynomial& p, const Polynomial& q) {
  Polynomial out = p;
  for (const auto& [w, c] : q.terms) out.add(w, c);
  return out;
}

Polynomial operator*(const Polynomial& p, const Polynomial& q) {
  Polynomial out;
  for (const auto& [u, c] : p.terms)
    for (const auto& [v, d] : q.terms) {
      Word w = u;
      w.insert(w.end(), v.begin(), v.end());
      out.add(w, c * d);
    }
  return out;
}

Polynomial scaled(const Polynomial& p, const Scalar& c) {
  Polynomial out;
  for (const auto& [w, d] : p.terms) out.add(w, c * d);
  return out;
}

namespace {

Polynomial as_polynomial(const TambaraCoordinate& x) {
  Polynomial p;
  if (x.generator)
    p.add({*x.generator}, Scalar::one(x.constant.field()));
  else
    p.add({}, x.constant);
  return p;
}

// The basis index of 1_B when the unit is a basis vector.
std::optional<std::size_t> unit_basis_vector(const AlgebraData& b) {
  std::optional<std::size_t> found;
  for (std::size_t r = 0; r < b.dim; ++r) {
    const Scalar c = b.unit.at(r, 0);
    if (c.is_zero()) continue;
    if (!c.is_one() || found) return std::nullopt;
    found = r;
  }
  return found;
}

}  // namespace

TambaraPresentation tambara_presentation(const AlgebraData& a, const AlgebraData& b) {
  if (a.field != b.field) throw FieldMismatch("tambara_presentation: fields differ");
  const FieldSpec k = a.field;
  const std::size_t da = a.dim, db = b.dim;
  const auto unit_b = unit_basis_vector(b);

  TambaraPresentation p{a, b, PresentedAlgebra{k, {}, {}}, {}};
  p.coordinates.assign(da, std::vector<TambaraCoordinate>(db, {std::nullopt, Scalar::zero(k)}));
  for (std::size_t beta = 0; beta < db; ++beta)
    for (std::size_t i = 0; i < da; ++i) {
      auto& x = p.coordinates[i][beta];
      if (unit_b && beta == *unit_b) {
        x.constant = a.unit.at(i, 0);
      } else {
        x.generator = p.algebra.generators.size();
        p.algebra.generators.push_back("x_{" + a.basis[i] + "," + b.basis[beta] + "}");
      }
    }
  std::vector<std::vector<Polynomial>> x(da, std::vector<Polynomial>(db));
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t beta = 0; beta < db; ++beta) x[i][beta] = as_polynomial(p.coordinates[i][beta]);

  // delta(e_beta e_beta') = delta(e_beta) delta(e_beta'), coordinate k
  for (std::size_t beta = 0; beta < db; ++beta)
    for (std::size_t beta2 = 0; beta2 < db; ++beta2)
      for (std::size_t kk = 0; kk < da; ++kk) {
        Polynomial rel;
        for (std::size_t i = 0; i < da; ++i)
          for (std::size_t j = 0; j < da; ++j) {
            const Scalar c = a.mult.at(kk, i * da + j);
            if (!c.is_zero()) rel = rel + scaled(x[i][beta] * x[j][beta2], c);
          }
        for (std::size_t gamma = 0; gamma < db; ++gamma) {
          const Scalar c = b.mult.at(gamma, beta * db + beta2);
          if (!c.is_zero()) rel = rel + scaled(x[kk][gamma], -c);
        }
        if (!rel.is_zero()) p.algebra.relations.push_back(std::move(rel));
      }
  // delta(1_B) = 1_A (x) 1 when 1_B is not a basis vector
  if (!unit_b)
    for (std::size_t kk = 0; kk < da; ++kk) {
      Polynomial rel;
      for (std::size_t beta = 0; beta < db; ++beta) {
        const Scalar c = b.unit.at(beta, 0);
        if (!c.is_zero()) rel = rel + scaled(x[kk][beta], c);
      }
      rel.add({}, -a.unit.at(kk, 0));
      if (!rel.is_zero()) p.algebra.relations.push_back(std::move(rel));
    }
  return p;
}

LinMap evaluate(const Polynomial& p, const std::vector<LinMap>& matrices, std::size_t n) {
  FieldSpec k = matrices.empty() ? (p.terms.empty() ? FieldSpec::rationals()
                                                    : p.terms.begin()->second.field())
                                 : matrices.front().field();
  LinMap out(k, n, n);
  for (const auto& [w, c] : p.terms) {
    LinMap term = LinMap::identity(k, n);
    for (auto g : w) term = compose(term, matrices.at(g));
    out += term.scaled(c);
  }
  return out;
}

ModuleReport tambara_modules(const TambaraPresentation& p, std::size_t n, std::uint64_t budget) {
  const FieldSpec k = p.algebra.field;
  if (!k.is_prime()) throw UnsupportedField("tambara_modules needs a prime field");
  const std::size_t gens = p.algebra.generators.size(), sq = n * n;
  const std::uint64_t space = saturating_power(k.characteristic(), gens * sq);
  if (space > budget) throw BudgetExceeded(space, budget);

  ModuleReport report;
  LinMap point(k, sq, gens);
  std::vector<LinMap> matrices(gens, LinMap(k, n, n));
  // digits run over the column-major entries so that the output is lex_less-sorted
  std::vector<std::uint32_t> digits(sq * gens, 0);
  while (true) {
    auto& s = point.residues();
    for (std::size_t g = 0; g < gens; ++g)
      for (std::size_t r = 0; r < sq; ++r) s[r * gens + g] = digits[g * sq + r];
    for (std::size_t g = 0; g < gens; ++g) matrices[g] = unflatten_map(point.column_map(g), n, n);
    const bool ok = std::all_of(p.algebra.relations.begin(), p.algebra.relations.end(),
                                [&](const Polynomial& rel) { return evaluate(rel, matrices, n).is_zero(); });
    if (ok) report.modules.push_back(point);
    std::size_t pos = digits.size();
    while (pos > 0) {
      if (++digits[pos - 1] < k.characteristic()) break;
      digits[pos - 1] = 0;
      --pos;
    }
    if (pos == 0) break;
  }
  report.total_count = report.modules.size();
  if (n > 0) report.orbits = conjugation_orbits(report.modules, n, 1, budget);
  return report;
}

LinMap module_to_morphism(const TambaraPresentation& p, const LinMap& module, std::size_t n) {
  const FieldSpec k = p.algebra.field;
  const std::size_t da = p.a.dim, db = p.b.dim;
  LinMap rho(k, n * n * da, db);
  for (std::size_t beta = 0; beta < db; ++beta)
    for (std::size_t i = 0; i < da; ++i) {
      const auto& x = p.coordinates[i][beta];
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t l = 0; l < n; ++l) {
          const Scalar c = x.generator ? module.at(j * n + l, *x.generator)
                                       : (j == l ? x.constant : Scalar::zero(k));
          if (!c.is_zero()) rho.set((j * n + l) * da + i, beta, c);
        }
    }
  return rho;
}

std::vector<LinMap> module_intertwiners(const LinMap& x, std::size_t n, const LinMap& y,
                                        std::size_t m) {
  const FieldSpec k = x.field();
  const std::size_t gens = x.dom();
  // unknown f (m x n) at y*n + x; equation (f X_g - Y_g f)[r, c] for each g
  LinMap system(k, gens * m * n, m * n);
  for (std::size_t g = 0; g < gens; ++g)
    for (std::size_t r = 0; r < m; ++r)
      for (std::size_t c = 0; c < n; ++c) {
        const std::size_t row = (g * m + r) * n + c;
        for (std::size_t t = 0; t < n; ++t) {
          const Scalar v = x.at(t * n + c, g);
          if (!v.is_zero()) system.add_to(row, r * n + t, v);
        }
        for (std::size_t t = 0; t < m; ++t) {
          const Scalar v = y.at(r * m + t, g);
          if (!v.is_zero()) system.add_to(row, t * n + c, -v);
        }
      }
  std::vector<LinMap> out;
  for (const auto& v : kernel_basis(system))
    out.push_back(unflatten_map(LinMap::column_vector(k, v), m, n));
  return out;
}

CorrespondenceReport correspondence_check(const AlgebraData& a, const AlgebraData& b,
                                          std::size_t n, std::uint64_t budget) {
  const auto p = tambara_presentation(a, b);
  const auto modules = tambara_modules(p, n, budget);
  CorrespondenceReport r;
  r.n = n;
  r.module_count = modules.total_count;

  std::vector<LinMap> morphisms;
  if (n == 0)
    morphisms.push_back(LinMap(a.field, 0, b.dim));
  else
    morphisms = algebra_morphisms(b, matrix_algebra(a, n), budget);
  r.morphism_count = morphisms.size();

  std::vector<LinMap> images;
  for (const auto& x : modules.modules) images.push_back(module_to_morphism(p, x, n));
  auto sorted = images;
  std::sort(sorted.begin(), sorted.end(), lex_less);
  r.bijective = sorted.size() == morphisms.size() &&
                std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end() &&
                std::equal(sorted.begin(), sorted.end(), morphisms.begin());

  if (n == 0) {
    r.module_orbits = r.morphism_orbits = 1;
    r.orbits_match = r.intertwiners_match = r.bijective;
    return r;
  }
  const auto morphism_orbits = conjugation_orbits(morphisms, n, a.dim, budget);
  r.module_orbits = modules.orbits.size();
  r.morphism_orbits = morphism_orbits.size();

  // each module orbit must land on a morphism orbit of the same size
  r.orbits_match = r.module_orbits == r.morphism_orbits;
  std::vector<bool> hit(morphism_orbits.size(), false);
  std::vector<Measuring> measurings;
  for (const auto& orbit : modules.orbits) {
    if (!r.orbits_match) break;
    const LinMap image = module_to_morphism(p, orbit.representative, n);
    bool placed = false;
    for (std::size_t t = 0; t < morphism_orbits.size() && !placed; ++t) {
      if (hit[t] || morphism_orbits[t].size != orbit.size) continue;
      for (const auto& op : general_linear_group(a.field, n, budget))
        if (compose(conjugation_operator(op, a.dim), morphism_orbits[t].representative) == image) {
          hit[t] = placed = true;
          break;
        }
    }
    r.orbits_match = placed;
    measurings.push_back(measuring_from_matrix_morphism(image, b, a, n));
  }

  r.intertwiners_match = r.orbits_match;
  for (std::size_t s = 0; s < modules.orbits.size() && r.intertwiners_match; ++s)
    for (std::size_t t = 0; t < modules.orbits.size() && r.intertwiners_match; ++t)
      r.intertwiners_match = module_intertwiners(modules.orbits[s].representative, n,
                                                 modules.orbits[t].representative, n) ==
                             intertwiners(measurings[s], measurings[t]);
  return r;
}

}  // namespace sweedler
