#include <algorithm>

#include "sweedler/hopfcore.hpp"
#include "sweedler/linalg.hpp"
#include "sweedler/reconstruct.hpp"

namespace sweedler {

namespace {

// (pi (x) pi) . Delta_coend for pi : coend(X) -> D, without forming pi (x) pi.
LinMap projected_coend_comult(const LinMap& pi, std::size_t n) {
  const std::size_t dd = pi.cod();
  LinMap out(pi.field(), dd * dd, n * n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t l = 0; l < n; ++l)
      for (std::size_t k = 0; k < n; ++k) {
        const auto left = pi.column(j * n + k);
        const auto right = pi.column(k * n + l);
        for (std::size_t p = 0; p < dd; ++p) {
          if (left[p].is_zero()) continue;
          for (std::size_t q = 0; q < dd; ++q)
            if (!right[q].is_zero()) out.add_to(p * dd + q, j * n + l, left[p] * right[q]);
        }
      }
  return out;
}

LinMap coend_counit(std::size_t n, FieldSpec k) {
  LinMap e(k, 1, n * n);
  for (std::size_t i = 0; i < n; ++i) e.set(0, i * n + i, Scalar::one(k));
  return e;
}

// Relations sum_i f[k,i] f^s_ij - sum_l f[l,j] f^t_kl, one column per (k, j).
LinMap intertwiner_relations(const LinMap& f, std::size_t off_s, std::size_t n,
                             std::size_t off_t, std::size_t m, std::size_t width) {
  LinMap rel(f.field(), width, m * n);
  for (std::size_t k = 0; k < m; ++k)
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t col = k * n + j;
      for (std::size_t i = 0; i < n; ++i) {
        const Scalar c = f.at(k, i);
        if (!c.is_zero()) rel.add_to(off_s + i * n + j, col, c);
      }
      for (std::size_t l = 0; l < m; ++l) {
        const Scalar c = f.at(l, j);
        if (!c.is_zero()) rel.add_to(off_t + k * m + l, col, -c);
      }
    }
  return rel;
}

void require_shared_algebras(const std::vector<Measuring>& ms) {
  for (const auto& m : ms)
    if (!same_structure(m.a, ms.front().a) || !same_structure(m.b, ms.front().b))
      throw IncompatibleMeasurings("reconstruct: generators act between different algebras");
}

}  // namespace

GeneratedSubcoalgebra reconstruct_empty(const AlgebraData& a, const AlgebraData& b) {
  if (a.field != b.field) throw FieldMismatch("reconstruct: fields differ");
  const FieldSpec k = a.field;
  return GeneratedSubcoalgebra{a, b, make_coalgebra(LinMap(k, 1, 0), LinMap(k, 0, 0)),
                               LinMap(k, b.dim, 0), {}, {}, {}};
}

GeneratedSubcoalgebra reconstruct(const std::vector<Measuring>& measurings, bool auto_intertwiners,
                                  const std::vector<IndexedIntertwiner>& extra) {
  if (measurings.empty())
    throw PreconditionViolated("reconstruct: empty family, use reconstruct_empty");
  require_shared_algebras(measurings);
  const AlgebraData& a = measurings.front().a;
  const AlgebraData& b = measurings.front().b;
  const FieldSpec k = a.field;
  const std::size_t count = measurings.size(), da = a.dim, db = b.dim;

  std::vector<std::size_t> offset(count + 1, 0);
  for (std::size_t i = 0; i < count; ++i)
    offset[i + 1] = offset[i] + measurings[i].xdim * measurings[i].xdim;
  const std::size_t width = offset[count];

  RowSpace relations(k, width);
  const auto add_relations = [&](std::size_t s, std::size_t t, const LinMap& f) {
    relations.insert_columns(intertwiner_relations(f, offset[s], measurings[s].xdim, offset[t],
                                                   measurings[t].xdim, width));
  };
  if (auto_intertwiners)
    for (std::size_t s = 0; s < count; ++s)
      for (std::size_t t = 0; t < count; ++t)
        for (const auto& f : intertwiners(measurings[s], measurings[t])) add_relations(s, t, f);
  for (const auto& e : extra) {
    if (e.source >= count || e.target >= count)
      throw DimensionMismatch("reconstruct: intertwiner refers to a missing generator");
    if (!is_intertwiner(e.map, measurings[e.source], measurings[e.target]))
      throw NotAMorphism("reconstruct: supplied map is not an intertwiner");
    add_relations(e.source, e.target, e.map);
  }

  // D has the non-pivot positions as basis; pi reduces modulo the relations.
  const auto pivots = relations.pivots();
  std::vector<std::size_t> free;
  for (std::size_t w = 0; w < width; ++w)
    if (!std::binary_search(pivots.begin(), pivots.end(), w)) free.push_back(w);
  const std::size_t dd = free.size();
  const LinMap reduced = relations.reduce(LinMap::identity(k, width));
  LinMap pi(k, dd, width), sigma(k, width, dd);
  for (std::size_t t = 0; t < dd; ++t) {
    for (std::size_t w = 0; w < width; ++w) pi.set(t, w, reduced.at(free[t], w));
    sigma.set(free[t], t, Scalar::one(k));
  }

  // (pi (x) pi) . Delta, epsilon and beta on the direct sum, blockwise.
  LinMap delta_pi(k, dd * dd, width), epsilon(k, 1, width), beta(k, db, da * width);
  std::vector<LinMap> projections;
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t n = measurings[i].xdim, sq = n * n;
    projections.push_back(pi.columns(offset[i], sq));
    const LinMap block = projected_coend_comult(projections.back(), n);
    const LinMap counit = coend_counit(n, k);
    const LinMap pairing = coend_pairing(measurings[i]);
    for (std::size_t c = 0; c < sq; ++c) {
      for (std::size_t r = 0; r < dd * dd; ++r) delta_pi.set(r, offset[i] + c, block.at(r, c));
      epsilon.set(0, offset[i] + c, counit.at(0, c));
      for (std::size_t x = 0; x < da; ++x)
        for (std::size_t y = 0; y < db; ++y)
          beta.set(y, x * width + offset[i] + c, pairing.at(y, x * sq + c));
    }
  }

  const LinMap rel = relations.basis().transpose();
  if (!compose(delta_pi, rel).is_zero())
    throw InducedStructureIllDefined("comultiplication does not descend to the quotient");
  if (!compose(epsilon, rel).is_zero())
    throw InducedStructureIllDefined("counit does not descend to the quotient");
  if (!compose(beta, kron(LinMap::identity(k, da), rel)).is_zero())
    throw InducedStructureIllDefined("pairing does not descend to the quotient");

  std::vector<std::string> labels;
  for (std::size_t t = 0; t < dd; ++t) {
    const std::size_t i = std::upper_bound(offset.begin(), offset.end(), free[t]) - offset.begin() - 1;
    const std::size_t n = measurings[i].xdim, local = free[t] - offset[i];
    labels.push_back("m" + std::to_string(i) + ".f" + std::to_string(local / n + 1) +
                     (n >= 10 ? "_" : "") + std::to_string(local % n + 1));
  }
  GeneratedSubcoalgebra g{a,
                          b,
                          make_coalgebra(compose(epsilon, sigma), compose(delta_pi, sigma),
                                         std::move(labels)),
                          compose(beta, kron(LinMap::identity(k, da), sigma)),
                          std::move(projections),
                          measurings,
                          std::move(free)};
  const auto report = verify_generated(g);
  if (!report.ok()) throw InducedStructureIllDefined("generated subcoalgebra: " + report.summary());
  for (std::size_t i = 0; i < count; ++i)
    if (!verify_universal_factorization(g, i))
      throw InducedStructureIllDefined("generator " + std::to_string(i) +
                                       " is not recovered through the pairing");
  return g;
}

ValidationReport verify_generated(const GeneratedSubcoalgebra& g) {
  const FieldSpec k = g.a.field;
  const std::size_t da = g.a.dim, dd = g.d.dim;
  const auto id_a = LinMap::identity(k, da);
  const auto id_d = LinMap::identity(k, dd);
  ValidationReport report = validate_coalgebra(g.d);
  compare_maps(report, "pairing multiplicative", compose(g.pairing, kron(g.a.mult, id_d)),
               compose(g.b.mult, kron(g.pairing, g.pairing), kron(id_a, swap_map(da, dd, k), id_d),
                       kron(id_a, id_a, g.d.comult)),
               {da, da, dd});
  compare_maps(report, "pairing unital", compose(g.pairing, kron(g.a.unit, id_d)),
               compose(g.b.unit, g.d.counit), {dd});
  if (g.projections.size() != g.generators.size())
    throw DimensionMismatch("one projection per generator expected");
  for (std::size_t i = 0; i < g.generators.size(); ++i) {
    const auto& pi = g.projections[i];
    const std::size_t n = g.generators[i].xdim;
    compare_maps(report, "projection comultiplicative", compose(g.d.comult, pi),
                 projected_coend_comult(pi, n), {n * n});
    compare_maps(report, "projection counital", compose(g.d.counit, pi), coend_counit(n, k),
                 {n * n});
    compare_maps(report, "projection pairing", compose(g.pairing, kron(id_a, pi)),
                 coend_pairing(g.generators[i]), {da, n * n});
  }
  return report;
}

LinMap induced_comodule(const GeneratedSubcoalgebra& g, std::size_t i) {
  const auto& pi = g.projections.at(i);
  const std::size_t n = g.generators.at(i).xdim, dd = g.d.dim;
  LinMap delta(g.a.field, n * dd, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t l = 0; l < n; ++l)
      for (std::size_t x = 0; x < dd; ++x) delta.set(j * dd + x, l, pi.at(x, j * n + l));
  return delta;
}

bool verify_universal_factorization(const GeneratedSubcoalgebra& g, std::size_t i) {
  const auto& m = g.generators.at(i);
  const FieldSpec k = g.a.field;
  const std::size_t da = g.a.dim, n = m.xdim;
  const auto id_x = LinMap::identity(k, n);
  const LinMap recovered =
      compose(kron(id_x, g.pairing), kron(swap_map(da, n, k), LinMap::identity(k, g.d.dim)),
              kron(LinMap::identity(k, da), induced_comodule(g, i)));
  return recovered == m.psi;
}

LinMap pairing_map_to_dual(const GeneratedSubcoalgebra& g) {
  if (g.b.dim != 1) throw PreconditionViolated("pairing_map_to_dual needs B = k");
  const std::size_t da = g.a.dim, dd = g.d.dim;
  LinMap phi(g.a.field, da, dd);
  for (std::size_t x = 0; x < da; ++x)
    for (std::size_t d = 0; d < dd; ++d) phi.set(x, d, g.pairing.at(0, x * dd + d));
  return phi;
}

LinMap product_on_generated(const BialgebraData& h, const GeneratedSubcoalgebra& g1,
                            const GeneratedSubcoalgebra& g2, const GeneratedSubcoalgebra& g12,
                            const std::vector<GeneratorTriple>& triples) {
  for (const auto* g : {&g1, &g2, &g12})
    if (!same_structure(g->a, h.alg) || !same_structure(g->b, g1.b))
      throw PreconditionViolated("product_on_generated: algebras differ");
  if (!is_commutative(g1.b)) throw PreconditionViolated("product_on_generated: B not commutative");
  const FieldSpec k = h.field();
  const std::size_t d1 = g1.d.dim, d2 = g2.d.dim, d12 = g12.d.dim;

  // pi12 . canonical map coend(X) (x) coend(Y) -> coend(X (x) Y), per triple
  std::vector<LinMap> images;
  for (const auto& t : triples) {
    if (t.left >= g1.generators.size() || t.right >= g2.generators.size() ||
        t.product >= g12.generators.size())
      throw PreconditionViolated("product_on_generated: triple out of range");
    const auto& x = g1.generators[t.left];
    const auto& y = g2.generators[t.right];
    if (g12.generators[t.product].psi != tensor_measuring_bialgebra(x, y, h).psi)
      throw PreconditionViolated("product_on_generated: generator " + std::to_string(t.product) +
                                 " is not the tensor of its triple");
    const std::size_t n = x.xdim, m = y.xdim;
    const auto& pi = g12.projections[t.product];
    LinMap img(k, d12, n * n * m * m);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t p = 0; p < m; ++p)
          for (std::size_t q = 0; q < m; ++q) {
            const std::size_t src = (i * n + j) * m * m + p * m + q;
            const std::size_t dst = (i * m + p) * n * m + j * m + q;
            for (std::size_t r = 0; r < d12; ++r) img.set(r, src, pi.at(r, dst));
          }
    images.push_back(std::move(img));
  }

  const auto locate = [](const GeneratedSubcoalgebra& g, std::size_t w) {
    std::size_t off = 0;
    for (std::size_t i = 0; i < g.generators.size(); ++i) {
      const std::size_t sq = g.generators[i].xdim * g.generators[i].xdim;
      if (w < off + sq) return std::pair{i, w - off};
      off += sq;
    }
    throw DimensionMismatch("quotient basis position out of range");
  };
  LinMap phi(k, d12, d1 * d2);
  for (std::size_t u = 0; u < d1; ++u)
    for (std::size_t v = 0; v < d2; ++v) {
      const auto [i, li] = locate(g1, g1.quotient_basis[u]);
      const auto [j, lj] = locate(g2, g2.quotient_basis[v]);
      const auto it = std::find_if(triples.begin(), triples.end(), [&, i = i, j = j](const auto& t) {
        return t.left == i && t.right == j;
      });
      if (it == triples.end())
        throw PreconditionViolated("product_on_generated: no tensor generator for pair (" +
                                   std::to_string(i) + ", " + std::to_string(j) + ")");
      const auto& img = images[it - triples.begin()];
      const std::size_t m = g2.generators[j].xdim;
      for (std::size_t r = 0; r < d12; ++r) phi.set(r, u * d2 + v, img.at(r, li * m * m + lj));
    }

  for (std::size_t t = 0; t < triples.size(); ++t)
    if (compose(phi, kron(g1.projections[triples[t].left], g2.projections[triples[t].right])) !=
        images[t])
      throw PreconditionViolated("product_on_generated: generator family is not tensor-closed");

  if (!is_coalgebra_morphism(phi, tensor_coalgebra(g1.d, g2.d), g12.d))
    throw InducedStructureIllDefined("product is not a coalgebra morphism");
  const auto id_a = LinMap::identity(k, h.dim());
  const LinMap convolved =
      compose(g1.b.mult, kron(g1.pairing, g2.pairing),
              kron(id_a, swap_map(h.dim(), d1, k), LinMap::identity(k, d2)),
              kron(h.coalg.comult, LinMap::identity(k, d1 * d2)));
  if (compose(g12.pairing, kron(id_a, phi)) != convolved)
    throw InducedStructureIllDefined("product does not match the convolved pairings");
  return phi;
}

}  // namespace sweedler
