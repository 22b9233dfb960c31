#include "sweedler/hopfcore.hpp"
#include "sweedler/reconstruct.hpp"

namespace sweedler {

CoalgebraData coend_coalgebra(std::size_t xdim, FieldSpec field) {
  const std::size_t n = xdim, dim = n * n;
  const Scalar one = Scalar::one(field);
  LinMap comult(field, dim * dim, dim), counit(field, 1, dim);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) comult.set((i * n + k) * dim + (k * n + j), i * n + j, one);
      if (i == j) counit.set(0, i * n + j, one);
      labels.push_back("f" + std::to_string(i + 1) + (n >= 10 ? "_" : "") + std::to_string(j + 1));
    }
  return make_coalgebra(std::move(counit), std::move(comult), std::move(labels));
}

bool is_comodule(const LinMap& delta, const CoalgebraData& c) {
  const std::size_t n = delta.dom();
  if (delta.field() != c.field || delta.cod() != n * c.dim) return false;
  const auto id_x = LinMap::identity(c.field, n);
  const auto id_c = LinMap::identity(c.field, c.dim);
  return compose(kron(delta, id_c), delta) == compose(kron(id_x, c.comult), delta) &&
         compose(kron(id_x, c.counit), delta) == id_x;
}

LinMap comodule_to_coend_morphism(const LinMap& delta, const CoalgebraData& c) {
  if (!is_comodule(delta, c)) throw NotAComodule("delta is not a comodule structure");
  const std::size_t n = delta.dom(), dc = c.dim;
  LinMap phi(c.field, dc, n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t x = 0; x < dc; ++x) phi.set(x, i * n + j, delta.at(i * dc + x, j));
  return phi;
}

LinMap comodule_from_coend_morphism(const LinMap& phi, std::size_t xdim, const CoalgebraData& c) {
  if (!is_coalgebra_morphism(phi, coend_coalgebra(xdim, c.field), c))
    throw NotAMorphism("phi is not a coalgebra morphism coend(X) -> C");
  const std::size_t n = xdim, dc = c.dim;
  LinMap delta(c.field, n * dc, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t x = 0; x < dc; ++x) delta.set(i * dc + x, j, phi.at(x, i * n + j));
  return delta;
}

LinMap coend_pairing(const Measuring& m) {
  const std::size_t da = m.a.dim, db = m.b.dim, n = m.xdim;
  LinMap beta(m.a.field, db, da * n * n);
  for (std::size_t a = 0; a < da; ++a)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t y = 0; y < db; ++y)
          beta.set(y, a * n * n + i * n + j, m.psi.at(i * db + y, a * n + j));
  return beta;
}

CoalgebraData tensor_coalgebra(const CoalgebraData& c1, const CoalgebraData& c2) {
  if (c1.field != c2.field) throw FieldMismatch("tensor_coalgebra: fields differ");
  const FieldSpec k = c1.field;
  auto comult = compose(kron(LinMap::identity(k, c1.dim), swap_map(c2.dim, c1.dim, k),
                             LinMap::identity(k, c2.dim)),
                        kron(c1.comult, c2.comult));
  std::vector<std::string> labels;
  for (const auto& x : c1.basis)
    for (const auto& y : c2.basis) labels.push_back(x + "|" + y);
  return make_coalgebra(kron(c1.counit, c2.counit), std::move(comult), std::move(labels));
}

CoalgebraData finite_dual(const AlgebraData& a) { return dual_coalgebra(a); }

}  // namespace sweedler
