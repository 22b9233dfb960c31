#include <stdexcept>

#include "sweedler/hopfcore.hpp"
#include "sweedler/linalg.hpp"

namespace sweedler {

namespace {

void require_bialgebra(const BialgebraData& b, const std::optional<LinMap>& symmetry) {
  const auto report = validate_bialgebra(b, symmetry);
  if (!report.ok()) throw InvalidBialgebra("not a bialgebra: " + report.summary());
}

// Solves mult . (s (x) 1) . comult = unit . counit for s, then checks
// mult . (1 (x) s) . comult = unit . counit.
std::optional<LinMap> convolution_inverse_of_identity(const AlgebraData& alg, const LinMap& comult,
                                                      const LinMap& counit) {
  const std::size_t d = alg.dim;
  const FieldSpec k = alg.field;
  // Column (p*d + q) is the flattened mult . (E_pq (x) 1) . comult, whose
  // (z, w) entry is sum_v comult[(q,v), w] * mult[z, (p,v)].
  LinMap system(k, d * d, d * d);
  for (std::size_t p = 0; p < d; ++p)
    for (std::size_t q = 0; q < d; ++q)
      for (std::size_t v = 0; v < d; ++v)
        for (std::size_t w = 0; w < d; ++w) {
          const Scalar delta = comult.at(q * d + v, w);
          if (delta.is_zero()) continue;
          for (std::size_t z = 0; z < d; ++z) {
            const Scalar m = alg.mult.at(z, p * d + v);
            if (!m.is_zero()) system.add_to(z * d + w, p * d + q, delta * m);
          }
        }
  const LinMap target = compose(alg.unit, counit);
  const auto solution = solve(system, flatten_map(target));
  if (!solution) return std::nullopt;
  LinMap s = unflatten_map(*solution, d, d);
  const auto id = LinMap::identity(k, d);
  if (compose(alg.mult, kron(id, s), comult) != target) return std::nullopt;
  return s;
}

}  // namespace

FusionOperators fusion_operators(const BialgebraData& b, const std::optional<LinMap>& symmetry) {
  require_bialgebra(b, symmetry);
  const std::size_t d = b.dim();
  const auto id = LinMap::identity(b.field(), d);
  const LinMap c = symmetry ? *symmetry : swap_map(d, d, b.field());
  const auto& mu = b.alg.mult;
  const auto& delta = b.coalg.comult;
  return FusionOperators{
      compose(kron(id, mu), kron(delta, id)),
      compose(kron(mu, id), kron(id, delta)),
      compose(kron(mu, id), kron(id, c), kron(delta, id)),
      compose(kron(id, mu), kron(c, id), kron(id, delta)),
  };
}

std::optional<HopfData> find_antipode(const BialgebraData& b) {
  const FusionOperators fusion = fusion_operators(b);
  auto s = convolution_inverse_of_identity(b.alg, b.coalg.comult, b.coalg.counit);
  const bool h_invertible = is_invertible(fusion.h);
  const bool h_prime_invertible = is_invertible(fusion.h_prime);
  if (s.has_value() != h_invertible || s.has_value() != h_prime_invertible)
    throw std::logic_error("antipode solve disagrees with fusion operator invertibility");
  if (!s) return std::nullopt;
  return make_hopf(b, std::move(*s));
}

std::optional<LinMap> find_opantipode(const BialgebraData& b, const std::optional<LinMap>& symmetry) {
  const FusionOperators fusion = fusion_operators(b, symmetry);
  const std::size_t d = b.dim();
  const LinMap c = symmetry ? *symmetry : swap_map(d, d, b.field());
  auto s = convolution_inverse_of_identity(b.alg, compose(c, b.coalg.comult), b.coalg.counit);
  const bool bar_invertible = is_invertible(fusion.h_bar);
  const bool bar_prime_invertible = is_invertible(fusion.h_bar_prime);
  if (s.has_value() != bar_invertible || s.has_value() != bar_prime_invertible)
    throw std::logic_error("opantipode solve disagrees with opfusion operator invertibility");
  return s;
}

}  // namespace sweedler
