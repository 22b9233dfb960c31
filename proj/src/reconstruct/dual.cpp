#include <stdexcept>

#include "sweedler/hopfcore.hpp"
#include "sweedler/reconstruct.hpp"

namespace sweedler {

HopfData dual_hopf_check(const HopfData& h) {
  const auto input = validate_hopf(h);
  if (!input.ok()) throw InvalidHopf("not a Hopf algebra: " + input.summary());
  auto bialg = make_bialgebra(dual_algebra(h.bialg.coalg), dual_coalgebra(h.bialg.alg));
  HopfData dual = make_hopf(bialg, h.antipode.transpose());
  const auto report = validate_hopf(dual);
  if (!report.ok()) throw std::logic_error("dual of a Hopf algebra fails: " + report.summary());
  const auto solved = find_antipode(bialg);
  if (!solved || solved->antipode != dual.antipode)
    throw std::logic_error("antipode of the dual is not the transposed antipode");
  return dual;
}

}  // namespace sweedler
