#pragma once

#include <cstdint>
#include <vector>

#include "sweedler/structures.hpp"

namespace sweedler::detail {

// Algebra morphisms A -> B whose matrix vanishes outside support[i][x]
// (source basis i, target coordinate x); an empty mask allows every entry.
// The budget applies to the q^(allowed entries) candidate space.
std::vector<LinMap> enumerate_algebra_morphisms(const AlgebraData& a, const AlgebraData& b,
                                                const std::vector<std::vector<bool>>& support,
                                                std::uint64_t budget);

}  // namespace sweedler::detail
