#include <algorithm>
#include <map>

#include "sweedler/hopfcore.hpp"
#include "sweedler/linalg.hpp"
#include "sweedler/measuring.hpp"

namespace sweedler {

namespace {

void require_prime(FieldSpec field, const char* what) {
  if (!field.is_prime()) throw UnsupportedField(std::string(what) + " needs a prime field");
}

// Residues in column-major order, the key behind lex_less.
std::vector<std::uint32_t> column_major(const LinMap& f) {
  const auto& s = f.residues();
  std::vector<std::uint32_t> key;
  key.reserve(s.size());
  for (std::size_t c = 0; c < f.dom(); ++c)
    for (std::size_t r = 0; r < f.cod(); ++r) key.push_back(s[r * f.dom() + c]);
  return key;
}

}  // namespace

bool lex_less(const LinMap& f, const LinMap& g) {
  if (f.cod() != g.cod() || f.dom() != g.dom() || f.field() != g.field())
    throw DimensionMismatch("lex_less: maps of different shapes");
  if (f.field().is_prime()) return column_major(f) < column_major(g);
  for (std::size_t c = 0; c < f.dom(); ++c)
    for (std::size_t r = 0; r < f.cod(); ++r) {
      const mpq_class x = f.at(r, c).rational(), y = g.at(r, c).rational();
      if (x != y) return x < y;
    }
  return false;
}

std::vector<LinMap> general_linear_group(FieldSpec field, std::size_t n, std::uint64_t budget) {
  require_prime(field, "general_linear_group");
  const std::uint32_t q = field.characteristic();
  const std::uint64_t space = saturating_power(q, n * n);
  if (space > budget) throw BudgetExceeded(space, budget);
  std::vector<LinMap> group;
  LinMap m(field, n, n);
  auto& s = m.residues();
  while (true) {
    if (rank(m) == n) group.push_back(m);
    std::size_t k = s.size();
    while (k > 0) {
      if (++s[k - 1] < q) break;
      s[k - 1] = 0;
      --k;
    }
    if (k == 0) break;
  }
  return group;
}

LinMap conjugation_operator(const LinMap& m, std::size_t entry_dim) {
  return kron(m, invert(m).transpose(), LinMap::identity(m.field(), entry_dim));
}

std::vector<PointOrbit> conjugation_orbits(std::vector<LinMap> points, std::size_t n,
                                           std::size_t entry_dim, std::uint64_t budget) {
  std::vector<PointOrbit> orbits;
  if (points.empty()) return orbits;
  const FieldSpec k = points.front().field();
  require_prime(k, "conjugation_orbits");
  std::vector<LinMap> ops;
  for (const auto& g : general_linear_group(k, n, budget))
    ops.push_back(conjugation_operator(g, entry_dim));

  std::sort(points.begin(), points.end(), lex_less);
  std::map<std::vector<std::uint32_t>, bool> seen;  // key -> already placed in an orbit
  for (const auto& p : points) seen.emplace(column_major(p), false);
  if (seen.size() != points.size())
    throw PreconditionViolated("conjugation_orbits: repeated point");

  for (const auto& p : points) {
    if (seen.at(column_major(p))) continue;
    std::uint64_t size = 0;
    for (const auto& op : ops) {
      const auto it = seen.find(column_major(compose(op, p)));
      if (it == seen.end())
        throw PreconditionViolated("conjugation_orbits: point set is not closed under conjugation");
      if (!it->second) {
        it->second = true;
        ++size;
      }
    }
    // points are sorted, so the first unplaced point is the orbit minimum
    orbits.push_back({p, size});
  }
  return orbits;
}

OrbitReport enumerate_measurings(const AlgebraData& a, const AlgebraData& b, std::size_t n,
                                 std::uint64_t budget) {
  require_prime(a.field, "enumerate_measurings");
  OrbitReport report;
  if (n == 0) {
    report.total_count = 1;
    report.orbits.push_back({make_measuring(a, b, 0, LinMap(a.field, 0, 0)), 1});
    return report;
  }
  auto morphisms = algebra_morphisms(a, matrix_algebra(b, n), budget);
  report.total_count = morphisms.size();
  for (auto& orbit : conjugation_orbits(std::move(morphisms), n, b.dim, budget))
    report.orbits.push_back(
        {measuring_from_matrix_morphism(orbit.representative, a, b, n), orbit.size});
  return report;
}

}  // namespace sweedler
