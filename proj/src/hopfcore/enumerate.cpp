#include <algorithm>
#include <functional>

#include "sweedler/detail/enumerate.hpp"
#include "sweedler/hopfcore.hpp"

namespace sweedler {

std::uint64_t saturating_power(std::uint64_t q, std::uint64_t exponent) {
  std::uint64_t out = 1;
  for (std::uint64_t i = 0; i < exponent; ++i) {
    if (q != 0 && out > UINT64_MAX / q) return UINT64_MAX;
    out *= q;
  }
  return out;
}

namespace {

void require_prime(FieldSpec field, const char* what) {
  if (!field.is_prime())
    throw UnsupportedField(std::string(what) + " enumerates candidates and needs a prime field");
}

struct Term {
  std::size_t index;
  std::uint32_t coeff;
};

// Nonzero entries of each column of m.
std::vector<std::vector<Term>> sparse_columns(const LinMap& m) {
  std::vector<std::vector<Term>> cols(m.dom());
  const auto& s = m.residues();
  for (std::size_t r = 0; r < m.cod(); ++r)
    for (std::size_t c = 0; c < m.dom(); ++c)
      if (s[r * m.dom() + c] != 0) cols[c].push_back({r, s[r * m.dom() + c]});
  return cols;
}

}  // namespace

namespace detail {

std::vector<LinMap> enumerate_algebra_morphisms(const AlgebraData& a, const AlgebraData& b,
                                                const std::vector<std::vector<bool>>& support,
                                                std::uint64_t budget) {
  require_prime(a.field, "algebra_morphisms");
  if (a.field != b.field) throw FieldMismatch("algebra_morphisms: fields differ");
  const std::size_t da = a.dim, db = b.dim;
  const ModRing ring{a.field.characteristic()};
  const std::uint64_t q = ring.p;

  // allowed target coordinates for each source basis element
  std::vector<std::vector<std::size_t>> slots(da);
  std::uint64_t free_entries = 0;
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t x = 0; x < db; ++x)
      if (support.empty() || support[i][x]) {
        slots[i].push_back(x);
        ++free_entries;
      }
  const std::uint64_t space = saturating_power(q, free_entries);
  if (space > budget) throw BudgetExceeded(space, budget);

  const auto a_mult = sparse_columns(a.mult);  // column i*da+j: e_i e_j
  const auto& b_mult = b.mult.residues();      // row z, column x*db+y
  const auto& a_unit = a.unit.residues();
  const auto& b_unit = b.unit.residues();

  // A product check (i, j) becomes decidable once all of i, j and the support
  // of e_i e_j are assigned; attach it to the largest such index.
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> checks(da);
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t j = 0; j < da; ++j) {
      std::size_t last = std::max(i, j);
      for (const auto& t : a_mult[i * da + j]) last = std::max(last, t.index);
      checks[last].push_back({i, j});
    }
  std::size_t unit_last = 0;
  bool unit_zero = true;
  for (std::size_t i = 0; i < da; ++i)
    if (a_unit[i] != 0) {
      unit_last = i;
      unit_zero = false;
    }

  std::vector<std::vector<std::uint32_t>> image(da, std::vector<std::uint32_t>(db, 0));
  std::vector<std::uint32_t> lhs(db), rhs(db);

  const auto unit_ok = [&] {
    std::fill(lhs.begin(), lhs.end(), 0);
    for (std::size_t i = 0; i < da; ++i)
      if (a_unit[i] != 0)
        for (std::size_t z = 0; z < db; ++z) ring.fma(lhs[z], a_unit[i], image[i][z]);
    return lhs == std::vector<std::uint32_t>(b_unit.begin(), b_unit.end());
  };
  const auto product_ok = [&](std::size_t i, std::size_t j) {
    std::fill(lhs.begin(), lhs.end(), 0);
    for (const auto& t : a_mult[i * da + j])
      for (std::size_t z = 0; z < db; ++z) ring.fma(lhs[z], t.coeff, image[t.index][z]);
    std::fill(rhs.begin(), rhs.end(), 0);
    for (std::size_t x = 0; x < db; ++x) {
      if (image[i][x] == 0) continue;
      for (std::size_t y = 0; y < db; ++y) {
        if (image[j][y] == 0) continue;
        const std::uint32_t xy = ring.mul(image[i][x], image[j][y]);
        for (std::size_t z = 0; z < db; ++z) ring.fma(rhs[z], xy, b_mult[z * db * db + x * db + y]);
      }
    }
    return lhs == rhs;
  };

  std::vector<LinMap> found;
  if (unit_zero && !unit_ok()) return found;  // only possible if 1_B = 0

  // Depth-first over the images of e_0, e_1, ... in lexicographic order.
  std::function<void(std::size_t)> descend = [&](std::size_t i) {
    if (i == da) {
      LinMap f(a.field, db, da);
      auto& s = f.residues();
      for (std::size_t c = 0; c < da; ++c)
        for (std::size_t z = 0; z < db; ++z) s[z * da + c] = image[c][z];
      found.push_back(std::move(f));
      return;
    }
    auto& v = image[i];
    const auto& free = slots[i];
    std::fill(v.begin(), v.end(), 0);
    while (true) {
      bool ok = !(i == unit_last && !unit_zero) || unit_ok();
      for (std::size_t k = 0; ok && k < checks[i].size(); ++k)
        ok = product_ok(checks[i][k].first, checks[i][k].second);
      if (ok) descend(i + 1);
      // odometer step, last free coordinate fastest
      std::size_t k = free.size();
      while (k > 0) {
        auto& digit = v[free[k - 1]];
        if (++digit < q) break;
        digit = 0;
        --k;
      }
      if (k == 0) break;
    }
    std::fill(v.begin(), v.end(), 0);
  };
  descend(0);
  return found;
}

}  // namespace detail

std::vector<LinMap> algebra_morphisms(const AlgebraData& a, const AlgebraData& b,
                                      std::uint64_t budget) {
  return detail::enumerate_algebra_morphisms(a, b, {}, budget);
}

std::vector<LinMap> grouplikes(const CoalgebraData& c, std::uint64_t budget) {
  require_prime(c.field, "grouplikes");
  const std::size_t d = c.dim;
  const detail::ModRing ring{c.field.characteristic()};
  const std::uint64_t space = saturating_power(ring.p, d);
  if (space > budget) throw BudgetExceeded(space, budget);
  const auto delta = sparse_columns(c.comult);
  const auto& eps = c.counit.residues();

  std::vector<LinMap> found;
  std::vector<std::uint32_t> x(d, 0), lhs(d * d), rhs(d * d);
  while (true) {
    std::uint32_t e = 0;
    for (std::size_t i = 0; i < d; ++i) ring.fma(e, eps[i], x[i]);
    if (e == ring.one()) {
      std::fill(lhs.begin(), lhs.end(), 0);
      for (std::size_t i = 0; i < d; ++i)
        if (x[i] != 0)
          for (const auto& t : delta[i]) ring.fma(lhs[t.index], t.coeff, x[i]);
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) rhs[i * d + j] = ring.mul(x[i], x[j]);
      if (lhs == rhs) {
        LinMap v(c.field, d, 1);
        v.residues() = x;
        found.push_back(std::move(v));
      }
    }
    std::size_t k = d;
    while (k > 0) {
      if (++x[k - 1] < ring.p) break;
      x[k - 1] = 0;
      --k;
    }
    if (k == 0) break;
  }
  return found;
}

std::vector<LinMap> grouplikes(const CoalgebraData& c, const GrouplikeCandidates& candidates,
                               std::uint64_t budget) {
  for (auto axis : candidates.axes)
    if (axis >= c.dim) throw DimensionMismatch("grouplike candidate axis out of range");
  for (const auto& v : candidates.values)
    if (v.field() != c.field) throw FieldMismatch("grouplike candidate value in another field");
  const std::size_t n = candidates.axes.size(), m = candidates.values.size();
  const std::uint64_t space = saturating_power(m, n);
  if (space > budget) throw BudgetExceeded(space, budget);
  std::vector<LinMap> found;
  if (m == 0 && n > 0) return found;
  const LinMap one = LinMap::identity(c.field, 1);
  std::vector<std::size_t> digits(n, 0);
  while (true) {
    LinMap x(c.field, c.dim, 1);
    for (std::size_t i = 0; i < n; ++i) x.set(candidates.axes[i], 0, candidates.values[digits[i]]);
    if (compose(c.counit, x) == one && compose(c.comult, x) == kron(x, x)) found.push_back(x);
    std::size_t k = n;
    while (k > 0) {
      if (++digits[k - 1] < m) break;
      digits[k - 1] = 0;
      --k;
    }
    if (k == 0) break;
  }
  // the box may reach the same vector twice (repeated axes or values)
  std::vector<LinMap> unique;
  for (auto& g : found)
    if (std::find(unique.begin(), unique.end(), g) == unique.end()) unique.push_back(std::move(g));
  return unique;
}

}  // namespace sweedler
