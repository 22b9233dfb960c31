#pragma once

// Shared test helpers: seeded generators and independent oracles that use
// plain integer arithmetic instead of the library's LinMap kernels.

#include <cstdint>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "sweedler/hopfcore.hpp"
#include "sweedler/measuring.hpp"

namespace testing {

using sweedler::AlgebraData;
using sweedler::FieldSpec;
using sweedler::LinMap;
using sweedler::Scalar;

inline constexpr int kCases = 200;

using Rng = std::mt19937_64;

inline Rng seeded(std::uint64_t salt) { return Rng(0x5eed0000ULL + salt); }

inline std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

inline FieldSpec random_field(Rng& rng) {
  static const FieldSpec fields[] = {FieldSpec::rationals(), FieldSpec::prime(2), FieldSpec::prime(3),
                                     FieldSpec::prime(5), FieldSpec::prime(7)};
  return fields[uniform(rng, 0, 4)];
}

inline Scalar random_scalar(FieldSpec field, Rng& rng) {
  if (field.is_prime()) return Scalar(field, static_cast<long>(uniform(rng, 0, field.characteristic() - 1)));
  const long num = static_cast<long>(uniform(rng, 0, 8)) - 4;
  const long den = static_cast<long>(uniform(rng, 1, 3));
  return Scalar(field, num) / Scalar(field, den);
}

inline LinMap random_map(FieldSpec field, std::size_t cod, std::size_t dom, Rng& rng) {
  LinMap m(field, cod, dom);
  for (std::size_t r = 0; r < cod; ++r)
    for (std::size_t c = 0; c < dom; ++c) m.set(r, c, random_scalar(field, rng));
  return m;
}

// Plain integer matrices modulo p.
using IntMatrix = std::vector<std::vector<long>>;

inline IntMatrix to_ints(const LinMap& m) {
  IntMatrix out(m.cod(), std::vector<long>(m.dom()));
  for (std::size_t r = 0; r < m.cod(); ++r)
    for (std::size_t c = 0; c < m.dom(); ++c) out[r][c] = m.at(r, c).residue();
  return out;
}

inline IntMatrix int_mul(const IntMatrix& a, const IntMatrix& b, long p) {
  const std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
  IntMatrix out(n, std::vector<long>(m, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      long s = 0;
      for (std::size_t l = 0; l < k; ++l) s += a[i][l] * b[l][j];
      out[i][j] = ((s % p) + p) % p;
    }
  return out;
}

inline IntMatrix int_identity(std::size_t n) {
  IntMatrix out(n, std::vector<long>(n, 0));
  for (std::size_t i = 0; i < n; ++i) out[i][i] = 1;
  return out;
}

// Entry (i*r + k, j*s + l) = a[i][j] * b[k][l], written out directly.
inline IntMatrix int_kron(const IntMatrix& a, const IntMatrix& b, long p) {
  const std::size_t ar = a.size(), ac = ar ? a[0].size() : 0, br = b.size(), bc = br ? b[0].size() : 0;
  IntMatrix out(ar * br, std::vector<long>(ac * bc));
  for (std::size_t i = 0; i < ar; ++i)
    for (std::size_t j = 0; j < ac; ++j)
      for (std::size_t k = 0; k < br; ++k)
        for (std::size_t l = 0; l < bc; ++l) out[i * br + k][j * bc + l] = (a[i][j] * b[k][l]) % p;
  return out;
}

// Every n x n matrix over F_p, in lexicographic order of the row-major entries.
inline std::vector<IntMatrix> all_matrices(std::size_t n, long p) {
  std::vector<IntMatrix> out;
  std::size_t total = 1;
  for (std::size_t i = 0; i < n * n; ++i) total *= static_cast<std::size_t>(p);
  for (std::size_t code = 0; code < total; ++code) {
    IntMatrix m(n, std::vector<long>(n));
    std::size_t rest = code;
    for (std::size_t e = n * n; e-- > 0;) {
      m[e / n][e % n] = static_cast<long>(rest % static_cast<std::size_t>(p));
      rest /= static_cast<std::size_t>(p);
    }
    out.push_back(std::move(m));
  }
  return out;
}

inline long int_det2(const IntMatrix& m, long p) {
  return (((m[0][0] * m[1][1] - m[0][1] * m[1][0]) % p) + p) % p;
}

// Number of classes of `points` under conjugation by invertible 2 x 2 matrices.
inline std::size_t conjugacy_class_count_2x2(const std::vector<IntMatrix>& points, long p) {
  std::vector<IntMatrix> gl;
  for (const auto& g : all_matrices(2, p))
    if (int_det2(g, p) != 0) gl.push_back(g);
  std::vector<bool> seen(points.size(), false);
  std::size_t classes = 0;
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (seen[i]) continue;
    ++classes;
    for (const auto& g : gl) {
      // g^{-1} by the adjugate
      const long det = int_det2(g, p);
      long inv_det = 1;
      while ((inv_det * det) % p != 1) ++inv_det;
      IntMatrix gi{{(g[1][1] * inv_det) % p, ((p - g[0][1]) * inv_det) % p},
                   {((p - g[1][0]) * inv_det) % p, (g[0][0] * inv_det) % p}};
      const IntMatrix c = int_mul(int_mul(g, points[i], p), gi, p);
      for (std::size_t j = 0; j < points.size(); ++j)
        if (points[j] == c) seen[j] = true;
    }
  }
  return classes;
}

inline IntMatrix int_add(const IntMatrix& a, const IntMatrix& b, long p) {
  IntMatrix out = a;
  for (std::size_t r = 0; r < a.size(); ++r)
    for (std::size_t c = 0; c < a[r].size(); ++c) out[r][c] = (a[r][c] + b[r][c]) % p;
  return out;
}

inline bool int_zero(const IntMatrix& m) {
  for (const auto& row : m)
    for (long v : row)
      if (v != 0) return false;
  return true;
}

using IntPair = std::pair<IntMatrix, IntMatrix>;

// Classes of pairs of n x n matrices under simultaneous conjugation by GL_n(F_p).
inline std::size_t pair_class_count(const std::vector<IntPair>& points, std::size_t n, long p) {
  std::vector<IntMatrix> gl, inv;
  const auto all = all_matrices(n, p);
  for (const auto& g : all)
    for (const auto& h : all)
      if (int_mul(g, h, p) == int_identity(n)) {
        gl.push_back(g);
        inv.push_back(h);
      }
  std::set<IntPair> seen;
  std::size_t classes = 0;
  for (const auto& pt : points) {
    if (seen.count(pt)) continue;
    ++classes;
    for (std::size_t t = 0; t < gl.size(); ++t)
      seen.insert({int_mul(int_mul(gl[t], pt.first, p), inv[t], p),
                   int_mul(int_mul(gl[t], pt.second, p), inv[t], p)});
  }
  return classes;
}

// Pairs (X1, Xg) over F2 with X1^2 + Xg^2 = 0 and X1 Xg + Xg X1 = 0: the
// n-dimensional modules of a(F2[g]/(g^2+1), F2[y]/(y^2)) written out by hand.
inline std::vector<IntPair> involution_dual_numbers_modules(std::size_t n) {
  std::vector<IntPair> out;
  const auto all = all_matrices(n, 2);
  for (const auto& x1 : all)
    for (const auto& xg : all)
      if (int_zero(int_add(int_mul(x1, x1, 2), int_mul(xg, xg, 2), 2)) &&
          int_zero(int_add(int_mul(x1, xg, 2), int_mul(xg, x1, 2), 2)))
        out.emplace_back(x1, xg);
  return out;
}

// Images Y = P (x) 1 + Q (x) g of y in M_n(F2[g]/(g^2+1)) with Y^2 = 0,
// multiplying A-valued matrices entry by entry.
inline std::vector<IntPair> involution_dual_numbers_morphisms(std::size_t n) {
  std::vector<IntPair> out;
  const auto all = all_matrices(n, 2);
  for (const auto& p : all)
    for (const auto& q : all) {
      bool zero = true;
      for (std::size_t i = 0; i < n && zero; ++i)
        for (std::size_t l = 0; l < n && zero; ++l) {
          long one = 0, g = 0;
          for (std::size_t j = 0; j < n; ++j) {
            // (p + q g)(p' + q' g) = (pp' + qq') + (pq' + qp') g
            one += p[i][j] * p[j][l] + q[i][j] * q[j][l];
            g += p[i][j] * q[j][l] + q[i][j] * p[j][l];
          }
          zero = one % 2 == 0 && g % 2 == 0;
        }
      if (zero) out.emplace_back(p, q);
    }
  return out;
}

// Every measuring A -> B of dimension n, via algebra morphisms A -> M_n(B).
inline std::vector<sweedler::Measuring> all_measurings(const AlgebraData& a, const AlgebraData& b,
                                                       std::size_t n) {
  std::vector<sweedler::Measuring> out;
  for (const auto& rho : sweedler::algebra_morphisms(a, sweedler::matrix_algebra(b, n)))
    out.push_back(sweedler::measuring_from_matrix_morphism(rho, a, b, n));
  return out;
}

// A acting on itself by left multiplication, as a measuring A -> k.
inline sweedler::Measuring regular_measuring(const AlgebraData& a) {
  return sweedler::make_measuring(a, sweedler::ground_algebra(a.field), a.dim, a.mult);
}

}  // namespace testing
