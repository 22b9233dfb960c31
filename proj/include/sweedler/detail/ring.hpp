#pragma once

// Arithmetic back ends shared by the dense kernels. ModRing works on raw
// residues, RatRing on GMP rationals; kernels are written once as templates
// over the ring.

#include <gmpxx.h>

#include <cstdint>

namespace sweedler::detail {

struct ModRing {
  using Elem = std::uint32_t;
  std::uint32_t p;

  Elem zero() const { return 0; }
  Elem one() const { return 1 % p; }
  bool is_zero(Elem a) const { return a == 0; }
  Elem add(Elem a, Elem b) const {
    std::uint64_t s = std::uint64_t{a} + b;
    return static_cast<Elem>(s >= p ? s - p : s);
  }
  Elem sub(Elem a, Elem b) const { return a >= b ? a - b : static_cast<Elem>(std::uint64_t{a} + p - b); }
  Elem neg(Elem a) const { return a == 0 ? 0 : p - a; }
  Elem mul(Elem a, Elem b) const { return static_cast<Elem>(std::uint64_t{a} * b % p); }
  Elem inv(Elem a) const {
    // extended Euclid on (a, p)
    std::int64_t t = 0, nt = 1, r = p, nr = a;
    while (nr != 0) {
      std::int64_t q = r / nr;
      std::int64_t tmp = t - q * nt;
      t = nt;
      nt = tmp;
      tmp = r - q * nr;
      r = nr;
      nr = tmp;
    }
    if (t < 0) t += p;
    return static_cast<Elem>(t);
  }
  // a += b * c
  void fma(Elem& a, Elem b, Elem c) const { a = add(a, mul(b, c)); }
};

struct RatRing {
  using Elem = mpq_class;

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  bool is_zero(const Elem& a) const { return sgn(a) == 0; }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem inv(const Elem& a) const { return 1 / a; }
  void fma(Elem& a, const Elem& b, const Elem& c) const {
    if (sgn(b) != 0 && sgn(c) != 0) a += b * c;
  }
};

}  // namespace sweedler::detail
