#include "sweedler/scalar.hpp"

#include <ostream>
#include <stdexcept>

#include "sweedler/errors.hpp"
#include "sweedler/detail/ring.hpp"

namespace sweedler {

namespace {

bool is_canonical_decimal(std::string_view s, bool allow_sign) {
  if (allow_sign && !s.empty() && s[0] == '-') s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return s.size() == 1 || s[0] != '0';
}

}  // namespace

Scalar::Scalar(FieldSpec field, long value) {
  if (field.is_rational()) {
    v_ = mpq_class(value);
  } else {
    const long p = field.characteristic();
    long r = value % p;
    if (r < 0) r += p;
    v_ = Residue{static_cast<std::uint32_t>(r), field.characteristic()};
  }
}

Scalar::Scalar(mpq_class value) : v_(std::move(value)) {
  std::get<mpq_class>(v_).canonicalize();
}

Scalar::Scalar(Residue r) : v_(r) {
  if (r.modulus == 0 || r.value >= r.modulus) throw std::invalid_argument("residue out of range");
}

Scalar Scalar::parse(FieldSpec field, std::string_view text) {
  const std::string s(text);
  if (field.is_prime()) {
    if (!is_canonical_decimal(text, false))
      throw std::invalid_argument("'" + s + "' is not a canonical residue");
    mpz_class z(s, 10);
    if (z >= field.characteristic())
      throw std::invalid_argument("'" + s + "' is not in [0, " +
                                  std::to_string(field.characteristic()) + ")");
    return Scalar(Residue{static_cast<std::uint32_t>(z.get_ui()), field.characteristic()});
  }
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    if (!is_canonical_decimal(text, true) || text == "-0")
      throw std::invalid_argument("'" + s + "' is not a canonical integer");
    return Scalar(mpq_class(mpz_class(s, 10)));
  }
  const auto num = text.substr(0, slash);
  const auto den = text.substr(slash + 1);
  if (!is_canonical_decimal(num, true) || !is_canonical_decimal(den, false) || num == "-0")
    throw std::invalid_argument("'" + s + "' is not a canonical fraction");
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d <= 1) throw std::invalid_argument("'" + s + "' must have denominator > 1");
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
  if (g != 1) throw std::invalid_argument("'" + s + "' is not in lowest terms");
  mpq_class q(n, d);
  return Scalar(std::move(q));
}

FieldSpec Scalar::field() const {
  if (auto r = std::get_if<Residue>(&v_)) return FieldSpec::prime(r->modulus);
  return FieldSpec::rationals();
}

bool Scalar::is_zero() const {
  if (auto r = std::get_if<Residue>(&v_)) return r->value == 0;
  return sgn(std::get<mpq_class>(v_)) == 0;
}

bool Scalar::is_one() const {
  if (auto r = std::get_if<Residue>(&v_)) return r->value == 1;
  return std::get<mpq_class>(v_) == 1;
}

void Scalar::check_same(const Scalar& o) const {
  if (v_.index() != o.v_.index() ||
      (holds_alternative<Residue>(v_) &&
       std::get<Residue>(v_).modulus != std::get<Residue>(o.v_).modulus))
    throw FieldMismatch("scalar arithmetic across fields " + field().name() + " and " +
                        o.field().name());
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  if (auto r = std::get_if<Residue>(&v_)) {
    detail::ModRing ring{r->modulus};
    return Scalar(Residue{ring.inv(r->value), r->modulus});
  }
  return Scalar(mpq_class(1) / std::get<mpq_class>(v_));
}

Scalar Scalar::operator-() const {
  if (auto r = std::get_if<Residue>(&v_))
    return Scalar(Residue{detail::ModRing{r->modulus}.neg(r->value), r->modulus});
  return Scalar(mpq_class(-std::get<mpq_class>(v_)));
}

Scalar& Scalar::operator+=(const Scalar& o) {
  check_same(o);
  if (auto r = std::get_if<Residue>(&v_))
    r->value = detail::ModRing{r->modulus}.add(r->value, std::get<Residue>(o.v_).value);
  else
    std::get<mpq_class>(v_) += std::get<mpq_class>(o.v_);
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  check_same(o);
  if (auto r = std::get_if<Residue>(&v_))
    r->value = detail::ModRing{r->modulus}.sub(r->value, std::get<Residue>(o.v_).value);
  else
    std::get<mpq_class>(v_) -= std::get<mpq_class>(o.v_);
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  check_same(o);
  if (auto r = std::get_if<Residue>(&v_))
    r->value = detail::ModRing{r->modulus}.mul(r->value, std::get<Residue>(o.v_).value);
  else
    std::get<mpq_class>(v_) *= std::get<mpq_class>(o.v_);
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  check_same(o);
  return *this *= o.inverse();
}

std::string Scalar::to_string() const {
  if (auto r = std::get_if<Residue>(&v_)) return std::to_string(r->value);
  return std::get<mpq_class>(v_).get_str(10);
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace sweedler
