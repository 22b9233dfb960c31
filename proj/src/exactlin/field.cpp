#include "sweedler/field.hpp"

#include <charconv>
#include <stdexcept>

namespace sweedler {

bool is_prime_number(std::uint64_t n) noexcept {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

FieldSpec FieldSpec::prime(std::uint64_t p) {
  if (p > UINT32_MAX || !is_prime_number(p))
    throw std::invalid_argument("F_p requires a prime p < 2^32, got " + std::to_string(p));
  FieldSpec f;
  f.p_ = static_cast<std::uint32_t>(p);
  return f;
}

FieldSpec FieldSpec::parse(std::string_view text) {
  if (text == "Q") return rationals();
  if (text.size() >= 2 && text[0] == 'F' && text[1] != '0') {
    std::uint64_t p = 0;
    auto [ptr, ec] = std::from_chars(text.data() + 1, text.data() + text.size(), p);
    if (ec == std::errc{} && ptr == text.data() + text.size()) return prime(p);
  }
  throw std::invalid_argument("unknown field '" + std::string(text) + "'");
}

std::string FieldSpec::name() const {
  return is_rational() ? std::string("Q") : "F" + std::to_string(p_);
}

}  // namespace sweedler
