#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace sweedler {

/// The base field: either the rationals or a prime field F_p with p < 2^32.
class FieldSpec {
 public:
  static FieldSpec rationals() noexcept { return FieldSpec{}; }
  /// Throws std::invalid_argument unless p is a prime below 2^32.
  static FieldSpec prime(std::uint64_t p);
  /// Parses "Q" or "F<p>".
  static FieldSpec parse(std::string_view text);

  bool is_rational() const noexcept { return p_ == 0; }
  bool is_prime() const noexcept { return p_ != 0; }
  /// 0 for Q.
  std::uint32_t characteristic() const noexcept { return p_; }

  std::string name() const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

 private:
  FieldSpec() = default;
  std::uint32_t p_ = 0;
};

bool is_prime_number(std::uint64_t n) noexcept;

}  // namespace sweedler
