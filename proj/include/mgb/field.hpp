#pragma once

#include <cstdint>

namespace mgb {

using Coeff = std::uint32_t;

/// Z/pZ for an odd prime p < 2^31. Elements are canonical residues in [0, p).
class PrimeField {
 public:
  static constexpr std::uint32_t kDefaultModulus = 32003;

  /// Throws InputError unless `modulus` is an odd prime below 2^31.
  explicit PrimeField(std::uint32_t modulus = kDefaultModulus);

  std::uint32_t modulus() const { return p_; }

  Coeff from_int(std::int64_t value) const;
  /// Symmetric representative in (-p/2, p/2], used for printing.
  std::int64_t to_signed(Coeff a) const;

  Coeff add(Coeff a, Coeff b) const {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Coeff sub(Coeff a, Coeff b) const { return a >= b ? a - b : a + p_ - b; }
  Coeff neg(Coeff a) const { return a == 0 ? 0 : p_ - a; }
  Coeff mul(Coeff a, Coeff b) const {
    return static_cast<Coeff>(static_cast<std::uint64_t>(a) * b % p_);
  }
  /// Extended Euclid. Throws UsageError on zero.
  Coeff inv(Coeff a) const;

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::uint32_t p_;
};

bool is_prime(std::uint64_t n);

}  // namespace mgb
