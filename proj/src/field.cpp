#include "mgb/field.hpp"

#include <string>

#include "mgb/errors.hpp"

namespace mgb {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint32_t modulus) : p_(modulus) {
  if (modulus <= 2 || modulus >= (1u << 31) || !is_prime(modulus)) {
    throw InputError("modulus " + std::to_string(modulus) +
                     " is not an odd prime below 2^31");
  }
}

Coeff PrimeField::from_int(std::int64_t value) const {
  std::int64_t r = value % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return static_cast<Coeff>(r);
}

std::int64_t PrimeField::to_signed(Coeff a) const {
  return a > p_ / 2 ? static_cast<std::int64_t>(a) - p_
                    : static_cast<std::int64_t>(a);
}

Coeff PrimeField::inv(Coeff a) const {
  if (a == 0) throw UsageError("inverse of zero in prime field");
  std::int64_t r0 = p_, r1 = a;
  std::int64_t t0 = 0, t1 = 1;
  while (r1 != 0) {
    std::int64_t q = r0 / r1;
    std::int64_t r2 = r0 - q * r1;
    r0 = r1;
    r1 = r2;
    std::int64_t t2 = t0 - q * t1;
    t0 = t1;
    t1 = t2;
  }
  return from_int(t0);
}

}  // namespace mgb
