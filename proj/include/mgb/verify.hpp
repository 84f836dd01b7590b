#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "mgb/grading.hpp"
#include "mgb/polynomial.hpp"

namespace mgb {

struct Certificate {
  bool ok = true;
  std::size_t pairs_checked = 0;
  std::size_t generators_checked = 0;
  /// Set on failure: what failed ("S-pair (i,j)" or "generator k") and its
  /// nonzero normal form.
  std::string failed_item;
  std::optional<Polynomial> remainder;
};

/// Definition-level Gröbner certificate with no criteria: every S-pair of
/// `basis` and every generator reduces to zero against `basis`. Stops at the
/// first counterexample. Basis polynomials must be nonzero and homogeneous
/// (InputError otherwise); they need not be monic.
Certificate certify_groebner(const PolyRing& ring, const GradingMap& grading,
                             const std::vector<Polynomial>& basis,
                             const std::vector<Polynomial>& generators);

}  // namespace mgb
