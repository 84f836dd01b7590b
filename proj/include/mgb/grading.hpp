#pragma once

#include <cstddef>
#include <variant>
#include <vector>

#include "mgb/lattice.hpp"
#include "mgb/monomial.hpp"
#include "mgb/polynomial.hpp"

namespace mgb {

/// Assignment of a degree in N^d to every ring variable. Every variable's
/// degree is nonzero, so only the monomial 1 has degree zero.
class GradingMap {
 public:
  GradingMap() = default;
  /// Throws InputError on mixed dimensions or a zero variable degree.
  explicit GradingMap(std::vector<Multidegree> variable_degrees);

  std::size_t nvars() const { return degrees_.size(); }
  std::size_t dim() const { return dim_; }
  const Multidegree& variable_degree(std::size_t v) const {
    return degrees_[v];
  }
  const std::vector<Multidegree>& variable_degrees() const { return degrees_; }

  friend bool operator==(const GradingMap&, const GradingMap&) = default;

 private:
  std::vector<Multidegree> degrees_;
  std::size_t dim_ = 0;
};

Multidegree monomial_multidegree(MonomialView m, const GradingMap& grading);

/// Two terms of a polynomial whose degrees disagree.
struct NotHomogeneous {
  Multidegree first;
  Multidegree other;
};

/// Common degree of all terms. Throws UsageError on the zero polynomial.
std::variant<Multidegree, NotHomogeneous> homogeneous_degree(
    const Polynomial& f, const GradingMap& grading);

/// Degree of a polynomial already known to be homogeneous (taken from the
/// leading term).
Multidegree leading_multidegree(const Polynomial& f, const GradingMap& grading);

bool is_homogeneous_of(const Polynomial& f, const Multidegree& degree,
                       const GradingMap& grading);

}  // namespace mgb
