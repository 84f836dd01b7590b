#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "mgb/grading.hpp"
#include "mgb/lattice.hpp"
#include "mgb/polynomial.hpp"

namespace mgb {

/// A monic homogeneous polynomial with its degree and cached leading data.
struct BasisElement {
  Polynomial poly;
  Multidegree degree;
  Monomial lm;
  std::uint64_t mask = 0;

  /// Throws UsageError unless `poly` is nonzero and monic, and
  /// InvariantViolation unless it is homogeneous.
  static BasisElement make(Polynomial poly, const GradingMap& grading);
};

/// Append-only Gröbner basis under construction. Indices never change.
/// Copies share element storage, so a snapshot is cheap.
class BasisStore {
 public:
  BasisStore() = default;
  explicit BasisStore(GradingMap grading) : grading_(std::move(grading)) {}

  /// Appends a monic homogeneous polynomial and returns its index. Throws
  /// InvariantViolation if an earlier leading monomial divides the new one.
  std::size_t append(Polynomial poly);

  std::size_t size() const { return elements_.size(); }
  bool empty() const { return elements_.empty(); }
  const BasisElement& operator[](std::size_t i) const { return *elements_[i]; }
  const GradingMap& grading() const { return grading_; }

  /// Indices of elements whose degree is <= `bound`, ascending.
  std::vector<std::size_t> indices_below(const Multidegree& bound) const;

  std::shared_ptr<const BasisStore> snapshot() const {
    return std::make_shared<const BasisStore>(*this);
  }

  std::vector<Polynomial> polynomials() const;

 private:
  GradingMap grading_;
  std::vector<std::shared_ptr<const BasisElement>> elements_;
  std::map<Multidegree, std::vector<std::size_t>, DegreeKeyLess> by_degree_;
};

/// The reducers visible to one reduction, in ascending index order.
/// A bounded view holds only elements of degree <= bound; reduce() refuses
/// polynomials whose degree is not above the bound.
class BasisView {
 public:
  explicit BasisView(const GradingMap& grading) : grading_(&grading) {}

  static BasisView all(const BasisStore& store);
  static BasisView below(const BasisStore& store, const Multidegree& bound);
  static BasisView over(std::span<const BasisElement> elements,
                        const GradingMap& grading);

  /// Appends a reducer with a larger index than all current ones. The
  /// element must outlive the view and respect the bound.
  void push_back(const BasisElement* element);

  const GradingMap& grading() const { return *grading_; }
  const std::optional<Multidegree>& bound() const { return bound_; }
  std::span<const BasisElement* const> elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }

 private:
  const GradingMap* grading_;
  std::optional<Multidegree> bound_;
  std::vector<const BasisElement*> elements_;
};

}  // namespace mgb
