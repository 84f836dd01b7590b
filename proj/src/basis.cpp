#include "mgb/basis.hpp"

#include <algorithm>

#include "mgb/errors.hpp"

namespace mgb {

BasisElement BasisElement::make(Polynomial poly, const GradingMap& grading) {
  if (poly.is_zero()) throw UsageError("basis element must be nonzero");
  if (poly.leading_coeff() != 1) throw UsageError("basis element must be monic");
  auto degree = homogeneous_degree(poly, grading);
  if (auto* bad = std::get_if<NotHomogeneous>(&degree)) {
    throw InvariantViolation("basis element is not homogeneous: degrees " +
                             to_string(bad->first) + " and " +
                             to_string(bad->other));
  }
  BasisElement e;
  e.lm = Monomial(poly.leading_monomial());
  e.mask = divisibility_mask(e.lm);
  e.degree = std::get<Multidegree>(std::move(degree));
  e.poly = std::move(poly);
  return e;
}

std::size_t BasisStore::append(Polynomial poly) {
  auto element = std::make_shared<const BasisElement>(
      BasisElement::make(std::move(poly), grading_));
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    const BasisElement& earlier = *elements_[i];
    if ((earlier.mask & ~element->mask) == 0 &&
        divides(earlier.lm, element->lm)) {
      throw InvariantViolation(
          "appended leading monomial is divisible by the leading monomial of "
          "element " +
          std::to_string(i));
    }
  }
  std::size_t index = elements_.size();
  by_degree_[element->degree].push_back(index);
  elements_.push_back(std::move(element));
  return index;
}

std::vector<std::size_t> BasisStore::indices_below(
    const Multidegree& bound) const {
  std::vector<std::size_t> out;
  for (const auto& [degree, indices] : by_degree_) {
    if (leq(degree, bound)) out.insert(out.end(), indices.begin(), indices.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Polynomial> BasisStore::polynomials() const {
  std::vector<Polynomial> out;
  out.reserve(elements_.size());
  for (const auto& e : elements_) out.push_back(e->poly);
  return out;
}

BasisView BasisView::all(const BasisStore& store) {
  BasisView view(store.grading());
  view.elements_.reserve(store.size());
  for (std::size_t i = 0; i < store.size(); ++i) {
    view.elements_.push_back(&store[i]);
  }
  return view;
}

BasisView BasisView::below(const BasisStore& store, const Multidegree& bound) {
  BasisView view(store.grading());
  view.bound_ = bound;
  for (std::size_t i : store.indices_below(bound)) {
    view.elements_.push_back(&store[i]);
  }
  return view;
}

BasisView BasisView::over(std::span<const BasisElement> elements,
                          const GradingMap& grading) {
  BasisView view(grading);
  view.elements_.reserve(elements.size());
  for (const auto& e : elements) view.elements_.push_back(&e);
  return view;
}

void BasisView::push_back(const BasisElement* element) {
  if (bound_ && !leq(element->degree, *bound_)) {
    throw UsageError("reducer of degree " + to_string(element->degree) +
                     " outside view bounded by " + to_string(*bound_));
  }
  elements_.push_back(element);
}

}  // namespace mgb
