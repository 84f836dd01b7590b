#include "mgb/verify.hpp"

#include "mgb/basis.hpp"
#include "mgb/buchberger.hpp"
#include "mgb/errors.hpp"

namespace mgb {

Certificate certify_groebner(const PolyRing& ring, const GradingMap& grading,
                             const std::vector<Polynomial>& basis,
                             const std::vector<Polynomial>& generators) {
  std::vector<BasisElement> elements;
  elements.reserve(basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const Polynomial& f = basis[i];
    if (f.is_zero()) {
      throw InputError("basis element " + std::to_string(i + 1) + " is zero");
    }
    if (std::holds_alternative<NotHomogeneous>(homogeneous_degree(f, grading))) {
      throw InputError("basis element " + std::to_string(i + 1) +
                       " is not homogeneous");
    }
    elements.push_back(BasisElement::make(ring.make_monic(f), grading));
  }
  const BasisView view = BasisView::over(elements, grading);

  Certificate cert;
  for (std::size_t j = 0; j < elements.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      ++cert.pairs_checked;
      Polynomial r = reduce(
          ring, s_polynomial(ring, elements[i].poly, elements[j].poly), view);
      if (!r.is_zero()) {
        cert.ok = false;
        cert.failed_item = "S-pair (" + std::to_string(i + 1) + "," +
                           std::to_string(j + 1) + ")";
        cert.remainder = std::move(r);
        return cert;
      }
    }
  }
  for (std::size_t k = 0; k < generators.size(); ++k) {
    ++cert.generators_checked;
    Polynomial r = reduce(ring, generators[k], view);
    if (!r.is_zero()) {
      cert.ok = false;
      cert.failed_item = "generator " + std::to_string(k + 1);
      cert.remainder = std::move(r);
      return cert;
    }
  }
  return cert;
}

}  // namespace mgb
