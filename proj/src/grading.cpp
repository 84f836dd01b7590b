#include "mgb/grading.hpp"

#include "mgb/errors.hpp"

namespace mgb {

GradingMap::GradingMap(std::vector<Multidegree> variable_degrees)
    : degrees_(std::move(variable_degrees)) {
  if (degrees_.empty()) return;
  dim_ = degrees_.front().dim();
  if (dim_ == 0) throw InputError("grading dimension must be at least 1");
  for (std::size_t v = 0; v < degrees_.size(); ++v) {
    if (degrees_[v].dim() != dim_) {
      throw InputError("variable " + std::to_string(v) + " has degree " +
                       to_string(degrees_[v]) + " of the wrong dimension");
    }
    if (degrees_[v].is_zero()) {
      throw InputError("variable " + std::to_string(v) +
                       " has the zero degree");
    }
  }
}

Multidegree monomial_multidegree(MonomialView m, const GradingMap& grading) {
  if (m.size() != grading.nvars()) {
    throw UsageError("monomial and grading over different variable counts");
  }
  std::vector<Multidegree::value_type> acc(grading.dim(), 0);
  for (std::size_t v = 0; v < m.size(); ++v) {
    if (m[v] == 0) continue;
    const Multidegree& dv = grading.variable_degree(v);
    for (std::size_t k = 0; k < acc.size(); ++k) {
      Multidegree::value_type step = 0;
      if (__builtin_mul_overflow(dv[k], Multidegree::value_type{m[v]}, &step) ||
          __builtin_add_overflow(acc[k], step, &acc[k])) {
        throw InvariantViolation("multidegree overflow");
      }
    }
  }
  return Multidegree(std::move(acc));
}

std::variant<Multidegree, NotHomogeneous> homogeneous_degree(
    const Polynomial& f, const GradingMap& grading) {
  if (f.is_zero()) throw UsageError("degree of the zero polynomial");
  Multidegree first = monomial_multidegree(f.monomial(0), grading);
  for (std::size_t i = 1; i < f.size(); ++i) {
    Multidegree d = monomial_multidegree(f.monomial(i), grading);
    if (d != first) return NotHomogeneous{std::move(first), std::move(d)};
  }
  return first;
}

Multidegree leading_multidegree(const Polynomial& f,
                                const GradingMap& grading) {
  return monomial_multidegree(f.leading_monomial(), grading);
}

bool is_homogeneous_of(const Polynomial& f, const Multidegree& degree,
                       const GradingMap& grading) {
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (monomial_multidegree(f.monomial(i), grading) != degree) return false;
  }
  return true;
}

}  // namespace mgb
