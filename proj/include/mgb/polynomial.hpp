#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "mgb/field.hpp"
#include "mgb/monomial.hpp"

namespace mgb {

struct Term {
  Coeff coeff;
  Monomial monomial;
};

/// Immutable-by-convention sparse polynomial. Terms are stored strictly
/// decreasing under the ring's monomial order with nonzero coefficients;
/// exponent vectors are packed term-major in one buffer.
///
/// Polynomials do not know their ring. Arithmetic goes through PolyRing.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::size_t nvars) : nvars_(nvars) {}

  std::size_t nvars() const { return nvars_; }
  std::size_t size() const { return coeffs_.size(); }
  bool is_zero() const { return coeffs_.empty(); }

  Coeff coeff(std::size_t i) const { return coeffs_[i]; }
  MonomialView monomial(std::size_t i) const {
    return {exps_.data() + i * nvars_, nvars_};
  }

  /// Throw UsageError on the zero polynomial.
  Coeff leading_coeff() const;
  MonomialView leading_monomial() const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  friend class PolyRing;
  friend class TermBuilder;

  void push_back(Coeff c, MonomialView m) {
    coeffs_.push_back(c);
    exps_.insert(exps_.end(), m.begin(), m.end());
  }
  void reserve(std::size_t terms) {
    coeffs_.reserve(terms);
    exps_.reserve(terms * nvars_);
  }

  std::size_t nvars_ = 0;
  std::vector<Coeff> coeffs_;
  std::vector<Exponent> exps_;
};

/// Appends terms that the caller already knows are in strictly decreasing
/// order with nonzero coefficients. Used by the reduction loop, which emits
/// irreducible terms one by one.
class TermBuilder {
 public:
  explicit TermBuilder(std::size_t nvars) : poly_(nvars) {}
  void push_back(Coeff c, MonomialView m) { poly_.push_back(c, m); }
  Polynomial finish() && { return std::move(poly_); }

 private:
  Polynomial poly_;
};

/// Coefficient field plus monomial order: everything needed to do
/// arithmetic on Polynomial values.
class PolyRing {
 public:
  PolyRing(PrimeField field, MonomialOrder order)
      : field_(field), order_(std::move(order)) {}

  const PrimeField& field() const { return field_; }
  const MonomialOrder& order() const { return order_; }
  std::size_t nvars() const { return order_.nvars(); }

  Polynomial zero() const { return Polynomial(nvars()); }
  /// Sorts, merges equal monomials, and drops zero coefficients.
  Polynomial from_terms(std::vector<Term> terms) const;
  Polynomial term(Coeff c, MonomialView m) const;

  Term leading(const Polynomial& f) const;

  Polynomial add(const Polynomial& f, const Polynomial& g) const;
  Polynomial sub(const Polynomial& f, const Polynomial& g) const;
  Polynomial neg(const Polynomial& f) const;
  Polynomial scale(Coeff c, const Polynomial& f) const;
  /// c * m * f
  Polynomial mul_term(Coeff c, MonomialView m, const Polynomial& f) const;
  Polynomial mul(const Polynomial& f, const Polynomial& g) const;
  /// Throws UsageError on zero.
  Polynomial make_monic(const Polynomial& f) const;

  /// f + c * m * g, as a single merge. Only the terms of f from index
  /// `f_start` on take part; earlier terms are ignored.
  Polynomial add_scaled(const Polynomial& f, Coeff c, MonomialView m,
                        const Polynomial& g, std::size_t f_start = 0) const;

  /// Checks the storage invariants (order, no zeros, residues in range).
  bool well_formed(const Polynomial& f) const;

  friend bool operator==(const PolyRing&, const PolyRing&) = default;

 private:
  void require_ring(const Polynomial& f) const;

  PrimeField field_;
  MonomialOrder order_;
};

/// Canonical textual form, e.g. "x12*y21 - x21*y12", "3*x1^2*y3", "0".
std::string format_polynomial(const Polynomial& f, const PrimeField& field,
                              const std::vector<std::string>& names);

std::string format_monomial(MonomialView m,
                            const std::vector<std::string>& names);

/// Parses the textual form. Column numbers in errors are 1-based offsets
/// into `text` plus `column_offset`.
Polynomial parse_polynomial(std::string_view text, const PolyRing& ring,
                            const std::vector<std::string>& names,
                            std::size_t line = 0,
                            std::size_t column_offset = 0);

}  // namespace mgb
