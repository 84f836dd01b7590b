#pragma once

// Textbook Buchberger over map-based polynomials, written independently of
// the library (own monomial orders, own arithmetic). Used as an oracle.

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "mgb/polynomial.hpp"

namespace naive {

using Mono = std::vector<int>;

enum class Order { Lex, GrLex, DegRevLex };

/// True if a is strictly larger than b.
bool greater(Order order, const Mono& a, const Mono& b);

struct Greater {
  Order order;
  bool operator()(const Mono& a, const Mono& b) const {
    return greater(order, a, b);
  }
};

/// Nonzero coefficients in [1, p), largest monomial first.
using Poly = std::map<Mono, std::int64_t, Greater>;

struct Ring {
  std::int64_t p;
  Order order;
  std::size_t nvars;

  Poly zero() const { return Poly(Greater{order}); }
  std::int64_t inv(std::int64_t a) const;
  Poly monic(const Poly& f) const;
  /// f - c * m * g
  Poly sub_mul(const Poly& f, std::int64_t c, const Mono& m, const Poly& g) const;
  Poly spoly(const Poly& f, const Poly& g) const;
  /// Full normal form against g (first divisor in list order).
  Poly normal_form(Poly f, const std::vector<Poly>& g) const;
  /// Every pair, no criteria, then minimal + interreduced + monic.
  std::vector<Poly> reduced_groebner(std::vector<Poly> gens) const;
};

Poly from_library(const Ring& ring, const mgb::Polynomial& f);

/// Order-independent canonical form of a polynomial list: one string per
/// polynomial, sorted.
std::set<std::string> canonical(const std::vector<Poly>& polys);

}  // namespace naive
