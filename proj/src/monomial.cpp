#include "mgb/monomial.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "mgb/errors.hpp"

namespace mgb {

namespace {

void require_same_vars(MonomialView a, MonomialView b) {
  if (a.size() != b.size()) {
    throw UsageError("monomials over different variable counts");
  }
}

}  // namespace

std::uint32_t total_degree(MonomialView m) {
  std::uint32_t total = 0;
  for (Exponent e : m) total += e;
  return total;
}

bool is_one(MonomialView m) {
  return std::all_of(m.begin(), m.end(), [](Exponent e) { return e == 0; });
}

bool equal(MonomialView a, MonomialView b) {
  return std::equal(a.begin(), a.end(), b.begin(), b.end());
}

bool divides(MonomialView a, MonomialView b) {
  require_same_vars(a, b);
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (a[k] > b[k]) return false;
  }
  return true;
}

Monomial lcm(MonomialView a, MonomialView b) {
  require_same_vars(a, b);
  std::vector<Exponent> out(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) out[k] = std::max(a[k], b[k]);
  return Monomial(std::move(out));
}

bool coprime(MonomialView a, MonomialView b) {
  require_same_vars(a, b);
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (a[k] != 0 && b[k] != 0) return false;
  }
  return true;
}

Monomial quotient(MonomialView b, MonomialView a) {
  if (!divides(a, b)) throw UsageError("monomial quotient by a non-divisor");
  std::vector<Exponent> out(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) {
    out[k] = static_cast<Exponent>(b[k] - a[k]);
  }
  return Monomial(std::move(out));
}

Monomial multiply(MonomialView a, MonomialView b) {
  require_same_vars(a, b);
  std::vector<Exponent> out(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) {
    unsigned sum = unsigned{a[k]} + b[k];
    if (sum > std::numeric_limits<Exponent>::max()) {
      throw InvariantViolation("exponent overflow in monomial product");
    }
    out[k] = static_cast<Exponent>(sum);
  }
  return Monomial(std::move(out));
}

std::uint64_t divisibility_mask(MonomialView m) {
  std::uint64_t mask = 0;
  for (std::size_t k = 0; k < m.size(); ++k) {
    if (m[k] != 0) mask |= std::uint64_t{1} << (k % 64);
  }
  return mask;
}

std::string to_string(OrderKind kind) {
  switch (kind) {
    case OrderKind::Lex:
      return "lex";
    case OrderKind::DegRevLex:
      return "degrevlex";
    case OrderKind::GrLex:
      return "grlex";
  }
  return "?";
}

OrderKind parse_order_kind(std::string_view text) {
  if (text == "lex") return OrderKind::Lex;
  if (text == "degrevlex") return OrderKind::DegRevLex;
  if (text == "grlex") return OrderKind::GrLex;
  throw InputError("unknown monomial order '" + std::string(text) +
                   "' (expected lex, degrevlex or grlex)");
}

MonomialOrder::MonomialOrder(OrderKind kind, std::size_t nvars)
    : kind_(kind), ranking_(nvars), identity_(true) {
  std::iota(ranking_.begin(), ranking_.end(), std::size_t{0});
}

MonomialOrder::MonomialOrder(OrderKind kind, std::vector<std::size_t> ranking)
    : kind_(kind), ranking_(std::move(ranking)) {
  std::vector<std::size_t> sorted = ranking_;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t k = 0; k < sorted.size(); ++k) {
    if (sorted[k] != k) {
      throw UsageError("variable ranking is not a permutation");
    }
  }
  identity_ = true;
  for (std::size_t k = 0; k < ranking_.size(); ++k) {
    if (ranking_[k] != k) identity_ = false;
  }
}

std::strong_ordering MonomialOrder::lex(MonomialView a, MonomialView b) const {
  const std::size_t n = ranking_.size();
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t v = identity_ ? k : ranking_[k];
    if (a[v] != b[v]) return a[v] <=> b[v];
  }
  return std::strong_ordering::equal;
}

// Scanning from the smallest variable, the smaller exponent wins.
std::strong_ordering MonomialOrder::revlex_tail(MonomialView a,
                                                MonomialView b) const {
  for (std::size_t k = ranking_.size(); k-- > 0;) {
    const std::size_t v = identity_ ? k : ranking_[k];
    if (a[v] != b[v]) return b[v] <=> a[v];
  }
  return std::strong_ordering::equal;
}

std::strong_ordering MonomialOrder::compare(MonomialView a,
                                            MonomialView b) const {
  if (a.size() != ranking_.size() || b.size() != ranking_.size()) {
    throw UsageError("monomial does not match the order's variable count");
  }
  switch (kind_) {
    case OrderKind::Lex:
      return lex(a, b);
    case OrderKind::DegRevLex: {
      auto by_degree = total_degree(a) <=> total_degree(b);
      if (by_degree != 0) return by_degree;
      return revlex_tail(a, b);
    }
    case OrderKind::GrLex: {
      auto by_degree = total_degree(a) <=> total_degree(b);
      if (by_degree != 0) return by_degree;
      return lex(a, b);
    }
  }
  return std::strong_ordering::equal;
}

}  // namespace mgb
