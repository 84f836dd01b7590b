#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace mgb {

using Exponent = std::uint16_t;
using MonomialView = std::span<const Exponent>;

/// Dense exponent vector over a fixed number of ring variables.
class Monomial {
 public:
  Monomial() = default;
  /// The monomial 1 in `nvars` variables.
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  explicit Monomial(std::vector<Exponent> exps) : exps_(std::move(exps)) {}
  explicit Monomial(MonomialView view) : exps_(view.begin(), view.end()) {}
  Monomial(std::initializer_list<Exponent> exps) : exps_(exps) {}

  std::size_t nvars() const { return exps_.size(); }
  Exponent operator[](std::size_t k) const { return exps_[k]; }
  Exponent& operator[](std::size_t k) { return exps_[k]; }
  MonomialView view() const { return exps_; }
  operator MonomialView() const { return exps_; }

  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<Exponent> exps_;
};

std::uint32_t total_degree(MonomialView m);
bool is_one(MonomialView m);
bool equal(MonomialView a, MonomialView b);

/// a | b
bool divides(MonomialView a, MonomialView b);
Monomial lcm(MonomialView a, MonomialView b);
/// gcd(a, b) == 1
bool coprime(MonomialView a, MonomialView b);
/// b / a; throws UsageError unless a | b.
Monomial quotient(MonomialView b, MonomialView a);
/// Throws InvariantViolation if an exponent overflows.
Monomial multiply(MonomialView a, MonomialView b);

/// Bit k is set iff some variable v with v % 64 == k occurs. Then
/// divides(a, b) implies (mask(a) & ~mask(b)) == 0.
std::uint64_t divisibility_mask(MonomialView m);

enum class OrderKind { Lex, DegRevLex, GrLex };

std::string to_string(OrderKind kind);
OrderKind parse_order_kind(std::string_view text);

/// A monomial order over `nvars` variables. `ranking[0]` is the largest
/// variable; the default ranking is declaration order.
class MonomialOrder {
 public:
  MonomialOrder() = default;
  MonomialOrder(OrderKind kind, std::size_t nvars);
  MonomialOrder(OrderKind kind, std::vector<std::size_t> ranking);

  OrderKind kind() const { return kind_; }
  std::size_t nvars() const { return ranking_.size(); }
  const std::vector<std::size_t>& ranking() const { return ranking_; }
  bool default_ranking() const { return identity_; }

  std::strong_ordering compare(MonomialView a, MonomialView b) const;
  bool greater(MonomialView a, MonomialView b) const {
    return compare(a, b) == std::strong_ordering::greater;
  }
  bool less(MonomialView a, MonomialView b) const {
    return compare(a, b) == std::strong_ordering::less;
  }

  friend bool operator==(const MonomialOrder& a, const MonomialOrder& b) {
    return a.kind_ == b.kind_ && a.ranking_ == b.ranking_;
  }

 private:
  std::strong_ordering lex(MonomialView a, MonomialView b) const;
  std::strong_ordering revlex_tail(MonomialView a, MonomialView b) const;

  OrderKind kind_ = OrderKind::DegRevLex;
  std::vector<std::size_t> ranking_;
  bool identity_ = true;
};

}  // namespace mgb
