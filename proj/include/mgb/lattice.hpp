#pragma once

// The partially ordered monoid N^d: componentwise order, componentwise
// addition, and antichain extraction over finite sets of degrees.

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace mgb {

class Multidegree {
 public:
  using value_type = std::uint64_t;

  Multidegree() = default;
  /// The zero degree of dimension `dim`.
  explicit Multidegree(std::size_t dim) : components_(dim, 0) {}
  explicit Multidegree(std::vector<value_type> components)
      : components_(std::move(components)) {}
  Multidegree(std::initializer_list<value_type> components)
      : components_(components) {}

  std::size_t dim() const { return components_.size(); }
  value_type operator[](std::size_t k) const { return components_[k]; }
  std::span<const value_type> components() const { return components_; }
  bool is_zero() const;

  friend bool operator==(const Multidegree&, const Multidegree&) = default;

 private:
  std::vector<value_type> components_;
};

enum class Comparison { Equal, LessOrEqual, GreaterOrEqual, Incomparable };

/// Componentwise comparison. LessOrEqual means a <= b and a != b.
Comparison compare(const Multidegree& a, const Multidegree& b);

/// a <= b in the partial order (equality included).
bool leq(const Multidegree& a, const Multidegree& b);
/// a <= b and a != b.
bool strictly_less(const Multidegree& a, const Multidegree& b);

/// Componentwise sum; throws InvariantViolation on overflow.
Multidegree add(const Multidegree& a, const Multidegree& b);
/// `a` added to itself `times` times.
Multidegree scale(const Multidegree& a, std::uint64_t times);

std::uint64_t total_degree(const Multidegree& a);

/// "(1,0)"
std::string to_string(const Multidegree& a);
/// Inverse of to_string; whitespace tolerant. Throws InputError.
Multidegree parse_multidegree(std::string_view text);

/// Lexicographic order on components. A total order for use as a container
/// key; unrelated to the poset structure.
struct DegreeKeyLess {
  bool operator()(const Multidegree& a, const Multidegree& b) const;
};

/// Order by textual form, which fixes the processing order inside a round.
struct DegreeTextLess {
  bool operator()(const Multidegree& a, const Multidegree& b) const;
};

/// Finite set of distinct degrees, kept in DegreeKeyLess order.
class DegreeSet {
 public:
  DegreeSet() = default;
  DegreeSet(std::initializer_list<Multidegree> degrees);
  explicit DegreeSet(std::vector<Multidegree> degrees);

  /// Returns false if already present.
  bool insert(Multidegree degree);
  bool contains(const Multidegree& degree) const;

  std::size_t size() const { return degrees_.size(); }
  bool empty() const { return degrees_.empty(); }
  auto begin() const { return degrees_.begin(); }
  auto end() const { return degrees_.end(); }
  const std::vector<Multidegree>& elements() const { return degrees_; }

  friend bool operator==(const DegreeSet&, const DegreeSet&) = default;

 private:
  std::vector<Multidegree> degrees_;
};

bool is_antichain(const DegreeSet& s);

/// Elements of `s` with no strictly smaller element in `s`.
DegreeSet minimal_occupied(const DegreeSet& s);

/// Elements of `s` whose total degree equals the minimum over `s`.
DegreeSet total_degree_slice(const DegreeSet& s);

enum class AntichainStrategy { MinimalOccupied, TotalDegree };

DegreeSet extract_antichain(const DegreeSet& s, AntichainStrategy strategy);

std::string to_string(AntichainStrategy strategy);
/// "min-occupied" or "total-degree".
AntichainStrategy parse_strategy(std::string_view text);

}  // namespace mgb
