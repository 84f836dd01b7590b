#include "mgb/lattice.hpp"

#include <algorithm>
#include <charconv>
#include <limits>

#include "mgb/errors.hpp"

namespace mgb {

namespace {

void require_same_dim(const Multidegree& a, const Multidegree& b) {
  if (a.dim() != b.dim()) {
    throw UsageError("multidegree dimension mismatch: " + to_string(a) +
                     " vs " + to_string(b));
  }
}

}  // namespace

bool Multidegree::is_zero() const {
  return std::all_of(components_.begin(), components_.end(),
                     [](value_type c) { return c == 0; });
}

Comparison compare(const Multidegree& a, const Multidegree& b) {
  require_same_dim(a, b);
  bool some_less = false;
  bool some_greater = false;
  for (std::size_t k = 0; k < a.dim(); ++k) {
    if (a[k] < b[k]) some_less = true;
    if (a[k] > b[k]) some_greater = true;
  }
  if (some_less && some_greater) return Comparison::Incomparable;
  if (some_less) return Comparison::LessOrEqual;
  if (some_greater) return Comparison::GreaterOrEqual;
  return Comparison::Equal;
}

bool leq(const Multidegree& a, const Multidegree& b) {
  require_same_dim(a, b);
  for (std::size_t k = 0; k < a.dim(); ++k) {
    if (a[k] > b[k]) return false;
  }
  return true;
}

bool strictly_less(const Multidegree& a, const Multidegree& b) {
  return compare(a, b) == Comparison::LessOrEqual;
}

Multidegree add(const Multidegree& a, const Multidegree& b) {
  require_same_dim(a, b);
  std::vector<Multidegree::value_type> sum(a.dim());
  for (std::size_t k = 0; k < a.dim(); ++k) {
    if (__builtin_add_overflow(a[k], b[k], &sum[k])) {
      throw InvariantViolation("multidegree overflow adding " + to_string(a) +
                               " and " + to_string(b));
    }
  }
  return Multidegree(std::move(sum));
}

Multidegree scale(const Multidegree& a, std::uint64_t times) {
  std::vector<Multidegree::value_type> out(a.dim());
  for (std::size_t k = 0; k < a.dim(); ++k) {
    if (__builtin_mul_overflow(a[k], times, &out[k])) {
      throw InvariantViolation("multidegree overflow scaling " + to_string(a));
    }
  }
  return Multidegree(std::move(out));
}

std::uint64_t total_degree(const Multidegree& a) {
  std::uint64_t total = 0;
  for (auto c : a.components()) {
    if (__builtin_add_overflow(total, c, &total)) {
      throw InvariantViolation("total degree overflow for " + to_string(a));
    }
  }
  return total;
}

std::string to_string(const Multidegree& a) {
  std::string out = "(";
  for (std::size_t k = 0; k < a.dim(); ++k) {
    if (k) out += ',';
    out += std::to_string(a[k]);
  }
  out += ')';
  return out;
}

Multidegree parse_multidegree(std::string_view text) {
  auto skip_ws = [&](std::size_t& pos) {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
  };
  std::size_t pos = 0;
  skip_ws(pos);
  if (pos >= text.size() || text[pos] != '(') {
    throw InputError("expected '(' in multidegree '" + std::string(text) + "'");
  }
  ++pos;
  std::vector<Multidegree::value_type> comps;
  for (;;) {
    skip_ws(pos);
    Multidegree::value_type value = 0;
    auto [end, ec] =
        std::from_chars(text.data() + pos, text.data() + text.size(), value);
    if (ec != std::errc()) {
      throw InputError("expected non-negative integer in multidegree '" +
                       std::string(text) + "'");
    }
    comps.push_back(value);
    pos = static_cast<std::size_t>(end - text.data());
    skip_ws(pos);
    if (pos < text.size() && text[pos] == ',') {
      ++pos;
      continue;
    }
    if (pos < text.size() && text[pos] == ')') {
      ++pos;
      break;
    }
    throw InputError("expected ',' or ')' in multidegree '" +
                     std::string(text) + "'");
  }
  skip_ws(pos);
  if (pos != text.size()) {
    throw InputError("trailing characters after multidegree '" +
                     std::string(text) + "'");
  }
  return Multidegree(std::move(comps));
}

bool DegreeKeyLess::operator()(const Multidegree& a,
                               const Multidegree& b) const {
  return std::lexicographical_compare(a.components().begin(),
                                      a.components().end(),
                                      b.components().begin(),
                                      b.components().end());
}

bool DegreeTextLess::operator()(const Multidegree& a,
                                const Multidegree& b) const {
  return to_string(a) < to_string(b);
}

DegreeSet::DegreeSet(std::initializer_list<Multidegree> degrees) {
  for (const auto& d : degrees) insert(d);
}

DegreeSet::DegreeSet(std::vector<Multidegree> degrees) {
  for (auto& d : degrees) insert(std::move(d));
}

bool DegreeSet::insert(Multidegree degree) {
  if (!degrees_.empty()) require_same_dim(degrees_.front(), degree);
  auto it = std::lower_bound(degrees_.begin(), degrees_.end(), degree,
                             DegreeKeyLess{});
  if (it != degrees_.end() && *it == degree) return false;
  degrees_.insert(it, std::move(degree));
  return true;
}

bool DegreeSet::contains(const Multidegree& degree) const {
  return std::binary_search(degrees_.begin(), degrees_.end(), degree,
                            DegreeKeyLess{});
}

bool is_antichain(const DegreeSet& s) {
  const auto& e = s.elements();
  for (std::size_t i = 0; i < e.size(); ++i) {
    for (std::size_t j = i + 1; j < e.size(); ++j) {
      if (compare(e[i], e[j]) != Comparison::Incomparable) return false;
    }
  }
  return true;
}

DegreeSet minimal_occupied(const DegreeSet& s) {
  // A dominated element is dominated by some minimal element of strictly
  // smaller total degree, so one pass in total-degree order suffices.
  std::vector<const Multidegree*> by_total;
  by_total.reserve(s.size());
  for (const auto& d : s) by_total.push_back(&d);
  std::stable_sort(by_total.begin(), by_total.end(),
                   [](const Multidegree* a, const Multidegree* b) {
                     return total_degree(*a) < total_degree(*b);
                   });
  std::vector<const Multidegree*> minimal;
  for (const Multidegree* d : by_total) {
    bool dominated = std::any_of(
        minimal.begin(), minimal.end(),
        [&](const Multidegree* m) { return strictly_less(*m, *d); });
    if (!dominated) minimal.push_back(d);
  }
  DegreeSet out;
  for (const Multidegree* d : minimal) out.insert(*d);
  return out;
}

DegreeSet total_degree_slice(const DegreeSet& s) {
  DegreeSet out;
  if (s.empty()) return out;
  std::uint64_t lowest = std::numeric_limits<std::uint64_t>::max();
  for (const auto& d : s) lowest = std::min(lowest, total_degree(d));
  for (const auto& d : s) {
    if (total_degree(d) == lowest) out.insert(d);
  }
  return out;
}

DegreeSet extract_antichain(const DegreeSet& s, AntichainStrategy strategy) {
  switch (strategy) {
    case AntichainStrategy::MinimalOccupied:
      return minimal_occupied(s);
    case AntichainStrategy::TotalDegree:
      return total_degree_slice(s);
  }
  throw UsageError("unknown antichain strategy");
}

std::string to_string(AntichainStrategy strategy) {
  return strategy == AntichainStrategy::MinimalOccupied ? "min-occupied"
                                                        : "total-degree";
}

AntichainStrategy parse_strategy(std::string_view text) {
  if (text == "min-occupied") return AntichainStrategy::MinimalOccupied;
  if (text == "total-degree") return AntichainStrategy::TotalDegree;
  throw InputError("unknown strategy '" + std::string(text) +
                   "' (expected min-occupied or total-degree)");
}

}  // namespace mgb
