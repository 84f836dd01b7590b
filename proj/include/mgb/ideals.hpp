#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mgb/grading.hpp"
#include "mgb/polynomial.hpp"

namespace mgb {

/// A multigraded polynomial ring together with a list of generators.
struct ProblemSpec {
  PrimeField field;
  std::vector<std::string> variables;
  GradingMap grading;
  MonomialOrder order;
  std::vector<Polynomial> generators;

  PolyRing ring() const { return PolyRing(field, order); }

  friend bool operator==(const ProblemSpec&, const ProblemSpec&) = default;
};

/// The entries of XY - YX for generic n x n matrices X and Y, graded by
/// x -> (1,0), y -> (0,1), under degrevlex with x11..xnn before y11..ynn.
ProblemSpec commuting_matrices(std::size_t n,
                               std::uint32_t modulus = PrimeField::kDefaultModulus);

/// "commuting:N" -> commuting_matrices(N). Throws InputError otherwise.
ProblemSpec builtin_problem(std::string_view name);

/// Problem file: `modulus:`, `vars:`, `grading-dim:`, one `degree:` line per
/// variable, optional `order:` and any number of `gen:` lines. `#` starts a
/// comment. Throws InputError with line and column on any problem.
ProblemSpec parse_problem(std::string_view text);
std::string print_problem(const ProblemSpec& spec);

/// A basis file is a problem header without generators, followed by
/// `basis: N` and N polynomial lines.
struct BasisFile {
  ProblemSpec ring;
  std::vector<Polynomial> elements;
};

BasisFile parse_basis_file(std::string_view text);
/// Writes `elements` in the given order.
std::string print_basis_file(const ProblemSpec& ring,
                             const std::vector<Polynomial>& elements);

/// True if both describe the same ring, grading and order.
bool same_ring(const ProblemSpec& a, const ProblemSpec& b);

std::string read_text_file(const std::string& path);

}  // namespace mgb
