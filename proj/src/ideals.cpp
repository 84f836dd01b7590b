#include "mgb/ideals.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdint>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "mgb/errors.hpp"

namespace mgb {

namespace {

std::string matrix_var(char symbol, std::size_t n, std::size_t i,
                       std::size_t j) {
  std::string name(1, symbol);
  name += std::to_string(i + 1);
  if (n > 9) name += '_';
  name += std::to_string(j + 1);
  return name;
}

}  // namespace

ProblemSpec commuting_matrices(std::size_t n, std::uint32_t modulus) {
  if (n == 0) throw UsageError("commuting_matrices needs n >= 1");
  const std::size_t nn = n * n;
  ProblemSpec spec;
  spec.field = PrimeField(modulus);
  std::vector<Multidegree> degrees;
  for (char symbol : {'x', 'y'}) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        spec.variables.push_back(matrix_var(symbol, n, i, j));
        degrees.push_back(symbol == 'x' ? Multidegree{1, 0} : Multidegree{0, 1});
      }
    }
  }
  spec.grading = GradingMap(std::move(degrees));
  spec.order = MonomialOrder(OrderKind::DegRevLex, 2 * nn);
  PolyRing ring = spec.ring();

  auto x = [&](std::size_t i, std::size_t j) { return i * n + j; };
  auto y = [&](std::size_t i, std::size_t j) { return nn + i * n + j; };
  const Coeff minus_one = spec.field.neg(1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      // (XY - YX)_ij = sum_k x_ik y_kj - y_ik x_kj
      std::vector<Term> terms;
      for (std::size_t k = 0; k < n; ++k) {
        Monomial xy(2 * nn);
        xy[x(i, k)] += 1;
        xy[y(k, j)] += 1;
        terms.push_back({1, std::move(xy)});
        Monomial yx(2 * nn);
        yx[y(i, k)] += 1;
        yx[x(k, j)] += 1;
        terms.push_back({minus_one, std::move(yx)});
      }
      spec.generators.push_back(ring.from_terms(std::move(terms)));
    }
  }
  return spec;
}

ProblemSpec builtin_problem(std::string_view name) {
  constexpr std::string_view prefix = "commuting:";
  if (name.substr(0, prefix.size()) == prefix) {
    std::string_view digits = name.substr(prefix.size());
    std::size_t n = 0;
    auto [end, ec] =
        std::from_chars(digits.data(), digits.data() + digits.size(), n);
    if (ec == std::errc() && end == digits.data() + digits.size() && n >= 1) {
      return commuting_matrices(n);
    }
  }
  throw InputError("unknown builtin problem '" + std::string(name) +
                   "' (expected commuting:N with N >= 1)");
}

namespace {

std::string_view trim(std::string_view s) {
  const char* ws = " \t\r";
  auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

std::vector<std::string_view> split_words(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (pos < s.size()) {
    while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
    std::size_t start = pos;
    while (pos < s.size() && s[pos] != ' ' && s[pos] != '\t') ++pos;
    if (pos > start) out.push_back(s.substr(start, pos - start));
  }
  return out;
}

bool valid_identifier(std::string_view s) {
  if (s.empty() || std::isdigit(static_cast<unsigned char>(s[0]))) return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

struct PendingPoly {
  std::string text;
  std::size_t line;
  std::size_t column;
};

struct ParsedText {
  ProblemSpec spec;
  std::vector<PendingPoly> generators;
  std::optional<std::size_t> basis_count;
  std::size_t basis_line = 0;
  std::vector<PendingPoly> basis;
};

// Parses the shared header grammar. Generator and basis polynomials are
// collected as text and parsed once the ring is complete.
ParsedText parse_lines(std::string_view text, bool basis_file) {
  ParsedText out;
  std::optional<std::uint32_t> modulus;
  std::size_t modulus_line = 0;
  std::optional<std::vector<std::string>> vars;
  std::optional<std::size_t> grading_dim;
  std::map<std::string, std::pair<Multidegree, std::size_t>> degrees;
  std::optional<std::pair<OrderKind, std::vector<std::string>>> order;
  std::size_t order_line = 0;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view raw = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (auto hash = raw.find('#'); hash != std::string_view::npos) {
      raw = raw.substr(0, hash);
    }
    std::string_view line = trim(raw);
    if (line.empty()) {
      if (eol == text.size()) break;
      continue;
    }
    const std::size_t indent = static_cast<std::size_t>(line.data() - raw.data());

    if (out.basis_count) {
      out.basis.push_back({std::string(line), line_no, indent});
      continue;
    }

    auto colon = line.find(':');
    if (colon == std::string_view::npos) {
      throw InputError("expected 'key: value'", line_no, indent + 1);
    }
    std::string_view key = trim(line.substr(0, colon));
    std::string_view value = line.substr(colon + 1);
    const std::size_t lead = value.find_first_not_of(" \t");
    // 0-based offset of the value within the raw line.
    const std::size_t value_col =
        indent + colon + 1 + (lead == std::string_view::npos ? 0 : lead);
    value = trim(value);

    auto need_vars = [&] {
      if (!vars) throw InputError("'vars:' must come before this line", line_no, 1);
    };

    if (key == "modulus") {
      if (modulus) throw InputError("duplicate 'modulus:'", line_no, 1);
      std::uint64_t m = 0;
      auto [end, ec] = std::from_chars(value.data(), value.data() + value.size(), m);
      if (ec != std::errc() || end != value.data() + value.size() ||
          m > UINT32_MAX) {
        throw InputError("modulus must be a positive integer", line_no, value_col + 1);
      }
      modulus = static_cast<std::uint32_t>(m);
      modulus_line = line_no;
    } else if (key == "vars") {
      if (vars) throw InputError("duplicate 'vars:'", line_no, 1);
      vars.emplace();
      std::set<std::string_view> seen;
      for (auto w : split_words(value)) {
        std::size_t col = static_cast<std::size_t>(w.data() - raw.data()) + 1;
        if (!valid_identifier(w)) {
          throw InputError("invalid variable name '" + std::string(w) + "'", line_no, col);
        }
        if (!seen.insert(w).second) {
          throw InputError("duplicate variable '" + std::string(w) + "'", line_no, col);
        }
        vars->emplace_back(w);
      }
      if (vars->empty()) throw InputError("no variables declared", line_no, 1);
    } else if (key == "grading-dim") {
      if (grading_dim) throw InputError("duplicate 'grading-dim:'", line_no, 1);
      std::size_t d = 0;
      auto [end, ec] = std::from_chars(value.data(), value.data() + value.size(), d);
      if (ec != std::errc() || end != value.data() + value.size() || d == 0) {
        throw InputError("grading-dim must be a positive integer", line_no, value_col + 1);
      }
      grading_dim = d;
    } else if (key == "degree") {
      need_vars();
      auto space = value.find_first_of(" \t");
      if (space == std::string_view::npos) {
        throw InputError("expected 'degree: <var> (<d1>,...)'", line_no, value_col + 1);
      }
      std::string name(value.substr(0, space));
      if (std::find(vars->begin(), vars->end(), name) == vars->end()) {
        throw InputError("unknown variable '" + name + "'", line_no, value_col + 1);
      }
      if (degrees.count(name)) {
        throw InputError("duplicate degree for '" + name + "'", line_no, value_col + 1);
      }
      Multidegree d;
      try {
        d = parse_multidegree(trim(value.substr(space)));
      } catch (const InputError& e) {
        throw InputError(e.what(), line_no, value_col + space + 2);
      }
      if (grading_dim && d.dim() != *grading_dim) {
        throw InputError("degree " + to_string(d) + " does not have dimension " +
                             std::to_string(*grading_dim),
                         line_no, value_col + space + 2);
      }
      degrees[name] = {std::move(d), line_no};
    } else if (key == "order") {
      if (order) throw InputError("duplicate 'order:'", line_no, 1);
      auto words = split_words(value);
      if (words.empty()) throw InputError("missing order kind", line_no, value_col + 1);
      OrderKind kind;
      try {
        kind = parse_order_kind(words[0]);
      } catch (const InputError& e) {
        throw InputError(e.what(), line_no, value_col + 1);
      }
      std::vector<std::string> ranking(words.begin() + 1, words.end());
      order.emplace(kind, std::move(ranking));
      order_line = line_no;
    } else if (key == "gen") {
      if (basis_file) throw InputError("'gen:' is not allowed in a basis file", line_no, 1);
      need_vars();
      out.generators.push_back({std::string(value), line_no, value_col});
    } else if (key == "basis") {
      if (!basis_file) throw InputError("'basis:' is only allowed in basis files", line_no, 1);
      std::size_t n = 0;
      auto [end, ec] = std::from_chars(value.data(), value.data() + value.size(), n);
      if (ec != std::errc() || end != value.data() + value.size()) {
        throw InputError("basis count must be a non-negative integer", line_no, value_col + 1);
      }
      out.basis_count = n;
      out.basis_line = line_no;
    } else {
      throw InputError("unknown key '" + std::string(key) + "'", line_no, indent + 1);
    }
    if (eol == text.size()) break;
  }

  if (!vars) throw InputError("missing 'vars:' line");
  if (!grading_dim) throw InputError("missing 'grading-dim:' line");
  try {
    out.spec.field = PrimeField(modulus.value_or(PrimeField::kDefaultModulus));
  } catch (const InputError& e) {
    throw InputError(e.what(), modulus_line, 0);
  }
  out.spec.variables = *vars;
  std::vector<Multidegree> var_degrees;
  for (const auto& name : *vars) {
    auto it = degrees.find(name);
    if (it == degrees.end()) {
      throw InputError("missing 'degree:' line for variable '" + name + "'");
    }
    if (it->second.first.dim() != *grading_dim) {
      throw InputError("degree of '" + name + "' does not have dimension " +
                           std::to_string(*grading_dim),
                       it->second.second, 0);
    }
    var_degrees.push_back(it->second.first);
  }
  try {
    out.spec.grading = GradingMap(std::move(var_degrees));
  } catch (const InputError& e) {
    throw InputError(e.what());
  }

  if (!order || order->second.empty()) {
    out.spec.order = MonomialOrder(order ? order->first : OrderKind::DegRevLex,
                                   vars->size());
  } else {
    std::vector<std::size_t> ranking;
    for (const auto& name : order->second) {
      auto it = std::find(vars->begin(), vars->end(), name);
      if (it == vars->end()) {
        throw InputError("unknown variable '" + name + "' in order", order_line, 0);
      }
      ranking.push_back(static_cast<std::size_t>(it - vars->begin()));
    }
    try {
      out.spec.order = MonomialOrder(order->first, std::move(ranking));
    } catch (const UsageError&) {
      throw InputError("order must list every variable exactly once", order_line, 0);
    }
  }
  if (basis_file && !out.basis_count) throw InputError("missing 'basis:' line");
  if (out.basis_count && out.basis.size() != *out.basis_count) {
    throw InputError("'basis: " + std::to_string(*out.basis_count) +
                         "' but " + std::to_string(out.basis.size()) +
                         " polynomials follow",
                     out.basis_line, 0);
  }
  return out;
}

}  // namespace

ProblemSpec parse_problem(std::string_view text) {
  ParsedText parsed = parse_lines(text, false);
  ProblemSpec spec = std::move(parsed.spec);
  PolyRing ring = spec.ring();
  for (std::size_t n = 0; n < parsed.generators.size(); ++n) {
    const auto& g = parsed.generators[n];
    Polynomial f = parse_polynomial(g.text, ring, spec.variables, g.line, g.column);
    if (!f.is_zero()) {
      auto d = homogeneous_degree(f, spec.grading);
      if (auto* bad = std::get_if<NotHomogeneous>(&d)) {
        throw InputError("generator " + std::to_string(n + 1) + " '" + g.text +
                             "' is not homogeneous: it has terms of degrees " +
                             to_string(bad->first) + " and " +
                             to_string(bad->other),
                         g.line, g.column + 1);
      }
    }
    spec.generators.push_back(std::move(f));
  }
  return spec;
}

namespace {

void print_header(std::ostringstream& out, const ProblemSpec& spec) {
  out << "modulus: " << spec.field.modulus() << '\n';
  out << "vars:";
  for (const auto& v : spec.variables) out << ' ' << v;
  out << '\n';
  out << "grading-dim: " << spec.grading.dim() << '\n';
  for (std::size_t v = 0; v < spec.variables.size(); ++v) {
    out << "degree: " << spec.variables[v] << ' '
        << to_string(spec.grading.variable_degree(v)) << '\n';
  }
  out << "order: " << to_string(spec.order.kind());
  if (!spec.order.default_ranking()) {
    for (std::size_t v : spec.order.ranking()) out << ' ' << spec.variables[v];
  }
  out << '\n';
}

}  // namespace

std::string print_problem(const ProblemSpec& spec) {
  std::ostringstream out;
  print_header(out, spec);
  for (const auto& g : spec.generators) {
    out << "gen: " << format_polynomial(g, spec.field, spec.variables) << '\n';
  }
  return out.str();
}

BasisFile parse_basis_file(std::string_view text) {
  ParsedText parsed = parse_lines(text, true);
  BasisFile file;
  file.ring = std::move(parsed.spec);
  PolyRing ring = file.ring.ring();
  for (const auto& b : parsed.basis) {
    file.elements.push_back(
        parse_polynomial(b.text, ring, file.ring.variables, b.line, b.column));
  }
  return file;
}

std::string print_basis_file(const ProblemSpec& ring,
                             const std::vector<Polynomial>& elements) {
  std::ostringstream out;
  print_header(out, ring);
  out << "basis: " << elements.size() << '\n';
  for (const auto& f : elements) {
    out << format_polynomial(f, ring.field, ring.variables) << '\n';
  }
  return out.str();
}

bool same_ring(const ProblemSpec& a, const ProblemSpec& b) {
  return a.field == b.field && a.variables == b.variables &&
         a.grading == b.grading && a.order == b.order;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace mgb
