#include "mgb/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <limits>

#include "mgb/errors.hpp"

namespace mgb {

Coeff Polynomial::leading_coeff() const {
  if (is_zero()) throw UsageError("leading coefficient of zero polynomial");
  return coeffs_.front();
}

MonomialView Polynomial::leading_monomial() const {
  if (is_zero()) throw UsageError("leading monomial of zero polynomial");
  return monomial(0);
}

void PolyRing::require_ring(const Polynomial& f) const {
  if (f.nvars() != nvars()) {
    throw UsageError("polynomial has " + std::to_string(f.nvars()) +
                     " variables, ring has " + std::to_string(nvars()));
  }
}

Polynomial PolyRing::from_terms(std::vector<Term> terms) const {
  for (const auto& t : terms) {
    if (t.monomial.nvars() != nvars()) {
      throw UsageError("term does not match ring variable count");
    }
  }
  std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
    return order_.greater(a.monomial, b.monomial);
  });
  Polynomial out(nvars());
  out.reserve(terms.size());
  for (std::size_t i = 0; i < terms.size();) {
    Coeff c = field_.from_int(terms[i].coeff);
    std::size_t j = i + 1;
    while (j < terms.size() && terms[j].monomial == terms[i].monomial) {
      c = field_.add(c, field_.from_int(terms[j].coeff));
      ++j;
    }
    if (c != 0) out.push_back(c, terms[i].monomial);
    i = j;
  }
  return out;
}

Polynomial PolyRing::term(Coeff c, MonomialView m) const {
  if (m.size() != nvars()) throw UsageError("monomial does not match ring");
  Polynomial out(nvars());
  c = field_.from_int(c);
  if (c != 0) out.push_back(c, m);
  return out;
}

Term PolyRing::leading(const Polynomial& f) const {
  return Term{f.leading_coeff(), Monomial(f.leading_monomial())};
}

Polynomial PolyRing::add_scaled(const Polynomial& f, Coeff c, MonomialView m,
                                const Polynomial& g,
                                std::size_t f_start) const {
  require_ring(f);
  require_ring(g);
  const std::size_t n = nvars();
  Polynomial out(n);
  out.reserve(f.size() - f_start + g.size());
  std::size_t i = f_start;
  std::size_t j = 0;
  if (c == 0) {
    for (; i < f.size(); ++i) out.push_back(f.coeff(i), f.monomial(i));
    return out;
  }

  std::vector<Exponent> shifted(n);
  auto load = [&](std::size_t idx) {
    MonomialView gm = g.monomial(idx);
    for (std::size_t k = 0; k < n; ++k) {
      unsigned sum = unsigned{m[k]} + gm[k];
      if (sum > std::numeric_limits<Exponent>::max()) {
        throw InvariantViolation("exponent overflow in term product");
      }
      shifted[k] = static_cast<Exponent>(sum);
    }
  };
  if (j < g.size()) load(j);

  while (i < f.size() && j < g.size()) {
    auto cmp = order_.compare(f.monomial(i), shifted);
    if (cmp > 0) {
      out.push_back(f.coeff(i), f.monomial(i));
      ++i;
    } else if (cmp < 0) {
      out.push_back(field_.mul(c, g.coeff(j)), shifted);
      if (++j < g.size()) load(j);
    } else {
      Coeff sum = field_.add(f.coeff(i), field_.mul(c, g.coeff(j)));
      if (sum != 0) out.push_back(sum, shifted);
      ++i;
      if (++j < g.size()) load(j);
    }
  }
  for (; i < f.size(); ++i) out.push_back(f.coeff(i), f.monomial(i));
  while (j < g.size()) {
    out.push_back(field_.mul(c, g.coeff(j)), shifted);
    if (++j < g.size()) load(j);
  }
  return out;
}

Polynomial PolyRing::add(const Polynomial& f, const Polynomial& g) const {
  return add_scaled(f, 1, Monomial(nvars()), g);
}

Polynomial PolyRing::sub(const Polynomial& f, const Polynomial& g) const {
  return add_scaled(f, field_.neg(1), Monomial(nvars()), g);
}

Polynomial PolyRing::neg(const Polynomial& f) const {
  return scale(field_.neg(1), f);
}

Polynomial PolyRing::scale(Coeff c, const Polynomial& f) const {
  require_ring(f);
  c = field_.from_int(c);
  Polynomial out(nvars());
  if (c == 0) return out;
  out.reserve(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) {
    out.push_back(field_.mul(c, f.coeff(i)), f.monomial(i));
  }
  return out;
}

Polynomial PolyRing::mul_term(Coeff c, MonomialView m,
                              const Polynomial& f) const {
  return add_scaled(zero(), field_.from_int(c), m, f);
}

Polynomial PolyRing::mul(const Polynomial& f, const Polynomial& g) const {
  require_ring(f);
  Polynomial out = zero();
  for (std::size_t i = 0; i < f.size(); ++i) {
    out = add_scaled(out, f.coeff(i), f.monomial(i), g);
  }
  return out;
}

Polynomial PolyRing::make_monic(const Polynomial& f) const {
  return scale(field_.inv(f.leading_coeff()), f);
}

bool PolyRing::well_formed(const Polynomial& f) const {
  if (f.nvars() != nvars()) return false;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f.coeff(i) == 0 || f.coeff(i) >= field_.modulus()) return false;
    if (i > 0 && !order_.greater(f.monomial(i - 1), f.monomial(i))) {
      return false;
    }
  }
  return true;
}

std::string format_monomial(MonomialView m,
                            const std::vector<std::string>& names) {
  std::string out;
  for (std::size_t k = 0; k < m.size(); ++k) {
    if (m[k] == 0) continue;
    if (!out.empty()) out += '*';
    out += names.at(k);
    if (m[k] > 1) out += '^' + std::to_string(m[k]);
  }
  return out.empty() ? "1" : out;
}

std::string format_polynomial(const Polynomial& f, const PrimeField& field,
                              const std::vector<std::string>& names) {
  if (f.is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < f.size(); ++i) {
    std::int64_t c = field.to_signed(f.coeff(i));
    bool negative = c < 0;
    std::uint64_t magnitude = negative ? static_cast<std::uint64_t>(-c)
                                       : static_cast<std::uint64_t>(c);
    if (i == 0) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    MonomialView m = f.monomial(i);
    if (is_one(m)) {
      out += std::to_string(magnitude);
    } else {
      if (magnitude != 1) out += std::to_string(magnitude) + '*';
      out += format_monomial(m, names);
    }
  }
  return out;
}

namespace {

class PolyParser {
 public:
  PolyParser(std::string_view text, const PolyRing& ring,
             const std::vector<std::string>& names, std::size_t line,
             std::size_t column_offset)
      : text_(text),
        ring_(ring),
        names_(names),
        line_(line),
        column_offset_(column_offset) {}

  Polynomial parse() {
    std::vector<Term> terms;
    skip_ws();
    if (at_end()) fail("empty polynomial");
    bool negative = false;
    if (peek() == '+' || peek() == '-') {
      negative = peek() == '-';
      ++pos_;
    }
    for (;;) {
      Term t = parse_term();
      if (negative) t.coeff = ring_.field().neg(t.coeff);
      terms.push_back(std::move(t));
      skip_ws();
      if (at_end()) break;
      if (peek() != '+' && peek() != '-') fail("expected '+' or '-'");
      negative = peek() == '-';
      ++pos_;
    }
    return ring_.from_terms(std::move(terms));
  }

 private:
  Term parse_term() {
    Coeff coeff = 1;
    Monomial mono(ring_.nvars());
    for (;;) {
      skip_ws();
      if (at_end()) fail("expected a coefficient or variable");
      char ch = peek();
      if (std::isdigit(static_cast<unsigned char>(ch))) {
        coeff = ring_.field().mul(coeff, ring_.field().from_int(
                                             static_cast<std::int64_t>(
                                                 parse_number())));
      } else if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
        std::size_t start = pos_;
        std::string name = parse_ident();
        auto it = std::find(names_.begin(), names_.end(), name);
        if (it == names_.end()) fail("unknown variable '" + name + "'", start);
        std::uint64_t power = 1;
        skip_ws();
        if (!at_end() && peek() == '^') {
          ++pos_;
          skip_ws();
          power = parse_number();
        }
        auto v = static_cast<std::size_t>(it - names_.begin());
        std::uint64_t total = mono[v] + power;
        if (total > std::numeric_limits<Exponent>::max()) {
          fail("exponent too large", start);
        }
        mono[v] = static_cast<Exponent>(total);
      } else {
        fail(std::string("unexpected character '") + ch + "'");
      }
      skip_ws();
      if (!at_end() && peek() == '*') {
        ++pos_;
        continue;
      }
      break;
    }
    return Term{coeff, std::move(mono)};
  }

  std::uint64_t parse_number() {
    if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) {
      fail("expected a number");
    }
    std::uint64_t value = 0;
    auto [end, ec] =
        std::from_chars(text_.data() + pos_, text_.data() + text_.size(), value);
    if (ec != std::errc()) fail("number out of range");
    pos_ = static_cast<std::size_t>(end - text_.data());
    return value;
  }

  std::string parse_ident() {
    std::size_t start = pos_;
    while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) ||
                         peek() == '_')) {
      ++pos_;
    }
    return std::string(text_.substr(start, pos_ - start));
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  [[noreturn]] void fail(const std::string& message) { fail(message, pos_); }
  [[noreturn]] void fail(const std::string& message, std::size_t at) {
    throw InputError(message, line_, column_offset_ + at + 1);
  }

  std::string_view text_;
  const PolyRing& ring_;
  const std::vector<std::string>& names_;
  std::size_t line_;
  std::size_t column_offset_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, const PolyRing& ring,
                            const std::vector<std::string>& names,
                            std::size_t line, std::size_t column_offset) {
  if (names.size() != ring.nvars()) {
    throw UsageError("variable names do not match ring");
  }
  return PolyParser(text, ring, names, line, column_offset).parse();
}

}  // namespace mgb
