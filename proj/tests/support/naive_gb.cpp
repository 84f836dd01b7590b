#include "naive_gb.hpp"

#include <numeric>
#include <sstream>
#include <utility>

namespace naive {

namespace {

int deg(const Mono& m) { return std::accumulate(m.begin(), m.end(), 0); }

bool divides(const Mono& a, const Mono& b) {
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (a[k] > b[k]) return false;
  }
  return true;
}

Mono lcm(const Mono& a, const Mono& b) {
  Mono m(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) m[k] = std::max(a[k], b[k]);
  return m;
}

Mono quot(const Mono& b, const Mono& a) {
  Mono m(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) m[k] = b[k] - a[k];
  return m;
}

}  // namespace

bool greater(Order order, const Mono& a, const Mono& b) {
  if (order != Order::Lex && deg(a) != deg(b)) return deg(a) > deg(b);
  if (order == Order::DegRevLex) {
    for (std::size_t k = a.size(); k-- > 0;) {
      if (a[k] != b[k]) return a[k] < b[k];
    }
    return false;
  }
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (a[k] != b[k]) return a[k] > b[k];
  }
  return false;
}

std::int64_t Ring::inv(std::int64_t a) const {
  // Fermat.
  std::int64_t result = 1, base = a % p, e = p - 2;
  while (e > 0) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return result;
}

Poly Ring::monic(const Poly& f) const {
  Poly out = zero();
  if (f.empty()) return out;
  const std::int64_t c = inv(f.begin()->second);
  for (const auto& [m, a] : f) out[m] = a * c % p;
  return out;
}

Poly Ring::sub_mul(const Poly& f, std::int64_t c, const Mono& m, const Poly& g) const {
  Poly out = f;
  for (const auto& [gm, ga] : g) {
    Mono prod(nvars);
    for (std::size_t k = 0; k < nvars; ++k) prod[k] = gm[k] + m[k];
    std::int64_t v = (out.count(prod) ? out[prod] : 0) - c * ga % p;
    v = ((v % p) + p) % p;
    if (v == 0) {
      out.erase(prod);
    } else {
      out[prod] = v;
    }
  }
  return out;
}

Poly Ring::spoly(const Poly& f, const Poly& g) const {
  const auto& [fm, fc] = *f.begin();
  const auto& [gm, gc] = *g.begin();
  const Mono l = lcm(fm, gm);
  Poly a = sub_mul(zero(), p - inv(fc), quot(l, fm), f);
  return sub_mul(a, inv(gc), quot(l, gm), g);
}

Poly Ring::normal_form(Poly f, const std::vector<Poly>& g) const {
  Poly rem = zero();
  while (!f.empty()) {
    const auto [m, c] = *f.begin();
    bool reduced = false;
    for (const Poly& h : g) {
      const auto& [hm, hc] = *h.begin();
      if (divides(hm, m)) {
        f = sub_mul(f, c * inv(hc) % p, quot(m, hm), h);
        reduced = true;
        break;
      }
    }
    if (!reduced) {
      rem[m] = c;
      f.erase(f.begin());
    }
  }
  return rem;
}

std::vector<Poly> Ring::reduced_groebner(std::vector<Poly> gens) const {
  std::vector<Poly> g;
  for (auto& f : gens) {
    if (!f.empty()) g.push_back(monic(f));
  }
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t j = 0; j < g.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) pairs.emplace_back(i, j);
  }
  // Normal strategy: the pair with the smallest lcm goes first.
  while (!pairs.empty()) {
    auto best = pairs.begin();
    for (auto it = pairs.begin(); it != pairs.end(); ++it) {
      if (greater(order, lcm(g[best->first].begin()->first, g[best->second].begin()->first),
                  lcm(g[it->first].begin()->first, g[it->second].begin()->first))) {
        best = it;
      }
    }
    auto [i, j] = *best;
    pairs.erase(best);
    Poly r = normal_form(spoly(g[i], g[j]), g);
    if (r.empty()) continue;
    g.push_back(monic(r));
    for (std::size_t k = 0; k + 1 < g.size(); ++k) pairs.emplace_back(k, g.size() - 1);
  }
  // Minimalize.
  std::vector<Poly> minimal;
  for (std::size_t i = 0; i < g.size(); ++i) {
    bool redundant = false;
    for (std::size_t k = 0; k < g.size() && !redundant; ++k) {
      if (k == i) continue;
      const Mono& a = g[k].begin()->first;
      const Mono& b = g[i].begin()->first;
      if (divides(a, b) && (a != b || k < i)) redundant = true;
    }
    if (!redundant) minimal.push_back(g[i]);
  }
  std::vector<Poly> out;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Poly> others;
    for (std::size_t k = 0; k < minimal.size(); ++k) {
      if (k != i) others.push_back(minimal[k]);
    }
    Poly head = zero();
    head.insert(*minimal[i].begin());
    Poly tail = minimal[i];
    tail.erase(tail.begin());
    Poly nf = normal_form(tail, others);
    for (const auto& t : nf) head.insert(t);
    out.push_back(monic(head));
  }
  return out;
}

Poly from_library(const Ring& ring, const mgb::Polynomial& f) {
  Poly out = ring.zero();
  for (std::size_t i = 0; i < f.size(); ++i) {
    const mgb::MonomialView m = f.monomial(i);
    out[Mono(m.begin(), m.end())] = f.coeff(i);
  }
  return out;
}

std::set<std::string> canonical(const std::vector<Poly>& polys) {
  std::set<std::string> out;
  for (const Poly& f : polys) {
    std::ostringstream s;
    for (const auto& [m, c] : f) {
      s << c << ':';
      for (int e : m) s << e << ',';
      s << ';';
    }
    out.insert(s.str());
  }
  return out;
}

}  // namespace naive
