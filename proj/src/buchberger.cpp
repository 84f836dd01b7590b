#include "mgb/buchberger.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include "mgb/errors.hpp"

namespace mgb {

using Clock = std::chrono::steady_clock;

std::string to_string(const CriteriaConfig& criteria) {
  if (!criteria.product && !criteria.chain) return "none";
  if (criteria.product && !criteria.chain) return "product";
  if (criteria.product && criteria.chain) return "product+chain";
  return "chain";
}

CriteriaConfig parse_criteria(std::string_view text) {
  if (text == "none") return {false, false};
  if (text == "product") return {true, false};
  if (text == "product+chain") return {true, true};
  if (text == "chain") return {false, true};
  throw InputError("unknown criteria '" + std::string(text) +
                   "' (expected none, product or product+chain)");
}

SPair make_pair(std::size_t i, std::size_t j, const BasisStore& store) {
  if (i >= j || j >= store.size()) throw UsageError("invalid S-pair indices");
  SPair pair;
  pair.i = i;
  pair.j = j;
  pair.lcm = lcm(store[i].lm, store[j].lm);
  pair.degree = monomial_multidegree(pair.lcm, store.grading());
  pair.sugar = total_degree(pair.degree);
  return pair;
}

void PendingQueue::push(SPair pair) {
  buckets_[pair.degree].push_back(std::move(pair));
}

void PendingQueue::push(std::vector<SPair> pairs) {
  for (auto& p : pairs) push(std::move(p));
}

std::vector<SPair> PendingQueue::take(const Multidegree& degree) {
  auto it = buckets_.find(degree);
  if (it == buckets_.end()) return {};
  std::vector<SPair> out = std::move(it->second);
  buckets_.erase(it);
  return out;
}

DegreeSet PendingQueue::occupied() const {
  DegreeSet out;
  for (const auto& [degree, pairs] : buckets_) out.insert(degree);
  return out;
}

std::size_t PendingQueue::pair_count() const {
  std::size_t n = 0;
  for (const auto& [degree, pairs] : buckets_) n += pairs.size();
  return n;
}

PairGeneration generate_pairs(std::span<const std::size_t> new_indices,
                              const BasisStore& store,
                              const CriteriaConfig& criteria) {
  PairGeneration out;
  std::vector<std::size_t> order(new_indices.begin(), new_indices.end());
  std::sort(order.begin(), order.end());
  std::vector<Monomial> lcms;
  for (std::size_t j : order) {
    if (j >= store.size()) throw UsageError("new index outside the store");
    const Monomial& lm_j = store[j].lm;
    lcms.clear();
    for (std::size_t i = 0; i < j; ++i) lcms.push_back(lcm(store[i].lm, lm_j));
    for (std::size_t i = 0; i < j; ++i) {
      ++out.considered;
      if (criteria.product && coprime(store[i].lm, lm_j)) {
        ++out.eliminated;
        continue;
      }
      if (criteria.chain) {
        bool chained = false;
        for (std::size_t k = 0; k < j && !chained; ++k) {
          chained = k != i && divides(lcms[k], lcms[i]) &&
                    !equal(lcms[k], lcms[i]);
        }
        if (chained) {
          ++out.eliminated;
          continue;
        }
      }
      SPair pair;
      pair.i = i;
      pair.j = j;
      pair.lcm = lcms[i];
      pair.degree = monomial_multidegree(pair.lcm, store.grading());
      pair.sugar = total_degree(pair.degree);
      out.pairs.push_back(std::move(pair));
    }
  }
  return out;
}

Polynomial s_polynomial(const PolyRing& ring, const Polynomial& f,
                        const Polynomial& g) {
  if (f.is_zero() || g.is_zero()) {
    throw UsageError("S-polynomial of a zero polynomial");
  }
  const PrimeField& k = ring.field();
  Monomial l = lcm(f.leading_monomial(), g.leading_monomial());
  Monomial uf = quotient(l, f.leading_monomial());
  Monomial ug = quotient(l, g.leading_monomial());
  Polynomial left = ring.mul_term(k.inv(f.leading_coeff()), uf, f);
  return ring.add_scaled(left, k.neg(k.inv(g.leading_coeff())), ug, g);
}

namespace {

/// A polynomial held as a sum of sorted pieces whose lengths grow by a
/// factor of 4, so adding a short multiple does not copy the whole sum.
class Geobucket {
 public:
  Geobucket(const PolyRing& ring, Polynomial p)
      : ring_(ring), one_(ring.nvars()) {
    add(std::move(p));
  }

  /// Adds c * m * g.
  void add_scaled(Coeff c, MonomialView m, const Polynomial& g) {
    add(ring_.mul_term(c, m, g));
  }

  /// Finds the leading term of the sum, dropping terms that cancel.
  /// Returns false once the sum is zero.
  bool lead() {
    const PrimeField& k = ring_.field();
    for (;;) {
      heads_.clear();
      for (std::size_t b = 0; b < buckets_.size(); ++b) {
        const Piece& piece = buckets_[b];
        if (piece.start == piece.poly.size()) continue;
        if (heads_.empty()) {
          heads_.push_back(b);
          continue;
        }
        const auto cmp = ring_.order().compare(piece.poly.monomial(piece.start),
                                               head_monomial());
        if (cmp > 0) heads_.clear();
        if (cmp >= 0) heads_.push_back(b);
      }
      if (heads_.empty()) return false;
      coeff_ = 0;
      for (std::size_t b : heads_) {
        coeff_ = k.add(coeff_, buckets_[b].poly.coeff(buckets_[b].start));
      }
      if (coeff_ != 0) return true;
      pop();
    }
  }

  /// Valid after lead() returned true and before the next add.
  Coeff lead_coeff() const { return coeff_; }
  MonomialView lead_monomial() const { return head_monomial(); }

  void pop() {
    for (std::size_t b : heads_) ++buckets_[b].start;
    heads_.clear();
  }

 private:
  struct Piece {
    Polynomial poly;
    std::size_t start = 0;
    std::size_t size() const { return poly.size() - start; }
  };

  static std::size_t capacity(std::size_t b) { return std::size_t{4} << (2 * b); }

  MonomialView head_monomial() const {
    const Piece& piece = buckets_[heads_.front()];
    return piece.poly.monomial(piece.start);
  }

  void add(Polynomial q) {
    heads_.clear();
    std::size_t b = 0;
    while (capacity(b) < q.size()) ++b;
    for (;;) {
      if (buckets_.size() <= b) buckets_.resize(b + 1, Piece{Polynomial(ring_.nvars()), 0});
      Piece& piece = buckets_[b];
      if (piece.size() != 0) q = ring_.add_scaled(piece.poly, 1, one_, q, piece.start);
      if (q.size() <= capacity(b)) {
        piece = Piece{std::move(q), 0};
        return;
      }
      piece = Piece{Polynomial(ring_.nvars()), 0};
      ++b;
    }
  }

  const PolyRing& ring_;
  Monomial one_;
  std::vector<Piece> buckets_;
  std::vector<std::size_t> heads_;
  Coeff coeff_ = 0;
};

}  // namespace

Polynomial reduce(const PolyRing& ring, const Polynomial& p,
                  const BasisView& view, ReduceCounters* counters) {
  if (p.is_zero()) return p;
  const GradingMap& grading = view.grading();
  const bool debug = debug_asserts_enabled();

  Multidegree degree;
  if (debug) {
    auto d = homogeneous_degree(p, grading);
    if (std::holds_alternative<NotHomogeneous>(d)) {
      throw InvariantViolation("reducing a non-homogeneous polynomial");
    }
    degree = std::get<Multidegree>(std::move(d));
  } else if (view.bound()) {
    degree = leading_multidegree(p, grading);
  }
  if (view.bound() && !leq(*view.bound(), degree)) {
    throw UsageError("view bounded by " + to_string(*view.bound()) +
                     " used to reduce a polynomial of degree " +
                     to_string(degree));
  }

  const PrimeField& k = ring.field();
  auto reducers = view.elements();
  TermBuilder rest(ring.nvars());
  Geobucket h(ring, p);

  while (h.lead()) {
    MonomialView m = h.lead_monomial();
    const std::uint64_t mask = divisibility_mask(m);
    const BasisElement* hit = nullptr;
    for (const BasisElement* e : reducers) {
      if ((e->mask & ~mask) == 0 && divides(e->lm, m)) {
        hit = e;
        break;
      }
    }
    if (hit == nullptr) {
      rest.push_back(h.lead_coeff(), m);
      h.pop();
      continue;
    }
    if (debug && !leq(hit->degree, degree)) {
      throw InvariantViolation("reducer of degree " + to_string(hit->degree) +
                               " used below degree " + to_string(degree));
    }
    const Monomial u = quotient(m, hit->lm);
    if (debug && add(hit->degree, monomial_multidegree(u, grading)) != degree) {
      throw InvariantViolation("reduction step changed the multidegree " +
                               to_string(degree));
    }
    // Reducers are monic.
    h.add_scaled(k.neg(h.lead_coeff()), u, hit->poly);
    if (counters) ++counters->steps;
  }
  return std::move(rest).finish();
}

void sort_bucket(std::vector<SPair>& pairs, const MonomialOrder& order) {
  std::sort(pairs.begin(), pairs.end(), [&](const SPair& a, const SPair& b) {
    auto c = order.compare(a.lcm, b.lcm);
    if (c != 0) return c < 0;
    return std::tie(a.i, a.j) < std::tie(b.i, b.j);
  });
}

BucketResult reduce_bucket(const PolyRing& ring, const Multidegree& degree,
                           std::vector<SPair> pairs, const BasisStore& store) {
  const auto start = Clock::now();
  BucketResult out;
  out.stats.degree = degree;
  out.stats.spairs_in = pairs.size();
  sort_bucket(pairs, ring.order());

  BasisView view = BasisView::below(store, degree);
  std::deque<BasisElement> local;
  for (const SPair& pair : pairs) {
    if (pair.degree != degree) {
      throw InvariantViolation("pair of degree " + to_string(pair.degree) +
                               " in bucket " + to_string(degree));
    }
    Polynomial s = s_polynomial(ring, store[pair.i].poly, store[pair.j].poly);
    Polynomial r = reduce(ring, s, view);
    if (r.is_zero()) {
      ++out.stats.zero_reductions;
      continue;
    }
    r = ring.make_monic(r);
    local.push_back(BasisElement::make(r, store.grading()));
    if (local.back().degree != degree) {
      throw InvariantViolation("normal form left its degree bucket");
    }
    view.push_back(&local.back());
    out.new_elements.push_back(std::move(r));
  }
  out.stats.new_elements = out.new_elements.size();
  out.stats.reduce_time = Clock::now() - start;
  return out;
}

ProcessResult process_degree(const PolyRing& ring, const Multidegree& degree,
                             PendingQueue& queue, BasisStore& store,
                             const CriteriaConfig& criteria) {
  BucketResult bucket = reduce_bucket(ring, degree, queue.take(degree), store);
  ProcessResult out;
  out.stats = bucket.stats;
  if (bucket.new_elements.empty()) return out;

  const auto start = Clock::now();
  std::vector<std::size_t> indices;
  for (const auto& f : bucket.new_elements) indices.push_back(store.append(f));
  out.generation = generate_pairs(indices, store, criteria);
  out.new_pairs = out.generation.pairs;
  queue.push(out.generation.pairs);
  out.stats.genpairs_time = Clock::now() - start;
  out.new_elements = std::move(bucket.new_elements);
  return out;
}

void sort_canonical(const PolyRing& ring, const GradingMap& grading,
                    std::vector<Polynomial>& polys) {
  struct Keyed {
    std::string degree;
    Polynomial poly;
  };
  std::vector<Keyed> keyed;
  keyed.reserve(polys.size());
  for (auto& f : polys) {
    keyed.push_back({to_string(leading_multidegree(f, grading)), std::move(f)});
  }
  std::stable_sort(keyed.begin(), keyed.end(),
                   [&](const Keyed& a, const Keyed& b) {
                     if (a.degree != b.degree) return a.degree < b.degree;
                     return ring.order().less(a.poly.leading_monomial(),
                                              b.poly.leading_monomial());
                   });
  polys.clear();
  for (auto& k : keyed) polys.push_back(std::move(k.poly));
}

std::vector<Polynomial> normalize_generators(const PolyRing& ring,
                                             const GradingMap& grading,
                                             std::vector<Polynomial> gens) {
  std::vector<Polynomial> work;
  for (std::size_t n = 0; n < gens.size(); ++n) {
    const Polynomial& g = gens[n];
    if (g.is_zero()) continue;
    auto d = homogeneous_degree(g, grading);
    if (auto* bad = std::get_if<NotHomogeneous>(&d)) {
      throw InputError("generator " + std::to_string(n + 1) +
                       " is not homogeneous: it has terms of degrees " +
                       to_string(bad->first) + " and " + to_string(bad->other));
    }
    Polynomial m = ring.make_monic(g);
    if (std::find(work.begin(), work.end(), m) == work.end()) {
      work.push_back(std::move(m));
    }
  }
  sort_canonical(ring, grading, work);

  // Autoreduce until no element changes.
  for (bool changed = true; changed;) {
    changed = false;
    std::vector<BasisElement> elements;
    for (const auto& f : work) elements.push_back(BasisElement::make(f, grading));
    for (std::size_t i = 0; i < work.size() && !changed; ++i) {
      BasisView others(grading);
      for (std::size_t k = 0; k < elements.size(); ++k) {
        if (k != i) others.push_back(&elements[k]);
      }
      Polynomial r = reduce(ring, work[i], others);
      if (r == work[i]) continue;
      changed = true;
      if (r.is_zero()) {
        work.erase(work.begin() + static_cast<std::ptrdiff_t>(i));
      } else {
        work[i] = ring.make_monic(r);
      }
    }
  }
  sort_canonical(ring, grading, work);
  return work;
}

BasisStore interreduce(const PolyRing& ring, const BasisStore& store) {
  const std::size_t n = store.size();
  std::vector<std::size_t> minimal;
  for (std::size_t i = 0; i < n; ++i) {
    bool redundant = false;
    for (std::size_t k = 0; k < n && !redundant; ++k) {
      if (k == i || !divides(store[k].lm, store[i].lm)) continue;
      redundant = !(store[k].lm == store[i].lm) || k < i;
    }
    if (!redundant) minimal.push_back(i);
  }

  std::vector<Polynomial> reduced;
  for (std::size_t i : minimal) {
    BasisView others(store.grading());
    for (std::size_t k : minimal) {
      if (k != i) others.push_back(&store[k]);
    }
    reduced.push_back(ring.make_monic(reduce(ring, store[i].poly, others)));
  }
  sort_canonical(ring, store.grading(), reduced);
  BasisStore out(store.grading());
  for (auto& f : reduced) out.append(std::move(f));
  return out;
}

}  // namespace mgb
