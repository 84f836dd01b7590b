#include "mgb/engine.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "mgb/errors.hpp"

namespace mgb {

using Clock = std::chrono::steady_clock;

void ScheduleAudit::on_round(const std::vector<Multidegree>& plan) {
  claimed_.insert(claimed_.end(), plan.begin(), plan.end());
}

void ScheduleAudit::on_dispatch(const Multidegree& degree,
                                const std::vector<Multidegree>& running,
                                const PendingQueue& pending) const {
  DegreeSet together(running);
  if (!together.insert(degree) || !is_antichain(together)) {
    throw InvariantViolation("dispatching " + to_string(degree) +
                             " would run comparable degrees concurrently");
  }
  for (const auto& [other, pairs] : pending.buckets()) {
    if (strictly_less(other, degree)) {
      throw InvariantViolation("dispatching " + to_string(degree) +
                               " while " + to_string(other) +
                               " is still pending below it");
    }
  }
}

void ScheduleAudit::on_new_pairs(std::span<const SPair> pairs) const {
  for (const SPair& p : pairs) {
    for (const Multidegree& c : claimed_) {
      if (leq(p.degree, c)) {
        throw InvariantViolation("new pair at " + to_string(p.degree) +
                                 " lies at or below scheduled degree " +
                                 to_string(c));
      }
    }
  }
}

EngineState seed_state(const PolyRing& ring, const GradingMap& grading,
                       std::vector<Polynomial> generators,
                       const CriteriaConfig& criteria) {
  EngineState state{BasisStore(grading), {}, 0, 0, 0, 0, {}, {}};
  merge_elements(state, normalize_generators(ring, grading, std::move(generators)),
                 criteria, nullptr);
  return state;
}

std::vector<std::size_t> merge_elements(EngineState& state,
                                        std::vector<Polynomial> elements,
                                        const CriteriaConfig& criteria,
                                        std::chrono::nanoseconds* elapsed,
                                        const ScheduleAudit* audit) {
  const auto start = Clock::now();
  std::vector<std::size_t> indices;
  indices.reserve(elements.size());
  for (auto& f : elements) indices.push_back(state.store.append(std::move(f)));
  PairGeneration gen = generate_pairs(indices, state.store, criteria);
  if (audit) audit->on_new_pairs(gen.pairs);
  state.pairs_considered += gen.considered;
  state.pairs_eliminated += gen.eliminated;
  state.pairs_enqueued += gen.pairs.size();
  state.pending.push(std::move(gen.pairs));
  if (elapsed) *elapsed = Clock::now() - start;
  return indices;
}

std::vector<Multidegree> round_plan(const PendingQueue& pending,
                                    AntichainStrategy strategy) {
  if (pending.empty()) throw UsageError("round_plan on an empty queue");
  DegreeSet antichain = extract_antichain(pending.occupied(), strategy);
  if (antichain.empty() || !is_antichain(antichain)) {
    throw InvariantViolation("round plan is not a nonempty antichain");
  }
  std::vector<Multidegree> plan = antichain.elements();
  std::sort(plan.begin(), plan.end(), DegreeTextLess{});
  return plan;
}

EngineResult buchberger_serial(const PolyRing& ring, const GradingMap& grading,
                               std::vector<Polynomial> generators,
                               const EngineOptions& options) {
  const auto start = Clock::now();
  EngineState state =
      seed_state(ring, grading, std::move(generators), options.criteria);
  EngineResult result = continue_serial(ring, std::move(state), options);
  result.wallclock = Clock::now() - start;
  return result;
}

EngineResult continue_serial(const PolyRing& ring, EngineState state,
                             const EngineOptions& options) {
  const auto start = Clock::now();
  EngineResult result;
  result.engine = "serial";
  result.workers = 1;
  ScheduleAudit audit;
  while (!state.pending.empty()) {
    if (options.stop_after_rounds && state.round >= *options.stop_after_rounds) {
      result.wallclock = Clock::now() - start;
      result.state = std::move(state);
      return result;
    }
    const auto round_start = Clock::now();
    ++state.round;
    std::vector<Multidegree> plan = round_plan(state.pending, options.strategy);
    audit.on_round(plan);
    for (const Multidegree& d : plan) {
      audit.on_dispatch(d, {}, state.pending);
      ProcessResult r =
          process_degree(ring, d, state.pending, state.store, options.criteria);
      audit.on_new_pairs(r.new_pairs);
      state.pairs_considered += r.generation.considered;
      state.pairs_eliminated += r.generation.eliminated;
      state.pairs_enqueued += r.generation.pairs.size();
      r.stats.round = state.round;
      state.stats.push_back(std::move(r.stats));
    }
    state.rounds.push_back({state.round, plan.size(), Clock::now() - round_start});
    if (options.checkpoint) save_checkpoint(*options.checkpoint, ring, state);
  }
  result.completed = true;
  result.wallclock = Clock::now() - start;
  result.state = std::move(state);
  return result;
}

// ---------------------------------------------------------------------------
// Checkpoints

namespace {

constexpr const char* kCheckpointMagic = "mgb-checkpoint";
constexpr int kCheckpointVersion = 1;

void write_poly(std::ostream& out, const Polynomial& f) {
  out << f.size();
  for (std::size_t i = 0; i < f.size(); ++i) {
    out << ' ' << f.coeff(i);
    for (Exponent e : f.monomial(i)) out << ' ' << e;
  }
  out << '\n';
}

class TokenReader {
 public:
  explicit TokenReader(std::istream& in) : in_(in) {}

  std::string word() {
    std::string w;
    if (!(in_ >> w)) fail("unexpected end of checkpoint");
    return w;
  }
  void expect(const std::string& w) {
    if (word() != w) fail("expected '" + w + "' in checkpoint");
  }
  template <typename T>
  T number() {
    T value{};
    if (!(in_ >> value)) fail("expected a number in checkpoint");
    return value;
  }
  [[noreturn]] static void fail(const std::string& message) {
    throw InputError(message);
  }

 private:
  std::istream& in_;
};

Polynomial read_poly(TokenReader& in, const PolyRing& ring) {
  auto nterms = in.number<std::size_t>();
  std::vector<Term> terms;
  terms.reserve(nterms);
  for (std::size_t t = 0; t < nterms; ++t) {
    auto c = in.number<std::uint64_t>();
    Monomial m(ring.nvars());
    for (std::size_t v = 0; v < ring.nvars(); ++v) {
      m[v] = in.number<Exponent>();
    }
    terms.push_back({static_cast<Coeff>(c % ring.field().modulus()), std::move(m)});
  }
  Polynomial f = ring.from_terms(std::move(terms));
  if (f.size() != nterms) TokenReader::fail("non-canonical checkpoint polynomial");
  return f;
}

}  // namespace

void save_checkpoint(const std::filesystem::path& path, const PolyRing& ring,
                     const EngineState& state) {
  std::ostringstream out;
  out << kCheckpointMagic << ' ' << kCheckpointVersion << '\n';
  out << "modulus " << ring.field().modulus() << '\n';
  out << "order " << to_string(ring.order().kind()) << ' ' << ring.nvars();
  for (std::size_t v : ring.order().ranking()) out << ' ' << v;
  out << '\n';
  const GradingMap& grading = state.store.grading();
  out << "grading " << grading.dim();
  for (const auto& d : grading.variable_degrees()) out << ' ' << to_string(d);
  out << '\n';
  out << "round " << state.round << '\n';
  out << "counters " << state.pairs_considered << ' ' << state.pairs_eliminated
      << ' ' << state.pairs_enqueued << '\n';
  out << "elements " << state.store.size() << '\n';
  for (std::size_t i = 0; i < state.store.size(); ++i) {
    write_poly(out, state.store[i].poly);
  }
  out << "pairs " << state.pending.pair_count() << '\n';
  for (const auto& [degree, pairs] : state.pending.buckets()) {
    for (const auto& p : pairs) out << p.i << ' ' << p.j << '\n';
  }
  out << "stats " << state.stats.size() << '\n';
  for (const auto& s : state.stats) {
    out << s.round << ' ' << s.worker_id << ' ' << to_string(s.degree) << ' '
        << s.spairs_in << ' ' << s.zero_reductions << ' ' << s.new_elements
        << ' ' << s.reduce_time.count() << ' ' << s.genpairs_time.count()
        << '\n';
  }
  out << "rounds " << state.rounds.size() << '\n';
  for (const auto& r : state.rounds) {
    out << r.round << ' ' << r.degrees << ' ' << r.span.count() << '\n';
  }
  out << "end\n";

  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream file(tmp, std::ios::trunc);
    if (!file) throw InputError("cannot write checkpoint " + tmp.string());
    file << out.str();
    if (!file.flush()) throw InputError("cannot write checkpoint " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

EngineState load_checkpoint(const std::filesystem::path& path,
                            const PolyRing& ring, const GradingMap& grading) {
  std::ifstream file(path);
  if (!file) throw InputError("cannot open checkpoint " + path.string());
  TokenReader in(file);
  in.expect(kCheckpointMagic);
  if (in.number<int>() != kCheckpointVersion) {
    TokenReader::fail("unsupported checkpoint version");
  }
  in.expect("modulus");
  if (in.number<std::uint32_t>() != ring.field().modulus()) {
    TokenReader::fail("checkpoint was written for a different modulus");
  }
  in.expect("order");
  OrderKind kind = parse_order_kind(in.word());
  auto nvars = in.number<std::size_t>();
  std::vector<std::size_t> ranking(nvars);
  for (auto& v : ranking) v = in.number<std::size_t>();
  if (nvars != ring.nvars() || !(MonomialOrder(kind, ranking) == ring.order())) {
    TokenReader::fail("checkpoint was written for a different monomial order");
  }
  in.expect("grading");
  auto dim = in.number<std::size_t>();
  std::vector<Multidegree> degrees;
  for (std::size_t v = 0; v < nvars; ++v) degrees.push_back(parse_multidegree(in.word()));
  if (dim != grading.dim() || !(GradingMap(degrees) == grading)) {
    TokenReader::fail("checkpoint was written for a different grading");
  }

  EngineState state{BasisStore(grading), {}, 0, 0, 0, 0, {}, {}};
  in.expect("round");
  state.round = in.number<std::size_t>();
  in.expect("counters");
  state.pairs_considered = in.number<std::size_t>();
  state.pairs_eliminated = in.number<std::size_t>();
  state.pairs_enqueued = in.number<std::size_t>();
  in.expect("elements");
  auto nelements = in.number<std::size_t>();
  for (std::size_t i = 0; i < nelements; ++i) state.store.append(read_poly(in, ring));
  in.expect("pairs");
  auto npairs = in.number<std::size_t>();
  for (std::size_t n = 0; n < npairs; ++n) {
    auto i = in.number<std::size_t>();
    auto j = in.number<std::size_t>();
    if (i >= j || j >= state.store.size()) TokenReader::fail("invalid checkpoint pair");
    state.pending.push(make_pair(i, j, state.store));
  }
  in.expect("stats");
  auto nstats = in.number<std::size_t>();
  for (std::size_t n = 0; n < nstats; ++n) {
    DegreeStats s;
    s.round = in.number<std::size_t>();
    s.worker_id = in.number<std::size_t>();
    s.degree = parse_multidegree(in.word());
    s.spairs_in = in.number<std::size_t>();
    s.zero_reductions = in.number<std::size_t>();
    s.new_elements = in.number<std::size_t>();
    s.reduce_time = std::chrono::nanoseconds(in.number<std::int64_t>());
    s.genpairs_time = std::chrono::nanoseconds(in.number<std::int64_t>());
    state.stats.push_back(std::move(s));
  }
  in.expect("rounds");
  auto nrounds = in.number<std::size_t>();
  for (std::size_t n = 0; n < nrounds; ++n) {
    RoundStats r;
    r.round = in.number<std::size_t>();
    r.degrees = in.number<std::size_t>();
    r.span = std::chrono::nanoseconds(in.number<std::int64_t>());
    state.rounds.push_back(r);
  }
  in.expect("end");
  return state;
}

}  // namespace mgb
