#include "braid/conjugacy.hpp"

#include <algorithm>
#include <cstdlib>
#include <mutex>
#include <unordered_map>
#include <unordered_set>

#include "braid/parallel.hpp"

namespace braid {

void SimultaneousInstance::check() const {
  check_strands(n);
  if (pairs.empty()) throw RangeError("simultaneous instance has no pairs");
  for (const auto& [a, b] : pairs) {
    if (a.strands() != n || b.strands() != n) throw StrandMismatch("pair on the wrong strand count");
  }
}

bool verify_witness(const SimultaneousInstance& inst, const NormalForm& z) {
  if (z.strands() != inst.n) return false;
  const NormalForm z_inv = z.inverse();
  return std::all_of(inst.pairs.begin(), inst.pairs.end(),
                     [&](const auto& p) { return z_inv * p.first * z == p.second; });
}

SummitReduction summit_reduce(const NormalForm& x) {
  const int n = x.strands();
  const int patience = n * (n - 1) / 2;
  NormalForm cur = x;
  NormalForm conj = NormalForm::identity(n);
  // inf is maximal once ||Delta|| consecutive cyclings fail to raise it.
  for (int idle = 0; idle < patience && cur.canonical_length() > 0;) {
    const SimpleBraid c = cycling_conjugator(cur);
    NormalForm next = conjugate(cur, c);
    conj.multiply_simple(c);
    idle = next.inf() > cur.inf() ? 0 : idle + 1;
    cur = std::move(next);
  }
  for (int idle = 0; idle < patience && cur.canonical_length() > 0;) {
    const NormalForm c = decycling_conjugator(cur);
    NormalForm next = conjugate(cur, c);
    conj = conj * c;
    idle = next.sup() < cur.sup() ? 0 : idle + 1;
    cur = std::move(next);
  }
  return {cur, conj};
}

namespace {

using Tuple = std::vector<NormalForm>;

struct TupleHash {
  std::size_t operator()(const Tuple& t) const {
    std::size_t h = 0;
    for (const auto& x : t) h = h * 0x100000001b3ull ^ x.hash();
    return h;
  }
};

struct Bound {
  int lo = 0;
  int hi = 0;
  bool admits(int inf, int sup) const { return inf >= lo && sup <= hi; }
  friend bool operator==(const Bound&, const Bound&) = default;
};

struct Span {
  short inf = 0;
  short sup = 0;
};

int spread(const Tuple& t) {
  int s = 0;
  for (const auto& x : t) s += x.sup() - x.inf();
  return s;
}

/// Conjugation of tuples by simple braids, restricted to per-component
/// inf/sup bounds. The positive braids keeping a tuple inside the bounds are
/// closed under left gcd and contain Delta, so any in-bounds conjugator
/// factors through in-bounds simple steps, and it is enough to follow the
/// minimal such step above each atom.
class OrbitEngine {
 public:
  OrbitEngine(int n, std::vector<bool> cached) : n_(n), simples_(all_simple_braids(n)), cached_(std::move(cached)) {
    for (std::size_t i = 0; i < simples_.size(); ++i) index_.emplace(simples_[i], static_cast<int>(i));
    spans_.resize(cached_.size());
  }

  std::size_t simple_count() const { return simples_.size(); }
  const SimpleBraid& simple(int i) const { return simples_[i]; }

  // Indices of non-trivial simple braids s with t^s inside the bounds.
  std::vector<int> valid_moves(const Tuple& t, const std::vector<Bound>& bounds) {
    std::vector<int> alive;
    alive.reserve(simples_.size());
    for (int i = 1; i < static_cast<int>(simples_.size()); ++i) alive.push_back(i);
    // Cached components are cheap to filter on, so they go first.
    for (std::size_t j = 0; j < t.size() && !alive.empty(); ++j) {
      if (!cached_[j]) continue;
      const auto& spans = spans_for(j, t[j]);
      std::erase_if(alive, [&](int i) { return !bounds[j].admits(spans[i].inf, spans[i].sup); });
    }
    for (std::size_t j = 0; j < t.size() && !alive.empty(); ++j) {
      if (cached_[j]) continue;
      std::erase_if(alive, [&](int i) {
        const NormalForm c = conjugate(t[j], simples_[i]);
        return !bounds[j].admits(c.inf(), c.sup());
      });
    }
    return alive;
  }

  // The minimal in-bounds simple conjugators, one per atom, deduplicated.
  std::vector<int> minimal_moves(const std::vector<int>& valid) const {
    std::vector<int> out;
    for (int a = 0; a + 1 < n_; ++a) {
      std::optional<SimpleBraid> m;
      for (int i : valid) {
        if (!(simples_[i].starting_set() & (1u << a))) continue;
        m = m ? meet(*m, simples_[i]) : simples_[i];
      }
      if (!m) continue;
      const int idx = index_.at(*m);
      if (!std::binary_search(valid.begin(), valid.end(), idx)) {
        throw BraidError("in-bounds conjugators not closed under meets");
      }
      if (std::find(out.begin(), out.end(), idx) == out.end()) out.push_back(idx);
    }
    return out;
  }

  Tuple apply(const Tuple& t, int move) const {
    Tuple out;
    out.reserve(t.size());
    for (const auto& x : t) out.push_back(conjugate(x, simples_[move]));
    return out;
  }

 private:
  const std::vector<Span>& spans_for(std::size_t j, const NormalForm& v) {
    {
      std::lock_guard<std::mutex> lock(mutex_);
      auto it = spans_[j].find(v);
      if (it != spans_[j].end()) return it->second;
    }
    std::vector<Span> spans(simples_.size());
    for (std::size_t i = 0; i < simples_.size(); ++i) {
      const NormalForm c = conjugate(v, simples_[i]);
      spans[i] = {static_cast<short>(c.inf()), static_cast<short>(c.sup())};
    }
    std::lock_guard<std::mutex> lock(mutex_);
    return spans_[j].emplace(v, std::move(spans)).first->second;
  }

  int n_;
  std::vector<SimpleBraid> simples_;
  std::unordered_map<SimpleBraid, int, decltype([](const SimpleBraid& s) { return s.hash(); })> index_;
  std::vector<bool> cached_;
  std::vector<std::unordered_map<NormalForm, std::vector<Span>, NormalFormHash>> spans_;
  std::mutex mutex_;
};

std::vector<Bound> bounds_between(const Tuple& a, const Tuple& b) {
  std::vector<Bound> out(a.size());
  for (std::size_t j = 0; j < a.size(); ++j) {
    out[j] = {std::min(a[j].inf(), b[j].inf()), std::max(a[j].sup(), b[j].sup())};
  }
  return out;
}

// Greedy descent of the total spread of t, keeping t inside the bounds it
// shares with `other`. Returns true if t moved.
bool descend(OrbitEngine& engine, Tuple& t, NormalForm& conj, const Tuple& other) {
  bool moved = false;
  while (true) {
    const auto bounds = bounds_between(t, other);
    const int current = spread(t);
    int best_move = -1;
    int best_spread = current;
    Tuple best;
    for (int i : engine.valid_moves(t, bounds)) {
      Tuple next = engine.apply(t, i);
      const int s = spread(next);
      if (s < best_spread) {
        best_spread = s;
        best_move = i;
        best = std::move(next);
      }
    }
    if (best_move < 0) return moved;
    t = std::move(best);
    conj.multiply_simple(engine.simple(best_move));
    moved = true;
  }
}

struct SearchOutcome {
  bool found = false;
  bool exhausted = false;  // the whole in-bounds orbit was explored
  std::vector<int> path;
  std::size_t nodes = 0;
};

struct SearchNode {
  Tuple value;
  int parent = -1;
  int move = 0;
};

// Breadth-first search over the in-bounds orbit of `start`. If `target` is
// null the orbit is explored completely and returned through `orbit`.
SearchOutcome orbit_search(OrbitEngine& engine, const Tuple& start, const Tuple* target,
                           const std::vector<Bound>& bounds, std::size_t budget, int jobs,
                           std::vector<Tuple>* orbit = nullptr) {
  SearchOutcome out;
  std::vector<SearchNode> nodes{{start, -1, 0}};
  std::unordered_set<Tuple, TupleHash> seen{start};
  auto finish = [&](int idx) {
    for (int k = idx; nodes[k].parent >= 0; k = nodes[k].parent) out.path.push_back(nodes[k].move);
    std::reverse(out.path.begin(), out.path.end());
    out.found = true;
  };
  if (target && start == *target) {
    finish(0);
    out.nodes = 1;
    return out;
  }
  std::size_t level_begin = 0;
  while (level_begin < nodes.size()) {
    const std::size_t level_end = nodes.size();
    struct Expansion {
      std::vector<int> moves;
      std::vector<Tuple> children;
    };
    std::vector<Expansion> expanded(level_end - level_begin);
    parallel_for(expanded.size(), jobs, [&](std::size_t k) {
      const Tuple& t = nodes[level_begin + k].value;
      auto& e = expanded[k];
      e.moves = engine.minimal_moves(engine.valid_moves(t, bounds));
      for (int m : e.moves) e.children.push_back(engine.apply(t, m));
    });
    for (std::size_t k = 0; k < expanded.size(); ++k) {
      auto& e = expanded[k];
      for (std::size_t c = 0; c < e.moves.size(); ++c) {
        if (!seen.insert(e.children[c]).second) continue;
        nodes.push_back({std::move(e.children[c]), static_cast<int>(level_begin + k), e.moves[c]});
        if (target && nodes.back().value == *target) {
          finish(static_cast<int>(nodes.size()) - 1);
          out.nodes = nodes.size();
          return out;
        }
        if (nodes.size() > budget) {
          out.nodes = nodes.size();
          return out;
        }
      }
    }
    level_begin = level_end;
  }
  out.exhausted = true;
  out.nodes = nodes.size();
  if (orbit) {
    for (auto& node : nodes) orbit->push_back(std::move(node.value));
  }
  return out;
}

std::vector<int> cycle_type(const std::vector<int>& perm) {
  std::vector<int> lengths;
  std::vector<bool> seen(perm.size());
  for (std::size_t s = 0; s < perm.size(); ++s) {
    if (seen[s]) continue;
    int len = 0;
    for (std::size_t t = s; !seen[t]; t = static_cast<std::size_t>(perm[t] - 1)) {
      seen[t] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.begin(), lengths.end());
  return lengths;
}

// A conjugacy invariant that differs between a and b, if any.
std::optional<std::string> obstruction(const NormalForm& a, const NormalForm& b) {
  if (exponent_sum(a) != exponent_sum(b)) return "exponent sums differ";
  if (cycle_type(permutation(a)) != cycle_type(permutation(b))) return "permutation cycle types differ";
  const auto sa = summit_reduce(a).representative;
  const auto sb = summit_reduce(b).representative;
  if (sa.inf() != sb.inf() || sa.sup() != sb.sup()) return "summit inf/sup differ";
  return std::nullopt;
}

ConjugacyResult yes(const SimultaneousInstance& inst, const NormalForm& z, std::size_t nodes) {
  if (!verify_witness(inst, z)) throw BraidError("conjugator failed verification");
  ConjugacyResult r;
  r.decision = Decision::Yes;
  r.witness = ConjugacyWitness{z, true};
  r.nodes = nodes;
  return r;
}

}  // namespace

std::vector<NormalForm> super_summit_set(const NormalForm& x, std::size_t limit) {
  const NormalForm rep = summit_reduce(x).representative;
  OrbitEngine engine(x.strands(), {false});
  std::vector<Tuple> orbit;
  auto outcome = orbit_search(engine, {rep}, nullptr, {Bound{rep.inf(), rep.sup()}}, limit, 1, &orbit);
  if (!outcome.exhausted) throw ResourceGuardExceeded("super summit set larger than limit");
  std::vector<NormalForm> out;
  for (auto& t : orbit) out.push_back(std::move(t.front()));
  std::sort(out.begin(), out.end());
  return out;
}

ConjugacyResult solve_conjugacy(const NormalForm& x, const NormalForm& y, const SolverOptions& options) {
  require_same_strands(x, y);
  SimultaneousInstance inst{x.strands(), {{x, y}}};
  return solve_simultaneous(inst, options);
}

ConjugacyResult solve_simultaneous(const SimultaneousInstance& inst, const SolverOptions& options) {
  inst.check();
  const int n = inst.n;
  if (std::all_of(inst.pairs.begin(), inst.pairs.end(), [](const auto& p) { return p.first == p.second; })) {
    return yes(inst, NormalForm::identity(n), 0);
  }
  for (std::size_t j = 0; j < inst.pairs.size(); ++j) {
    if (auto why = obstruction(inst.pairs[j].first, inst.pairs[j].second)) {
      ConjugacyResult r;
      r.decision = Decision::No;
      r.reason = *why + " in pair " + std::to_string(j + 1);
      return r;
    }
  }
  if (n == 1) return yes(inst, NormalForm::identity(n), 0);

  Tuple a;
  Tuple b;
  std::vector<bool> fixed;
  for (const auto& [x, y] : inst.pairs) {
    a.push_back(x);
    b.push_back(y);
    fixed.push_back(x == y);
  }
  OrbitEngine engine(n, fixed);

  // Tighten the bounds by moving both ends towards smaller spreads. Any
  // in-bounds search from the moved ends is still exact.
  NormalForm ca = NormalForm::identity(n);
  NormalForm cb = NormalForm::identity(n);
  for (bool moved = true; moved;) {
    moved = descend(engine, a, ca, b);
    moved = descend(engine, b, cb, a) || moved;
  }

  const auto bounds = bounds_between(a, b);
  auto outcome = orbit_search(engine, a, &b, bounds, options.node_budget, options.jobs);
  if (outcome.found) {
    NormalForm z = ca;
    for (int m : outcome.path) z.multiply_simple(engine.simple(m));
    return yes(inst, z * cb.inverse(), outcome.nodes);
  }
  if (outcome.exhausted) {
    ConjugacyResult r;
    r.decision = Decision::No;
    r.reason = "orbit exhausted after " + std::to_string(outcome.nodes) + " tuples";
    r.nodes = outcome.nodes;
    return r;
  }
  ConjugacyResult r;
  if (options.use_fallback) {
    r = brute_force_conjugator(inst, options.fallback);
    if (r.decision == Decision::Yes) {
      r.nodes = outcome.nodes;
      return r;
    }
  }
  r.decision = Decision::BoundedNegative;
  r.reason = "orbit search stopped at " + std::to_string(outcome.nodes) + " tuples" +
             (options.use_fallback ? "; " + r.reason : "");
  r.nodes = outcome.nodes;
  return r;
}

namespace {

struct Enumeration {
  std::vector<SimpleBraid> simples;
  std::vector<int> proper;  // indices of simples other than identity and Delta
  std::vector<std::vector<int>> successors;  // left-weighted followers, by position in proper
};

Enumeration make_enumeration(int n) {
  Enumeration e;
  e.simples = all_simple_braids(n);
  for (int i = 0; i < static_cast<int>(e.simples.size()); ++i) {
    if (!e.simples[i].is_identity() && !e.simples[i].is_delta()) e.proper.push_back(i);
  }
  e.successors.resize(e.proper.size());
  for (std::size_t u = 0; u < e.proper.size(); ++u) {
    for (std::size_t v = 0; v < e.proper.size(); ++v) {
      if (left_weighted(e.simples[e.proper[u]], e.simples[e.proper[v]])) e.successors[u].push_back(static_cast<int>(v));
    }
  }
  return e;
}

std::size_t count_sequences(const Enumeration& e, int max_length) {
  // ends[u] = number of sequences of the current length ending in proper[u].
  std::size_t total = 1;
  std::vector<std::size_t> ends(e.proper.size(), 1);
  for (int len = 1; len <= max_length; ++len) {
    if (len > 1) {
      std::vector<std::size_t> next(e.proper.size(), 0);
      for (std::size_t u = 0; u < ends.size(); ++u) {
        for (int v : e.successors[u]) next[v] += ends[u];
      }
      ends = std::move(next);
    }
    for (auto c : ends) total += c;
  }
  return total;
}

}  // namespace

std::size_t brute_force_candidate_count(int n, const BruteForceBound& bound) {
  if (bound.inf_max < bound.inf_min || bound.max_length < 0) return 0;
  if (n == 1) return 1;
  const Enumeration e = make_enumeration(n);
  return count_sequences(e, bound.max_length) * static_cast<std::size_t>(bound.inf_max - bound.inf_min + 1);
}

std::vector<NormalForm> brute_force_candidates(int n, const BruteForceBound& bound) {
  check_strands(n);
  if (n == 1) return {NormalForm::identity(1)};
  const std::size_t count = brute_force_candidate_count(n, bound);
  if (count > bound.guard) {
    throw ResourceGuardExceeded("brute force would enumerate " + std::to_string(count) + " conjugators");
  }
  const Enumeration e = make_enumeration(n);
  std::vector<NormalForm> out;
  out.reserve(count);
  for (int p = bound.inf_min; p <= bound.inf_max; ++p) {
    for (int len = 0; len <= bound.max_length; ++len) {
      // Depth-first over left-weighted sequences of exactly `len` factors,
      // visiting factors in simple-braid order.
      std::vector<int> stack;
      std::vector<NormalForm> prefix{NormalForm::delta_power(n, p)};
      std::function<void()> rec = [&] {
        if (static_cast<int>(stack.size()) == len) {
          out.push_back(prefix.back());
          return;
        }
        const auto& options = stack.empty() ? std::vector<int>{} : e.successors[stack.back()];
        const std::size_t choices = stack.empty() ? e.proper.size() : options.size();
        for (std::size_t c = 0; c < choices; ++c) {
          const int v = stack.empty() ? static_cast<int>(c) : options[c];
          NormalForm next = prefix.back();
          next.multiply_simple(e.simples[e.proper[v]]);
          stack.push_back(v);
          prefix.push_back(std::move(next));
          rec();
          prefix.pop_back();
          stack.pop_back();
        }
      };
      rec();
    }
  }
  return out;
}

ConjugacyResult brute_force_conjugator(const SimultaneousInstance& inst, const BruteForceBound& bound) {
  inst.check();
  for (const auto& z : brute_force_candidates(inst.n, bound)) {
    if (verify_witness(inst, z)) return yes(inst, z, 0);
  }
  ConjugacyResult r;
  r.decision = Decision::BoundedNegative;
  r.reason = "bounded-negative p in [" + std::to_string(bound.inf_min) + "," + std::to_string(bound.inf_max) +
             "] length <= " + std::to_string(bound.max_length);
  return r;
}

std::string format_conjugacy(const ConjugacyResult& r) {
  switch (r.decision) {
    case Decision::Yes:
      return format_word(r.witness->z.to_word()) + " VERIFIED";
    case Decision::No:
      return "NO";
    case Decision::BoundedNegative:
      return "INDETERMINATE " + r.reason;
  }
  return "NO";
}

}  // namespace braid
