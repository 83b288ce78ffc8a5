#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "braid/normal_form.hpp"

namespace braid {

/// Find z with z^-1 a_i z = b_i for every pair simultaneously.
struct SimultaneousInstance {
  int n = 1;
  std::vector<std::pair<NormalForm, NormalForm>> pairs;

  // Throws unless the list is non-empty and all strand counts equal n.
  void check() const;
};

struct ConjugacyWitness {
  NormalForm z;
  bool verified = false;
};

enum class Decision { Yes, No, BoundedNegative };

struct ConjugacyResult {
  Decision decision = Decision::No;
  std::optional<ConjugacyWitness> witness;
  // Why the answer is negative, or which bound was exhausted.
  std::string reason;
  // Tuples visited by the orbit search.
  std::size_t nodes = 0;
};

// z = Delta^p A_1 ... A_l with inf_min <= p <= inf_max and l <= max_length.
// Since Delta^2 is central, p in {0, 1} already covers every conjugation
// action of braids with canonical length <= max_length.
struct BruteForceBound {
  int inf_min = 0;
  int inf_max = 1;
  int max_length = 3;
  // Refuse enumerations with more candidates than this.
  std::size_t guard = 2'000'000;
};

struct SolverOptions {
  // Maximum number of tuples the orbit search may visit.
  std::size_t node_budget = 500'000;
  bool use_fallback = true;
  BruteForceBound fallback;
  int jobs = 1;
};

bool verify_witness(const SimultaneousInstance& inst, const NormalForm& z);

struct SummitReduction {
  NormalForm representative;  // conjugator^-1 x conjugator
  NormalForm conjugator;
};
// Iterated cycling then decycling: reaches the maximal inf and then the
// minimal sup of the conjugacy class.
SummitReduction summit_reduce(const NormalForm& x);

// All conjugates of x with maximal inf and minimal sup, sorted. Throws
// ResourceGuardExceeded if the set grows beyond `limit`.
std::vector<NormalForm> super_summit_set(const NormalForm& x, std::size_t limit = 1'000'000);

ConjugacyResult solve_conjugacy(const NormalForm& x, const NormalForm& y, const SolverOptions& options = {});
ConjugacyResult solve_simultaneous(const SimultaneousInstance& inst, const SolverOptions& options = {});

// Candidate conjugators of brute_force_conjugator in enumeration order:
// by p, then by canonical length, then lexicographically in the factor
// sequence (simple braids ordered as in all_simple_braids).
std::vector<NormalForm> brute_force_candidates(int n, const BruteForceBound& bound);
std::size_t brute_force_candidate_count(int n, const BruteForceBound& bound);

// First candidate conjugating every pair, or BoundedNegative.
ConjugacyResult brute_force_conjugator(const SimultaneousInstance& inst, const BruteForceBound& bound);

// "<z word> VERIFIED", "NO" or "INDETERMINATE <reason>".
std::string format_conjugacy(const ConjugacyResult& r);

}  // namespace braid
