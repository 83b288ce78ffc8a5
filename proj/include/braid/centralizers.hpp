#pragma once

#include <string>
#include <vector>

#include "braid/special.hpp"

namespace braid {

struct LabeledBraid {
  std::string label;
  // Which family of braids the element belongs to, e.g. "block-center".
  std::string provenance;
  NormalForm value;
};

struct GeneratorSet {
  int n = 1;
  std::vector<LabeledBraid> elements;

  // Throws if the label is already present or the strand count differs.
  void add(std::string label, std::string provenance, NormalForm value);
  std::vector<NormalForm> values() const;
  std::size_t size() const { return elements.size(); }
};

// Smallest e in {1, 2} with Delta_r^e central in B_r.
int central_twist_exponent(int r);

// Generators of C(Delta_r^2): B_r together with the strand-(r+1) orbit and
// sigma_{r+1..n-1}. The unsimplified set also lists every block orbit
// bbar_{[r+1,r+l],1}, l >= 2.
GeneratorSet twist_centralizer_generators(int n, int r, bool simplified);

enum class BlockVariant { Orbit, TwistChain };
// Generators of C(B_r). Orbit: Delta_r^e, bbar_{r+1,1}, sigma_{r+1..n-1}.
// TwistChain: Delta_r^e, Delta_{r+1}^2..Delta_{n-1}^2, sigma_{r+1..n-1}.
// The trivial Delta_1 is left out.
GeneratorSet block_centralizer_generators(int n, int r, BlockVariant variant);

// Words in B_m generating the braids whose permutation fixes every position
// in `fixed` (1-based): A_{i,j} for each pair that involves a fixed position
// or straddles one, and for each pair y < y' of consecutive free positions
// the band sigma_{y'-1}..sigma_{y+1} sigma_y sigma_{y+1}^-1..sigma_{y'-1}^-1.
struct LabeledWord {
  std::string label;
  BraidWord word;
};
std::vector<LabeledWord> pure_on_generators(int m, const std::vector<int>& fixed);

// C(H) for a standard parabolic H: the central twist of each block, then the
// cabled generators of the braids that are pure on the block positions.
// Every element is checked to commute with H; throws BraidError otherwise.
GeneratorSet parabolic_centralizer_generators(const ParabolicDescriptor& h);

// H (conjugated if needed) together with Delta_n^2.
GeneratorSet double_centralizer_generators(const ConjugatedParabolic& h);

struct CheckResult {
  std::string id;
  std::string params;
  bool pass = false;
  std::string detail;
};
// "PASS <id> <params>" or "FAIL <id> <params>".
std::string format_check(const CheckResult& r);
bool all_pass(const std::vector<CheckResult>& results);

// Every twist and bbar identity that makes sense on n strands, plus the
// normal form pattern of Delta_{n-1}^{2q} sigma_{n-1} for q <= 3.
std::vector<CheckResult> verify_structural_identities(int n, int jobs = 1);

// Distinct braids represented by words of length <= max_length over the
// given generator indices, in breadth-first order.
std::vector<NormalForm> word_ball(int n, const std::vector<int>& generators, int max_length);

enum class IntersectionKind { TwistCentralizer, ConstraintChain };
struct IntersectionQuery {
  IntersectionKind kind = IntersectionKind::TwistCentralizer;
  int r = 2;  // TwistCentralizer: B_{r+1} and C(Delta_r^2), 2 <= r <= n-1
  int K = 1;  // ConstraintChain: number of (Delta^2, sigma) constraint pairs
  int m = 1;  // ConstraintChain: requires 1 <= K <= n-m
};
// Checks the superset direction exactly and the subset direction on every
// braid of word length <= max_length.
std::vector<CheckResult> verify_intersection_property(int n, const IntersectionQuery& q, int max_length);

// Every braid of word length <= max_length commuting with the centralizer
// generators of h must be Delta_n^{2p} times an element of h.
CheckResult verify_double_centralizer(const ParabolicDescriptor& h, int max_length);

}  // namespace braid
