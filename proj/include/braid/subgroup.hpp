#pragma once

#include <optional>
#include <string>
#include <vector>

#include "braid/conjugacy.hpp"
#include "braid/special.hpp"

namespace braid {

/// Is there c in H with c^-1 x c = y?
struct SubgroupConjugacyInstance {
  ConjugatedParabolic h;
  NormalForm x;
  NormalForm y;
};

struct Extraction {
  bool ok = false;
  int p = 0;
  NormalForm c;  // z = Delta_n^{2p} c with c in H when ok
  std::string reason;
};

// Splits z in <Delta_n^2> * H. The central power is read off the crossing
// count of the first strands of the first two units of H, since members of
// H never cross strands of different units. H may be trivial.
Extraction extract_conjugator(const NormalForm& z, const ParabolicDescriptor& h);

struct ReductionInstance {
  SimultaneousInstance sim;  // (x, y) first, then (g, g) per constraint
  std::vector<std::string> labels;
};

// Constraint braids whose common centralizer is <Delta_n^2> * H:
// the twist/sigma chain for connected H, the centralizer generators
// otherwise, transported onto the actual H.
ReductionInstance build_reduction_instance(const SubgroupConjugacyInstance& inst);

enum class Verdict { Yes, No, Indeterminate };

struct SubgroupWitness {
  NormalForm c;
  BraidWord c_word;  // word in the generators of H
  int p = 0;
  bool verified = false;
};

struct SubgroupResult {
  Verdict verdict = Verdict::No;
  std::optional<SubgroupWitness> witness;
  std::string reason;
};

SubgroupResult solve_subgroup_conjugacy(const SubgroupConjugacyInstance& inst, const SolverOptions& options = {});

// H = B_{n-2} through exactly the four conditions on (x, y), Delta_{n-1}^2,
// Delta_{n-2}^2 and sigma_{n-1}.
SubgroupResult solve_corank2(const NormalForm& x, const NormalForm& y, const SolverOptions& options = {});

// "YES <c word> <p>", "NO" or "INDETERMINATE <reason>".
std::string format_result(const SubgroupResult& r);

}  // namespace braid
