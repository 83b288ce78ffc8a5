#include "braid/subgroup.hpp"

#include "braid/centralizers.hpp"

namespace braid {

Extraction extract_conjugator(const NormalForm& z, const ParabolicDescriptor& h) {
  const int n = h.strands();
  if (z.strands() != n) throw StrandMismatch("conjugator and subgroup differ in strand count");
  Extraction e;
  if (h.is_whole_group() || n == 1) {
    e.ok = true;
    e.c = z;
    return e;
  }
  // First strand of the first block against the first strand of the next
  // block, or of the first singleton if there is only one block.
  const auto& units = h.units();
  const auto blocks = h.blocks();
  int a = units[0].first;
  int b = units[1].first;
  if (!blocks.empty()) {
    a = blocks[0].first;
    if (blocks.size() > 1) {
      b = blocks[1].first;
    } else {
      for (const auto& u : units) {
        if (u.width == 1) {
          b = u.first;
          break;
        }
      }
    }
  }
  if (a > b) std::swap(a, b);
  const long crossings = pair_crossings(z, a, b);
  if (crossings % 2 != 0) {
    e.reason = "odd crossing count between strands " + std::to_string(a) + " and " + std::to_string(b);
    return e;
  }
  e.p = static_cast<int>(crossings / 2);
  e.c = NormalForm::delta_power(n, -2 * e.p) * z;
  if (!h.contains(e.c)) {
    e.reason = "conjugator is not a central power times a member of the subgroup";
    return e;
  }
  e.ok = true;
  return e;
}

namespace {

void add_pair(ReductionInstance& r, std::string label, const NormalForm& g) {
  r.sim.pairs.emplace_back(g, g);
  r.labels.push_back(std::move(label));
}

SubgroupResult indeterminate(std::string reason) {
  SubgroupResult r;
  r.verdict = Verdict::Indeterminate;
  r.reason = std::move(reason);
  return r;
}

// Turns a simultaneous answer into a subgroup answer for h.
SubgroupResult conclude(const ConjugacyResult& sim, const ConjugatedParabolic& h, const NormalForm& x,
                        const NormalForm& y) {
  SubgroupResult r;
  if (sim.decision == Decision::No) {
    r.verdict = Verdict::No;
    r.reason = sim.reason;
    return r;
  }
  if (sim.decision == Decision::BoundedNegative) return indeterminate(sim.reason);

  const Extraction e = extract_conjugator(h.to_standard(sim.witness->z), h.descriptor);
  if (!e.ok) return indeterminate(e.reason);
  auto word = parabolic_membership(e.c, h.descriptor.support());
  if (!word) return indeterminate("extracted conjugator failed the membership test");

  SubgroupWitness w;
  w.c = h.to_actual(e.c);
  w.p = e.p;
  if (h.standard()) {
    w.c_word = *word;
  } else {
    const BraidWord g = h.gamma.to_word();
    w.c_word = free_reduce(g * *word * g.inverse());
  }
  w.verified = h.contains(w.c) && conjugate(x, w.c) == y && NormalForm::from_word(w.c_word) == w.c;
  if (!w.verified) throw BraidError("subgroup witness failed verification");
  r.verdict = Verdict::Yes;
  r.witness = std::move(w);
  return r;
}

}  // namespace

ReductionInstance build_reduction_instance(const SubgroupConjugacyInstance& inst) {
  const ConjugatedParabolic& h = inst.h;
  const ParabolicDescriptor& d = h.descriptor;
  const int n = d.strands();
  require_same_strands(inst.x, inst.y);
  if (inst.x.strands() != n || h.gamma.strands() != n) throw StrandMismatch("instance mixes strand counts");

  ReductionInstance r;
  r.sim.n = n;
  r.sim.pairs.emplace_back(inst.x, inst.y);
  r.labels.push_back("x,y");
  if (d.is_whole_group()) return r;

  if (d.connected()) {
    const StrandUnit block = d.blocks().front();
    const int w = block.width;
    const NormalForm t = parabolic_transport(block.first, block.first + w - 1, n);
    const NormalForm t_inv = t.inverse();
    auto place = [&](const NormalForm& g) { return h.to_actual(t_inv * g * t); };
    for (int i = 1; i <= n - w; ++i) {
      add_pair(r, "D" + std::to_string(n - i) + "^2", place(twist(1, n - i, 2, n)));
    }
    for (int i = 2; i <= n - w; ++i) {
      add_pair(r, "s" + std::to_string(n - i + 1), place(NormalForm::generator(n, n - i + 1)));
    }
    return r;
  }
  for (const auto& g : parabolic_centralizer_generators(d).elements) add_pair(r, g.label, h.to_actual(g.value));
  return r;
}

SubgroupResult solve_subgroup_conjugacy(const SubgroupConjugacyInstance& inst, const SolverOptions& options) {
  const ReductionInstance red = build_reduction_instance(inst);
  return conclude(solve_simultaneous(red.sim, options), inst.h, inst.x, inst.y);
}

SubgroupResult solve_corank2(const NormalForm& x, const NormalForm& y, const SolverOptions& options) {
  require_same_strands(x, y);
  const int n = x.strands();
  if (n < 4) throw RangeError("corank-2 procedure needs n >= 4");
  SimultaneousInstance sim{n, {}};
  sim.pairs.emplace_back(x, y);
  for (const NormalForm& g : {twist(1, n - 1, 2, n), twist(1, n - 2, 2, n), NormalForm::generator(n, n - 1)}) {
    sim.pairs.emplace_back(g, g);
  }
  std::vector<int> support;
  for (int i = 1; i <= n - 3; ++i) support.push_back(i);
  const ConjugatedParabolic h{ParabolicDescriptor(n, support)};
  return conclude(solve_simultaneous(sim, options), h, x, y);
}

std::string format_result(const SubgroupResult& r) {
  switch (r.verdict) {
    case Verdict::Yes:
      return "YES " + format_letters(r.witness->c_word.letters) + " " + std::to_string(r.witness->p);
    case Verdict::No:
      return "NO";
    case Verdict::Indeterminate:
      return "INDETERMINATE " + r.reason;
  }
  return "NO";
}

}  // namespace braid
