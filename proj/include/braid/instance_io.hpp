#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "braid/subgroup.hpp"

namespace braid {

// Subgroup conjugacy instance as written in a file:
//   n: 3
//   support: 1
//   gamma: 2        (optional)
//   x: 2
//   y: -1 2 1
struct InstanceSpec {
  int n = 1;
  std::vector<int> support;
  BraidWord gamma;
  BraidWord x;
  BraidWord y;

  SubgroupConjugacyInstance build() const;
};

InstanceSpec parse_instance(std::string_view text);
std::string format_instance(const InstanceSpec& spec);

// "n: N" followed by one "pair: a ; b" line per pair.
SimultaneousInstance parse_simultaneous(std::string_view text);

enum class InstanceKind { Positive, Obstructed };

// Positive: y = c^-1 x c for a random x of word length 1..8 and a random
// c in H of canonical length <= 3. Obstructed: the positive y times sigma_1,
// which changes the exponent sum.
InstanceSpec random_instance(std::uint64_t seed, int n, const std::vector<int>& support, const BraidWord& gamma,
                             InstanceKind kind);

}  // namespace braid
