#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace braid {

// Largest strand count supported by the permutation-table representation.
inline constexpr int kMaxStrands = 16;

class BraidError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A letter outside [1, n-1], a zero letter, or unparsable text.
class MalformedWord : public BraidError {
 public:
  using BraidError::BraidError;
};

// Operands living in braid groups with different strand counts.
class StrandMismatch : public BraidError {
 public:
  using BraidError::BraidError;
};

// Parameters outside the documented domain of an operation.
class RangeError : public BraidError {
 public:
  using BraidError::BraidError;
};

// An enumeration whose cost estimate exceeds the caller's guard.
class ResourceGuardExceeded : public BraidError {
 public:
  using BraidError::BraidError;
};

/// A word in the Artin generators of B_n. Letter +i stands for sigma_i and
/// -i for its inverse. Words are read left to right.
struct BraidWord {
  int n = 1;
  std::vector<int> letters;

  BraidWord() = default;
  BraidWord(int strands, std::vector<int> word);

  bool empty() const { return letters.empty(); }
  std::size_t size() const { return letters.size(); }

  BraidWord inverse() const;
  BraidWord operator*(const BraidWord& rhs) const;

  friend bool operator==(const BraidWord&, const BraidWord&) = default;
};

void check_strands(int n);

// Throws MalformedWord unless every letter is a valid generator index for n.
void validate(const BraidWord& w);

// Cancels adjacent x x^-1 pairs.
BraidWord free_reduce(const BraidWord& w);

// Whitespace separated nonzero integers. The token "e" denotes the empty
// word and may appear alone.
BraidWord parse_word(std::string_view text, int n);

// Inverse of parse_word for non-empty words; the empty word prints as "e".
std::string format_word(const BraidWord& w);
std::string format_letters(const std::vector<int>& letters);

}  // namespace braid
