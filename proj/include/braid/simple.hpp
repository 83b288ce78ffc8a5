#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <vector>

#include "braid/word.hpp"

namespace braid {

// Bit i-1 set means sigma_i belongs to the set.
using GeneratorMask = std::uint32_t;

/// A permutation braid (simple element of the classical Garside structure).
///
/// Stored as the image table of its permutation: the strand starting at
/// position s (0-based) ends at position image(s). Two strands cross at most
/// once, and they cross exactly when their relative order is reversed, so the
/// table determines the braid.
class SimpleBraid {
 public:
  SimpleBraid() : SimpleBraid(identity(1)) {}

  static SimpleBraid identity(int n);
  static SimpleBraid delta(int n);
  static SimpleBraid generator(int n, int i);
  // Images are 0-based; throws RangeError if not a bijection.
  static SimpleBraid from_images(std::span<const int> images);

  int strands() const { return n_; }
  int image(int s) const { return img_[s]; }
  int preimage(int p) const { return pre_[p]; }

  bool is_identity() const;
  bool is_delta() const;
  // Number of crossings, i.e. the length of any positive word for it.
  int length() const;

  // S(A): generators that left-divide A.
  GeneratorMask starting_set() const;
  // F(A): generators that right-divide A.
  GeneratorMask finishing_set() const;

  // Delta^-1 A Delta.
  SimpleBraid tau() const;
  // A^-1 Delta.
  SimpleBraid right_complement() const;
  // Delta A^-1.
  SimpleBraid left_complement() const;
  // The simple braid read backwards (the inverse permutation).
  SimpleBraid reversed() const;

  // Lexicographically smallest positive word.
  std::vector<int> word() const;

  // Product of two simple braids whose product is known to be simple.
  friend SimpleBraid compose(const SimpleBraid& a, const SimpleBraid& b);
  // a^-1 b, for a left divisor a of b.
  friend SimpleBraid left_quotient(const SimpleBraid& a, const SimpleBraid& b);

  friend bool operator==(const SimpleBraid& a, const SimpleBraid& b) {
    return a.n_ == b.n_ && a.img_ == b.img_;
  }
  friend std::strong_ordering operator<=>(const SimpleBraid& a, const SimpleBraid& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    return a.img_ <=> b.img_;
  }

  std::size_t hash() const;

 private:
  SimpleBraid(int n, const std::array<std::uint8_t, kMaxStrands>& img);

  std::uint8_t n_ = 1;
  std::array<std::uint8_t, kMaxStrands> img_{};
  std::array<std::uint8_t, kMaxStrands> pre_{};
};

// Greatest common left divisor of two simple braids.
SimpleBraid meet(const SimpleBraid& a, const SimpleBraid& b);
// Least common right multiple of two simple braids (always simple).
SimpleBraid join(const SimpleBraid& a, const SimpleBraid& b);
// True iff a is a left divisor of b.
bool left_divides(const SimpleBraid& a, const SimpleBraid& b);
// True iff the pair (a, b) is left-weighted: F(a) contains S(b).
bool left_weighted(const SimpleBraid& a, const SimpleBraid& b);

// All n! simple braids of B_n, ordered by length and then by image table.
std::vector<SimpleBraid> all_simple_braids(int n);

}  // namespace braid
