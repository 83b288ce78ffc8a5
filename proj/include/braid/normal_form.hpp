#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "braid/simple.hpp"
#include "braid/word.hpp"

namespace braid {

/// Left normal form Delta^inf * A_1 * ... * A_l of a braid.
///
/// The factors are simple braids different from the identity and from Delta,
/// and every adjacent pair is left-weighted. Two braids are equal iff their
/// normal forms are identical, so equality here is equality in B_n.
///
/// Conventions used throughout the library: words act left to right, and
/// conjugation of x by z means z^-1 x z.
class NormalForm {
 public:
  NormalForm() = default;

  static NormalForm identity(int n);
  static NormalForm delta_power(int n, int p);
  static NormalForm from_simple(const SimpleBraid& s);
  static NormalForm generator(int n, int letter);
  static NormalForm from_word(const BraidWord& w);
  static NormalForm from_word(int n, std::initializer_list<int> letters) {
    return from_word(BraidWord(n, std::vector<int>(letters)));
  }

  int strands() const { return n_; }
  int inf() const { return inf_; }
  int sup() const { return inf_ + static_cast<int>(factors_.size()); }
  int canonical_length() const { return static_cast<int>(factors_.size()); }
  const std::vector<SimpleBraid>& factors() const { return factors_; }

  bool is_identity() const { return inf_ == 0 && factors_.empty(); }
  bool is_positive() const { return inf_ >= 0; }

  // Right multiplication in place.
  void multiply_simple(const SimpleBraid& s);
  void multiply_delta(int k);
  void multiply_letter(int letter);

  NormalForm operator*(const NormalForm& rhs) const;
  NormalForm inverse() const;
  NormalForm power(int k) const;

  // A representing word: the Delta power followed by each factor's
  // lexicographically smallest positive word.
  BraidWord to_word() const;
  // "D^p | w1 | w2 | ...".
  std::string to_string() const;

  friend bool operator==(const NormalForm&, const NormalForm&) = default;
  friend std::strong_ordering operator<=>(const NormalForm& a, const NormalForm& b);

  std::size_t hash() const;

 private:
  void normalize_ends();

  int n_ = 1;
  int inf_ = 0;
  std::vector<SimpleBraid> factors_;
};

struct NormalFormHash {
  std::size_t operator()(const NormalForm& x) const { return x.hash(); }
};

void require_same_strands(const NormalForm& a, const NormalForm& b);

// z^-1 x z.
NormalForm conjugate(const NormalForm& x, const NormalForm& z);
NormalForm conjugate(const NormalForm& x, const SimpleBraid& s);
bool commutes(const NormalForm& a, const NormalForm& b);

// Conjugator used by one cycling step: tau^-inf(A_1). Identity if l = 0.
SimpleBraid cycling_conjugator(const NormalForm& x);
// Conjugator used by one decycling step: A_l^-1. Identity if l = 0.
NormalForm decycling_conjugator(const NormalForm& x);
NormalForm cycle(const NormalForm& x);
NormalForm decycle(const NormalForm& x);

// Greatest common left divisor of two positive braids.
NormalForm left_gcd_positive(const NormalForm& a, const NormalForm& b);

struct FractionalForm {
  NormalForm denominator;  // a
  NormalForm numerator;    // b, with x = a^-1 b
};
// x = a^-1 b with a, b positive and left-coprime.
FractionalForm fractional_form(const NormalForm& x);

// Membership in the standard parabolic subgroup generated by sigma_i, i in
// support. On success returns a word in those generators representing x.
std::optional<BraidWord> parabolic_membership(const NormalForm& x, const std::vector<int>& support);
// Positive-braid test used by parabolic_membership.
bool positive_supported_in(const NormalForm& x, GeneratorMask support);

// nu(x): entry a-1 is the final position (1-based) of the strand starting at a.
std::vector<int> permutation(const NormalForm& x);
std::vector<int> permutation(const BraidWord& w);
long exponent_sum(const NormalForm& x);
long exponent_sum(const BraidWord& w);

// Signed number of crossings between the strands starting at positions a < b.
long pair_crossings(const BraidWord& w, int a, int b);
long pair_crossings(const NormalForm& x, int a, int b);

}  // namespace braid

template <>
struct std::hash<braid::NormalForm> {
  std::size_t operator()(const braid::NormalForm& x) const { return x.hash(); }
};
