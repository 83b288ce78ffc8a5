#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "braid/normal_form.hpp"

namespace braid {

// sigma_i -> sigma_{i+k}, viewing a braid on m strands as one on n >= m + k.
BraidWord shift_word(const BraidWord& w, int k, int n);
NormalForm shift(const NormalForm& x, int k, int n);

// delta_m = sigma_{m-1} ... sigma_1 on the first m strands of B_n.
BraidWord small_delta_word(int m, int n);

// Strands p+1..p+q cross over strands 1..p; positive word of length p*q.
BraidWord tau_word(int p, int q, int n);
NormalForm tau_pq(int p, int q, int n);

// tau_{k,l} tau_{l,k}: strands k+1..k+l travel around strands 1..k and
// come back. With l = 1 this is the single strand k+1 orbiting the block.
BraidWord bbar_word(int k, int l, int n);
NormalForm bbar(int k, int l, int n);

// Delta^e of the half twist on strands a..b.
BraidWord twist_word(int a, int b, int e, int n);
NormalForm twist(int a, int b, int e, int n);

// Replaces strand j of x by a bundle of widths[j] parallel strands. The
// permutation of x must carry the width vector to itself.
NormalForm cable(const BraidWord& x, const std::vector<int>& widths);

// t with t^-1 sigma_i t = sigma_{k-1+i} for 1 <= i <= m-k, so that
// t^-1 B_{m-k+1} t = B_{[k,m]}.
NormalForm parabolic_transport(int k, int m, int n);

/// Maximal run of consecutive strands moved together by a standard parabolic.
/// Width 1 units are the strands no generator touches.
struct StrandUnit {
  int first = 1;  // 1-based strand index
  int width = 1;
};

/// A standard parabolic subgroup of B_n given by its generator indices.
class ParabolicDescriptor {
 public:
  ParabolicDescriptor() = default;
  // Support may be empty only when allow_empty is set (the trivial group).
  ParabolicDescriptor(int n, std::vector<int> support, bool allow_empty = false);

  int strands() const { return n_; }
  const std::vector<int>& support() const { return support_; }
  GeneratorMask mask() const { return mask_; }

  // Blocks and width-1 strands, left to right.
  const std::vector<StrandUnit>& units() const { return units_; }
  // Only the units of width >= 2.
  std::vector<StrandUnit> blocks() const;
  std::vector<int> widths() const;
  int block_count() const;
  // Sum of block widths.
  int block_strands() const;
  bool connected() const { return block_count() == 1; }
  bool is_whole_group() const { return static_cast<int>(support_.size()) == n_ - 1; }

  std::vector<NormalForm> generators() const;
  bool contains(const NormalForm& x) const;

  std::string to_string() const;

 private:
  int n_ = 1;
  std::vector<int> support_;
  GeneratorMask mask_ = 0;
  std::vector<StrandUnit> units_;
};

/// gamma * B_S * gamma^-1.
struct ConjugatedParabolic {
  ParabolicDescriptor descriptor;
  NormalForm gamma;

  ConjugatedParabolic() = default;
  explicit ConjugatedParabolic(ParabolicDescriptor d);
  ConjugatedParabolic(ParabolicDescriptor d, NormalForm g);

  int strands() const { return descriptor.strands(); }
  bool standard() const { return gamma.is_identity(); }

  // gamma g gamma^-1, mapping the standard subgroup onto this one.
  NormalForm to_actual(const NormalForm& g) const;
  // gamma^-1 g gamma.
  NormalForm to_standard(const NormalForm& g) const;

  std::vector<NormalForm> generators() const;
  bool contains(const NormalForm& x) const;
};

// "1 2 4" -> sorted, deduplicated support; "e" or empty -> empty support.
std::vector<int> parse_support(std::string_view text, int n);
std::string format_support(const std::vector<int>& support);

}  // namespace braid
