#include "braid/special.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <numeric>
#include <sstream>

namespace braid {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw RangeError(what);
}

void append(BraidWord& w, const BraidWord& tail) {
  w.letters.insert(w.letters.end(), tail.letters.begin(), tail.letters.end());
}

}  // namespace

BraidWord shift_word(const BraidWord& w, int k, int n) {
  validate(w);
  check_strands(n);
  require(k >= 0 && w.n + k <= n, "shift by " + std::to_string(k) + " leaves B_" + std::to_string(n));
  BraidWord out;
  out.n = n;
  out.letters.reserve(w.letters.size());
  for (int letter : w.letters) out.letters.push_back(letter > 0 ? letter + k : letter - k);
  return out;
}

NormalForm shift(const NormalForm& x, int k, int n) {
  return NormalForm::from_word(shift_word(x.to_word(), k, n));
}

BraidWord small_delta_word(int m, int n) {
  require(m >= 1 && m <= n, "delta_m needs 1 <= m <= n");
  BraidWord w;
  w.n = n;
  for (int i = m - 1; i >= 1; --i) w.letters.push_back(i);
  return w;
}

BraidWord tau_word(int p, int q, int n) {
  require(p >= 1 && q >= 1 && p + q <= n, "tau_{p,q} needs p, q >= 1 and p + q <= n");
  BraidWord w;
  w.n = n;
  const BraidWord d = small_delta_word(p + 1, n);
  for (int j = 0; j < q; ++j) {
    for (int letter : d.letters) w.letters.push_back(letter + j);
  }
  return w;
}

NormalForm tau_pq(int p, int q, int n) { return NormalForm::from_word(tau_word(p, q, n)); }

BraidWord bbar_word(int k, int l, int n) {
  require(k >= 1 && l >= 1 && k + l <= n, "bbar needs k, l >= 1 and k + l <= n");
  BraidWord w = tau_word(k, l, n);
  append(w, tau_word(l, k, n));
  return w;
}

NormalForm bbar(int k, int l, int n) { return NormalForm::from_word(bbar_word(k, l, n)); }

BraidWord twist_word(int a, int b, int e, int n) {
  check_strands(n);
  require(1 <= a && a <= b && b <= n, "twist needs a strand interval inside [1, n]");
  BraidWord half;
  half.n = n;
  for (int letter : SimpleBraid::delta(b - a + 1).word()) half.letters.push_back(letter + a - 1);
  BraidWord w;
  w.n = n;
  const BraidWord piece = e >= 0 ? half : half.inverse();
  for (int i = 0; i < std::abs(e); ++i) append(w, piece);
  return w;
}

NormalForm twist(int a, int b, int e, int n) { return NormalForm::from_word(twist_word(a, b, e, n)); }

NormalForm cable(const BraidWord& x, const std::vector<int>& widths) {
  validate(x);
  if (static_cast<int>(widths.size()) != x.n) {
    throw StrandMismatch("cable needs one width per strand");
  }
  for (int w : widths) require(w >= 1, "cable widths must be positive");
  const int n = std::accumulate(widths.begin(), widths.end(), 0);
  check_strands(n);
  const auto perm = permutation(x);
  for (int j = 0; j < x.n; ++j) {
    if (widths[perm[j] - 1] != widths[j]) {
      throw RangeError("braid permutation does not preserve the cable widths");
    }
  }
  std::vector<int> at = widths;  // width of the bundle currently at each position
  BraidWord out;
  out.n = n;
  for (int letter : x.letters) {
    const int j = std::abs(letter) - 1;
    const int offset = std::accumulate(at.begin(), at.begin() + j, 0);
    const int a = at[j];
    const int b = at[j + 1];
    if (letter > 0) {
      append(out, shift_word(tau_word(a, b, a + b), offset, n));
    } else {
      append(out, shift_word(tau_word(b, a, a + b), offset, n).inverse());
    }
    std::swap(at[j], at[j + 1]);
  }
  return NormalForm::from_word(out);
}

NormalForm parabolic_transport(int k, int m, int n) {
  check_strands(n);
  require(1 <= k && k < m && m <= n, "transport needs 1 <= k < m <= n");
  if (k == 1) return NormalForm::identity(n);
  const int w = m - k + 1;
  const NormalForm t = tau_pq(w, k - 1, n);
  for (const NormalForm& cand : {t, t.inverse()}) {
    bool ok = true;
    for (int i = 1; i < w && ok; ++i) {
      ok = conjugate(NormalForm::generator(n, i), cand) == NormalForm::generator(n, k - 1 + i);
    }
    if (ok) return cand;
  }
  throw BraidError("no orientation of tau transports B_" + std::to_string(w) + " onto [" +
                   std::to_string(k) + "," + std::to_string(m) + "]");
}

ParabolicDescriptor::ParabolicDescriptor(int n, std::vector<int> support, bool allow_empty)
    : n_(n), support_(std::move(support)) {
  check_strands(n);
  std::sort(support_.begin(), support_.end());
  support_.erase(std::unique(support_.begin(), support_.end()), support_.end());
  if (support_.empty() && !allow_empty) throw RangeError("parabolic support must be non-empty");
  for (int i : support_) {
    require(i >= 1 && i <= n - 1, "support index " + std::to_string(i) + " invalid for B_" + std::to_string(n));
    mask_ |= 1u << (i - 1);
  }
  for (int s = 1; s <= n;) {
    StrandUnit u{s, 1};
    while (s <= n - 1 && (mask_ & (1u << (s - 1)))) {
      ++u.width;
      ++s;
    }
    units_.push_back(u);
    ++s;
  }
}

std::vector<StrandUnit> ParabolicDescriptor::blocks() const {
  std::vector<StrandUnit> out;
  for (const auto& u : units_) {
    if (u.width >= 2) out.push_back(u);
  }
  return out;
}

std::vector<int> ParabolicDescriptor::widths() const {
  std::vector<int> out;
  for (const auto& u : units_) out.push_back(u.width);
  return out;
}

int ParabolicDescriptor::block_count() const { return static_cast<int>(blocks().size()); }

int ParabolicDescriptor::block_strands() const {
  int r = 0;
  for (const auto& b : blocks()) r += b.width;
  return r;
}

std::vector<NormalForm> ParabolicDescriptor::generators() const {
  std::vector<NormalForm> out;
  for (int i : support_) out.push_back(NormalForm::generator(n_, i));
  return out;
}

bool ParabolicDescriptor::contains(const NormalForm& x) const {
  if (x.strands() != n_) throw StrandMismatch("membership test on wrong strand count");
  return parabolic_membership(x, support_).has_value();
}

std::string ParabolicDescriptor::to_string() const { return format_support(support_); }

ConjugatedParabolic::ConjugatedParabolic(ParabolicDescriptor d)
    : descriptor(std::move(d)), gamma(NormalForm::identity(descriptor.strands())) {}

ConjugatedParabolic::ConjugatedParabolic(ParabolicDescriptor d, NormalForm g)
    : descriptor(std::move(d)), gamma(std::move(g)) {
  if (gamma.strands() != descriptor.strands()) throw StrandMismatch("gamma has wrong strand count");
}

NormalForm ConjugatedParabolic::to_actual(const NormalForm& g) const {
  if (standard()) return g;
  return gamma * g * gamma.inverse();
}

NormalForm ConjugatedParabolic::to_standard(const NormalForm& g) const {
  if (standard()) return g;
  return conjugate(g, gamma);
}

std::vector<NormalForm> ConjugatedParabolic::generators() const {
  std::vector<NormalForm> out;
  for (const auto& g : descriptor.generators()) out.push_back(to_actual(g));
  return out;
}

bool ConjugatedParabolic::contains(const NormalForm& x) const { return descriptor.contains(to_standard(x)); }

std::vector<int> parse_support(std::string_view text, int n) {
  std::vector<int> out;
  std::istringstream in{std::string(text)};
  std::string token;
  while (in >> token) {
    if (token == "e") continue;
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size()) {
      throw MalformedWord("cannot parse support index '" + token + "'");
    }
    if (value < 1 || value > n - 1) {
      throw RangeError("support index " + token + " invalid for B_" + std::to_string(n));
    }
    out.push_back(value);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::string format_support(const std::vector<int>& support) { return format_letters(support); }

}  // namespace braid
