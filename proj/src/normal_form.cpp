#include "braid/normal_form.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

namespace braid {

NormalForm NormalForm::identity(int n) {
  check_strands(n);
  NormalForm x;
  x.n_ = n;
  return x;
}

NormalForm NormalForm::delta_power(int n, int p) {
  NormalForm x = identity(n);
  if (n > 1) x.inf_ = p;
  return x;
}

NormalForm NormalForm::from_simple(const SimpleBraid& s) {
  NormalForm x = identity(s.strands());
  x.multiply_simple(s);
  return x;
}

NormalForm NormalForm::generator(int n, int letter) {
  NormalForm x = identity(n);
  validate(BraidWord{n, {letter}});
  x.multiply_letter(letter);
  return x;
}

NormalForm NormalForm::from_word(const BraidWord& w) {
  validate(w);
  NormalForm x = identity(w.n);
  for (int letter : w.letters) x.multiply_letter(letter);
  return x;
}

void NormalForm::multiply_delta(int k) {
  if (n_ == 1 || k == 0) return;
  inf_ += k;
  if (k % 2 != 0) {
    for (auto& f : factors_) f = f.tau();
  }
}

void NormalForm::multiply_simple(const SimpleBraid& s) {
  if (s.strands() != n_) throw StrandMismatch("simple factor has wrong strand count");
  if (s.is_identity()) return;
  if (s.is_delta()) {
    multiply_delta(1);
    return;
  }
  factors_.push_back(s);
  // One right-to-left sweep restores left-weightedness.
  for (int j = static_cast<int>(factors_.size()) - 2; j >= 0; --j) {
    const SimpleBraid& a = factors_[j];
    const SimpleBraid& b = factors_[j + 1];
    if (left_weighted(a, b)) break;
    SimpleBraid c = meet(a.right_complement(), b);
    SimpleBraid new_a = compose(a, c);
    SimpleBraid new_b = left_quotient(c, b);
    factors_[j] = new_a;
    factors_[j + 1] = new_b;
  }
  normalize_ends();
}

void NormalForm::normalize_ends() {
  std::size_t lead = 0;
  while (lead < factors_.size() && factors_[lead].is_delta()) ++lead;
  if (lead > 0) {
    inf_ += static_cast<int>(lead);
    factors_.erase(factors_.begin(), factors_.begin() + static_cast<long>(lead));
  }
  while (!factors_.empty() && factors_.back().is_identity()) factors_.pop_back();
}

void NormalForm::multiply_letter(int letter) {
  if (letter > 0) {
    multiply_simple(SimpleBraid::generator(n_, letter));
  } else {
    multiply_delta(-1);
    multiply_simple(SimpleBraid::generator(n_, -letter).left_complement());
  }
}

void require_same_strands(const NormalForm& a, const NormalForm& b) {
  if (a.strands() != b.strands()) {
    throw StrandMismatch("braids on " + std::to_string(a.strands()) + " and " +
                         std::to_string(b.strands()) + " strands");
  }
}

NormalForm NormalForm::operator*(const NormalForm& rhs) const {
  require_same_strands(*this, rhs);
  NormalForm out = *this;
  out.multiply_delta(rhs.inf_);
  for (const auto& f : rhs.factors_) out.multiply_simple(f);
  return out;
}

NormalForm NormalForm::inverse() const {
  // A^-1 = Delta^-1 (Delta A^-1), so the inverse is assembled from left
  // complements read backwards.
  NormalForm out = identity(n_);
  for (auto it = factors_.rbegin(); it != factors_.rend(); ++it) {
    out.multiply_delta(-1);
    out.multiply_simple(it->left_complement());
  }
  out.multiply_delta(-inf_);
  return out;
}

NormalForm NormalForm::power(int k) const {
  NormalForm base = k >= 0 ? *this : inverse();
  NormalForm out = identity(n_);
  for (int i = 0; i < std::abs(k); ++i) out = out * base;
  return out;
}

BraidWord NormalForm::to_word() const {
  BraidWord w;
  w.n = n_;
  if (inf_ != 0) {
    const auto delta_word = SimpleBraid::delta(n_).word();
    for (int i = 0; i < std::abs(inf_); ++i) {
      if (inf_ > 0) {
        w.letters.insert(w.letters.end(), delta_word.begin(), delta_word.end());
      } else {
        for (auto it = delta_word.rbegin(); it != delta_word.rend(); ++it) w.letters.push_back(-*it);
      }
    }
  }
  for (const auto& f : factors_) {
    auto fw = f.word();
    w.letters.insert(w.letters.end(), fw.begin(), fw.end());
  }
  return w;
}

std::string NormalForm::to_string() const {
  std::ostringstream out;
  out << "D^" << inf_ << " |";
  for (std::size_t j = 0; j < factors_.size(); ++j) {
    if (j) out << " |";
    out << ' ' << format_letters(factors_[j].word());
  }
  return out.str();
}

std::strong_ordering operator<=>(const NormalForm& a, const NormalForm& b) {
  if (auto c = a.n_ <=> b.n_; c != 0) return c;
  if (auto c = a.inf_ <=> b.inf_; c != 0) return c;
  if (auto c = a.factors_.size() <=> b.factors_.size(); c != 0) return c;
  for (std::size_t i = 0; i < a.factors_.size(); ++i) {
    if (auto c = a.factors_[i] <=> b.factors_[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

std::size_t NormalForm::hash() const {
  std::size_t h = static_cast<std::size_t>(n_) * 1000003u + static_cast<std::size_t>(inf_ + 7919);
  for (const auto& f : factors_) h = h * 0x9e3779b97f4a7c15ull + f.hash();
  return h;
}

NormalForm conjugate(const NormalForm& x, const NormalForm& z) {
  require_same_strands(x, z);
  return z.inverse() * x * z;
}

NormalForm conjugate(const NormalForm& x, const SimpleBraid& s) {
  if (s.is_identity()) return x;
  NormalForm out = NormalForm::identity(x.strands());
  out.multiply_delta(-1);
  out.multiply_simple(s.left_complement());
  out = out * x;
  out.multiply_simple(s);
  return out;
}

bool commutes(const NormalForm& a, const NormalForm& b) { return a * b == b * a; }

SimpleBraid cycling_conjugator(const NormalForm& x) {
  if (x.factors().empty()) return SimpleBraid::identity(x.strands());
  SimpleBraid first = x.factors().front();
  // tau has order two.
  return (x.inf() % 2 != 0) ? first.tau() : first;
}

NormalForm decycling_conjugator(const NormalForm& x) {
  if (x.factors().empty()) return NormalForm::identity(x.strands());
  return NormalForm::from_simple(x.factors().back()).inverse();
}

NormalForm cycle(const NormalForm& x) { return conjugate(x, cycling_conjugator(x)); }

NormalForm decycle(const NormalForm& x) { return conjugate(x, decycling_conjugator(x)); }

namespace {

SimpleBraid head(const NormalForm& x) {
  if (x.inf() > 0) return SimpleBraid::delta(x.strands());
  if (x.factors().empty()) return SimpleBraid::identity(x.strands());
  return x.factors().front();
}

NormalForm strip_left(const SimpleBraid& s, const NormalForm& x) {
  return NormalForm::from_simple(s).inverse() * x;
}

}  // namespace

NormalForm left_gcd_positive(const NormalForm& a, const NormalForm& b) {
  require_same_strands(a, b);
  if (!a.is_positive() || !b.is_positive()) {
    throw RangeError("left_gcd_positive requires positive braids");
  }
  NormalForm g = NormalForm::identity(a.strands());
  NormalForm ra = a;
  NormalForm rb = b;
  // gcd(a, b) and Delta meet in head(a) ^ head(b); peel it off and repeat.
  while (true) {
    SimpleBraid s = meet(head(ra), head(rb));
    if (s.is_identity()) break;
    g.multiply_simple(s);
    ra = strip_left(s, ra);
    rb = strip_left(s, rb);
  }
  return g;
}

FractionalForm fractional_form(const NormalForm& x) {
  const int n = x.strands();
  if (x.inf() >= 0) return {NormalForm::identity(n), x};
  NormalForm a = NormalForm::delta_power(n, -x.inf());
  NormalForm b = NormalForm::identity(n);
  for (const auto& f : x.factors()) b.multiply_simple(f);
  NormalForm g = left_gcd_positive(a, b);
  NormalForm g_inv = g.inverse();
  return {g_inv * a, g_inv * b};
}

bool positive_supported_in(const NormalForm& x, GeneratorMask support) {
  const int n = x.strands();
  std::vector<int> block(n, 0);
  for (int i = 1; i < n; ++i) block[i] = block[i - 1] + ((support & (1u << (i - 1))) ? 0 : 1);
  auto preserves = [&](const SimpleBraid& s) {
    for (int p = 0; p < n; ++p) {
      if (block[s.image(p)] != block[p]) return false;
    }
    return true;
  };
  if (x.inf() < 0) return false;
  if (x.inf() > 0 && !preserves(SimpleBraid::delta(n))) return false;
  return std::all_of(x.factors().begin(), x.factors().end(), preserves);
}

std::optional<BraidWord> parabolic_membership(const NormalForm& x, const std::vector<int>& support) {
  const int n = x.strands();
  GeneratorMask mask = 0;
  for (int i : support) {
    if (i < 1 || i > n - 1) {
      throw RangeError("support index " + std::to_string(i) + " invalid for B_" + std::to_string(n));
    }
    mask |= 1u << (i - 1);
  }
  FractionalForm frac = fractional_form(x);
  if (!positive_supported_in(frac.denominator, mask) || !positive_supported_in(frac.numerator, mask)) {
    return std::nullopt;
  }
  return frac.denominator.to_word().inverse() * frac.numerator.to_word();
}

std::vector<int> permutation(const NormalForm& x) {
  const int n = x.strands();
  std::vector<int> pos(n);
  for (int s = 0; s < n; ++s) pos[s] = (x.inf() % 2 != 0) ? n - 1 - s : s;
  for (const auto& f : x.factors()) {
    for (int s = 0; s < n; ++s) pos[s] = f.image(pos[s]);
  }
  for (int& p : pos) ++p;
  return pos;
}

std::vector<int> permutation(const BraidWord& w) {
  validate(w);
  std::vector<int> at(w.n);  // at[position] = strand
  for (int s = 0; s < w.n; ++s) at[s] = s;
  for (int letter : w.letters) {
    int i = std::abs(letter) - 1;
    std::swap(at[i], at[i + 1]);
  }
  std::vector<int> pos(w.n);
  for (int p = 0; p < w.n; ++p) pos[at[p]] = p + 1;
  return pos;
}

long exponent_sum(const NormalForm& x) {
  long n = x.strands();
  long total = static_cast<long>(x.inf()) * n * (n - 1) / 2;
  for (const auto& f : x.factors()) total += f.length();
  return total;
}

long exponent_sum(const BraidWord& w) {
  long total = 0;
  for (int letter : w.letters) total += letter > 0 ? 1 : -1;
  return total;
}

long pair_crossings(const BraidWord& w, int a, int b) {
  validate(w);
  if (a < 1 || b > w.n || a >= b) {
    throw RangeError("pair_crossings needs 1 <= a < b <= n");
  }
  std::vector<int> at(w.n);
  for (int s = 0; s < w.n; ++s) at[s] = s + 1;
  long count = 0;
  for (int letter : w.letters) {
    int i = std::abs(letter) - 1;
    int u = at[i];
    int v = at[i + 1];
    if ((u == a && v == b) || (u == b && v == a)) count += letter > 0 ? 1 : -1;
    std::swap(at[i], at[i + 1]);
  }
  return count;
}

long pair_crossings(const NormalForm& x, int a, int b) { return pair_crossings(x.to_word(), a, b); }

}  // namespace braid
