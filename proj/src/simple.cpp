#include "braid/simple.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace braid {

namespace {

using Rows = std::array<std::uint32_t, kMaxStrands>;

// rows[s] has bit t (t > s) iff strands s and t cross.
Rows inversions(const SimpleBraid& a) {
  Rows rows{};
  const int n = a.strands();
  for (int s = 0; s < n; ++s) {
    for (int t = s + 1; t < n; ++t) {
      if (a.image(s) > a.image(t)) rows[s] |= 1u << t;
    }
  }
  return rows;
}

std::uint32_t above(int s, int n) {
  std::uint32_t all = (n >= 32) ? ~0u : ((1u << n) - 1);
  return all & ~((2u << s) - 1);
}

void transitive_close(Rows& rows, int n) {
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < n; ++i) {
      if (rows[i] & (1u << k)) rows[i] |= rows[k];
    }
  }
}

Rows complement(const Rows& rows, int n) {
  Rows out{};
  for (int s = 0; s < n; ++s) out[s] = above(s, n) & ~rows[s];
  return out;
}

std::vector<int> images_from_inversions(const Rows& rows, int n) {
  std::vector<int> img(n, 0);
  for (int s = 0; s < n; ++s) {
    int before = 0;
    for (int t = 0; t < s; ++t) {
      if (!(rows[t] & (1u << s))) ++before;
    }
    before += std::popcount(rows[s]);
    img[s] = before;
  }
  return img;
}

}  // namespace

SimpleBraid::SimpleBraid(int n, const std::array<std::uint8_t, kMaxStrands>& img)
    : n_(static_cast<std::uint8_t>(n)), img_(img) {
  for (int s = 0; s < n; ++s) pre_[img_[s]] = static_cast<std::uint8_t>(s);
}

SimpleBraid SimpleBraid::identity(int n) {
  check_strands(n);
  std::array<std::uint8_t, kMaxStrands> img{};
  for (int s = 0; s < n; ++s) img[s] = static_cast<std::uint8_t>(s);
  return SimpleBraid(n, img);
}

SimpleBraid SimpleBraid::delta(int n) {
  check_strands(n);
  std::array<std::uint8_t, kMaxStrands> img{};
  for (int s = 0; s < n; ++s) img[s] = static_cast<std::uint8_t>(n - 1 - s);
  return SimpleBraid(n, img);
}

SimpleBraid SimpleBraid::generator(int n, int i) {
  check_strands(n);
  if (i < 1 || i > n - 1) {
    throw MalformedWord("generator sigma_" + std::to_string(i) + " invalid for B_" +
                        std::to_string(n));
  }
  SimpleBraid a = identity(n);
  std::swap(a.img_[i - 1], a.img_[i]);
  std::swap(a.pre_[i - 1], a.pre_[i]);
  return a;
}

SimpleBraid SimpleBraid::from_images(std::span<const int> images) {
  const int n = static_cast<int>(images.size());
  check_strands(n);
  std::array<std::uint8_t, kMaxStrands> img{};
  std::uint32_t seen = 0;
  for (int s = 0; s < n; ++s) {
    if (images[s] < 0 || images[s] >= n || (seen & (1u << images[s]))) {
      throw RangeError("image table is not a permutation");
    }
    seen |= 1u << images[s];
    img[s] = static_cast<std::uint8_t>(images[s]);
  }
  return SimpleBraid(n, img);
}

bool SimpleBraid::is_identity() const {
  for (int s = 0; s < n_; ++s) {
    if (img_[s] != s) return false;
  }
  return true;
}

bool SimpleBraid::is_delta() const {
  for (int s = 0; s < n_; ++s) {
    if (img_[s] != n_ - 1 - s) return false;
  }
  return true;
}

int SimpleBraid::length() const {
  int count = 0;
  for (int s = 0; s < n_; ++s) {
    for (int t = s + 1; t < n_; ++t) {
      if (img_[s] > img_[t]) ++count;
    }
  }
  return count;
}

GeneratorMask SimpleBraid::starting_set() const {
  GeneratorMask mask = 0;
  for (int i = 0; i + 1 < n_; ++i) {
    if (img_[i] > img_[i + 1]) mask |= 1u << i;
  }
  return mask;
}

GeneratorMask SimpleBraid::finishing_set() const {
  GeneratorMask mask = 0;
  for (int i = 0; i + 1 < n_; ++i) {
    if (pre_[i] > pre_[i + 1]) mask |= 1u << i;
  }
  return mask;
}

SimpleBraid SimpleBraid::tau() const {
  std::array<std::uint8_t, kMaxStrands> img{};
  for (int s = 0; s < n_; ++s) img[s] = static_cast<std::uint8_t>(n_ - 1 - img_[n_ - 1 - s]);
  return SimpleBraid(n_, img);
}

SimpleBraid SimpleBraid::right_complement() const {
  std::array<std::uint8_t, kMaxStrands> img{};
  for (int s = 0; s < n_; ++s) img[s] = static_cast<std::uint8_t>(n_ - 1 - pre_[s]);
  return SimpleBraid(n_, img);
}

SimpleBraid SimpleBraid::left_complement() const {
  std::array<std::uint8_t, kMaxStrands> img{};
  for (int s = 0; s < n_; ++s) img[s] = pre_[n_ - 1 - s];
  return SimpleBraid(n_, img);
}

SimpleBraid SimpleBraid::reversed() const { return SimpleBraid(n_, pre_); }

std::vector<int> SimpleBraid::word() const {
  std::vector<int> out;
  SimpleBraid rest = *this;
  while (!rest.is_identity()) {
    int i = std::countr_zero(rest.starting_set()) + 1;
    out.push_back(i);
    rest = left_quotient(generator(n_, i), rest);
  }
  return out;
}

SimpleBraid compose(const SimpleBraid& a, const SimpleBraid& b) {
  std::array<std::uint8_t, kMaxStrands> img{};
  for (int s = 0; s < a.n_; ++s) img[s] = b.img_[a.img_[s]];
  return SimpleBraid(a.n_, img);
}

SimpleBraid left_quotient(const SimpleBraid& a, const SimpleBraid& b) {
  std::array<std::uint8_t, kMaxStrands> img{};
  for (int s = 0; s < a.n_; ++s) img[s] = b.img_[a.pre_[s]];
  return SimpleBraid(a.n_, img);
}

std::size_t SimpleBraid::hash() const {
  std::size_t h = n_;
  for (int s = 0; s < n_; ++s) h = h * 31 + img_[s];
  return h;
}

SimpleBraid meet(const SimpleBraid& a, const SimpleBraid& b) {
  if (a.strands() != b.strands()) throw StrandMismatch("meet of simple braids");
  const int n = a.strands();
  // Left divisibility of permutation braids is inclusion of inversion sets,
  // and joins are transitive closures of unions. Meets are dual to joins
  // under complementation.
  Rows ca = complement(inversions(a), n);
  Rows cb = complement(inversions(b), n);
  for (int s = 0; s < n; ++s) ca[s] |= cb[s];
  transitive_close(ca, n);
  auto img = images_from_inversions(complement(ca, n), n);
  return SimpleBraid::from_images(img);
}

SimpleBraid join(const SimpleBraid& a, const SimpleBraid& b) {
  if (a.strands() != b.strands()) throw StrandMismatch("join of simple braids");
  const int n = a.strands();
  Rows ra = inversions(a);
  Rows rb = inversions(b);
  for (int s = 0; s < n; ++s) ra[s] |= rb[s];
  transitive_close(ra, n);
  auto img = images_from_inversions(ra, n);
  return SimpleBraid::from_images(img);
}

bool left_divides(const SimpleBraid& a, const SimpleBraid& b) {
  Rows ra = inversions(a);
  Rows rb = inversions(b);
  for (int s = 0; s < a.strands(); ++s) {
    if (ra[s] & ~rb[s]) return false;
  }
  return true;
}

bool left_weighted(const SimpleBraid& a, const SimpleBraid& b) {
  return (b.starting_set() & ~a.finishing_set()) == 0;
}

std::vector<SimpleBraid> all_simple_braids(int n) {
  check_strands(n);
  if (n > 9) throw ResourceGuardExceeded("refusing to enumerate n! simple braids for n > 9");
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<SimpleBraid> out;
  do {
    out.push_back(SimpleBraid::from_images(perm));
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::stable_sort(out.begin(), out.end(), [](const SimpleBraid& x, const SimpleBraid& y) {
    return x.length() < y.length();
  });
  return out;
}

}  // namespace braid
