#include "braid/centralizers.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>
#include <unordered_set>

#include "braid/parallel.hpp"
#include "braid/subgroup.hpp"

namespace braid {

namespace {

std::string sigma_label(int i) { return "s" + std::to_string(i); }

std::string interval_label(const std::string& name, int a, int b) {
  return name + "[" + std::to_string(a) + "," + std::to_string(b) + "]";
}

void add_sigmas(GeneratorSet& set, int from, int to, const std::string& provenance) {
  for (int i = from; i <= to; ++i) set.add(sigma_label(i), provenance, NormalForm::generator(set.n, i));
}

std::string params(std::initializer_list<std::pair<const char*, int>> values) {
  std::ostringstream out;
  bool first = true;
  for (const auto& [name, value] : values) {
    if (!first) out << ' ';
    first = false;
    out << name << '=' << value;
  }
  return out.str();
}

// sigma_{j-1} .. sigma_{i+1} (inner) sigma_{i+1}^-1 .. sigma_{j-1}^-1.
BraidWord conjugated_by_ladder(int m, int i, int j, const std::vector<int>& inner) {
  BraidWord w;
  w.n = m;
  for (int t = j - 1; t > i; --t) w.letters.push_back(t);
  w.letters.insert(w.letters.end(), inner.begin(), inner.end());
  for (int t = i + 1; t < j; ++t) w.letters.push_back(-t);
  return w;
}

}  // namespace

void GeneratorSet::add(std::string label, std::string provenance, NormalForm value) {
  if (value.strands() != n) throw StrandMismatch("generator " + label + " has wrong strand count");
  for (const auto& e : elements) {
    if (e.label == label) throw BraidError("duplicate generator label " + label);
  }
  elements.push_back({std::move(label), std::move(provenance), std::move(value)});
}

std::vector<NormalForm> GeneratorSet::values() const {
  std::vector<NormalForm> out;
  for (const auto& e : elements) out.push_back(e.value);
  return out;
}

int central_twist_exponent(int r) { return r <= 2 ? 1 : 2; }

GeneratorSet twist_centralizer_generators(int n, int r, bool simplified) {
  check_strands(n);
  if (r < 1 || r > n - 1) throw RangeError("twist_centralizer_generators needs 1 <= r <= n-1");
  GeneratorSet set{n, {}};
  add_sigmas(set, 1, r - 1, "parabolic-generator");
  set.add(interval_label("bbar", r + 1, 1), "strand-orbit", bbar(r, 1, n));
  add_sigmas(set, r + 1, n - 1, "shifted-generator");
  if (!simplified) {
    for (int l = 2; r + l <= n; ++l) {
      set.add("bbar[" + std::to_string(r + 1) + "-" + std::to_string(r + l) + ",1]", "block-orbit", bbar(r, l, n));
    }
  }
  return set;
}

GeneratorSet block_centralizer_generators(int n, int r, BlockVariant variant) {
  check_strands(n);
  if (r < 1 || r >= n) throw RangeError("block_centralizer_generators needs 1 <= r < n");
  GeneratorSet set{n, {}};
  if (r >= 2) {
    const int e = central_twist_exponent(r);
    set.add("D" + std::to_string(r) + "^" + std::to_string(e), "block-center", twist(1, r, e, n));
  }
  if (variant == BlockVariant::Orbit) {
    set.add(interval_label("bbar", r + 1, 1), "strand-orbit", bbar(r, 1, n));
  } else {
    for (int j = r + 1; j <= n - 1; ++j) set.add("D" + std::to_string(j) + "^2", "full-twist", twist(1, j, 2, n));
  }
  add_sigmas(set, r + 1, n - 1, "shifted-generator");
  return set;
}

std::vector<LabeledWord> pure_on_generators(int m, const std::vector<int>& fixed) {
  check_strands(m);
  std::vector<bool> is_fixed(m + 1, false);
  for (int x : fixed) {
    if (x < 1 || x > m) throw RangeError("fixed position outside [1, m]");
    is_fixed[x] = true;
  }
  std::vector<LabeledWord> out;
  std::vector<int> free;
  for (int p = 1; p <= m; ++p) {
    if (!is_fixed[p]) free.push_back(p);
  }
  for (std::size_t t = 0; t + 1 < free.size(); ++t) {
    const int y = free[t];
    const int y2 = free[t + 1];
    std::string label = y2 == y + 1 ? sigma_label(y) : interval_label("a", y, y2);
    out.push_back({label, conjugated_by_ladder(m, y, y2, {y})});
  }
  for (int i = 1; i <= m; ++i) {
    for (int j = i + 1; j <= m; ++j) {
      bool straddles = false;
      for (int x = i + 1; x < j; ++x) straddles = straddles || is_fixed[x];
      if (is_fixed[i] || is_fixed[j] || straddles) {
        out.push_back({interval_label("A", i, j), conjugated_by_ladder(m, i, j, {i, i})});
      }
    }
  }
  return out;
}

GeneratorSet parabolic_centralizer_generators(const ParabolicDescriptor& h) {
  const int n = h.strands();
  GeneratorSet set{n, {}};
  const auto& units = h.units();
  std::vector<int> fixed;
  for (std::size_t u = 0; u < units.size(); ++u) {
    if (units[u].width < 2) continue;
    fixed.push_back(static_cast<int>(u) + 1);
    const int a = units[u].first;
    const int b = a + units[u].width - 1;
    const int e = central_twist_exponent(units[u].width);
    set.add(interval_label("D", a, b) + "^" + std::to_string(e), "block-center", twist(a, b, e, n));
  }
  const int m = static_cast<int>(units.size());
  const auto widths = h.widths();
  for (const auto& g : pure_on_generators(m, fixed)) {
    set.add("cable(" + g.label + ")", "cabled-pure-braid", cable(g.word, widths));
  }
  const auto hgens = h.generators();
  for (const auto& e : set.elements) {
    for (std::size_t i = 0; i < hgens.size(); ++i) {
      if (!commutes(e.value, hgens[i])) {
        throw BraidError("centralizer candidate " + e.label + " does not commute with sigma_" +
                         std::to_string(h.support()[i]));
      }
    }
  }
  return set;
}

GeneratorSet double_centralizer_generators(const ConjugatedParabolic& h) {
  const int n = h.strands();
  GeneratorSet set{n, {}};
  const auto gens = h.generators();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const int idx = h.descriptor.support()[i];
    set.add(h.standard() ? sigma_label(idx) : "g" + std::to_string(idx), "parabolic-generator", gens[i]);
  }
  set.add("D" + std::to_string(n) + "^2", "center", NormalForm::delta_power(n, 2));
  return set;
}

std::string format_check(const CheckResult& r) {
  std::string line = (r.pass ? "PASS " : "FAIL ") + r.id;
  if (!r.params.empty()) line += " " + r.params;
  return line;
}

bool all_pass(const std::vector<CheckResult>& results) {
  return std::all_of(results.begin(), results.end(), [](const CheckResult& r) { return r.pass; });
}

namespace {

struct PendingCheck {
  std::string id;
  std::string params;
  std::function<bool()> run;
};

// The simple braid Delta_{m} sitting on the first m strands of B_n.
SimpleBraid partial_delta(int m, int n) {
  std::vector<int> img(n);
  for (int s = 0; s < n; ++s) img[s] = s < m ? m - 1 - s : s;
  return SimpleBraid::from_images(img);
}

bool nf_pattern(int n, int q, bool mirrored) {
  const SimpleBraid d = partial_delta(n - 1, n);
  const SimpleBraid s = SimpleBraid::generator(n, n - 1);
  const NormalForm full = twist(1, n - 1, 2 * q, n);
  const NormalForm sigma = NormalForm::generator(n, n - 1);
  const NormalForm x = mirrored ? sigma * full : full * sigma;
  if (x.inf() != 0 || x.canonical_length() != 2 * q) return false;
  const auto& f = x.factors();
  const int special = mirrored ? 0 : 2 * q - 1;
  for (int j = 0; j < 2 * q; ++j) {
    const SimpleBraid want = j != special ? d : (mirrored ? compose(s, d) : compose(d, s));
    if (f[j] != want) return false;
  }
  return true;
}

}  // namespace

std::vector<CheckResult> verify_structural_identities(int n, int jobs) {
  check_strands(n);
  if (n < 3) throw RangeError("structural identities need n >= 3");
  std::vector<PendingCheck> checks;

  for (int r = 1; r < n; ++r) {
    for (int l = 2; r + l <= n; ++l) {
      checks.push_back({"twist-decomposition", params({{"n", n}, {"r", r}, {"l", l}}), [=] {
                          return twist(1, r + l, 2, n) ==
                                 bbar(r, l, n) * twist(1, r, 2, n) * twist(r + 1, r + l, 2, n);
                        }});
    }
  }
  for (int r = 1; r < n; ++r) {
    for (int l = 1; r + l <= n; ++l) {
      checks.push_back({"bbar-chain", params({{"n", n}, {"r", r}, {"l", l}}), [=] {
                          NormalForm product = twist(1, r, 2, n);
                          std::vector<NormalForm> factors;
                          for (int j = 1; j <= l; ++j) factors.push_back(bbar(r + j - 1, 1, n));
                          for (const auto& f : factors) product = product * f;
                          if (product != twist(1, r + l, 2, n)) return false;
                          for (std::size_t a = 0; a < factors.size(); ++a) {
                            for (std::size_t b = a + 1; b < factors.size(); ++b) {
                              if (!commutes(factors[a], factors[b])) return false;
                            }
                          }
                          return true;
                        }});
    }
  }
  for (int r = 1; r < n; ++r) {
    for (int l = 2; r + l <= n; ++l) {
      checks.push_back({"bbar-conjugation", params({{"n", n}, {"r", r}, {"l", l}}), [=] {
                          BraidWord up;
                          up.n = n;
                          for (int t = r + l - 1; t >= r + 1; --t) up.letters.push_back(t);
                          BraidWord down;
                          down.n = n;
                          for (int t = r + 1; t <= r + l - 1; ++t) down.letters.push_back(t);
                          NormalForm rhs = NormalForm::from_word(up) * bbar(r, 1, n) * NormalForm::from_word(down);
                          return bbar(r + l - 1, 1, n) == rhs;
                        }});
    }
  }
  for (int m = 2; m <= n; ++m) {
    checks.push_back({"bbar-full-twist", params({{"n", n}, {"m", m}}), [=] {
                        return bbar(m - 1, 1, n) == twist(1, m, 2, n) * twist(1, m - 1, -2, n);
                      }});
  }
  for (int q = 1; q <= 3; ++q) {
    checks.push_back({"nf-pattern", params({{"n", n}, {"q", q}}), [=] { return nf_pattern(n, q, false); }});
    checks.push_back({"nf-pattern-mirror", params({{"n", n}, {"q", q}}), [=] { return nf_pattern(n, q, true); }});
  }

  std::vector<CheckResult> results(checks.size());
  parallel_for(checks.size(), jobs, [&](std::size_t i) {
    results[i] = {checks[i].id, checks[i].params, checks[i].run(), ""};
  });
  return results;
}

std::vector<NormalForm> word_ball(int n, const std::vector<int>& generators, int max_length) {
  std::vector<NormalForm> out{NormalForm::identity(n)};
  std::unordered_set<NormalForm, NormalFormHash> seen{out.front()};
  std::size_t level_begin = 0;
  for (int len = 1; len <= max_length; ++len) {
    const std::size_t level_end = out.size();
    for (std::size_t k = level_begin; k < level_end; ++k) {
      for (int i : generators) {
        for (int letter : {i, -i}) {
          NormalForm y = out[k];
          y.multiply_letter(letter);
          if (seen.insert(y).second) out.push_back(std::move(y));
        }
      }
    }
    level_begin = level_end;
  }
  return out;
}

namespace {

std::string support_token(const std::vector<int>& support) {
  if (support.empty()) return "e";
  std::string out;
  for (int i : support) out += (out.empty() ? "" : ",") + std::to_string(i);
  return out;
}

std::vector<int> range_inclusive(int from, int to) {
  std::vector<int> out;
  for (int i = from; i <= to; ++i) out.push_back(i);
  return out;
}

bool commutes_with_all(const NormalForm& x, const std::vector<NormalForm>& gens) {
  return std::all_of(gens.begin(), gens.end(), [&](const NormalForm& g) { return commutes(x, g); });
}

std::vector<CheckResult> twist_intersection(int n, int r, int max_length) {
  if (r < 2 || r > n - 1) throw RangeError("twist intersection needs 2 <= r <= n-1");
  const std::string base = params({{"n", n}, {"r", r}});
  const NormalForm center = twist(1, r, 2, n);
  const std::vector<int> support = range_inclusive(1, r);  // B_{r+1}
  std::vector<CheckResult> out;

  // Superset: B_r, bbar_{r+1,1} and Delta_{r+1}^2 lie in both B_{r+1} and
  // C(Delta_r^2), and the two right-hand forms contain each other.
  {
    std::vector<NormalForm> rhs;
    for (int i = 1; i < r; ++i) rhs.push_back(NormalForm::generator(n, i));
    const NormalForm orbit = bbar(r, 1, n);
    const NormalForm full = twist(1, r + 1, 2, n);
    rhs.push_back(orbit);
    rhs.push_back(full);
    bool ok = true;
    for (const auto& g : rhs) ok = ok && parabolic_membership(g, support).has_value() && commutes(g, center);
    ok = ok && parabolic_membership(full * orbit.inverse(), range_inclusive(1, r - 1)).has_value();
    ok = ok && parabolic_membership(orbit * full.inverse(), range_inclusive(1, r - 1)).has_value();
    out.push_back({"twist-intersection-superset", base, ok, ""});
  }
  // Subset: every braid of B_{r+1} commuting with Delta_r^2 splits as
  // Delta_{r+1}^{2q} c with c in B_r. The split is computed inside B_{r+1}.
  {
    const ParabolicDescriptor br(r + 1, range_inclusive(1, r - 1));
    std::size_t tested = 0;
    bool ok = true;
    for (const auto& x : word_ball(n, support, max_length)) {
      if (!commutes(x, center)) continue;
      ++tested;
      BraidWord w = *parabolic_membership(x, support);
      w.n = r + 1;
      Extraction e = extract_conjugator(NormalForm::from_word(w), br);
      if (!e.ok) {
        ok = false;
        continue;
      }
      BraidWord cw = e.c.to_word();
      cw.n = n;
      ok = ok && twist(1, r + 1, 2 * e.p, n) * NormalForm::from_word(cw) == x;
    }
    out.push_back({"twist-intersection-subset", base + " L=" + std::to_string(max_length) + " tested=" + std::to_string(tested),
                   ok, ""});
  }
  return out;
}

std::vector<CheckResult> chain_intersection(int n, int K, int m, int max_length) {
  if (m < 1 || K < 1 || K > n - m) throw RangeError("chain intersection needs 1 <= K <= n-m");
  const std::string base = params({{"n", n}, {"K", K}, {"m", m}});
  std::vector<NormalForm> constraints;
  for (int k = 1; k <= K; ++k) {
    if (n - k >= 2) constraints.push_back(twist(1, n - k, 2, n));
    if (k >= 2) constraints.push_back(NormalForm::generator(n, n - k + 1));
  }
  const ParabolicDescriptor rhs_group(n, range_inclusive(1, n - K - 1), true);
  std::vector<CheckResult> out;
  {
    std::vector<NormalForm> rhs = rhs_group.generators();
    rhs.push_back(NormalForm::delta_power(n, 2));
    bool ok = std::all_of(rhs.begin(), rhs.end(), [&](const NormalForm& g) { return commutes_with_all(g, constraints); });
    out.push_back({"chain-intersection-superset", base, ok, ""});
  }
  {
    std::size_t tested = 0;
    bool ok = true;
    for (const auto& x : word_ball(n, range_inclusive(1, n - 1), max_length)) {
      if (!commutes_with_all(x, constraints)) continue;
      ++tested;
      Extraction e = extract_conjugator(x, rhs_group);
      ok = ok && e.ok && NormalForm::delta_power(n, 2 * e.p) * e.c == x;
    }
    out.push_back({"chain-intersection-subset", base + " L=" + std::to_string(max_length) + " tested=" + std::to_string(tested), ok,
                   ""});
  }
  return out;
}

}  // namespace

std::vector<CheckResult> verify_intersection_property(int n, const IntersectionQuery& q, int max_length) {
  check_strands(n);
  if (q.kind == IntersectionKind::TwistCentralizer) return twist_intersection(n, q.r, max_length);
  return chain_intersection(n, q.K, q.m, max_length);
}

CheckResult verify_double_centralizer(const ParabolicDescriptor& h, int max_length) {
  const int n = h.strands();
  const auto gens = parabolic_centralizer_generators(h).values();
  std::size_t tested = 0;
  bool ok = true;
  for (const auto& x : word_ball(n, range_inclusive(1, n - 1), max_length)) {
    if (!commutes_with_all(x, gens)) continue;
    ++tested;
    // Z(B_2) is generated by Delta_2 itself, not its square.
    const int odd = n == 2 && pair_crossings(x, 1, 2) % 2 != 0 ? 1 : 0;
    Extraction e = extract_conjugator(NormalForm::delta_power(n, -odd) * x, h);
    ok = ok && e.ok && NormalForm::delta_power(n, 2 * e.p + odd) * e.c == x;
  }
  return {"double-centralizer",
          "n=" + std::to_string(n) + " support=" + support_token(h.support()) +
              " L=" + std::to_string(max_length) + " tested=" + std::to_string(tested),
          ok, ""};
}

}  // namespace braid
