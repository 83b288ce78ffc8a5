#include <doctest.h>

#include <random>

#include "braid/centralizers.hpp"
#include "braid/instance_io.hpp"
#include "oracles.hpp"

using namespace braid;

namespace {

NormalForm nf(int n, std::initializer_list<int> letters) { return NormalForm::from_word(n, letters); }

ConjugatedParabolic standard(int n, std::vector<int> support) {
  return ConjugatedParabolic(ParabolicDescriptor(n, std::move(support), true));
}

std::vector<NormalForm> constraint_values(const ReductionInstance& r) {
  std::vector<NormalForm> out;
  for (std::size_t i = 1; i < r.sim.pairs.size(); ++i) {
    CHECK(r.sim.pairs[i].first == r.sim.pairs[i].second);
    out.push_back(r.sim.pairs[i].first);
  }
  return out;
}

}  // namespace

TEST_CASE("extraction examples") {
  const ParabolicDescriptor b2(3, {1});
  auto a = extract_conjugator(NormalForm::delta_power(3, 2), b2);
  REQUIRE(a.ok);
  CHECK(a.p == 1);
  CHECK(a.c.is_identity());

  auto b = extract_conjugator(nf(3, {1}) * NormalForm::delta_power(3, 4), b2);
  REQUIRE(b.ok);
  CHECK(b.p == 2);
  CHECK(b.c == nf(3, {1}));

  auto c = extract_conjugator(nf(3, {2}), b2);
  CHECK_FALSE(c.ok);
  CHECK(c.p == 0);

  auto odd = extract_conjugator(nf(3, {2, 1, 1, 2, 2}), ParabolicDescriptor(3, {}, true));
  CHECK_FALSE(odd.ok);

  auto whole = extract_conjugator(nf(3, {2, -1}), ParabolicDescriptor(3, {1, 2}));
  REQUIRE(whole.ok);
  CHECK(whole.c == nf(3, {2, -1}));
}

TEST_CASE("extraction is exact on products") {
  std::mt19937_64 rng(4);
  for (int n = 3; n <= 6; ++n) {
    for (unsigned mask = 0; mask + 1 < (1u << (n - 1)); ++mask) {
      std::vector<int> s;
      for (int i = 0; i < n - 1; ++i) {
        if (mask >> i & 1) s.push_back(i + 1);
      }
      ParabolicDescriptor h(n, s, true);
      for (int t = 0; t < 5; ++t) {
        BraidWord w(n, {});
        for (int k = 0; k < 6 && !s.empty(); ++k) {
          const int g = s[rng() % s.size()];
          w.letters.push_back(rng() % 2 ? g : -g);
        }
        const int p = static_cast<int>(rng() % 5) - 2;
        const NormalForm z = NormalForm::delta_power(n, 2 * p) * NormalForm::from_word(w);
        auto e = extract_conjugator(z, h);
        REQUIRE(e.ok);
        CHECK(e.p == p);
        CHECK(NormalForm::delta_power(n, 2 * e.p) * e.c == z);
        CHECK(oracle::braid_equal(e.c.to_word(), w));
      }
    }
  }
}

TEST_CASE("reduction instance examples") {
  const NormalForm x = nf(4, {1, 2});
  auto r = build_reduction_instance({standard(4, {1}), x, x});
  CHECK(constraint_values(r) == std::vector<NormalForm>{twist(1, 3, 2, 4), twist(1, 2, 2, 4), nf(4, {3})});
  CHECK(r.labels == std::vector<std::string>{"x,y", "D3^2", "D2^2", "s3"});

  for (int n = 4; n <= 7; ++n) {
    std::vector<int> s;
    for (int i = 1; i <= n - 3; ++i) s.push_back(i);
    const NormalForm e = NormalForm::identity(n);
    auto c = build_reduction_instance({standard(n, s), e, e});
    CHECK(constraint_values(c) ==
          std::vector<NormalForm>{twist(1, n - 1, 2, n), twist(1, n - 2, 2, n), NormalForm::generator(n, n - 1)});
  }

  const NormalForm y = nf(4, {2});
  auto d = build_reduction_instance({standard(4, {1, 3}), y, y});
  CHECK(constraint_values(d) == std::vector<NormalForm>{nf(4, {1}), nf(4, {3}), nf(4, {2, 1, 3, 2, 2, 1, 3, 2})});

  auto whole = build_reduction_instance({standard(4, {1, 2, 3}), y, y});
  CHECK(whole.sim.pairs.size() == 1);
}

TEST_CASE("constraints commute with the subgroup they describe") {
  // Shifted and conjugated blocks included.
  for (int n = 3; n <= 6; ++n) {
    for (int k = 1; k < n; ++k) {
      for (int m = k + 1; m <= n; ++m) {
        std::vector<int> s;
        for (int i = k; i < m; ++i) s.push_back(i);
        for (const NormalForm& g : {NormalForm::identity(n), nf(n, {1, -2})}) {
          ConjugatedParabolic h(ParabolicDescriptor(n, s), g);
          const NormalForm e = NormalForm::identity(n);
          for (const auto& c : constraint_values(build_reduction_instance({h, e, e}))) {
            for (const auto& gen : h.generators()) CHECK(commutes(c, gen));
          }
        }
      }
    }
  }
}

TEST_CASE("subgroup conjugacy examples") {
  const SolverOptions opts;
  auto a = solve_subgroup_conjugacy({standard(3, {1}), nf(3, {2}), nf(3, {-1, 2, 1})}, opts);
  REQUIRE(a.verdict == Verdict::Yes);
  CHECK(a.witness->verified);
  CHECK(a.witness->c == nf(3, {1}));
  CHECK(a.witness->p == 0);
  CHECK(format_result(a) == "YES 1 0");

  const NormalForm d2 = NormalForm::delta_power(3, 2);
  for (const auto& s : {std::vector<int>{}, std::vector<int>{1}, std::vector<int>{2}, std::vector<int>{1, 2}}) {
    auto b = solve_subgroup_conjugacy({standard(3, s), d2, d2}, opts);
    REQUIRE(b.verdict == Verdict::Yes);
    CHECK(b.witness->c.is_identity());
    CHECK(format_result(b) == "YES e 0");
  }

  auto c = solve_subgroup_conjugacy({standard(3, {1}), nf(3, {2}), nf(3, {-2})}, opts);
  CHECK(c.verdict == Verdict::No);
  CHECK(format_result(c) == "NO");

  // sigma_1 and sigma_2 are conjugate in B_3 but not by an element of <sigma_1>.
  auto d = solve_subgroup_conjugacy({standard(3, {1}), nf(3, {1}), nf(3, {2})}, opts);
  CHECK(d.verdict == Verdict::No);
  CHECK(solve_conjugacy(nf(3, {1}), nf(3, {2})).decision == Decision::Yes);
}

TEST_CASE("corank-2 examples") {
  auto a = solve_corank2(nf(4, {2, 3}), nf(4, {-1, 2, 3, 1}));
  REQUIRE(a.verdict == Verdict::Yes);
  CHECK(a.witness->verified);
  CHECK(parabolic_membership(a.witness->c, {1}).has_value());

  auto b = solve_corank2(nf(4, {3}), nf(4, {3}));
  REQUIRE(b.verdict == Verdict::Yes);
  CHECK(b.witness->c.is_identity());

  CHECK_THROWS_AS(solve_corank2(nf(3, {1}), nf(3, {1})), RangeError);
}

TEST_CASE("round trip on random instances") {
  const std::vector<std::pair<int, std::vector<int>>> shapes{
      {4, {1}}, {4, {2}}, {4, {1, 3}}, {4, {1, 2}}, {5, {2, 3}}, {5, {1, 4}}, {5, {}}, {5, {1, 2, 3, 4}}};
  for (const auto& [n, s] : shapes) {
    for (std::uint64_t seed = 0; seed < 8; ++seed) {
      for (const auto& gamma : {BraidWord(n, {}), BraidWord(n, {2, -1, 3})}) {
        const auto pos = random_instance(seed, n, s, gamma, InstanceKind::Positive).build();
        auto r = solve_subgroup_conjugacy(pos);
        REQUIRE(r.verdict == Verdict::Yes);
        CHECK(pos.h.contains(r.witness->c));
        CHECK(conjugate(pos.x, r.witness->c) == pos.y);
        // The witness word uses the generators of the actual subgroup.
        CHECK(oracle::braid_equal(r.witness->c_word, r.witness->c.to_word()));

        const auto neg = random_instance(seed, n, s, gamma, InstanceKind::Obstructed).build();
        CHECK(solve_subgroup_conjugacy(neg).verdict == Verdict::No);
      }
    }
  }
}

TEST_CASE("conjugators in H satisfy every constraint") {
  std::mt19937_64 rng(17);
  for (int n = 4; n <= 6; ++n) {
    for (int t = 0; t < 10; ++t) {
      std::vector<int> s;
      for (int i = 1; i < n; ++i) {
        if (rng() % 2) s.push_back(i);
      }
      if (static_cast<int>(s.size()) == n - 1) s.pop_back();
      const ConjugatedParabolic h(ParabolicDescriptor(n, s, true), NormalForm::from_word(oracle::random_word(rng, n, 4)));
      BraidWord w(n, {});
      for (int k = 0; k < 5 && !s.empty(); ++k) w.letters.push_back(s[rng() % s.size()]);
      const NormalForm c = h.to_actual(NormalForm::from_word(w));
      const NormalForm e = NormalForm::identity(n);
      for (const auto& g : constraint_values(build_reduction_instance({h, e, e}))) CHECK(commutes(g, c));
    }
  }
}

TEST_CASE("corank-2 agrees with the general solver") {
  for (int n = 4; n <= 5; ++n) {
    std::vector<int> s;
    for (int i = 1; i <= n - 3; ++i) s.push_back(i);
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      for (auto kind : {InstanceKind::Positive, InstanceKind::Obstructed}) {
        const auto inst = random_instance(seed, n, s, BraidWord(n, {}), kind).build();
        auto a = solve_subgroup_conjugacy(inst);
        auto b = solve_corank2(inst.x, inst.y);
        CHECK(a.verdict == b.verdict);
        CHECK(a.witness.has_value() == b.witness.has_value());
        if (b.witness) CHECK(b.witness->verified);
      }
    }
  }
}

TEST_CASE("instance files") {
  const std::string text = "n: 3\nsupport: 1\nx: 2\ny: -1 2 1\n";
  auto spec = parse_instance(text);
  CHECK(spec.n == 3);
  CHECK(spec.support == std::vector<int>{1});
  CHECK(spec.gamma.empty());
  CHECK(format_instance(spec) == text);

  auto g = parse_instance("# comment\nn: 4\nsupport: 3 1\ngamma: 2\nx: e\ny: 1 # trailing\n");
  CHECK(g.support == std::vector<int>{1, 3});
  CHECK(format_instance(g) == "n: 4\nsupport: 1 3\ngamma: 2\nx: e\ny: 1\n");
  CHECK(parse_instance(format_instance(g)).y == g.y);

  CHECK_THROWS_AS(parse_instance("n: 3\nsupport: 1\nx: 2\n"), MalformedWord);
  CHECK_THROWS_AS(parse_instance("n: 3\nsupport: 1\nx: 2\ny: 3\n"), MalformedWord);
  CHECK_THROWS_AS(parse_instance("n: 3\nsupport: 1\nx: 2\ny: 1\nz: 1\n"), MalformedWord);
  CHECK_THROWS_AS(parse_instance("n: 3\nn: 3\nsupport: 1\nx: 2\ny: 1\n"), MalformedWord);
  CHECK_THROWS_AS(parse_instance("n: 3\nsupport: 4\nx: 2\ny: 1\n"), RangeError);
  CHECK_THROWS_AS(parse_instance("n 3\n"), MalformedWord);

  auto sim = parse_simultaneous("n: 3\npair: 1 ; 2\npair: 2;1\n");
  REQUIRE(sim.pairs.size() == 2);
  CHECK(sim.pairs[1].first == nf(3, {2}));
  CHECK_THROWS_AS(parse_simultaneous("n: 3\n"), RangeError);
  CHECK_THROWS_AS(parse_simultaneous("pair: 1 ; 1\n"), MalformedWord);
  CHECK_THROWS_AS(parse_simultaneous("n: 3\npair: 1 2\n"), MalformedWord);
}

TEST_CASE("random instances are reproducible") {
  const BraidWord e(4, {});
  const auto a = format_instance(random_instance(7, 4, {1}, e, InstanceKind::Positive));
  CHECK(a == format_instance(random_instance(7, 4, {1}, e, InstanceKind::Positive)));
  CHECK(a != format_instance(random_instance(8, 4, {1}, e, InstanceKind::Positive)));
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto pos = random_instance(seed, 5, {2, 3}, BraidWord(5, {1}), InstanceKind::Positive);
    const auto neg = random_instance(seed, 5, {2, 3}, BraidWord(5, {1}), InstanceKind::Obstructed);
    CHECK(exponent_sum(pos.x) == exponent_sum(pos.y));
    CHECK(exponent_sum(neg.y) == exponent_sum(pos.y) + 1);
  }
  CHECK_THROWS_AS(random_instance(1, 4, {5}, e, InstanceKind::Positive), RangeError);
}
