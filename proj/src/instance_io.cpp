#include "braid/instance_io.hpp"

#include <charconv>
#include <map>
#include <random>
#include <sstream>

namespace braid {

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

// Key/value lines; blank lines and '#' comments are skipped. Keys other than
// "pair" may appear once.
std::vector<std::pair<std::string, std::string>> read_fields(std::string_view text) {
  std::vector<std::pair<std::string, std::string>> out;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string body = trim(line.substr(0, line.find('#')));
    if (body.empty()) continue;
    const auto colon = body.find(':');
    if (colon == std::string::npos) {
      throw MalformedWord("line " + std::to_string(lineno) + ": expected 'key: value'");
    }
    out.emplace_back(trim(body.substr(0, colon)), trim(body.substr(colon + 1)));
  }
  return out;
}

int parse_strands(const std::string& value) {
  int n = 0;
  auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), n);
  if (ec != std::errc{} || ptr != value.data() + value.size()) throw MalformedWord("bad strand count '" + value + "'");
  check_strands(n);
  return n;
}

}  // namespace

SubgroupConjugacyInstance InstanceSpec::build() const {
  ConjugatedParabolic h(ParabolicDescriptor(n, support, true), NormalForm::from_word(gamma));
  return {std::move(h), NormalForm::from_word(x), NormalForm::from_word(y)};
}

InstanceSpec parse_instance(std::string_view text) {
  std::map<std::string, std::string> fields;
  for (auto& [k, v] : read_fields(text)) {
    if (k != "n" && k != "support" && k != "gamma" && k != "x" && k != "y") {
      throw MalformedWord("unknown instance field '" + k + "'");
    }
    if (!fields.emplace(k, v).second) throw MalformedWord("duplicate instance field '" + k + "'");
  }
  for (const char* key : {"n", "support", "x", "y"}) {
    if (!fields.count(key)) throw MalformedWord(std::string("missing instance field '") + key + "'");
  }
  InstanceSpec spec;
  spec.n = parse_strands(fields["n"]);
  spec.support = parse_support(fields["support"], spec.n);
  spec.gamma = fields.count("gamma") ? parse_word(fields["gamma"], spec.n) : BraidWord(spec.n, {});
  spec.x = parse_word(fields["x"], spec.n);
  spec.y = parse_word(fields["y"], spec.n);
  return spec;
}

std::string format_instance(const InstanceSpec& spec) {
  std::string out = "n: " + std::to_string(spec.n) + "\n";
  out += "support: " + (spec.support.empty() ? std::string("e") : format_support(spec.support)) + "\n";
  if (!spec.gamma.empty()) out += "gamma: " + format_word(spec.gamma) + "\n";
  out += "x: " + format_word(spec.x) + "\n";
  out += "y: " + format_word(spec.y) + "\n";
  return out;
}

SimultaneousInstance parse_simultaneous(std::string_view text) {
  SimultaneousInstance inst;
  bool have_n = false;
  for (auto& [k, v] : read_fields(text)) {
    if (k == "n") {
      if (have_n) throw MalformedWord("duplicate field 'n'");
      inst.n = parse_strands(v);
      have_n = true;
    } else if (k == "pair") {
      if (!have_n) throw MalformedWord("'n' must come before the pairs");
      const auto semi = v.find(';');
      if (semi == std::string::npos) throw MalformedWord("pair needs 'a ; b'");
      inst.pairs.emplace_back(NormalForm::from_word(parse_word(v.substr(0, semi), inst.n)),
                              NormalForm::from_word(parse_word(v.substr(semi + 1), inst.n)));
    } else {
      throw MalformedWord("unknown field '" + k + "'");
    }
  }
  if (!have_n) throw MalformedWord("missing field 'n'");
  inst.check();
  return inst;
}

InstanceSpec random_instance(std::uint64_t seed, int n, const std::vector<int>& support, const BraidWord& gamma,
                             InstanceKind kind) {
  check_strands(n);
  if (n < 2) throw RangeError("random instances need n >= 2");
  ParabolicDescriptor(n, support, true);
  std::mt19937_64 rng(seed);
  auto letter = [&](const std::vector<int>& alphabet) {
    const int i = alphabet[rng() % alphabet.size()];
    return rng() % 2 ? i : -i;
  };
  std::vector<int> all(n - 1);
  for (int i = 0; i < n - 1; ++i) all[i] = i + 1;

  InstanceSpec spec;
  spec.n = n;
  spec.support = support;
  spec.gamma = gamma.empty() ? BraidWord(n, {}) : gamma;
  spec.x = BraidWord(n, {});
  const int x_len = 1 + static_cast<int>(rng() % 8);
  for (int k = 0; k < x_len; ++k) spec.x.letters.push_back(letter(all));
  spec.x = free_reduce(spec.x);

  BraidWord c(n, {});
  if (!support.empty()) {
    do {
      c.letters.clear();
      const int c_len = static_cast<int>(rng() % 5);
      for (int k = 0; k < c_len; ++k) c.letters.push_back(letter(support));
    } while (NormalForm::from_word(c).canonical_length() > 3);
  }
  c = spec.gamma * c * spec.gamma.inverse();
  spec.y = free_reduce(c.inverse() * spec.x * c);
  if (kind == InstanceKind::Obstructed) spec.y = free_reduce(spec.y * BraidWord(n, {1}));
  return spec;
}

}  // namespace braid
