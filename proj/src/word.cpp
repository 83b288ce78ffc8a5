#include "braid/word.hpp"

#include <cctype>
#include <charconv>
#include <cstdlib>
#include <sstream>

namespace braid {

BraidWord::BraidWord(int strands, std::vector<int> word)
    : n(strands), letters(std::move(word)) {
  validate(*this);
}

BraidWord BraidWord::inverse() const {
  BraidWord out;
  out.n = n;
  out.letters.reserve(letters.size());
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
    out.letters.push_back(-*it);
  }
  return out;
}

BraidWord BraidWord::operator*(const BraidWord& rhs) const {
  if (n != rhs.n) {
    throw StrandMismatch("cannot multiply words on " + std::to_string(n) +
                         " and " + std::to_string(rhs.n) + " strands");
  }
  BraidWord out = *this;
  out.letters.insert(out.letters.end(), rhs.letters.begin(), rhs.letters.end());
  return out;
}

void check_strands(int n) {
  if (n < 1 || n > kMaxStrands) {
    throw RangeError("strand count " + std::to_string(n) +
                     " outside [1, " + std::to_string(kMaxStrands) + "]");
  }
}

void validate(const BraidWord& w) {
  check_strands(w.n);
  for (int letter : w.letters) {
    if (letter == 0 || std::abs(letter) > w.n - 1) {
      throw MalformedWord("generator index " + std::to_string(letter) +
                          " invalid for B_" + std::to_string(w.n));
    }
  }
}

BraidWord free_reduce(const BraidWord& w) {
  BraidWord out;
  out.n = w.n;
  for (int letter : w.letters) {
    if (!out.letters.empty() && out.letters.back() == -letter) {
      out.letters.pop_back();
    } else {
      out.letters.push_back(letter);
    }
  }
  return out;
}

BraidWord parse_word(std::string_view text, int n) {
  check_strands(n);
  BraidWord w;
  w.n = n;
  std::size_t i = 0;
  bool saw_identity = false;
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j]))) ++j;
    std::string_view token = text.substr(i, j - i);
    if (token == "e") {
      saw_identity = true;
    } else {
      int value = 0;
      const char* first = token.data();
      if (!token.empty() && token.front() == '+') ++first;
      auto [ptr, ec] = std::from_chars(first, token.data() + token.size(), value);
      if (ec != std::errc{} || ptr != token.data() + token.size()) {
        throw MalformedWord("cannot parse braid letter '" + std::string(token) + "'");
      }
      w.letters.push_back(value);
    }
    i = j;
  }
  if (saw_identity && !w.letters.empty()) {
    throw MalformedWord("identity token 'e' mixed with letters");
  }
  validate(w);
  return w;
}

std::string format_letters(const std::vector<int>& letters) {
  if (letters.empty()) return "e";
  std::ostringstream out;
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (i) out << ' ';
    out << letters[i];
  }
  return out.str();
}

std::string format_word(const BraidWord& w) { return format_letters(w.letters); }

}  // namespace braid
