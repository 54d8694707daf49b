#include "radical/sign_word.hpp"

#include <algorithm>
#include <stdexcept>

namespace radical {

namespace {

std::vector<Sign> parse_signs(std::string_view text) {
  std::vector<Sign> out;
  out.reserve(text.size());
  for (char c : text) {
    if (c == '+')
      out.push_back(+1);
    else if (c == '-')
      out.push_back(-1);
    else
      throw std::invalid_argument(std::string("sign word: unexpected character '") + c + "'");
  }
  return out;
}

bool all_plus(const std::vector<Sign>& v) {
  return std::all_of(v.begin(), v.end(), [](Sign s) { return s == +1; });
}

}  // namespace

SignWord parse_word(std::string_view text) {
  const auto bar = text.find('|');
  if (bar == std::string_view::npos) return SignWord{{}, parse_signs(text)};
  if (text.find('|', bar + 1) != std::string_view::npos)
    throw std::invalid_argument("sign word: more than one '|'");
  return SignWord{parse_signs(text.substr(0, bar)), parse_signs(text.substr(bar + 1))};
}

std::string render_signs(const std::vector<Sign>& signs) {
  std::string s;
  s.reserve(signs.size());
  for (Sign e : signs) s.push_back(e > 0 ? '+' : '-');
  return s;
}

std::string render_word(const SignWord& w) {
  return render_signs(w.preamble) + "|" + render_signs(w.block);
}

std::vector<Sign> spelled_prefix(const SignWord& w, std::size_t n) {
  if (w.block.empty())
    throw std::domain_error("spelled_prefix: finite word has no infinite spelling here");
  std::vector<Sign> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (i < w.preamble.size())
      out.push_back(w.preamble[i]);
    else
      out.push_back(w.block[(i - w.preamble.size()) % w.block.size()]);
  }
  return out;
}

SignWord infinite_spelling(const SignWord& finite) {
  if (!finite.block.empty())
    throw std::domain_error("infinite_spelling: word is not finite");
  SignWord w;
  w.preamble = finite.preamble;
  w.preamble.push_back(+1);
  w.preamble.push_back(-1);
  w.block = {+1};
  return w;
}

bool spells_set_a_tail(const SignWord& w) {
  if (w.block.empty() || !all_plus(w.block)) return false;
  // Tail is all +1 from the end of the preamble on; set A needs the last
  // non-(+1) stretch of the preamble to end in exactly -1, -1.
  std::size_t end = w.preamble.size();
  while (end > 0 && w.preamble[end - 1] == +1) --end;
  return end >= 2 && w.preamble[end - 1] == -1 && w.preamble[end - 2] == -1;
}

SignWord canonicalize(SignWord w) {
  if (w.block.empty()) return w;  // finite words are canonical as given

  // Primitive period of the block.
  const std::size_t p = w.block.size();
  for (std::size_t d = 1; d < p; ++d) {
    if (p % d != 0) continue;
    bool repeats = true;
    for (std::size_t i = d; i < p && repeats; ++i) repeats = w.block[i] == w.block[i % d];
    if (repeats) {
      w.block.resize(d);
      break;
    }
  }

  // Absorb block copies trailing the preamble: pre ++ [x] ++ B^inf with
  // x == B.back() equals pre ++ (rot B)^inf.
  while (!w.preamble.empty() && w.preamble.back() == w.block.back()) {
    w.preamble.pop_back();
    std::rotate(w.block.rbegin(), w.block.rbegin() + 1, w.block.rend());
  }

  if (spells_set_a_tail(w)) {
    // (e_1..e_k, -1, -1, +1, +1, ...) names the same value as the finite
    // word (e_1..e_k).
    w.preamble.pop_back();
    w.preamble.pop_back();
    w.block.clear();
  }
  return w;
}

}  // namespace radical
