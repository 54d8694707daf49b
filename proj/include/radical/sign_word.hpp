#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace radical {

// One radical sign, +1 or -1.
using Sign = int;

enum class WordKind { Finite, TotallyPeriodic, EventuallyPeriodic };

// Finite description of a sign sequence: a preamble followed by a block that
// repeats forever. An empty block denotes the finite radical
// sqrt(2 + e1*sqrt(2 + ... + ek*sqrt(2))) with k = |preamble|.
//
// Canonical words (the ones this library emits) additionally satisfy: the
// block is primitive (no shorter repetition), no block copy trails the
// preamble, and the spelled sequence is never in set A (tail "-1, -1, then
// all +1" -- those collapse to Finite words).
struct SignWord {
  std::vector<Sign> preamble;
  std::vector<Sign> block;

  WordKind kind() const {
    if (block.empty()) return WordKind::Finite;
    return preamble.empty() ? WordKind::TotallyPeriodic : WordKind::EventuallyPeriodic;
  }

  bool operator==(const SignWord&) const = default;
};

// Text format "preamble|block" with '+'/'-' characters, e.g. "+--+|-+++".
// A string without '|' is read as a bare block (totally periodic). Rendering
// always includes the bar, so parse(render(w)) == w bit-exactly.
SignWord parse_word(std::string_view text);  // throws std::invalid_argument
std::string render_word(const SignWord& w);

std::string render_signs(const std::vector<Sign>& signs);

// First n signs of the spelled sequence; requires a nonempty block.
std::vector<Sign> spelled_prefix(const SignWord& w, std::size_t n);

// The canonical infinite spelling of a finite word: signs, then +1, -1, then
// all +1 (the extension that avoids set A).
SignWord infinite_spelling(const SignWord& finite);

// True iff the spelled sequence lies in set A: some e_k = e_{k+1} = -1
// followed by +1 forever.
bool spells_set_a_tail(const SignWord& w);

// Normal form: shrinks the block to its primitive period, absorbs block
// copies trailing the preamble into the block, and rewrites set-A tails to
// their Finite equivalent. Value-preserving.
SignWord canonicalize(SignWord w);

}  // namespace radical
