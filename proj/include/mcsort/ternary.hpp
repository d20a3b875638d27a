#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace mcsort {

// Three-valued signal: 0, 1, or M (metastable). Gates compute the metastable
// closure of their Boolean behavior, so M propagates unless a controlling
// value (0 for AND, 1 for OR) masks it.
enum class Trit : uint8_t { Zero = 0, One = 1, Meta = 2 };

constexpr char to_char(Trit t) {
    return t == Trit::Zero ? '0' : t == Trit::One ? '1' : 'M';
}

std::optional<Trit> trit_from_char(char c);

constexpr Trit t_not(Trit a) {
    return a == Trit::Meta ? Trit::Meta
         : a == Trit::Zero ? Trit::One : Trit::Zero;
}

constexpr Trit t_and(Trit a, Trit b) {
    if (a == Trit::Zero || b == Trit::Zero) return Trit::Zero;
    if (a == Trit::One && b == Trit::One) return Trit::One;
    return Trit::Meta;
}

constexpr Trit t_or(Trit a, Trit b) {
    if (a == Trit::One || b == Trit::One) return Trit::One;
    if (a == Trit::Zero && b == Trit::Zero) return Trit::Zero;
    return Trit::Meta;
}

enum class LogicOp { And, Or, Not };

// Closure of the Boolean gate; b must be given exactly for binary ops.
Trit eval_gate(LogicOp op, Trit a, std::optional<Trit> b = std::nullopt);

// A word of trits, index 0 holding bit 1 (the most significant bit). All
// text renderings are MSB-first.
using Word = std::vector<Trit>;

std::string to_string(const Word& w);
Word parse_word(const std::string& s);  // throws std::invalid_argument

bool is_binary(const Word& w);
size_t meta_count(const Word& w);

// All binary words agreeing with x outside its M positions (M is a wild
// card); 2^k members for k METAs.
std::vector<Word> resolutions(const Word& x);

// Positionwise merge: agreeing bits kept, disagreements become M.
// Throws std::invalid_argument on an empty set or ragged widths.
Word superpose(const std::vector<Word>& words);

// Metastable closure of an arbitrary function on binary words: superpose f
// over the Cartesian product of the argument resolutions. This is the
// brute-force oracle behind every *_M operator in the repo. Enumeration
// stops early once every output bit has degraded to M.
Word closure_eval(const std::function<Word(const std::vector<Word>&)>& f,
                  const std::vector<Word>& args);

}  // namespace mcsort
