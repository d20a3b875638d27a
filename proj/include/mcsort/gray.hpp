#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "mcsort/ternary.hpp"

namespace mcsort {

// Widths are capped so that ranks fit comfortably in 64 bits; exhaustive
// oracles only ever run at small B anyway.
constexpr int kMinWidth = 1;
constexpr int kMaxWidth = 32;

// A member of ValidRg(B): either the codeword rg(x) (rank 2x) or the
// superposition rg(x)*rg(x+1) (rank 2x+1, exactly one M bit). Ranks order
// the 2^{B+1}-1 valid strings totally; the rank is stored because network
// oracles compare it millions of times.
struct ValidWord {
    Word word;
    uint64_t rank = 0;
};

uint64_t valid_count(int width);  // 2^{width+1} - 1

Word gray_encode(uint64_t x, int width);
uint64_t gray_decode(const Word& g);       // throws std::domain_error on M
int parity(const Word& g, size_t prefix_len);

// Ascending by rank: rg(0), rg(0)*rg(1), rg(1), ..., rg(2^B-1).
std::vector<ValidWord> enumerate_valid(int width);

// Structural membership test, O(width): returns the rank when valid.
std::optional<uint64_t> valid_rank(const Word& w);

Word word_from_rank(uint64_t rank, int width);

// Metastable closure of the stable max/min pair on valid strings. Outputs
// are again valid; by construction they are the rank-max and rank-min of
// the operands.
std::pair<Word, Word> max_min_oracle(const Word& g, const Word& h);

}  // namespace mcsort
