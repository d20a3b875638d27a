#include "mcsort/gray.hpp"

#include <stdexcept>
#include <string>

namespace mcsort {

namespace {

void check_width(int width) {
    if (width < kMinWidth || width > kMaxWidth)
        throw std::invalid_argument("width out of range: " + std::to_string(width));
}

}  // namespace

uint64_t valid_count(int width) {
    check_width(width);
    return (uint64_t{2} << width) - 1;
}

// rg_B(x) = 0 rg_{B-1}(x) for x < 2^{B-1}, else 1 rg_{B-1}(2^B - 1 - x);
// rg_1(0) = 0, rg_1(1) = 1. Written iteratively: peel one bit per step.
Word gray_encode(uint64_t x, int width) {
    check_width(width);
    if (x >> width) throw std::invalid_argument("value out of range for width");
    Word w(width);
    for (int i = 0; i < width; ++i) {
        int rem = width - i;  // bits still to produce
        uint64_t half = uint64_t{1} << (rem - 1);
        if (x < half) {
            w[i] = Trit::Zero;
        } else {
            w[i] = Trit::One;
            x = (half << 1) - 1 - x;  // reflect into the lower half
        }
    }
    return w;
}

// <g> via prefix parity: the i-th binary digit of the value is the XOR of
// g_1..g_i.
uint64_t gray_decode(const Word& g) {
    check_width(static_cast<int>(g.size()));
    uint64_t v = 0;
    int bit = 0;
    for (Trit t : g) {
        if (t == Trit::Meta) throw std::domain_error("gray_decode on non-binary word");
        bit ^= t == Trit::One ? 1 : 0;
        v = (v << 1) | static_cast<uint64_t>(bit);
    }
    return v;
}

int parity(const Word& g, size_t prefix_len) {
    if (prefix_len > g.size()) throw std::invalid_argument("prefix longer than word");
    int p = 0;
    for (size_t i = 0; i < prefix_len; ++i) {
        if (g[i] == Trit::Meta) throw std::domain_error("parity over META bit");
        p ^= g[i] == Trit::One ? 1 : 0;
    }
    return p;
}

std::vector<ValidWord> enumerate_valid(int width) {
    check_width(width);
    std::vector<ValidWord> out;
    out.reserve(valid_count(width));
    uint64_t n = uint64_t{1} << width;
    Word cur = gray_encode(0, width);
    for (uint64_t x = 0;; ++x) {
        out.push_back({cur, 2 * x});
        if (x + 1 == n) break;
        Word next = gray_encode(x + 1, width);
        out.push_back({superpose({cur, next}), 2 * x + 1});
        cur = std::move(next);
    }
    return out;
}

std::optional<uint64_t> valid_rank(const Word& w) {
    if (w.size() < size_t{kMinWidth} || w.size() > size_t{kMaxWidth}) return std::nullopt;
    size_t metas = meta_count(w);
    if (metas == 0) return 2 * gray_decode(w);
    if (metas > 1) return std::nullopt;
    // One wild card: valid iff its two resolutions are consecutive codewords.
    auto res = resolutions(w);
    uint64_t a = gray_decode(res[0]);
    uint64_t b = gray_decode(res[1]);
    if (a > b) std::swap(a, b);
    if (b - a != 1) return std::nullopt;
    return 2 * a + 1;
}

Word word_from_rank(uint64_t rank, int width) {
    check_width(width);
    if (rank >= valid_count(width)) throw std::invalid_argument("rank out of range");
    if (rank % 2 == 0) return gray_encode(rank / 2, width);
    return superpose({gray_encode(rank / 2, width), gray_encode(rank / 2 + 1, width)});
}

std::pair<Word, Word> max_min_oracle(const Word& g, const Word& h) {
    if (g.size() != h.size()) throw std::invalid_argument("width mismatch");
    if (!valid_rank(g) || !valid_rank(h)) throw std::domain_error("max_min_oracle on invalid word");
    size_t b = g.size();
    // Stable operator: pick max/min by decoded value, concatenated so one
    // closure pass covers both outputs.
    auto stable = [b](const std::vector<Word>& args) {
        uint64_t x = gray_decode(args[0]);
        uint64_t y = gray_decode(args[1]);
        const Word& mx = x >= y ? args[0] : args[1];
        const Word& mn = x >= y ? args[1] : args[0];
        Word out;
        out.reserve(2 * b);
        out.insert(out.end(), mx.begin(), mx.end());
        out.insert(out.end(), mn.begin(), mn.end());
        return out;
    };
    Word both = closure_eval(stable, {g, h});
    return {Word(both.begin(), both.begin() + b), Word(both.begin() + b, both.end())};
}

}  // namespace mcsort
