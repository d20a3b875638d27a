#include "mcsort/fsm.hpp"

#include <stdexcept>

namespace mcsort {

namespace {

constexpr Trit k0 = Trit::Zero;
constexpr Trit k1 = Trit::One;

void require_binary(Pair p, const char* who) {
    if (p[0] == Trit::Meta || p[1] == Trit::Meta)
        throw std::domain_error(std::string(who) + " on META input; use the _m closure");
}

// Frozen closures over the stable tables, rows s / columns b, both indexed
// by pair_index (00,01,0M,10,11,1M,M0,M1,MM). Generated offline from an
// independent resolution-enumeration implementation; the unit tests verify
// every entry against closure_eval.
constexpr const char* kDiamondM[9][9] = {
    {"00", "01", "0M", "10", "11", "1M", "M0", "M1", "MM"},  // s=00
    {"01", "01", "01", "01", "01", "01", "01", "01", "01"},  // s=01
    {"0M", "01", "0M", "MM", "M1", "MM", "MM", "M1", "MM"},  // s=0M
    {"10", "10", "10", "10", "10", "10", "10", "10", "10"},  // s=10
    {"11", "10", "1M", "01", "00", "0M", "M1", "M0", "MM"},  // s=11
    {"1M", "10", "1M", "MM", "M0", "MM", "MM", "M0", "MM"},  // s=1M
    {"M0", "MM", "MM", "10", "1M", "1M", "M0", "MM", "MM"},  // s=M0
    {"M1", "MM", "MM", "01", "0M", "0M", "M1", "MM", "MM"},  // s=M1
    {"MM", "MM", "MM", "MM", "MM", "MM", "MM", "MM", "MM"},  // s=MM
};

constexpr const char* kOutM[9][9] = {
    {"00", "10", "M0", "10", "11", "1M", "M0", "1M", "MM"},  // s=00
    {"00", "10", "M0", "01", "11", "M1", "0M", "1M", "MM"},  // s=01
    {"00", "10", "M0", "MM", "11", "MM", "MM", "1M", "MM"},  // s=0M
    {"00", "01", "0M", "10", "11", "1M", "M0", "M1", "MM"},  // s=10
    {"00", "01", "0M", "01", "11", "M1", "0M", "M1", "MM"},  // s=11
    {"00", "01", "0M", "MM", "11", "MM", "MM", "M1", "MM"},  // s=1M
    {"00", "MM", "MM", "10", "11", "1M", "M0", "MM", "MM"},  // s=M0
    {"00", "MM", "MM", "01", "11", "M1", "0M", "MM", "MM"},  // s=M1
    {"00", "MM", "MM", "MM", "11", "MM", "MM", "MM", "MM"},  // s=MM
};

Pair decode_cell(const char* cell) {
    return {*trit_from_char(cell[0]), *trit_from_char(cell[1])};
}

Pair closure_of(Pair (*stable)(Pair, Pair), Pair a, Pair b) {
    auto f = [stable](const std::vector<Word>& args) {
        Pair r = stable({args[0][0], args[0][1]}, {args[1][0], args[1][1]});
        return Word{r[0], r[1]};
    };
    Word r = closure_eval(f, {Word{a[0], a[1]}, Word{b[0], b[1]}});
    return {r[0], r[1]};
}

}  // namespace

Pair diamond(Pair s, Pair b) {
    require_binary(s, "diamond");
    require_binary(b, "diamond");
    if (s[0] == k0 && s[1] == k0) return b;                       // identity
    if (s[0] == k0 && s[1] == k1) return {k0, k1};                // absorbing <
    if (s[0] == k1 && s[1] == k0) return {k1, k0};                // absorbing >
    return {t_not(b[0]), t_not(b[1])};                            // 11: complement
}

Pair out_op(Pair s, Pair b) {
    require_binary(s, "out_op");
    require_binary(b, "out_op");
    Trit mx = t_or(b[0], b[1]);
    Trit mn = t_and(b[0], b[1]);
    if (s[0] == k0 && s[1] == k0) return {mx, mn};
    if (s[0] == k1 && s[1] == k0) return {b[0], b[1]};
    if (s[0] == k1 && s[1] == k1) return {mn, mx};
    return {b[1], b[0]};
}

std::pair<Word, Word> fsm_sort2(const Word& g, const Word& h) {
    if (g.size() != h.size()) throw std::invalid_argument("width mismatch");
    if (!is_binary(g) || !is_binary(h)) throw std::domain_error("fsm_sort2 on META input");
    Pair s{k0, k0};
    Word mx(g.size()), mn(g.size());
    for (size_t i = 0; i < g.size(); ++i) {
        Pair b{g[i], h[i]};
        Pair o = out_op(s, b);
        mx[i] = o[0];
        mn[i] = o[1];
        s = diamond(s, b);
    }
    return {mx, mn};
}

Pair diamond_m(Pair x, Pair y) {
    return decode_cell(kDiamondM[pair_index(x)][pair_index(y)]);
}

Pair out_m(Pair s, Pair b) {
    return decode_cell(kOutM[pair_index(s)][pair_index(b)]);
}

Pair diamond_m_oracle(Pair x, Pair y) { return closure_of(diamond, x, y); }

Pair out_m_oracle(Pair s, Pair b) { return closure_of(out_op, s, b); }

Pair hat(Pair x) { return {t_not(x[0]), x[1]}; }

Pair hat_diamond_m(Pair x, Pair y) { return hat(diamond_m(hat(x), hat(y))); }

Pair prefix_state_oracle(const Word& g, const Word& h, size_t i) {
    if (g.size() != h.size()) throw std::invalid_argument("width mismatch");
    if (i > g.size()) throw std::invalid_argument("prefix length out of range");
    if (i == 0) return {k0, k0};
    auto fold = [i](const std::vector<Word>& args) {
        Pair s{k0, k0};
        for (size_t j = 0; j < i; ++j) s = diamond(s, {args[0][j], args[1][j]});
        return Word{s[0], s[1]};
    };
    Word gp(g.begin(), g.begin() + i);
    Word hp(h.begin(), h.begin() + i);
    Word r = closure_eval(fold, {gp, hp});
    return {r[0], r[1]};
}

}  // namespace mcsort
