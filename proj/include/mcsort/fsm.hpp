#pragma once

#include <array>
#include <utility>

#include "mcsort/gray.hpp"
#include "mcsort/ternary.hpp"

namespace mcsort {

// Two-trit value: FSM state (00 equal/parity 0, 11 equal/parity 1,
// 10 greater, 01 less) or a bit pair g_i h_i.
using Pair = std::array<Trit, 2>;

// Row/column index into the 9x9 closure tables; trit order 0, 1, M.
constexpr size_t pair_index(Pair p) {
    return 3 * static_cast<size_t>(p[0]) + static_cast<size_t>(p[1]);
}

// Stable transition operator: 00<>y = y, 01 absorbing, 11<>y = complement,
// 10 absorbing. Rejects M (the closed form is diamond_m).
Pair diamond(Pair s, Pair b);

// Stable output operator: row 00 emits (max, min) of the bit pair, 10
// emits (g,h), 11 (min, max), 01 (h,g). Rejects M.
Pair out_op(Pair s, Pair b);

// Runs the comparison FSM over two binary words, emitting one output pair
// per position: returns (max word, min word) under the Gray-code order.
std::pair<Word, Word> fsm_sort2(const Word& g, const Word& h);

// Metastable closures, as frozen 9x9 lookup tables. The *_oracle forms
// recompute them through closure_eval; tests assert the two routes agree.
Pair diamond_m(Pair x, Pair y);
Pair out_m(Pair s, Pair b);
Pair diamond_m_oracle(Pair x, Pair y);
Pair out_m_oracle(Pair s, Pair b);

// N: invert the first component. The circuit carries states in this "hat"
// form so that NOT s_1 is available without an extra inverter per use.
Pair hat(Pair x);

// x hat-diamond y = N(Nx diamond_m Ny).
Pair hat_diamond_m(Pair x, Pair y);

// Closure of the i-step prefix fold over all resolutions of the length-i
// prefixes of g and h; i = 0 gives the initial state 00.
Pair prefix_state_oracle(const Word& g, const Word& h, size_t i);

}  // namespace mcsort
