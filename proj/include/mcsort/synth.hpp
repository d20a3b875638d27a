#pragma once

#include <string>
#include <utility>
#include <vector>

#include "mcsort/netlist.hpp"

namespace mcsort {

// A two-rail signal: a state pair or bit pair travelling through the
// circuit as two nets.
using SigPair = std::pair<std::string, std::string>;

// Number of operator blocks in the prefix tree: f(1) = 0,
// f(n) = f(ceil(n/2)) + (n-1 if n even else n-2); for powers of two this
// closes to 2n - log2 n - 2.
size_t ppc_op_count(size_t n);

// Upper bound on the prefix tree's operator-level depth: 2 ceil(log2 n) - 1
// for n > 1, 0 for n = 1. The recursive construction can beat this for
// non-powers of two; tests treat it as a bound, not an equality.
size_t predict_ppc_delay(size_t n);

struct PpcShape {
    size_t n = 0;
    size_t op_count = 0;
    size_t op_depth_levels = 0;  // exact, measured from the construction
};

PpcShape ppc_shape(size_t n);

// The four-gate selection cell (2 AND + 2 OR, depth 3):
//   f = OR(AND(b, OR(sel2, a)), AND(a, sel1))
// sel1 must carry the complement of the select literal; the figure's
// inversion bubble on that leg is materialized by the enclosing operator
// block, keeping the cell itself at four gates. With sel1 = NOT sel2 the
// cell is a closed multiplexer (sel2 = 1 picks b, sel2 = 0 picks a).
// Returns the output net.
std::string build_selection(Netlist& nl, const std::string& a, const std::string& b,
                            const std::string& sel1, const std::string& sel2,
                            const std::string& prefix);

// Operator block for the hat-transformed transition operator. x carries the
// accumulated state in hat form (NOT s_1, s_2), y the next letter in hat
// form (NOT b_1, b_2). Two selection cells plus two inverters (recovering
// b_1 from its negation, and negating b_2); 10 gates. The gate structure is
// copied from the reference construction, not re-derived: Boolean-equivalent
// rewrites can lose metastability containment.
SigPair build_hat_diamond_op(Netlist& nl, const SigPair& x, const SigPair& y,
                             const std::string& prefix);

// Output operator block: s_hat carries (NOT s_1, s_2), b the raw bit pair
// (g_i, h_i). Two selection cells plus two inverters (recovering s_1 and
// NOT s_2); 10 gates. First output is max_i, second min_i.
SigPair build_out_m(Netlist& nl, const SigPair& s_hat, const SigPair& b,
                    const std::string& prefix);

// Position-1 output stage: with the initial state hard-wired, the output
// block collapses to max_1 = OR(g_1, h_1), min_1 = AND(g_1, h_1).
SigPair build_base_out(Netlist& nl, const std::string& g1, const std::string& h1,
                       const std::string& prefix);

struct PpcStats {
    size_t op_blocks = 0;
    size_t op_depth_levels = 0;
};

// Parallel prefix over the hat-diamond operator: prefixes[i] = fold of
// deltas[0..i]. Recursive construction: pair adjacent inputs, recurse on
// ceil(n/2) (odd n passes the last delta straight through), then fill even
// positions with one bottom-level operator each.
std::vector<SigPair> build_ppc(Netlist& nl, const std::vector<SigPair>& deltas,
                               const std::string& prefix, PpcStats* stats = nullptr);

// The complete comparator: inputs g1..gB, h1..hB; outputs max1..maxB,
// min1..minB. Structure: B-1 shared input inverters NOT g_i feed the
// prefix tree over deltas (NOT g_i, h_i); the base stage handles position
// 1 and one output block per remaining position consumes the raw bit pair.
// Total gates: 10 f(B-1) + 11 (B-1) + 2.
Netlist build_two_sort(int width);

}  // namespace mcsort
