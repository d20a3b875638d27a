#include "mcsort/synth.hpp"

#include <stdexcept>
#include <unordered_map>

#include "mcsort/gray.hpp"

namespace mcsort {

size_t ppc_op_count(size_t n) {
    if (n == 0) throw std::invalid_argument("ppc over zero inputs");
    if (n == 1) return 0;
    return ppc_op_count((n + 1) / 2) + (n % 2 == 0 ? n - 1 : n - 2);
}

size_t predict_ppc_delay(size_t n) {
    if (n <= 1) return 0;
    size_t lg = 0;
    while ((size_t{1} << lg) < n) ++lg;
    return 2 * lg - 1;
}

namespace {

std::string add_gate(Netlist& nl, GateKind kind, std::string id,
                     std::vector<std::string> in) {
    nl.gates.push_back({id, kind, std::move(in)});
    return id;
}

}  // namespace

std::string build_selection(Netlist& nl, const std::string& a, const std::string& b,
                            const std::string& sel1, const std::string& sel2,
                            const std::string& prefix) {
    auto or1 = add_gate(nl, GateKind::Or, prefix + "_or1", {sel2, a});
    auto and1 = add_gate(nl, GateKind::And, prefix + "_and1", {b, or1});
    auto and2 = add_gate(nl, GateKind::And, prefix + "_and2", {a, sel1});
    return add_gate(nl, GateKind::Or, prefix + "_or2", {and1, and2});
}

SigPair build_hat_diamond_op(Netlist& nl, const SigPair& x, const SigPair& y,
                             const std::string& prefix) {
    auto inv1 = add_gate(nl, GateKind::Not, prefix + "_inv1", {y.first});
    auto inv2 = add_gate(nl, GateKind::Not, prefix + "_inv2", {y.second});
    auto z1 = build_selection(nl, x.second, x.first, inv1, y.first, prefix + "_c1");
    auto z2 = build_selection(nl, x.second, x.first, inv2, y.second, prefix + "_c2");
    return {z1, z2};
}

SigPair build_out_m(Netlist& nl, const SigPair& s_hat, const SigPair& b,
                    const std::string& prefix) {
    auto inv1 = add_gate(nl, GateKind::Not, prefix + "_inv1", {s_hat.second});
    auto inv2 = add_gate(nl, GateKind::Not, prefix + "_inv2", {s_hat.first});
    auto mx = build_selection(nl, b.first, b.second, inv1, s_hat.first, prefix + "_c1");
    auto mn = build_selection(nl, b.second, b.first, inv2, s_hat.second, prefix + "_c2");
    return {mx, mn};
}

SigPair build_base_out(Netlist& nl, const std::string& g1, const std::string& h1,
                       const std::string& prefix) {
    auto mx = add_gate(nl, GateKind::Or, prefix + "_max", {g1, h1});
    auto mn = add_gate(nl, GateKind::And, prefix + "_min", {g1, h1});
    return {mx, mn};
}

namespace {

struct Leveled {
    SigPair sig;
    size_t level = 0;
};

std::vector<Leveled> ppc_rec(Netlist& nl, const std::vector<Leveled>& in,
                             const std::string& prefix, size_t& next_op,
                             PpcStats& stats) {
    size_t n = in.size();
    if (n == 1) return in;

    auto op = [&](const Leveled& x, const Leveled& y) {
        std::string p = prefix + "_op" + std::to_string(next_op++);
        Leveled r;
        r.sig = build_hat_diamond_op(nl, x.sig, y.sig, p);
        r.level = std::max(x.level, y.level) + 1;
        ++stats.op_blocks;
        stats.op_depth_levels = std::max(stats.op_depth_levels, r.level);
        return r;
    };

    std::vector<Leveled> mid_in;
    size_t pairs = n / 2;  // adjacent pairs; odd n leaves the last input unpaired
    mid_in.reserve((n + 1) / 2);
    for (size_t k = 0; k < pairs; ++k) mid_in.push_back(op(in[2 * k], in[2 * k + 1]));
    if (n % 2) mid_in.push_back(in[n - 1]);

    std::vector<Leveled> mid = ppc_rec(nl, mid_in, prefix, next_op, stats);

    std::vector<Leveled> out(n);
    out[0] = in[0];
    for (size_t k = 0; 2 * k + 1 < n; ++k) out[2 * k + 1] = mid[k];
    for (size_t k = 1; 2 * k + 1 < n; ++k) out[2 * k] = op(mid[k - 1], in[2 * k]);
    if (n % 2) out[n - 1] = mid.back();
    return out;
}

}  // namespace

std::vector<SigPair> build_ppc(Netlist& nl, const std::vector<SigPair>& deltas,
                               const std::string& prefix, PpcStats* stats) {
    if (deltas.empty()) throw std::invalid_argument("ppc over zero inputs");
    std::vector<Leveled> in;
    in.reserve(deltas.size());
    for (const auto& d : deltas) in.push_back({d, 0});
    size_t next_op = 0;
    PpcStats local;
    std::vector<Leveled> out = ppc_rec(nl, in, prefix, next_op, local);
    if (stats) *stats = local;
    std::vector<SigPair> sigs;
    sigs.reserve(out.size());
    for (const auto& o : out) sigs.push_back(o.sig);
    return sigs;
}

PpcShape ppc_shape(size_t n) {
    Netlist scratch;
    std::vector<SigPair> deltas;
    for (size_t i = 0; i < n; ++i) {
        std::string a = "a" + std::to_string(i);
        std::string b = "b" + std::to_string(i);
        scratch.inputs.push_back(a);
        scratch.inputs.push_back(b);
        deltas.emplace_back(a, b);
    }
    PpcStats stats;
    build_ppc(scratch, deltas, "p", &stats);
    return {n, stats.op_blocks, stats.op_depth_levels};
}

Netlist build_two_sort(int width) {
    if (width < kMinWidth || width > kMaxWidth)
        throw std::invalid_argument("width out of range");
    int b = width;
    Netlist nl;
    nl.name = "two_sort" + std::to_string(b);
    for (int i = 1; i <= b; ++i) nl.inputs.push_back("g" + std::to_string(i));
    for (int i = 1; i <= b; ++i) nl.inputs.push_back("h" + std::to_string(i));

    std::vector<std::string> outs_max(b), outs_min(b);
    SigPair base = build_base_out(nl, "g1", "h1", "base");
    outs_max[0] = base.first;
    outs_min[0] = base.second;

    if (b > 1) {
        std::vector<SigPair> deltas;
        for (int i = 1; i < b; ++i) {
            auto inv = add_gate(nl, GateKind::Not, "not_g" + std::to_string(i),
                                {"g" + std::to_string(i)});
            deltas.emplace_back(inv, "h" + std::to_string(i));
        }
        std::vector<SigPair> pis = build_ppc(nl, deltas, "ppc");
        for (int i = 2; i <= b; ++i) {
            SigPair o = build_out_m(nl, pis[i - 2],
                                    {"g" + std::to_string(i), "h" + std::to_string(i)},
                                    "out" + std::to_string(i));
            outs_max[i - 1] = o.first;
            outs_min[i - 1] = o.second;
        }
    }

    for (int i = 1; i <= b; ++i) nl.outputs.emplace_back("max" + std::to_string(i), outs_max[i - 1]);
    for (int i = 1; i <= b; ++i) nl.outputs.emplace_back("min" + std::to_string(i), outs_min[i - 1]);
    return validate_and_sort(nl);
}

}  // namespace mcsort
