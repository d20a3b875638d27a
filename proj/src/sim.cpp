#include "mcsort/sim.hpp"

#include <unordered_map>

namespace mcsort {

CompiledNetlist::CompiledNetlist(const Netlist& n) {
    Netlist sorted = validate_and_sort(n);
    std::unordered_map<std::string, uint32_t> slot;
    input_names_ = sorted.inputs;
    for (const auto& in : sorted.inputs)
        slot.emplace(in, static_cast<uint32_t>(slot.size()));
    ops_.reserve(sorted.gates.size());
    for (const Gate& g : sorted.gates) {
        Op op;
        op.kind = g.kind;
        if (g.in.size() > 0) op.a = slot.at(g.in[0]);
        if (g.in.size() > 1) op.b = slot.at(g.in[1]);
        op.out = static_cast<uint32_t>(slot.size());
        slot.emplace(g.id, op.out);
        ops_.push_back(op);
    }
    slots_ = slot.size();
    for (const auto& [port, sig] : sorted.outputs) {
        output_names_.push_back(port);
        output_slots_.push_back(slot.at(sig));
    }
}

void Simulator::run(std::span<const Trit> inputs, std::span<Trit> outputs) {
    std::copy(inputs.begin(), inputs.end(), scratch_.begin());
    Trit* v = scratch_.data();
    for (const auto& op : c_.ops()) {
        switch (op.kind) {
            case GateKind::And: v[op.out] = t_and(v[op.a], v[op.b]); break;
            case GateKind::Or: v[op.out] = t_or(v[op.a], v[op.b]); break;
            case GateKind::Not: v[op.out] = t_not(v[op.a]); break;
            case GateKind::Const0: v[op.out] = Trit::Zero; break;
            case GateKind::Const1: v[op.out] = Trit::One; break;
        }
    }
    const auto& outs = c_.output_slots();
    for (size_t i = 0; i < outs.size(); ++i) outputs[i] = v[outs[i]];
}

void BatchSimulator::run(std::span<const TritBatch> inputs, std::span<TritBatch> outputs) {
    std::copy(inputs.begin(), inputs.end(), scratch_.begin());
    TritBatch* v = scratch_.data();
    for (const auto& op : c_.ops()) {
        TritBatch& z = v[op.out];
        switch (op.kind) {
            case GateKind::And:
                z.p0 = v[op.a].p0 | v[op.b].p0;
                z.p1 = v[op.a].p1 & v[op.b].p1;
                break;
            case GateKind::Or:
                z.p0 = v[op.a].p0 & v[op.b].p0;
                z.p1 = v[op.a].p1 | v[op.b].p1;
                break;
            case GateKind::Not:
                z = {v[op.a].p1, v[op.a].p0};
                break;
            case GateKind::Const0:
                z = {~uint64_t{0}, 0};
                break;
            case GateKind::Const1:
                z = {0, ~uint64_t{0}};
                break;
        }
    }
    const auto& outs = c_.output_slots();
    for (size_t i = 0; i < outs.size(); ++i) outputs[i] = v[outs[i]];
}

}  // namespace mcsort
