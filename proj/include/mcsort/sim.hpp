#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "mcsort/netlist.hpp"

namespace mcsort {

// Netlist compiled to an index-based op list, shared by both evaluation
// kernels. Signal slots: inputs first in declaration order, then one slot
// per gate in topological order.
class CompiledNetlist {
  public:
    explicit CompiledNetlist(const Netlist& n);  // sorts and validates

    size_t input_count() const { return input_names_.size(); }
    size_t output_count() const { return output_slots_.size(); }
    size_t slot_count() const { return slots_; }
    const std::vector<std::string>& input_names() const { return input_names_; }
    const std::vector<std::string>& output_names() const { return output_names_; }

    struct Op {
        GateKind kind;
        uint32_t a = 0, b = 0, out = 0;
    };
    const std::vector<Op>& ops() const { return ops_; }
    const std::vector<uint32_t>& output_slots() const { return output_slots_; }

  private:
    std::vector<std::string> input_names_;
    std::vector<std::string> output_names_;
    std::vector<uint32_t> output_slots_;
    std::vector<Op> ops_;
    size_t slots_ = 0;
};

// Reference kernel: one ternary case at a time.
class Simulator {
  public:
    explicit Simulator(const Netlist& n) : c_(n), scratch_(c_.slot_count()) {}
    explicit Simulator(CompiledNetlist c) : c_(std::move(c)), scratch_(c_.slot_count()) {}

    const CompiledNetlist& compiled() const { return c_; }

    // inputs.size() == input_count(), outputs.size() == output_count().
    void run(std::span<const Trit> inputs, std::span<Trit> outputs);

  private:
    CompiledNetlist c_;
    std::vector<Trit> scratch_;
};

// One signal across 64 independent lanes, dual-rail: p0 = "can resolve to
// 0", p1 = "can resolve to 1". 0 = (1,0), 1 = (0,1), M = (1,1). Bitwise
//   AND: p0 = a.p0 | b.p0, p1 = a.p1 & b.p1
//   OR:  p0 = a.p0 & b.p0, p1 = a.p1 | b.p1
//   NOT: swap planes
// which is exactly the metastable closure of each gate, 64 lanes per
// machine word. Equivalence with the scalar kernel is asserted by tests.
struct TritBatch {
    uint64_t p0 = 0, p1 = 0;

    void set(unsigned lane, Trit t) {
        uint64_t bit = uint64_t{1} << lane;
        p0 = t == Trit::One ? p0 & ~bit : p0 | bit;
        p1 = t == Trit::Zero ? p1 & ~bit : p1 | bit;
    }
    Trit get(unsigned lane) const {
        bool z = (p0 >> lane) & 1, o = (p1 >> lane) & 1;
        return z && o ? Trit::Meta : o ? Trit::One : Trit::Zero;
    }
};

class BatchSimulator {
  public:
    explicit BatchSimulator(const Netlist& n) : c_(n), scratch_(c_.slot_count()) {}
    explicit BatchSimulator(CompiledNetlist c) : c_(std::move(c)), scratch_(c_.slot_count()) {}

    const CompiledNetlist& compiled() const { return c_; }

    void run(std::span<const TritBatch> inputs, std::span<TritBatch> outputs);

  private:
    CompiledNetlist c_;
    std::vector<TritBatch> scratch_;
};

}  // namespace mcsort
