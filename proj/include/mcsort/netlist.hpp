#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "mcsort/ternary.hpp"

namespace mcsort {

enum class GateKind : uint8_t { And, Or, Not, Const0, Const1 };

const char* kind_name(GateKind k);
std::optional<GateKind> kind_from_name(std::string_view s);
int kind_arity(GateKind k);  // 2, 2, 1, 0, 0

struct Gate {
    std::string id;
    GateKind kind = GateKind::And;
    std::vector<std::string> in;
};

// Flat combinational DAG over AND2/OR2/INV plus constant drivers. Signal
// ids are case-sensitive ASCII identifiers; outputsName a subset of
// signals. Gate order is arbitrary until validate_and_sort.
struct Netlist {
    std::string name;
    std::vector<std::string> inputs;
    std::vector<Gate> gates;
    std::vector<std::pair<std::string, std::string>> outputs;  // (port, signal)
};

struct Metrics {
    size_t count_and = 0;
    size_t count_or = 0;
    size_t count_not = 0;
    size_t count_const = 0;
    size_t total = 0;
    // Longest input-to-output path; every gate kind counts one level. A
    // stand-in for technology delay, which needs a cell library.
    size_t depth = 0;
};

class NetlistError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Returns an equivalent netlist with gates in topological order. Throws
// NetlistError naming the offending id on a cycle, duplicate definition,
// or dangling reference.
Netlist validate_and_sort(const Netlist& n);

Metrics metrics(const Netlist& n);

// Ternary evaluation in topological order; every input must be assigned.
std::map<std::string, Trit> simulate(const Netlist& n,
                                     const std::map<std::string, Trit>& assignment);

nlohmann::ordered_json to_json(const Netlist& n);
Netlist netlist_from_json(const nlohmann::ordered_json& j);  // validates

// Structural Verilog over NanGate-style cells (INV_X1, AND2_X1, OR2_X1,
// LOGIC0_X1, LOGIC1_X1). Identifiers that are not plain Verilog names get
// a deterministic rename, reported in a header comment.
std::string export_structural_hdl(const Netlist& n);

// Splices `sub` into `host` with every internal id prefixed; `bindings`
// maps sub inputs to existing host signals. Returns the host signals that
// now carry each sub output. The workhorse for composing comparator
// networks out of 2-sort blocks.
std::map<std::string, std::string> instantiate(
    Netlist& host, const Netlist& sub, const std::string& prefix,
    const std::map<std::string, std::string>& bindings);

}  // namespace mcsort
