#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "mcsort/fsm.hpp"
#include "mcsort/netlist.hpp"
#include "mcsort/networks.hpp"

namespace mcsort {

struct VerifyOptions {
    bool exhaustive = true;
    uint64_t samples = 0;  // random mode only
    uint64_t seed = 0;
    int threads = 1;  // 0 = hardware concurrency
};

struct Failure {
    std::vector<std::string> inputs;
    std::vector<std::string> expected;
    std::vector<std::string> actual;
};

// Full enumeration of failures is capped; failure_count still counts all.
constexpr size_t kFailureCap = 100;

// The fixed sampling procedure, embedded in every random-mode report so
// results are reproducible from the report alone.
extern const char* const kRngAlgorithm;

struct VerifyReport {
    std::string target;
    std::string mode;  // "exhaustive" or "random"
    uint64_t seed = 0;
    uint64_t samples = 0;
    uint64_t cases_run = 0;
    uint64_t failure_count = 0;
    std::vector<Failure> failures;  // first kFailureCap only
    Metrics circuit_metrics{};      // all-zero when no single circuit is under test
    std::string rng_algorithm;      // set in random mode

    bool pass() const { return failure_count == 0; }
};

// Compares simulate(build_two_sort(width)) against max_min_oracle over
// pairs from ValidRg(width)^2: all of them (exhaustive, width <= 8) or
// seeded samples (width <= 16). The _netlist form verifies a caller-built
// circuit with the same ports, used by the mutation controls.
VerifyReport verify_two_sort(int width, const VerifyOptions& opt);
VerifyReport verify_two_sort_netlist(const Netlist& nl, int width,
                                     const VerifyOptions& opt,
                                     const std::string& target = "");

// Compares an n-channel network against oracle_sort_valid over valid-word
// tuples, exhaustive or sampled as above.
VerifyReport verify_network(const ComparatorSchedule& s, int width,
                            const VerifyOptions& opt);
VerifyReport verify_network_netlist(const Netlist& nl, int channels, int width,
                                    const VerifyOptions& opt,
                                    const std::string& target = "");

// Runs every module-level invariant as one campaign: ternary algebra,
// Gray-code structure (including slice truncation), FSM theorems, netlist
// simulation properties, synthesized-circuit structure, network structure,
// plus determinism and mutation controls.
VerifyReport run_property_suites();

// Every result of folding diamond_m over the leaves, one entry per binary
// tree shape (Catalan(n-1) entries); order-invariance suites assert all
// entries are equal.
std::vector<Pair> all_tree_folds(const std::vector<Pair>& leaves);

// Mutation controls: swap the kind of the index-th AND/OR gate.
size_t swappable_gate_count(const Netlist& nl);
Netlist mutate_gate_kind(const Netlist& nl, size_t index);

nlohmann::ordered_json report_to_json(const VerifyReport& r);

}  // namespace mcsort
