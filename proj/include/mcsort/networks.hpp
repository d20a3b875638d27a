#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "mcsort/gray.hpp"
#include "mcsort/netlist.hpp"

namespace mcsort {

// Layered comparator schedule; pairs within a layer act on disjoint
// channels, (i, j) always with i < j.
struct ComparatorSchedule {
    int channels = 0;
    std::vector<std::vector<std::pair<int, int>>> layers;

    size_t comparator_count() const;
};

// The embedded networks: the 4-channel classic (5 comparators, 3 layers),
// the 7-channel odd-even network (16, 6), a size-optimal 10-channel
// network (29 comparators) and a depth-optimal one (31 comparators,
// 7 layers). All are validated by the zero-one check in tests.
enum class BuiltinNetwork { Sort4, Sort7, Sort10Size, Sort10Depth };

ComparatorSchedule builtin_schedule(BuiltinNetwork v);

// Batcher odd-even mergesort for arbitrary channel counts; kept as the
// general-n extension beyond the embedded optimal networks.
ComparatorSchedule batcher_schedule(int channels);

// Zero-one principle: the schedule sorts everything iff it sorts all 2^n
// binary vectors (descending). Exhaustive; channels capped at 20.
bool validate_schedule(const ComparatorSchedule& s);

// One 2-sort(width) block per comparator. Comparator (i, j) routes the max
// word to channel i, so channel 0 ends up with the largest rank
// (descending); pass ascending = true to swap the wiring. Inputs are
// ch<k>_<bit>, outputs out<k>_<bit>, bit 1-based MSB-first.
Netlist build_n_sort(const ComparatorSchedule& s, int width, bool ascending = false);

// Reference behavior on valid words: stable sort by descending rank.
std::vector<ValidWord> oracle_sort_valid(std::vector<ValidWord> inputs);

// Schedule file codec: { "channels": n, "layers": [ [ [i,j], ... ], ... ] }.
nlohmann::ordered_json schedule_to_json(const ComparatorSchedule& s);
ComparatorSchedule schedule_from_json(const nlohmann::ordered_json& j);

}  // namespace mcsort
