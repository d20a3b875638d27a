#include "mcsort/networks.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "mcsort/synth.hpp"

namespace mcsort {

namespace {

using Layer = std::vector<std::pair<int, int>>;

ComparatorSchedule make_schedule(int channels, std::vector<Layer> layers) {
    ComparatorSchedule s;
    s.channels = channels;
    s.layers = std::move(layers);
    return s;
}

}  // namespace

size_t ComparatorSchedule::comparator_count() const {
    size_t n = 0;
    for (const auto& layer : layers) n += layer.size();
    return n;
}

ComparatorSchedule builtin_schedule(BuiltinNetwork v) {
    switch (v) {
        case BuiltinNetwork::Sort4:
            return make_schedule(4, {
                {{0, 1}, {2, 3}},
                {{0, 2}, {1, 3}},
                {{1, 2}},
            });
        case BuiltinNetwork::Sort7:
            return make_schedule(7, {
                {{0, 1}, {2, 3}, {4, 5}},
                {{0, 2}, {1, 3}, {4, 6}},
                {{1, 2}, {5, 6}, {0, 4}},
                {{2, 6}, {1, 5}},
                {{2, 4}, {3, 5}},
                {{1, 2}, {3, 4}, {5, 6}},
            });
        case BuiltinNetwork::Sort10Size:
            // 29-comparator network (best known size for 10 channels).
            return make_schedule(10, {
                {{4, 9}, {3, 8}, {2, 7}, {1, 6}, {0, 5}},
                {{1, 4}, {6, 9}, {0, 3}, {5, 8}},
                {{0, 2}, {3, 6}, {7, 9}},
                {{0, 1}, {2, 4}, {5, 7}, {8, 9}},
                {{1, 2}, {4, 6}, {7, 8}, {3, 5}},
                {{2, 5}, {6, 8}, {1, 3}, {4, 7}},
                {{2, 3}, {6, 7}},
                {{3, 4}, {5, 6}},
                {{4, 5}},
            });
        case BuiltinNetwork::Sort10Depth:
            // 31 comparators in 7 layers (optimal depth for 10 channels).
            return make_schedule(10, {
                {{0, 5}, {1, 7}, {2, 9}, {6, 8}},
                {{0, 6}, {1, 2}, {3, 4}, {5, 8}, {7, 9}},
                {{0, 1}, {2, 4}, {3, 7}, {5, 6}, {8, 9}},
                {{1, 3}, {2, 5}, {4, 8}, {6, 7}},
                {{1, 2}, {3, 6}, {4, 5}, {7, 8}},
                {{0, 1}, {2, 3}, {4, 6}, {5, 7}, {8, 9}},
                {{1, 2}, {3, 4}, {5, 6}, {7, 8}},
            });
    }
    throw std::invalid_argument("unknown builtin network");
}

// Knuth's merge-exchange formulation of Batcher's method; each inner
// round below touches disjoint channel pairs, so it forms one layer.
ComparatorSchedule batcher_schedule(int channels) {
    if (channels < 1) throw std::invalid_argument("channels must be >= 1");
    ComparatorSchedule s;
    s.channels = channels;
    if (channels == 1) return s;

    int t = 0;
    while ((1 << t) < channels) ++t;

    for (int p = 1 << (t - 1); p > 0; p >>= 1) {
        int q = 1 << (t - 1);
        int r = 0;
        int d = p;
        while (true) {
            Layer layer;
            for (int i = 0; i + d < channels; ++i) {
                if ((i & p) == r) layer.emplace_back(i, i + d);
            }
            if (!layer.empty()) s.layers.push_back(std::move(layer));
            if (q == p) break;
            d = q - p;
            q >>= 1;
            r = p;
        }
    }
    return s;
}

bool validate_schedule(const ComparatorSchedule& s) {
    const int n = s.channels;
    if (n < 1) return false;
    if (n > 20) throw std::invalid_argument("zero-one check capped at 20 channels");

    for (const auto& layer : s.layers) {
        std::set<int> used;
        for (auto [i, j] : layer) {
            if (i < 0 || j < 0 || i >= j || j >= n) return false;
            if (!used.insert(i).second || !used.insert(j).second) return false;
        }
    }

    // Zero-one principle, bit-parallel: lane v of channel k holds channel
    // k's value on binary test vector v; a descending comparator is then
    // an OR/AND pair on whole lane words.
    const uint64_t vectors = uint64_t{1} << n;
    const size_t blocks = size_t((vectors + 63) / 64);
    std::vector<std::vector<uint64_t>> ch(n, std::vector<uint64_t>(blocks, 0));
    static constexpr uint64_t kStripe[6] = {
        0xAAAAAAAAAAAAAAAAull, 0xCCCCCCCCCCCCCCCCull, 0xF0F0F0F0F0F0F0F0ull,
        0xFF00FF00FF00FF00ull, 0xFFFF0000FFFF0000ull, 0xFFFFFFFF00000000ull,
    };
    for (int k = 0; k < n; ++k) {
        for (size_t b = 0; b < blocks; ++b) {
            ch[k][b] = k < 6 ? kStripe[k]
                             : ((b >> (k - 6)) & 1 ? ~uint64_t{0} : uint64_t{0});
        }
    }
    if (vectors % 64 != 0) {
        const uint64_t tail_mask = (uint64_t{1} << (vectors % 64)) - 1;
        for (int k = 0; k < n; ++k) ch[k].back() &= tail_mask;
    }

    for (const auto& layer : s.layers) {
        for (auto [i, j] : layer) {
            for (size_t b = 0; b < blocks; ++b) {
                const uint64_t hi = ch[i][b] | ch[j][b];
                const uint64_t lo = ch[i][b] & ch[j][b];
                ch[i][b] = hi;
                ch[j][b] = lo;
            }
        }
    }

    for (int k = 0; k + 1 < n; ++k) {
        for (size_t b = 0; b < blocks; ++b) {
            if (~ch[k][b] & ch[k + 1][b]) return false;
        }
    }
    return true;
}

Netlist build_n_sort(const ComparatorSchedule& s, int width, bool ascending) {
    if (s.channels < 1) throw std::invalid_argument("schedule has no channels");
    if (width < kMinWidth || width > kMaxWidth)
        throw std::invalid_argument("unsupported word width");

    const Netlist cell = build_two_sort(width);

    Netlist nl;
    nl.name = "n_sort" + std::to_string(s.channels) + "x" + std::to_string(width);

    std::vector<std::vector<std::string>> cur(s.channels,
                                              std::vector<std::string>(width));
    for (int k = 0; k < s.channels; ++k) {
        for (int b = 0; b < width; ++b) {
            cur[k][b] = "ch" + std::to_string(k) + "_" + std::to_string(b + 1);
            nl.inputs.push_back(cur[k][b]);
        }
    }

    size_t c = 0;
    for (const auto& layer : s.layers) {
        for (auto [i, j] : layer) {
            std::map<std::string, std::string> bind;
            for (int b = 0; b < width; ++b) {
                bind["g" + std::to_string(b + 1)] = cur[i][b];
                bind["h" + std::to_string(b + 1)] = cur[j][b];
            }
            auto outs = instantiate(nl, cell, "cmp" + std::to_string(c) + "_", bind);
            ++c;
            const int hi = ascending ? j : i;
            const int lo = ascending ? i : j;
            for (int b = 0; b < width; ++b) {
                cur[hi][b] = outs.at("max" + std::to_string(b + 1));
                cur[lo][b] = outs.at("min" + std::to_string(b + 1));
            }
        }
    }

    for (int k = 0; k < s.channels; ++k) {
        for (int b = 0; b < width; ++b) {
            nl.outputs.emplace_back(
                "out" + std::to_string(k) + "_" + std::to_string(b + 1), cur[k][b]);
        }
    }
    return validate_and_sort(nl);
}

std::vector<ValidWord> oracle_sort_valid(std::vector<ValidWord> inputs) {
    std::stable_sort(inputs.begin(), inputs.end(),
                     [](const ValidWord& a, const ValidWord& b) {
                         return a.rank > b.rank;
                     });
    return inputs;
}

nlohmann::ordered_json schedule_to_json(const ComparatorSchedule& s) {
    nlohmann::ordered_json j;
    j["channels"] = s.channels;
    auto layers = nlohmann::ordered_json::array();
    for (const auto& layer : s.layers) {
        auto jl = nlohmann::ordered_json::array();
        for (auto [a, b] : layer) jl.push_back({a, b});
        layers.push_back(std::move(jl));
    }
    j["layers"] = std::move(layers);
    return j;
}

ComparatorSchedule schedule_from_json(const nlohmann::ordered_json& j) {
    ComparatorSchedule s;
    try {
        s.channels = j.at("channels").get<int>();
        for (const auto& jl : j.at("layers")) {
            Layer layer;
            for (const auto& jp : jl) {
                if (!jp.is_array() || jp.size() != 2)
                    throw NetlistError("malformed schedule document: pair must be [i, j]");
                layer.emplace_back(jp[0].get<int>(), jp[1].get<int>());
            }
            s.layers.push_back(std::move(layer));
        }
    } catch (const nlohmann::json::exception& e) {
        throw NetlistError(std::string("malformed schedule document: ") + e.what());
    }
    return s;
}

}  // namespace mcsort
