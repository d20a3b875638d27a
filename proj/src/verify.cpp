#include "mcsort/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <stdexcept>
#include <thread>
#include <unordered_map>

#include "mcsort/sim.hpp"
#include "mcsort/synth.hpp"

namespace mcsort {

const char* const kRngAlgorithm =
    "std::mt19937_64(seed); per-channel ranks by rejection sampling: take "
    "64-bit draws below 2^64 - (2^64 mod |ValidRg(B)|), reduce modulo "
    "|ValidRg(B)|; draws ordered case-major, channel-minor";

namespace {

uint64_t draw_below(std::mt19937_64& rng, uint64_t bound) {
    const uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % bound;
}

std::vector<uint32_t> port_positions(const std::vector<std::string>& names,
                                     const std::vector<std::string>& wanted) {
    std::unordered_map<std::string, uint32_t> at;
    for (uint32_t i = 0; i < names.size(); ++i) at.emplace(names[i], i);
    std::vector<uint32_t> pos;
    pos.reserve(wanted.size());
    for (const auto& w : wanted) {
        auto it = at.find(w);
        if (it == at.end()) throw NetlistError("netlist lacks port '" + w + "'");
        pos.push_back(it->second);
    }
    return pos;
}

// Expected channel outputs for one case, given the per-channel input ranks.
using Oracle = std::function<std::vector<Word>(const uint32_t*)>;

struct ShardOut {
    uint64_t fails = 0;
    std::vector<Failure> failures;
};

void run_shard(const CompiledNetlist& compiled, const std::vector<ValidWord>& vw,
               int channels, int width, const std::vector<uint32_t>& in_pos,
               const std::vector<uint32_t>& out_pos, const uint32_t* samples,
               uint64_t begin, uint64_t end, const Oracle& oracle, ShardOut& res) {
    BatchSimulator sim(compiled);
    std::vector<TritBatch> in(compiled.input_count());
    std::vector<TritBatch> out(compiled.output_count());
    const uint64_t v = vw.size();
    std::vector<uint32_t> ranks(size_t(channels) * 64);

    for (uint64_t base = begin; base < end; base += 64) {
        const auto lanes = unsigned(std::min<uint64_t>(64, end - base));
        for (unsigned l = 0; l < lanes; ++l) {
            uint32_t* r = &ranks[size_t(l) * channels];
            if (samples) {
                const uint32_t* s = samples + size_t(base + l) * size_t(channels);
                std::copy(s, s + channels, r);
            } else {
                uint64_t c = base + l;
                for (int k = channels - 1; k >= 0; --k) {
                    r[k] = uint32_t(c % v);
                    c /= v;
                }
            }
            for (int k = 0; k < channels; ++k) {
                const Word& w = vw[r[k]].word;
                for (int b = 0; b < width; ++b)
                    in[in_pos[size_t(k) * width + b]].set(l, w[b]);
            }
        }
        sim.run(in, out);
        for (unsigned l = 0; l < lanes; ++l) {
            const uint32_t* r = &ranks[size_t(l) * channels];
            std::vector<Word> actual(channels, Word(size_t(width)));
            for (int k = 0; k < channels; ++k)
                for (int b = 0; b < width; ++b)
                    actual[k][b] = out[out_pos[size_t(k) * width + b]].get(l);
            std::vector<Word> expect = oracle(r);
            if (actual != expect) {
                ++res.fails;
                if (res.failures.size() < kFailureCap) {
                    Failure f;
                    for (int k = 0; k < channels; ++k)
                        f.inputs.push_back(to_string(vw[r[k]].word));
                    for (const auto& w : expect) f.expected.push_back(to_string(w));
                    for (const auto& w : actual) f.actual.push_back(to_string(w));
                    res.failures.push_back(std::move(f));
                }
            }
        }
    }
}

VerifyReport run_campaign(
    const Netlist& nl, int channels, int width, const VerifyOptions& opt,
    std::string target, const std::vector<std::string>& in_ports,
    const std::vector<std::string>& out_ports,
    const std::function<std::vector<Word>(const std::vector<ValidWord>&, const uint32_t*)>&
        oracle_fn) {
    VerifyReport r;
    r.target = std::move(target);
    r.circuit_metrics = metrics(nl);

    const std::vector<ValidWord> vw = enumerate_valid(width);
    const uint64_t v = vw.size();

    uint64_t total = 0;
    std::vector<uint32_t> samples;
    if (opt.exhaustive) {
        r.mode = "exhaustive";
        total = 1;
        for (int k = 0; k < channels; ++k) {
            if (total > (uint64_t{1} << 23) / v)
                throw std::invalid_argument("exhaustive case space too large");
            total *= v;
        }
    } else {
        r.mode = "random";
        r.seed = opt.seed;
        r.samples = opt.samples;
        r.rng_algorithm = kRngAlgorithm;
        if (opt.samples == 0) throw std::invalid_argument("random mode needs samples > 0");
        total = opt.samples;
        std::mt19937_64 rng(opt.seed);
        samples.resize(size_t(total) * channels);
        for (auto& s : samples) s = uint32_t(draw_below(rng, v));
    }
    r.cases_run = total;

    const CompiledNetlist compiled(nl);
    const auto in_pos = port_positions(compiled.input_names(), in_ports);
    const auto out_pos = port_positions(compiled.output_names(), out_ports);

    const Oracle oracle = [&](const uint32_t* ranks) { return oracle_fn(vw, ranks); };
    const uint32_t* sample_ptr = samples.empty() ? nullptr : samples.data();

    const uint64_t groups = (total + 63) / 64;
    auto threads = opt.threads == 0
                       ? std::max(1u, std::thread::hardware_concurrency())
                       : unsigned(opt.threads);
    threads = unsigned(std::min<uint64_t>(threads, std::max<uint64_t>(groups, 1)));

    std::vector<ShardOut> outs(threads);
    if (threads <= 1) {
        run_shard(compiled, vw, channels, width, in_pos, out_pos, sample_ptr, 0, total,
                  oracle, outs[0]);
    } else {
        // Shards split on 64-case boundaries; the sample stream is fully
        // materialized up front, so the report is identical for any count.
        const uint64_t per = (groups + threads - 1) / threads * 64;
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t) {
            const uint64_t b = std::min(uint64_t(t) * per, total);
            const uint64_t e = std::min(b + per, total);
            pool.emplace_back([&, b, e, t] {
                run_shard(compiled, vw, channels, width, in_pos, out_pos, sample_ptr, b,
                          e, oracle, outs[t]);
            });
        }
        for (auto& th : pool) th.join();
    }

    for (auto& s : outs) {
        r.failure_count += s.fails;
        for (auto& f : s.failures)
            if (r.failures.size() < kFailureCap) r.failures.push_back(std::move(f));
    }
    return r;
}

}  // namespace

VerifyReport verify_two_sort_netlist(const Netlist& nl, int width,
                                     const VerifyOptions& opt,
                                     const std::string& target) {
    if (width < 1) throw std::invalid_argument("width must be >= 1");
    if (opt.exhaustive && width > 8)
        throw std::invalid_argument("exhaustive two-sort verification capped at width 8");
    if (!opt.exhaustive && width > 16)
        throw std::invalid_argument("random two-sort verification capped at width 16");

    std::vector<std::string> in_ports, out_ports;
    for (int b = 1; b <= width; ++b) in_ports.push_back("g" + std::to_string(b));
    for (int b = 1; b <= width; ++b) in_ports.push_back("h" + std::to_string(b));
    for (int b = 1; b <= width; ++b) out_ports.push_back("max" + std::to_string(b));
    for (int b = 1; b <= width; ++b) out_ports.push_back("min" + std::to_string(b));

    auto oracle = [](const std::vector<ValidWord>& vw, const uint32_t* r) {
        auto [mx, mn] = max_min_oracle(vw[r[0]].word, vw[r[1]].word);
        return std::vector<Word>{std::move(mx), std::move(mn)};
    };
    const std::string t =
        target.empty() ? "two-sort(B=" + std::to_string(width) + ")" : target;
    return run_campaign(nl, 2, width, opt, t, in_ports, out_ports, oracle);
}

VerifyReport verify_two_sort(int width, const VerifyOptions& opt) {
    return verify_two_sort_netlist(build_two_sort(width), width, opt);
}

VerifyReport verify_network_netlist(const Netlist& nl, int channels, int width,
                                    const VerifyOptions& opt,
                                    const std::string& target) {
    if (channels < 1) throw std::invalid_argument("channels must be >= 1");
    if (width < 1) throw std::invalid_argument("width must be >= 1");
    if (!opt.exhaustive && width > 16)
        throw std::invalid_argument("random network verification capped at width 16");

    std::vector<std::string> in_ports, out_ports;
    for (int k = 0; k < channels; ++k)
        for (int b = 1; b <= width; ++b)
            in_ports.push_back("ch" + std::to_string(k) + "_" + std::to_string(b));
    for (int k = 0; k < channels; ++k)
        for (int b = 1; b <= width; ++b)
            out_ports.push_back("out" + std::to_string(k) + "_" + std::to_string(b));

    auto oracle = [channels](const std::vector<ValidWord>& vw, const uint32_t* r) {
        std::vector<ValidWord> ins;
        ins.reserve(size_t(channels));
        for (int k = 0; k < channels; ++k) ins.push_back(vw[r[k]]);
        std::vector<Word> words;
        words.reserve(size_t(channels));
        for (auto& s : oracle_sort_valid(std::move(ins))) words.push_back(std::move(s.word));
        return words;
    };
    const std::string t = target.empty()
                              ? "network(n=" + std::to_string(channels) +
                                    ", B=" + std::to_string(width) + ")"
                              : target;
    return run_campaign(nl, channels, width, opt, t, in_ports, out_ports, oracle);
}

VerifyReport verify_network(const ComparatorSchedule& s, int width,
                            const VerifyOptions& opt) {
    const Netlist nl = build_n_sort(s, width);
    const std::string t = "network(n=" + std::to_string(s.channels) +
                          ", comparators=" + std::to_string(s.comparator_count()) +
                          ", B=" + std::to_string(width) + ")";
    return verify_network_netlist(nl, s.channels, width, opt, t);
}

namespace {

std::vector<Pair> tree_folds_range(const std::vector<Pair>& leaves, size_t lo,
                                   size_t hi) {
    if (hi - lo == 1) return {leaves[lo]};
    std::vector<Pair> res;
    for (size_t k = lo + 1; k < hi; ++k) {
        const auto left = tree_folds_range(leaves, lo, k);
        const auto right = tree_folds_range(leaves, k, hi);
        for (const auto& a : left)
            for (const auto& b : right) res.push_back(diamond_m(a, b));
    }
    return res;
}

}  // namespace

std::vector<Pair> all_tree_folds(const std::vector<Pair>& leaves) {
    if (leaves.empty()) throw std::invalid_argument("no leaves");
    return tree_folds_range(leaves, 0, leaves.size());
}

size_t swappable_gate_count(const Netlist& nl) {
    size_t n = 0;
    for (const auto& g : nl.gates)
        if (g.kind == GateKind::And || g.kind == GateKind::Or) ++n;
    return n;
}

Netlist mutate_gate_kind(const Netlist& nl, size_t index) {
    Netlist m = nl;
    size_t seen = 0;
    for (auto& g : m.gates) {
        if (g.kind != GateKind::And && g.kind != GateKind::Or) continue;
        if (seen++ == index) {
            g.kind = g.kind == GateKind::And ? GateKind::Or : GateKind::And;
            m.name += "_mut" + std::to_string(index);
            return m;
        }
    }
    throw std::out_of_range("mutation index out of range");
}

nlohmann::ordered_json report_to_json(const VerifyReport& r) {
    nlohmann::ordered_json j;
    j["target"] = r.target;
    j["mode"] = r.mode;
    if (r.mode == "random") {
        j["seed"] = r.seed;
        j["samples"] = r.samples;
        j["rng_algorithm"] = r.rng_algorithm;
    }
    j["cases_run"] = r.cases_run;
    j["failure_count"] = r.failure_count;
    j["pass"] = r.pass();
    auto fails = nlohmann::ordered_json::array();
    for (const auto& f : r.failures)
        fails.push_back({{"inputs", f.inputs}, {"expected", f.expected}, {"actual", f.actual}});
    j["failures"] = std::move(fails);
    j["metrics"] = {{"and", r.circuit_metrics.count_and},
                    {"or", r.circuit_metrics.count_or},
                    {"not", r.circuit_metrics.count_not},
                    {"const", r.circuit_metrics.count_const},
                    {"total", r.circuit_metrics.total},
                    {"depth", r.circuit_metrics.depth}};
    return j;
}

// ---------------------------------------------------------------------------
// Property suites
// ---------------------------------------------------------------------------

namespace {

class Suite {
  public:
    Suite(VerifyReport& r, std::string name) : r_(r), name_(std::move(name)) {}

    void check(bool ok, const std::string& what, const std::string& expected,
               const std::string& actual) {
        ++r_.cases_run;
        if (ok) return;
        ++r_.failure_count;
        if (r_.failures.size() < kFailureCap)
            r_.failures.push_back({{name_ + ": " + what}, {expected}, {actual}});
    }

    void equal_words(const Word& expected, const Word& actual, const std::string& what) {
        check(expected == actual, what, to_string(expected), to_string(actual));
    }

    // Folds a sub-campaign into this report under the suite's name.
    void absorb(const VerifyReport& sub) {
        r_.cases_run += sub.cases_run;
        r_.failure_count += sub.failure_count;
        for (const auto& f : sub.failures) {
            if (r_.failures.size() >= kFailureCap) break;
            Failure g = f;
            g.inputs.insert(g.inputs.begin(), name_ + ": " + sub.target);
            r_.failures.push_back(std::move(g));
        }
    }

  private:
    VerifyReport& r_;
    std::string name_;
};

Trit closed_gate(GateKind k, Trit a, Trit b) {
    auto f = [k](const std::vector<Word>& xs) {
        const bool x = xs[0][0] == Trit::One;
        const bool y = xs.size() > 1 && xs[1][0] == Trit::One;
        bool r = false;
        switch (k) {
            case GateKind::And: r = x && y; break;
            case GateKind::Or: r = x || y; break;
            case GateKind::Not: r = !x; break;
            default: throw std::invalid_argument("not a logic gate");
        }
        return Word{r ? Trit::One : Trit::Zero};
    };
    std::vector<Word> args{Word{a}};
    if (k != GateKind::Not) args.push_back(Word{b});
    return closure_eval(f, args)[0];
}

// Closed two-bit modular adder: the non-associativity control.
Word closed_add(const Word& a, const Word& b) {
    auto f = [](const std::vector<Word>& xs) {
        auto val = [](const Word& w) {
            return (unsigned(w[0] == Trit::One) << 1) | unsigned(w[1] == Trit::One);
        };
        const unsigned s = (val(xs[0]) + val(xs[1])) & 3u;
        return Word{s & 2u ? Trit::One : Trit::Zero, s & 1u ? Trit::One : Trit::Zero};
    };
    return closure_eval(f, {a, b});
}

const std::array<Trit, 3> kTrits{Trit::Zero, Trit::One, Trit::Meta};

std::string pair_str(Pair p) { return to_string(Word{p[0], p[1]}); }

// Boolean evaluator kept deliberately naive (string-keyed map, bool
// domain): an independent route against the compiled simulators.
std::map<std::string, bool> naive_bool_eval(const Netlist& sorted,
                                            const std::map<std::string, bool>& in) {
    std::map<std::string, bool> val = in;
    for (const auto& g : sorted.gates) {
        switch (g.kind) {
            case GateKind::And: val[g.id] = val.at(g.in[0]) && val.at(g.in[1]); break;
            case GateKind::Or: val[g.id] = val.at(g.in[0]) || val.at(g.in[1]); break;
            case GateKind::Not: val[g.id] = !val.at(g.in[0]); break;
            case GateKind::Const0: val[g.id] = false; break;
            case GateKind::Const1: val[g.id] = true; break;
        }
    }
    std::map<std::string, bool> out;
    for (const auto& [port, sig] : sorted.outputs) out[port] = val.at(sig);
    return out;
}

Netlist random_netlist(std::mt19937_64& rng) {
    Netlist nl;
    nl.name = "rand";
    const int ni = 3 + int(rng() % 4);
    for (int i = 0; i < ni; ++i) nl.inputs.push_back("i" + std::to_string(i));
    std::vector<std::string> sigs = nl.inputs;
    const int m = 5 + int(rng() % 21);
    for (int j = 0; j < m; ++j) {
        Gate g;
        g.id = "n" + std::to_string(j);
        const unsigned pick = unsigned(rng() % 8);
        g.kind = pick < 3   ? GateKind::And
                 : pick < 6 ? GateKind::Or
                 : pick < 7 ? GateKind::Not
                 : (rng() & 1 ? GateKind::Const1 : GateKind::Const0);
        for (int t = 0; t < kind_arity(g.kind); ++t)
            g.in.push_back(sigs[rng() % sigs.size()]);
        nl.gates.push_back(g);
        sigs.push_back(g.id);
    }
    const int no = 1 + int(rng() % 3);
    for (int o = 0; o < no; ++o)
        nl.outputs.emplace_back("o" + std::to_string(o), sigs[rng() % sigs.size()]);
    return validate_and_sort(nl);
}

// Bits i..j (1-based, inclusive) of each codeword in ascending order, with
// immediate repetitions removed.
std::vector<Word> dedup_slices(int width, int i, int j) {
    std::vector<Word> out;
    for (uint64_t x = 0; x < (uint64_t{1} << width); ++x) {
        const Word w = gray_encode(x, width);
        Word slice(w.begin() + (i - 1), w.begin() + j);
        if (out.empty() || out.back() != slice) out.push_back(std::move(slice));
    }
    return out;
}

// What the deduplicated slice sequence must be: the (j-i+1)-bit code read
// up, then down, then up again, 2^{i-1} runs total, turning points not
// repeated.
std::vector<Word> zigzag_code(int i, int j) {
    const int k = j - i + 1;
    const uint64_t span = (uint64_t{1} << k) - 1;
    const uint64_t runs = uint64_t{1} << (i - 1);
    const uint64_t period = 2 * span;
    std::vector<Word> out;
    out.reserve(size_t(runs * span + 1));
    for (uint64_t t = 0; t <= runs * span; ++t) {
        const uint64_t r = t % period;
        out.push_back(gray_encode(r <= span ? r : period - r, k));
    }
    return out;
}

void suite_ternary(VerifyReport& rep) {
    Suite s(rep, "ternary gate algebra");
    for (Trit a : {Trit::Zero, Trit::One})
        for (Trit b : {Trit::Zero, Trit::One}) {
            const bool x = a == Trit::One, y = b == Trit::One;
            s.check(t_and(a, b) == ((x && y) ? Trit::One : Trit::Zero), "binary and",
                    "bool", std::string(1, to_char(t_and(a, b))));
            s.check(t_or(a, b) == ((x || y) ? Trit::One : Trit::Zero), "binary or",
                    "bool", std::string(1, to_char(t_or(a, b))));
        }
    for (Trit a : {Trit::Zero, Trit::One})
        s.check(t_not(a) == (a == Trit::One ? Trit::Zero : Trit::One), "binary not",
                "bool", std::string(1, to_char(t_not(a))));

    for (Trit a : kTrits) {
        s.check(t_not(a) == closed_gate(GateKind::Not, a, a), "not closure",
                std::string(1, to_char(closed_gate(GateKind::Not, a, a))),
                std::string(1, to_char(t_not(a))));
        for (Trit b : kTrits) {
            s.check(t_and(a, b) == closed_gate(GateKind::And, a, b), "and closure",
                    std::string(1, to_char(closed_gate(GateKind::And, a, b))),
                    std::string(1, to_char(t_and(a, b))));
            s.check(t_or(a, b) == closed_gate(GateKind::Or, a, b), "or closure",
                    std::string(1, to_char(closed_gate(GateKind::Or, a, b))),
                    std::string(1, to_char(t_or(a, b))));
        }
    }

    Suite rt(rep, "resolution round trip");
    for (int w = 1; w <= 8; ++w) {
        uint64_t words = 1;
        for (int i = 0; i < w; ++i) words *= 3;
        Word x(size_t(w), Trit::Zero);
        for (uint64_t code = 0; code < words; ++code) {
            uint64_t c = code;
            for (int b = 0; b < w; ++b) {
                x[size_t(b)] = kTrits[c % 3];
                c /= 3;
            }
            rt.equal_words(x, superpose(resolutions(x)), "superpose(res(x)) = x");
        }
    }
    std::mt19937_64 rng(12345);
    for (int it = 0; it < 500; ++it) {
        const int w = 1 + int(rng() % 6);
        std::vector<Word> set;
        const int n = 1 + int(rng() % 8);
        for (int e = 0; e < n; ++e) {
            Word x(static_cast<size_t>(w));
            for (auto& t : x) t = rng() & 1 ? Trit::One : Trit::Zero;
            set.push_back(std::move(x));
        }
        const Word sup = superpose(set);
        bool ok = true;
        for (const auto& m : set)
            for (int b = 0; b < w; ++b)
                if (sup[size_t(b)] != Trit::Meta && sup[size_t(b)] != m[size_t(b)]) ok = false;
        rt.check(ok, "members within resolutions of superposition", "subset",
                 "violation");
    }
}

void suite_gray(VerifyReport& rep) {
    Suite bij(rep, "gray bijection");
    for (int b = 1; b <= 16; ++b)
        for (uint64_t x = 0; x < (uint64_t{1} << b); ++x)
            bij.check(gray_decode(gray_encode(x, b)) == x, "decode(encode)",
                      std::to_string(x), std::to_string(gray_decode(gray_encode(x, b))));

    Suite adj(rep, "gray adjacency");
    for (int b = 1; b <= 12; ++b) {
        for (uint64_t x = 0; x + 1 < (uint64_t{1} << b); ++x) {
            const Word u = gray_encode(x, b), w = gray_encode(x + 1, b);
            int diff = 0;
            for (int i = 0; i < b; ++i) diff += u[size_t(i)] != w[size_t(i)];
            adj.check(diff == 1, "one-bit step at x=" + std::to_string(x), "1",
                      std::to_string(diff));
        }
    }

    Suite en(rep, "valid enumeration");
    for (int b = 1; b <= 10; ++b) {
        const auto vw = enumerate_valid(b);
        en.check(vw.size() == valid_count(b), "count width " + std::to_string(b),
                 std::to_string(valid_count(b)), std::to_string(vw.size()));
        for (size_t i = 0; i < vw.size(); ++i) {
            en.check(vw[i].rank == i, "rank ascending", std::to_string(i),
                     std::to_string(vw[i].rank));
            const auto rk = valid_rank(vw[i].word);
            en.check(rk && *rk == i, "valid_rank round trip", std::to_string(i),
                     rk ? std::to_string(*rk) : "invalid");
            en.equal_words(vw[i].word, word_from_rank(i, b), "word_from_rank");
        }
    }

    Suite sub(rep, "substring closure");
    for (int b = 1; b <= 8; ++b) {
        for (const auto& vwd : enumerate_valid(b)) {
            for (int i = 1; i <= b; ++i)
                for (int j = i; j <= b; ++j) {
                    const Word slice(vwd.word.begin() + (i - 1), vwd.word.begin() + j);
                    sub.check(valid_rank(slice).has_value(),
                              "slice " + std::to_string(i) + ".." + std::to_string(j) +
                                  " of " + to_string(vwd.word),
                              "valid", "invalid");
                }
        }
    }

    Suite tr(rep, "slice truncation");
    for (int b = 2; b <= 8; ++b) {
        for (int i = 1; i < b; ++i)
            for (int j = i + 1; j <= b; ++j) {
                const auto got = dedup_slices(b, i, j);
                const auto want = zigzag_code(i, j);
                tr.check(got == want,
                         "dedup slices " + std::to_string(i) + ".." + std::to_string(j) +
                             " width " + std::to_string(b),
                         "zigzag of " + std::to_string(want.size()),
                         got == want ? "match" : "sequence of " + std::to_string(got.size()));
            }
    }

    Suite ord(rep, "order equivalence");
    for (int b = 1; b <= 6; ++b) {
        const auto vw = enumerate_valid(b);
        for (const auto& g : vw)
            for (const auto& h : vw) {
                const auto [mx, mn] = max_min_oracle(g.word, h.word);
                const auto& emax = g.rank >= h.rank ? g.word : h.word;
                const auto& emin = g.rank >= h.rank ? h.word : g.word;
                ord.equal_words(emax, mx, "max by rank");
                ord.equal_words(emin, mn, "min by rank");
            }
    }
}

void suite_fsm(VerifyReport& rep) {
    Suite assoc(rep, "diamond associativity");
    const std::array<Pair, 4> bins{Pair{Trit::Zero, Trit::Zero}, Pair{Trit::Zero, Trit::One},
                                   Pair{Trit::One, Trit::Zero}, Pair{Trit::One, Trit::One}};
    for (Pair a : bins)
        for (Pair b : bins)
            for (Pair c : bins)
                assoc.check(diamond(diamond(a, b), c) == diamond(a, diamond(b, c)),
                            "(a<>b)<>c = a<>(b<>c) at " + pair_str(a) + "," + pair_str(b) +
                                "," + pair_str(c),
                            pair_str(diamond(a, diamond(b, c))),
                            pair_str(diamond(diamond(a, b), c)));

    Suite tables(rep, "closure table routes");
    for (Trit a1 : kTrits)
        for (Trit a2 : kTrits)
            for (Trit b1 : kTrits)
                for (Trit b2 : kTrits) {
                    const Pair x{a1, a2}, y{b1, b2};
                    tables.check(diamond_m(x, y) == diamond_m_oracle(x, y),
                                 "diamond_m table at " + pair_str(x) + "," + pair_str(y),
                                 pair_str(diamond_m_oracle(x, y)), pair_str(diamond_m(x, y)));
                    tables.check(out_m(x, y) == out_m_oracle(x, y),
                                 "out_m table at " + pair_str(x) + "," + pair_str(y),
                                 pair_str(out_m_oracle(x, y)), pair_str(out_m(x, y)));
                }

    Suite paren(rep, "parenthesization invariance");
    for (int b = 2; b <= 6; ++b) {
        const auto vw = enumerate_valid(b);
        for (const auto& g : vw)
            for (const auto& h : vw) {
                std::vector<Pair> leaves(static_cast<size_t>(b));
                for (int i = 0; i < b; ++i) leaves[size_t(i)] = {g.word[size_t(i)], h.word[size_t(i)]};
                const Pair want = prefix_state_oracle(g.word, h.word, size_t(b));
                for (const Pair got : all_tree_folds(leaves))
                    paren.check(got == want,
                                "tree fold over " + to_string(g.word) + "," + to_string(h.word),
                                pair_str(want), pair_str(got));
            }
    }

    Suite decomp(rep, "prefix decomposition");
    for (int b = 1; b <= 6; ++b) {
        const auto vw = enumerate_valid(b);
        for (const auto& g : vw)
            for (const auto& h : vw) {
                const auto [mx, mn] = max_min_oracle(g.word, h.word);
                for (int i = 1; i <= b; ++i) {
                    const Pair st = prefix_state_oracle(g.word, h.word, size_t(i) - 1);
                    const Pair o = out_m(st, {g.word[size_t(i) - 1], h.word[size_t(i) - 1]});
                    decomp.check(o[0] == mx[size_t(i) - 1] && o[1] == mn[size_t(i) - 1],
                                 "position " + std::to_string(i) + " of " +
                                     to_string(g.word) + "," + to_string(h.word),
                                 std::string(1, to_char(mx[size_t(i) - 1])) +
                                     to_char(mn[size_t(i) - 1]),
                                 pair_str(o));
                }
            }
    }

    Suite adder(rep, "mod-4 adder control");
    const Word a0 = parse_word("0M"), a1 = parse_word("01");
    const Word left = closed_add(closed_add(a0, a1), a1);
    const Word right = closed_add(a0, closed_add(a1, a1));
    adder.equal_words(parse_word("MM"), left, "left association");
    adder.equal_words(parse_word("1M"), right, "right association");
    adder.check(left != right, "order dependence", "MM != 1M", "equal");

    Suite hatf(rep, "hat fold consistency");
    for (int b = 1; b <= 6; ++b) {
        const auto vw = enumerate_valid(b);
        for (const auto& g : vw)
            for (const auto& h : vw) {
                Pair acc = hat({g.word[0], h.word[0]});
                for (int i = 1; i < b; ++i)
                    acc = hat_diamond_m(acc, hat({g.word[size_t(i)], h.word[size_t(i)]}));
                const Pair want = hat(prefix_state_oracle(g.word, h.word, size_t(b)));
                hatf.check(acc == want,
                           "hat fold over " + to_string(g.word) + "," + to_string(h.word),
                           pair_str(want), pair_str(acc));
            }
    }
}

void suite_blocks(VerifyReport& rep) {
    Suite s(rep, "operator block closure");

    Netlist dnl;
    dnl.name = "hat_diamond_block";
    dnl.inputs = {"x1", "x2", "y1", "y2"};
    const SigPair dz = build_hat_diamond_op(dnl, {"x1", "x2"}, {"y1", "y2"}, "op");
    dnl.outputs = {{"z1", dz.first}, {"z2", dz.second}};
    Simulator dsim(dnl);

    Netlist onl;
    onl.name = "out_block";
    onl.inputs = {"s1", "s2", "b1", "b2"};
    const SigPair oz = build_out_m(onl, {"s1", "s2"}, {"b1", "b2"}, "op");
    onl.outputs = {{"mx", oz.first}, {"mn", oz.second}};
    Simulator osim(onl);

    std::array<Trit, 4> in{};
    std::array<Trit, 2> out{};
    for (Trit a1 : kTrits)
        for (Trit a2 : kTrits)
            for (Trit b1 : kTrits)
                for (Trit b2 : kTrits) {
                    const Pair x{a1, a2}, y{b1, b2};

                    // Block computes N(Nx diamond_M Ny) on hat-form wires.
                    const Pair xh = hat(x), yh = hat(y);
                    in = {xh[0], xh[1], yh[0], yh[1]};
                    dsim.run(in, out);
                    const Pair dwant = hat(diamond_m_oracle(x, y));
                    s.check(out[0] == dwant[0] && out[1] == dwant[1],
                            "hat diamond block at " + pair_str(x) + "," + pair_str(y),
                            pair_str(dwant), pair_str({out[0], out[1]}));

                    // Output block takes the state in hat form, bits raw.
                    in = {xh[0], xh[1], y[0], y[1]};
                    osim.run(in, out);
                    const Pair owant = out_m_oracle(x, y);
                    s.check(out[0] == owant[0] && out[1] == owant[1],
                            "out block at " + pair_str(x) + "," + pair_str(y),
                            pair_str(owant), pair_str({out[0], out[1]}));
                }
}

void suite_netlist(VerifyReport& rep) {
    Suite mono(rep, "simulation monotonicity");
    Suite agree(rep, "boolean agreement");
    std::mt19937_64 rng(777);
    for (int t = 0; t < 30; ++t) {
        const Netlist nl = random_netlist(rng);
        for (int a = 0; a < 20; ++a) {
            std::map<std::string, Trit> asg, resolved;
            bool binary = true;
            for (const auto& in : nl.inputs) {
                const Trit v = kTrits[rng() % 3];
                asg[in] = v;
                if (v != Trit::Meta) {
                    resolved[in] = v;
                    continue;
                }
                binary = false;
                switch (rng() % 3) {
                    case 0: resolved[in] = Trit::Meta; break;
                    case 1: resolved[in] = Trit::Zero; break;
                    default: resolved[in] = Trit::One; break;
                }
            }
            const auto base = simulate(nl, asg);
            const auto refined = simulate(nl, resolved);
            bool ok = true;
            for (const auto& [port, v] : base)
                if (v != Trit::Meta && refined.at(port) != v) ok = false;
            mono.check(ok, "resolving inputs never flips a settled output", "consistent",
                       "flip");

            if (binary) {
                std::map<std::string, bool> bin;
                for (const auto& [k, v] : asg) bin[k] = v == Trit::One;
                const auto want = naive_bool_eval(nl, bin);
                bool same = true;
                for (const auto& [port, v] : base)
                    if ((v == Trit::One) != want.at(port) || v == Trit::Meta) same = false;
                agree.check(same, "ternary vs boolean evaluation", "agree", "disagree");
            }
        }
    }

    Suite closure(rep, "valid-input closure");
    for (int b = 1; b <= 5; ++b) {
        const Netlist nl = build_two_sort(b);
        Simulator sim(nl);
        const auto vw = enumerate_valid(b);
        const size_t width = size_t(b);
        std::vector<Trit> in(2 * width);
        std::vector<Trit> out(2 * width);
        for (const auto& g : vw)
            for (const auto& h : vw) {
                std::copy(g.word.begin(), g.word.end(), in.begin());
                std::copy(h.word.begin(), h.word.end(), in.begin() + long(width));
                sim.run(in, out);
                const Word direct(out.begin(), out.end());

                std::vector<Word> resolved_runs;
                for (const Word& gr : resolutions(g.word))
                    for (const Word& hr : resolutions(h.word)) {
                        std::copy(gr.begin(), gr.end(), in.begin());
                        std::copy(hr.begin(), hr.end(), in.begin() + long(width));
                        sim.run(in, out);
                        resolved_runs.emplace_back(out.begin(), out.end());
                    }
                closure.equal_words(superpose(resolved_runs), direct,
                                    "two-sort closure at " + to_string(g.word) + "," +
                                        to_string(h.word));
            }
    }
}

void suite_synth(VerifyReport& rep) {
    Suite gc(rep, "gate count formulas");
    for (int b = 1; b <= 16; ++b) {
        const Metrics m = metrics(build_two_sort(b));
        const size_t f = b > 1 ? ppc_op_count(size_t(b) - 1) : 0;
        const size_t total = 10 * f + 11 * size_t(b - 1) + 2;
        const size_t ao = 4 * f + 4 * size_t(b - 1) + 1;
        const size_t nots = 2 * f + 3 * size_t(b - 1);
        gc.check(m.total == total, "total width " + std::to_string(b),
                 std::to_string(total), std::to_string(m.total));
        gc.check(m.count_and == ao && m.count_or == ao,
                 "and/or width " + std::to_string(b), std::to_string(ao),
                 std::to_string(m.count_and) + "/" + std::to_string(m.count_or));
        gc.check(m.count_not == nots, "not width " + std::to_string(b),
                 std::to_string(nots), std::to_string(m.count_not));
        gc.check(m.count_const == 0, "no constants", "0",
                 std::to_string(m.count_const));
    }
    const size_t expected_totals[4] = {13, 55, 169, 407};
    const int widths[4] = {2, 4, 8, 16};
    for (int i = 0; i < 4; ++i) {
        const Metrics m = metrics(build_two_sort(widths[i]));
        gc.check(m.total == expected_totals[i],
                 "reference total B=" + std::to_string(widths[i]),
                 std::to_string(expected_totals[i]), std::to_string(m.total));
    }

    Suite ppc(rep, "prefix tree structure");
    const size_t pow2[4] = {2, 4, 8, 16};
    const size_t pow2_counts[4] = {1, 4, 11, 26};
    for (int i = 0; i < 4; ++i)
        ppc.check(ppc_op_count(pow2[i]) == pow2_counts[i],
                  "op count n=" + std::to_string(pow2[i]),
                  std::to_string(pow2_counts[i]), std::to_string(ppc_op_count(pow2[i])));
    const size_t odd[4] = {1, 3, 7, 15};
    const size_t odd_counts[4] = {0, 2, 9, 24};
    for (int i = 0; i < 4; ++i)
        ppc.check(ppc_op_count(odd[i]) == odd_counts[i],
                  "op count n=" + std::to_string(odd[i]), std::to_string(odd_counts[i]),
                  std::to_string(ppc_op_count(odd[i])));
    for (size_t n = 1; n <= 40; ++n) {
        const PpcShape sh = ppc_shape(n);
        ppc.check(sh.op_count == ppc_op_count(n), "built count n=" + std::to_string(n),
                  std::to_string(ppc_op_count(n)), std::to_string(sh.op_count));
        ppc.check(sh.op_depth_levels <= predict_ppc_delay(n),
                  "depth bound n=" + std::to_string(n),
                  "<= " + std::to_string(predict_ppc_delay(n)),
                  std::to_string(sh.op_depth_levels));
    }

    Suite dep(rep, "depth scaling");
    const int dw[5] = {2, 4, 8, 16, 32};
    size_t depths[5];
    for (int i = 0; i < 5; ++i) depths[i] = metrics(build_two_sort(dw[i])).depth;
    for (int i = 0; i + 1 < 5; ++i) {
        const long diff = long(depths[i + 1]) - long(depths[i]);
        dep.check(diff >= 1 && diff <= 8,
                  "depth(" + std::to_string(dw[i + 1]) + ") - depth(" +
                      std::to_string(dw[i]) + ")",
                  "in [1,8]", std::to_string(diff));
    }

    Suite stable(rep, "stable agreement");
    for (int b = 1; b <= 8; ++b) {
        const Netlist nl = build_two_sort(b);
        BatchSimulator sim(nl);
        const auto& c = sim.compiled();
        std::vector<std::string> in_ports, out_ports;
        for (int i = 1; i <= b; ++i) in_ports.push_back("g" + std::to_string(i));
        for (int i = 1; i <= b; ++i) in_ports.push_back("h" + std::to_string(i));
        for (int i = 1; i <= b; ++i) out_ports.push_back("max" + std::to_string(i));
        for (int i = 1; i <= b; ++i) out_ports.push_back("min" + std::to_string(i));
        const auto in_pos = port_positions(c.input_names(), in_ports);
        const auto out_pos = port_positions(c.output_names(), out_ports);
        std::vector<TritBatch> in(c.input_count()), out(c.output_count());
        const uint64_t cases = uint64_t{1} << (2 * b);
        for (uint64_t base = 0; base < cases; base += 64) {
            const auto lanes = unsigned(std::min<uint64_t>(64, cases - base));
            for (unsigned l = 0; l < lanes; ++l) {
                const uint64_t gx = (base + l) >> b, hx = (base + l) & ((uint64_t{1} << b) - 1);
                const Word g = gray_encode(gx, b), h = gray_encode(hx, b);
                for (int i = 0; i < b; ++i) {
                    in[in_pos[size_t(i)]].set(l, g[size_t(i)]);
                    in[in_pos[size_t(b + i)]].set(l, h[size_t(i)]);
                }
            }
            sim.run(in, out);
            for (unsigned l = 0; l < lanes; ++l) {
                const uint64_t gx = (base + l) >> b, hx = (base + l) & ((uint64_t{1} << b) - 1);
                const Word g = gray_encode(gx, b), h = gray_encode(hx, b);
                const auto [emax, emin] = fsm_sort2(g, h);
                Word amax(static_cast<size_t>(b)), amin(static_cast<size_t>(b));
                for (int i = 0; i < b; ++i) {
                    amax[size_t(i)] = out[out_pos[size_t(i)]].get(l);
                    amin[size_t(i)] = out[out_pos[size_t(b + i)]].get(l);
                }
                stable.check(amax == emax && amin == emin,
                             "binary pair " + to_string(g) + "," + to_string(h),
                             to_string(emax) + "/" + to_string(emin),
                             to_string(amax) + "/" + to_string(amin));
            }
        }
    }

    Suite oracle(rep, "two-sort oracle");
    oracle.absorb(verify_two_sort(5, VerifyOptions{true, 0, 0, 1}));
}

void suite_networks(VerifyReport& rep) {
    Suite st(rep, "network structure");
    struct Expect {
        BuiltinNetwork v;
        const char* name;
        size_t comparators;
        size_t layers;  // 0 = unpinned
        size_t totals[4];
    };
    const Expect table[] = {
        {BuiltinNetwork::Sort4, "sort4", 5, 3, {65, 275, 845, 2035}},
        {BuiltinNetwork::Sort7, "sort7", 16, 6, {208, 880, 2704, 6512}},
        {BuiltinNetwork::Sort10Size, "sort10-size", 29, 0, {377, 1595, 4901, 11803}},
        {BuiltinNetwork::Sort10Depth, "sort10-depth", 31, 7, {403, 1705, 5239, 12617}},
    };
    const int widths[4] = {2, 4, 8, 16};
    for (const auto& e : table) {
        const ComparatorSchedule s = builtin_schedule(e.v);
        st.check(s.comparator_count() == e.comparators,
                 std::string(e.name) + " comparators", std::to_string(e.comparators),
                 std::to_string(s.comparator_count()));
        if (e.layers)
            st.check(s.layers.size() == e.layers, std::string(e.name) + " layers",
                     std::to_string(e.layers), std::to_string(s.layers.size()));
        st.check(validate_schedule(s), std::string(e.name) + " zero-one", "sorts",
                 "does not sort");
        for (int i = 0; i < 4; ++i) {
            const Metrics m = metrics(build_n_sort(s, widths[i]));
            const size_t product =
                s.comparator_count() * metrics(build_two_sort(widths[i])).total;
            st.check(m.total == e.totals[i],
                     std::string(e.name) + " total B=" + std::to_string(widths[i]),
                     std::to_string(e.totals[i]), std::to_string(m.total));
            st.check(m.total == product, std::string(e.name) + " product law",
                     std::to_string(product), std::to_string(m.total));
        }
    }
    for (int n = 2; n <= 10; ++n) {
        const ComparatorSchedule s = batcher_schedule(n);
        st.check(validate_schedule(s), "batcher n=" + std::to_string(n), "sorts",
                 "does not sort");
    }
    ComparatorSchedule empty2;
    empty2.channels = 2;
    st.check(!validate_schedule(empty2), "empty schedule rejected", "false", "true");

    // Exhaustive 4-channel run, double-checking that every output word is
    // itself a valid string (not just equal to the oracle's).
    Suite corr(rep, "sort4 exhaustive");
    {
        const ComparatorSchedule s = builtin_schedule(BuiltinNetwork::Sort4);
        const Netlist nl = build_n_sort(s, 2);
        Simulator sim(nl);
        const auto vw = enumerate_valid(2);
        std::vector<Trit> in(8), out(8);
        for (size_t a = 0; a < vw.size(); ++a)
            for (size_t b = 0; b < vw.size(); ++b)
                for (size_t c = 0; c < vw.size(); ++c)
                    for (size_t d = 0; d < vw.size(); ++d) {
                        const std::array<size_t, 4> idx{a, b, c, d};
                        std::vector<ValidWord> ins;
                        for (int k = 0; k < 4; ++k) {
                            ins.push_back(vw[idx[size_t(k)]]);
                            std::copy(ins.back().word.begin(), ins.back().word.end(),
                                      in.begin() + 2 * k);
                        }
                        sim.run(in, out);
                        const auto want = oracle_sort_valid(std::move(ins));
                        bool ok = true, valid = true;
                        for (int k = 0; k < 4; ++k) {
                            const Word got(out.begin() + 2 * k, out.begin() + 2 * k + 2);
                            if (got != want[size_t(k)].word) ok = false;
                            if (!valid_rank(got)) valid = false;
                        }
                        corr.check(ok && valid, "tuple ranks " + std::to_string(a) + "," +
                                                     std::to_string(b) + "," +
                                                     std::to_string(c) + "," +
                                                     std::to_string(d),
                                   "sorted valid words", ok ? "invalid word" : "mismatch");
                    }
    }
}

void suite_verify(VerifyReport& rep) {
    Suite det(rep, "report determinism");
    const VerifyOptions rnd{false, 2000, 7, 1};
    const auto r1 = verify_two_sort(4, rnd);
    const auto r2 = verify_two_sort(4, rnd);
    det.check(report_to_json(r1) == report_to_json(r2), "identical reruns", "equal",
              "diverged");
    VerifyOptions sharded = rnd;
    sharded.threads = 3;
    const auto r3 = verify_two_sort(4, sharded);
    det.check(report_to_json(r1) == report_to_json(r3), "thread-count independence",
              "equal", "diverged");

    Suite mut(rep, "mutation controls");
    const Netlist ts = build_two_sort(4);
    std::mt19937_64 rng(11);
    const size_t idx = size_t(rng() % swappable_gate_count(ts));
    const auto bad = verify_two_sort_netlist(mutate_gate_kind(ts, idx), 4,
                                             VerifyOptions{true, 0, 0, 1},
                                             "two-sort(B=4) mutated gate " +
                                                 std::to_string(idx));
    mut.check(bad.failure_count >= 1, "two-sort mutation caught", ">=1 failure",
              std::to_string(bad.failure_count));

    ComparatorSchedule s = builtin_schedule(BuiltinNetwork::Sort4);
    s.layers.back().pop_back();  // drop the final comparator
    const auto badnet = verify_network_netlist(build_n_sort(s, 2), 4, 2,
                                               VerifyOptions{true, 0, 0, 1},
                                               "sort4 minus one comparator");
    mut.check(badnet.failure_count >= 1, "network mutation caught", ">=1 failure",
              std::to_string(badnet.failure_count));
}

}  // namespace

VerifyReport run_property_suites() {
    VerifyReport rep;
    rep.target = "property suites";
    // Fixed seeds throughout, so reruns are bit-identical; "deterministic"
    // rather than "exhaustive" because a few suites spot-check random subsets.
    rep.mode = "deterministic";
    suite_ternary(rep);
    suite_gray(rep);
    suite_fsm(rep);
    suite_blocks(rep);
    suite_netlist(rep);
    suite_synth(rep);
    suite_networks(rep);
    suite_verify(rep);
    return rep;
}

}  // namespace mcsort
