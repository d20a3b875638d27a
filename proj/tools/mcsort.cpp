#include <CLI11.hpp>

#include <algorithm>
#include <cctype>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "mcsort/netlist.hpp"
#include "mcsort/networks.hpp"
#include "mcsort/sim.hpp"
#include "mcsort/synth.hpp"
#include "mcsort/verify.hpp"

using namespace mcsort;

namespace {

nlohmann::ordered_json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open '" + path + "'");
    return nlohmann::ordered_json::parse(in);
}

Netlist load_netlist(const std::string& path) {
    return netlist_from_json(read_json_file(path));
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot write '" + path + "'");
    out << text;
    if (!out.good()) throw std::invalid_argument("write failed for '" + path + "'");
}

ComparatorSchedule pick_schedule(int channels, const std::string& variant,
                                 const std::string& schedule_file) {
    if (!schedule_file.empty()) {
        ComparatorSchedule s = schedule_from_json(read_json_file(schedule_file));
        if (!validate_schedule(s))
            throw std::invalid_argument("schedule in '" + schedule_file +
                                        "' does not sort (zero-one check failed)");
        return s;
    }
    switch (channels) {
        case 4: return builtin_schedule(BuiltinNetwork::Sort4);
        case 7: return builtin_schedule(BuiltinNetwork::Sort7);
        case 10:
            return builtin_schedule(variant == "depth" ? BuiltinNetwork::Sort10Depth
                                                       : BuiltinNetwork::Sort10Size);
        default: return batcher_schedule(channels);  // general-n fallback
    }
}

// --assign name=word puts word[i] on port name<i+1> (or name_<i+1>),
// MSB first; a single-trit word may also target a port named exactly name.
std::map<std::string, Trit> expand_assignments(const Netlist& nl, const std::string& g,
                                               const std::string& h,
                                               const std::vector<std::string>& assigns) {
    const std::set<std::string> ports(nl.inputs.begin(), nl.inputs.end());
    std::map<std::string, Trit> out;
    auto put_word = [&](const std::string& base, const std::string& text) {
        const Word w = parse_word(text);
        if (w.size() == 1 && ports.count(base)) {
            out[base] = w[0];
            return;
        }
        for (size_t i = 0; i < w.size(); ++i) {
            const std::string flat = base + std::to_string(i + 1);
            const std::string uscore = base + "_" + std::to_string(i + 1);
            if (ports.count(flat))
                out[flat] = w[i];
            else if (ports.count(uscore))
                out[uscore] = w[i];
            else
                throw std::invalid_argument("no input port '" + flat + "' or '" + uscore +
                                            "' in netlist '" + nl.name + "'");
        }
    };
    if (!g.empty()) put_word("g", g);
    if (!h.empty()) put_word("h", h);
    for (const auto& a : assigns) {
        const auto eq = a.find('=');
        if (eq == std::string::npos || eq == 0)
            throw std::invalid_argument("--assign expects name=word, got '" + a + "'");
        put_word(a.substr(0, eq), a.substr(eq + 1));
    }
    if (out.empty())
        throw std::invalid_argument("no inputs assigned; use --g/--h or --assign");
    return out;
}

// Collapses port families like max1..max4 or out0_1..out0_4 back into
// words. Falls back to one entry per port when the numbering is irregular.
std::vector<std::pair<std::string, std::string>> group_outputs(
    const Netlist& nl, const std::map<std::string, Trit>& vals) {
    struct Group {
        std::vector<std::pair<size_t, char>> bits;
    };
    std::vector<std::string> order;
    std::map<std::string, Group> groups;
    bool regular = true;
    for (const auto& [port, sig] : nl.outputs) {
        (void)sig;
        size_t d = port.size();
        while (d > 0 && std::isdigit(static_cast<unsigned char>(port[d - 1]))) --d;
        std::string stem = port.substr(0, d);
        if (!stem.empty() && stem.back() == '_') stem.pop_back();
        if (d == port.size() || stem.empty()) {
            regular = false;
            break;
        }
        const size_t idx = std::stoul(port.substr(d));
        if (!groups.count(stem)) order.push_back(stem);
        groups[stem].bits.emplace_back(idx, to_char(vals.at(port)));
    }
    if (regular) {
        for (auto& [stem, grp] : groups) {
            std::sort(grp.bits.begin(), grp.bits.end());
            for (size_t i = 0; i < grp.bits.size(); ++i)
                if (grp.bits[i].first != i + 1) regular = false;
        }
    }
    std::vector<std::pair<std::string, std::string>> out;
    if (!regular) {
        for (const auto& [port, sig] : nl.outputs) {
            (void)sig;
            out.emplace_back(port, std::string(1, to_char(vals.at(port))));
        }
        return out;
    }
    for (const auto& stem : order) {
        std::string word;
        for (const auto& [idx, ch] : groups[stem].bits) {
            (void)idx;
            word.push_back(ch);
        }
        out.emplace_back(stem, word);
    }
    return out;
}

void emit_netlist(const Netlist& nl, const std::string& out_path, bool json,
                  const ComparatorSchedule* sched) {
    const Metrics m = metrics(nl);
    if (out_path.empty()) {
        std::cout << to_json(nl).dump(2) << "\n";
        return;
    }
    write_text_file(out_path, to_json(nl).dump(2) + "\n");
    if (json) {
        nlohmann::ordered_json j;
        j["name"] = nl.name;
        j["gates"] = m.total;
        j["depth"] = m.depth;
        if (sched) {
            j["comparators"] = sched->comparator_count();
            j["layers"] = sched->layers.size();
        }
        j["out"] = out_path;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "gates: " << m.total << "\n";
    }
}

int emit_report(const VerifyReport& r, bool json, const std::string& out_path) {
    const auto j = report_to_json(r);
    if (!out_path.empty()) write_text_file(out_path, j.dump(2) + "\n");
    if (json) {
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "target: " << r.target << "\n"
                  << "mode: " << r.mode << "\n";
        if (r.mode == "random")
            std::cout << "seed: " << r.seed << "\nsamples: " << r.samples << "\n";
        std::cout << "cases run: " << r.cases_run << "\n"
                  << "failures: " << r.failure_count << "\n";
        const size_t show = std::min<size_t>(r.failures.size(), 5);
        for (size_t i = 0; i < show; ++i) {
            const auto& f = r.failures[i];
            auto join = [](const std::vector<std::string>& v) {
                std::string s;
                for (const auto& x : v) s += (s.empty() ? "" : " ") + x;
                return s;
            };
            std::cout << "  case: " << join(f.inputs) << "  expected: " << join(f.expected)
                      << "  actual: " << join(f.actual) << "\n";
        }
        std::cout << "result: " << (r.pass() ? "PASS" : "FAIL") << "\n";
    }
    return r.pass() ? 0 : 1;
}

VerifyOptions make_options(bool exhaustive_flag, uint64_t samples, uint64_t seed,
                           int threads) {
    if (exhaustive_flag && samples > 0)
        throw std::invalid_argument("--exhaustive and --samples are mutually exclusive");
    VerifyOptions opt;
    opt.exhaustive = samples == 0;
    opt.samples = samples;
    opt.seed = seed;
    opt.threads = threads;
    return opt;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Metastability-containing sorters over Gray-coded words"};
    app.require_subcommand(1);
    bool json = false;
    app.add_flag("--json", json, "emit machine-readable JSON");

    // gen
    auto* gen = app.add_subcommand("gen", "generate circuit netlists");
    gen->require_subcommand(1);

    auto* gts = gen->add_subcommand("two-sort", "max/min sorter for two words");
    int gts_bits = 0;
    std::string gts_out;
    gts->add_option("--bits", gts_bits, "word width B")->required()->check(CLI::Range(1, 32));
    gts->add_option("--out", gts_out, "write netlist JSON to this file");

    auto* gns = gen->add_subcommand("n-sort", "full sorting network");
    int gns_channels = 0;
    int gns_bits = 0;
    std::string gns_variant = "size", gns_schedule, gns_out;
    gns->add_option("--channels", gns_channels, "channel count (4, 7 or 10 built in)")
        ->check(CLI::Range(2, 20));
    gns->add_option("--variant", gns_variant, "10-channel flavor")
        ->check(CLI::IsMember({"size", "depth"}));
    gns->add_option("--bits", gns_bits, "word width B")->required()->check(CLI::Range(1, 32));
    gns->add_option("--schedule", gns_schedule, "comparator schedule JSON file");
    gns->add_option("--out", gns_out, "write netlist JSON to this file");

    // sim
    auto* sim = app.add_subcommand("sim", "evaluate a netlist on ternary words");
    // The short -h help alias would shadow the --h word option below.
    sim->set_help_flag("--help", "print help and exit");
    std::string sim_netlist, sim_g, sim_h;
    std::vector<std::string> sim_assign;
    sim->add_option("--netlist", sim_netlist, "netlist JSON file")->required();
    sim->add_option("--g", sim_g, "word for ports g1..gB");
    sim->add_option("--h", sim_h, "word for ports h1..hB");
    sim->add_option("--assign", sim_assign, "name=word for ports name1..nameB");

    // stats
    auto* stats = app.add_subcommand("stats", "gate and depth metrics");
    std::string stats_netlist;
    stats->add_option("--netlist", stats_netlist, "netlist JSON file")->required();

    // export
    auto* exp = app.add_subcommand("export", "re-emit a netlist");
    std::string exp_netlist, exp_format, exp_out;
    exp->add_option("--netlist", exp_netlist, "netlist JSON file")->required();
    exp->add_option("--format", exp_format, "hdl or json")
        ->required()
        ->check(CLI::IsMember({"hdl", "json"}));
    exp->add_option("--out", exp_out, "write to this file instead of stdout");

    // verify
    auto* ver = app.add_subcommand("verify", "run a verification campaign");
    ver->require_subcommand(1);

    auto* vts = ver->add_subcommand("two-sort", "circuit vs closure oracle");
    int vts_bits = 0, vts_threads = 0;
    bool vts_exh = false;
    uint64_t vts_samples = 0, vts_seed = 0;
    std::string vts_out;
    vts->add_option("--bits", vts_bits, "word width B")->required()->check(CLI::Range(1, 16));
    vts->add_flag("--exhaustive", vts_exh, "all valid pairs (default)");
    vts->add_option("--samples", vts_samples, "random mode: number of sampled pairs");
    vts->add_option("--seed", vts_seed, "random mode seed (default 0)");
    vts->add_option("--threads", vts_threads, "worker count (0 = auto)");
    vts->add_option("--out", vts_out, "also write the report JSON here");

    auto* vns = ver->add_subcommand("network", "sorting network vs rank oracle");
    int vns_channels = 0, vns_bits = 0, vns_threads = 0;
    bool vns_exh = false;
    uint64_t vns_samples = 0, vns_seed = 0;
    std::string vns_variant = "size", vns_schedule, vns_out;
    vns->add_option("--channels", vns_channels, "channel count")->check(CLI::Range(2, 20));
    vns->add_option("--variant", vns_variant, "10-channel flavor")
        ->check(CLI::IsMember({"size", "depth"}));
    vns->add_option("--schedule", vns_schedule, "comparator schedule JSON file");
    vns->add_option("--bits", vns_bits, "word width B")->required()->check(CLI::Range(1, 16));
    vns->add_flag("--exhaustive", vns_exh, "all valid tuples (default)");
    vns->add_option("--samples", vns_samples, "random mode: number of sampled tuples");
    vns->add_option("--seed", vns_seed, "random mode seed (default 0)");
    vns->add_option("--threads", vns_threads, "worker count (0 = auto)");
    vns->add_option("--out", vns_out, "also write the report JSON here");

    auto* vpr = ver->add_subcommand("properties", "module invariant suites");
    std::string vpr_out;
    vpr->add_option("--out", vpr_out, "also write the report JSON here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (gen->parsed()) {
            if (gts->parsed()) {
                emit_netlist(build_two_sort(gts_bits), gts_out, json, nullptr);
            } else {
                if (gns_schedule.empty() && gns_channels == 0)
                    throw std::invalid_argument("n-sort needs --channels or --schedule");
                const ComparatorSchedule s =
                    pick_schedule(gns_channels, gns_variant, gns_schedule);
                emit_netlist(build_n_sort(s, gns_bits), gns_out, json, &s);
            }
            return 0;
        }
        if (sim->parsed()) {
            const Netlist nl = load_netlist(sim_netlist);
            const auto asg = expand_assignments(nl, sim_g, sim_h, sim_assign);
            const auto vals = simulate(nl, asg);
            const auto words = group_outputs(nl, vals);
            if (json) {
                nlohmann::ordered_json j;
                j["netlist"] = nl.name;
                auto jw = nlohmann::ordered_json::object();
                for (const auto& [name, word] : words) jw[name] = word;
                j["words"] = std::move(jw);
                auto jp = nlohmann::ordered_json::object();
                for (const auto& [port, v] : vals) jp[port] = std::string(1, to_char(v));
                j["ports"] = std::move(jp);
                std::cout << j.dump(2) << "\n";
            } else {
                std::string line;
                for (const auto& [name, word] : words)
                    line += (line.empty() ? "" : " ") + name + "=" + word;
                std::cout << line << "\n";
            }
            return 0;
        }
        if (stats->parsed()) {
            const Netlist nl = load_netlist(stats_netlist);
            const Metrics m = metrics(nl);
            if (json) {
                nlohmann::ordered_json j;
                j["name"] = nl.name;
                j["inputs"] = nl.inputs.size();
                j["outputs"] = nl.outputs.size();
                j["metrics"] = {{"and", m.count_and},     {"or", m.count_or},
                                {"not", m.count_not},     {"const", m.count_const},
                                {"total", m.total},       {"depth", m.depth}};
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << "name: " << nl.name << "\n"
                          << "inputs: " << nl.inputs.size() << "\n"
                          << "outputs: " << nl.outputs.size() << "\n"
                          << "gates: " << m.total << " (and " << m.count_and << ", or "
                          << m.count_or << ", not " << m.count_not << ", const "
                          << m.count_const << ")\n"
                          << "depth: " << m.depth << "\n";
            }
            return 0;
        }
        if (exp->parsed()) {
            const Netlist nl = load_netlist(exp_netlist);
            const std::string text = exp_format == "hdl"
                                         ? export_structural_hdl(nl)
                                         : to_json(nl).dump(2) + "\n";
            if (exp_out.empty())
                std::cout << text;
            else
                write_text_file(exp_out, text);
            return 0;
        }
        if (ver->parsed()) {
            if (vts->parsed()) {
                const auto opt = make_options(vts_exh, vts_samples, vts_seed, vts_threads);
                return emit_report(verify_two_sort(vts_bits, opt), json, vts_out);
            }
            if (vns->parsed()) {
                if (vns_schedule.empty() && vns_channels == 0)
                    throw std::invalid_argument("network needs --channels or --schedule");
                const ComparatorSchedule s =
                    pick_schedule(vns_channels, vns_variant, vns_schedule);
                const auto opt = make_options(vns_exh, vns_samples, vns_seed, vns_threads);
                return emit_report(verify_network(s, vns_bits, opt), json, vns_out);
            }
            return emit_report(run_property_suites(), json, vpr_out);
        }
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
