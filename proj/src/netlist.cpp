#include "mcsort/netlist.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace mcsort {

const char* kind_name(GateKind k) {
    switch (k) {
        case GateKind::And: return "AND";
        case GateKind::Or: return "OR";
        case GateKind::Not: return "NOT";
        case GateKind::Const0: return "CONST0";
        case GateKind::Const1: return "CONST1";
    }
    return "?";
}

std::optional<GateKind> kind_from_name(std::string_view s) {
    if (s == "AND") return GateKind::And;
    if (s == "OR") return GateKind::Or;
    if (s == "NOT") return GateKind::Not;
    if (s == "CONST0") return GateKind::Const0;
    if (s == "CONST1") return GateKind::Const1;
    return std::nullopt;
}

int kind_arity(GateKind k) {
    switch (k) {
        case GateKind::And:
        case GateKind::Or: return 2;
        case GateKind::Not: return 1;
        default: return 0;
    }
}

Netlist validate_and_sort(const Netlist& n) {
    std::unordered_map<std::string, size_t> gate_of;  // signal id -> gate index
    std::unordered_set<std::string> defined(n.inputs.begin(), n.inputs.end());
    if (defined.size() != n.inputs.size()) throw NetlistError("duplicate input id");
    for (size_t i = 0; i < n.gates.size(); ++i) {
        const Gate& g = n.gates[i];
        if (static_cast<int>(g.in.size()) != kind_arity(g.kind))
            throw NetlistError("gate '" + g.id + "': bad arity for " + kind_name(g.kind));
        if (!defined.insert(g.id).second) throw NetlistError("duplicate id '" + g.id + "'");
        gate_of[g.id] = i;
    }
    for (const auto& [port, sig] : n.outputs)
        if (!defined.count(sig))
            throw NetlistError("output '" + port + "' references undefined '" + sig + "'");

    // Iterative DFS, coloring gates white/grey/black; a grey revisit is a cycle.
    enum : uint8_t { White, Grey, Black };
    std::vector<uint8_t> color(n.gates.size(), White);
    std::vector<size_t> order;
    order.reserve(n.gates.size());
    for (size_t root = 0; root < n.gates.size(); ++root) {
        if (color[root] != White) continue;
        std::vector<std::pair<size_t, size_t>> stack{{root, 0}};  // (gate, next arg)
        color[root] = Grey;
        while (!stack.empty()) {
            auto& [gi, ai] = stack.back();
            const Gate& g = n.gates[gi];
            if (ai < g.in.size()) {
                const std::string& dep = g.in[ai++];
                auto it = gate_of.find(dep);
                if (it == gate_of.end()) {
                    if (!defined.count(dep))
                        throw NetlistError("gate '" + g.id + "' references undefined '" + dep + "'");
                    continue;  // primary input
                }
                size_t di = it->second;
                if (color[di] == Grey)
                    throw NetlistError("cycle through '" + n.gates[di].id + "'");
                if (color[di] == White) {
                    color[di] = Grey;
                    stack.emplace_back(di, 0);
                }
            } else {
                color[gi] = Black;
                order.push_back(gi);
                stack.pop_back();
            }
        }
    }

    Netlist out;
    out.name = n.name;
    out.inputs = n.inputs;
    out.outputs = n.outputs;
    out.gates.reserve(n.gates.size());
    for (size_t gi : order) out.gates.push_back(n.gates[gi]);
    return out;
}

Metrics metrics(const Netlist& n) {
    Netlist sorted = validate_and_sort(n);
    Metrics m;
    std::unordered_map<std::string, size_t> level;
    for (const auto& in : sorted.inputs) level[in] = 0;
    for (const Gate& g : sorted.gates) {
        switch (g.kind) {
            case GateKind::And: ++m.count_and; break;
            case GateKind::Or: ++m.count_or; break;
            case GateKind::Not: ++m.count_not; break;
            default: ++m.count_const; break;
        }
        size_t lv = 0;
        for (const auto& a : g.in) lv = std::max(lv, level[a]);
        level[g.id] = lv + 1;
        m.depth = std::max(m.depth, lv + 1);
    }
    m.total = m.count_and + m.count_or + m.count_not + m.count_const;
    return m;
}

std::map<std::string, Trit> simulate(const Netlist& n,
                                     const std::map<std::string, Trit>& assignment) {
    Netlist sorted = validate_and_sort(n);
    std::unordered_map<std::string, Trit> val;
    for (const auto& in : sorted.inputs) {
        auto it = assignment.find(in);
        if (it == assignment.end()) throw NetlistError("missing assignment for input '" + in + "'");
        val[in] = it->second;
    }
    for (const Gate& g : sorted.gates) {
        switch (g.kind) {
            case GateKind::And: val[g.id] = t_and(val.at(g.in[0]), val.at(g.in[1])); break;
            case GateKind::Or: val[g.id] = t_or(val.at(g.in[0]), val.at(g.in[1])); break;
            case GateKind::Not: val[g.id] = t_not(val.at(g.in[0])); break;
            case GateKind::Const0: val[g.id] = Trit::Zero; break;
            case GateKind::Const1: val[g.id] = Trit::One; break;
        }
    }
    std::map<std::string, Trit> out;
    for (const auto& [port, sig] : sorted.outputs) out[port] = val.at(sig);
    return out;
}

nlohmann::ordered_json to_json(const Netlist& n) {
    nlohmann::ordered_json j;
    j["name"] = n.name;
    j["inputs"] = n.inputs;
    j["gates"] = nlohmann::ordered_json::array();
    for (const Gate& g : n.gates)
        j["gates"].push_back({{"id", g.id}, {"kind", kind_name(g.kind)}, {"in", g.in}});
    nlohmann::ordered_json outs = nlohmann::ordered_json::object();
    for (const auto& [port, sig] : n.outputs) outs[port] = sig;
    j["outputs"] = std::move(outs);
    return j;
}

Netlist netlist_from_json(const nlohmann::ordered_json& j) {
    Netlist n;
    try {
        n.name = j.at("name").get<std::string>();
        n.inputs = j.at("inputs").get<std::vector<std::string>>();
        for (const auto& jg : j.at("gates")) {
            Gate g;
            g.id = jg.at("id").get<std::string>();
            auto kind = kind_from_name(jg.at("kind").get<std::string>());
            if (!kind)
                throw NetlistError("gate '" + g.id + "': unknown kind '" +
                                   jg.at("kind").get<std::string>() + "'");
            g.kind = *kind;
            g.in = jg.at("in").get<std::vector<std::string>>();
            n.gates.push_back(std::move(g));
        }
        for (const auto& [port, sig] : j.at("outputs").items())
            n.outputs.emplace_back(port, sig.get<std::string>());
    } catch (const nlohmann::json::exception& e) {
        throw NetlistError(std::string("malformed netlist document: ") + e.what());
    }
    return validate_and_sort(n);
}

namespace {

bool plain_verilog_id(const std::string& s) {
    if (s.empty() || (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_'))
        return false;
    for (char c : s)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
    return true;
}

}  // namespace

std::string export_structural_hdl(const Netlist& n) {
    Netlist sorted = validate_and_sort(n);

    // Ports keep their names; nets that are not plain Verilog names, or
    // that collide with a port carrying a different signal, get a
    // deterministic rename.
    std::unordered_set<std::string> port_names;
    for (const auto& in : sorted.inputs) port_names.insert(in);
    std::unordered_set<std::string> self_driven;  // ports driven by a same-named gate
    for (const auto& [port, sig] : sorted.outputs) {
        port_names.insert(port);
        if (port == sig) self_driven.insert(port);
    }
    auto needs_rename = [&](const std::string& id, bool is_gate) {
        if (!plain_verilog_id(id)) return true;
        return is_gate && port_names.count(id) && !self_driven.count(id);
    };
    std::unordered_map<std::string, std::string> rename;
    std::unordered_set<std::string> taken = port_names;
    for (const Gate& g : sorted.gates)
        if (!needs_rename(g.id, true)) taken.insert(g.id);
    size_t seq = 0;
    auto rename_of = [&](const std::string& id, bool is_gate) -> const std::string& {
        auto it = rename.find(id);
        if (it != rename.end()) return it->second;
        if (!needs_rename(id, is_gate)) return rename.emplace(id, id).first->second;
        std::string fresh;
        do {
            fresh = "mangled_" + std::to_string(seq++);
        } while (taken.count(fresh));
        taken.insert(fresh);
        return rename.emplace(id, fresh).first->second;
    };
    // Gates first so net references resolve to gate renames, then ports.
    for (const Gate& g : sorted.gates) rename_of(g.id, true);
    auto mangled = [&](const std::string& id) -> const std::string& { return rename_of(id, false); };

    std::ostringstream os;
    os << "// structural netlist, AND2/OR2/INV cell mapping\n";
    for (const Gate& g : sorted.gates)
        if (rename.at(g.id) != g.id) os << "// renamed: " << g.id << " -> " << rename.at(g.id) << "\n";
    for (const auto& in : sorted.inputs)
        if (!plain_verilog_id(in)) os << "// renamed: " << in << " -> " << mangled(in) << "\n";
    for (const auto& [port, sig] : sorted.outputs) {
        if (!plain_verilog_id(port)) os << "// renamed: " << port << " -> " << mangled(port) << "\n";
        (void)sig;
    }

    os << "module " << (plain_verilog_id(sorted.name) ? sorted.name : std::string("top")) << " (";
    bool first = true;
    for (const auto& in : sorted.inputs) {
        os << (first ? "" : ", ") << mangled(in);
        first = false;
    }
    for (const auto& [port, sig] : sorted.outputs) {
        os << (first ? "" : ", ") << mangled(port);
        first = false;
        (void)sig;
    }
    os << ");\n";
    for (const auto& in : sorted.inputs) os << "  input " << mangled(in) << ";\n";
    std::unordered_set<std::string> output_ports;
    for (const auto& [port, sig] : sorted.outputs) {
        os << "  output " << mangled(port) << ";\n";
        output_ports.insert(mangled(port));
        (void)sig;
    }
    for (const Gate& g : sorted.gates)
        if (!output_ports.count(mangled(g.id))) os << "  wire " << mangled(g.id) << ";\n";

    size_t inst = 0;
    for (const Gate& g : sorted.gates) {
        const std::string& z = mangled(g.id);
        os << "  ";
        switch (g.kind) {
            case GateKind::And:
                os << "AND2_X1 u" << inst << " (.A1(" << mangled(g.in[0]) << "), .A2("
                   << mangled(g.in[1]) << "), .ZN(" << z << "));\n";
                break;
            case GateKind::Or:
                os << "OR2_X1 u" << inst << " (.A1(" << mangled(g.in[0]) << "), .A2("
                   << mangled(g.in[1]) << "), .ZN(" << z << "));\n";
                break;
            case GateKind::Not:
                os << "INV_X1 u" << inst << " (.A(" << mangled(g.in[0]) << "), .ZN(" << z << "));\n";
                break;
            case GateKind::Const0:
                os << "LOGIC0_X1 u" << inst << " (.Z(" << z << "));\n";
                break;
            case GateKind::Const1:
                os << "LOGIC1_X1 u" << inst << " (.Z(" << z << "));\n";
                break;
        }
        ++inst;
    }
    for (const auto& [port, sig] : sorted.outputs)
        if (mangled(port) != mangled(sig))
            os << "  assign " << mangled(port) << " = " << mangled(sig) << ";\n";
    os << "endmodule\n";
    return os.str();
}

std::map<std::string, std::string> instantiate(
    Netlist& host, const Netlist& sub, const std::string& prefix,
    const std::map<std::string, std::string>& bindings) {
    auto resolve = [&](const std::string& id) -> std::string {
        auto it = bindings.find(id);
        if (it != bindings.end()) return it->second;
        return prefix + id;
    };
    for (const auto& in : sub.inputs)
        if (!bindings.count(in))
            throw NetlistError("instantiate: unbound input '" + in + "'");
    for (const Gate& g : sub.gates) {
        Gate copy;
        copy.id = prefix + g.id;
        copy.kind = g.kind;
        for (const auto& a : g.in) copy.in.push_back(resolve(a));
        host.gates.push_back(std::move(copy));
    }
    std::map<std::string, std::string> outs;
    for (const auto& [port, sig] : sub.outputs) outs[port] = resolve(sig);
    return outs;
}

}  // namespace mcsort
