#include <doctest.h>

#include <sstream>

#include "mcsort/netlist.hpp"
#include "mcsort/synth.hpp"

using namespace mcsort;
using nlohmann::ordered_json;

namespace {

size_t count_occurrences(const std::string& text, const std::string& needle) {
    size_t n = 0;
    for (size_t pos = text.find(needle); pos != std::string::npos;
         pos = text.find(needle, pos + needle.size()))
        ++n;
    return n;
}

Netlist inverter_chain() {
    Netlist nl;
    nl.name = "inv";
    nl.inputs = {"a"};
    nl.gates = {{"n1", GateKind::Not, {"a"}}};
    nl.outputs = {{"y", "n1"}};
    return nl;
}

}  // namespace

TEST_CASE("gate kind helpers") {
    CHECK(kind_arity(GateKind::And) == 2);
    CHECK(kind_arity(GateKind::Or) == 2);
    CHECK(kind_arity(GateKind::Not) == 1);
    CHECK(kind_arity(GateKind::Const0) == 0);
    CHECK(kind_arity(GateKind::Const1) == 0);
    for (GateKind k : {GateKind::And, GateKind::Or, GateKind::Not, GateKind::Const0,
                       GateKind::Const1})
        CHECK(kind_from_name(kind_name(k)) == k);
    CHECK_FALSE(kind_from_name("XOR").has_value());
}

TEST_CASE("simulate propagates ternary values") {
    const auto out = simulate(inverter_chain(), {{"a", Trit::Meta}});
    CHECK(out.at("y") == Trit::Meta);

    Netlist c;
    c.name = "const";
    c.gates = {{"one", GateKind::Const1, {}}, {"zero", GateKind::Const0, {}}};
    c.outputs = {{"hi", "one"}, {"lo", "zero"}};
    const auto co = simulate(c, {});
    CHECK(co.at("hi") == Trit::One);
    CHECK(co.at("lo") == Trit::Zero);

    CHECK_THROWS_AS(simulate(inverter_chain(), {}), NetlistError);
}

TEST_CASE("validate_and_sort orders gates and rejects malformed graphs") {
    Netlist nl;
    nl.name = "swapped";
    nl.inputs = {"a"};
    nl.gates = {{"g2", GateKind::Not, {"g1"}}, {"g1", GateKind::Not, {"a"}}};
    nl.outputs = {{"y", "g2"}};
    const Netlist sorted = validate_and_sort(nl);
    CHECK(sorted.gates[0].id == "g1");
    CHECK(simulate(sorted, {{"a", Trit::Zero}}).at("y") == Trit::Zero);

    Netlist dup = nl;
    dup.gates.push_back({"g1", GateKind::Not, {"a"}});
    CHECK_THROWS_AS(validate_and_sort(dup), NetlistError);

    Netlist dangling = nl;
    dangling.gates[1].in = {"ghost"};
    CHECK_THROWS_AS(validate_and_sort(dangling), NetlistError);

    Netlist cyc = nl;
    cyc.gates[1].in = {"g2"};
    CHECK_THROWS_AS(validate_and_sort(cyc), NetlistError);

    Netlist bad_out = nl;
    bad_out.outputs[0].second = "ghost";
    CHECK_THROWS_AS(validate_and_sort(bad_out), NetlistError);

    Netlist bad_arity = nl;
    bad_arity.gates[0].in = {"a", "a"};
    CHECK_THROWS_AS(validate_and_sort(bad_arity), NetlistError);
}

TEST_CASE("metrics counts by kind and measures depth") {
    CHECK(metrics(Netlist{}).total == 0);
    CHECK(metrics(Netlist{}).depth == 0);

    const Metrics m = metrics(build_two_sort(2));
    CHECK(m.count_and == 5);
    CHECK(m.count_or == 5);
    CHECK(m.count_not == 3);
    CHECK(m.count_const == 0);
    CHECK(m.total == 13);

    Netlist sel;
    sel.name = "sel";
    sel.inputs = {"a", "b", "s1", "s2"};
    sel.outputs = {{"f", build_selection(sel, "a", "b", "s1", "s2", "u")}};
    const Metrics ms = metrics(validate_and_sort(sel));
    CHECK(ms.total == 4);
    CHECK(ms.count_and == 2);
    CHECK(ms.count_or == 2);
    CHECK(ms.depth == 3);
}

TEST_CASE("JSON round trip preserves the netlist") {
    const Netlist ts = build_two_sort(3);
    const ordered_json j = to_json(ts);
    CHECK(j.at("outputs").is_object());
    const Netlist back = netlist_from_json(j);
    CHECK(to_json(back) == j);
    CHECK(back.name == ts.name);
    CHECK(back.inputs == ts.inputs);
    CHECK(back.outputs == ts.outputs);
    REQUIRE(back.gates.size() == ts.gates.size());
    for (size_t i = 0; i < ts.gates.size(); ++i) {
        CHECK(back.gates[i].id == ts.gates[i].id);
        CHECK(back.gates[i].kind == ts.gates[i].kind);
        CHECK(back.gates[i].in == ts.gates[i].in);
    }
}

TEST_CASE("JSON loader rejects bad documents") {
    ordered_json j = to_json(inverter_chain());
    j["gates"][0]["kind"] = "XOR";
    CHECK_THROWS_AS(netlist_from_json(j), NetlistError);

    ordered_json dup = to_json(inverter_chain());
    dup["gates"].push_back(dup["gates"][0]);
    CHECK_THROWS_AS(netlist_from_json(dup), NetlistError);

    CHECK_THROWS_AS(netlist_from_json(ordered_json::object()), NetlistError);
    CHECK_THROWS_AS(netlist_from_json(ordered_json{{"name", 7}}), NetlistError);
}

TEST_CASE("structural HDL export") {
    const std::string one_and = export_structural_hdl(Netlist{
        "tiny", {"a", "b"}, {{"g", GateKind::And, {"a", "b"}}}, {{"y", "g"}}});
    CHECK(count_occurrences(one_and, "AND2_X1") == 1);
    CHECK(one_and.find("module tiny") != std::string::npos);
    CHECK(one_and.find("endmodule") != std::string::npos);

    const std::string ts = export_structural_hdl(build_two_sort(2));
    CHECK(count_occurrences(ts, "AND2_X1") == 5);
    CHECK(count_occurrences(ts, "OR2_X1") == 5);
    CHECK(count_occurrences(ts, "INV_X1") == 3);

    const std::string empty = export_structural_hdl(Netlist{"nil", {"a"}, {}, {}});
    CHECK(empty.find("module nil") != std::string::npos);
    CHECK(empty.find("_X1") == std::string::npos);
}

TEST_CASE("instantiate splices a sub-netlist with prefixed ids") {
    Netlist host;
    host.name = "host";
    host.inputs = {"x"};
    const auto m1 = instantiate(host, inverter_chain(), "u1", {{"a", "x"}});
    const auto m2 = instantiate(host, inverter_chain(), "u2", {{"a", m1.at("y")}});
    host.outputs = {{"y", m2.at("y")}};
    const Netlist v = validate_and_sort(host);
    CHECK(metrics(v).total == 2);
    CHECK(simulate(v, {{"x", Trit::One}}).at("y") == Trit::One);
    CHECK(simulate(v, {{"x", Trit::Meta}}).at("y") == Trit::Meta);

    Netlist unbound;
    unbound.inputs = {"x"};
    CHECK_THROWS_AS(instantiate(unbound, inverter_chain(), "u", {}), NetlistError);
}
