#include <doctest.h>

#include <algorithm>
#include <set>
#include <stdexcept>

#include "mcsort/ternary.hpp"

using namespace mcsort;

namespace {

Trit closed_gate(LogicOp op, Trit a, std::optional<Trit> b) {
    auto f = [op](const std::vector<Word>& xs) {
        const bool x = xs[0][0] == Trit::One;
        const bool y = xs.size() > 1 && xs[1][0] == Trit::One;
        bool r = false;
        switch (op) {
            case LogicOp::And: r = x && y; break;
            case LogicOp::Or: r = x || y; break;
            case LogicOp::Not: r = !x; break;
        }
        return Word{r ? Trit::One : Trit::Zero};
    };
    std::vector<Word> args{Word{a}};
    if (b) args.push_back(Word{*b});
    return closure_eval(f, args)[0];
}

const Trit kAll[3] = {Trit::Zero, Trit::One, Trit::Meta};

}  // namespace

TEST_CASE("gate semantics: controlling values mask M") {
    CHECK(t_and(Trit::Meta, Trit::Zero) == Trit::Zero);
    CHECK(t_or(Trit::Meta, Trit::One) == Trit::One);
    CHECK(t_not(Trit::Meta) == Trit::Meta);
    CHECK(t_and(Trit::Meta, Trit::One) == Trit::Meta);
    CHECK(t_or(Trit::Meta, Trit::Zero) == Trit::Meta);
    CHECK(t_and(Trit::Meta, Trit::Meta) == Trit::Meta);

    CHECK(eval_gate(LogicOp::And, Trit::Meta, Trit::Zero) == Trit::Zero);
    CHECK(eval_gate(LogicOp::Or, Trit::Meta, Trit::One) == Trit::One);
    CHECK(eval_gate(LogicOp::Not, Trit::Meta) == Trit::Meta);
}

TEST_CASE("gate arity is enforced") {
    CHECK_THROWS_AS(eval_gate(LogicOp::And, Trit::One), std::invalid_argument);
    CHECK_THROWS_AS(eval_gate(LogicOp::Or, Trit::One), std::invalid_argument);
    CHECK_THROWS_AS(eval_gate(LogicOp::Not, Trit::One, Trit::Zero), std::invalid_argument);
}

TEST_CASE("gates agree with Boolean logic on binary inputs") {
    for (Trit a : {Trit::Zero, Trit::One}) {
        const bool x = a == Trit::One;
        CHECK(t_not(a) == (!x ? Trit::One : Trit::Zero));
        for (Trit b : {Trit::Zero, Trit::One}) {
            const bool y = b == Trit::One;
            CHECK(t_and(a, b) == ((x && y) ? Trit::One : Trit::Zero));
            CHECK(t_or(a, b) == ((x || y) ? Trit::One : Trit::Zero));
        }
    }
}

TEST_CASE("gates equal the closure of their Boolean core on all ternary inputs") {
    for (Trit a : kAll) {
        CHECK(eval_gate(LogicOp::Not, a) == closed_gate(LogicOp::Not, a, std::nullopt));
        for (Trit b : kAll) {
            CHECK(eval_gate(LogicOp::And, a, b) == closed_gate(LogicOp::And, a, b));
            CHECK(eval_gate(LogicOp::Or, a, b) == closed_gate(LogicOp::Or, a, b));
        }
    }
}

TEST_CASE("word text codec is MSB-first and round-trips") {
    const Word w = parse_word("0M10");
    REQUIRE(w.size() == 4);
    CHECK(w[0] == Trit::Zero);
    CHECK(w[1] == Trit::Meta);
    CHECK(w[2] == Trit::One);
    CHECK(w[3] == Trit::Zero);
    CHECK(to_string(w) == "0M10");
    CHECK_THROWS_AS(parse_word("01x0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_word(""), std::invalid_argument);
    CHECK(meta_count(w) == 1);
    CHECK_FALSE(is_binary(w));
    CHECK(is_binary(parse_word("0110")));
}

TEST_CASE("resolutions expand wildcards") {
    auto as_set = [](const std::vector<Word>& ws) {
        std::set<std::string> s;
        for (const auto& w : ws) s.insert(to_string(w));
        return s;
    };
    CHECK(as_set(resolutions(parse_word("0M"))) == std::set<std::string>{"00", "01"});
    CHECK(as_set(resolutions(parse_word("01"))) == std::set<std::string>{"01"});
    CHECK(as_set(resolutions(parse_word("MM"))) ==
          std::set<std::string>{"00", "01", "10", "11"});
}

TEST_CASE("superposition merges agreement and flags conflict") {
    CHECK(to_string(superpose({parse_word("00"), parse_word("01")})) == "0M");
    CHECK(to_string(superpose({parse_word("0010"), parse_word("0110")})) == "0M10");
    CHECK(to_string(superpose(resolutions(parse_word("1M0")))) == "1M0");
    CHECK_THROWS_AS(superpose({}), std::invalid_argument);
    CHECK_THROWS_AS(superpose({parse_word("0"), parse_word("01")}), std::invalid_argument);
}

TEST_CASE("superpose after resolutions is the identity, all words up to width 6") {
    for (int w = 1; w <= 6; ++w) {
        uint64_t total = 1;
        for (int i = 0; i < w; ++i) total *= 3;
        Word x(static_cast<size_t>(w));
        for (uint64_t code = 0; code < total; ++code) {
            uint64_t c = code;
            for (int b = 0; b < w; ++b) {
                x[size_t(b)] = kAll[c % 3];
                c /= 3;
            }
            CHECK(superpose(resolutions(x)) == x);
        }
    }
}

TEST_CASE("closure_eval reproduces gate closure and identity") {
    auto and_f = [](const std::vector<Word>& xs) {
        return Word{t_and(xs[0][0], xs[1][0])};
    };
    CHECK(closure_eval(and_f, {parse_word("M"), parse_word("0")}) == parse_word("0"));

    auto ident = [](const std::vector<Word>& xs) { return xs[0]; };
    CHECK(closure_eval(ident, {parse_word("1M0")}) == parse_word("1M0"));
    CHECK(closure_eval(ident, {parse_word("MMMM")}) == parse_word("MMMM"));
}

TEST_CASE("closed modular addition is order dependent") {
    auto add = [](const Word& a, const Word& b) {
        auto f = [](const std::vector<Word>& xs) {
            auto val = [](const Word& w) {
                return (unsigned(w[0] == Trit::One) << 1) | unsigned(w[1] == Trit::One);
            };
            const unsigned s = (val(xs[0]) + val(xs[1])) & 3u;
            return Word{s & 2u ? Trit::One : Trit::Zero, s & 1u ? Trit::One : Trit::Zero};
        };
        return closure_eval(f, {a, b});
    };
    const Word x = parse_word("0M"), y = parse_word("01");
    CHECK(to_string(add(add(x, y), y)) == "MM");
    CHECK(to_string(add(x, add(y, y))) == "1M");
}
