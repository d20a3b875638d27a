#include "mcsort/ternary.hpp"

#include <stdexcept>

namespace mcsort {

std::optional<Trit> trit_from_char(char c) {
    switch (c) {
        case '0': return Trit::Zero;
        case '1': return Trit::One;
        case 'M': case 'm': return Trit::Meta;
        default: return std::nullopt;
    }
}

Trit eval_gate(LogicOp op, Trit a, std::optional<Trit> b) {
    if (op == LogicOp::Not) {
        if (b) throw std::invalid_argument("NOT takes one operand");
        return t_not(a);
    }
    if (!b) throw std::invalid_argument("AND/OR take two operands");
    return op == LogicOp::And ? t_and(a, *b) : t_or(a, *b);
}

std::string to_string(const Word& w) {
    std::string s;
    s.reserve(w.size());
    for (Trit t : w) s.push_back(to_char(t));
    return s;
}

Word parse_word(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty word");
    Word w;
    w.reserve(s.size());
    for (char c : s) {
        auto t = trit_from_char(c);
        if (!t) throw std::invalid_argument(std::string("bad trit '") + c + "' in word " + s);
        w.push_back(*t);
    }
    return w;
}

bool is_binary(const Word& w) {
    for (Trit t : w)
        if (t == Trit::Meta) return false;
    return true;
}

size_t meta_count(const Word& w) {
    size_t n = 0;
    for (Trit t : w)
        if (t == Trit::Meta) ++n;
    return n;
}

std::vector<Word> resolutions(const Word& x) {
    std::vector<size_t> metas;
    for (size_t i = 0; i < x.size(); ++i)
        if (x[i] == Trit::Meta) metas.push_back(i);
    if (metas.size() > 24) throw std::invalid_argument("too many METAs to enumerate");

    std::vector<Word> out;
    out.reserve(size_t{1} << metas.size());
    for (uint64_t mask = 0; mask < (uint64_t{1} << metas.size()); ++mask) {
        Word r = x;
        for (size_t k = 0; k < metas.size(); ++k)
            r[metas[k]] = (mask >> k) & 1 ? Trit::One : Trit::Zero;
        out.push_back(std::move(r));
    }
    return out;
}

Word superpose(const std::vector<Word>& words) {
    if (words.empty()) throw std::invalid_argument("superpose of empty set");
    Word acc = words.front();
    for (size_t i = 1; i < words.size(); ++i) {
        const Word& w = words[i];
        if (w.size() != acc.size()) throw std::invalid_argument("superpose of ragged widths");
        for (size_t j = 0; j < acc.size(); ++j)
            if (acc[j] != w[j]) acc[j] = Trit::Meta;
    }
    return acc;
}

Word closure_eval(const std::function<Word(const std::vector<Word>&)>& f,
                  const std::vector<Word>& args) {
    // Enumerate one global assignment over all META positions of all args.
    std::vector<std::pair<size_t, size_t>> metas;  // (arg index, bit index)
    for (size_t a = 0; a < args.size(); ++a)
        for (size_t i = 0; i < args[a].size(); ++i)
            if (args[a][i] == Trit::Meta) metas.emplace_back(a, i);
    if (metas.size() > 24) throw std::invalid_argument("too many METAs to enumerate");

    std::vector<Word> resolved = args;
    std::optional<Word> acc;
    for (uint64_t mask = 0; mask < (uint64_t{1} << metas.size()); ++mask) {
        for (size_t k = 0; k < metas.size(); ++k)
            resolved[metas[k].first][metas[k].second] =
                (mask >> k) & 1 ? Trit::One : Trit::Zero;
        Word y = f(resolved);
        if (!acc) {
            acc = std::move(y);
            continue;
        }
        if (y.size() != acc->size()) throw std::invalid_argument("closure_eval: ragged f output");
        bool all_meta = true;
        for (size_t j = 0; j < y.size(); ++j) {
            if ((*acc)[j] != y[j]) (*acc)[j] = Trit::Meta;
            all_meta &= (*acc)[j] == Trit::Meta;
        }
        if (all_meta) break;  // cannot degrade further
    }
    return *acc;
}

}  // namespace mcsort
