#include "wordgap/words.hpp"

#include "wordgap/errors.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace wordgap {
namespace {

std::vector<Letter> reduce_letters(const std::vector<Letter>& in) {
    std::vector<Letter> out;
    for (const Letter& l : in) {
        if (!out.empty() && out.back().var == l.var && out.back().sign == -l.sign)
            out.pop_back();
        else
            out.push_back(l);
    }
    return out;
}

std::vector<Letter> invert_letters(const std::vector<Letter>& in) {
    std::vector<Letter> out(in.rbegin(), in.rend());
    for (Letter& l : out) l.sign = -l.sign;
    return out;
}

std::vector<Letter> commutator_letters(const std::vector<Letter>& u, const std::vector<Letter>& v) {
    std::vector<Letter> out = invert_letters(u);
    std::vector<Letter> vi = invert_letters(v);
    out.insert(out.end(), vi.begin(), vi.end());
    out.insert(out.end(), u.begin(), u.end());
    out.insert(out.end(), v.begin(), v.end());
    return out;
}

// Recursive descent over: seq := item+ ; item := ('x' digit | '[' seq (',' seq)+ ']') '\''*
struct Parser {
    const std::string& s;
    std::size_t pos = 0;

    explicit Parser(const std::string& str) : s(str) {}

    void skip_ws() {
        while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
    }
    bool at(char c) {
        skip_ws();
        return pos < s.size() && s[pos] == c;
    }

    std::vector<Letter> parse_seq(bool top) {
        std::vector<Letter> out;
        bool any = false;
        while (true) {
            skip_ws();
            if (pos >= s.size()) break;
            const char c = s[pos];
            if (c == ',' || c == ']') break;
            std::vector<Letter> item;
            if (c == 'x') {
                ++pos;
                if (pos >= s.size() || s[pos] < '1' || s[pos] > '9')
                    throw ParseError("expected variable digit 1..9 after 'x'", pos);
                item.push_back({s[pos] - '0', +1});
                ++pos;
            } else if (c == '[') {
                ++pos;
                std::vector<std::vector<Letter>> parts;
                parts.push_back(parse_seq(false));
                while (at(',')) {
                    ++pos;
                    parts.push_back(parse_seq(false));
                }
                if (!at(']')) throw ParseError("expected ',' or ']'", pos);
                ++pos;
                if (parts.size() < 2) throw ParseError("commutator needs at least two parts", pos);
                item = parts[0];
                for (std::size_t i = 1; i < parts.size(); ++i)
                    item = commutator_letters(item, parts[i]);  // left normed
            } else {
                throw ParseError(std::string("unexpected character '") + c + "'", pos);
            }
            while (at('\'')) {
                ++pos;
                item = invert_letters(item);
            }
            out.insert(out.end(), item.begin(), item.end());
            any = true;
        }
        if (top) {
            skip_ws();
            if (pos != s.size()) throw ParseError("trailing input", pos);
            if (!any) throw ParseError("empty word spec", pos);
        } else if (!any) {
            throw ParseError("empty commutator part", pos);
        }
        return out;
    }
};

std::vector<Letter> gamma_left(int d) {
    // [[..[x1,x2],..],xd]
    std::vector<Letter> acc = {{1, +1}};
    for (int k = 2; k <= d; ++k) acc = commutator_letters(acc, {{k, +1}});
    return acc;
}

std::vector<Letter> gamma_right(int d, int first = 1) {
    // [x_first, gamma_right(d-1) over the next variables]
    if (d == 1) return {{first, +1}};
    return commutator_letters({{first, +1}}, gamma_right(d - 1, first + 1));
}

}  // namespace

Word Word::from_letters(std::vector<Letter> letters) {
    for (const Letter& l : letters) {
        if (l.var < 1 || l.var > static_cast<int>(kMaxLength))
            throw ContractError("variable index out of range 1.." + std::to_string(kMaxLength));
        if (l.sign != 1 && l.sign != -1) throw ContractError("letter sign must be +-1");
    }
    Word w;
    w.letters_ = reduce_letters(letters);
    if (w.letters_.size() > kMaxLength)
        throw ContractError("word length " + std::to_string(w.letters_.size()) + " exceeds cap " +
                            std::to_string(kMaxLength));
    for (const Letter& l : w.letters_) w.rank_ = std::max(w.rank_, l.var);
    return w;
}

Word Word::parse(const std::string& spec) {
    if (spec == "comm") return parse("[x1,x2]");
    if (spec == "engel2") return parse("[x1,x2,x2]");
    if (spec == "metab") return parse("[[x1,x2],[x3,x4]]");
    if (spec.rfind("gamma:", 0) == 0 || spec.rfind("gammaR:", 0) == 0) {
        const bool right = spec[5] == 'R';
        int d = 0;
        try {
            d = std::stoi(spec.substr(right ? 7 : 6));
        } catch (const std::exception&) {
            throw ParseError("malformed gamma spec", 6);
        }
        if (d < 2 || d > kMaxRank) throw ContractError("gamma:d needs 2 <= d <= 9");
        return from_letters(right ? gamma_right(d) : gamma_left(d));
    }
    Parser p(spec);
    return from_letters(p.parse_seq(true));
}

int Word::multiplicity(int var) const {
    int m = 0;
    for (const Letter& l : letters_)
        if (l.var == var) ++m;
    return m;
}

std::vector<int> Word::multiplicities() const {
    std::vector<int> m(static_cast<std::size_t>(rank_) + 1, 0);
    for (const Letter& l : letters_) ++m[l.var];
    return m;
}

Word Word::inverse() const {
    Word w;
    w.letters_ = invert_letters(letters_);
    w.rank_ = rank_;
    return w;
}

std::string Word::str() const {
    if (letters_.empty()) return "1";
    std::string out;
    for (const Letter& l : letters_) {
        out += 'x';
        out += static_cast<char>('0' + l.var);
        if (l.sign < 0) out += '\'';
    }
    return out;
}

int evaluate(const Word& w, const FiniteGroup& G, const std::vector<int>& args) {
    if (static_cast<int>(args.size()) < w.rank())
        throw ContractError("evaluate: fewer arguments than word rank");
    int acc = 0;
    for (const Letter& l : w.letters()) {
        const int a = args[static_cast<std::size_t>(l.var - 1)];
        acc = G.mul(acc, l.sign > 0 ? a : G.inv(a));
    }
    return acc;
}

// ------------------------------------------------------------- variations

bool Variation::is_identity_variation() const {
    return std::all_of(labels.begin(), labels.end(), [](int l) { return l == 1; });
}

std::string Variation::id() const {
    std::string out;
    const std::vector<int> mult = base.multiplicities();
    for (int v = 1; v <= base.rank(); ++v) {
        if (mult[v] == 0) continue;
        if (!out.empty()) out += '|';
        out += std::to_string(v) + ":";
        for (std::size_t i = 0; i < labels.size(); ++i)
            if (base.letters()[i].var == v) out += static_cast<char>('0' + labels[i]);
    }
    return out;
}

namespace {

Variation make_variation(const Word& base, std::vector<int> labels) {
    Variation var;
    var.base = base;
    var.labels = std::move(labels);
    // Renumber (variable, label) pairs to fresh variables 1..K ordered by
    // (variable, label), so the identity variation reproduces the base word.
    std::map<std::pair<int, int>, int> fresh;
    for (std::size_t i = 0; i < base.letters().size(); ++i)
        fresh[{base.letters()[i].var, var.labels[i]}] = 0;
    for (auto& [key, number] : fresh) {
        number = static_cast<int>(var.origin.size()) + 1;
        var.origin.push_back(key.first);
    }
    std::vector<Letter> letters;
    for (std::size_t i = 0; i < base.letters().size(); ++i) {
        const Letter& l = base.letters()[i];
        letters.push_back({fresh[{l.var, var.labels[i]}], l.sign});
    }
    var.induced = Word::from_letters(letters);
    return var;
}

// All restricted growth strings of length n (set partitions in canonical
// label order), emitted lexicographically.
void rgs_enumerate(int n, std::vector<std::vector<int>>& out) {
    std::vector<int> cur(n, 1);
    std::function<void(int, int)> rec = [&](int i, int maxseen) {
        if (i == n) {
            out.push_back(cur);
            return;
        }
        for (int l = 1; l <= maxseen + 1; ++l) {
            cur[i] = l;
            rec(i + 1, std::max(maxseen, l));
        }
    };
    if (n == 0)
        out.push_back({});
    else
        rec(0, 0);
}

}  // namespace

std::uint64_t bell_number(int n) {
    // Bell triangle.
    std::vector<std::vector<std::uint64_t>> tri = {{1}};
    for (int i = 1; i <= n; ++i) {
        std::vector<std::uint64_t> row = {tri.back().back()};
        for (std::uint64_t v : tri.back()) row.push_back(row.back() + v);
        tri.push_back(std::move(row));
    }
    return tri[static_cast<std::size_t>(n)][0];
}

std::vector<Variation> variations(const Word& w, std::uint64_t budget) {
    const std::vector<int> mult = w.multiplicities();
    std::uint64_t count = 1;
    for (int v = 1; v <= w.rank(); ++v) count *= bell_number(mult[v]);
    if (count > budget)
        throw BudgetError("canonical variation stream of " + w.str() + " has " +
                              std::to_string(count) + " members",
                          std::to_string(count));

    // Per-variable RGS choices, then the cross product.
    std::vector<std::vector<std::vector<int>>> choices(static_cast<std::size_t>(w.rank()) + 1);
    for (int v = 1; v <= w.rank(); ++v) rgs_enumerate(mult[v], choices[v]);

    std::vector<Variation> out;
    std::vector<std::size_t> pick(static_cast<std::size_t>(w.rank()) + 1, 0);
    while (true) {
        std::vector<int> labels(w.length());
        std::vector<int> seen(static_cast<std::size_t>(w.rank()) + 1, 0);
        for (std::size_t i = 0; i < w.length(); ++i) {
            const int v = w.letters()[i].var;
            labels[i] = choices[v][pick[v]][static_cast<std::size_t>(seen[v]++)];
        }
        out.push_back(make_variation(w, std::move(labels)));
        int v = w.rank();
        while (v >= 1 && ++pick[v] == choices[v].size()) {
            pick[v] = 0;
            --v;
        }
        if (v < 1) break;
    }
    return out;
}

std::vector<Variation> restricted_variations(const Word& w) {
    std::vector<Variation> out;
    std::vector<int> ones(w.length(), 1);
    out.push_back(make_variation(w, ones));
    const std::vector<int> mult = w.multiplicities();
    for (int v = 1; v <= w.rank(); ++v) {
        if (mult[v] < 2) continue;
        // Two-class RGS over this variable's occurrences: first occurrence
        // fixed to label 1, the rest free over {1,2}, not all 1.
        const int free = mult[v] - 1;
        for (std::uint32_t bits = 1; bits < (1u << free); ++bits) {
            std::vector<int> labels = ones;
            int seen = 0;
            for (std::size_t i = 0; i < w.length(); ++i) {
                if (w.letters()[i].var != v) continue;
                if (seen > 0) labels[i] = (bits >> (seen - 1)) & 1 ? 2 : 1;
                ++seen;
            }
            out.push_back(make_variation(w, std::move(labels)));
        }
    }
    return out;
}

// ------------------------------------------------------------- vsmb_prune

PruneResult vsmb_prune(const Word& w) {
    if (w.length() == 0) return {false, 0, "empty word"};
    const std::vector<int> mult = w.multiplicities();

    for (int v = 1; v <= w.rank(); ++v)
        if (mult[v] == 1)
            return {true, 1, "variable x" + std::to_string(v) + " has multiplicity 1"};

    bool one_var = true;
    for (const Letter& l : w.letters()) one_var = one_var && l.var == w.letters()[0].var;
    if (w.length() <= 8 && !(one_var && w.length() == 8))
        return {true, 3, "length " + std::to_string(w.length()) + " <= 8 and not a power word"};

    for (int v = 1; v <= w.rank(); ++v) {
        if (mult[v] != 2) continue;
        std::size_t first = w.length(), second = w.length();
        for (std::size_t i = 0; i < w.length(); ++i)
            if (w.letters()[i].var == v) (first == w.length() ? first : second) = i;
        const Letter a = w.letters()[first], b = w.letters()[second];
        if (a.sign == b.sign)
            return {true, 2, "variable x" + std::to_string(v) + " occurs twice with equal signs"};
        std::vector<Letter> inner(w.letters().begin() + static_cast<long>(first) + 1,
                                  w.letters().begin() + static_cast<long>(second));
        const PruneResult sub = vsmb_prune(Word::from_letters(std::move(inner)));
        if (sub.vsmb_by_lemma)
            return {true, 2,
                    "variable x" + std::to_string(v) +
                        " occurs twice with opposite signs around a certified inner word (" +
                        sub.reason + ")"};
    }
    return {false, 0, "no lemma rule applies"};
}

}  // namespace wordgap
