#include "tlaut/analysis.hpp"

#include <algorithm>

#include "tlaut/naive.hpp"

namespace tlaut {

Membership::Membership(const Automaton& aut, Engine engine) : aut_(aut) {
    require_valid(aut_);
    if (engine == Engine::Fast || (engine == Engine::Auto && is_deterministic(aut_.kind))) {
        fast_ = std::make_shared<const FastEngine>(aut_);
    }
}

bool Membership::operator()(std::string_view word) const {
    const auto verdict = fast_ ? fast_->accepts(word) : accepts_naive(aut_, word);
    return verdict == Verdict::Accept;
}

std::uint64_t count_words(std::size_t letters, std::size_t max_len) {
    std::uint64_t total = 0;
    std::uint64_t layer = 1;
    for (std::size_t len = 0; len <= max_len; ++len) {
        if (total > UINT64_MAX - layer) {
            return UINT64_MAX;
        }
        total += layer;
        if (letters == 0) {
            break;
        }
        if (layer > UINT64_MAX / letters) {
            layer = UINT64_MAX;
        } else {
            layer *= letters;
        }
    }
    return total;
}

void for_each_word(const std::string& alphabet, std::size_t max_len, const std::function<bool(const Word&)>& visit) {
    if (!visit(Word())) {
        return;
    }
    if (alphabet.empty()) {
        return;
    }
    for (std::size_t len = 1; len <= max_len; ++len) {
        // Odometer over letter indices; the last position varies fastest.
        std::vector<std::size_t> digits(len, 0);
        Word word(len, alphabet[0]);
        while (true) {
            if (!visit(word)) {
                return;
            }
            std::size_t i = len;
            while (i > 0 && digits[i - 1] + 1 == alphabet.size()) {
                digits[i - 1] = 0;
                word[i - 1] = alphabet[0];
                --i;
            }
            if (i == 0) {
                break;
            }
            word[i - 1] = alphabet[++digits[i - 1]];
        }
    }
}

namespace {

void check_budget(std::uint64_t needed, std::uint64_t budget, std::size_t max_len) {
    if (needed > budget) {
        throw Error(ErrorCode::BudgetExceeded, "up to length " + std::to_string(max_len) + " needs " +
                                                   std::to_string(needed) + " membership tests; budget is " +
                                                   std::to_string(budget));
    }
}

}  // namespace

EnumerationResult enumerate_accepted(const Automaton& aut, std::size_t max_len, Engine engine, std::uint64_t budget) {
    check_budget(count_words(aut.num_letters(), max_len), budget, max_len);
    Membership member(aut, engine);
    EnumerationResult result{max_len, {}};
    for_each_word(aut.alphabet, max_len, [&](const Word& w) {
        if (member(w)) {
            result.accepted.push_back(w);
        }
        return true;
    });
    return result;
}

std::variant<Word, NoWitness> bounded_emptiness(const Automaton& aut, std::size_t max_len, std::uint64_t budget) {
    check_budget(count_words(aut.num_letters(), max_len), budget, max_len);
    Membership member(aut);
    std::optional<Word> witness;
    for_each_word(aut.alphabet, max_len, [&](const Word& w) {
        if (member(w)) {
            witness = w;
            return false;
        }
        return true;
    });
    if (witness) {
        return *witness;
    }
    return NoWitness{max_len};
}

ParikhVector parikh(const Automaton& aut, std::string_view word) {
    ParikhVector counts(aut.num_letters(), 0);
    for (auto a : aut.encode(word)) {
        ++counts[a];
    }
    return counts;
}

std::set<ParikhVector> parikh_sample(const Automaton& aut, std::size_t max_len, std::uint64_t budget) {
    std::set<ParikhVector> vectors;
    for (const auto& w : enumerate_accepted(aut, max_len, Engine::Auto, budget).accepted) {
        vectors.insert(parikh(aut, w));
    }
    return vectors;
}

std::variant<Equal, Counterexample> equivalent_up_to(const Automaton& a1, const Automaton& a2, std::size_t max_len,
                                                     std::uint64_t budget) {
    std::string s1 = a1.alphabet, s2 = a2.alphabet;
    std::sort(s1.begin(), s1.end());
    std::sort(s2.begin(), s2.end());
    if (s1 != s2) {
        throw Error(ErrorCode::AlphabetMismatch, "equivalence check needs equal alphabets");
    }
    const auto words = count_words(a1.num_letters(), max_len);
    check_budget(words > UINT64_MAX / 2 ? UINT64_MAX : 2 * words, budget, max_len);
    Membership m1(a1), m2(a2);
    std::optional<Word> witness;
    for_each_word(a1.alphabet, max_len, [&](const Word& w) {
        if (m1(w) != m2(w)) {
            witness = w;
            return false;
        }
        return true;
    });
    if (witness) {
        return Counterexample{*witness};
    }
    return Equal{};
}

namespace {

std::string quoted(std::string_view text) {
    std::string out = "\"";
    for (char c : text) {
        if (c == '"' || c == '\\') {
            out += '\\';
        }
        out += c;
    }
    return out + '"';
}

std::string skip_prefix(const Automaton& aut, StateIndex q) {
    std::vector<char> letters;
    for (LetterIndex a = 0; a < aut.num_letters(); ++a) {
        if (aut.translucent[q][a]) {
            letters.push_back(aut.alphabet[a]);
        }
    }
    if (letters.empty()) {
        return "";
    }
    if (letters.size() == 1) {
        return std::string(1, letters[0]) + "*";
    }
    std::string set = "{";
    for (std::size_t i = 0; i < letters.size(); ++i) {
        set += (i ? "," : "") + std::string(1, letters[i]);
    }
    return set + "}*";
}

std::string edge_label(const std::string& skip, std::string_view symbol) {
    return skip.empty() ? std::string(symbol) : "(" + skip + ", " + std::string(symbol) + ")";
}

constexpr std::string_view kEndMarker = "◁";

}  // namespace

std::string to_diagram(const Automaton& aut) {
    require_valid(aut);
    const auto start = quoted(fresh_name(aut.states, "__start"));
    const auto accept = quoted(fresh_name(aut.states, "__accept"));
    std::string out = "digraph automaton {\n  rankdir=LR;\n  node [shape=circle];\n";
    out += "  " + start + " [shape=point];\n";
    out += "  " + accept + " [shape=box, label=\"Accept\"];\n";
    for (const auto& name : aut.states) {
        out += "  " + quoted(name) + ";\n";
    }
    for (auto q : aut.initial) {
        out += "  " + start + " -> " + quoted(aut.states[q]) + ";\n";
    }
    auto edge = [&](const std::string& from, const std::string& to, const std::string& label) {
        out += "  " + from + " -> " + to + " [label=" + quoted(label) + "];\n";
    };
    for (StateIndex q = 0; q < aut.num_states(); ++q) {
        const auto from = quoted(aut.states[q]);
        const auto skip = skip_prefix(aut, q);
        for (LetterIndex a = 0; a < aut.num_letters(); ++a) {
            for (auto p : aut.delta[q][a]) {
                edge(from, quoted(aut.states[p]), edge_label(skip, std::string(1, aut.alphabet[a])));
            }
        }
        const auto end_label = edge_label(skip, kEndMarker);
        const auto& action = aut.end[q];
        if (action.is_accept() || (is_returning(aut.kind) && aut.is_final(q))) {
            edge(from, accept, end_label);
        }
        for (auto p : action.targets) {
            edge(from, quoted(aut.states[p]), end_label);
        }
    }
    out += "}\n";
    return out;
}

}  // namespace tlaut
