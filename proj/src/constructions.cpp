#include "tlaut/constructions.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace tlaut {

namespace {

void require_nonreturning(const Automaton& aut, std::string_view what) {
    if (is_returning(aut.kind)) {
        throw Error(ErrorCode::WrongKind, std::string(what) + " needs a non-returning automaton (nrNFAwtl or nrDFAwtl)");
    }
}

LetterSet all_letters(std::size_t count) {
    LetterSet set;
    for (std::size_t a = 0; a < count; ++a) {
        set.set(a);
    }
    return set;
}

StateSet shifted(const StateSet& set, StateIndex offset) {
    StateSet out;
    out.reserve(set.size());
    for (auto q : set) {
        out.push_back(q + offset);
    }
    return out;
}

std::vector<std::string> suffixed(const std::vector<std::string>& names, std::string_view suffix) {
    std::vector<std::string> out;
    out.reserve(names.size());
    for (const auto& n : names) {
        out.push_back(n + std::string(suffix));
    }
    return out;
}

// Appends `states` of `part` (letter a of `part` is letter map[a] of `out`) at `offset`.
void copy_component(Automaton& out, const Automaton& part, StateIndex offset, const std::vector<LetterIndex>& map) {
    for (StateIndex q = 0; q < part.num_states(); ++q) {
        for (LetterIndex a = 0; a < part.num_letters(); ++a) {
            if (part.translucent[q][a]) {
                out.translucent[q + offset].set(map[a]);
            }
            out.delta[q + offset][map[a]] = shifted(part.delta[q][a], offset);
        }
        const auto& action = part.end[q];
        out.end[q + offset] = action.is_goto() ? EndAction::go_to(shifted(action.targets, offset)) : action;
    }
}

std::vector<LetterIndex> identity_map(std::size_t n, LetterIndex offset = 0) {
    std::vector<LetterIndex> map(n);
    for (std::size_t a = 0; a < n; ++a) {
        map[a] = static_cast<LetterIndex>(a) + offset;
    }
    return map;
}

}  // namespace

Automaton embed_nfawtl(const Automaton& aut) {
    if (!is_returning(aut.kind)) {
        throw Error(ErrorCode::WrongKind, "embed needs an NFAwtl or DFAwtl");
    }
    require_valid(aut);
    const auto n = static_cast<StateIndex>(aut.num_states());
    std::vector<std::string> names = aut.states;
    for (StateIndex q = 0; q < n; ++q) {
        names.push_back(fresh_name(names, aut.states[q] + "'"));
    }
    Automaton out(aut.kind == Kind::DFAwtl ? Kind::nrDFAwtl : Kind::nrNFAwtl, std::move(names), aut.alphabet);
    out.initial = aut.initial;
    const auto blind = all_letters(aut.num_letters());
    for (StateIndex q = 0; q < n; ++q) {
        out.translucent[q] = aut.translucent[q];
        out.translucent[q + n] = blind;
        for (LetterIndex a = 0; a < aut.num_letters(); ++a) {
            out.delta[q][a] = shifted(aut.delta[q][a], n);
        }
        out.end[q] = aut.is_final(q) ? EndAction::accept() : EndAction::reject();
        out.end[q + n] = EndAction::go_to({q});
    }
    return out;
}

Automaton eliminate_end_loops(const Automaton& aut) {
    require_nonreturning(aut, "eliminate_end_loops");
    require_valid(aut);

    using Pair = std::pair<StateIndex, StateSet>;
    std::map<Pair, StateIndex> index;
    std::vector<Pair> pairs;
    std::deque<StateIndex> work;
    auto intern = [&](Pair pair) {
        auto [it, inserted] = index.emplace(pair, static_cast<StateIndex>(pairs.size()));
        if (inserted) {
            pairs.push_back(std::move(pair));
            work.push_back(it->second);
        }
        return it->second;
    };

    StateSet initial;
    for (auto q : aut.initial) {
        insert_sorted(initial, intern({q, {}}));
    }

    struct Row {
        std::vector<StateSet> delta;
        EndAction end;
    };
    std::vector<Row> rows;
    while (!work.empty()) {
        const auto id = work.front();
        work.pop_front();
        const auto q = pairs[id].first;
        const auto seen = pairs[id].second;
        Row row{std::vector<StateSet>(aut.num_letters()), EndAction::reject()};
        for (LetterIndex a = 0; a < aut.num_letters(); ++a) {
            for (auto p : aut.delta[q][a]) {
                insert_sorted(row.delta[a], intern({p, {}}));
            }
        }
        const auto& action = aut.end[q];
        if (action.is_accept()) {
            row.end = EndAction::accept();
        } else if (action.is_goto() && !contains(seen, q)) {
            auto next_seen = seen;
            insert_sorted(next_seen, q);
            StateSet targets;
            for (auto p : action.targets) {
                insert_sorted(targets, intern({p, next_seen}));
            }
            row.end = EndAction::go_to(std::move(targets));
        }
        if (rows.size() <= id) {
            rows.resize(id + 1);
        }
        rows[id] = std::move(row);
    }

    std::vector<std::string> names;
    for (const auto& [q, seen] : pairs) {
        std::string name = "(" + aut.states[q] + ",{";
        for (std::size_t i = 0; i < seen.size(); ++i) {
            name += (i ? "," : "") + aut.states[seen[i]];
        }
        names.push_back(fresh_name(names, name + "})"));
    }
    Automaton out(aut.kind, std::move(names), aut.alphabet);
    out.initial = std::move(initial);
    for (StateIndex id = 0; id < pairs.size(); ++id) {
        out.translucent[id] = aut.translucent[pairs[id].first];
        out.delta[id] = std::move(rows[id].delta);
        out.end[id] = std::move(rows[id].end);
    }
    return out;
}

Automaton complete_reading(const Automaton& aut) {
    require_nonreturning(aut, "complete_reading");
    require_valid(aut);
    auto names = aut.states;
    names.push_back(fresh_name(names, "q_e"));
    Automaton out(aut.kind, std::move(names), aut.alphabet);
    const auto sink = static_cast<StateIndex>(aut.num_states());
    out.initial = aut.initial;
    copy_component(out, aut, 0, identity_map(aut.num_letters()));
    for (StateIndex q = 0; q < sink; ++q) {
        if (out.end[q].is_accept()) {
            out.end[q] = EndAction::go_to({sink});
        }
    }
    for (LetterIndex a = 0; a < aut.num_letters(); ++a) {
        out.delta[sink][a] = {sink};
    }
    out.end[sink] = EndAction::accept();
    return out;
}

Automaton normalize(const Automaton& aut) {
    return complete_reading(eliminate_end_loops(aut));
}

Automaton union_of(const Automaton& a1, const Automaton& a2) {
    require_nonreturning(a1, "union");
    require_nonreturning(a2, "union");
    require_valid(a1);
    require_valid(a2);
    std::string sorted1 = a1.alphabet, sorted2 = a2.alphabet;
    std::sort(sorted1.begin(), sorted1.end());
    std::sort(sorted2.begin(), sorted2.end());
    if (sorted1 != sorted2) {
        throw Error(ErrorCode::AlphabetMismatch, "union needs equal alphabets");
    }
    auto names = suffixed(a1.states, "·1");
    auto second = suffixed(a2.states, "·2");
    names.insert(names.end(), second.begin(), second.end());
    Automaton out(Kind::nrNFAwtl, std::move(names), a1.alphabet);
    const auto offset = static_cast<StateIndex>(a1.num_states());
    std::vector<LetterIndex> map2(a2.num_letters());
    for (LetterIndex a = 0; a < a2.num_letters(); ++a) {
        map2[a] = a1.letter_index(a2.alphabet[a]);
    }
    copy_component(out, a1, 0, identity_map(a1.num_letters()));
    copy_component(out, a2, offset, map2);
    out.initial = a1.initial;
    for (auto q : a2.initial) {
        out.initial.push_back(q + offset);
    }
    return out;
}

Automaton disjoint_shuffle(const Automaton& a1, const Automaton& a2) {
    require_nonreturning(a1, "shuffle");
    require_nonreturning(a2, "shuffle");
    require_valid(a1);
    require_valid(a2);
    for (char c : a2.alphabet) {
        if (a1.find_letter(c)) {
            throw Error(ErrorCode::OverlappingAlphabet,
                        std::string("shuffle needs disjoint alphabets; both contain '") + c + "'");
        }
    }
    auto names = suffixed(a1.states, "·1");
    auto second = suffixed(a2.states, "·2");
    names.insert(names.end(), second.begin(), second.end());
    const bool deterministic = is_deterministic(a1.kind) && is_deterministic(a2.kind);
    Automaton out(deterministic ? Kind::nrDFAwtl : Kind::nrNFAwtl, std::move(names), a1.alphabet + a2.alphabet);
    const auto offset = static_cast<StateIndex>(a1.num_states());
    const auto letters1 = static_cast<LetterIndex>(a1.num_letters());
    copy_component(out, a1, 0, identity_map(a1.num_letters()));
    copy_component(out, a2, offset, identity_map(a2.num_letters(), letters1));
    for (StateIndex q = 0; q < out.num_states(); ++q) {
        const bool first = q < offset;
        const LetterIndex lo = first ? letters1 : 0;
        const LetterIndex hi = first ? static_cast<LetterIndex>(out.num_letters()) : letters1;
        for (LetterIndex a = lo; a < hi; ++a) {
            out.translucent[q].set(a);
        }
        if (first && out.end[q].is_accept()) {
            auto second_initial = shifted(a2.initial, offset);
            out.end[q] = second_initial.empty() ? EndAction::reject() : EndAction::go_to(std::move(second_initial));
        }
    }
    out.initial = a1.initial;
    return out;
}

Automaton complement_deterministic(const Automaton& aut) {
    require_deterministic_kind(aut);
    if (aut.kind != Kind::nrDFAwtl) {
        throw Error(ErrorCode::WrongKind, "complement needs an nrDFAwtl");
    }
    require_valid(aut);
    const auto normal = normalize(aut);
    auto names = normal.states;
    names.push_back(fresh_name(names, "q_+"));
    Automaton out(Kind::nrDFAwtl, std::move(names), normal.alphabet);
    const auto sink = static_cast<StateIndex>(normal.num_states());
    out.initial = normal.initial;
    copy_component(out, normal, 0, identity_map(normal.num_letters()));
    for (StateIndex q = 0; q < sink; ++q) {
        for (LetterIndex a = 0; a < out.num_letters(); ++a) {
            if (!out.translucent[q][a] && out.delta[q][a].empty()) {
                out.delta[q][a] = {sink};
            }
        }
        auto& action = out.end[q];
        if (action.is_accept()) {
            action = EndAction::reject();
        } else if (action.is_reject()) {
            action = EndAction::go_to({sink});
        }
    }
    out.translucent[sink] = all_letters(out.num_letters());
    out.end[sink] = EndAction::accept();
    return out;
}

ClassicalNFA unary_to_nfa(const Automaton& aut) {
    require_nonreturning(aut, "unary-nfa");
    if (aut.num_letters() != 1) {
        throw Error(ErrorCode::NonUnary, "unary-nfa needs a one-letter alphabet");
    }
    const auto normal = normalize(aut);
    const auto n = normal.num_states();

    ClassicalNFA nfa;
    nfa.states = normal.states;
    nfa.alphabet = normal.alphabet;
    nfa.initial = normal.initial;
    nfa.delta.assign(n, std::vector<StateSet>(2));
    for (StateIndex q = 0; q < n; ++q) {
        nfa.delta[q][0] = normal.delta[q][0];
        if (normal.translucent[q][0] && normal.end[q].is_goto()) {
            nfa.delta[q][nfa.epsilon()] = normal.end[q].targets;
        }
    }

    // On an empty tape every state is at the end marker, so acceptance from q
    // only depends on its chain of end-marker moves.
    std::vector<bool> accepting(n, false);
    for (bool changed = true; changed;) {
        changed = false;
        for (StateIndex q = 0; q < n; ++q) {
            if (accepting[q]) {
                continue;
            }
            const auto& action = normal.end[q];
            bool ok = action.is_accept() ||
                      std::any_of(action.targets.begin(), action.targets.end(), [&](auto p) { return accepting[p]; });
            if (ok) {
                accepting[q] = true;
                changed = true;
            }
        }
    }
    for (StateIndex q = 0; q < n; ++q) {
        if (accepting[q]) {
            nfa.final_states.push_back(q);
        }
    }
    return nfa;
}

namespace {

void epsilon_close(const ClassicalNFA& nfa, std::vector<bool>& set) {
    std::vector<StateIndex> stack;
    for (StateIndex q = 0; q < set.size(); ++q) {
        if (set[q]) {
            stack.push_back(q);
        }
    }
    while (!stack.empty()) {
        auto q = stack.back();
        stack.pop_back();
        for (auto p : nfa.delta[q][nfa.epsilon()]) {
            if (!set[p]) {
                set[p] = true;
                stack.push_back(p);
            }
        }
    }
}

}  // namespace

bool nfa_accepts(const ClassicalNFA& nfa, std::string_view word) {
    std::vector<bool> current(nfa.states.size(), false);
    for (auto q : nfa.initial) {
        current[q] = true;
    }
    epsilon_close(nfa, current);
    for (char c : word) {
        auto pos = nfa.alphabet.find(c);
        if (pos == std::string::npos) {
            throw Error(ErrorCode::BadWord, std::string("letter '") + c + "' is not in the alphabet");
        }
        std::vector<bool> next(nfa.states.size(), false);
        for (StateIndex q = 0; q < current.size(); ++q) {
            if (current[q]) {
                for (auto p : nfa.delta[q][pos]) {
                    next[p] = true;
                }
            }
        }
        epsilon_close(nfa, next);
        current = std::move(next);
    }
    return std::any_of(nfa.final_states.begin(), nfa.final_states.end(), [&](auto q) { return current[q]; });
}

std::string serialize_nfa(const ClassicalNFA& nfa) {
    auto list = [&](const StateSet& set) {
        std::string s;
        for (auto q : set) {
            s += ' ' + nfa.states[q];
        }
        return s;
    };
    std::string out = "@type NFA\n@alphabet";
    for (char c : nfa.alphabet) {
        out += ' ';
        out += c;
    }
    out += "\n@states";
    for (const auto& name : nfa.states) {
        out += ' ' + name;
    }
    out += "\n@initial" + list(nfa.initial) + "\n@final" + list(nfa.final_states) + "\n";
    for (StateIndex q = 0; q < nfa.states.size(); ++q) {
        for (LetterIndex a = 0; a <= nfa.alphabet.size(); ++a) {
            if (!nfa.delta[q][a].empty()) {
                std::string symbol = a == nfa.epsilon() ? std::string("EPS") : std::string(1, nfa.alphabet[a]);
                out += "@delta " + nfa.states[q] + ' ' + symbol + " ->" + list(nfa.delta[q][a]) + '\n';
            }
        }
    }
    return out;
}

}  // namespace tlaut
