#include "tlaut/automaton.hpp"

#include <algorithm>
#include <set>

namespace tlaut {

std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::Syntax: return "syntax";
        case ErrorCode::Duplicate: return "duplicate";
        case ErrorCode::UnknownName: return "unknown-name";
        case ErrorCode::ConflictingEnd: return "conflicting-end";
        case ErrorCode::InvalidAutomaton: return "invalid-automaton";
        case ErrorCode::WrongKind: return "wrong-kind";
        case ErrorCode::Nondeterministic: return "nondeterministic";
        case ErrorCode::AlphabetMismatch: return "alphabet-mismatch";
        case ErrorCode::OverlappingAlphabet: return "overlapping-alphabet";
        case ErrorCode::NonUnary: return "non-unary";
        case ErrorCode::BudgetExceeded: return "budget-exceeded";
        case ErrorCode::BadWord: return "bad-word";
        case ErrorCode::Io: return "io";
    }
    return "unknown";
}

std::string_view to_string(Kind kind) {
    switch (kind) {
        case Kind::NFAwtl: return "NFAwtl";
        case Kind::DFAwtl: return "DFAwtl";
        case Kind::nrNFAwtl: return "nrNFAwtl";
        case Kind::nrDFAwtl: return "nrDFAwtl";
    }
    return "?";
}

std::optional<Kind> kind_from_string(std::string_view text) {
    for (Kind k : {Kind::NFAwtl, Kind::DFAwtl, Kind::nrNFAwtl, Kind::nrDFAwtl}) {
        if (to_string(k) == text) {
            return k;
        }
    }
    return std::nullopt;
}

bool is_valid_letter(char c) {
    return c > ' ' && c < 0x7f && c != '#';
}

bool is_valid_state_name(std::string_view name) {
    if (name.empty() || name == "END" || name == "ACCEPT" || name == "->" || name == "=") {
        return false;
    }
    return std::none_of(name.begin(), name.end(), [](char c) {
        auto u = static_cast<unsigned char>(c);
        return u <= ' ' || u == 0x7f || c == '#';
    });
}

std::string fresh_name(const std::vector<std::string>& taken, std::string base) {
    while (std::find(taken.begin(), taken.end(), base) != taken.end()) {
        base += '\'';
    }
    return base;
}

void insert_sorted(StateSet& set, StateIndex q) {
    auto it = std::lower_bound(set.begin(), set.end(), q);
    if (it == set.end() || *it != q) {
        set.insert(it, q);
    }
}

bool contains(const StateSet& set, StateIndex q) {
    return std::binary_search(set.begin(), set.end(), q);
}

Automaton::Automaton(Kind k, std::vector<std::string> state_names, std::string letters)
    : kind(k),
      states(std::move(state_names)),
      alphabet(std::move(letters)),
      translucent(states.size()),
      delta(states.size(), std::vector<StateSet>(alphabet.size())),
      end(states.size()) {}

std::optional<StateIndex> Automaton::find_state(std::string_view name) const {
    auto it = std::find(states.begin(), states.end(), name);
    if (it == states.end()) {
        return std::nullopt;
    }
    return static_cast<StateIndex>(it - states.begin());
}

std::optional<LetterIndex> Automaton::find_letter(char letter) const {
    auto pos = alphabet.find(letter);
    if (pos == std::string::npos) {
        return std::nullopt;
    }
    return static_cast<LetterIndex>(pos);
}

StateIndex Automaton::state_index(std::string_view name) const {
    if (auto q = find_state(name)) {
        return *q;
    }
    throw Error(ErrorCode::UnknownName, "unknown state '" + std::string(name) + "'");
}

LetterIndex Automaton::letter_index(char letter) const {
    if (auto a = find_letter(letter)) {
        return *a;
    }
    throw Error(ErrorCode::UnknownName, std::string("unknown letter '") + letter + "'");
}

bool Automaton::is_final(StateIndex q) const {
    return contains(final_states, q);
}

std::vector<LetterIndex> Automaton::encode(std::string_view word) const {
    std::vector<LetterIndex> out;
    out.reserve(word.size());
    for (char c : word) {
        auto a = find_letter(c);
        if (!a) {
            throw Error(ErrorCode::BadWord, std::string("letter '") + c + "' is not in the alphabet");
        }
        out.push_back(*a);
    }
    return out;
}

Builder::Builder(Kind kind, std::vector<std::string> states, std::string alphabet)
    : aut_(kind, std::move(states), std::move(alphabet)) {}

Builder& Builder::initial(std::string_view state) {
    insert_sorted(aut_.initial, aut_.state_index(state));
    return *this;
}

Builder& Builder::final_state(std::string_view state) {
    insert_sorted(aut_.final_states, aut_.state_index(state));
    return *this;
}

Builder& Builder::translucent(std::string_view state, std::string_view letters) {
    auto q = aut_.state_index(state);
    for (char c : letters) {
        aut_.translucent[q].set(aut_.letter_index(c));
    }
    return *this;
}

Builder& Builder::delta(std::string_view from, char letter, std::string_view to) {
    insert_sorted(aut_.delta[aut_.state_index(from)][aut_.letter_index(letter)], aut_.state_index(to));
    return *this;
}

Builder& Builder::end_accept(std::string_view state) {
    aut_.end[aut_.state_index(state)] = EndAction::accept();
    return *this;
}

Builder& Builder::end_goto(std::string_view from, std::string_view to) {
    auto& action = aut_.end[aut_.state_index(from)];
    action.type = EndAction::Type::GoTo;
    insert_sorted(action.targets, aut_.state_index(to));
    return *this;
}

namespace {

class Checker {
public:
    explicit Checker(const Automaton& aut) : aut_(aut) {}

    ValidationReport run() {
        if (!check_shape()) {
            return std::move(report_);
        }
        check_names();
        check_state_set(aut_.initial, "reference.initial", "initial set");
        check_state_set(aut_.final_states, "reference.final", "final set");
        check_transitions();
        check_kind();
        if (is_deterministic(aut_.kind)) {
            check_determinism();
        }
        return std::move(report_);
    }

private:
    void add(std::string rule, std::string description, std::string subject) {
        report_.violations.push_back({std::move(rule), std::move(description), std::move(subject)});
    }

    std::string state(StateIndex q) const { return "state " + aut_.states[q]; }
    std::string letter(LetterIndex a) const { return std::string("letter ") + aut_.alphabet[a]; }

    bool check_shape() {
        const auto n = aut_.num_states();
        bool ok = aut_.translucent.size() == n && aut_.delta.size() == n && aut_.end.size() == n;
        for (std::size_t q = 0; ok && q < n; ++q) {
            ok = aut_.delta[q].size() == aut_.num_letters();
        }
        if (!ok) {
            add("shape", "per-state tables do not match the state and letter counts", "");
        }
        if (aut_.num_letters() > kMaxLetters) {
            add("alphabet.size", "alphabet exceeds " + std::to_string(kMaxLetters) + " letters", "");
            ok = false;
        }
        return ok;
    }

    void check_names() {
        std::set<char> seen_letters;
        for (char c : aut_.alphabet) {
            if (!is_valid_letter(c)) {
                add("alphabet.letter", "letter must be a printable non-space character other than '#'",
                    std::string("letter ") + c);
            }
            if (!seen_letters.insert(c).second) {
                add("alphabet.duplicate", "letter declared twice", std::string("letter ") + c);
            }
        }
        std::set<std::string> seen_states;
        for (const auto& name : aut_.states) {
            if (!is_valid_state_name(name)) {
                add("states.name", "state name must be a non-reserved token without whitespace or '#'",
                    "state " + name);
            }
            if (!seen_states.insert(name).second) {
                add("states.duplicate", "state declared twice", "state " + name);
            }
        }
    }

    void check_state_set(const StateSet& set, const std::string& rule, const std::string& what) {
        for (std::size_t i = 0; i < set.size(); ++i) {
            if (set[i] >= aut_.num_states()) {
                add(rule, what + " refers to a state that does not exist", "index " + std::to_string(set[i]));
            } else if (i > 0 && set[i] <= set[i - 1]) {
                add(rule, what + " is not sorted and duplicate-free", state(set[i]));
            }
        }
    }

    void check_transitions() {
        for (StateIndex q = 0; q < aut_.num_states(); ++q) {
            if ((aut_.translucent[q] >> aut_.num_letters()).any()) {
                add("reference.translucent", "translucent set contains a letter outside the alphabet", state(q));
            }
            for (LetterIndex a = 0; a < aut_.num_letters(); ++a) {
                const auto& targets = aut_.delta[q][a];
                check_state_set(targets, "reference.delta", "transition target set");
                if (aut_.translucent[q][a] && !targets.empty()) {
                    add("translucency", "a translucent letter must have no transitions", state(q) + ", " + letter(a));
                }
            }
            const auto& action = aut_.end[q];
            check_state_set(action.targets, "reference.end", "end-marker target set");
            if (action.is_goto() && action.targets.empty()) {
                add("end.empty-goto", "end-marker GoTo must name at least one state (use Reject instead)", state(q));
            }
            if (!action.is_goto() && !action.targets.empty()) {
                add("end.stray-targets", "only GoTo end actions carry target states", state(q));
            }
        }
    }

    void check_kind() {
        if (is_returning(aut_.kind)) {
            for (StateIndex q = 0; q < aut_.num_states(); ++q) {
                if (!aut_.end[q].is_reject()) {
                    add("kind.end", "returning automata have no end-marker transitions", state(q));
                }
            }
        } else if (!aut_.final_states.empty()) {
            add("kind.final", "non-returning automata have no final states", "");
        }
    }

    void check_determinism() {
        if (aut_.initial.size() != 1) {
            add("determinism.initial", "a deterministic automaton needs exactly one initial state",
                std::to_string(aut_.initial.size()) + " initial states");
        }
        for (StateIndex q = 0; q < aut_.num_states(); ++q) {
            for (LetterIndex a = 0; a < aut_.num_letters(); ++a) {
                if (aut_.delta[q][a].size() > 1) {
                    add("determinism.delta", "more than one transition", state(q) + ", " + letter(a));
                }
            }
            if (aut_.end[q].targets.size() > 1) {
                add("determinism.end", "more than one end-marker target", state(q));
            }
        }
    }

    const Automaton& aut_;
    ValidationReport report_;
};

}  // namespace

ValidationReport validate(const Automaton& aut) {
    return Checker(aut).run();
}

void require_valid(const Automaton& aut) {
    auto report = validate(aut);
    if (!report.ok()) {
        const auto& v = report.violations.front();
        throw Error(ErrorCode::InvalidAutomaton,
                    "invalid automaton: " + v.rule + ": " + v.description +
                        (v.subject.empty() ? "" : " (" + v.subject + ")"));
    }
}

void require_deterministic_kind(const Automaton& aut) {
    if (!is_deterministic(aut.kind)) {
        throw Error(ErrorCode::Nondeterministic,
                    std::string("a deterministic automaton is required, got ") + std::string(to_string(aut.kind)));
    }
}

}  // namespace tlaut
