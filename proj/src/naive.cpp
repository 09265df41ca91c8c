#include "tlaut/naive.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <unordered_map>

namespace tlaut {

std::string_view to_string(Verdict verdict) {
    return verdict == Verdict::Accept ? "accept" : "reject";
}

Tape make_tape(const Automaton& aut, std::string_view word) {
    auto letters = aut.encode(word);
    Tape tape;
    tape.reserve(letters.size());
    for (std::size_t i = 0; i < letters.size(); ++i) {
        tape.push_back({static_cast<std::uint32_t>(i), letters[i]});
    }
    return tape;
}

namespace {

std::size_t first_visible(const Automaton& aut, StateIndex q, const Tape& tape, std::size_t from) {
    while (from < tape.size() && aut.is_translucent(q, tape[from].letter)) {
        ++from;
    }
    return from;
}

Tape without(const Tape& tape, std::size_t index) {
    Tape out;
    out.reserve(tape.size() - 1);
    out.insert(out.end(), tape.begin(), tape.begin() + static_cast<std::ptrdiff_t>(index));
    out.insert(out.end(), tape.begin() + static_cast<std::ptrdiff_t>(index) + 1, tape.end());
    return out;
}

void hash_mix(std::size_t& seed, std::size_t value) {
    seed ^= value + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
}

std::size_t hash_tape(std::size_t seed, const Tape& tape) {
    for (const auto& cell : tape) {
        hash_mix(seed, cell.position);
    }
    return seed;
}

struct ReturningHash {
    std::size_t operator()(const ReturningConfig& c) const { return hash_tape(c.state, c.remaining); }
};

struct NonReturningHash {
    std::size_t operator()(const NonReturningConfig& c) const {
        std::size_t seed = c.state;
        hash_mix(seed, c.head);
        return hash_tape(seed, c.live);
    }
};

StepOutcome<ReturningConfig> next(const Automaton& aut, const ReturningConfig& cfg) {
    return step_returning(aut, cfg);
}

StepOutcome<NonReturningConfig> next(const Automaton& aut, const NonReturningConfig& cfg) {
    return step_nonreturning(aut, cfg);
}

// Iterative depth-first search over the configuration graph. Gray marks the
// configurations on the current path, so an edge into a gray configuration
// closes a cycle.
template <class Config, class Hash>
SearchResult explore(const Automaton& aut, const std::vector<Config>& roots, bool stop_at_accept) {
    enum class Color : std::uint8_t { Gray, Black };
    struct Frame {
        Config config;
        std::vector<Config> successors;
        std::size_t next = 0;
    };

    SearchResult result;
    std::unordered_map<Config, Color, Hash> color;
    std::vector<Frame> stack;

    auto enter = [&](Config config) {
        color.emplace(config, Color::Gray);
        ++result.configurations;
        Frame frame{std::move(config), {}, 0};
        auto outcome = next(aut, frame.config);
        if (auto* terminal = std::get_if<Terminal>(&outcome)) {
            if (terminal->verdict == Verdict::Accept) {
                result.verdict = Verdict::Accept;
            }
        } else {
            for (auto& s : std::get<0>(outcome)) {
                frame.successors.push_back(std::move(s.config));
            }
        }
        stack.push_back(std::move(frame));
    };

    for (const auto& root : roots) {
        if (color.count(root) != 0) {
            ++result.revisits;
            continue;
        }
        enter(root);
        while (!stack.empty()) {
            if (stop_at_accept && result.verdict == Verdict::Accept) {
                return result;
            }
            auto& top = stack.back();
            if (top.next == top.successors.size()) {
                color[top.config] = Color::Black;
                stack.pop_back();
                continue;
            }
            Config successor = std::move(top.successors[top.next++]);
            auto it = color.find(successor);
            if (it != color.end()) {
                ++result.revisits;
                if (it->second == Color::Gray) {
                    result.has_cycle = true;
                }
                continue;
            }
            enter(std::move(successor));
        }
    }
    return result;
}

SearchResult search(const Automaton& aut, std::string_view word, bool stop_at_accept) {
    require_valid(aut);
    auto tape = make_tape(aut, word);
    SearchResult result;
    if (is_returning(aut.kind)) {
        std::vector<ReturningConfig> roots;
        for (auto q : aut.initial) {
            roots.push_back({q, tape});
        }
        result = explore<ReturningConfig, ReturningHash>(aut, roots, stop_at_accept);
    } else {
        std::vector<NonReturningConfig> roots;
        for (auto q : aut.initial) {
            roots.push_back({q, tape, 0});
        }
        result = explore<NonReturningConfig, NonReturningHash>(aut, roots, stop_at_accept);
    }
    assert(word.size() >= 40 ||
           static_cast<double>(result.configurations) <=
               static_cast<double>(aut.num_states()) * std::ldexp(1.0, static_cast<int>(word.size())) *
                   static_cast<double>(word.size() + 1));
    return result;
}

}  // namespace

StepOutcome<ReturningConfig> step_returning(const Automaton& aut, const ReturningConfig& cfg) {
    if (!is_returning(aut.kind)) {
        throw Error(ErrorCode::WrongKind, "step_returning needs an NFAwtl or DFAwtl");
    }
    const auto q = cfg.state;
    auto i = first_visible(aut, q, cfg.remaining, 0);
    if (i == cfg.remaining.size()) {
        if (aut.is_final(q)) {
            return Terminal{Step::end_accept(q), Verdict::Accept};
        }
        return Terminal{Step::stuck(q, StuckReason::NotFinal), Verdict::Reject};
    }
    const auto cell = cfg.remaining[i];
    const auto& targets = aut.delta[q][cell.letter];
    if (targets.empty()) {
        return Terminal{Step::stuck(q, StuckReason::NoTransition, cell), Verdict::Reject};
    }
    std::vector<Successor<ReturningConfig>> out;
    auto rest = without(cfg.remaining, i);
    for (auto p : targets) {
        out.push_back({Step::remove(q, p, cell), ReturningConfig{p, rest}});
    }
    return out;
}

StepOutcome<NonReturningConfig> step_nonreturning(const Automaton& aut, const NonReturningConfig& cfg) {
    if (is_returning(aut.kind)) {
        throw Error(ErrorCode::WrongKind, "step_nonreturning needs an nrNFAwtl or nrDFAwtl");
    }
    const auto q = cfg.state;
    auto i = first_visible(aut, q, cfg.live, cfg.head);
    std::vector<Successor<NonReturningConfig>> out;
    if (i < cfg.live.size()) {
        const auto cell = cfg.live[i];
        const auto& targets = aut.delta[q][cell.letter];
        if (targets.empty()) {
            return Terminal{Step::stuck(q, StuckReason::NoTransition, cell), Verdict::Reject};
        }
        auto rest = without(cfg.live, i);
        for (auto p : targets) {
            out.push_back({Step::remove(q, p, cell), NonReturningConfig{p, rest, i}});
        }
        return out;
    }
    const auto& action = aut.end[q];
    switch (action.type) {
        case EndAction::Type::Accept:
            return Terminal{Step::end_accept(q), Verdict::Accept};
        case EndAction::Type::Reject:
            return Terminal{Step::stuck(q, StuckReason::NoEndAction), Verdict::Reject};
        case EndAction::Type::GoTo:
            for (auto p : action.targets) {
                out.push_back({Step::end_goto(q, p), NonReturningConfig{p, cfg.live, 0}});
            }
            return out;
    }
    return out;
}

SearchResult search_naive(const Automaton& aut, std::string_view word) {
    return search(aut, word, false);
}

Verdict accepts_naive(const Automaton& aut, std::string_view word) {
    return search(aut, word, true).verdict;
}

std::size_t default_fuel(const Automaton& aut, std::size_t word_length) {
    return (aut.num_states() + 1) * (word_length + 1) * (word_length + 1);
}

namespace {

template <class Config>
std::variant<Trace, FuelExhausted> run_trace(const Automaton& aut, Config config, Trace trace, std::size_t fuel) {
    while (trace.steps.size() < fuel) {
        auto outcome = next(aut, config);
        if (auto* terminal = std::get_if<Terminal>(&outcome)) {
            trace.steps.push_back(terminal->step);
            trace.verdict = terminal->verdict;
            return trace;
        }
        auto& successors = std::get<0>(outcome);
        // Deterministic: exactly one successor when not terminal.
        trace.steps.push_back(successors.front().step);
        config = std::move(successors.front().config);
    }
    return FuelExhausted{std::move(trace), fuel};
}

}  // namespace

std::variant<Trace, FuelExhausted> trace_deterministic(const Automaton& aut, std::string_view word,
                                                       std::optional<std::size_t> fuel) {
    require_deterministic_kind(aut);
    require_valid(aut);
    auto tape = make_tape(aut, word);
    Trace trace;
    trace.initial_state = aut.initial.front();
    trace.input = Word(word);
    const auto budget = fuel.value_or(default_fuel(aut, word.size()));
    if (is_returning(aut.kind)) {
        return run_trace(aut, ReturningConfig{trace.initial_state, std::move(tape)}, std::move(trace), budget);
    }
    return run_trace(aut, NonReturningConfig{trace.initial_state, std::move(tape), 0}, std::move(trace), budget);
}

std::vector<SweepRecord> decompose(const Trace& trace) {
    std::vector<SweepRecord> sweeps;
    SweepRecord current{trace.initial_state, trace.initial_state, {}};
    for (const auto& step : trace.steps) {
        switch (step.type) {
            case Step::Type::Delete:
                current.deleted_positions.push_back(step.position);
                current.end_state = step.to;
                break;
            case Step::Type::EndGoTo:
                current.end_state = step.from;
                sweeps.push_back(std::move(current));
                current = SweepRecord{step.to, step.to, {}};
                break;
            case Step::Type::EndAccept:
            case Step::Type::Stuck:
                current.end_state = step.from;
                break;
        }
    }
    sweeps.push_back(std::move(current));
    return sweeps;
}

namespace {

std::string describe(const Automaton& aut, const Trace& trace, const Step& step) {
    switch (step.type) {
        case Step::Type::Delete:
            return std::string("delete ") + trace.input[step.position] + "@" + std::to_string(step.position) +
                   " -> " + aut.states[step.to];
        case Step::Type::EndGoTo:
            return "end -> " + aut.states[step.to];
        case Step::Type::EndAccept:
            return "accept";
        case Step::Type::Stuck:
            switch (step.reason) {
                case StuckReason::NoTransition:
                    return std::string("reject: no transition on ") + trace.input[step.position] + "@" +
                           std::to_string(step.position);
                case StuckReason::NoEndAction:
                    return "reject: no end action";
                case StuckReason::NotFinal:
                    return "reject: not final";
                case StuckReason::EndLoop:
                    return "reject: end-marker loop";
            }
    }
    return "?";
}

}  // namespace

std::string render_trace(const Automaton& aut, const Trace& trace) {
    std::vector<std::uint32_t> live(trace.input.size());
    for (std::size_t i = 0; i < live.size(); ++i) {
        live[i] = static_cast<std::uint32_t>(i);
    }
    const bool returning = is_returning(aut.kind);
    std::size_t head = 0;
    StateIndex state = trace.initial_state;
    std::string out;
    for (const auto& step : trace.steps) {
        out += aut.states[state];
        out += " | ";
        for (std::size_t i = 0; i <= live.size(); ++i) {
            if (i == head) {
                out += '^';
            }
            if (i < live.size()) {
                out += trace.input[live[i]];
            }
        }
        out += " | ";
        out += describe(aut, trace, step);
        out += '\n';
        if (step.type == Step::Type::Delete) {
            auto it = std::lower_bound(live.begin(), live.end(), step.position);
            head = returning ? 0 : static_cast<std::size_t>(it - live.begin());
            live.erase(it);
            state = step.to;
        } else if (step.type == Step::Type::EndGoTo) {
            head = 0;
            state = step.to;
        }
    }
    return out;
}

}  // namespace tlaut
