#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "tlaut/automaton.hpp"

namespace tlaut {

enum class Verdict { Accept, Reject };

std::string_view to_string(Verdict verdict);

/// One live tape square: its position in the original input and its letter.
struct Cell {
    std::uint32_t position;
    LetterIndex letter;

    bool operator==(const Cell&) const = default;
};

using Tape = std::vector<Cell>;

/// Throws Error(BadWord) if `word` uses a letter outside the alphabet.
Tape make_tape(const Automaton& aut, std::string_view word);

/// Configuration `q w <|` of a returning automaton; the head is always at the left end.
struct ReturningConfig {
    StateIndex state;
    Tape remaining;

    bool operator==(const ReturningConfig&) const = default;
};

/// Configuration `x q w <|` of a non-returning automaton. `head` indexes into
/// `live`; the cells before it are x, the rest are w. head == live.size() means
/// the next symbol the head sees is the end marker.
struct NonReturningConfig {
    StateIndex state;
    Tape live;
    std::size_t head = 0;

    bool operator==(const NonReturningConfig&) const = default;
};

enum class StuckReason {
    NoTransition,  // first visible letter has no transition
    NoEndAction,   // end marker reached, end action undefined
    NotFinal,      // returning kind reached the end marker in a non-final state
    EndLoop,       // fast engine: end marker reached twice in one state without a deletion
};

struct Step {
    enum class Type { Delete, EndGoTo, EndAccept, Stuck };

    Type type;
    StateIndex from;
    StateIndex to = 0;           // Delete, EndGoTo
    std::uint32_t position = 0;  // Delete; for Stuck/NoTransition the offending square
    LetterIndex letter = 0;      // Delete; for Stuck/NoTransition the offending letter
    StuckReason reason = StuckReason::NoTransition;

    static Step remove(StateIndex from, StateIndex to, Cell cell) {
        return {Type::Delete, from, to, cell.position, cell.letter, {}};
    }
    static Step end_goto(StateIndex from, StateIndex to) { return {Type::EndGoTo, from, to}; }
    static Step end_accept(StateIndex state) { return {Type::EndAccept, state}; }
    static Step stuck(StateIndex state, StuckReason reason, Cell cell = {0, 0}) {
        return {Type::Stuck, state, 0, cell.position, cell.letter, reason};
    }

    bool operator==(const Step&) const = default;
};

template <class Config>
struct Successor {
    Step step;
    Config config;
};

struct Terminal {
    Step step;
    Verdict verdict;
};

/// Either the successors of a configuration (in declaration order of the
/// target states) or the halting step with its verdict.
template <class Config>
using StepOutcome = std::variant<std::vector<Successor<Config>>, Terminal>;

/// One step of the returning relation. Throws Error(WrongKind) for non-returning kinds.
StepOutcome<ReturningConfig> step_returning(const Automaton& aut, const ReturningConfig& cfg);

/// One step of the non-returning relation. Throws Error(WrongKind) for returning kinds.
StepOutcome<NonReturningConfig> step_nonreturning(const Automaton& aut, const NonReturningConfig& cfg);

struct SearchResult {
    Verdict verdict = Verdict::Reject;
    std::size_t configurations = 0;  // distinct configurations visited
    std::size_t revisits = 0;        // edges into an already visited configuration
    bool has_cycle = false;          // some edge closes a cycle: an infinite computation exists
};

/// Explores the whole configuration graph from every initial state.
SearchResult search_naive(const Automaton& aut, std::string_view word);

/// Accept iff some computation from some initial state reaches Accept.
/// Stops at the first accepting configuration. Infinite computations revisit
/// configurations and are cut off by the visited set.
Verdict accepts_naive(const Automaton& aut, std::string_view word);

struct Trace {
    StateIndex initial_state = 0;
    Word input;
    std::vector<Step> steps;
    Verdict verdict = Verdict::Reject;  // meaningless for a fuel-truncated trace
};

struct FuelExhausted {
    Trace partial;
    std::size_t fuel;
};

/// (|Q|+1)(|w|+1)^2 steps.
std::size_t default_fuel(const Automaton& aut, std::size_t word_length);

/// The unique maximal computation of a deterministic automaton, cut at `fuel` steps.
/// Throws Error(Nondeterministic) for nondeterministic kinds.
std::variant<Trace, FuelExhausted> trace_deterministic(const Automaton& aut, std::string_view word,
                                                       std::optional<std::size_t> fuel = std::nullopt);

struct SweepRecord {
    StateIndex start_state;
    StateIndex end_state;
    std::vector<std::uint32_t> deleted_positions;

    bool operator==(const SweepRecord&) const = default;
};

/// Splits a non-returning trace at its end-marker GoTo steps. A trace always
/// yields at least one sweep; a sweep may delete nothing.
std::vector<SweepRecord> decompose(const Trace& trace);

/// One line per step: `<state> | <x>^<w> | <action>`, the configuration before the step.
std::string render_trace(const Automaton& aut, const Trace& trace);

}  // namespace tlaut
