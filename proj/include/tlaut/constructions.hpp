#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "tlaut/automaton.hpp"

namespace tlaut {

// Language-preserving transformations. Every function takes a valid automaton
// and returns a new valid one; none of them touches its input.

/// Simulates an NFAwtl/DFAwtl by a non-returning automaton: each state q gets
/// a partner q' that is blind to every letter and restarts in q at the end
/// marker. Deterministic inputs give deterministic outputs.
Automaton embed_nfawtl(const Automaton& aut);

/// Pairs every state with the set S of states in which the end marker was
/// passed since the last deletion and forbids passing it twice in one state.
/// Only pairs reachable from the initial states are built.
Automaton eliminate_end_loops(const Automaton& aut);

/// Adds a state q_e that deletes the rest of the tape before accepting and
/// routes every former Accept through it.
Automaton complete_reading(const Automaton& aut);

/// complete_reading(eliminate_end_loops(aut)).
Automaton normalize(const Automaton& aut);

/// Disjoint union; states are suffixed with "·1" and "·2". Always nrNFAwtl.
Automaton union_of(const Automaton& a1, const Automaton& a2);

/// Shuffle of languages over disjoint alphabets: run a1 blind to a2's letters,
/// then on acceptance restart in a2 blind to a1's letters. The result is
/// nrDFAwtl when both inputs are deterministic, nrNFAwtl otherwise.
Automaton disjoint_shuffle(const Automaton& a1, const Automaton& a2);

/// Complement of an nrDFAwtl. The input is normalized first so that it has no
/// infinite computations; then every stuck situation is sent to an accepting
/// sink q_+ and every Accept becomes Reject.
Automaton complement_deterministic(const Automaton& aut);

/// Ordinary NFA with epsilon moves. Symbol index `alphabet.size()` is epsilon.
struct ClassicalNFA {
    std::vector<std::string> states;
    std::string alphabet;
    StateSet initial;
    StateSet final_states;
    std::vector<std::vector<StateSet>> delta;  // [state][symbol], symbol <= alphabet.size()

    LetterIndex epsilon() const { return static_cast<LetterIndex>(alphabet.size()); }

    bool operator==(const ClassicalNFA&) const = default;
};

/// NFA for the language of a non-returning automaton over a one-letter
/// alphabet. Works on normalize(aut): letter moves are copied, end-marker
/// GoTo moves of states blind to the letter become epsilon moves, and a state
/// is final when, on an empty tape, its chain of end-marker moves reaches Accept.
ClassicalNFA unary_to_nfa(const Automaton& aut);

bool nfa_accepts(const ClassicalNFA& nfa, std::string_view word);

/// TLA-style text with `@type NFA`; epsilon moves use the symbol EPS.
std::string serialize_nfa(const ClassicalNFA& nfa);

}  // namespace tlaut
