#pragma once

#include <bitset>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tlaut/error.hpp"

namespace tlaut {

using StateIndex = std::uint32_t;
using LetterIndex = std::uint32_t;

/// Letters are single ASCII characters, so an alphabet never exceeds 128 entries.
inline constexpr std::size_t kMaxLetters = 128;

/// Set of letters, indexed by position in the automaton's alphabet.
using LetterSet = std::bitset<kMaxLetters>;

/// Sorted, duplicate-free list of state indices.
using StateSet = std::vector<StateIndex>;

/// A word is a string of letter characters; the empty string is the empty word.
using Word = std::string;

enum class Kind { NFAwtl, DFAwtl, nrNFAwtl, nrDFAwtl };

std::string_view to_string(Kind kind);
std::optional<Kind> kind_from_string(std::string_view text);

/// Returning kinds move the head back to the left end after every deletion.
constexpr bool is_returning(Kind kind) { return kind == Kind::NFAwtl || kind == Kind::DFAwtl; }
constexpr bool is_deterministic(Kind kind) { return kind == Kind::DFAwtl || kind == Kind::nrDFAwtl; }

/// What a non-returning automaton does when it sees the end-of-tape marker.
struct EndAction {
    enum class Type { Reject, Accept, GoTo };

    Type type = Type::Reject;
    StateSet targets;  // nonempty exactly for GoTo

    static EndAction reject() { return {}; }
    static EndAction accept() { return {Type::Accept, {}}; }
    static EndAction go_to(StateSet targets) { return {Type::GoTo, std::move(targets)}; }

    bool is_accept() const { return type == Type::Accept; }
    bool is_reject() const { return type == Type::Reject; }
    bool is_goto() const { return type == Type::GoTo; }

    bool operator==(const EndAction&) const = default;
};

/// An automaton with translucent letters in any of the four variants.
///
/// States and letters are addressed by index; `states` and `alphabet` keep the
/// declaration order, which is also the canonical serialization order.
/// Returning kinds use `final_states` and leave every `end` entry as Reject;
/// non-returning kinds use `end` and leave `final_states` empty.
struct Automaton {
    Kind kind = Kind::nrNFAwtl;
    std::vector<std::string> states;
    std::string alphabet;
    StateSet initial;
    StateSet final_states;
    std::vector<LetterSet> translucent;          // per state
    std::vector<std::vector<StateSet>> delta;    // [state][letter]
    std::vector<EndAction> end;                  // per state

    Automaton() = default;

    /// Creates an automaton with the given states and letters and no transitions.
    Automaton(Kind kind, std::vector<std::string> state_names, std::string letters);

    std::size_t num_states() const { return states.size(); }
    std::size_t num_letters() const { return alphabet.size(); }

    std::optional<StateIndex> find_state(std::string_view name) const;
    std::optional<LetterIndex> find_letter(char letter) const;

    // Throw Error(UnknownName) when absent.
    StateIndex state_index(std::string_view name) const;
    LetterIndex letter_index(char letter) const;

    bool is_translucent(StateIndex q, LetterIndex a) const { return translucent[q][a]; }
    bool is_final(StateIndex q) const;

    /// Letter indices of `word`; throws Error(BadWord) on a letter outside the alphabet.
    std::vector<LetterIndex> encode(std::string_view word) const;

    bool operator==(const Automaton&) const = default;
};

/// Name-based construction helper used by the fixtures and tests.
class Builder {
public:
    Builder(Kind kind, std::vector<std::string> states, std::string alphabet);

    Builder& initial(std::string_view state);
    Builder& final_state(std::string_view state);
    Builder& translucent(std::string_view state, std::string_view letters);
    Builder& delta(std::string_view from, char letter, std::string_view to);
    Builder& end_accept(std::string_view state);
    Builder& end_goto(std::string_view from, std::string_view to);

    const Automaton& get() const { return aut_; }
    Automaton build() const { return aut_; }

private:
    Automaton aut_;
};

void insert_sorted(StateSet& set, StateIndex q);
bool contains(const StateSet& set, StateIndex q);

struct Violation {
    std::string rule;
    std::string description;
    std::string subject;  // offending state and/or letter
};

struct ValidationReport {
    std::vector<Violation> violations;

    bool ok() const { return violations.empty(); }
};

/// Checks every structural invariant for the automaton's declared kind.
ValidationReport validate(const Automaton& aut);

/// Throws Error(InvalidAutomaton) listing the first violation when `validate` is not empty.
void require_valid(const Automaton& aut);

/// Throws Error(Nondeterministic) unless the kind is DFAwtl or nrDFAwtl.
void require_deterministic_kind(const Automaton& aut);

/// A letter may be any printable ASCII character except the comment sign.
bool is_valid_letter(char c);
bool is_valid_state_name(std::string_view name);

/// Returns `base`, or `base` followed by primes, whichever is not in `taken`.
std::string fresh_name(const std::vector<std::string>& taken, std::string base);

}  // namespace tlaut
