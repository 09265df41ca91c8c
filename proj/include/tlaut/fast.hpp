#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <string_view>
#include <vector>

#include "tlaut/automaton.hpp"
#include "tlaut/naive.hpp"

namespace tlaut {

/// Live tape positions grouped by letter, one balanced search tree per letter.
///
/// Every query and deletion is O(log n) and bumps `operations()`, which is the
/// machine-independent cost measure reported in RunStats.
class PositionIndex {
public:
    PositionIndex(std::span<const LetterIndex> tape, std::size_t alphabet_size);

    /// Least live position >= `from` that holds `letter`.
    std::optional<std::uint32_t> successor_at_or_after(LetterIndex letter, std::uint32_t from) const;

    /// Removes a live position and returns its letter. Throws std::out_of_range if it is not live.
    LetterIndex erase(std::uint32_t position);

    bool is_live(std::uint32_t position) const;
    std::size_t size() const { return size_; }
    std::size_t alphabet_size() const { return by_letter_.size(); }
    std::uint64_t operations() const { return operations_; }

private:
    std::vector<std::set<std::uint32_t>> by_letter_;
    std::vector<LetterIndex> letter_at_;
    std::vector<bool> live_;
    std::size_t size_ = 0;
    mutable std::uint64_t operations_ = 0;
};

struct Visible {
    std::uint32_t position;
    LetterIndex letter;

    bool operator==(const Visible&) const = default;
};

/// First live position >= `head` whose letter is not translucent: the minimum
/// of one successor query per non-translucent letter.
std::optional<Visible> first_visible(const PositionIndex& index, std::uint32_t head, const LetterSet& translucent);

struct RunStats {
    std::uint64_t deletions = 0;
    // End-marker transitions taken (GoTo or Accept).
    std::uint64_t end_events = 0;
    std::uint64_t index_ops = 0;
};

struct FastResult {
    Verdict verdict = Verdict::Reject;
    RunStats stats;
    std::optional<Trace> trace;
};

/// Membership engine for deterministic automata over a PositionIndex.
///
/// Non-returning runs keep the set S of states in which the end marker was
/// reached since the last deletion; reaching the marker again in a state of S
/// means the run is stuck in an infinite loop, so it rejects. DFAwtl runs pin
/// the head to the left end after every deletion and accept at the marker iff
/// the state is final.
class FastEngine {
public:
    /// Throws Error(Nondeterministic) or Error(InvalidAutomaton).
    explicit FastEngine(const Automaton& aut);

    FastResult run(std::string_view word, bool want_trace = false) const;
    Verdict accepts(std::string_view word) const { return run(word).verdict; }

    const Automaton& automaton() const { return aut_; }

private:
    Automaton aut_;
    std::array<int, 256> letter_of_{};
    std::vector<std::vector<LetterIndex>> visible_letters_;  // per state
};

FastResult run_fast(const Automaton& aut, std::string_view word, bool want_trace = false);

/// DFAwtl only; throws Error(WrongKind) otherwise.
FastResult run_fast_returning(const Automaton& aut, std::string_view word);

}  // namespace tlaut
