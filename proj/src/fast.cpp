#include "tlaut/fast.hpp"

#include <stdexcept>

namespace tlaut {

PositionIndex::PositionIndex(std::span<const LetterIndex> tape, std::size_t alphabet_size)
    : by_letter_(alphabet_size), letter_at_(tape.begin(), tape.end()), live_(tape.size(), true), size_(tape.size()) {
    for (std::size_t i = 0; i < tape.size(); ++i) {
        if (tape[i] >= alphabet_size) {
            throw std::out_of_range("letter index outside the alphabet");
        }
        by_letter_[tape[i]].insert(by_letter_[tape[i]].end(), static_cast<std::uint32_t>(i));
    }
}

std::optional<std::uint32_t> PositionIndex::successor_at_or_after(LetterIndex letter, std::uint32_t from) const {
    ++operations_;
    const auto& tree = by_letter_[letter];
    auto it = tree.lower_bound(from);
    if (it == tree.end()) {
        return std::nullopt;
    }
    return *it;
}

LetterIndex PositionIndex::erase(std::uint32_t position) {
    if (!is_live(position)) {
        throw std::out_of_range("position " + std::to_string(position) + " is not live");
    }
    ++operations_;
    auto letter = letter_at_[position];
    by_letter_[letter].erase(position);
    live_[position] = false;
    --size_;
    return letter;
}

bool PositionIndex::is_live(std::uint32_t position) const {
    return position < live_.size() && live_[position];
}

namespace {

std::optional<Visible> first_visible_among(const PositionIndex& index, std::uint32_t head,
                                           std::span<const LetterIndex> letters) {
    std::optional<Visible> best;
    for (auto a : letters) {
        auto p = index.successor_at_or_after(a, head);
        if (p && (!best || *p < best->position)) {
            best = Visible{*p, a};
        }
    }
    return best;
}

}  // namespace

std::optional<Visible> first_visible(const PositionIndex& index, std::uint32_t head, const LetterSet& translucent) {
    std::vector<LetterIndex> letters;
    for (LetterIndex a = 0; a < index.alphabet_size(); ++a) {
        if (!translucent[a]) {
            letters.push_back(a);
        }
    }
    return first_visible_among(index, head, letters);
}

FastEngine::FastEngine(const Automaton& aut) : aut_(aut), visible_letters_(aut.num_states()) {
    require_deterministic_kind(aut);
    require_valid(aut);
    letter_of_.fill(-1);
    for (LetterIndex a = 0; a < aut.num_letters(); ++a) {
        letter_of_[static_cast<unsigned char>(aut.alphabet[a])] = static_cast<int>(a);
    }
    for (StateIndex q = 0; q < aut.num_states(); ++q) {
        for (LetterIndex a = 0; a < aut.num_letters(); ++a) {
            if (!aut.translucent[q][a]) {
                visible_letters_[q].push_back(a);
            }
        }
    }
}

FastResult FastEngine::run(std::string_view word, bool want_trace) const {
    std::vector<LetterIndex> tape;
    tape.reserve(word.size());
    for (char c : word) {
        int a = letter_of_[static_cast<unsigned char>(c)];
        if (a < 0) {
            throw Error(ErrorCode::BadWord, std::string("letter '") + c + "' is not in the alphabet");
        }
        tape.push_back(static_cast<LetterIndex>(a));
    }

    PositionIndex index(tape, aut_.num_letters());
    const bool returning = is_returning(aut_.kind);
    FastResult result;
    if (want_trace) {
        result.trace = Trace{aut_.initial.front(), Word(word), {}, Verdict::Reject};
    }
    auto finish = [&](Verdict verdict, const Step& step) {
        result.verdict = verdict;
        result.stats.index_ops = index.operations();
        if (result.trace) {
            result.trace->steps.push_back(step);
            result.trace->verdict = verdict;
        }
        return result;
    };

    // marked_at[q] == epoch  <=>  q is in S, where epoch counts deletions.
    std::vector<std::uint64_t> marked_at(aut_.num_states(), UINT64_MAX);
    std::uint64_t epoch = 0;
    StateIndex state = aut_.initial.front();
    std::uint32_t head = 0;

    while (true) {
        auto hit = first_visible_among(index, head, visible_letters_[state]);
        if (hit) {
            const Cell cell{hit->position, hit->letter};
            const auto& targets = aut_.delta[state][hit->letter];
            if (targets.empty()) {
                return finish(Verdict::Reject, Step::stuck(state, StuckReason::NoTransition, cell));
            }
            index.erase(hit->position);
            ++result.stats.deletions;
            ++epoch;
            if (result.trace) {
                result.trace->steps.push_back(Step::remove(state, targets.front(), cell));
            }
            state = targets.front();
            head = returning ? 0 : hit->position;
            continue;
        }

        if (returning) {
            if (aut_.is_final(state)) {
                ++result.stats.end_events;
                return finish(Verdict::Accept, Step::end_accept(state));
            }
            return finish(Verdict::Reject, Step::stuck(state, StuckReason::NotFinal));
        }

        const auto& action = aut_.end[state];
        if (action.is_accept()) {
            ++result.stats.end_events;
            return finish(Verdict::Accept, Step::end_accept(state));
        }
        if (action.is_reject()) {
            return finish(Verdict::Reject, Step::stuck(state, StuckReason::NoEndAction));
        }
        if (marked_at[state] == epoch) {
            return finish(Verdict::Reject, Step::stuck(state, StuckReason::EndLoop));
        }
        marked_at[state] = epoch;
        ++result.stats.end_events;
        const auto target = action.targets.front();
        if (result.trace) {
            result.trace->steps.push_back(Step::end_goto(state, target));
        }
        state = target;
        head = 0;
    }
}

FastResult run_fast(const Automaton& aut, std::string_view word, bool want_trace) {
    return FastEngine(aut).run(word, want_trace);
}

FastResult run_fast_returning(const Automaton& aut, std::string_view word) {
    if (aut.kind != Kind::DFAwtl) {
        throw Error(ErrorCode::WrongKind, "run_fast_returning needs a DFAwtl");
    }
    return FastEngine(aut).run(word);
}

}  // namespace tlaut
