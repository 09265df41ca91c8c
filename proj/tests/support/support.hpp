#pragma once

// Helpers shared by the test executables: random automata, random words and
// a reference for the returning relation written directly from its
// definition, independent of the library's engines.

#include <random>
#include <string>
#include <vector>

#include "tlaut/automaton.hpp"

namespace tlaut::testing {

struct RandomSpec {
    Kind kind = Kind::nrDFAwtl;
    std::size_t max_states = 5;
    std::size_t max_letters = 3;
    double translucent_p = 0.35;
    double delta_p = 0.6;
    bool allow_empty_alphabet = false;
};

inline Automaton random_automaton(std::mt19937_64& rng, const RandomSpec& spec) {
    auto pick = [&](std::size_t lo, std::size_t hi) {
        return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
    };
    auto coin = [&](double p) { return std::bernoulli_distribution(p)(rng); };

    const std::size_t n = pick(1, spec.max_states);
    const std::size_t k = pick(spec.allow_empty_alphabet ? 0 : 1, spec.max_letters);
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) {
        names.push_back("s" + std::to_string(i));
    }
    Automaton aut(spec.kind, names, std::string("abcdefgh").substr(0, k));
    const bool det = is_deterministic(spec.kind);
    auto some_states = [&](bool single) {
        StateSet set;
        if (single) {
            set.push_back(static_cast<StateIndex>(pick(0, n - 1)));
            return set;
        }
        for (StateIndex q = 0; q < n; ++q) {
            if (coin(0.4)) {
                set.push_back(q);
            }
        }
        if (set.empty()) {
            set.push_back(static_cast<StateIndex>(pick(0, n - 1)));
        }
        return set;
    };

    aut.initial = some_states(det);
    for (StateIndex q = 0; q < n; ++q) {
        for (LetterIndex a = 0; a < k; ++a) {
            if (coin(spec.translucent_p)) {
                aut.translucent[q].set(a);
            } else if (coin(spec.delta_p)) {
                aut.delta[q][a] = some_states(det);
            }
        }
        if (is_returning(spec.kind)) {
            if (coin(0.4)) {
                aut.final_states.push_back(q);
            }
        } else {
            const auto r = pick(0, 2);
            if (r == 1) {
                aut.end[q] = EndAction::accept();
            } else if (r == 2) {
                aut.end[q] = EndAction::go_to(some_states(det));
            }
        }
    }
    return aut;
}

inline Word random_word(std::mt19937_64& rng, const std::string& alphabet, std::size_t max_len) {
    if (alphabet.empty()) {
        return {};
    }
    const auto len = std::uniform_int_distribution<std::size_t>(0, max_len)(rng);
    std::uniform_int_distribution<std::size_t> letter(0, alphabet.size() - 1);
    Word w;
    for (std::size_t i = 0; i < len; ++i) {
        w += alphabet[letter(rng)];
    }
    return w;
}

/// Every word over `alphabet` of length <= max_len, shortest first.
inline std::vector<Word> all_words(const std::string& alphabet, std::size_t max_len) {
    std::vector<Word> words{""};
    std::size_t layer_begin = 0;
    for (std::size_t len = 1; len <= max_len; ++len) {
        const auto layer_end = words.size();
        for (auto i = layer_begin; i < layer_end; ++i) {
            for (char c : alphabet) {
                words.push_back(words[i] + c);
            }
        }
        layer_begin = layer_end;
    }
    return words;
}

/// Returning relation by plain recursion: every step deletes a letter, so
/// the recursion depth is bounded by |w|.
inline bool returning_reference(const Automaton& aut, StateIndex q, const std::string& w) {
    const auto& tau = aut.translucent[q];
    std::size_t i = 0;
    while (i < w.size() && tau[aut.alphabet.find(w[i])]) {
        ++i;
    }
    if (i == w.size()) {
        for (auto f : aut.final_states) {
            if (f == q) {
                return true;
            }
        }
        return false;
    }
    const auto rest = w.substr(0, i) + w.substr(i + 1);
    for (auto p : aut.delta[q][aut.alphabet.find(w[i])]) {
        if (returning_reference(aut, p, rest)) {
            return true;
        }
    }
    return false;
}

inline bool returning_reference(const Automaton& aut, const std::string& w) {
    for (auto q : aut.initial) {
        if (returning_reference(aut, q, w)) {
            return true;
        }
    }
    return false;
}

}  // namespace tlaut::testing
