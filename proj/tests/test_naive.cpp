#include <doctest.h>

#include <cmath>

#include "support/support.hpp"
#include "tlaut/corpus.hpp"
#include "tlaut/naive.hpp"

using namespace tlaut;

namespace {

std::vector<std::string> state_sequence(const Automaton& aut, const Trace& trace) {
    std::vector<std::string> names;
    for (const auto& step : trace.steps) {
        names.push_back(aut.states[step.from]);
    }
    return names;
}

Trace must_trace(const Automaton& aut, std::string_view word) {
    auto result = trace_deterministic(aut, word);
    REQUIRE(std::holds_alternative<Trace>(result));
    return std::get<Trace>(result);
}

Tape tape_at(const Automaton& aut, std::string_view word, std::vector<std::uint32_t> positions) {
    const auto full = make_tape(aut, word);
    Tape out;
    for (auto p : positions) {
        out.push_back(full[p]);
    }
    return out;
}

}  // namespace

TEST_CASE("returning step on the shuffle-copy automaton") {
    const auto aut = corpus::shuffle_copy().automaton;
    const auto q0 = aut.state_index("q0");

    auto first = step_returning(aut, {q0, make_tape(aut, "abbABaBA")});
    auto& succ = std::get<0>(first);
    REQUIRE(succ.size() == 1);
    CHECK(aut.states[succ[0].config.state] == "qa'");
    CHECK(succ[0].config.remaining == tape_at(aut, "abbABaBA", {1, 2, 3, 4, 5, 6, 7}));

    auto done = step_returning(aut, {q0, {}});
    CHECK(std::get<Terminal>(done).verdict == Verdict::Accept);

    auto stuck = step_returning(aut, {aut.state_index("qa"), make_tape(aut, "bA")});
    const auto& terminal = std::get<Terminal>(stuck);
    CHECK(terminal.verdict == Verdict::Reject);
    CHECK(terminal.step.reason == StuckReason::NoTransition);
    CHECK(terminal.step.position == 0);

    CHECK_THROWS_AS(step_nonreturning(aut, {q0, {}, 0}), Error);
}

TEST_CASE("non-returning step continues from the deletion point") {
    const auto aut = corpus::anbncn().automaton;
    // After q_a deleted the first a of aabbcc.
    NonReturningConfig cfg{aut.state_index("qb"), tape_at(aut, "aabbcc", {1, 2, 3, 4, 5}), 0};
    auto succ = std::get<0>(step_nonreturning(aut, cfg));
    REQUIRE(succ.size() == 1);
    CHECK(aut.states[succ[0].config.state] == "qc");
    CHECK(succ[0].step.position == 2);
    CHECK(succ[0].config.head == 1);
    CHECK(succ[0].config.live == tape_at(aut, "aabbcc", {1, 3, 4, 5}));

    CHECK_THROWS_AS(step_returning(aut, {0, {}}), Error);
}

TEST_CASE("non-returning end marker branches to every target with the head reset") {
    const auto aut = corpus::end_loop().automaton;
    NonReturningConfig cfg{aut.state_index("p"), make_tape(aut, "aaaa"), 2};
    auto succ = std::get<0>(step_nonreturning(aut, cfg));
    REQUIRE(succ.size() == 2);
    CHECK(aut.states[succ[0].config.state] == "q");
    CHECK(aut.states[succ[1].config.state] == "r");
    for (const auto& s : succ) {
        CHECK(s.step.type == Step::Type::EndGoTo);
        CHECK(s.config.head == 0);
        CHECK(s.config.live.size() == 4);
    }
}

TEST_CASE("an empty tape with no end action rejects") {
    const auto aut = corpus::empty().automaton;
    auto outcome = step_nonreturning(aut, {aut.state_index("q0"), {}, 0});
    CHECK(std::get<Terminal>(outcome).verdict == Verdict::Reject);
    CHECK(std::get<Terminal>(outcome).step.reason == StuckReason::NoEndAction);
}

TEST_CASE("exhaustive acceptance on the examples") {
    CHECK(accepts_naive(corpus::end_loop().automaton, "aabaa") == Verdict::Accept);
    CHECK(accepts_naive(corpus::anbncn().automaton, "aabbcc") == Verdict::Accept);
    CHECK(accepts_naive(corpus::anbncn().automaton, "aabbc") == Verdict::Reject);
    CHECK(accepts_naive(corpus::shuffle_copy().automaton, "abbABaBA") == Verdict::Accept);
    CHECK_THROWS_AS(accepts_naive(corpus::anbncn().automaton, "abd"), Error);
}

TEST_CASE("the visited set cuts the p/q end-marker loop") {
    const auto det = search_naive(corpus::end_loop_deterministic().automaton, "aabaa");
    CHECK(det.verdict == Verdict::Reject);
    CHECK(det.has_cycle);
    CHECK(det.revisits >= 1);

    const auto nondet = search_naive(corpus::end_loop().automaton, "aabaa");
    CHECK(nondet.verdict == Verdict::Accept);
    CHECK(nondet.has_cycle);

    CHECK_FALSE(search_naive(corpus::anbncn().automaton, "aabbcc").has_cycle);
}

TEST_CASE("trace of a^2 b^2 c^2") {
    const auto aut = corpus::anbncn().automaton;
    const auto trace = must_trace(aut, "aabbcc");
    CHECK(trace.verdict == Verdict::Accept);
    CHECK(trace.steps.size() == 9);
    CHECK(state_sequence(aut, trace) ==
          std::vector<std::string>{"qa", "qb", "qc", "qr", "qa", "qb", "qc", "qr", "qa"});
    CHECK(trace.steps.back().type == Step::Type::EndAccept);
    CHECK(render_trace(aut, trace) ==
          "qa | ^aabbcc | delete a@0 -> qb\n"
          "qb | ^abbcc | delete b@2 -> qc\n"
          "qc | a^bcc | delete c@4 -> qr\n"
          "qr | ab^c | end -> qa\n"
          "qa | ^abc | delete a@1 -> qb\n"
          "qb | ^bc | delete b@3 -> qc\n"
          "qc | ^c | delete c@5 -> qr\n"
          "qr | ^ | end -> qa\n"
          "qa | ^ | accept\n");
}

TEST_CASE("trace of abc on the exp3 automaton") {
    const auto aut = corpus::exp3().automaton;
    const auto trace = must_trace(aut, "abc");
    CHECK(state_sequence(aut, trace) == std::vector<std::string>{"q0", "q1", "q2", "q7", "q8"});
    CHECK(trace.verdict == Verdict::Accept);
}

TEST_CASE("trace of the empty word is a single accepting step") {
    const auto trace = must_trace(corpus::anbncn().automaton, "");
    REQUIRE(trace.steps.size() == 1);
    CHECK(trace.steps[0].type == Step::Type::EndAccept);
}

TEST_CASE("trace of the shuffle-copy example") {
    const auto aut = corpus::shuffle_copy().automaton;
    const auto trace = must_trace(aut, "abbABaBA");
    CHECK(state_sequence(aut, trace) ==
          std::vector<std::string>{"q0", "qa'", "q0", "qb'", "q0", "qb'", "q0", "qa'", "q0"});
    CHECK(trace.verdict == Verdict::Accept);
}

TEST_CASE("an endless deterministic run exhausts its fuel") {
    const auto aut = corpus::end_loop_deterministic().automaton;
    auto result = trace_deterministic(aut, "aa", 50);
    REQUIRE(std::holds_alternative<FuelExhausted>(result));
    CHECK(std::get<FuelExhausted>(result).partial.steps.size() == 50);
    CHECK(default_fuel(aut, 2) == 4 * 9);
    CHECK_THROWS_AS(trace_deterministic(corpus::end_loop().automaton, "a"), Error);
}

TEST_CASE("decompose splits at end-marker moves") {
    SUBCASE("a^2 b^2 c^2") {
        const auto aut = corpus::anbncn().automaton;
        const auto sweeps = decompose(must_trace(aut, "aabbcc"));
        REQUIRE(sweeps.size() == 3);
        CHECK(sweeps[0].deleted_positions == std::vector<std::uint32_t>{0, 2, 4});
        CHECK(sweeps[1].deleted_positions == std::vector<std::uint32_t>{1, 3, 5});
        CHECK(sweeps[2].deleted_positions.empty());
        CHECK(aut.states[sweeps[0].start_state] == "qa");
        CHECK(aut.states[sweeps[0].end_state] == "qr");
        CHECK(aut.states[sweeps[2].end_state] == "qa");
    }
    SUBCASE("no end-marker move gives one sweep") {
        const auto sweeps = decompose(must_trace(corpus::anbncn().automaton, "b"));
        CHECK(sweeps.size() == 1);
    }
    SUBCASE("(abc)^3 on exp3") {
        const auto aut = corpus::exp3().automaton;
        const auto sweeps = decompose(must_trace(aut, "abcabcabc"));
        REQUIRE(sweeps.size() == 3);
        CHECK(sweeps[0].deleted_positions.size() == 6);
        CHECK(aut.states[sweeps[0].end_state] == "q6");
        CHECK(sweeps[1].deleted_positions.size() == 2);
        CHECK(sweeps[2].deleted_positions.size() == 1);
    }
}

TEST_CASE("trace invariants on random non-returning automata") {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 300; ++i) {
        const auto aut = testing::random_automaton(rng, {Kind::nrDFAwtl, 4, 3});
        const auto word = testing::random_word(rng, aut.alphabet, 8);
        auto result = trace_deterministic(aut, word);
        const auto& trace =
            std::holds_alternative<Trace>(result) ? std::get<Trace>(result) : std::get<FuelExhausted>(result).partial;
        std::vector<std::uint32_t> all;
        for (const auto& sweep : decompose(trace)) {
            for (std::size_t j = 1; j < sweep.deleted_positions.size(); ++j) {
                CHECK(sweep.deleted_positions[j - 1] < sweep.deleted_positions[j]);
            }
            all.insert(all.end(), sweep.deleted_positions.begin(), sweep.deleted_positions.end());
        }
        std::vector<std::uint32_t> deleted;
        for (const auto& step : trace.steps) {
            if (step.type == Step::Type::Delete) {
                deleted.push_back(step.position);
            }
        }
        CHECK(all == deleted);
        CHECK(deleted.size() <= word.size());
        std::sort(deleted.begin(), deleted.end());
        CHECK(std::adjacent_find(deleted.begin(), deleted.end()) == deleted.end());
    }
}

TEST_CASE("search stays within the configuration bound") {
    std::mt19937_64 rng(8);
    for (int i = 0; i < 200; ++i) {
        const auto aut = testing::random_automaton(rng, {Kind::nrNFAwtl, 4, 2});
        const auto word = testing::random_word(rng, aut.alphabet, 7);
        const auto result = search_naive(aut, word);
        const double bound =
            static_cast<double>(aut.num_states()) * std::ldexp(1.0, static_cast<int>(word.size())) * (word.size() + 1);
        CHECK(static_cast<double>(result.configurations) <= bound);
    }
}

TEST_CASE("returning search agrees with a plain recursive reference") {
    const auto aut = corpus::shuffle_copy().automaton;
    const std::vector<std::string> pairs{"ab", "aA", "aB", "bA", "bB", "AB"};
    for (const auto& letters : pairs) {
        for (const auto& w : testing::all_words(letters, 8)) {
            CAPTURE(w);
            CHECK((accepts_naive(aut, w) == Verdict::Accept) == testing::returning_reference(aut, w));
        }
    }
    std::mt19937_64 rng(3);
    for (int i = 0; i < 100; ++i) {
        testing::RandomSpec spec{i % 2 ? Kind::NFAwtl : Kind::DFAwtl, 4, 2};
        const auto random = testing::random_automaton(rng, spec);
        for (const auto& w : testing::all_words(random.alphabet, 6)) {
            CHECK((accepts_naive(random, w) == Verdict::Accept) == testing::returning_reference(random, w));
        }
    }
}
