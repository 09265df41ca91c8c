// Acceptance suite. Prints one PASS/FAIL line per criterion; with a numeric
// argument only that criterion runs. Exit status is 0 iff every criterion run
// passed.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "support/support.hpp"
#include "tlaut/analysis.hpp"
#include "tlaut/constructions.hpp"
#include "tlaut/corpus.hpp"
#include "tlaut/fast.hpp"
#include "tlaut/naive.hpp"
#include "tlaut/tla_format.hpp"

using namespace tlaut;

namespace {

// Collects failed checks of one criterion.
struct Checker {
    std::size_t checks = 0;
    std::vector<std::string> failures;

    void operator()(bool ok, const std::string& what) {
        ++checks;
        if (!ok && failures.size() < 5) failures.push_back(what);
        if (!ok && failures.size() == 5) failures.push_back("...");
    }
    bool ok() const { return failures.empty(); }
};

struct Criterion {
    int id;
    std::string title;
    double limit_seconds;
    std::function<void(Checker&, std::ostringstream& info)> body;
};

std::string repeat(std::string_view unit, std::size_t times) {
    std::string out;
    for (std::size_t i = 0; i < times; ++i) out += unit;
    return out;
}

std::string project(std::string_view w, std::string_view keep) {
    std::string out;
    for (char c : w) {
        if (keep.find(c) != std::string_view::npos) out += c;
    }
    return out;
}

std::vector<std::string> from_states(const Automaton& aut, const Trace& trace) {
    std::vector<std::string> names;
    for (const auto& step : trace.steps) names.push_back(aut.states[step.from]);
    return names;
}

void same_language(Checker& check, const std::string& label, const Automaton& a, const Automaton& b,
                   std::size_t max_len) {
    const Membership ma(a), mb(b);
    for_each_word(a.alphabet, max_len, [&](const Word& w) {
        check(ma(w) == mb(w), label + " differs on \"" + w + "\"");
        return true;
    });
}

Automaton relabel(Automaton aut, std::string letters) {
    aut.alphabet = std::move(letters);
    return aut;
}

void trace_replay(Checker& check, std::ostringstream&) {
    const auto equal_abc = corpus::anbncn().automaton;
    const auto t_abc = std::get<Trace>(trace_deterministic(equal_abc, "aabbcc"));
    check(from_states(equal_abc, t_abc) ==
              std::vector<std::string>{"qa", "qb", "qc", "qr", "qa", "qb", "qc", "qr", "qa"},
          "a^n b^n c^n state sequence");
    check(t_abc.steps.back().type == Step::Type::EndAccept && t_abc.verdict == Verdict::Accept,
          "a^n b^n c^n ends in Accept");

    const auto ac = corpus::shuffle_copy().automaton;
    const auto tc = std::get<Trace>(trace_deterministic(ac, "abbABaBA"));
    check(from_states(ac, tc) ==
              std::vector<std::string>{"q0", "qa'", "q0", "qb'", "q0", "qb'", "q0", "qa'", "q0"},
          "shuffle-copy state sequence");
    check(tc.steps.size() == 9 && tc.verdict == Verdict::Accept, "shuffle-copy ends in Accept after 9 steps");
}

void language_identity(Checker& check, std::ostringstream&) {
    check(enumerate_accepted(corpus::anbncn().automaton, 9).accepted ==
              std::vector<Word>{"", "abc", "aabbcc", "aaabbbccc"},
          "accepted words up to 9");
}

void exp3_ladder(Checker& check, std::ostringstream&) {
    const auto aut = corpus::exp3().automaton;
    for (std::size_t m = 1; m <= 12; ++m) {
        const bool expected = m == 1 || m == 3 || m == 9;
        check((run_fast(aut, repeat("abc", m)).verdict == Verdict::Accept) == expected,
              "(abc)^" + std::to_string(m));
    }
    for (std::size_t n = 0; n <= 5; ++n) {
        check(run_fast(aut, "ab" + repeat("cacabb", n) + "c").verdict == Verdict::Accept,
              "ab(cacabb)^" + std::to_string(n) + "c");
    }
}

void parikh_property(Checker& check, std::ostringstream& info) {
    const auto sample = parikh_sample(corpus::exp3().automaton, 12);
    for (const auto& v : sample) {
        check(v.size() == 3 && v[0] == v[1] && v[1] == v[2] && v[0] % 2 == 1, "vector with unequal or even counts");
    }
    info << sample.size() << " vectors";
}

void emptiness(Checker& check, std::ostringstream&) {
    const auto r = bounded_emptiness(corpus::empty().automaton, 12);
    check(std::holds_alternative<NoWitness>(r) && std::get<NoWitness>(r) == NoWitness{12}, "no witness up to 12");
}

void differential(Checker& check, std::ostringstream& info) {
    std::mt19937_64 rng(2024);
    std::size_t runs = 0;
    for (int i = 0; i < 1000; ++i) {
        const auto kind = i % 2 == 0 ? Kind::nrDFAwtl : Kind::DFAwtl;
        const auto aut = testing::random_automaton(rng, {kind, 5, 3});
        check(validate(aut).ok(), "random automaton is invalid");
        const FastEngine engine(aut);
        for (int j = 0; j < 200; ++j) {
            const auto w = testing::random_word(rng, aut.alphabet, 12);
            check(engine.accepts(w) == accepts_naive(aut, w), "verdicts differ on \"" + w + "\"");
            ++runs;
        }
    }
    info << runs << " runs";
}

void constructions(Checker& check, std::ostringstream&) {
    const auto fixtures = corpus::all_fixtures();
    for (const auto& f : fixtures) {
        const auto& a = f.automaton;
        if (is_returning(a.kind)) {
            same_language(check, "embed " + f.name, a, embed_nfawtl(a), 7);
        } else {
            same_language(check, "eliminate_end_loops " + f.name, a, eliminate_end_loops(a), 7);
            same_language(check, "complete_reading " + f.name, a, complete_reading(a), 7);
            same_language(check, "normalize " + f.name, a, normalize(a), 7);
        }
    }

    const auto equal_abc = corpus::anbncn().automaton;
    const Membership m_abc(equal_abc), mc(complement_deterministic(equal_abc));
    for_each_word(equal_abc.alphabet, 8, [&](const Word& w) {
        check(m_abc(w) != mc(w), "complement on \"" + w + "\"");
        return true;
    });

    for (std::size_t i = 0; i < fixtures.size(); ++i) {
        for (std::size_t j = i + 1; j < fixtures.size(); ++j) {
            const auto& a1 = fixtures[i].automaton;
            const auto& a2 = fixtures[j].automaton;
            auto x = a1.alphabet, y = a2.alphabet;
            std::sort(x.begin(), x.end());
            std::sort(y.begin(), y.end());
            if (x != y) continue;
            const auto label = "union " + fixtures[i].name + " " + fixtures[j].name;
            const Membership m1(a1), m2(a2), mu(union_of(a1, a2));
            for_each_word(a1.alphabet, 6, [&](const Word& w) {
                check(mu(w) == (m1(w) || m2(w)), label + " on \"" + w + "\"");
                return true;
            });
        }
    }

    const std::vector<std::pair<Automaton, Automaton>> shuffles{
        {equal_abc, relabel(corpus::end_loop().automaton, "xy")},
        {corpus::end_loop().automaton, relabel(corpus::end_loop_deterministic().automaton, "xy")},
        {corpus::exp3().automaton, relabel(corpus::end_loop_deterministic().automaton, "xy")},
        {corpus::end_loop_deterministic().automaton, relabel(equal_abc, "xyz")},
    };
    for (const auto& [a1, a2] : shuffles) {
        const auto sh = disjoint_shuffle(a1, a2);
        const Membership m1(a1), m2(a2), ms(sh);
        for_each_word(sh.alphabet, 6, [&](const Word& w) {
            check(ms(w) == (m1(project(w, a1.alphabet)) && m2(project(w, a2.alphabet))),
                  "shuffle on \"" + w + "\"");
            return true;
        });
    }

    std::mt19937_64 rng(7);
    for (int i = 0; i < 20; ++i) {
        const auto aut = testing::random_automaton(rng, {Kind::nrNFAwtl, 4, 1});
        const auto nfa = unary_to_nfa(aut);
        for (std::size_t k = 0; k <= 20; ++k) {
            const std::string w(k, aut.alphabet[0]);
            check(nfa_accepts(nfa, w) == (accepts_naive(aut, w) == Verdict::Accept),
                  "unary automaton " + std::to_string(i) + " on a^" + std::to_string(k));
        }
    }
}

void complexity(Checker& check, std::ostringstream& info) {
    const auto aut = corpus::anbncn().automaton;
    const FastEngine engine(aut);
    std::vector<double> ops;
    for (std::size_t n : {1000, 10000, 100000}) {
        const auto w = std::string(n, 'a') + std::string(n, 'b') + std::string(n, 'c');
        const auto r = engine.run(w);
        check(r.verdict == Verdict::Accept, "a^n b^n c^n accepted");
        const auto bound = 4 * (3 * n + 1) * aut.num_states() * aut.num_letters();
        check(r.stats.index_ops <= bound, "index_ops within 4(3n+1)|Q||Σ| for n=" + std::to_string(n));
        info << "n=" << n << " index_ops=" << r.stats.index_ops << " bound=" << bound << "; ";
        ops.push_back(static_cast<double>(r.stats.index_ops));
    }
    for (std::size_t i = 1; i < ops.size(); ++i) {
        const double ratio = ops[i] / ops[i - 1];
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.2f", ratio);
        info << "ratio " << buf << (i + 1 < ops.size() ? "; " : "");
        check(ratio >= 2.7 && ratio <= 3.3, std::string("successive ratio ") + buf + " outside 3.0±0.3");
    }
}

void loop_detection(Checker& check, std::ostringstream&) {
    const auto aut = corpus::end_loop_deterministic().automaton;
    for (std::size_t n = 1; n <= 50; ++n) {
        const auto r = run_fast(aut, std::string(n, 'a'), true);
        const auto label = "a^" + std::to_string(n);
        check(r.verdict == Verdict::Reject, label + " rejected");
        check(r.trace->steps.back().reason == StuckReason::EndLoop, label + " stops on an end loop");
        std::size_t run = 0, longest = 0;
        for (const auto& step : r.trace->steps) {
            run = step.type == Step::Type::Delete ? 0 : run + (step.type == Step::Type::EndGoTo);
            longest = std::max(longest, run);
        }
        check(longest <= aut.num_states(), label + " end events without deletion exceed |Q|");
    }
}

void round_trip(Checker& check, std::ostringstream&) {
    for (const auto& f : corpus::all_fixtures()) {
        check(parse_tla(serialize_tla(f.automaton)) == f.automaton, "fixture " + f.name);
    }
    std::mt19937_64 rng(5);
    const Kind kinds[] = {Kind::NFAwtl, Kind::DFAwtl, Kind::nrNFAwtl, Kind::nrDFAwtl};
    for (int i = 0; i < 500; ++i) {
        const auto aut = testing::random_automaton(rng, {kinds[i % 4], 6, 4});
        check(validate(aut).ok(), "random automaton " + std::to_string(i) + " is valid");
        check(parse_tla(serialize_tla(aut)) == aut, "random automaton " + std::to_string(i));
    }
}

}  // namespace

int main(int argc, char** argv) {
    const std::vector<Criterion> criteria{
        {1, "trace replay", 1, trace_replay},
        {2, "language identity up to length 9", 10, language_identity},
        {3, "exp3 membership ladder", 1, exp3_ladder},
        {4, "Parikh vectors of exp3 up to length 12", 60, parikh_property},
        {5, "bounded emptiness up to length 12", 60, emptiness},
        {6, "fast and exhaustive engines agree", 300, differential},
        {7, "constructions preserve languages", 300, constructions},
        {8, "index operations grow linearly", 30, complexity},
        {9, "end-loop detection", 1, loop_detection},
        {10, "text format round trip", 10, round_trip},
    };

    int only = 0;
    if (argc > 1) only = std::atoi(argv[1]);

    bool all_ok = true;
    for (const auto& c : criteria) {
        if (only != 0 && c.id != only) continue;
        Checker check;
        std::ostringstream info;
        const auto start = std::chrono::steady_clock::now();
        try {
            c.body(check, info);
        } catch (const std::exception& e) {
            check(false, std::string("exception: ") + e.what());
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        char elapsed[32];
        std::snprintf(elapsed, sizeof elapsed, "%.3f s", seconds);
        check(seconds < c.limit_seconds, "time limit " + std::to_string(static_cast<int>(c.limit_seconds)) + " s");

        std::cout << (check.ok() ? "PASS" : "FAIL") << " [" << c.id << "] " << c.title << " (" << elapsed << ", "
                  << check.checks << " checks)";
        if (!info.str().empty()) std::cout << " " << info.str();
        for (const auto& f : check.failures) std::cout << "\n    " << f;
        std::cout << std::endl;
        all_ok = all_ok && check.ok();
    }
    return all_ok ? 0 : 1;
}
