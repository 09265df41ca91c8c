#include "tlaut/corpus.hpp"

#include <algorithm>

namespace tlaut::corpus {

namespace {

std::string project(std::string_view word, std::string_view keep) {
    std::string out;
    for (char c : word) {
        if (keep.find(c) != std::string_view::npos) {
            out += c;
        }
    }
    return out;
}

// Whether w is some interleaving of x and y, by dynamic programming over
// prefixes: ok[j] says w[0, i+j) interleaves x[0, i) and y[0, j).
bool interleaves(std::string_view w, std::string_view x, std::string_view y) {
    if (w.size() != x.size() + y.size()) {
        return false;
    }
    std::vector<bool> ok(y.size() + 1, false);
    for (std::size_t i = 0; i <= x.size(); ++i) {
        for (std::size_t j = 0; j <= y.size(); ++j) {
            if (i == 0 && j == 0) {
                ok[0] = true;
                continue;
            }
            const char c = w[i + j - 1];
            const bool from_x = i > 0 && ok[j] && x[i - 1] == c;
            const bool from_y = j > 0 && ok[j - 1] && y[j - 1] == c;
            ok[j] = from_x || from_y;
        }
    }
    return ok[y.size()];
}

bool is_power_of_three(std::size_t m) {
    if (m == 0) {
        return false;
    }
    while (m % 3 == 0) {
        m /= 3;
    }
    return m == 1;
}

// Some m with word == unit^m.
std::optional<std::size_t> power_of(std::string_view word, std::string_view unit) {
    if (word.size() % unit.size() != 0) {
        return std::nullopt;
    }
    for (std::size_t i = 0; i < word.size(); i += unit.size()) {
        if (word.substr(i, unit.size()) != unit) {
            return std::nullopt;
        }
    }
    return word.size() / unit.size();
}

Oracle total(bool (*predicate)(std::string_view)) {
    return [predicate](std::string_view w) -> std::optional<bool> { return predicate(w); };
}

bool never(std::string_view) {
    return false;
}

}  // namespace

Fixture shuffle_copy() {
    Builder b(Kind::DFAwtl, {"q0", "qa", "qa'", "qb", "qb'"}, "abAB");
    b.initial("q0").final_state("q0");
    b.translucent("qa", "AB").translucent("qb", "AB").translucent("qa'", "ab").translucent("qb'", "ab");
    b.delta("q0", 'a', "qa'").delta("q0", 'b', "qb'").delta("q0", 'A', "qa").delta("q0", 'B', "qb");
    b.delta("qa", 'a', "q0").delta("qb", 'b', "q0").delta("qa'", 'A', "q0").delta("qb'", 'B', "q0");
    auto oracle = [](std::string_view w) -> std::optional<bool> {
        if (w.find_first_not_of("abAB") != std::string_view::npos) {
            return false;
        }
        const auto v = project(w, "ab");
        std::string primed = v;
        std::transform(primed.begin(), primed.end(), primed.begin(), [](char c) { return c == 'a' ? 'A' : 'B'; });
        // Only the unprimed letters of w can come from v, so v is forced.
        return interleaves(w, v, primed);
    };
    return {"shuffle_copy", b.build(), oracle, true, "A and B encode the primed letters a' and b'."};
}

Fixture anbncn() {
    Builder b(Kind::nrDFAwtl, {"qa", "qb", "qc", "qr"}, "abc");
    b.initial("qa").translucent("qb", "a").translucent("qc", "b").translucent("qr", "c");
    b.delta("qa", 'a', "qb").delta("qb", 'b', "qc").delta("qc", 'c', "qr");
    b.end_goto("qr", "qa").end_accept("qa");
    auto oracle = [](std::string_view w) {
        const auto n = w.size() / 3;
        return w.size() % 3 == 0 && w == std::string(n, 'a') + std::string(n, 'b') + std::string(n, 'c');
    };
    return {"anbncn", b.build(), total(+oracle), true, "One a, one b and one c are deleted per sweep."};
}

namespace {

Builder end_loop_builder(Kind kind) {
    Builder b(kind, {"p", "q", "r"}, "ab");
    b.initial("p").translucent("p", "a").translucent("q", "a").translucent("r", "a");
    b.delta("p", 'b', "q").end_goto("p", "q").end_goto("q", "p").end_accept("r");
    return b;
}

}  // namespace

Fixture end_loop() {
    auto b = end_loop_builder(Kind::nrNFAwtl);
    b.end_goto("p", "r");
    auto oracle = [](std::string_view w) {
        return w.find_first_not_of("ab") == std::string_view::npos && std::count(w.begin(), w.end(), 'b') <= 1;
    };
    return {"end_loop", b.build(), total(+oracle), true,
            "p and q pass the end marker back and forth forever; the r branch accepts. "
            "Language: at most one b (matches end_loop_snapshot)."};
}

Fixture end_loop_deterministic() {
    return {"end_loop_det", end_loop_builder(Kind::nrDFAwtl).build(), total(never), true,
            "end_loop without the r branch; r is unreachable and every run ends in the p/q loop or stuck."};
}

Fixture exp3() {
    Builder b(Kind::nrDFAwtl, {"q0", "q1", "q2", "q3", "q4", "q5", "q6", "q7", "q8"}, "abc");
    b.initial("q0").translucent("q0", "a").translucent("q3", "b").translucent("q6", "ac");
    b.delta("q0", 'b', "q1").delta("q1", 'c', "q2").end_goto("q2", "q7").delta("q2", 'a', "q3");
    b.delta("q3", 'c', "q4").delta("q4", 'a', "q5").delta("q5", 'b', "q6").delta("q6", 'b', "q1");
    b.end_goto("q6", "q0").delta("q7", 'a', "q8").end_accept("q8");
    auto oracle = [](std::string_view w) -> std::optional<bool> {
        if (auto m = power_of(w, "abc")) {
            return is_power_of_three(*m);
        }
        if (w.size() >= 3 && w.substr(0, 2) == "ab" && w.back() == 'c' &&
            power_of(w.substr(2, w.size() - 3), "cacabb")) {
            return true;
        }
        return std::nullopt;
    };
    return {"exp3", b.build(), oracle, false,
            "Decided only on powers of abc (accepted iff the exponent is a power of 3) and on ab(cacabb)^n c."};
}

Fixture empty() {
    Builder b(Kind::nrDFAwtl, {"q0", "q1", "q2", "q3", "q4", "q5"}, "abc");
    b.initial("q0").translucent("q0", "b").translucent("q1", "c").translucent("q2", "c").translucent("q4", "a");
    b.delta("q0", 'a', "q1").delta("q2", 'b', "q3").delta("q4", 'c', "q5");
    b.end_goto("q1", "q2").end_goto("q3", "q4").end_accept("q5");
    return {"empty", b.build(), total(never), true, "Each sweep is satisfiable alone, but no word satisfies all three."};
}

std::vector<Fixture> all_fixtures() {
    return {shuffle_copy(), anbncn(), end_loop(), end_loop_deterministic(), exp3(), empty()};
}

const std::vector<std::string>& end_loop_snapshot() {
    static const std::vector<std::string> words = {
        "", "a", "b", "aa", "ab", "ba", "aaa", "aab", "aba", "baa", "aaaa", "aaab", "aaba", "abaa", "baaa",
        "aaaaa", "aaaab", "aaaba", "aabaa", "abaaa", "baaaa", "aaaaaa", "aaaaab", "aaaaba", "aaabaa", "aabaaa",
        "abaaaa", "baaaaa", "aaaaaaa", "aaaaaab", "aaaaaba", "aaaabaa", "aaabaaa", "aabaaaa", "abaaaaa",
        "baaaaaa", "aaaaaaaa", "aaaaaaab", "aaaaaaba", "aaaaabaa", "aaaabaaa", "aaabaaaa", "aabaaaaa",
        "abaaaaaa", "baaaaaaa",
    };
    return words;
}

bool lvee(std::string_view word) {
    if (word.find_first_not_of("ab") != std::string_view::npos) {
        return false;
    }
    const auto a = std::count(word.begin(), word.end(), 'a');
    const auto b = std::count(word.begin(), word.end(), 'b');
    return b == a || b == 2 * a;
}

Predicate lvee_predicate() {
    return &lvee;
}

}  // namespace tlaut::corpus
