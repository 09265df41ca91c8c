#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "tlaut/automaton.hpp"
#include "tlaut/fast.hpp"

namespace tlaut {

// Language-level tools. All of them work by testing words one by one, in
// length-lexicographic order over the alphabet's declaration order.

/// Default limit on membership tests per call.
inline constexpr std::uint64_t kDefaultBudget = 2'000'000;

enum class Engine { Auto, Fast, Naive };

/// Membership test bound to one automaton. Auto picks the fast engine for
/// deterministic kinds and the exhaustive search otherwise.
class Membership {
public:
    explicit Membership(const Automaton& aut, Engine engine = Engine::Auto);

    bool operator()(std::string_view word) const;
    const Automaton& automaton() const { return aut_; }

private:
    Automaton aut_;
    std::shared_ptr<const FastEngine> fast_;
};

/// Number of words of length <= max_len over `letters` letters, saturating at UINT64_MAX.
std::uint64_t count_words(std::size_t letters, std::size_t max_len);

/// Calls `visit` on every word over `alphabet` of length <= max_len in
/// length-lexicographic order until it returns false.
void for_each_word(const std::string& alphabet, std::size_t max_len,
                   const std::function<bool(const Word&)>& visit);

struct EnumerationResult {
    std::size_t max_len = 0;
    std::vector<Word> accepted;  // length-lexicographic
};

/// Throws Error(BudgetExceeded) if more than `budget` words would be tested.
EnumerationResult enumerate_accepted(const Automaton& aut, std::size_t max_len, Engine engine = Engine::Auto,
                                     std::uint64_t budget = kDefaultBudget);

struct NoWitness {
    std::size_t max_len;

    bool operator==(const NoWitness&) const = default;
};

/// Shortest accepted word, or proof that none exists up to max_len.
std::variant<Word, NoWitness> bounded_emptiness(const Automaton& aut, std::size_t max_len,
                                                std::uint64_t budget = kDefaultBudget);

/// Letter counts in the alphabet's declaration order.
using ParikhVector = std::vector<std::size_t>;

ParikhVector parikh(const Automaton& aut, std::string_view word);

std::set<ParikhVector> parikh_sample(const Automaton& aut, std::size_t max_len,
                                     std::uint64_t budget = kDefaultBudget);

struct Equal {
    bool operator==(const Equal&) const = default;
};
struct Counterexample {
    Word word;

    bool operator==(const Counterexample&) const = default;
};

/// First word (over a1's letter order) on which the two languages differ.
/// The alphabets must contain the same letters; each word costs two tests.
std::variant<Equal, Counterexample> equivalent_up_to(const Automaton& a1, const Automaton& a2, std::size_t max_len,
                                                     std::uint64_t budget = kDefaultBudget);

/// Graphviz text. One node per state, a point node for the initial arrows
/// and an Accept node. Letter edges are labelled `x` or `(Y*, x)`, end-marker
/// edges `◁` or `(Y*, ◁)`, where Y is the state's translucent set.
std::string to_diagram(const Automaton& aut);

}  // namespace tlaut
