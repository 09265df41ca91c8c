#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tlaut/automaton.hpp"

namespace tlaut::corpus {

/// Reference predicate for a fixture's language. It never calls an engine.
/// std::nullopt means the predicate does not know the answer for that word.
using Oracle = std::function<std::optional<bool>(std::string_view)>;

struct Fixture {
    std::string name;  // also the file stem under fixtures/
    Automaton automaton;
    Oracle oracle;
    bool total = true;  // oracle never abstains
    std::string notes;
};

/// DFAwtl over {a,b,A,B} (A, B stand for a', b') accepting the shuffles of a
/// word v over {a,b} with its primed copy.
Fixture shuffle_copy();

/// nrDFAwtl for a^n b^n c^n.
Fixture anbncn();

/// nrNFAwtl over {a,b} whose end-marker moves p -> q -> p can loop forever.
/// Accepts exactly the words with at most one b.
Fixture end_loop();

/// end_loop with the end move of p fixed to q. Deterministic, accepts nothing.
Fixture end_loop_deterministic();

/// nrDFAwtl over {a,b,c} accepting (abc)^(3^n) among the powers of abc.
/// The oracle only decides powers of abc and the words ab(cacabb)^n c.
Fixture exp3();

/// nrDFAwtl over {a,b,c} whose three sweeps never combine; accepts nothing.
Fixture empty();

/// Every fixture above, in declaration order.
std::vector<Fixture> all_fixtures();

/// Words over {a,b} of length <= 8 accepted by end_loop(), recorded once from
/// an exhaustive configuration search.
const std::vector<std::string>& end_loop_snapshot();

/// Words over {a,b} with |w|_b equal to |w|_a or twice |w|_a. No nrDFAwtl
/// accepts this language, so there is no automaton to go with it.
bool lvee(std::string_view word);

using Predicate = bool (*)(std::string_view);
Predicate lvee_predicate();

}  // namespace tlaut::corpus
