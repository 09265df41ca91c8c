#include "tlaut/tla_format.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

namespace tlaut {

namespace {

std::vector<std::string> split_tokens(std::string_view line) {
    std::vector<std::string> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) {
            ++i;
        }
        std::size_t start = i;
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) {
            ++i;
        }
        if (i > start) {
            tokens.emplace_back(line.substr(start, i - start));
        }
    }
    return tokens;
}

std::string join(const std::vector<std::string>& tokens, std::size_t from) {
    std::string out;
    for (std::size_t i = from; i < tokens.size(); ++i) {
        if (i > from) {
            out += ' ';
        }
        out += tokens[i];
    }
    return out;
}

class Parser {
public:
    Automaton parse(std::string_view text) {
        std::size_t pos = 0;
        while (pos <= text.size()) {
            auto nl = text.find('\n', pos);
            auto raw = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
            ++line_;
            handle_line(raw);
            if (nl == std::string_view::npos) {
                break;
            }
            pos = nl + 1;
        }
        finish();
        return std::move(aut_);
    }

private:
    [[noreturn]] void fail(ErrorCode code, const std::string& message) const {
        throw ParseError(code, line_, message);
    }

    void handle_line(std::string_view raw) {
        auto hash = raw.find('#');
        auto tokens = split_tokens(raw.substr(0, hash));
        if (tokens.empty()) {
            return;
        }
        const auto& directive = tokens.front();
        if (!seen_type_ && directive != "@type") {
            fail(ErrorCode::Syntax, "the first declaration must be @type");
        }
        if (directive == "@type") {
            on_type(tokens);
        } else if (directive == "@alphabet") {
            on_alphabet(tokens);
        } else if (directive == "@states") {
            on_states(tokens);
        } else if (directive == "@initial") {
            on_initial(tokens);
        } else if (directive == "@final") {
            on_final(tokens);
        } else if (directive == "@translucent") {
            on_translucent(tokens);
        } else if (directive == "@delta") {
            on_delta(tokens);
        } else {
            fail(ErrorCode::Syntax, "unknown directive '" + directive + "'");
        }
    }

    void on_type(const std::vector<std::string>& tokens) {
        if (seen_type_) {
            fail(ErrorCode::Duplicate, "@type declared twice");
        }
        if (tokens.size() != 2) {
            fail(ErrorCode::Syntax, "@type takes exactly one kind");
        }
        auto kind = kind_from_string(tokens[1]);
        if (!kind) {
            fail(ErrorCode::Syntax, "unknown automaton kind '" + tokens[1] + "'");
        }
        aut_.kind = *kind;
        seen_type_ = true;
    }

    void on_alphabet(const std::vector<std::string>& tokens) {
        if (seen_alphabet_) {
            fail(ErrorCode::Duplicate, "@alphabet declared twice");
        }
        for (std::size_t i = 1; i < tokens.size(); ++i) {
            const auto& t = tokens[i];
            if (t.size() != 1 || !is_valid_letter(t[0])) {
                fail(ErrorCode::Syntax, "letters must be single printable characters, got '" + t + "'");
            }
            if (aut_.alphabet.find(t[0]) != std::string::npos) {
                fail(ErrorCode::Duplicate, "letter '" + t + "' declared twice");
            }
            aut_.alphabet += t[0];
        }
        seen_alphabet_ = true;
        resize_if_ready();
    }

    void on_states(const std::vector<std::string>& tokens) {
        if (seen_states_) {
            fail(ErrorCode::Duplicate, "@states declared twice");
        }
        for (std::size_t i = 1; i < tokens.size(); ++i) {
            const auto& t = tokens[i];
            if (!is_valid_state_name(t)) {
                fail(ErrorCode::Syntax, "invalid state name '" + t + "'");
            }
            if (std::find(aut_.states.begin(), aut_.states.end(), t) != aut_.states.end()) {
                fail(ErrorCode::Duplicate, "state '" + t + "' declared twice");
            }
            aut_.states.push_back(t);
        }
        seen_states_ = true;
        resize_if_ready();
    }

    void resize_if_ready() {
        if (seen_alphabet_ && seen_states_) {
            aut_ = Automaton(aut_.kind, std::move(aut_.states), std::move(aut_.alphabet));
            ended_.assign(aut_.num_states(), false);
            translucent_seen_.assign(aut_.num_states(), false);
            delta_seen_.assign(aut_.num_states(), std::vector<bool>(aut_.num_letters(), false));
        }
    }

    void require_declarations(const std::string& directive) const {
        if (!seen_alphabet_ || !seen_states_) {
            fail(ErrorCode::Syntax, directive + " must follow @alphabet and @states");
        }
    }

    StateIndex state(const std::string& name) const {
        auto q = aut_.find_state(name);
        if (!q) {
            fail(ErrorCode::UnknownName, "unknown state '" + name + "'");
        }
        return *q;
    }

    LetterIndex letter(const std::string& token) const {
        std::optional<LetterIndex> a;
        if (token.size() == 1) {
            a = aut_.find_letter(token[0]);
        }
        if (!a) {
            fail(ErrorCode::UnknownName, "unknown letter '" + token + "'");
        }
        return *a;
    }

    StateSet state_list(const std::vector<std::string>& tokens, std::size_t from) const {
        StateSet out;
        for (std::size_t i = from; i < tokens.size(); ++i) {
            auto q = state(tokens[i]);
            if (contains(out, q)) {
                fail(ErrorCode::Duplicate, "state '" + tokens[i] + "' listed twice");
            }
            insert_sorted(out, q);
        }
        return out;
    }

    void on_initial(const std::vector<std::string>& tokens) {
        require_declarations("@initial");
        if (seen_initial_) {
            fail(ErrorCode::Duplicate, "@initial declared twice");
        }
        aut_.initial = state_list(tokens, 1);
        seen_initial_ = true;
    }

    void on_final(const std::vector<std::string>& tokens) {
        require_declarations("@final");
        if (!is_returning(aut_.kind)) {
            fail(ErrorCode::Syntax, "@final is only allowed for NFAwtl and DFAwtl");
        }
        if (seen_final_) {
            fail(ErrorCode::Duplicate, "@final declared twice");
        }
        aut_.final_states = state_list(tokens, 1);
        seen_final_ = true;
    }

    void on_translucent(const std::vector<std::string>& tokens) {
        require_declarations("@translucent");
        if (tokens.size() < 3 || tokens[2] != "=") {
            fail(ErrorCode::Syntax, "expected '@translucent <state> = [<letter> ...]'");
        }
        auto q = state(tokens[1]);
        if (translucent_seen_[q]) {
            fail(ErrorCode::Duplicate, "translucency of state '" + tokens[1] + "' declared twice");
        }
        translucent_seen_[q] = true;
        auto list = join(tokens, 3);
        if (list.size() < 2 || list.front() != '[' || list.back() != ']') {
            fail(ErrorCode::Syntax, "translucent letters must be enclosed in [ ]");
        }
        for (const auto& t : split_tokens(std::string_view(list).substr(1, list.size() - 2))) {
            auto a = letter(t);
            if (aut_.translucent[q][a]) {
                fail(ErrorCode::Duplicate, "letter '" + t + "' listed twice");
            }
            aut_.translucent[q].set(a);
        }
    }

    void on_delta(const std::vector<std::string>& tokens) {
        require_declarations("@delta");
        if (tokens.size() < 5 || tokens[3] != "->") {
            fail(ErrorCode::Syntax, "expected '@delta <state> <letter|END> -> <target> ...'");
        }
        auto q = state(tokens[1]);
        if (tokens[2] == "END") {
            on_end(q, tokens);
            return;
        }
        auto a = letter(tokens[2]);
        if (delta_seen_[q][a]) {
            fail(ErrorCode::Duplicate, "transition for (" + tokens[1] + ", " + tokens[2] + ") declared twice");
        }
        delta_seen_[q][a] = true;
        aut_.delta[q][a] = state_list(tokens, 4);
    }

    void on_end(StateIndex q, const std::vector<std::string>& tokens) {
        if (is_returning(aut_.kind)) {
            fail(ErrorCode::Syntax, "END transitions are only allowed for non-returning kinds");
        }
        bool has_accept = std::find(tokens.begin() + 4, tokens.end(), "ACCEPT") != tokens.end();
        if (has_accept && tokens.size() > 5) {
            fail(ErrorCode::ConflictingEnd, "END of state '" + tokens[1] + "' mixes ACCEPT with target states");
        }
        if (ended_[q]) {
            bool was_accept = aut_.end[q].is_accept();
            if (was_accept != has_accept) {
                fail(ErrorCode::ConflictingEnd,
                     "END of state '" + tokens[1] + "' is declared both as ACCEPT and with target states");
            }
            fail(ErrorCode::Duplicate, "END transition of state '" + tokens[1] + "' declared twice");
        }
        ended_[q] = true;
        aut_.end[q] = has_accept ? EndAction::accept() : EndAction::go_to(state_list(tokens, 4));
    }

    void finish() {
        line_ = 0;
        if (!seen_type_) {
            fail(ErrorCode::Syntax, "missing @type");
        }
        if (!seen_alphabet_) {
            fail(ErrorCode::Syntax, "missing @alphabet");
        }
        if (!seen_states_) {
            fail(ErrorCode::Syntax, "missing @states");
        }
        if (!seen_initial_) {
            fail(ErrorCode::Syntax, "missing @initial");
        }
        if (is_returning(aut_.kind) && !seen_final_) {
            fail(ErrorCode::Syntax, "missing @final (required for NFAwtl and DFAwtl)");
        }
    }

    Automaton aut_;
    std::size_t line_ = 0;
    bool seen_type_ = false;
    bool seen_alphabet_ = false;
    bool seen_states_ = false;
    bool seen_initial_ = false;
    bool seen_final_ = false;
    std::vector<bool> ended_;
    std::vector<bool> translucent_seen_;
    std::vector<std::vector<bool>> delta_seen_;
};

void append_states(std::string& out, const Automaton& aut, const StateSet& set) {
    for (auto q : set) {
        out += ' ';
        out += aut.states[q];
    }
}

}  // namespace

Automaton parse_tla(std::string_view text) {
    return Parser().parse(text);
}

std::string serialize_tla(const Automaton& aut) {
    require_valid(aut);
    std::string out;
    out += "@type ";
    out += to_string(aut.kind);
    out += "\n@alphabet";
    for (char c : aut.alphabet) {
        out += ' ';
        out += c;
    }
    out += "\n@states";
    for (const auto& name : aut.states) {
        out += ' ';
        out += name;
    }
    out += "\n@initial";
    append_states(out, aut, aut.initial);
    out += '\n';
    if (is_returning(aut.kind)) {
        out += "@final";
        append_states(out, aut, aut.final_states);
        out += '\n';
    }
    for (StateIndex q = 0; q < aut.num_states(); ++q) {
        out += "@translucent " + aut.states[q] + " = [";
        bool first = true;
        for (LetterIndex a = 0; a < aut.num_letters(); ++a) {
            if (aut.translucent[q][a]) {
                if (!first) {
                    out += ' ';
                }
                out += aut.alphabet[a];
                first = false;
            }
        }
        out += "]\n";
    }
    for (StateIndex q = 0; q < aut.num_states(); ++q) {
        for (LetterIndex a = 0; a < aut.num_letters(); ++a) {
            if (!aut.delta[q][a].empty()) {
                out += "@delta " + aut.states[q] + ' ' + aut.alphabet[a] + " ->";
                append_states(out, aut, aut.delta[q][a]);
                out += '\n';
            }
        }
        const auto& action = aut.end[q];
        if (action.is_accept()) {
            out += "@delta " + aut.states[q] + " END -> ACCEPT\n";
        } else if (action.is_goto()) {
            out += "@delta " + aut.states[q] + " END ->";
            append_states(out, aut, action.targets);
            out += '\n';
        }
    }
    return out;
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error(ErrorCode::Io, "cannot open '" + path + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

Automaton load_tla_file(const std::string& path) {
    return parse_tla(read_text_file(path));
}

}  // namespace tlaut
