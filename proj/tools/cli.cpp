#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>

#include "tlaut/analysis.hpp"
#include "tlaut/constructions.hpp"
#include "tlaut/fast.hpp"
#include "tlaut/naive.hpp"
#include "tlaut/tla_format.hpp"

namespace tlaut::cli {

namespace {

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kUsage = 2;

// Thrown for command-line problems that CLI11 cannot see.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string file;
    std::string file2;
    std::string word;
    std::string engine;
    std::string op;
    std::string output;
    bool trace = false;
    bool stats = false;
    std::size_t max_len = 0;
    std::uint64_t budget = kDefaultBudget;
};

int cmd_check(const Options& o, std::ostream& out) {
    const auto aut = load_tla_file(o.file);
    const auto report = validate(aut);
    if (report.ok()) {
        out << "ok\n";
        return kOk;
    }
    for (const auto& v : report.violations) {
        out << v.rule << ": " << v.description;
        if (!v.subject.empty()) {
            out << " [" << v.subject << "]";
        }
        out << '\n';
    }
    return kNegative;
}

void print_fast_stats(const RunStats& stats, std::ostream& out) {
    out << "deletions  " << stats.deletions << '\n'
        << "end_events " << stats.end_events << '\n'
        << "index_ops  " << stats.index_ops << '\n';
}

int cmd_run(const Options& o, std::ostream& out) {
    const auto aut = load_tla_file(o.file);
    require_valid(aut);
    aut.encode(o.word);
    const bool deterministic = is_deterministic(aut.kind);
    const bool fast = o.engine.empty() ? deterministic : o.engine == "fast";
    if (fast && !deterministic) {
        throw UsageError("--engine=fast needs a deterministic automaton");
    }
    if (o.trace && !deterministic) {
        throw UsageError("--trace needs a deterministic automaton");
    }

    Verdict verdict;
    if (fast) {
        auto result = run_fast(aut, o.word, o.trace);
        verdict = result.verdict;
        if (result.trace) {
            out << render_trace(aut, *result.trace);
        }
        if (o.stats) {
            print_fast_stats(result.stats, out);
        }
    } else {
        if (o.trace) {
            auto traced = trace_deterministic(aut, o.word);
            if (auto* t = std::get_if<Trace>(&traced)) {
                out << render_trace(aut, *t);
            } else {
                const auto& f = std::get<FuelExhausted>(traced);
                out << render_trace(aut, f.partial) << "fuel exhausted after " << f.fuel << " steps\n";
            }
        }
        auto result = search_naive(aut, o.word);
        verdict = result.verdict;
        if (o.stats) {
            out << "configurations " << result.configurations << '\n'
                << "revisits       " << result.revisits << '\n'
                << "has_cycle      " << (result.has_cycle ? "yes" : "no") << '\n';
        }
    }
    out << to_string(verdict) << '\n';
    return verdict == Verdict::Accept ? kOk : kNegative;
}

Automaton apply_op(const Options& o, const Automaton& aut) {
    const bool binary = o.op == "union" || o.op == "shuffle";
    if (binary != !o.file2.empty()) {
        throw UsageError(binary ? "--op=" + o.op + " needs a second file" : "--op=" + o.op + " takes one file");
    }
    if (o.op == "embed") return embed_nfawtl(aut);
    if (o.op == "deloop") return eliminate_end_loops(aut);
    if (o.op == "complete") return complete_reading(aut);
    if (o.op == "normalize") return normalize(aut);
    if (o.op == "complement") return complement_deterministic(aut);
    const auto other = load_tla_file(o.file2);
    if (o.op == "union") return union_of(aut, other);
    return disjoint_shuffle(aut, other);
}

int cmd_transform(const Options& o, std::ostream& out) {
    const auto aut = load_tla_file(o.file);
    std::string text;
    if (o.op == "unary-nfa") {
        if (!o.file2.empty()) {
            throw UsageError("--op=unary-nfa takes one file");
        }
        text = serialize_nfa(unary_to_nfa(aut));
    } else {
        text = serialize_tla(apply_op(o, aut));
    }
    if (o.output.empty()) {
        out << text;
    } else {
        std::ofstream file(o.output, std::ios::binary);
        file << text;
        if (!file) {
            throw Error(ErrorCode::Io, "cannot write " + o.output);
        }
    }
    return kOk;
}

Engine engine_of(const Options& o) {
    if (o.engine.empty()) return Engine::Auto;
    return o.engine == "fast" ? Engine::Fast : Engine::Naive;
}

int cmd_enumerate(const Options& o, std::ostream& out) {
    const auto result = enumerate_accepted(load_tla_file(o.file), o.max_len, engine_of(o), o.budget);
    for (const auto& w : result.accepted) {
        out << w << '\n';
    }
    return kOk;
}

int cmd_empty(const Options& o, std::ostream& out) {
    const auto result = bounded_emptiness(load_tla_file(o.file), o.max_len, o.budget);
    if (const auto* w = std::get_if<Word>(&result)) {
        out << "witness \"" << *w << "\"\n";
        return kOk;
    }
    out << "no witness up to " << o.max_len << '\n';
    return kNegative;
}

int cmd_parikh(const Options& o, std::ostream& out) {
    const auto aut = load_tla_file(o.file);
    const auto vectors = parikh_sample(aut, o.max_len, o.budget);
    for (const auto& v : vectors) {
        out << '(';
        for (std::size_t i = 0; i < v.size(); ++i) {
            out << (i ? "," : "") << v[i];
        }
        out << ")\n";
    }
    return kOk;
}

int cmd_dot(const Options& o, std::ostream& out) {
    out << to_diagram(load_tla_file(o.file));
    return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Finite automata with translucent letters", "tlaut"};
    app.require_subcommand(1, 1);
    Options o;

    auto engines = CLI::IsMember({"fast", "naive"});
    auto add_file = [&](CLI::App* sub) { sub->add_option("file", o.file, "TLA file")->required(); };
    auto add_bound = [&](CLI::App* sub) {
        sub->add_option("--max-len", o.max_len, "longest word length considered")->required();
        sub->add_option("--budget", o.budget, "maximal number of membership tests");
    };

    auto* check = app.add_subcommand("check", "validate a TLA file");
    add_file(check);

    auto* run_cmd = app.add_subcommand("run", "decide membership of a word");
    add_file(run_cmd);
    run_cmd->add_option("word", o.word, "input word; \"\" is the empty word")->required();
    run_cmd->add_flag("--trace", o.trace, "print every step");
    run_cmd->add_flag("--stats", o.stats, "print run statistics");
    run_cmd->add_option("--engine", o.engine, "fast or naive")->check(engines);

    auto* transform = app.add_subcommand("transform", "apply a construction");
    add_file(transform);
    transform->add_option("file2", o.file2, "second operand of union and shuffle");
    transform
        ->add_option("--op", o.op, "embed|deloop|complete|normalize|complement|union|shuffle|unary-nfa")
        ->required()
        ->check(CLI::IsMember(
            {"embed", "deloop", "complete", "normalize", "complement", "union", "shuffle", "unary-nfa"}));
    transform->add_option("-o,--output", o.output, "output file (default: standard output)");

    auto* enumerate = app.add_subcommand("enumerate", "list accepted words");
    add_file(enumerate);
    add_bound(enumerate);
    enumerate->add_option("--engine", o.engine, "fast or naive")->check(engines);

    auto* empty = app.add_subcommand("empty", "search for a shortest accepted word");
    add_file(empty);
    add_bound(empty);

    auto* parikh = app.add_subcommand("parikh", "letter-count vectors of accepted words");
    add_file(parikh);
    add_bound(parikh);

    auto* dot = app.add_subcommand("dot", "Graphviz diagram");
    add_file(dot);

    std::vector<const char*> argv{"tlaut"};
    for (const auto& a : args) {
        argv.push_back(a.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kUsage;
    }

    try {
        if (check->parsed()) return cmd_check(o, out);
        if (run_cmd->parsed()) return cmd_run(o, out);
        if (transform->parsed()) return cmd_transform(o, out);
        if (enumerate->parsed()) return cmd_enumerate(o, out);
        if (empty->parsed()) return cmd_empty(o, out);
        if (parikh->parsed()) return cmd_parikh(o, out);
        return cmd_dot(o, out);
    } catch (const Error& e) {
        err << "error (" << tlaut::to_string(e.code()) << "): " << e.what() << '\n';
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
    }
    return kUsage;
}

}  // namespace tlaut::cli
