// Command-line front end: reads and writes the JSON formats documented in
// json_io.hpp. JSON goes to stdout (or --output); diagnostics go to stderr.
//
// Exit codes: 0 success, 1 malformed input, 2 computation or verification
// failure, 3 split element passed to `diagonalize`.

#include <CLI11.hpp>

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>

#include "albert/json_io.hpp"
#include "albert/random.hpp"
#include "albert/selftest.hpp"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitBadInput = 1;
constexpr int kExitFailure = 2;
constexpr int kExitSplitInput = 3;

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw albert::ParseError("cannot open input file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw albert::ParseError("invalid JSON in " + path + ": " + e.what());
    }
    return j;
}

void emit(const json& j, const std::string& output_path) {
    if (output_path.empty()) {
        std::cout << j.dump(2) << "\n";
        return;
    }
    std::ofstream out(output_path);
    if (!out) throw albert::Error("cannot open output file: " + output_path);
    out << j.dump(2) << "\n";
}

struct Options {
    std::string input;
    std::string output;
    std::uint64_t seed = 0;
    std::string algebra = "compact";
    albert::Tolerances tol;
};

albert::Algebra parse_algebra(const std::string& s) {
    if (s == "compact") return albert::Algebra::compact;
    if (s == "split") return albert::Algebra::split;
    throw albert::ParseError("algebra must be \"compact\" or \"split\"");
}

int cmd_diagonalize(const Options& opt) {
    const albert::JordanElement x = albert::jordan_from_json(read_json_file(opt.input));
    if (x.alg == albert::Algebra::split) {
        std::cerr << "input element lives in the split algebra; diagonalization is "
                     "not available there (see the split-check command)\n";
        return kExitSplitInput;
    }
    const albert::DiagonalizationTranscript tr = albert::diagonalize(x, opt.tol);
    emit(albert::to_json(tr), opt.output);
    return kExitOk;
}

int cmd_verify(const Options& opt) {
    const json j = read_json_file(opt.input);
    albert::DiagonalizationTranscript tr;
    try {
        tr = albert::transcript_from_json(j);
    } catch (const albert::ParseError&) {
        throw; // malformed: exit 1
    } catch (const albert::Error& e) {
        // well-formed JSON whose generator payload fails its invariant
        std::cerr << "generator validation failed: " << e.what() << "\n";
        return kExitFailure;
    }

    double gen_dev = 0.0;
    for (const albert::Generator& g : tr.steps)
        gen_dev = std::max(gen_dev, albert::validation_deviation(g));

    const double scale = std::max(1.0, albert::frobenius_norm(tr.input));
    const double slack = 1e-12 * scale;
    const albert::JordanElement replay = albert::apply_sequence(tr.steps, tr.input);

    const double residual = albert::max_off_diagonal(replay);
    double diag_err = 0.0;
    for (int i = 0; i < 3; ++i)
        diag_err = std::max(diag_err, std::abs(replay.diag[i] - tr.diagonal[i]));

    const albert::InvariantDrift drift = {
        std::abs(albert::trace(replay) - albert::trace(tr.input)),
        std::abs(albert::inner_product(replay, replay) -
                 albert::inner_product(tr.input, tr.input)),
        std::abs(albert::sigma(replay) - albert::sigma(tr.input)),
        std::abs(albert::det(replay) - albert::det(tr.input))};

    const bool ok_gen = gen_dev <= 1e-10;
    const bool ok_res = residual <= tr.off_diag_residual + slack;
    const bool ok_diag =
        diag_err <= std::max(tr.off_diag_residual, opt.tol.residual_tol * scale) + slack;
    const bool ok_drift = drift.trace <= tr.invariant_drift.trace + slack &&
                          drift.inner <= tr.invariant_drift.inner + slack &&
                          drift.sigma <= tr.invariant_drift.sigma + slack &&
                          drift.det <= tr.invariant_drift.det + slack;
    const bool pass = ok_gen && ok_res && ok_diag && ok_drift;

    emit(json{{"pass", pass},
              {"generator_max_deviation", gen_dev},
              {"replay_residual", residual},
              {"diagonal_max_error", diag_err},
              {"drift",
               {{"trace", drift.trace},
                {"inner", drift.inner},
                {"sigma", drift.sigma},
                {"det", drift.det}}}},
         opt.output);
    if (!pass) {
        std::cerr << "replay mismatch:" << (ok_gen ? "" : " generators")
                  << (ok_res ? "" : " residual") << (ok_diag ? "" : " diagonal")
                  << (ok_drift ? "" : " drift") << "\n";
        return kExitFailure;
    }
    return kExitOk;
}

int cmd_invariants(const Options& opt) {
    const albert::JordanElement x = albert::jordan_from_json(read_json_file(opt.input));
    emit(json{{"trace", albert::trace(x)},
              {"inner_square", albert::inner_product(x, x)},
              {"sigma", albert::sigma(x)},
              {"det", albert::det(x)}},
         opt.output);
    return kExitOk;
}

int cmd_random(const Options& opt) {
    albert::RandomSource rs(opt.seed);
    const albert::JordanElement x = albert::random_jordan(rs, parse_algebra(opt.algebra));
    emit(albert::to_json(x), opt.output);
    return kExitOk;
}

int cmd_split_check(const Options& opt) {
    const albert::JordanElement x = albert::jordan_from_json(read_json_file(opt.input));
    const albert::ObstructionVerdict v = albert::diagonalizability_obstruction(x);
    emit(albert::to_json(v), opt.output);
    return kExitOk;
}

int cmd_selftest(const Options& opt) {
    const albert::SelftestReport report = albert::run_selftest(opt.seed ? opt.seed : 1);
    json suites = json::array();
    for (const albert::SuiteResult& s : report.suites) {
        suites.push_back({{"name", s.name},
                          {"max_deviation", s.max_deviation},
                          {"bound", s.bound},
                          {"pass", s.pass}});
        std::cerr << (s.pass ? "[ok]   " : "[FAIL] ") << s.name << "  max deviation "
                  << s.max_deviation << " (bound " << s.bound << ")\n";
    }
    emit(json{{"pass", report.pass}, {"suites", suites}}, opt.output);
    return report.pass ? kExitOk : kExitFailure;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"octonion Jordan-algebra toolkit: constructive diagonalization by "
                 "explicit F4 generators, with split-algebra obstruction checks"};
    app.require_subcommand(1);
    Options opt;

    auto add_io = [&](CLI::App* sub, bool needs_input) {
        if (needs_input)
            sub->add_option("--input", opt.input, "input JSON file")->required();
        sub->add_option("--output", opt.output, "write JSON here instead of stdout");
    };

    CLI::App* diag = app.add_subcommand(
        "diagonalize", "diagonalize a compact element; emits a transcript");
    add_io(diag, true);
    diag->add_option("--zero-tol", opt.tol.zero_tol, "entry-is-zero threshold");
    diag->add_option("--residual-tol", opt.tol.residual_tol, "final off-diagonal bound");

    CLI::App* verify =
        app.add_subcommand("verify", "replay a transcript and check its claims");
    add_io(verify, true);
    verify->add_option("--residual-tol", opt.tol.residual_tol,
                       "diagonal comparison tolerance");

    CLI::App* invariants = app.add_subcommand(
        "invariants", "trace, (X,X), sigma and det of an element");
    add_io(invariants, true);

    CLI::App* random = app.add_subcommand(
        "random", "deterministic random element (mt19937_64, entries in [-1,1))");
    add_io(random, false);
    random->add_option("--seed", opt.seed, "PRNG seed");
    random->add_option("--algebra", opt.algebra, "compact or split")
        ->check(CLI::IsMember({"compact", "split"}));

    CLI::App* split_check = app.add_subcommand(
        "split-check", "obstruction certificate for a split element");
    add_io(split_check, true);

    CLI::App* selftest =
        app.add_subcommand("selftest", "run the full property suites");
    add_io(selftest, false);
    selftest->add_option("--seed", opt.seed, "suite seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e); // prints the message or help text
        return code == 0 ? kExitOk : kExitBadInput;
    }

    try {
        if (diag->parsed()) return cmd_diagonalize(opt);
        if (verify->parsed()) return cmd_verify(opt);
        if (invariants->parsed()) return cmd_invariants(opt);
        if (random->parsed()) return cmd_random(opt);
        if (split_check->parsed()) return cmd_split_check(opt);
        if (selftest->parsed()) return cmd_selftest(opt);
    } catch (const albert::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const albert::SplitUnsupported& e) {
        std::cerr << "error: " << e.what() << "\n";
        return diag->parsed() ? kExitSplitInput : kExitFailure;
    } catch (const albert::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFailure;
    }
    return kExitOk;
}
