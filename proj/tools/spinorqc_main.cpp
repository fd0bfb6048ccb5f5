#include "spinorqc/checks.hpp"
#include "spinorqc/exprs.hpp"
#include "spinorqc/format.hpp"
#include "spinorqc/json_state.hpp"
#include "spinorqc/spinor.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <iterator>
#include <map>
#include <string>

#if defined(_WIN32)
#include <io.h>
#define SPINORQC_ISATTY _isatty
#define SPINORQC_FILENO _fileno
#else
#include <unistd.h>
#define SPINORQC_ISATTY isatty
#define SPINORQC_FILENO fileno
#endif

namespace {

using namespace spinorqc;

enum class Mode { exact, floating };

// Evaluation mode for eval and repl; check, encode and decode are always
// exact.
Mode mode_from_env() {
    const char* raw = std::getenv("SPINORQC_MODE");
    const std::string m = raw ? raw : "";
    if (m.empty() || m == "exact") return Mode::exact;
    if (m == "float") return Mode::floating;
    throw std::runtime_error("SPINORQC_MODE must be 'exact' or 'float', got '" + m + "'");
}

void report_line_error(const std::string& line, std::size_t offset, const std::string& kind,
                       const std::string& msg) {
    std::cerr << line << "\n";
    std::cerr << std::string(std::min(offset, line.size()), ' ') << "^\n";
    std::cerr << kind << " at offset " << offset << ": " << msg << "\n";
}

int run_eval(const std::string& text) {
    Mode mode;
    try {
        mode = mode_from_env();
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 2;
    }
    try {
        const ExprPtr e = parse_expression(text);
        if (mode == Mode::exact)
            std::cout << value_text(eval_exact(e)) << "\n";
        else
            std::cout << value_text(eval_float(e)) << "\n";
        return 0;
    } catch (const ParseError& pe) {
        report_line_error(text, pe.offset, "parse error", pe.what());
    } catch (const EvalError& ee) {
        report_line_error(text, ee.offset, "error", ee.what());
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
    }
    return 2;
}

int run_repl() {
    Mode mode;
    try {
        mode = mode_from_env();
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 2;
    }
    const bool tty = SPINORQC_ISATTY(SPINORQC_FILENO(stdin)) != 0;
    if (tty) {
        std::cout << "spinorqc " << (mode == Mode::exact ? "exact" : "float")
                  << " mode; 'let name = expr' binds, ctrl-d exits\n";
    }
    std::map<std::string, Value> env;
    std::map<std::string, FloatValue> fenv;
    std::string line;
    while (true) {
        if (tty) std::cout << "spinorqc> " << std::flush;
        if (!std::getline(std::cin, line)) break;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        try {
            const Statement st = parse_statement(line);
            std::string shown;
            if (mode == Mode::exact) {
                const Value v = eval_exact(st.expr, env);
                if (!st.bind_name.empty()) env[st.bind_name] = v;
                shown = value_text(v);
            } else {
                const FloatValue v = eval_float(st.expr, fenv);
                if (!st.bind_name.empty()) fenv[st.bind_name] = v;
                shown = value_text(v);
            }
            if (st.bind_name.empty())
                std::cout << shown << "\n";
            else
                std::cout << st.bind_name << " = " << shown << "\n";
        } catch (const ParseError& pe) {
            report_line_error(line, pe.offset, "parse error", pe.what());
        } catch (const EvalError& ee) {
            report_line_error(line, ee.offset, "error", ee.what());
        } catch (const std::exception& ex) {
            std::cerr << "error: " << ex.what() << "\n";
        }
    }
    return 0;
}

Scalar scalar_argument(const std::string& text, const std::string& flag) {
    try {
        const Value v = eval_exact(parse_expression(text));
        if (const auto* s = std::get_if<Scalar>(&v.v)) return *s;
        if (const auto* m = std::get_if<Multivector<Scalar>>(&v.v)) {
            if (*m == grade_project(*m, 0)) return m->scalar_part();
        }
    } catch (const std::exception& ex) {
        throw std::runtime_error(flag + ": " + ex.what());
    }
    throw std::runtime_error(flag + ": '" + text + "' is not a scalar");
}

void render_suite_text(const SuiteResult& s) {
    std::cout << s.name << ": " << (s.passed ? "PASS" : "FAIL") << "\n";
    const auto& rep = s.report;
    if (rep.contains("group_order") && rep.at("group_order").get<int>() != 0)
        std::cout << "  group order " << rep.at("group_order").get<int>() << "\n";
    if (rep.contains("teleport_samples") && rep.at("teleport_samples").get<int>() != 0)
        std::cout << "  " << rep.at("teleport_samples").get<int>() << " exact samples\n";
    if (rep.contains("pairs_checked"))
        std::cout << "  " << rep.at("pairs_checked").get<int>() << " pairs checked\n";
    if (rep.contains("rows")) {
        for (const auto& row : rep.at("rows")) {
            std::cout << "  " << row.at("relation").get<std::string>() << ": "
                      << (row.at("holds").get<bool>() ? "holds" : "fails");
            if (!row.at("holds").get<bool>())
                std::cout << " (residual " << row.at("residual_norm").dump() << ")";
            std::cout << (row.at("oracle_agreement").get<bool>() ? ", oracles agree"
                                                                 : ", ORACLES DISAGREE")
                      << "\n";
        }
    }
    if (rep.contains("failures"))
        for (const auto& f : rep.at("failures"))
            std::cout << "  fail: " << f.get<std::string>() << "\n";
}

int run_check(const std::string& suite, bool as_json, const SuiteOptions& opt) {
    if (suite == "all") {
        const nlohmann::ordered_json envelope = run_all_suites(opt);
        if (as_json) {
            std::cout << envelope.dump(2) << "\n";
        } else {
            for (const auto& row : envelope.at("suites"))
                render_suite_text(SuiteResult{row.at("name").get<std::string>(),
                                              row.at("passed").get<bool>(), row.at("report")});
            std::cout << "all: " << (envelope.at("passed").get<bool>() ? "PASS" : "FAIL") << "\n";
        }
        return envelope.at("passed").get<bool>() ? 0 : 1;
    }
    SuiteResult r;
    if (suite == "braid")
        r = run_braid_suite();
    else if (suite == "teleport")
        r = run_teleport_suite(opt.samples, opt.seed);
    else if (suite == "majorana")
        r = run_majorana_suite(opt.a, opt.b, opt.c, opt.theta_quarter_pi);
    else if (suite == "susy")
        r = run_susy_suite(opt.a, opt.b, opt.c);
    else if (suite == "cstar")
        r = run_cstar_suite(opt.samples, opt.seed);
    else if (suite == "delta")
        r = run_delta_suite();
    else
        throw std::runtime_error("unknown suite '" + suite + "'");
    if (as_json)
        std::cout << r.report.dump(2) << "\n";
    else
        render_suite_text(r);
    return r.passed ? 0 : 1;
}

std::string read_stdin() {
    return std::string(std::istreambuf_iterator<char>(std::cin),
                       std::istreambuf_iterator<char>());
}

int run_encode() {
    const MultiQubitAmplitudes s = read_state_json(read_stdin());
    if (s.n == 1)
        std::cout << to_string(encode_qubit(
                         QubitAmplitudes{s.amps[0].re, s.amps[0].im, s.amps[1].re, s.amps[1].im}))
                  << "\n";
    else
        std::cout << to_string(encode_state(s)) << "\n";
    return 0;
}

int run_decode() {
    const std::string text = read_stdin();
    try {
        const Value v = eval_exact(parse_expression(text));
        if (const auto* m = std::get_if<Multivector<Scalar>>(&v.v)) {
            std::cout << qubit_json(decode_qubit(*m)) << "\n";
            return 0;
        }
        if (const auto* t = std::get_if<TensorMultivector<Scalar>>(&v.v)) {
            std::cout << state_json(decode_state(*t)) << "\n";
            return 0;
        }
        std::cerr << "error: a bare coefficient is not a state\n";
        return 2;
    } catch (const ParseError& pe) {
        report_line_error(text, pe.offset, "parse error", pe.what());
    } catch (const EvalError& ee) {
        report_line_error(text, ee.offset, "error", ee.what());
    }
    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Cl(1,3) spinor calculator"};
    app.require_subcommand(1);

    std::string expr_text;
    CLI::App* eval_cmd = app.add_subcommand("eval", "evaluate one expression");
    eval_cmd->add_option("expression", expr_text, "expression text")->required();

    CLI::App* repl_cmd = app.add_subcommand("repl", "interactive session with let-bindings");

    std::string suite;
    bool as_json = false;
    int samples = 100;
    std::uint64_t seed = 0;
    std::string a_text = "1", b_text = "0", c_text = "0";
    int theta = 1;
    CLI::App* check_cmd = app.add_subcommand("check", "run a verification suite");
    check_cmd->add_option("suite", suite, "all, braid, teleport, majorana, susy, cstar, delta")
        ->required()
        ->check(CLI::IsMember({"all", "braid", "teleport", "majorana", "susy", "cstar", "delta"}));
    check_cmd->add_flag("--json", as_json, "emit the machine-readable report");
    check_cmd->add_option("--samples", samples, "random samples per randomized suite")
        ->check(CLI::Range(1, 1000000));
    check_cmd->add_option("--seed", seed, "PRNG seed");
    check_cmd->add_option("--a", a_text, "Hamiltonian coefficient a (exact scalar)");
    check_cmd->add_option("--b", b_text, "Hamiltonian coefficient b (exact scalar)");
    check_cmd->add_option("--c", c_text, "Hamiltonian coefficient c (exact scalar)");
    check_cmd->add_option("--theta", theta, "braid angle in units of pi/4");

    CLI::App* encode_cmd =
        app.add_subcommand("encode", "state JSON on stdin to canonical element text");
    CLI::App* decode_cmd =
        app.add_subcommand("decode", "element expression on stdin to state JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (eval_cmd->parsed()) return run_eval(expr_text);
        if (repl_cmd->parsed()) return run_repl();
        if (check_cmd->parsed()) {
            SuiteOptions opt;
            opt.samples = samples;
            opt.seed = seed;
            opt.a = scalar_argument(a_text, "--a");
            opt.b = scalar_argument(b_text, "--b");
            opt.c = scalar_argument(c_text, "--c");
            opt.theta_quarter_pi = theta;
            return run_check(suite, as_json, opt);
        }
        if (encode_cmd->parsed()) return run_encode();
        if (decode_cmd->parsed()) return run_decode();
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 2;
    }
    return 2;
}
