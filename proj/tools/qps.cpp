#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "qps/brackets.hpp"
#include "qps/checks.hpp"
#include "qps/foxcalc.hpp"
#include "qps/tracealg.hpp"
#include "qps/workspace.hpp"

using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitParse = 3;

json combination_json(const qps::Alphabet& alph, const qps::LoopCombination& x) {
    json terms = json::array();
    for (auto& [c, k] : x.terms)
        terms.push_back({{"class", qps::class_str(alph, c)}, {"coeff", qps::rat_str(k)}});
    return json{{"terms", terms}};
}

json element_json(const qps::Alphabet& alph, const qps::AlgebraElement& x) {
    json terms = json::array();
    for (auto& [w, k] : x.terms)
        terms.push_back({{"word", qps::word_str(alph, w)}, {"coeff", qps::rat_str(k)}});
    return json{{"terms", terms}};
}

void print_combination(const qps::Alphabet& alph, const qps::LoopCombination& x,
                       bool as_json) {
    if (as_json)
        std::cout << combination_json(alph, x).dump() << "\n";
    else
        std::cout << qps::combination_str(alph, x) << "\n";
}

struct Options {
    std::string workspace_path;
    bool json = false;

    // bracket / mu
    std::vector<std::string> names;
    int m = 2;
    int gate = 0;  // 0 = total

    // check
    std::string suite;
    int random = 100;
    uint64_t seed = 1;

    // fox / trace
    std::string fox_action;  // apply | delta
    std::string fox_name;
    std::string word_text;
    std::string trace_action;  // eval
    std::string poly_text;
    std::string rep_name;
};

int run_bracket(const Options& opt) {
    qps::Workspace ws = qps::parse_workspace_file(opt.workspace_path);
    const auto& a = ws.loop(opt.names[0]);
    const auto& b = ws.loop(opt.names[1]);
    print_combination(ws.alphabet(), qps::bracket2(ws.surface, a, b), opt.json);
    return kExitOk;
}

int run_mu(const Options& opt) {
    qps::Workspace ws = qps::parse_workspace_file(opt.workspace_path);
    if (static_cast<int>(opt.names.size()) != opt.m) {
        std::cerr << "mu: expected " << opt.m << " loop names, got "
                  << opt.names.size() << "\n";
        return kExitUsage;
    }
    std::vector<qps::GenericLoop> loops;
    for (auto& n : opt.names) loops.push_back(ws.loop(n));
    qps::LoopCombination out;
    if (opt.gate == 0) {
        out = qps::mu_total(ws.surface, loops);
    } else {
        if (!ws.surface.valid_gate(opt.gate)) {
            std::cerr << "mu: gate " << opt.gate << " out of range\n";
            return kExitUsage;
        }
        out = qps::mu_gate(ws.surface, opt.gate, loops);
    }
    print_combination(ws.alphabet(), out, opt.json);
    return kExitOk;
}

int run_check(const Options& opt) {
    if (!qps::known_suite(opt.suite)) {
        std::cerr << "unknown suite: " << opt.suite << "\n";
        return kExitUsage;
    }
    auto results = qps::run_suite(opt.suite, opt.random, opt.seed);
    bool all_ok = true;
    json jres = json::array();
    for (auto& r : results) {
        all_ok = all_ok && r.ok;
        if (opt.json) {
            jres.push_back({{"check", r.name},
                            {"instances", r.instances},
                            {"ok", r.ok},
                            {"detail", r.detail}});
        } else {
            std::cout << (r.ok ? "pass" : "FAIL") << "  " << r.name << "  ("
                      << r.instances << " instances, seed " << opt.seed << ")";
            if (!r.ok) std::cout << "\n      " << r.detail;
            std::cout << "\n";
        }
    }
    if (opt.json)
        std::cout << json{{"suite", opt.suite}, {"seed", opt.seed}, {"results", jres}}
                         .dump()
                  << "\n";
    return all_ok ? kExitOk : kExitCheckFailed;
}

int run_fox(const Options& opt) {
    qps::Workspace ws = qps::parse_workspace_file(opt.workspace_path);
    const auto& d = ws.fox(opt.fox_name);
    qps::Alphabet alph = ws.alphabet();
    qps::Word w = qps::parse_word(alph, opt.word_text);
    qps::AlgebraElement out;
    if (opt.fox_action == "apply")
        out = qps::fox_apply(d, w);
    else
        out = qps::delta_apply(d, w);
    if (opt.json)
        std::cout << element_json(alph, out).dump() << "\n";
    else
        std::cout << qps::element_str(alph, out) << "\n";
    return kExitOk;
}

int run_trace_eval(const Options& opt) {
    qps::Workspace ws = qps::parse_workspace_file(opt.workspace_path);
    qps::Alphabet alph = ws.alphabet();
    qps::TracePolynomial p = qps::parse_trace_poly(alph, opt.poly_text);
    qps::Rat v = qps::evaluate(p, ws.rep(opt.rep_name));
    if (opt.json)
        std::cout << json{{"value", qps::rat_str(v)}}.dump() << "\n";
    else
        std::cout << qps::rat_str(v) << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact quasi-Poisson brackets on a quasi-surface"};
    app.require_subcommand(1);
    Options opt;

    auto add_ws = [&](CLI::App* sub) {
        sub->add_option("-w,--workspace", opt.workspace_path, "workspace .qs file")
            ->required();
    };

    auto* bracket = app.add_subcommand("bracket", "2-bracket of two named loops");
    add_ws(bracket);
    bracket->add_option("names", opt.names, "loop names a b")->expected(2);
    bracket->add_flag("--json", opt.json, "structured output");

    auto* mu = app.add_subcommand("mu", "gate m-bracket of named loops");
    add_ws(mu);
    mu->add_option("-m", opt.m, "arity")->check(CLI::Range(1, 8));
    mu->add_option("--gate", opt.gate, "single gate instead of the total");
    mu->add_option("names", opt.names, "loop names")->expected(-1);
    mu->add_flag("--json", opt.json, "structured output");

    auto* check = app.add_subcommand("check", "randomized identity suites");
    check->add_option("suite", opt.suite,
                      "skew|cyclic|jacobi|invariance|derivation|fox|"
                      "fox-gate-equiv|trace|all")
        ->required();
    check->add_option("--random,-n", opt.random, "instances per check")
        ->check(CLI::PositiveNumber);
    check->add_option("--seed", opt.seed, "replayable seed");
    check->add_flag("--json", opt.json, "structured output");

    auto* fox = app.add_subcommand("fox", "apply a named Fox derivative");
    add_ws(fox);
    fox->add_option("action", opt.fox_action, "apply|delta")
        ->check(CLI::IsMember({"apply", "delta"}))
        ->required();
    fox->add_option("name", opt.fox_name, "derivative name")->required();
    fox->add_option("word", opt.word_text, "word, e.g. \"y1 y1 y2\"")->required();
    fox->add_flag("--json", opt.json, "structured output");

    auto* trace = app.add_subcommand("trace", "trace polynomial evaluation");
    auto* trace_eval = trace->add_subcommand("eval", "evaluate at a named point");
    add_ws(trace_eval);
    trace_eval->add_option("poly", opt.poly_text, "e.g. \"2*T[y1]*T[g2 y1]\"")
        ->required();
    trace_eval->add_option("rep", opt.rep_name, "representation name")->required();
    trace_eval->add_flag("--json", opt.json, "structured output");
    trace->require_subcommand(1);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*bracket) return run_bracket(opt);
        if (*mu) return run_mu(opt);
        if (*check) return run_check(opt);
        if (*fox) return run_fox(opt);
        if (*trace_eval) return run_trace_eval(opt);
    } catch (const qps::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const qps::NameError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
