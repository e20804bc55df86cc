#include "qps/checks.hpp"

#include <map>
#include <random>
#include <sstream>

#include "qps/brackets.hpp"
#include "qps/foxcalc.hpp"
#include "qps/tracealg.hpp"

namespace qps {

namespace {

struct Draw {
    std::mt19937_64 rng;
    explicit Draw(uint64_t seed) : rng(seed) {}

    int pick(int lo, int hi) {
        return std::uniform_int_distribution<int>(lo, hi)(rng);
    }
    uint64_t sub() { return rng(); }

    QuasiSurface surface(int min_gates = 1, int min_y = 0) {
        return QuasiSurface{pick(min_gates, 4), pick(min_y, 3)};
    }
    GenericLoop loop(const QuasiSurface& X, int max_turns = 4) {
        return random_loop(X, {max_turns, 3}, sub());
    }
    BasedGenericLoop based(const QuasiSurface& X, int max_turns = 3) {
        return random_based_loop(X, {max_turns, 3}, sub());
    }
    Word word(const Alphabet& alph, int max_len = 4) {
        std::vector<int> raw;
        int len = pick(0, max_len);
        int lc = alph.letter_count();
        if (lc == 0) return {};
        for (int i = 0; i < len; ++i)
            raw.push_back((pick(0, 1) ? 1 : -1) * pick(1, lc));
        return Word::reduce(raw);
    }
    AlgebraElement element(const Alphabet& alph, int max_terms = 2,
                           int max_len = 2) {
        AlgebraElement x;
        int t = pick(0, max_terms);
        for (int i = 0; i < t; ++i)
            x.add_term(word(alph, max_len), Rat(pick(-2, 2)));
        return x;
    }
    FoxDerivative derivative(const Alphabet& alph) {
        FoxDerivative d;
        for (int g = 1; g <= alph.letter_count(); ++g)
            d.on_generator[g] = element(alph);
        return d;
    }
};

CheckResult run_instances(const std::string& name, int n, uint64_t seed,
                          const std::function<std::string(Draw&, int)>& body) {
    CheckResult res;
    res.name = name;
    res.instances = n;
    for (int i = 0; i < n; ++i) {
        Draw draw(seed * 0x9e3779b97f4a7c15ULL + static_cast<uint64_t>(i) + 1);
        std::string fail = body(draw, i);
        if (!fail.empty()) {
            res.ok = false;
            std::ostringstream os;
            os << "instance " << i << " (seed " << seed << "): " << fail;
            res.detail = os.str();
            return res;
        }
    }
    return res;
}

LoopCombination single(const QuasiSurface& X, const GenericLoop& a) {
    return LoopCombination::of(loop_to_class(X, a));
}

std::string describe(const QuasiSurface& X, const LoopCombination& got,
                     const LoopCombination& want, const char* what) {
    Alphabet alph = X.alphabet();
    return std::string(what) + ": got " + combination_str(alph, got) +
           ", expected " + combination_str(alph, want);
}

}  // namespace

CheckResult check_skew(int n, uint64_t seed) {
    return run_instances("skew-symmetry of bracket2", n, seed,
                         [](Draw& d, int) -> std::string {
        QuasiSurface X = d.surface();
        GenericLoop a = d.loop(X), b = d.loop(X);
        LoopCombination s = bracket2(X, a, b) + bracket2(X, b, a);
        if (!s.is_zero())
            return describe(X, s, {}, "bracket2(a,b)+bracket2(b,a)");
        return {};
    });
}

CheckResult check_cyclic(int n, uint64_t seed) {
    return run_instances("cyclic symmetry of mu^m", n, seed,
                         [](Draw& d, int i) -> std::string {
        QuasiSurface X = d.surface();
        int m = 2 + (i % 2);
        std::vector<GenericLoop> loops;
        for (int j = 0; j < m; ++j) loops.push_back(d.loop(X));
        std::vector<GenericLoop> shifted(loops.begin() + 1, loops.end());
        shifted.push_back(loops.front());
        if (!(mu_total(X, loops) == mu_total(X, shifted)))
            return "mu_total not cyclically symmetric";
        int k = d.pick(1, X.gates);
        if (!(mu_gate(X, k, loops) == mu_gate(X, k, shifted)))
            return "mu_gate not cyclically symmetric";
        return {};
    });
}

CheckResult check_mu1(int n, uint64_t seed) {
    return run_instances("mu^1 == 0", n, seed, [](Draw& d, int) -> std::string {
        QuasiSurface X = d.surface();
        GenericLoop a = d.loop(X);
        LoopCombination v = mu_total(X, {a});
        if (!v.is_zero()) return describe(X, v, {}, "mu_total(1 loop)");
        return {};
    });
}

CheckResult check_jacobi(int n, uint64_t seed) {
    return run_instances("quasi-Jacobi identity", n, seed,
                         [](Draw& d, int) -> std::string {
        QuasiSurface X = d.surface();
        LoopCombination x = single(X, d.loop(X, 3));
        LoopCombination y = single(X, d.loop(X, 3));
        LoopCombination z = single(X, d.loop(X, 3));
        LoopCombination lhs = bracket2_linear(X, bracket2_linear(X, x, y), z) +
                              bracket2_linear(X, bracket2_linear(X, y, z), x) +
                              bracket2_linear(X, bracket2_linear(X, z, x), y);
        LoopCombination rhs = mu_linear(X, {x, y, z}) - mu_linear(X, {z, y, x});
        if (!(lhs == rhs)) return describe(X, lhs - rhs, {}, "Jacobiator - mu^3 defect");
        return {};
    });
}

CheckResult check_invariance(int n, uint64_t seed) {
    return run_instances("homotopy invariance of bracket2 and mu^m", n, seed,
                         [](Draw& d, int) -> std::string {
        QuasiSurface X = d.surface();
        GenericLoop a = d.loop(X), b = d.loop(X), c = d.loop(X, 2);
        LoopCombination v2 = bracket2(X, a, b);
        LoopCombination vm2 = mu_total(X, {a, b});
        LoopCombination vm3 = mu_total(X, {a, b, c});

        std::vector<GenericLoop> variants;
        int gate = d.pick(1, X.gates);
        if (a.is_singular) {
            variants.push_back(push_move(
                X, a, 0, d.pick(0, static_cast<int>(a.singular.rep().size())),
                gate, PushDirection::Insert));
        } else {
            int ti = d.pick(0, static_cast<int>(a.turns.size()) - 1);
            int split = d.pick(0, static_cast<int>(a.turns[ti].passage.size()));
            variants.push_back(
                push_move(X, a, ti, split, gate, PushDirection::Insert));
            variants.push_back(rotate_turns(a, d.pick(1, 3)));
        }
        variants.push_back(class_to_loop(X, loop_to_class(X, a)));

        for (auto& av : variants) {
            if (loop_to_class(X, av) == loop_to_class(X, a)) {
                if (!(bracket2(X, av, b) == v2))
                    return "bracket2 changed under a homotopy move";
                if (!(mu_total(X, {av, b}) == vm2))
                    return "mu^2 changed under a homotopy move";
                if (!(mu_total(X, {av, b, c}) == vm3))
                    return "mu^3 changed under a homotopy move";
            } else {
                return "homotopy move changed the conjugacy class";
            }
        }
        return {};
    });
}

CheckResult check_gate_consistency(int n, uint64_t seed) {
    return run_instances("bracket2 gate term == -mu^2", n, seed,
                         [](Draw& d, int) -> std::string {
        QuasiSurface X = d.surface();
        GenericLoop a = d.loop(X), b = d.loop(X);
        Bracket2Parts parts = bracket2_parts(X, a, b);
        if (!(parts.gate == -mu_total(X, {a, b})))
            return "gate term of bracket2 differs from -mu^2";
        // every disk-term coefficient is even
        for (auto& [cls, coeff] : parts.disk.terms)
            if (coeff.get_den() != 1 || coeff.get_num() % 2 != 0)
                return "disk term with odd coefficient";
        return {};
    });
}

CheckResult check_derivation(int n, uint64_t seed) {
    return run_instances("based_d and mu_refined are derivation lifts", n, seed,
                         [](Draw& d, int) -> std::string {
        QuasiSurface X = d.surface();
        BasedGenericLoop a = d.based(X), a2 = d.based(X);
        GenericLoop b = d.loop(X);

        AlgebraElement wa = AlgebraElement::of(based_word(X, a));
        AlgebraElement wa2 = AlgebraElement::of(based_word(X, a2));
        BasedGenericLoop ab = concat(X, a, a2);

        AlgebraElement leib = based_d(X, ab, b) -
                              based_d(X, a, b) * wa2 - wa * based_d(X, a2, b);
        if (!leib.is_zero()) return "based_d violates the Leibniz rule";

        if (!(project(based_d(X, a, b)) ==
              bracket2(X, forget_basepoint(X, a), b)))
            return "project(based_d) differs from bracket2";

        int k = d.pick(1, X.gates);
        std::vector<GenericLoop> rest{b, d.loop(X, 2)};
        int m = d.pick(1, 2);
        rest.resize(m);
        AlgebraElement mref = mu_refined(X, k, a, rest);
        std::vector<GenericLoop> all{forget_basepoint(X, a)};
        all.insert(all.end(), rest.begin(), rest.end());
        if (!(project(mref) == mu_gate(X, k, all)))
            return "project(mu_refined) differs from mu_gate";

        AlgebraElement mleib = mu_refined(X, k, ab, rest) -
                               mu_refined(X, k, a, rest) * wa2 -
                               wa * mu_refined(X, k, a2, rest);
        if (!mleib.is_zero()) return "mu_refined violates the Leibniz rule";
        return {};
    });
}

CheckResult check_fox(int n, uint64_t seed) {
    return run_instances("Fox derivative laws", n, seed,
                         [](Draw& d, int) -> std::string {
        QuasiSurface X = d.surface(1, 1);
        Alphabet alph = X.alphabet();
        FoxDerivative fd = d.derivative(alph);
        Word x = d.word(alph), y = d.word(alph);

        // cocycle rule on words
        AlgebraElement rule = fox_apply(fd, x * y) - fox_apply(fd, x) -
                              AlgebraElement::of(x) * fox_apply(fd, y);
        if (!rule.is_zero()) return "fox_apply cocycle rule fails";

        // Delta kills commutators, via the stronger permutation identity
        if (!(delta_apply(fd, x * y) == delta_apply(fd, y * x)))
            return "delta_apply(xy) != delta_apply(yx)";
        AlgebraElement comm = AlgebraElement::of(x * y) - AlgebraElement::of(y * x);
        if (!project(delta_apply(fd, comm)).is_zero())
            return "delta_apply does not kill a commutator";

        // lifted derivation Leibniz
        AlgebraElement F = d.element(alph);
        AlgebraElement lift = fox_lifted_derivation(fd, F, x * y) -
                              fox_lifted_derivation(fd, F, x) * AlgebraElement::of(y) -
                              AlgebraElement::of(x) * fox_lifted_derivation(fd, F, y);
        if (!lift.is_zero()) return "fox_lifted_derivation violates Leibniz";

        // gate derivative: cocycle on concatenations, and agreement with the
        // generator-level derivative
        int k = d.pick(1, X.gates);
        BasedGenericLoop a = d.based(X), b = d.based(X);
        AlgebraElement da = gate_fox_derivative(X, k, a);
        AlgebraElement db = gate_fox_derivative(X, k, b);
        AlgebraElement dab = gate_fox_derivative(X, k, concat(X, a, b));
        if (!(dab == da + AlgebraElement::of(based_word(X, a)) * db))
            return "gate derivative violates the cocycle rule";
        if (!(da == fox_apply(gate_derivative(X, k), based_word(X, a))))
            return "gate derivative disagrees with its generator values";
        return {};
    });
}

CheckResult check_fox_gate_equiv(int n, uint64_t seed) {
    return run_instances("fox_brace of gate derivatives == mu_gate", n, seed,
                         [](Draw& d, int i) -> std::string {
        QuasiSurface X = d.surface();
        int k = d.pick(1, X.gates);
        int m = 1 + (i % 3);
        FoxDerivative gd = gate_derivative(X, k);
        std::vector<FoxDerivative> ds(m, gd);
        std::vector<CyclicWord> classes;
        std::vector<GenericLoop> loops;
        for (int j = 0; j < m; ++j) {
            CyclicWord c = loop_to_class(X, d.loop(X, 3));
            classes.push_back(c);
            loops.push_back(class_to_loop(X, c));
        }
        if (!(fox_brace(ds, classes) == mu_gate(X, k, loops)))
            return "fox_brace differs from mu_gate";

        // representative independence and reference-path independence
        std::vector<CyclicWord> conj;
        Alphabet alph = X.alphabet();
        for (auto& c : classes)
            conj.push_back(CyclicWord(c.rep().conjugated_by(d.word(alph))));
        if (!(fox_brace(ds, conj) == fox_brace(ds, classes)))
            return "fox_brace depends on class representatives";
        std::vector<FoxDerivative> shifted(m, shift_reference(gd, d.word(alph)));
        if (!(fox_brace(shifted, classes) == fox_brace(ds, classes)))
            return "fox_brace depends on the gate reference path";
        return {};
    });
}

namespace {

// Memoized base rules over one quasi-surface.
struct TraceBrackets {
    const QuasiSurface& X;
    std::map<std::vector<CyclicWord>, TracePolynomial> cache;

    InducedBrace bracket(int arity) {
        return {arity, [this, arity](const std::vector<CyclicWord>& t) {
                    auto it = cache.find(t);
                    if (it != cache.end()) return it->second;
                    LoopCombination v;
                    if (arity == 2) {
                        v = bracket2_linear(X, LoopCombination::of(t[0]),
                                            LoopCombination::of(t[1]));
                    } else {
                        std::vector<LoopCombination> args;
                        for (auto& c : t) args.push_back(LoopCombination::of(c));
                        v = mu_linear(X, args);
                    }
                    TracePolynomial p = trace_image(v);
                    cache.emplace(t, p);
                    return p;
                }};
    }
};

TracePolynomial random_trace_poly(Draw& d, const std::vector<CyclicWord>& symbols,
                                  int max_terms = 2, int max_deg = 2) {
    TracePolynomial p;
    int t = d.pick(1, max_terms);
    for (int i = 0; i < t; ++i) {
        TraceMonomial m;
        int deg = d.pick(1, max_deg);
        for (int j = 0; j < deg; ++j)
            m.push_back(symbols[d.pick(0, static_cast<int>(symbols.size()) - 1)]);
        p.add_term(std::move(m), Rat(d.pick(-2, 2)));
    }
    return p;
}

std::vector<CyclicWord> random_symbols(Draw& d, const QuasiSurface& X, int count) {
    std::vector<CyclicWord> out;
    for (int i = 0; i < count; ++i)
        out.push_back(loop_to_class(X, d.loop(X, 2)));
    return out;
}

}  // namespace

CheckResult check_trace_leibniz(int n, uint64_t seed) {
    return run_instances("induced brackets satisfy Leibniz", n, seed,
                         [](Draw& d, int) -> std::string {
        QuasiSurface X = d.surface(2, 1);
        TraceBrackets tb{X};
        InducedBrace br2 = tb.bracket(2);
        auto symbols = random_symbols(d, X, 3);
        TracePolynomial P = random_trace_poly(d, symbols);
        TracePolynomial Q = random_trace_poly(d, symbols);
        TracePolynomial S = random_trace_poly(d, symbols);
        TracePolynomial leib = induced_bracket(br2, {P * Q, S}) -
                               P * induced_bracket(br2, {Q, S}) -
                               induced_bracket(br2, {P, S}) * Q;
        if (!leib.is_zero()) return "induced 2-bracket violates Leibniz";

        // generator diagram and inherited symmetries
        TracePolynomial tx = TracePolynomial::symbol(symbols[0]);
        TracePolynomial ty = TracePolynomial::symbol(symbols[1]);
        LoopCombination base = bracket2_linear(X, LoopCombination::of(symbols[0]),
                                               LoopCombination::of(symbols[1]));
        if (!(induced_bracket(br2, {tx, ty}) == trace_image(base)))
            return "induced bracket on generators differs from the trace image";
        if (!(induced_bracket(br2, {P, Q}) == -induced_bracket(br2, {Q, P})))
            return "induced 2-bracket not skew-symmetric";
        InducedBrace br3 = tb.bracket(3);
        if (!(induced_bracket(br3, {P, Q, S}) == induced_bracket(br3, {S, P, Q})))
            return "induced 3-bracket not cyclically symmetric";
        return {};
    });
}

CheckResult check_trace_jacobi(int n, uint64_t seed, int points_per_dim) {
    return run_instances("quasi-Jacobi in the trace algebra", n, seed,
                         [points_per_dim](Draw& d, int) -> std::string {
        QuasiSurface X = d.surface(2, 1);
        Alphabet alph = X.alphabet();
        TraceBrackets tb{X};
        InducedBrace br2 = tb.bracket(2);
        InducedBrace br3 = tb.bracket(3);
        auto symbols = random_symbols(d, X, 3);
        TracePolynomial x = random_trace_poly(d, symbols);
        TracePolynomial y = random_trace_poly(d, symbols);
        TracePolynomial z = random_trace_poly(d, symbols);
        auto b2 = [&](const TracePolynomial& p, const TracePolynomial& q) {
            return induced_bracket(br2, {p, q});
        };
        TracePolynomial lhs =
            b2(b2(x, y), z) + b2(b2(y, z), x) + b2(b2(z, x), y);
        TracePolynomial rhs = induced_bracket(br3, {x, y, z}) -
                              induced_bracket(br3, {z, y, x});
        TracePolynomial defect = lhs - rhs;
        for (int dim = 1; dim <= 3; ++dim)
            for (int p = 0; p < points_per_dim; ++p) {
                RepresentationPoint rho = random_representation(dim, alph, d.sub());
                Rat v = evaluate(defect, rho);
                if (v != 0)
                    return "quasi-Jacobi defect evaluates to " + rat_str(v) +
                           " at dimension " + std::to_string(dim);
            }
        return {};
    });
}

CheckResult check_trace_conjugation(int n, uint64_t seed) {
    return run_instances("trace evaluation is conjugation invariant", n, seed,
                         [](Draw& d, int i) -> std::string {
        QuasiSurface X = d.surface(1, 1);
        Alphabet alph = X.alphabet();
        auto symbols = random_symbols(d, X, 3);
        TracePolynomial p = random_trace_poly(d, symbols, 3, 2);
        int dim = 1 + (i % 3);
        RepresentationPoint rho = random_representation(dim, alph, d.sub());
        Mat g = random_invertible(dim, d.sub());
        RepresentationPoint conj = conjugate_representation(rho, g);
        if (evaluate(p, rho) != evaluate(p, conj))
            return "evaluation changed under conjugation";
        RepresentationPoint back = conjugate_representation(conj, mat_inverse(g));
        if (!(back.mats == rho.mats)) return "double conjugation not the identity";
        return {};
    });
}

CheckResult check_poisson_degeneration(int n, uint64_t seed) {
    // With the 3-bracket zero and a Lie base rule, the induced 2-bracket
    // satisfies the plain Jacobi identity (sl2 structure constants on three
    // class symbols).
    return run_instances("Lie base rule induces a Poisson bracket", n, seed,
                         [](Draw& d, int) -> std::string {
        Alphabet alph{3, 1};
        CyclicWord e(single_letter(1)), f(single_letter(2)), h(single_letter(3));
        auto base = [&](const std::vector<CyclicWord>& t) -> TracePolynomial {
            auto T = [](const CyclicWord& c) { return TracePolynomial::symbol(c); };
            if (t[0] == e && t[1] == f) return T(h);
            if (t[0] == f && t[1] == e) return -T(h);
            if (t[0] == h && t[1] == e) return T(e) * Rat(2);
            if (t[0] == e && t[1] == h) return -(T(e) * Rat(2));
            if (t[0] == h && t[1] == f) return -(T(f) * Rat(2));
            if (t[0] == f && t[1] == h) return T(f) * Rat(2);
            return TracePolynomial::zero();
        };
        InducedBrace br2{2, base};
        std::vector<CyclicWord> symbols{e, f, h};
        TracePolynomial P = random_trace_poly(d, symbols, 2, 2);
        TracePolynomial Q = random_trace_poly(d, symbols, 2, 2);
        TracePolynomial S = random_trace_poly(d, symbols, 2, 2);
        auto b2 = [&](const TracePolynomial& p, const TracePolynomial& q) {
            return induced_bracket(br2, {p, q});
        };
        TracePolynomial jac = b2(b2(P, Q), S) + b2(b2(Q, S), P) + b2(b2(S, P), Q);
        if (!jac.is_zero()) return "plain Jacobi fails for the Lie base rule";
        (void)alph;
        return {};
    });
}

bool known_suite(const std::string& suite) {
    static const char* names[] = {"skew",       "cyclic", "jacobi",
                                  "invariance", "derivation", "fox",
                                  "fox-gate-equiv", "trace", "all"};
    for (auto* n : names)
        if (suite == n) return true;
    return false;
}

std::vector<CheckResult> run_suite(const std::string& suite, int n, uint64_t seed) {
    std::vector<CheckResult> out;
    auto want = [&](const char* name) { return suite == name || suite == "all"; };
    if (want("skew")) out.push_back(check_skew(n, seed));
    if (want("cyclic")) {
        out.push_back(check_cyclic(n, seed));
        out.push_back(check_mu1(n, seed));
    }
    if (want("jacobi")) out.push_back(check_jacobi(std::min(n, 50), seed));
    if (want("invariance")) {
        out.push_back(check_invariance(n, seed));
        out.push_back(check_gate_consistency(n, seed));
    }
    if (want("derivation")) out.push_back(check_derivation(n, seed));
    if (want("fox")) out.push_back(check_fox(n, seed));
    if (want("fox-gate-equiv")) out.push_back(check_fox_gate_equiv(n, seed));
    if (want("trace")) {
        out.push_back(check_trace_leibniz(std::min(n, 20), seed));
        out.push_back(check_trace_jacobi(std::min(n, 3), seed, 20));
        out.push_back(check_trace_conjugation(n, seed));
        out.push_back(check_poisson_degeneration(n, seed));
    }
    return out;
}

}  // namespace qps
