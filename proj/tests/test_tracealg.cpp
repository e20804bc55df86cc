#include "doctest.h"
#include "qps/tracealg.hpp"

using namespace qps;

namespace {

const Alphabet alph{1, 2};  // y1 g2

CyclicWord cls(const std::string& text) {
    return CyclicWord(parse_word(alph, text));
}

}  // namespace

TEST_CASE("trace polynomial arithmetic and partials") {
    TracePolynomial p = TracePolynomial::symbol(cls("y1"));
    TracePolynomial q = TracePolynomial::symbol(cls("g2"));
    TracePolynomial f = p * p * q + q * Rat(3);
    CHECK(f.partial(cls("y1")) == p * q * 2);
    CHECK(f.partial(cls("g2")) == p * p + TracePolynomial::constant(3));
    CHECK(f.partial(cls("g2 y1")).is_zero());
    CHECK((f - f).is_zero());
    CHECK(f.symbols().size() == 2);
}

TEST_CASE("monomials commute") {
    TracePolynomial p = TracePolynomial::symbol(cls("y1"));
    TracePolynomial q = TracePolynomial::symbol(cls("g2"));
    CHECK(p * q == q * p);
}

TEST_CASE("trace image of a loop combination") {
    LoopCombination x;
    x.add_term(cls("y1"), Rat(1, 2));
    x.add_term(cls("g2"), -1);
    TracePolynomial t = trace_image(x);
    CHECK(t == TracePolynomial::symbol(cls("y1")) * Rat(1, 2) -
                   TracePolynomial::symbol(cls("g2")));
}

TEST_CASE("brace extension restricts to the base rule on symbols") {
    InducedBrace br;
    br.arity = 2;
    br.base = [](const std::vector<CyclicWord>& t) {
        return TracePolynomial::symbol(t[0]) * TracePolynomial::symbol(t[1]);
    };
    TracePolynomial p = TracePolynomial::symbol(cls("y1"));
    TracePolynomial q = TracePolynomial::symbol(cls("g2"));
    CHECK(poly_brace_extend(br, {p, q}) == br.base({cls("y1"), cls("g2")}));
}

TEST_CASE("brace extension is a derivation in each slot") {
    InducedBrace br;
    br.arity = 2;
    br.base = [](const std::vector<CyclicWord>& t) {
        return TracePolynomial::symbol(t[0]) - TracePolynomial::symbol(t[1]);
    };
    TracePolynomial p = TracePolynomial::symbol(cls("y1"));
    TracePolynomial q = TracePolynomial::symbol(cls("g2"));
    TracePolynomial r = TracePolynomial::symbol(cls("g2 y1")) + p * q;
    CHECK(poly_brace_extend(br, {p * q, r}) ==
          p * poly_brace_extend(br, {q, r}) + poly_brace_extend(br, {p, r}) * q);
    CHECK(poly_brace_extend(br, {r, p * q}) ==
          p * poly_brace_extend(br, {r, q}) + poly_brace_extend(br, {r, p}) * q);
    // constants have no symbols, so they are central
    CHECK(poly_brace_extend(br, {TracePolynomial::constant(5), r}).is_zero());
}

TEST_CASE("matrix inverse is exact") {
    for (uint64_t seed : {1ull, 7ull, 42ull}) {
        Mat m = random_invertible(3, seed);
        CHECK(mat_mul(m, mat_inverse(m)) == mat_identity(3));
    }
    Mat sing = {{Rat(1), Rat(2)}, {Rat(2), Rat(4)}};
    CHECK_THROWS_AS(mat_inverse(sing), std::invalid_argument);
}

TEST_CASE("word matrices multiply") {
    RepresentationPoint rho = random_representation(2, alph, 11);
    Word x = parse_word(alph, "y1 g2");
    Word y = parse_word(alph, "g2^-1 y1");
    CHECK(rho.word_matrix(x * y) ==
          mat_mul(rho.word_matrix(x), rho.word_matrix(y)));
    CHECK(rho.word_matrix(Word{}) == mat_identity(2));
    CHECK(mat_mul(rho.word_matrix(x), rho.word_matrix(x.inverse())) ==
          mat_identity(2));
}

TEST_CASE("evaluation at the unipotent point") {
    RepresentationPoint rho;
    rho.n = 2;
    rho.mats[1] = {{Rat(1), Rat(1)}, {Rat(0), Rat(1)}};
    rho.mats[2] = {{Rat(1), Rat(0)}, {Rat(1), Rat(1)}};
    for (auto& [g, m] : rho.mats) rho.invs[g] = mat_inverse(m);
    CHECK(evaluate(TracePolynomial::symbol(cls("y1")), rho) == 2);
    CHECK(evaluate(TracePolynomial::symbol(cls("1")), rho) == 2);
    CHECK(evaluate(TracePolynomial::symbol(cls("y1 g2")), rho) == 3);
    // evaluation is a ring map
    TracePolynomial p = TracePolynomial::symbol(cls("y1 g2"));
    TracePolynomial q = TracePolynomial::symbol(cls("g2"));
    CHECK(evaluate(p * q, rho) == evaluate(p, rho) * evaluate(q, rho));
    CHECK(evaluate(p + q, rho) == evaluate(p, rho) + evaluate(q, rho));
}

TEST_CASE("trace evaluation is conjugation invariant") {
    RepresentationPoint rho = random_representation(2, alph, 3);
    Mat g = random_invertible(2, 17);
    RepresentationPoint tau = conjugate_representation(rho, g);
    TracePolynomial p = TracePolynomial::symbol(cls("y1 g2")) *
                            TracePolynomial::symbol(cls("g2")) +
                        TracePolynomial::symbol(cls("y1^-1"));
    CHECK(evaluate(p, tau) == evaluate(p, rho));
    RepresentationPoint back = conjugate_representation(tau, mat_inverse(g));
    CHECK(back.mats == rho.mats);
}

TEST_CASE("representation points are deterministic per seed") {
    RepresentationPoint a = random_representation(3, alph, 9);
    RepresentationPoint b = random_representation(3, alph, 9);
    CHECK(a.mats == b.mats);
    RepresentationPoint one = random_representation(1, alph, 4);
    CHECK(one.mats.at(1)[0][0] != 0);
}

TEST_CASE("trace polynomial parsing round-trips") {
    TracePolynomial p =
        parse_trace_poly(alph, "2*T[y1]*T[g2 y1] + -1/2*T[1] + 3");
    CHECK(p.terms.size() == 3);
    CHECK(parse_trace_poly(alph, trace_poly_str(alph, p)) == p);
    CHECK(parse_trace_poly(alph, "0").is_zero());
    CHECK_THROWS_AS(parse_trace_poly(alph, "T[y1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_trace_poly(alph, "T[q7]"), std::invalid_argument);
}
