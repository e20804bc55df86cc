#pragma once

#include <functional>

#include "qps/algebra.hpp"

namespace qps {

// Monomial in the class symbols T[c]: a sorted multiset of classes.
using TraceMonomial = std::vector<CyclicWord>;

// Commutative polynomial in the symbols T[c] with exact rational coefficients.
struct TracePolynomial {
    std::map<TraceMonomial, Rat> terms;

    static TracePolynomial zero() { return {}; }
    static TracePolynomial constant(const Rat& c);
    static TracePolynomial symbol(const CyclicWord& c);

    bool is_zero() const { return terms.empty(); }
    void add_term(TraceMonomial m, const Rat& c);

    TracePolynomial& operator+=(const TracePolynomial& o);
    TracePolynomial& operator-=(const TracePolynomial& o);
    TracePolynomial operator+(const TracePolynomial& o) const;
    TracePolynomial operator-(const TracePolynomial& o) const;
    TracePolynomial operator*(const TracePolynomial& o) const;
    TracePolynomial operator*(const Rat& c) const;
    TracePolynomial operator-() const { return *this * Rat(-1); }
    bool operator==(const TracePolynomial& o) const { return terms == o.terms; }

    // Partial derivative with respect to the symbol T[c].
    TracePolynomial partial(const CyclicWord& c) const;
    // Symbols occurring in the polynomial.
    std::vector<CyclicWord> symbols() const;
};

// T-image of a loop combination: sum of coeff * T[class].
TracePolynomial trace_image(const LoopCombination& x);

// An m-bracket on trace polynomials induced by a base rule on class tuples.
struct InducedBrace {
    int arity = 2;
    std::function<TracePolynomial(const std::vector<CyclicWord>&)> base;
};

// Unique extension of the base rule that is a derivation in every slot:
// F(a_1..a_m) = sum over symbol tuples of (prod da_i/dT[x_i]) * f(x_1..x_m).
TracePolynomial poly_brace_extend(const InducedBrace& br,
                                  const std::vector<TracePolynomial>& args);
TracePolynomial induced_bracket(const InducedBrace& br,
                                const std::vector<TracePolynomial>& args);

using Mat = std::vector<std::vector<Rat>>;

Mat mat_identity(int n);
Mat mat_mul(const Mat& a, const Mat& b);
// Exact inverse; throws std::invalid_argument on singular input.
Mat mat_inverse(const Mat& m);

// Exact matrix assignment to the free generators, inverses stored.
struct RepresentationPoint {
    int n = 1;
    std::map<int, Mat> mats;
    std::map<int, Mat> invs;

    Mat word_matrix(const Word& w) const;
};

Rat evaluate(const TracePolynomial& p, const RepresentationPoint& rho);

// Deterministic point built from products of elementary matrices.
RepresentationPoint random_representation(int n, const Alphabet& alph,
                                          uint64_t seed);
// Random invertible matrix, same construction.
Mat random_invertible(int n, uint64_t seed);

RepresentationPoint conjugate_representation(const RepresentationPoint& rho,
                                             const Mat& g);

std::string trace_poly_str(const Alphabet& alph, const TracePolynomial& p);
// Syntax: "2*T[y1]*T[g2 y1] + -1/2*T[1]".
TracePolynomial parse_trace_poly(const Alphabet& alph, const std::string& text);

}  // namespace qps
