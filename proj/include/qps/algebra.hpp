#pragma once

#include <map>

#include "qps/words.hpp"

namespace qps {

// Element of the group algebra A = R[pi]: finite rational combination of
// reduced words, no explicit zero coefficients.
struct AlgebraElement {
    std::map<Word, Rat> terms;

    static AlgebraElement zero() { return {}; }
    static AlgebraElement one() { return of(Word{}); }
    static AlgebraElement of(const Word& w, const Rat& c = 1);

    bool is_zero() const { return terms.empty(); }
    void add_term(const Word& w, const Rat& c);

    AlgebraElement& operator+=(const AlgebraElement& o);
    AlgebraElement& operator-=(const AlgebraElement& o);
    AlgebraElement operator+(const AlgebraElement& o) const;
    AlgebraElement operator-(const AlgebraElement& o) const;
    AlgebraElement operator*(const AlgebraElement& o) const;
    AlgebraElement operator*(const Rat& c) const;
    AlgebraElement operator-() const { return *this * Rat(-1); }
    bool operator==(const AlgebraElement& o) const { return terms == o.terms; }
};

// Element of M(X) = R[conjugacy classes].
struct LoopCombination {
    std::map<CyclicWord, Rat> terms;

    static LoopCombination zero() { return {}; }
    static LoopCombination of(const CyclicWord& c, const Rat& coeff = 1);

    bool is_zero() const { return terms.empty(); }
    void add_term(const CyclicWord& c, const Rat& coeff);

    LoopCombination& operator+=(const LoopCombination& o);
    LoopCombination& operator-=(const LoopCombination& o);
    LoopCombination operator+(const LoopCombination& o) const;
    LoopCombination operator-(const LoopCombination& o) const;
    LoopCombination operator*(const Rat& c) const;
    LoopCombination operator-() const { return *this * Rat(-1); }
    bool operator==(const LoopCombination& o) const { return terms == o.terms; }
};

// Projection A -> A/A' = R[pi-conjugacy-classes].
LoopCombination project(const AlgebraElement& x);

// Augmentation A -> R, every word to 1.
Rat aug(const AlgebraElement& x);

std::string element_str(const Alphabet& alph, const AlgebraElement& x);
std::string combination_str(const Alphabet& alph, const LoopCombination& x);

// Term syntax: "2*y1 y2 + -1/2*g2 + 1*1"; a bare word means coefficient 1.
AlgebraElement parse_element(const Alphabet& alph, const std::string& text);

}  // namespace qps
