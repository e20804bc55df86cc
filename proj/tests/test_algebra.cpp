#include "doctest.h"
#include "qps/algebra.hpp"

using namespace qps;

static const Alphabet alph{2, 2};  // y1 y2 g2

TEST_CASE("algebra arithmetic drops zero terms") {
    AlgebraElement a = AlgebraElement::of(parse_word(alph, "y1"), Rat(1, 2));
    AlgebraElement b = AlgebraElement::of(parse_word(alph, "y1"), Rat(-1, 2));
    CHECK((a + b).is_zero());
    CHECK((a - a).is_zero());
    CHECK(a + a == AlgebraElement::of(parse_word(alph, "y1")));
}

TEST_CASE("group algebra product multiplies words") {
    AlgebraElement x = AlgebraElement::of(parse_word(alph, "y1")) +
                       AlgebraElement::one();
    AlgebraElement y = AlgebraElement::of(parse_word(alph, "y1^-1"));
    AlgebraElement p = x * y;
    CHECK(p == AlgebraElement::one() + y);
    CHECK(aug(p) == 2);
}

TEST_CASE("projection identifies conjugates") {
    Word w = parse_word(alph, "y1 g2");
    Word u = parse_word(alph, "y2");
    AlgebraElement x = AlgebraElement::of(w) - AlgebraElement::of(w.conjugated_by(u));
    CHECK(project(x).is_zero());
    AlgebraElement c = AlgebraElement::of(w * u) - AlgebraElement::of(u * w);
    CHECK(project(c).is_zero());
}

TEST_CASE("element rendering and parsing round-trip") {
    AlgebraElement x = parse_element(alph, "2*y1 y2 + -1/2*g2 + 1*1");
    CHECK(x.terms.size() == 3);
    CHECK(x.terms.at(parse_word(alph, "y1 y2")) == 2);
    CHECK(x.terms.at(parse_word(alph, "g2")) == Rat(-1, 2));
    CHECK(x.terms.at(Word{}) == 1);
    CHECK(parse_element(alph, element_str(alph, x)) == x);
    CHECK(element_str(alph, AlgebraElement::zero()) == "0");
    CHECK(parse_element(alph, "0").is_zero());
    // bare word means coefficient 1
    CHECK(parse_element(alph, "y1^-1") ==
          AlgebraElement::of(parse_word(alph, "y1^-1")));
    CHECK_THROWS_AS(parse_element(alph, "2*q"), std::invalid_argument);
}

TEST_CASE("loop combination rendering round-trips") {
    LoopCombination x;
    x.add_term(CyclicWord(parse_word(alph, "g2 y1")), Rat(3, 7));
    x.add_term(CyclicWord(parse_word(alph, "y2")), -2);
    std::string s = combination_str(alph, x);
    CHECK(s.find("3/7") != std::string::npos);
    CHECK(combination_str(alph, LoopCombination::zero()) == "0");
}
