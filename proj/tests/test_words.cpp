#include "doctest.h"
#include "qps/words.hpp"

using namespace qps;

static const Alphabet alph{2, 3};  // y1 y2 g2 g3

TEST_CASE("letter naming and parsing") {
    CHECK(alph.letter_count() == 4);
    CHECK(alph.letter_name(1) == "y1");
    CHECK(alph.letter_name(-2) == "y2^-1");
    CHECK(alph.letter_name(3) == "g2");
    CHECK(alph.letter_name(-4) == "g3^-1");
    CHECK(alph.parse_letter("y2") == 2);
    CHECK(alph.parse_letter("g3^-1") == -4);
    CHECK(alph.gate_letter(2) == 3);
    CHECK(alph.gate_of(4) == 3);
    CHECK_THROWS_AS(alph.parse_letter("y3"), std::invalid_argument);
    CHECK_THROWS_AS(alph.parse_letter("g1"), std::invalid_argument);
    CHECK_THROWS_AS(alph.parse_letter("g4"), std::invalid_argument);
    CHECK_THROWS_AS(alph.parse_letter("z1"), std::invalid_argument);
    CHECK_THROWS_AS(alph.parse_letter("y1^2"), std::invalid_argument);
}

TEST_CASE("free reduction") {
    Word w = Word::reduce({1, -1, 2, 3, -3, -2, 1});
    CHECK(w == single_letter(1));
    CHECK(Word::reduce({1, 2, -2, -1}).empty());
    Word u = parse_word(alph, "y1 y2^-1 g3");
    CHECK(word_str(alph, u) == "y1 y2^-1 g3");
    CHECK((u * u.inverse()).empty());
    CHECK(word_str(alph, u.inverse()) == "g3^-1 y2 y1^-1");
}

TEST_CASE("word parse accepts 1 and rejects junk") {
    CHECK(parse_word(alph, "1").empty());
    CHECK(parse_word(alph, "").empty());
    CHECK(parse_word(alph, "  y1   y1 ") == Word::reduce({1, 1}));
    CHECK_THROWS_AS(parse_word(alph, "y1 q"), std::invalid_argument);
}

TEST_CASE("letter order y before g") {
    CHECK(letter_key(1) < letter_key(-1));
    CHECK(letter_key(-1) < letter_key(2));
    CHECK(letter_key(-2) < letter_key(3));
    Word a = parse_word(alph, "y1");
    Word b = parse_word(alph, "g2");
    CHECK(a < b);
}

TEST_CASE("cyclic words reduce and pick the least rotation") {
    CyclicWord c1(parse_word(alph, "g2 g2 y1"));
    CyclicWord c2(parse_word(alph, "y1 g2 g2"));
    CyclicWord c3(parse_word(alph, "g2 y1 g2"));
    CHECK(c1 == c2);
    CHECK(c2 == c3);
    CHECK(word_str(alph, c1.rep()) == "y1 g2 g2");

    // cyclic reduction strips the conjugator
    CyclicWord d1(parse_word(alph, "y2 y1 g3 y2^-1"));
    CyclicWord d2(parse_word(alph, "y1 g3"));
    CHECK(d1 == d2);

    CHECK(CyclicWord(Word{}).trivial());
    CHECK(CyclicWord(parse_word(alph, "y1 y1^-1")).trivial());
}

TEST_CASE("conjugation invariance of classes") {
    Word u = parse_word(alph, "g2 y2");
    Word x = parse_word(alph, "y1 g3 y2");
    CHECK(CyclicWord(x.conjugated_by(u)) == CyclicWord(x));
}
