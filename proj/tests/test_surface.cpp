#include "doctest.h"
#include "qps/surface.hpp"

using namespace qps;

namespace {

const QuasiSurface X{2, 1};  // two gates, one y-generator
const Alphabet alph = X.alphabet();

Turn mk(int ig, const Rat& ip, int og, const Rat& op, const std::string& y = "1") {
    return Turn{ig, ip, og, op, parse_word(alph, y)};
}

}  // namespace

TEST_CASE("gate words") {
    CHECK(X.gate_word(1).empty());
    CHECK(X.gate_word(2) == parse_word(alph, "g2"));
    CHECK_THROWS_AS(X.gate_word(3), std::invalid_argument);
}

TEST_CASE("loop_to_class on one- and two-turn loops") {
    GenericLoop a = GenericLoop::make_turns({mk(1, {1, 4}, 2, {1, 4})});
    CHECK(loop_to_class(X, a) == CyclicWord(parse_word(alph, "g2")));

    GenericLoop b = GenericLoop::make_turns({mk(1, {1, 2}, 2, {1, 2}, "y1")});
    CHECK(loop_to_class(X, b) == CyclicWord(parse_word(alph, "g2 y1")));

    GenericLoop c = GenericLoop::make_turns(
        {mk(1, {1, 4}, 2, {1, 4}, "y1"), mk(2, {1, 2}, 1, {1, 2}, "y1^-1")});
    CHECK(loop_to_class(X, c) ==
          CyclicWord(parse_word(alph, "g2 y1 g2^-1 y1^-1")));

    GenericLoop s = GenericLoop::make_singular(CyclicWord(parse_word(alph, "y1")));
    CHECK(loop_to_class(X, s) == CyclicWord(parse_word(alph, "y1")));
}

TEST_CASE("validate_loop rejects bad data") {
    CHECK_THROWS_AS(GenericLoop::make_turns({}), std::invalid_argument);
    GenericLoop bad_gate = GenericLoop::make_turns({mk(1, {1, 4}, 2, {1, 4})});
    bad_gate.turns[0].out_gate = 5;
    CHECK_THROWS_AS(validate_loop(X, bad_gate), std::invalid_argument);
    GenericLoop bad_pos = GenericLoop::make_turns({mk(1, {1, 4}, 2, {1, 4})});
    bad_pos.turns[0].in_pos = Rat(3, 2);
    CHECK_THROWS_AS(validate_loop(X, bad_pos), std::invalid_argument);
    GenericLoop bad_passage = GenericLoop::make_turns({mk(1, {1, 4}, 2, {1, 4})});
    bad_passage.turns[0].passage = parse_word(alph, "g2");
    CHECK_THROWS_AS(validate_loop(X, bad_passage), std::invalid_argument);
    GenericLoop coincident = GenericLoop::make_turns(
        {mk(1, {1, 4}, 2, {1, 4}), mk(1, {1, 4}, 2, {1, 2})});
    CHECK_THROWS_AS(validate_loop(X, coincident), std::invalid_argument);
}

TEST_CASE("class_to_loop round-trips") {
    for (const char* text : {"g2", "g2 y1", "y1 g2 y1 g2^-1", "y1 y1",
                             "g2 g2 y1", "1", "g2^-1 y1^-1"}) {
        CyclicWord c(parse_word(alph, text));
        GenericLoop a = class_to_loop(X, c);
        validate_loop(X, a);
        CHECK(loop_to_class(X, a) == c);
    }
    // pure y-classes become singular loops
    CHECK(class_to_loop(X, CyclicWord(parse_word(alph, "y1 y1"))).is_singular);
    CHECK_FALSE(class_to_loop(X, CyclicWord(parse_word(alph, "g2"))).is_singular);
}

TEST_CASE("based loops and forgetting the basepoint") {
    BasedGenericLoop a;
    a.head = parse_word(alph, "y1");
    a.turns = {mk(1, {1, 4}, 2, {1, 4}, "y1")};
    CHECK(based_word(X, a) == parse_word(alph, "y1 g2 y1"));
    GenericLoop f = forget_basepoint(X, a);
    CHECK(loop_to_class(X, f) == CyclicWord(based_word(X, a)));
}

TEST_CASE("gate crossings carry entry and exit signs") {
    GenericLoop c = GenericLoop::make_turns(
        {mk(1, {1, 4}, 2, {1, 4}, "y1"), mk(2, {1, 2}, 1, {1, 2})});
    auto on1 = crossings_on_gate(c, 1);
    auto on2 = crossings_on_gate(c, 2);
    REQUIRE(on1.size() == 2);
    REQUIRE(on2.size() == 2);
    CHECK(on1[0].entry);
    CHECK(on1[0].sign() == 1);
    CHECK(on1[1].sign() == -1);
    int net = 0;
    for (auto& p : on2) net += p.sign();
    CHECK(net == 0);
}

TEST_CASE("rotation_at stays in the conjugacy class") {
    GenericLoop c = GenericLoop::make_turns(
        {mk(1, {1, 4}, 2, {1, 4}, "y1"), mk(2, {1, 2}, 1, {1, 2}, "y1^-1")});
    CyclicWord cls = loop_to_class(X, c);
    for (int k = 1; k <= X.gates; ++k)
        for (auto& p : crossings_on_gate(c, k))
            CHECK(CyclicWord(rotation_at(X, c, p)) == cls);
    // single-turn exit rotation starts at the passage word
    GenericLoop b = GenericLoop::make_turns({mk(1, {1, 2}, 2, {1, 2}, "y1")});
    auto exit2 = crossings_on_gate(b, 2);
    REQUIRE(exit2.size() == 1);
    CHECK(rotation_at(X, b, exit2[0]) == parse_word(alph, "y1 g2"));
}

TEST_CASE("push moves preserve the class") {
    GenericLoop c = GenericLoop::make_turns(
        {mk(1, {1, 4}, 2, {1, 4}, "y1"), mk(2, {1, 2}, 1, {1, 2}, "y1^-1")});
    CyclicWord cls = loop_to_class(X, c);
    for (int gate = 1; gate <= 2; ++gate)
        for (int split = 0; split <= 1; ++split) {
            GenericLoop d = push_move(X, c, 0, split, gate, PushDirection::Insert);
            validate_loop(X, d);
            CHECK(d.turns.size() == 3);
            CHECK(loop_to_class(X, d) == cls);
            // the inserted trivial turn comes straight back out
            GenericLoop e = push_move(X, d, 1, 0, 0, PushDirection::Remove);
            CHECK(loop_to_class(X, e) == cls);
        }
    // removal needs matching entry and exit gates
    CHECK_THROWS_AS(push_move(X, c, 0, 0, 0, PushDirection::Remove),
                    std::invalid_argument);
    GenericLoop s = GenericLoop::make_singular(CyclicWord(parse_word(alph, "y1")));
    CHECK_THROWS_AS(push_move(X, s, 0, 0, 0, PushDirection::Remove),
                    std::invalid_argument);
}

TEST_CASE("turn rotation preserves the class") {
    GenericLoop c = GenericLoop::make_turns(
        {mk(1, {1, 4}, 2, {1, 4}, "y1"), mk(2, {1, 2}, 1, {1, 2})});
    CyclicWord cls = loop_to_class(X, c);
    for (int s = 0; s < 4; ++s) CHECK(loop_to_class(X, rotate_turns(c, s)) == cls);
}

TEST_CASE("admissible pairs separate crossings per gate") {
    GenericLoop a = GenericLoop::make_turns({mk(1, {1, 2}, 2, {1, 2}, "y1")});
    GenericLoop b = GenericLoop::make_turns(
        {mk(1, {1, 4}, 2, {1, 4}), mk(2, {3, 4}, 1, {3, 4})});
    auto [a2, b2] = make_admissible_pair(X, a, b);
    CHECK(loop_to_class(X, a2) == loop_to_class(X, a));
    CHECK(loop_to_class(X, b2) == loop_to_class(X, b));
    for (int k = 1; k <= X.gates; ++k) {
        for (auto& p : crossings_on_gate(a2, k)) CHECK(p.pos < Rat(1, 2));
        for (auto& p : crossings_on_gate(b2, k)) CHECK(p.pos > Rat(1, 2));
    }
}

TEST_CASE("chord intersections by interleaving") {
    GenericLoop a = GenericLoop::make_turns({mk(1, {1, 4}, 2, {1, 4})});
    GenericLoop inter = GenericLoop::make_turns({mk(1, {1, 2}, 2, {1, 2}, "y1")});
    auto xs = disk_intersections(X, a, inter);
    REQUIRE(xs.size() == 1);
    CHECK(xs[0].a_turn == 0);
    CHECK(xs[0].b_turn == 0);
    CHECK(xs[0].sign == 1);
    // swapping the roles flips the sign
    auto ys = disk_intersections(X, inter, a);
    REQUIRE(ys.size() == 1);
    CHECK(ys[0].sign == -1);
    // nested chords on the same gate pair do not meet
    GenericLoop nested = GenericLoop::make_turns({mk(1, {1, 8}, 1, {1, 2}, "y1")});
    GenericLoop inner = GenericLoop::make_turns({mk(1, {1, 4}, 1, {1, 3})});
    CHECK(disk_intersections(X, nested, inner).empty());
    GenericLoop straddle = GenericLoop::make_turns({mk(1, {1, 4}, 1, {3, 4})});
    CHECK(disk_intersections(X, nested, straddle).size() == 1);
    // coincident endpoints are rejected
    CHECK_THROWS_AS(disk_intersections(X, a, a), std::invalid_argument);
}

TEST_CASE("concat multiplies based words") {
    BasedGenericLoop a{parse_word(alph, "y1"), {mk(1, {1, 4}, 2, {1, 4}, "y1")}};
    BasedGenericLoop b{parse_word(alph, "y1^-1"), {mk(2, {1, 2}, 1, {1, 2})}};
    BasedGenericLoop ab = concat(X, a, b);
    CHECK(based_word(X, ab) == based_word(X, a) * based_word(X, b));
    validate_loop(X, forget_basepoint(X, ab));
}

TEST_CASE("random loops are deterministic and valid") {
    LoopBounds bounds;
    for (uint64_t seed : {1ull, 2ull, 99ull}) {
        GenericLoop a = random_loop(X, bounds, seed);
        GenericLoop b = random_loop(X, bounds, seed);
        validate_loop(X, a);
        CHECK(loop_to_class(X, a) == loop_to_class(X, b));
        BasedGenericLoop c = random_based_loop(X, bounds, seed);
        BasedGenericLoop d = random_based_loop(X, bounds, seed);
        CHECK(based_word(X, c) == based_word(X, d));
    }
}
