#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "qps/algebra.hpp"

namespace qps {

// Quasi-surface with an oriented disk core, K gates in counterclockwise order
// on the boundary circle, and a wedge of m circles as singular part.
struct QuasiSurface {
    int gates = 1;
    int ygens = 0;

    Alphabet alphabet() const { return Alphabet{ygens, gates}; }
    bool valid_gate(int k) const { return k >= 1 && k <= gates; }
    // Word of the gate letter g_k; g_1 is the identity.
    Word gate_word(int k) const;
};

// One passage of a loop through the disk: entry crossing, chord, exit
// crossing, then the singular-part word traversed after the exit.  Positions
// are exact rationals in (0,1) increasing along the boundary orientation.
struct Turn {
    int in_gate = 1;
    Rat in_pos;
    int out_gate = 1;
    Rat out_pos;
    Word passage;  // y-letters only
};

// Free-homotopy representative: a loop avoiding the disk entirely (singular)
// or a cyclic sequence of turns.
struct GenericLoop {
    bool is_singular = true;
    CyclicWord singular;       // used iff is_singular
    std::vector<Turn> turns;   // used iff !is_singular

    static GenericLoop make_singular(const CyclicWord& c);
    static GenericLoop make_turns(std::vector<Turn> ts);
};

// Loop based at the wedge point: initial y-word, then turns, each carrying the
// y-word that follows it.
struct BasedGenericLoop {
    Word head;
    std::vector<Turn> turns;
};

// Crossing of a loop with a fixed gate; entry crossings carry sign +1.
struct GateCrossing {
    int turn = 0;
    bool entry = true;
    Rat pos;
    int sign() const { return entry ? 1 : -1; }
};

struct ChordIntersection {
    int a_turn = 0;
    int b_turn = 0;
    int sign = 1;
};

enum class PushDirection { Insert, Remove };

struct LoopBounds {
    int max_turns = 4;
    int max_ylen = 3;
};

void validate_loop(const QuasiSurface& X, const GenericLoop& a);

CyclicWord loop_to_class(const QuasiSurface& X, const GenericLoop& a);
Word based_word(const QuasiSurface& X, const BasedGenericLoop& a);
GenericLoop class_to_loop(const QuasiSurface& X, const CyclicWord& c);

GenericLoop forget_basepoint(const QuasiSurface& X, const BasedGenericLoop& a);

// Crossings of the loop with gate k, in turn order.
std::vector<GateCrossing> crossings_on_gate(const GenericLoop& a, int k);
std::vector<GateCrossing> crossings_on_gate(const BasedGenericLoop& a, int k);

// Rebased word at a crossing: the cyclic rotation of the loop word starting at
// the factor g_{in}^-1 (entry) or at the passage word (exit).
Word rotation_at(const QuasiSurface& X, const GenericLoop& a, const GateCrossing& p);

// Based prefix of the loop up to a crossing, closed through the gate reference.
Word based_prefix(const QuasiSurface& X, const BasedGenericLoop& a, const GateCrossing& p);

// Repositions so that at every gate all crossings of the first loop strictly
// precede those of the second, preserving each loop's own per-gate order.
std::pair<GenericLoop, GenericLoop> make_admissible_pair(const QuasiSurface& X,
                                                         GenericLoop a,
                                                         GenericLoop b);
std::pair<BasedGenericLoop, GenericLoop> make_admissible_pair(
    const QuasiSurface& X, BasedGenericLoop a, GenericLoop b);

// Minimal-position intersections of the disk chords of an admissible pair.
// Sign +1 iff the counterclockwise boundary order is (a-entry, b-entry,
// a-exit, b-exit) for the two chords.
std::vector<ChordIntersection> disk_intersections(const QuasiSurface& X,
                                                  const GenericLoop& a,
                                                  const GenericLoop& b);
std::vector<ChordIntersection> disk_intersections(const QuasiSurface& X,
                                                  const BasedGenericLoop& a,
                                                  const GenericLoop& b);

// Homotopy move: insert a trivial turn through gate k between the prefix of
// length `split` of turn i's passage and the rest (Insert), or remove turn i
// whose entry and exit gates agree (Remove).  The class is unchanged.
GenericLoop push_move(const QuasiSurface& X, const GenericLoop& a, int turn_index,
                      int split, int gate, PushDirection dir);

GenericLoop rotate_turns(const GenericLoop& a, int shift);

GenericLoop random_loop(const QuasiSurface& X, const LoopBounds& bounds,
                        uint64_t seed);
BasedGenericLoop random_based_loop(const QuasiSurface& X, const LoopBounds& bounds,
                                   uint64_t seed);

// Concatenation of based loops; crossing positions are reassigned fresh.
BasedGenericLoop concat(const QuasiSurface& X, const BasedGenericLoop& a,
                        const BasedGenericLoop& b);

}  // namespace qps
