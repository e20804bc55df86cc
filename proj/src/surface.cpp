#include "qps/surface.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

namespace qps {

namespace {

Word turn_chord(const QuasiSurface& X, const Turn& t) {
    return X.gate_word(t.in_gate).inverse() * X.gate_word(t.out_gate);
}

Word turn_factor(const QuasiSurface& X, const Turn& t) {
    return turn_chord(X, t) * t.passage;
}

void check_y_word(const Alphabet& alph, const Word& w, const char* where) {
    for (int s : w.letters())
        if (!alph.is_y(std::abs(s)))
            throw std::invalid_argument(std::string(where) +
                                        ": passage word must use y-letters only");
}

// Boundary point in the cyclic (gate, pos) order, counterclockwise.
using BoundaryKey = std::pair<int, Rat>;

bool in_ccw_arc(const BoundaryKey& from, const BoundaryKey& p,
                const BoundaryKey& to) {
    if (from < to) return from < p && p < to;
    return p > from || p < to;
}

template <typename LoopT>
std::vector<ChordIntersection> chord_intersections(const LoopT& a,
                                                   const GenericLoop& b) {
    std::vector<ChordIntersection> out;
    if (b.is_singular) return out;
    for (size_t i = 0; i < a.turns.size(); ++i) {
        BoundaryKey x1{a.turns[i].in_gate, a.turns[i].in_pos};
        BoundaryKey x2{a.turns[i].out_gate, a.turns[i].out_pos};
        for (size_t j = 0; j < b.turns.size(); ++j) {
            BoundaryKey y1{b.turns[j].in_gate, b.turns[j].in_pos};
            BoundaryKey y2{b.turns[j].out_gate, b.turns[j].out_pos};
            if (x1 == y1 || x1 == y2 || x2 == y1 || x2 == y2)
                throw std::invalid_argument(
                    "disk_intersections: coincident crossing positions");
            bool e1 = in_ccw_arc(x1, y1, x2);
            bool e2 = in_ccw_arc(x1, y2, x2);
            if (e1 != e2)
                out.push_back({static_cast<int>(i), static_cast<int>(j),
                               e1 ? 1 : -1});
        }
    }
    return out;
}

template <typename LoopT>
std::vector<GateCrossing> gate_crossings(const LoopT& a, int k) {
    std::vector<GateCrossing> out;
    for (size_t i = 0; i < a.turns.size(); ++i) {
        if (a.turns[i].in_gate == k)
            out.push_back({static_cast<int>(i), true, a.turns[i].in_pos});
        if (a.turns[i].out_gate == k)
            out.push_back({static_cast<int>(i), false, a.turns[i].out_pos});
    }
    return out;
}

// Reassigns positions on every gate into (lo, hi), preserving the loop's own
// per-gate crossing order.
template <typename LoopT>
void reposition(const QuasiSurface& X, LoopT& a, const Rat& lo, const Rat& hi) {
    for (int k = 1; k <= X.gates; ++k) {
        std::vector<Rat*> slots;
        for (auto& t : a.turns) {
            if (t.in_gate == k) slots.push_back(&t.in_pos);
            if (t.out_gate == k) slots.push_back(&t.out_pos);
        }
        std::stable_sort(slots.begin(), slots.end(),
                         [](const Rat* x, const Rat* y) { return *x < *y; });
        Rat step = (hi - lo) / Rat(static_cast<long>(slots.size()) + 1);
        Rat pos = lo;
        for (Rat* s : slots) {
            pos += step;
            *s = pos;
        }
    }
}

// Fresh in-order positions: j/(n+1) per gate, in turn order.
template <typename LoopT>
void assign_positions_in_turn_order(const QuasiSurface& X, LoopT& a) {
    for (int k = 1; k <= X.gates; ++k) {
        std::vector<Rat*> slots;
        for (auto& t : a.turns) {
            if (t.in_gate == k) slots.push_back(&t.in_pos);
            if (t.out_gate == k) slots.push_back(&t.out_pos);
        }
        long n = static_cast<long>(slots.size());
        for (long j = 0; j < n; ++j) *slots[j] = Rat(j + 1, n + 1);
    }
}

Word random_y_word(const Alphabet& alph, int max_len, std::mt19937_64& rng) {
    if (alph.y_count == 0 || max_len <= 0) return {};
    std::uniform_int_distribution<int> len_d(0, max_len);
    std::uniform_int_distribution<int> idx_d(1, alph.y_count);
    std::uniform_int_distribution<int> sign_d(0, 1);
    std::vector<int> raw;
    int len = len_d(rng);
    for (int i = 0; i < len; ++i)
        raw.push_back((sign_d(rng) ? 1 : -1) * idx_d(rng));
    return Word::reduce(raw);
}

template <typename LoopT>
void assign_random_positions(const QuasiSurface& X, LoopT& a,
                             std::mt19937_64& rng) {
    std::uniform_int_distribution<long> pos_d(1, 1000);
    for (int k = 1; k <= X.gates; ++k) {
        std::vector<Rat*> slots;
        for (auto& t : a.turns) {
            if (t.in_gate == k) slots.push_back(&t.in_pos);
            if (t.out_gate == k) slots.push_back(&t.out_pos);
        }
        std::set<long> used;
        for (Rat* s : slots) {
            long v = pos_d(rng);
            while (used.count(v)) v = pos_d(rng);
            used.insert(v);
            *s = Rat(v, 1001);
        }
    }
}

}  // namespace

Word QuasiSurface::gate_word(int k) const {
    if (!valid_gate(k)) throw std::invalid_argument("gate id out of range");
    if (k == 1) return {};
    return single_letter(alphabet().gate_letter(k));
}

GenericLoop GenericLoop::make_singular(const CyclicWord& c) {
    GenericLoop a;
    a.is_singular = true;
    a.singular = c;
    return a;
}

GenericLoop GenericLoop::make_turns(std::vector<Turn> ts) {
    if (ts.empty())
        throw std::invalid_argument("alternating loop needs at least one turn");
    GenericLoop a;
    a.is_singular = false;
    a.turns = std::move(ts);
    return a;
}

void validate_loop(const QuasiSurface& X, const GenericLoop& a) {
    Alphabet alph = X.alphabet();
    if (a.is_singular) {
        check_y_word(alph, a.singular.rep(), "singular loop");
        return;
    }
    if (a.turns.empty())
        throw std::invalid_argument("alternating loop needs at least one turn");
    for (auto& t : a.turns) {
        if (!X.valid_gate(t.in_gate) || !X.valid_gate(t.out_gate))
            throw std::invalid_argument("gate id out of range");
        if (!(t.in_pos > 0 && t.in_pos < 1 && t.out_pos > 0 && t.out_pos < 1))
            throw std::invalid_argument("crossing position must lie in (0,1)");
        check_y_word(alph, t.passage, "turn");
    }
    for (int k = 1; k <= X.gates; ++k) {
        auto cs = gate_crossings(a, k);
        std::set<Rat> seen;
        for (auto& c : cs)
            if (!seen.insert(c.pos).second)
                throw std::invalid_argument(
                    "coincident crossing positions on one gate");
    }
}

CyclicWord loop_to_class(const QuasiSurface& X, const GenericLoop& a) {
    if (a.is_singular) return a.singular;
    Word w;
    for (auto& t : a.turns) w = w * turn_factor(X, t);
    return CyclicWord(w);
}

Word based_word(const QuasiSurface& X, const BasedGenericLoop& a) {
    Word w = a.head;
    for (auto& t : a.turns) w = w * turn_factor(X, t);
    return w;
}

GenericLoop class_to_loop(const QuasiSurface& X, const CyclicWord& c) {
    Alphabet alph = X.alphabet();
    const auto& ls = c.rep().letters();
    bool has_gate = false;
    for (int s : ls)
        if (!alph.is_y(std::abs(s))) has_gate = true;
    if (!has_gate) return GenericLoop::make_singular(c);

    // Walk the letters, building one turn per gate letter and attaching
    // y-runs to the passage of the preceding turn (wrapping to the last one).
    std::vector<Turn> turns;
    std::vector<int> pending;  // y-letters before the first gate letter
    std::vector<std::vector<int>> passages;
    for (int s : ls) {
        int idx = std::abs(s);
        if (alph.is_y(idx)) {
            if (turns.empty())
                pending.push_back(s);
            else
                passages.back().push_back(s);
            continue;
        }
        int k = alph.gate_of(idx);
        Turn t;
        if (s > 0) {
            t.in_gate = 1;
            t.out_gate = k;
        } else {
            t.in_gate = k;
            t.out_gate = 1;
        }
        turns.push_back(t);
        passages.emplace_back();
    }
    // leading y-run wraps cyclically onto the last passage
    passages.back().insert(passages.back().end(), pending.begin(), pending.end());
    for (size_t i = 0; i < turns.size(); ++i)
        turns[i].passage = Word::reduce(passages[i]);
    GenericLoop a = GenericLoop::make_turns(std::move(turns));
    assign_positions_in_turn_order(X, a);
    return a;
}

GenericLoop forget_basepoint(const QuasiSurface& X, const BasedGenericLoop& a) {
    if (a.turns.empty())
        return GenericLoop::make_singular(CyclicWord(a.head));
    std::vector<Turn> turns = a.turns;
    turns.back().passage = turns.back().passage * a.head;
    return GenericLoop::make_turns(std::move(turns));
}

std::vector<GateCrossing> crossings_on_gate(const GenericLoop& a, int k) {
    if (a.is_singular) return {};
    return gate_crossings(a, k);
}

std::vector<GateCrossing> crossings_on_gate(const BasedGenericLoop& a, int k) {
    return gate_crossings(a, k);
}

Word rotation_at(const QuasiSurface& X, const GenericLoop& a,
                 const GateCrossing& p) {
    size_t n = a.turns.size();
    size_t i = static_cast<size_t>(p.turn);
    Word w;
    if (p.entry) {
        for (size_t j = 0; j < n; ++j) w = w * turn_factor(X, a.turns[(i + j) % n]);
    } else {
        w = a.turns[i].passage;
        for (size_t j = 1; j < n; ++j) w = w * turn_factor(X, a.turns[(i + j) % n]);
        w = w * turn_chord(X, a.turns[i]);
    }
    return w;
}

Word based_prefix(const QuasiSurface& X, const BasedGenericLoop& a,
                  const GateCrossing& p) {
    Word w = a.head;
    for (int j = 0; j < p.turn; ++j) w = w * turn_factor(X, a.turns[j]);
    if (!p.entry) w = w * turn_chord(X, a.turns[p.turn]);
    return w;
}

std::pair<GenericLoop, GenericLoop> make_admissible_pair(const QuasiSurface& X,
                                                         GenericLoop a,
                                                         GenericLoop b) {
    if (!a.is_singular) reposition(X, a, Rat(0), Rat(1, 2));
    if (!b.is_singular) reposition(X, b, Rat(1, 2), Rat(1));
    return {std::move(a), std::move(b)};
}

std::pair<BasedGenericLoop, GenericLoop> make_admissible_pair(
    const QuasiSurface& X, BasedGenericLoop a, GenericLoop b) {
    reposition(X, a, Rat(0), Rat(1, 2));
    if (!b.is_singular) reposition(X, b, Rat(1, 2), Rat(1));
    return {std::move(a), std::move(b)};
}

std::vector<ChordIntersection> disk_intersections(const QuasiSurface& X,
                                                  const GenericLoop& a,
                                                  const GenericLoop& b) {
    (void)X;
    if (a.is_singular) return {};
    return chord_intersections(a, b);
}

std::vector<ChordIntersection> disk_intersections(const QuasiSurface& X,
                                                  const BasedGenericLoop& a,
                                                  const GenericLoop& b) {
    (void)X;
    return chord_intersections(a, b);
}

GenericLoop push_move(const QuasiSurface& X, const GenericLoop& a, int turn_index,
                      int split, int gate, PushDirection dir) {
    if (dir == PushDirection::Insert) {
        if (!X.valid_gate(gate)) throw std::invalid_argument("gate id out of range");
        // fresh positions above everything already on the gate
        Rat maxpos(0);
        if (!a.is_singular)
            for (auto& c : crossings_on_gate(a, gate))
                if (c.pos > maxpos) maxpos = c.pos;
        Turn fresh;
        fresh.in_gate = gate;
        fresh.out_gate = gate;
        fresh.in_pos = (maxpos + 1) / 2;
        fresh.out_pos = (fresh.in_pos + 1) / 2;

        if (a.is_singular) {
            const auto& ls = a.singular.rep().letters();
            int s = std::clamp<int>(split, 0, static_cast<int>(ls.size()));
            std::vector<int> tail(ls.begin() + s, ls.end());
            tail.insert(tail.end(), ls.begin(), ls.begin() + s);
            fresh.passage = Word::reduce(tail);
            return GenericLoop::make_turns({fresh});
        }
        if (turn_index < 0 || turn_index >= static_cast<int>(a.turns.size()))
            throw std::invalid_argument("turn index out of range");
        GenericLoop out = a;
        const auto& ls = out.turns[turn_index].passage.letters();
        int s = std::clamp<int>(split, 0, static_cast<int>(ls.size()));
        Word head = Word::reduce({ls.begin(), ls.begin() + s});
        Word tail = Word::reduce({ls.begin() + s, ls.end()});
        out.turns[turn_index].passage = head;
        fresh.passage = tail;
        out.turns.insert(out.turns.begin() + turn_index + 1, fresh);
        return out;
    }

    // Remove
    if (a.is_singular)
        throw std::invalid_argument("cannot remove a turn from a singular loop");
    if (turn_index < 0 || turn_index >= static_cast<int>(a.turns.size()))
        throw std::invalid_argument("turn index out of range");
    const Turn& victim = a.turns[turn_index];
    if (victim.in_gate != victim.out_gate)
        throw std::invalid_argument(
            "push_move removal needs matching entry/exit gates");
    if (a.turns.size() == 1)
        return GenericLoop::make_singular(CyclicWord(victim.passage));
    GenericLoop out = a;
    size_t prev = (turn_index + out.turns.size() - 1) % out.turns.size();
    out.turns[prev].passage = out.turns[prev].passage * victim.passage;
    out.turns.erase(out.turns.begin() + turn_index);
    return out;
}

GenericLoop rotate_turns(const GenericLoop& a, int shift) {
    if (a.is_singular || a.turns.empty()) return a;
    GenericLoop out = a;
    int n = static_cast<int>(out.turns.size());
    int s = ((shift % n) + n) % n;
    std::rotate(out.turns.begin(), out.turns.begin() + s, out.turns.end());
    return out;
}

GenericLoop random_loop(const QuasiSurface& X, const LoopBounds& bounds,
                        uint64_t seed) {
    std::mt19937_64 rng(seed);
    Alphabet alph = X.alphabet();
    std::uniform_int_distribution<int> turns_d(0, std::max(0, bounds.max_turns));
    int nturns = turns_d(rng);
    if (nturns == 0)
        return GenericLoop::make_singular(
            CyclicWord(random_y_word(alph, bounds.max_ylen, rng)));
    std::uniform_int_distribution<int> gate_d(1, X.gates);
    std::vector<Turn> turns;
    for (int i = 0; i < nturns; ++i) {
        Turn t;
        t.in_gate = gate_d(rng);
        t.out_gate = gate_d(rng);
        t.passage = random_y_word(alph, bounds.max_ylen, rng);
        turns.push_back(t);
    }
    GenericLoop a = GenericLoop::make_turns(std::move(turns));
    assign_random_positions(X, a, rng);
    return a;
}

BasedGenericLoop random_based_loop(const QuasiSurface& X, const LoopBounds& bounds,
                                   uint64_t seed) {
    std::mt19937_64 rng(seed ^ 0x5bd1e995u);
    Alphabet alph = X.alphabet();
    std::uniform_int_distribution<int> turns_d(0, std::max(0, bounds.max_turns));
    BasedGenericLoop a;
    a.head = random_y_word(alph, bounds.max_ylen, rng);
    int nturns = turns_d(rng);
    std::uniform_int_distribution<int> gate_d(1, X.gates);
    for (int i = 0; i < nturns; ++i) {
        Turn t;
        t.in_gate = gate_d(rng);
        t.out_gate = gate_d(rng);
        t.passage = random_y_word(alph, bounds.max_ylen, rng);
        a.turns.push_back(t);
    }
    assign_random_positions(X, a, rng);
    return a;
}

BasedGenericLoop concat(const QuasiSurface& X, const BasedGenericLoop& a,
                        const BasedGenericLoop& b) {
    BasedGenericLoop out;
    if (a.turns.empty()) {
        out.head = a.head * b.head;
        out.turns = b.turns;
    } else {
        out.head = a.head;
        out.turns = a.turns;
        out.turns.back().passage = out.turns.back().passage * b.head;
        out.turns.insert(out.turns.end(), b.turns.begin(), b.turns.end());
    }
    assign_positions_in_turn_order(X, out);
    return out;
}

}  // namespace qps
