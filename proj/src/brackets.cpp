#include "qps/brackets.hpp"

#include <stdexcept>

namespace qps {

namespace {

struct SignedWord {
    int sign;
    Word word;
};

std::vector<SignedWord> gate_rotations(const QuasiSurface& X, const GenericLoop& a,
                                       int k) {
    std::vector<SignedWord> out;
    for (auto& c : crossings_on_gate(a, k))
        out.push_back({c.sign(), rotation_at(X, a, c)});
    return out;
}

// Iterates over the cartesian product of crossing tuples.
template <typename Fn>
void for_each_tuple(const std::vector<std::vector<SignedWord>>& slots, Fn fn) {
    for (auto& s : slots)
        if (s.empty()) return;
    std::vector<size_t> idx(slots.size(), 0);
    while (true) {
        fn(idx);
        size_t i = 0;
        while (i < idx.size()) {
            if (++idx[i] < slots[i].size()) break;
            idx[i] = 0;
            ++i;
        }
        if (i == idx.size()) break;
    }
}

}  // namespace

LoopCombination mu_gate(const QuasiSurface& X, int k,
                        const std::vector<GenericLoop>& loops) {
    if (!X.valid_gate(k)) throw std::invalid_argument("gate id out of range");
    if (loops.empty()) throw std::invalid_argument("mu_gate needs m >= 1 loops");
    std::vector<std::vector<SignedWord>> slots;
    for (auto& a : loops) slots.push_back(gate_rotations(X, a, k));
    LoopCombination out;
    for_each_tuple(slots, [&](const std::vector<size_t>& idx) {
        int sign = 1;
        Word w;
        for (size_t i = 0; i < idx.size(); ++i) {
            const SignedWord& sw = slots[i][idx[i]];
            sign *= sw.sign;
            w = w * sw.word;
        }
        out.add_term(CyclicWord(w), Rat(sign));
    });
    return out;
}

LoopCombination mu_total(const QuasiSurface& X,
                         const std::vector<GenericLoop>& loops) {
    LoopCombination out;
    for (int k = 1; k <= X.gates; ++k) out += mu_gate(X, k, loops);
    return out;
}

Bracket2Parts bracket2_parts(const QuasiSurface& X, const GenericLoop& a_in,
                             const GenericLoop& b_in) {
    auto [a, b] = make_admissible_pair(X, a_in, b_in);
    Bracket2Parts parts;
    for (auto& r : disk_intersections(X, a, b)) {
        Word wa = rotation_at(X, a, {r.a_turn, true, a.turns[r.a_turn].in_pos});
        Word wb = rotation_at(X, b, {r.b_turn, true, b.turns[r.b_turn].in_pos});
        Word conj = X.gate_word(a.turns[r.a_turn].in_gate).inverse() *
                    X.gate_word(b.turns[r.b_turn].in_gate);
        parts.disk.add_term(CyclicWord(wa * conj * wb * conj.inverse()),
                            Rat(2 * r.sign));
    }
    parts.gate = -mu_total(X, {a, b});
    return parts;
}

LoopCombination bracket2(const QuasiSurface& X, const GenericLoop& a,
                         const GenericLoop& b) {
    return bracket2_parts(X, a, b).total();
}

AlgebraElement mu_refined(const QuasiSurface& X, int k, const BasedGenericLoop& a1,
                          const std::vector<GenericLoop>& rest) {
    if (!X.valid_gate(k)) throw std::invalid_argument("gate id out of range");
    Word whole = based_word(X, a1);
    std::vector<std::vector<SignedWord>> slots;
    for (auto& a : rest) slots.push_back(gate_rotations(X, a, k));
    AlgebraElement out;
    for (auto& p : crossings_on_gate(a1, k)) {
        Word pref = based_prefix(X, a1, p);
        Word suff = pref.inverse() * whole;
        for_each_tuple(slots, [&](const std::vector<size_t>& idx) {
            int sign = p.sign();
            Word mid;
            for (size_t i = 0; i < idx.size(); ++i) {
                const SignedWord& sw = slots[i][idx[i]];
                sign *= sw.sign;
                mid = mid * sw.word;
            }
            out.add_term(pref * mid * suff, Rat(sign));
        });
    }
    return out;
}

AlgebraElement based_d(const QuasiSurface& X, const BasedGenericLoop& a_in,
                       const GenericLoop& b_in) {
    auto [a, b] = make_admissible_pair(X, a_in, b_in);
    Word whole = based_word(X, a);
    AlgebraElement out;
    for (auto& r : disk_intersections(X, a, b)) {
        Word pref = based_prefix(X, a, {r.a_turn, true, a.turns[r.a_turn].in_pos});
        Word wb = rotation_at(X, b, {r.b_turn, true, b.turns[r.b_turn].in_pos});
        Word conj = X.gate_word(a.turns[r.a_turn].in_gate).inverse() *
                    X.gate_word(b.turns[r.b_turn].in_gate);
        out.add_term(pref * conj * wb * conj.inverse() * pref.inverse() * whole,
                     Rat(2 * r.sign));
    }
    for (int k = 1; k <= X.gates; ++k) {
        auto qs = gate_rotations(X, b, k);
        if (qs.empty()) continue;
        for (auto& p : crossings_on_gate(a, k)) {
            Word pref = based_prefix(X, a, p);
            for (auto& q : qs)
                out.add_term(pref * q.word * pref.inverse() * whole,
                             Rat(-p.sign() * q.sign));
        }
    }
    return out;
}

LoopCombination bracket2_linear(const QuasiSurface& X, const LoopCombination& x,
                                const LoopCombination& y) {
    LoopCombination out;
    for (auto& [cx, kx] : x.terms) {
        GenericLoop a = class_to_loop(X, cx);
        for (auto& [cy, ky] : y.terms)
            out += bracket2(X, a, class_to_loop(X, cy)) * (kx * ky);
    }
    return out;
}

namespace {

template <typename Eval>
LoopCombination multilinear(const QuasiSurface& X,
                            const std::vector<LoopCombination>& args, Eval eval) {
    LoopCombination out;
    std::vector<std::vector<std::pair<GenericLoop, Rat>>> slots;
    for (auto& arg : args) {
        slots.emplace_back();
        for (auto& [c, k] : arg.terms)
            slots.back().push_back({class_to_loop(X, c), k});
        if (slots.back().empty()) return out;
    }
    std::vector<size_t> idx(slots.size(), 0);
    while (true) {
        Rat coeff = 1;
        std::vector<GenericLoop> loops;
        for (size_t i = 0; i < idx.size(); ++i) {
            coeff *= slots[i][idx[i]].second;
            loops.push_back(slots[i][idx[i]].first);
        }
        out += eval(loops) * coeff;
        size_t i = 0;
        while (i < idx.size()) {
            if (++idx[i] < slots[i].size()) break;
            idx[i] = 0;
            ++i;
        }
        if (i == idx.size()) break;
    }
    return out;
}

}  // namespace

LoopCombination mu_linear(const QuasiSurface& X,
                          const std::vector<LoopCombination>& args) {
    return multilinear(X, args, [&](const std::vector<GenericLoop>& loops) {
        return mu_total(X, loops);
    });
}

LoopCombination mu_gate_linear(const QuasiSurface& X, int k,
                               const std::vector<LoopCombination>& args) {
    return multilinear(X, args, [&](const std::vector<GenericLoop>& loops) {
        return mu_gate(X, k, loops);
    });
}

}  // namespace qps
