#include "qps/foxcalc.hpp"

#include <stdexcept>

namespace qps {

const AlgebraElement& FoxDerivative::value(int generator) const {
    auto it = on_generator.find(generator);
    if (it == on_generator.end())
        throw std::invalid_argument("generator missing from Fox derivative");
    return it->second;
}

FoxDerivative coordinate_derivative(const Alphabet& alph, int generator) {
    FoxDerivative d;
    for (int i = 1; i <= alph.letter_count(); ++i)
        d.on_generator[i] =
            i == generator ? AlgebraElement::one() : AlgebraElement::zero();
    return d;
}

AlgebraElement fox_apply(const FoxDerivative& d, const Word& x) {
    AlgebraElement out;
    Word prefix;
    for (int s : x.letters()) {
        AlgebraElement dv =
            s > 0 ? d.value(s)
                  : (AlgebraElement::of(single_letter(s)) * d.value(-s)) * Rat(-1);
        out += AlgebraElement::of(prefix) * dv;
        prefix = prefix * single_letter(s);
    }
    return out;
}

AlgebraElement fox_apply(const FoxDerivative& d, const AlgebraElement& x) {
    AlgebraElement out;
    for (auto& [w, c] : x.terms) out += fox_apply(d, w) * c;
    return out;
}

AlgebraElement delta_apply(const FoxDerivative& d, const Word& x) {
    AlgebraElement out;
    for (auto& [a, c] : fox_apply(d, x).terms)
        out.add_term(a.inverse() * x * a, c);
    return out;
}

AlgebraElement delta_apply(const FoxDerivative& d, const AlgebraElement& x) {
    AlgebraElement out;
    for (auto& [w, c] : x.terms) out += delta_apply(d, w) * c;
    return out;
}

AlgebraElement delta_apply(const FoxDerivative& d, const CyclicWord& c) {
    return delta_apply(d, c.rep());
}

LoopCombination fox_brace(const std::vector<FoxDerivative>& ds,
                          const std::vector<CyclicWord>& classes) {
    if (ds.empty() || ds.size() != classes.size())
        throw std::invalid_argument("fox_brace: need m derivatives and m classes");
    AlgebraElement prod = AlgebraElement::one();
    for (size_t i = 0; i < ds.size(); ++i)
        prod = prod * delta_apply(ds[i], classes[i]);
    return project(prod);
}

AlgebraElement fox_lifted_derivation(const FoxDerivative& d, const AlgebraElement& F,
                                     const Word& x) {
    AlgebraElement out;
    AlgebraElement tail = AlgebraElement::of(x);
    for (auto& [a, c] : fox_apply(d, x).terms)
        out += AlgebraElement::of(a) * F * AlgebraElement::of(a.inverse()) * tail * c;
    return out;
}

AlgebraElement fox_lifted_derivation(const FoxDerivative& d, const AlgebraElement& F,
                                     const AlgebraElement& x) {
    AlgebraElement out;
    for (auto& [w, c] : x.terms) out += fox_lifted_derivation(d, F, w) * c;
    return out;
}

AlgebraElement gate_fox_derivative(const QuasiSurface& X, int k,
                                   const BasedGenericLoop& a) {
    if (!X.valid_gate(k)) throw std::invalid_argument("gate id out of range");
    AlgebraElement out;
    for (auto& p : crossings_on_gate(a, k))
        out.add_term(based_prefix(X, a, p), Rat(p.sign()));
    return out;
}

FoxDerivative gate_derivative(const QuasiSurface& X, int k) {
    if (!X.valid_gate(k)) throw std::invalid_argument("gate id out of range");
    Alphabet alph = X.alphabet();
    FoxDerivative d;
    for (int i = 1; i <= alph.y_count; ++i) d.on_generator[i] = {};
    for (int l = 2; l <= alph.gate_count; ++l) {
        AlgebraElement v;
        if (k == 1) v += AlgebraElement::one();
        if (k == l) v -= AlgebraElement::of(X.gate_word(l));
        d.on_generator[alph.gate_letter(l)] = v;
    }
    return d;
}

FoxDerivative shift_reference(const FoxDerivative& d, const Word& h) {
    FoxDerivative out;
    AlgebraElement he = AlgebraElement::of(h);
    for (auto& [g, v] : d.on_generator) out.on_generator[g] = v * he;
    return out;
}

}  // namespace qps
