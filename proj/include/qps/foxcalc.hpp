#pragma once

#include "qps/surface.hpp"

namespace qps {

// Fox derivative: determined by its values on the positive free generators;
// d(g^-1) = -g^-1 d(g) and d(xy) = d(x) + x d(y) on group elements.
struct FoxDerivative {
    std::map<int, AlgebraElement> on_generator;

    const AlgebraElement& value(int generator) const;
};

// Coordinate derivative d/d(gen): 1 on gen, 0 on the others.
FoxDerivative coordinate_derivative(const Alphabet& alph, int generator);

AlgebraElement fox_apply(const FoxDerivative& d, const Word& x);
AlgebraElement fox_apply(const FoxDerivative& d, const AlgebraElement& x);

// Delta map: word x with d(x) = sum_a c_a a goes to sum_a c_a a^-1 x a.
// Kills commutators, so it descends to conjugacy classes.
AlgebraElement delta_apply(const FoxDerivative& d, const Word& x);
AlgebraElement delta_apply(const FoxDerivative& d, const AlgebraElement& x);
AlgebraElement delta_apply(const FoxDerivative& d, const CyclicWord& c);

// Product brace from m Fox derivatives: the projected product of Delta values.
LoopCombination fox_brace(const std::vector<FoxDerivative>& ds,
                          const std::vector<CyclicWord>& classes);

// The derivation x -> sum_a (x/a) a F a^-1 x behind the brace property.
AlgebraElement fox_lifted_derivation(const FoxDerivative& d, const AlgebraElement& F,
                                     const Word& x);
AlgebraElement fox_lifted_derivation(const FoxDerivative& d, const AlgebraElement& F,
                                     const AlgebraElement& x);

// Signed sum of based prefixes of a loop over its crossings with a gate.
AlgebraElement gate_fox_derivative(const QuasiSurface& X, int k,
                                   const BasedGenericLoop& a);

// The same derivative as a FoxDerivative on the generators of pi.
FoxDerivative gate_derivative(const QuasiSurface& X, int k);

// Changing the gate reference path multiplies every value on the right by a
// fixed group element.
FoxDerivative shift_reference(const FoxDerivative& d, const Word& h);

}  // namespace qps
