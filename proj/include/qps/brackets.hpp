#pragma once

#include "qps/surface.hpp"

namespace qps {

// Gate m-bracket: sum over m-tuples of crossings with gate k of the signed
// class of the spliced rotations.
LoopCombination mu_gate(const QuasiSurface& X, int k,
                        const std::vector<GenericLoop>& loops);

// Total gate m-bracket: sum of mu_gate over all gates.
LoopCombination mu_total(const QuasiSurface& X,
                         const std::vector<GenericLoop>& loops);

struct Bracket2Parts {
    LoopCombination disk;
    LoopCombination gate;
    LoopCombination total() const { return disk + gate; }
};

// The 2-bracket: twice the signed disk-intersection terms minus the gate
// 2-bracket.  The pair is made admissible internally.
Bracket2Parts bracket2_parts(const QuasiSurface& X, const GenericLoop& a,
                             const GenericLoop& b);
LoopCombination bracket2(const QuasiSurface& X, const GenericLoop& a,
                         const GenericLoop& b);

// Based refinement of the gate bracket: values in the group algebra, with the
// first argument a based loop.  project() of the result is the corresponding
// row of mu_gate.
AlgebraElement mu_refined(const QuasiSurface& X, int k, const BasedGenericLoop& a1,
                          const std::vector<GenericLoop>& rest);

// The derivation witnessing that [-, <b>] is a weak derivation: based words
// with the rotation of b spliced in at each intersection or gate pairing.
AlgebraElement based_d(const QuasiSurface& X, const BasedGenericLoop& a,
                       const GenericLoop& b);

// Multilinear extensions; classes are resolved via class_to_loop.
LoopCombination bracket2_linear(const QuasiSurface& X, const LoopCombination& x,
                                const LoopCombination& y);
LoopCombination mu_linear(const QuasiSurface& X,
                          const std::vector<LoopCombination>& args);
LoopCombination mu_gate_linear(const QuasiSurface& X, int k,
                               const std::vector<LoopCombination>& args);

}  // namespace qps
