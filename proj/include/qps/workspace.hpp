#pragma once

#include <iosfwd>

#include "qps/foxcalc.hpp"
#include "qps/surface.hpp"
#include "qps/tracealg.hpp"

namespace qps {

// Named objects over one quasi-surface, loaded from a .qs file.
struct Workspace {
    QuasiSurface surface;
    std::map<std::string, GenericLoop> loops;
    std::map<std::string, BasedGenericLoop> based;
    std::map<std::string, FoxDerivative> foxes;
    std::map<std::string, RepresentationPoint> reps;

    Alphabet alphabet() const { return surface.alphabet(); }

    const GenericLoop& loop(const std::string& name) const;
    const BasedGenericLoop& based_loop(const std::string& name) const;
    const FoxDerivative& fox(const std::string& name) const;
    const RepresentationPoint& rep(const std::string& name) const;
};

// Thrown on malformed workspace input (CLI exit code 3).
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
// Thrown on unresolved names (CLI exit code 2).
struct NameError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Workspace parse_workspace(std::istream& in);
Workspace parse_workspace_file(const std::string& path);

std::string loop_text(const QuasiSurface& X, const std::string& name,
                      const GenericLoop& a);
std::string based_text(const QuasiSurface& X, const std::string& name,
                       const BasedGenericLoop& a);
std::string fox_text(const Alphabet& alph, const std::string& name,
                     const FoxDerivative& d);
std::string rep_text(const Alphabet& alph, const std::string& name,
                     const RepresentationPoint& rho);
std::string workspace_text(const Workspace& ws);

}  // namespace qps
