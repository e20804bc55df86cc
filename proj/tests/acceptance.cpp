// Acceptance runner: one line per criterion, exact checks, fixed seeds.
#include <cstdio>
#include <vector>

#include "qps/checks.hpp"

namespace {

bool report(int number, const char* label,
            const std::vector<qps::CheckResult>& results) {
    bool ok = true;
    int instances = 0;
    std::string detail;
    for (auto& r : results) {
        instances += r.instances;
        if (!r.ok && detail.empty()) detail = r.name + ": " + r.detail;
        ok = ok && r.ok;
    }
    std::printf("%s  criterion %2d: %s (%d instances)\n", ok ? "pass" : "FAIL",
                number, label, instances);
    if (!ok) std::printf("      first counterexample: %s\n", detail.c_str());
    return ok;
}

}  // namespace

int main() {
    using namespace qps;
    bool ok = true;
    ok &= report(1, "skew-symmetry of the 2-bracket", {check_skew(200, 101)});
    ok &= report(2, "cyclic symmetry of mu^m, m in {2,3}", {check_cyclic(100, 102)});
    ok &= report(3, "total mu^1 vanishes", {check_mu1(100, 103)});
    ok &= report(4, "quasi-Jacobi identity", {check_jacobi(50, 104)});
    ok &= report(5, "homotopy invariance", {check_invariance(100, 105)});
    ok &= report(6, "brace witnesses (Leibniz refinements)",
                 {check_derivation(100, 106)});
    ok &= report(7, "Fox derivative laws", {check_fox(200, 107)});
    ok &= report(8, "Fox brace equals the gate bracket",
                 {check_fox_gate_equiv(50, 108)});
    ok &= report(9, "trace algebra suite",
                 {check_trace_leibniz(20, 109), check_trace_jacobi(3, 109, 20),
                  check_trace_conjugation(20, 109)});
    ok &= report(10, "gate term of the 2-bracket equals -mu^2",
                 {check_gate_consistency(100, 110)});
    std::printf("%s\n", ok ? "ACCEPTANCE: all criteria pass"
                           : "ACCEPTANCE: FAILURES PRESENT");
    return ok ? 0 : 1;
}
