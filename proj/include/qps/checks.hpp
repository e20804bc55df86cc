#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qps {

struct CheckResult {
    std::string name;
    int instances = 0;
    bool ok = true;
    std::string detail;  // first counterexample, when !ok
};

// Every check draws its own quasi-surfaces and loops from the seed and
// verifies an identity exactly; `n` is the number of randomized instances.
CheckResult check_skew(int n, uint64_t seed);
CheckResult check_cyclic(int n, uint64_t seed);
CheckResult check_mu1(int n, uint64_t seed);
CheckResult check_jacobi(int n, uint64_t seed);
CheckResult check_invariance(int n, uint64_t seed);
CheckResult check_gate_consistency(int n, uint64_t seed);
CheckResult check_derivation(int n, uint64_t seed);
CheckResult check_fox(int n, uint64_t seed);
CheckResult check_fox_gate_equiv(int n, uint64_t seed);
CheckResult check_trace_leibniz(int n, uint64_t seed);
CheckResult check_trace_jacobi(int n, uint64_t seed, int points_per_dim);
CheckResult check_trace_conjugation(int n, uint64_t seed);
CheckResult check_poisson_degeneration(int n, uint64_t seed);

// Suites exposed on the command line: skew, cyclic, jacobi, invariance,
// derivation, fox, fox-gate-equiv, trace, all.
std::vector<CheckResult> run_suite(const std::string& suite, int n, uint64_t seed);
bool known_suite(const std::string& suite);

}  // namespace qps
