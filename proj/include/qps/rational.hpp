#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace qps {

// All coefficients and gate positions are exact rationals.
using Rat = mpq_class;

inline std::string rat_str(const Rat& r) { return r.get_str(); }

// Accepts "p", "p/q" and plain decimals like "0.25".
inline Rat parse_rat(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational");
    auto dot = s.find('.');
    if (dot != std::string::npos) {
        std::string digits = s.substr(0, dot) + s.substr(dot + 1);
        std::string denom = "1" + std::string(s.size() - dot - 1, '0');
        Rat r;
        if (r.set_str(digits + "/" + denom, 10) != 0)
            throw std::invalid_argument("bad rational: " + s);
        r.canonicalize();
        return r;
    }
    Rat r;
    if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
    if (r.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
    r.canonicalize();
    return r;
}

}  // namespace qps
