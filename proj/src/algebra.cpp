#include "qps/algebra.hpp"

#include <sstream>

namespace qps {

AlgebraElement AlgebraElement::of(const Word& w, const Rat& c) {
    AlgebraElement x;
    x.add_term(w, c);
    return x;
}

void AlgebraElement::add_term(const Word& w, const Rat& c) {
    if (c == 0) return;
    auto it = terms.find(w);
    if (it == terms.end()) {
        terms.emplace(w, c);
    } else {
        it->second += c;
        if (it->second == 0) terms.erase(it);
    }
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
    for (auto& [w, c] : o.terms) add_term(w, c);
    return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& o) {
    for (auto& [w, c] : o.terms) add_term(w, -c);
    return *this;
}

AlgebraElement AlgebraElement::operator+(const AlgebraElement& o) const {
    AlgebraElement r = *this;
    r += o;
    return r;
}

AlgebraElement AlgebraElement::operator-(const AlgebraElement& o) const {
    AlgebraElement r = *this;
    r -= o;
    return r;
}

AlgebraElement AlgebraElement::operator*(const AlgebraElement& o) const {
    AlgebraElement r;
    for (auto& [u, cu] : terms)
        for (auto& [v, cv] : o.terms) r.add_term(u * v, cu * cv);
    return r;
}

AlgebraElement AlgebraElement::operator*(const Rat& c) const {
    AlgebraElement r;
    if (c == 0) return r;
    for (auto& [w, cw] : terms) r.terms.emplace(w, cw * c);
    return r;
}

LoopCombination LoopCombination::of(const CyclicWord& c, const Rat& coeff) {
    LoopCombination x;
    x.add_term(c, coeff);
    return x;
}

void LoopCombination::add_term(const CyclicWord& c, const Rat& coeff) {
    if (coeff == 0) return;
    auto it = terms.find(c);
    if (it == terms.end()) {
        terms.emplace(c, coeff);
    } else {
        it->second += coeff;
        if (it->second == 0) terms.erase(it);
    }
}

LoopCombination& LoopCombination::operator+=(const LoopCombination& o) {
    for (auto& [c, k] : o.terms) add_term(c, k);
    return *this;
}

LoopCombination& LoopCombination::operator-=(const LoopCombination& o) {
    for (auto& [c, k] : o.terms) add_term(c, -k);
    return *this;
}

LoopCombination LoopCombination::operator+(const LoopCombination& o) const {
    LoopCombination r = *this;
    r += o;
    return r;
}

LoopCombination LoopCombination::operator-(const LoopCombination& o) const {
    LoopCombination r = *this;
    r -= o;
    return r;
}

LoopCombination LoopCombination::operator*(const Rat& c) const {
    LoopCombination r;
    if (c == 0) return r;
    for (auto& [cls, k] : terms) r.terms.emplace(cls, k * c);
    return r;
}

LoopCombination project(const AlgebraElement& x) {
    LoopCombination r;
    for (auto& [w, c] : x.terms) r.add_term(CyclicWord(w), c);
    return r;
}

Rat aug(const AlgebraElement& x) {
    Rat r = 0;
    for (auto& [w, c] : x.terms) r += c;
    return r;
}

namespace {

template <typename Terms, typename Render>
std::string render_sum(const Terms& terms, Render render) {
    if (terms.empty()) return "0";
    std::string out;
    for (auto& [k, c] : terms) {
        if (!out.empty()) out += " + ";
        out += rat_str(c) + "*" + render(k);
    }
    return out;
}

}  // namespace

std::string element_str(const Alphabet& alph, const AlgebraElement& x) {
    return render_sum(x.terms, [&](const Word& w) { return word_str(alph, w); });
}

std::string combination_str(const Alphabet& alph, const LoopCombination& x) {
    return render_sum(x.terms,
                      [&](const CyclicWord& c) { return class_str(alph, c); });
}

AlgebraElement parse_element(const Alphabet& alph, const std::string& text) {
    // Split on top-level '+'; '-' only appears inside "^-1" or a coefficient.
    AlgebraElement out;
    std::string chunk;
    std::istringstream in(text);
    std::string piece;
    std::vector<std::string> chunks;
    while (std::getline(in, piece, '+')) chunks.push_back(piece);
    for (auto& part : chunks) {
        // trim
        auto b = part.find_first_not_of(" \t");
        if (b == std::string::npos) continue;
        auto e = part.find_last_not_of(" \t");
        std::string term = part.substr(b, e - b + 1);
        if (term == "0") continue;
        Rat coeff = 1;
        std::string wordpart = term;
        if (auto star = term.find('*'); star != std::string::npos) {
            coeff = parse_rat(term.substr(0, star));
            wordpart = term.substr(star + 1);
        }
        out.add_term(parse_word(alph, wordpart), coeff);
    }
    return out;
}

}  // namespace qps
