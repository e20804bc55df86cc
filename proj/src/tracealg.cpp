#include "qps/tracealg.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

namespace qps {

TracePolynomial TracePolynomial::constant(const Rat& c) {
    TracePolynomial p;
    p.add_term({}, c);
    return p;
}

TracePolynomial TracePolynomial::symbol(const CyclicWord& c) {
    TracePolynomial p;
    p.add_term({c}, 1);
    return p;
}

void TracePolynomial::add_term(TraceMonomial m, const Rat& c) {
    if (c == 0) return;
    std::sort(m.begin(), m.end());
    auto it = terms.find(m);
    if (it == terms.end()) {
        terms.emplace(std::move(m), c);
    } else {
        it->second += c;
        if (it->second == 0) terms.erase(it);
    }
}

TracePolynomial& TracePolynomial::operator+=(const TracePolynomial& o) {
    for (auto& [m, c] : o.terms) add_term(m, c);
    return *this;
}

TracePolynomial& TracePolynomial::operator-=(const TracePolynomial& o) {
    for (auto& [m, c] : o.terms) add_term(m, -c);
    return *this;
}

TracePolynomial TracePolynomial::operator+(const TracePolynomial& o) const {
    TracePolynomial r = *this;
    r += o;
    return r;
}

TracePolynomial TracePolynomial::operator-(const TracePolynomial& o) const {
    TracePolynomial r = *this;
    r -= o;
    return r;
}

TracePolynomial TracePolynomial::operator*(const TracePolynomial& o) const {
    TracePolynomial r;
    for (auto& [m1, c1] : terms)
        for (auto& [m2, c2] : o.terms) {
            TraceMonomial m = m1;
            m.insert(m.end(), m2.begin(), m2.end());
            r.add_term(std::move(m), c1 * c2);
        }
    return r;
}

TracePolynomial TracePolynomial::operator*(const Rat& c) const {
    TracePolynomial r;
    if (c == 0) return r;
    for (auto& [m, k] : terms) r.terms.emplace(m, k * c);
    return r;
}

TracePolynomial TracePolynomial::partial(const CyclicWord& c) const {
    TracePolynomial r;
    for (auto& [m, coeff] : terms) {
        long mult = static_cast<long>(std::count(m.begin(), m.end(), c));
        if (mult == 0) continue;
        TraceMonomial reduced = m;
        reduced.erase(std::find(reduced.begin(), reduced.end(), c));
        r.add_term(std::move(reduced), coeff * mult);
    }
    return r;
}

std::vector<CyclicWord> TracePolynomial::symbols() const {
    std::set<CyclicWord> seen;
    for (auto& [m, c] : terms)
        for (auto& s : m) seen.insert(s);
    return {seen.begin(), seen.end()};
}

TracePolynomial trace_image(const LoopCombination& x) {
    TracePolynomial p;
    for (auto& [c, k] : x.terms) p.add_term({c}, k);
    return p;
}

TracePolynomial poly_brace_extend(const InducedBrace& br,
                                  const std::vector<TracePolynomial>& args) {
    if (static_cast<int>(args.size()) != br.arity)
        throw std::invalid_argument("brace arity mismatch");
    // F(a_1..a_m) = sum over symbol tuples of prod(partials) * base(tuple)
    TracePolynomial out;
    std::vector<std::vector<CyclicWord>> symbol_sets;
    for (auto& a : args) {
        symbol_sets.push_back(a.symbols());
        if (symbol_sets.back().empty()) return out;
    }
    std::vector<size_t> idx(args.size(), 0);
    while (true) {
        std::vector<CyclicWord> tuple;
        TracePolynomial factor = TracePolynomial::constant(1);
        bool nonzero = true;
        for (size_t i = 0; i < args.size(); ++i) {
            const CyclicWord& s = symbol_sets[i][idx[i]];
            tuple.push_back(s);
            TracePolynomial d = args[i].partial(s);
            if (d.is_zero()) {
                nonzero = false;
                break;
            }
            factor = factor * d;
        }
        if (nonzero) out += factor * br.base(tuple);
        size_t i = 0;
        while (i < idx.size()) {
            if (++idx[i] < symbol_sets[i].size()) break;
            idx[i] = 0;
            ++i;
        }
        if (i == idx.size()) break;
    }
    return out;
}

TracePolynomial induced_bracket(const InducedBrace& br,
                                const std::vector<TracePolynomial>& args) {
    return poly_brace_extend(br, args);
}

Mat mat_identity(int n) {
    Mat m(n, std::vector<Rat>(n, Rat(0)));
    for (int i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

Mat mat_mul(const Mat& a, const Mat& b) {
    int n = static_cast<int>(a.size());
    Mat r(n, std::vector<Rat>(n, Rat(0)));
    for (int i = 0; i < n; ++i)
        for (int l = 0; l < n; ++l) {
            if (a[i][l] == 0) continue;
            for (int j = 0; j < n; ++j) r[i][j] += a[i][l] * b[l][j];
        }
    return r;
}

Mat mat_inverse(const Mat& m) {
    int n = static_cast<int>(m.size());
    Mat a = m;
    Mat inv = mat_identity(n);
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r)
            if (a[r][col] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) throw std::invalid_argument("singular matrix");
        std::swap(a[pivot], a[col]);
        std::swap(inv[pivot], inv[col]);
        Rat p = a[col][col];
        for (int j = 0; j < n; ++j) {
            a[col][j] /= p;
            inv[col][j] /= p;
        }
        for (int r = 0; r < n; ++r) {
            if (r == col || a[r][col] == 0) continue;
            Rat f = a[r][col];
            for (int j = 0; j < n; ++j) {
                a[r][j] -= f * a[col][j];
                inv[r][j] -= f * inv[col][j];
            }
        }
    }
    return inv;
}

Mat RepresentationPoint::word_matrix(const Word& w) const {
    Mat r = mat_identity(n);
    for (int s : w.letters()) {
        const auto& table = s > 0 ? mats : invs;
        auto it = table.find(std::abs(s));
        if (it == table.end())
            throw std::invalid_argument("generator matrix missing");
        r = mat_mul(r, it->second);
    }
    return r;
}

Rat evaluate(const TracePolynomial& p, const RepresentationPoint& rho) {
    Rat out = 0;
    for (auto& [m, c] : p.terms) {
        Rat prod = c;
        for (auto& cls : m) {
            Mat w = rho.word_matrix(cls.rep());
            Rat tr = 0;
            for (int i = 0; i < rho.n; ++i) tr += w[i][i];
            prod *= tr;
        }
        out += prod;
    }
    return out;
}

Mat random_invertible(int n, uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> entry_d(-3, 3);
    std::uniform_int_distribution<int> pos_d(0, n - 1);
    Mat m = mat_identity(n);
    if (n == 1) {
        int v = entry_d(rng);
        while (v == 0) v = entry_d(rng);
        m[0][0] = Rat(v);
        return m;
    }
    for (int step = 0; step < 2 * n + 2; ++step) {
        int i = pos_d(rng), j = pos_d(rng);
        while (j == i) j = pos_d(rng);
        Mat e = mat_identity(n);
        e[i][j] = Rat(entry_d(rng));
        m = mat_mul(m, e);
    }
    return m;
}

RepresentationPoint random_representation(int n, const Alphabet& alph,
                                          uint64_t seed) {
    if (n < 1) throw std::invalid_argument("dimension must be >= 1");
    RepresentationPoint rho;
    rho.n = n;
    for (int g = 1; g <= alph.letter_count(); ++g) {
        Mat m = random_invertible(n, seed * 1000003u + static_cast<uint64_t>(g));
        rho.mats[g] = m;
        rho.invs[g] = mat_inverse(m);
    }
    return rho;
}

RepresentationPoint conjugate_representation(const RepresentationPoint& rho,
                                             const Mat& g) {
    if (static_cast<int>(g.size()) != rho.n)
        throw std::invalid_argument("conjugating matrix has wrong dimension");
    Mat ginv = mat_inverse(g);
    RepresentationPoint out;
    out.n = rho.n;
    for (auto& [k, m] : rho.mats) out.mats[k] = mat_mul(mat_mul(g, m), ginv);
    for (auto& [k, m] : rho.invs) out.invs[k] = mat_mul(mat_mul(g, m), ginv);
    return out;
}

std::string trace_poly_str(const Alphabet& alph, const TracePolynomial& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (auto& [m, c] : p.terms) {
        if (!out.empty()) out += " + ";
        out += rat_str(c);
        for (auto& s : m) out += "*T[" + class_str(alph, s) + "]";
    }
    return out;
}

TracePolynomial parse_trace_poly(const Alphabet& alph, const std::string& text) {
    TracePolynomial out;
    std::string term;
    std::vector<std::string> chunks;
    size_t start = 0;
    while (start <= text.size()) {
        size_t plus = text.find('+', start);
        if (plus == std::string::npos) {
            chunks.push_back(text.substr(start));
            break;
        }
        chunks.push_back(text.substr(start, plus - start));
        start = plus + 1;
    }
    for (auto& chunk : chunks) {
        auto b = chunk.find_first_not_of(" \t");
        if (b == std::string::npos) continue;
        auto e = chunk.find_last_not_of(" \t");
        term = chunk.substr(b, e - b + 1);
        if (term == "0") continue;
        Rat coeff = 1;
        TraceMonomial mono;
        size_t pos = 0;
        bool saw_coeff = false;
        while (pos < term.size()) {
            if (term[pos] == '*' || term[pos] == ' ') {
                ++pos;
                continue;
            }
            if (term.compare(pos, 2, "T[") == 0) {
                size_t close = term.find(']', pos);
                if (close == std::string::npos)
                    throw std::invalid_argument("unterminated T[...]: " + term);
                mono.push_back(
                    CyclicWord(parse_word(alph, term.substr(pos + 2, close - pos - 2))));
                pos = close + 1;
            } else {
                size_t end = term.find('*', pos);
                if (end == std::string::npos) end = term.size();
                if (saw_coeff)
                    throw std::invalid_argument("bad trace polynomial term: " + term);
                coeff = parse_rat(term.substr(pos, end - pos));
                saw_coeff = true;
                pos = end;
            }
        }
        out.add_term(std::move(mono), coeff);
    }
    return out;
}

}  // namespace qps
