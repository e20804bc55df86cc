#include "qps/words.hpp"

#include <sstream>
#include <stdexcept>

namespace qps {

std::string Alphabet::letter_name(int s) const {
    int idx = std::abs(s);
    std::string base = is_y(idx) ? "y" + std::to_string(idx)
                                 : "g" + std::to_string(gate_of(idx));
    if (s < 0) base += "^-1";
    return base;
}

int Alphabet::parse_letter(const std::string& token) const {
    std::string body = token;
    int sign = 1;
    if (auto pos = body.find('^'); pos != std::string::npos) {
        if (body.substr(pos) != "^-1")
            throw std::invalid_argument("bad exponent in letter: " + token);
        sign = -1;
        body = body.substr(0, pos);
    }
    if (body.size() < 2 || (body[0] != 'y' && body[0] != 'g'))
        throw std::invalid_argument("unknown letter: " + token);
    int num = 0;
    for (size_t i = 1; i < body.size(); ++i) {
        if (!isdigit(static_cast<unsigned char>(body[i])))
            throw std::invalid_argument("unknown letter: " + token);
        num = num * 10 + (body[i] - '0');
    }
    int idx;
    if (body[0] == 'y') {
        if (num < 1 || num > y_count)
            throw std::invalid_argument("y-generator out of range: " + token);
        idx = num;
    } else {
        if (num < 2 || num > gate_count)
            throw std::invalid_argument("gate letter out of range: " + token);
        idx = gate_letter(num);
    }
    return sign * idx;
}

Word Word::reduce(const std::vector<int>& raw) {
    Word w;
    for (int s : raw) {
        if (s == 0) throw std::invalid_argument("zero letter id");
        if (!w.ls_.empty() && w.ls_.back() == -s)
            w.ls_.pop_back();
        else
            w.ls_.push_back(s);
    }
    return w;
}

Word Word::operator*(const Word& other) const {
    std::vector<int> raw = ls_;
    raw.insert(raw.end(), other.ls_.begin(), other.ls_.end());
    return reduce(raw);
}

Word Word::inverse() const {
    Word w;
    w.ls_.reserve(ls_.size());
    for (auto it = ls_.rbegin(); it != ls_.rend(); ++it) w.ls_.push_back(-*it);
    return w;
}

bool Word::operator<(const Word& o) const {
    size_t n = std::min(ls_.size(), o.ls_.size());
    for (size_t i = 0; i < n; ++i) {
        int a = letter_key(ls_[i]), b = letter_key(o.ls_[i]);
        if (a != b) return a < b;
    }
    return ls_.size() < o.ls_.size();
}

CyclicWord::CyclicWord(const Word& w) {
    // cyclic reduction: strip mutually inverse first/last letters
    std::vector<int> v = w.letters();
    size_t lo = 0, hi = v.size();
    while (hi - lo >= 2 && v[lo] == -v[hi - 1]) {
        ++lo;
        --hi;
    }
    std::vector<int> core(v.begin() + lo, v.begin() + hi);
    // least rotation
    size_t n = core.size();
    if (n == 0) return;
    size_t best = 0;
    for (size_t r = 1; r < n; ++r) {
        for (size_t i = 0; i < n; ++i) {
            int a = letter_key(core[(r + i) % n]);
            int b = letter_key(core[(best + i) % n]);
            if (a != b) {
                if (a < b) best = r;
                break;
            }
        }
    }
    std::vector<int> rot;
    rot.reserve(n);
    for (size_t i = 0; i < n; ++i) rot.push_back(core[(best + i) % n]);
    rep_ = Word::reduce(rot);
}

std::string word_str(const Alphabet& alph, const Word& w) {
    if (w.empty()) return "1";
    std::string out;
    for (int s : w.letters()) {
        if (!out.empty()) out += ' ';
        out += alph.letter_name(s);
    }
    return out;
}

std::string class_str(const Alphabet& alph, const CyclicWord& c) {
    return word_str(alph, c.rep());
}

Word parse_word(const Alphabet& alph, const std::string& text) {
    std::istringstream in(text);
    std::vector<int> raw;
    std::string tok;
    while (in >> tok) {
        if (tok == "1") continue;
        raw.push_back(alph.parse_letter(tok));
    }
    return Word::reduce(raw);
}

}  // namespace qps
