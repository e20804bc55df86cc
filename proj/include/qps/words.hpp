#pragma once

#include <compare>
#include <cstdlib>
#include <string>
#include <vector>

#include "qps/rational.hpp"

namespace qps {

// Letters of the free group pi = F(y_1..y_m, g_2..g_K).  A signed letter is
// +idx or -idx where idx = 1..m names y_idx and idx = m+1..m+K-1 names
// g_{idx-m+1}.  The gate letter g_1 is the identity and is never stored.
struct Alphabet {
    int y_count = 0;
    int gate_count = 1;

    int letter_count() const { return y_count + gate_count - 1; }
    bool valid_letter(int idx) const { return idx >= 1 && idx <= letter_count(); }
    bool is_y(int idx) const { return idx >= 1 && idx <= y_count; }

    // k in 2..K
    int gate_letter(int k) const { return y_count + k - 1; }
    // inverse of gate_letter
    int gate_of(int idx) const { return idx - y_count + 1; }

    std::string letter_name(int signed_letter) const;
    // Parses a token like "y2", "g3^-1"; throws std::invalid_argument.
    int parse_letter(const std::string& token) const;
};

// Total order on signed letters: y1 < y1^-1 < y2 < ... < g2 < g2^-1 < ...
inline int letter_key(int s) { return 2 * std::abs(s) + (s < 0 ? 1 : 0); }

// A freely reduced word in the signed letters; the empty word is the identity.
class Word {
  public:
    Word() = default;
    // Freely reduces an arbitrary letter sequence.
    static Word reduce(const std::vector<int>& raw);

    const std::vector<int>& letters() const { return ls_; }
    bool empty() const { return ls_.empty(); }
    size_t size() const { return ls_.size(); }

    Word operator*(const Word& other) const;
    Word inverse() const;
    Word conjugated_by(const Word& u) const { return u * (*this) * u.inverse(); }

    bool operator==(const Word& o) const { return ls_ == o.ls_; }
    bool operator<(const Word& o) const;

  private:
    std::vector<int> ls_;
};

inline Word single_letter(int s) { return Word::reduce({s}); }

// A conjugacy class: cyclically reduced word stored in its lexicographically
// least rotation under letter_key order.
class CyclicWord {
  public:
    CyclicWord() = default;
    explicit CyclicWord(const Word& w);

    const Word& rep() const { return rep_; }
    bool trivial() const { return rep_.empty(); }

    bool operator==(const CyclicWord& o) const { return rep_ == o.rep_; }
    bool operator<(const CyclicWord& o) const { return rep_ < o.rep_; }

  private:
    Word rep_;
};

// Token serialization: "y1 y2^-1 g3"; the empty word renders as "1".
std::string word_str(const Alphabet& alph, const Word& w);
std::string class_str(const Alphabet& alph, const CyclicWord& c);
Word parse_word(const Alphabet& alph, const std::string& text);

}  // namespace qps
