#include "qps/workspace.hpp"

#include <fstream>
#include <sstream>

namespace qps {

namespace {

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

// value of `key=` in a token like in=2@1/4 or y="w1 w2"
std::string expect_prefix(const std::string& tok, const std::string& key) {
    if (tok.compare(0, key.size(), key) != 0)
        throw ParseError("expected `" + key + "...`, got `" + tok + "`");
    return tok.substr(key.size());
}

std::string unquote(const std::string& s) {
    if (s.size() >= 2 && s.front() == '"' && s.back() == '"')
        return s.substr(1, s.size() - 2);
    return s;
}

std::pair<int, Rat> parse_gate_at(const QuasiSurface& X, const std::string& s) {
    auto at = s.find('@');
    if (at == std::string::npos) throw ParseError("expected GATE@POS: " + s);
    int gate;
    try {
        gate = std::stoi(s.substr(0, at));
    } catch (...) {
        throw ParseError("bad gate id: " + s);
    }
    if (!X.valid_gate(gate)) throw ParseError("gate id out of range: " + s);
    Rat pos;
    try {
        pos = parse_rat(s.substr(at + 1));
    } catch (std::exception& e) {
        throw ParseError(e.what());
    }
    if (!(pos > 0 && pos < 1))
        throw ParseError("crossing position must lie in (0,1): " + s);
    return {gate, pos};
}

// splits a line into tokens, keeping quoted segments intact
std::vector<std::string> tokenize(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    bool quoted = false;
    for (char c : line) {
        if (c == '"') {
            quoted = !quoted;
            cur += c;
            continue;
        }
        if (!quoted && (c == ' ' || c == '\t')) {
            if (!cur.empty()) out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

Turn parse_turn_line(const QuasiSurface& X, const std::vector<std::string>& toks) {
    if (toks.size() != 4) throw ParseError("turn line needs in=, out=, y=");
    Turn t;
    auto [ig, ip] = parse_gate_at(X, expect_prefix(toks[1], "in="));
    auto [og, op] = parse_gate_at(X, expect_prefix(toks[2], "out="));
    t.in_gate = ig;
    t.in_pos = ip;
    t.out_gate = og;
    t.out_pos = op;
    try {
        t.passage = parse_word(X.alphabet(), unquote(expect_prefix(toks[3], "y=")));
    } catch (std::invalid_argument& e) {
        throw ParseError(e.what());
    }
    return t;
}

Mat parse_matrix(int n, const std::string& text) {
    // [[a,b],[c,d]] with rational entries, no spaces required
    Mat m;
    std::string s = text;
    if (s.size() < 2 || s.front() != '[' || s.back() != ']')
        throw ParseError("bad matrix: " + text);
    s = s.substr(1, s.size() - 2);
    size_t pos = 0;
    while (pos < s.size()) {
        if (s[pos] == ',') {
            ++pos;
            continue;
        }
        if (s[pos] != '[') throw ParseError("bad matrix row: " + text);
        size_t close = s.find(']', pos);
        if (close == std::string::npos) throw ParseError("bad matrix row: " + text);
        std::string row = s.substr(pos + 1, close - pos - 1);
        m.emplace_back();
        std::istringstream rin(row);
        std::string cell;
        while (std::getline(rin, cell, ',')) {
            try {
                m.back().push_back(parse_rat(trim(cell)));
            } catch (std::exception& e) {
                throw ParseError(e.what());
            }
        }
        pos = close + 1;
    }
    if (static_cast<int>(m.size()) != n)
        throw ParseError("matrix has wrong row count: " + text);
    for (auto& row : m)
        if (static_cast<int>(row.size()) != n)
            throw ParseError("matrix has wrong column count: " + text);
    return m;
}

}  // namespace

const GenericLoop& Workspace::loop(const std::string& name) const {
    auto it = loops.find(name);
    if (it == loops.end()) throw NameError("unknown loop: " + name);
    return it->second;
}

const BasedGenericLoop& Workspace::based_loop(const std::string& name) const {
    auto it = based.find(name);
    if (it == based.end()) throw NameError("unknown based loop: " + name);
    return it->second;
}

const FoxDerivative& Workspace::fox(const std::string& name) const {
    auto it = foxes.find(name);
    if (it == foxes.end()) throw NameError("unknown fox derivative: " + name);
    return it->second;
}

const RepresentationPoint& Workspace::rep(const std::string& name) const {
    auto it = reps.find(name);
    if (it == reps.end()) throw NameError("unknown representation: " + name);
    return it->second;
}

Workspace parse_workspace(std::istream& in) {
    Workspace ws;
    bool have_surface = false;
    std::string line;
    // section state
    enum class Section { None, Loop, Based, Fox, Rep };
    Section section = Section::None;
    std::string current;
    std::vector<Turn> turns;
    bool got_singular = false;
    CyclicWord singular;
    Word based_head;
    FoxDerivative fox;
    RepresentationPoint rep;
    bool rep_has_n = false;

    auto close_section = [&]() {
        switch (section) {
            case Section::None:
                break;
            case Section::Loop:
                if (got_singular) {
                    if (!turns.empty())
                        throw ParseError("loop " + current +
                                         ": both singular and turns");
                    ws.loops[current] = GenericLoop::make_singular(singular);
                } else {
                    if (turns.empty())
                        throw ParseError("loop " + current + ": no turns");
                    ws.loops[current] = GenericLoop::make_turns(turns);
                }
                try {
                    validate_loop(ws.surface, ws.loops[current]);
                } catch (std::invalid_argument& e) {
                    throw ParseError("loop " + current + ": " + e.what());
                }
                break;
            case Section::Based: {
                BasedGenericLoop b;
                b.head = based_head;
                b.turns = turns;
                ws.based[current] = b;
                break;
            }
            case Section::Fox: {
                // unmentioned generators default to zero
                Alphabet alph = ws.surface.alphabet();
                for (int g = 1; g <= alph.letter_count(); ++g)
                    fox.on_generator.try_emplace(g, AlgebraElement::zero());
                ws.foxes[current] = fox;
                break;
            }
            case Section::Rep:
                if (!rep_has_n) throw ParseError("rep " + current + ": missing n=");
                for (auto& [g, m] : rep.mats) rep.invs[g] = mat_inverse(m);
                ws.reps[current] = rep;
                break;
        }
        section = Section::None;
        turns.clear();
        got_singular = false;
        based_head = {};
        fox = {};
        rep = {};
        rep_has_n = false;
    };

    auto require_unique = [&](const std::string& name) {
        if (ws.loops.count(name) || ws.based.count(name) || ws.foxes.count(name) ||
            ws.reps.count(name))
            throw ParseError("duplicate object name: " + name);
    };

    while (std::getline(in, line)) {
        if (auto hash = line.find('#'); hash != std::string::npos)
            line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        auto toks = tokenize(line);
        const std::string& head = toks[0];

        if (head == "surface") {
            close_section();
            if (have_surface) throw ParseError("duplicate surface header");
            if (toks.size() != 3) throw ParseError("surface gates=K ygens=m");
            try {
                ws.surface.gates = std::stoi(expect_prefix(toks[1], "gates="));
                ws.surface.ygens = std::stoi(expect_prefix(toks[2], "ygens="));
            } catch (ParseError&) {
                throw;
            } catch (...) {
                throw ParseError("bad surface header: " + line);
            }
            if (ws.surface.gates < 1 || ws.surface.ygens < 0)
                throw ParseError("surface needs gates >= 1, ygens >= 0");
            have_surface = true;
            continue;
        }
        if (!have_surface) throw ParseError("surface header must come first");

        if (head == "loop" || head == "based" || head == "fox" || head == "rep") {
            close_section();
            if (toks.size() != 2) throw ParseError(head + " needs a name");
            require_unique(toks[1]);
            current = toks[1];
            section = head == "loop"    ? Section::Loop
                      : head == "based" ? Section::Based
                      : head == "fox"   ? Section::Fox
                                        : Section::Rep;
            continue;
        }

        switch (section) {
            case Section::Loop:
                if (head == "turn") {
                    turns.push_back(parse_turn_line(ws.surface, toks));
                } else if (head == "singular") {
                    if (toks.size() != 2) throw ParseError("singular y=\"WORD\"");
                    try {
                        singular = CyclicWord(parse_word(
                            ws.surface.alphabet(),
                            unquote(expect_prefix(toks[1], "y="))));
                    } catch (std::invalid_argument& e) {
                        throw ParseError(e.what());
                    }
                    got_singular = true;
                } else {
                    throw ParseError("unexpected line in loop section: " + line);
                }
                break;
            case Section::Based:
                if (head == "start") {
                    if (toks.size() != 2) throw ParseError("start y=\"WORD\"");
                    try {
                        based_head = parse_word(ws.surface.alphabet(),
                                                unquote(expect_prefix(toks[1], "y=")));
                    } catch (std::invalid_argument& e) {
                        throw ParseError(e.what());
                    }
                } else if (head == "turn") {
                    turns.push_back(parse_turn_line(ws.surface, toks));
                } else {
                    throw ParseError("unexpected line in based section: " + line);
                }
                break;
            case Section::Fox: {
                if (head != "d" || toks.size() < 4 || toks[2] != "=")
                    throw ParseError("fox line: d GEN = ELEMENT");
                Alphabet alph = ws.surface.alphabet();
                int gen;
                try {
                    gen = std::abs(alph.parse_letter(toks[1]));
                } catch (std::invalid_argument& e) {
                    throw ParseError(e.what());
                }
                std::string rhs;
                for (size_t i = 3; i < toks.size(); ++i) {
                    if (!rhs.empty()) rhs += ' ';
                    rhs += toks[i];
                }
                try {
                    fox.on_generator[gen] = parse_element(alph, rhs);
                } catch (std::invalid_argument& e) {
                    throw ParseError(e.what());
                }
                break;
            }
            case Section::Rep: {
                if (toks.size() != 1)
                    throw ParseError("rep line: n=K or GEN=[[..]]");
                auto eq = head.find('=');
                if (eq == std::string::npos)
                    throw ParseError("rep line: n=K or GEN=[[..]]");
                std::string key = head.substr(0, eq), val = head.substr(eq + 1);
                if (key == "n") {
                    try {
                        rep.n = std::stoi(val);
                    } catch (...) {
                        throw ParseError("bad dimension: " + head);
                    }
                    if (rep.n < 1) throw ParseError("rep dimension must be >= 1");
                    rep_has_n = true;
                } else {
                    if (!rep_has_n)
                        throw ParseError("rep: n= must come before matrices");
                    Alphabet alph = ws.surface.alphabet();
                    int gen;
                    try {
                        gen = std::abs(alph.parse_letter(key));
                    } catch (std::invalid_argument& e) {
                        throw ParseError(e.what());
                    }
                    rep.mats[gen] = parse_matrix(rep.n, val);
                }
                break;
            }
            case Section::None:
                throw ParseError("unexpected line: " + line);
        }
    }
    close_section();
    if (!have_surface) throw ParseError("missing surface header");
    return ws;
}

Workspace parse_workspace_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open workspace file: " + path);
    return parse_workspace(in);
}

namespace {

std::string turn_line(const QuasiSurface& X, const Turn& t) {
    Alphabet alph = X.alphabet();
    return "turn in=" + std::to_string(t.in_gate) + "@" + rat_str(t.in_pos) +
           " out=" + std::to_string(t.out_gate) + "@" + rat_str(t.out_pos) +
           " y=\"" + word_str(alph, t.passage) + "\"";
}

}  // namespace

std::string loop_text(const QuasiSurface& X, const std::string& name,
                      const GenericLoop& a) {
    std::string out = "loop " + name + "\n";
    if (a.is_singular)
        out += "singular y=\"" + class_str(X.alphabet(), a.singular) + "\"\n";
    else
        for (auto& t : a.turns) out += turn_line(X, t) + "\n";
    return out;
}

std::string based_text(const QuasiSurface& X, const std::string& name,
                       const BasedGenericLoop& a) {
    std::string out = "based " + name + "\n";
    out += "start y=\"" + word_str(X.alphabet(), a.head) + "\"\n";
    for (auto& t : a.turns) out += turn_line(X, t) + "\n";
    return out;
}

std::string fox_text(const Alphabet& alph, const std::string& name,
                     const FoxDerivative& d) {
    std::string out = "fox " + name + "\n";
    for (auto& [g, v] : d.on_generator)
        out += "d " + alph.letter_name(g) + " = " + element_str(alph, v) + "\n";
    return out;
}

std::string rep_text(const Alphabet& alph, const std::string& name,
                     const RepresentationPoint& rho) {
    std::string out = "rep " + name + "\nn=" + std::to_string(rho.n) + "\n";
    for (auto& [g, m] : rho.mats) {
        out += alph.letter_name(g) + "=[";
        for (size_t i = 0; i < m.size(); ++i) {
            if (i) out += ",";
            out += "[";
            for (size_t j = 0; j < m[i].size(); ++j) {
                if (j) out += ",";
                out += rat_str(m[i][j]);
            }
            out += "]";
        }
        out += "]\n";
    }
    return out;
}

std::string workspace_text(const Workspace& ws) {
    Alphabet alph = ws.alphabet();
    std::string out = "surface gates=" + std::to_string(ws.surface.gates) +
                      " ygens=" + std::to_string(ws.surface.ygens) + "\n\n";
    for (auto& [name, a] : ws.loops) out += loop_text(ws.surface, name, a) + "\n";
    for (auto& [name, a] : ws.based) out += based_text(ws.surface, name, a) + "\n";
    for (auto& [name, d] : ws.foxes) out += fox_text(alph, name, d) + "\n";
    for (auto& [name, rho] : ws.reps) out += rep_text(alph, name, rho) + "\n";
    return out;
}

}  // namespace qps
