#include "jseg/io.hpp"

#include <cctype>
#include <set>
#include <utility>
#include <vector>

namespace jseg {

parse_error::parse_error(const std::string& what, std::size_t position)
    : std::runtime_error(what + " at position " + std::to_string(position)),
      position_(position) {}

namespace {

// -------- printing --------

std::vector<std::vector<Point>> cycles_of(const FinitePermutation& f) {
    std::vector<std::vector<Point>> cycles;
    std::set<Point> seen;
    for (Point p : f.support()) { // sorted, so each cycle starts at its minimum
        if (seen.count(p)) continue;
        std::vector<Point> cyc;
        Point q = p;
        do {
            cyc.push_back(q);
            seen.insert(q);
            q = f.apply(q);
        } while (q != p);
        cycles.push_back(std::move(cyc));
    }
    return cycles;
}

void append_joined(std::string& out, const std::vector<std::string>& parts,
                   const char* sep) {
    for (std::size_t k = 0; k < parts.size(); ++k) {
        if (k) out += sep;
        out += parts[k];
    }
}

// -------- parsing --------

struct Cursor {
    const std::string& text;
    std::size_t pos = 0;

    bool eof() const { return pos >= text.size(); }
    char peek() const { return eof() ? '\0' : text[pos]; }

    void skip_ws() {
        while (!eof() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    bool try_consume(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }

    bool try_consume(const char* lit) {
        std::size_t n = std::string(lit).size();
        if (text.compare(pos, n, lit) == 0) {
            pos += n;
            return true;
        }
        return false;
    }

    void expect(char c, const char* what) {
        if (!try_consume(c)) throw parse_error(std::string("expected ") + what, pos);
    }

    long long integer() {
        std::size_t start = pos;
        if (peek() == '-' || peek() == '+') ++pos;
        std::size_t digits = pos;
        while (!eof() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == digits) throw parse_error("expected integer", start);
        return std::stoll(text.substr(start, pos - start));
    }
};

FinitePermutation parse_cycle(Cursor& cur) {
    std::size_t start = cur.pos;
    cur.expect('(', "'('");
    std::vector<Point> points;
    cur.skip_ws();
    while (!cur.try_consume(')')) {
        if (cur.eof()) throw parse_error("unterminated cycle", start);
        points.push_back(cur.integer());
        cur.skip_ws();
        cur.try_consume(',');
        cur.skip_ws();
    }
    try {
        return FinitePermutation::cycle(points);
    } catch (const std::invalid_argument& e) {
        throw parse_error(e.what(), start);
    }
}

// Terms up to `stop` (or end of input), composed rightmost-first.
ShiftedPermutation parse_permutation_terms(Cursor& cur, char stop) {
    ShiftedPermutation acc = perm_identity();
    bool any = false;
    for (;;) {
        cur.skip_ws();
        if (cur.eof() || cur.peek() == stop) break;
        if (cur.try_consume('s')) {
            long long k = 1;
            if (cur.try_consume('^')) k = cur.integer();
            acc = compose(acc, shift_map(k));
        } else if (cur.peek() == '(') {
            acc = compose(acc, ShiftedPermutation{0, parse_cycle(cur)});
        } else {
            throw parse_error("expected permutation term", cur.pos);
        }
        any = true;
    }
    if (!any) throw parse_error("expected permutation term", cur.pos);
    return acc;
}

VMap parse_vmap_at(Cursor& cur) {
    cur.skip_ws();
    std::size_t start = cur.pos;
    if (cur.try_consume("z@")) {
        long long i = cur.integer();
        if (i < 0) throw parse_error("negative level", start);
        return z(i);
    }
    if (!cur.try_consume("v{")) throw parse_error("expected vmap", start);
    std::vector<Point> support;
    cur.skip_ws();
    while (!cur.try_consume('}')) {
        if (cur.eof()) throw parse_error("unterminated vmap", start);
        support.push_back(cur.integer());
        cur.skip_ws();
        cur.try_consume(',');
        cur.skip_ws();
    }
    try {
        return VMap{std::move(support)};
    } catch (const std::invalid_argument& e) {
        throw parse_error(e.what(), start);
    }
}

GElement parse_gelement_at(Cursor& cur) {
    cur.skip_ws();
    if (!cur.try_consume("g@")) throw parse_error("expected group element", cur.pos);
    long long level = cur.integer();
    cur.expect('[', "'['");
    VMap v = parse_vmap_at(cur);
    cur.skip_ws();
    cur.expect(';', "';'");
    ShiftedPermutation h = parse_permutation_terms(cur, ']');
    cur.expect(']', "']'");
    return GElement{level, std::move(v), std::move(h)};
}

Word parse_word_at(Cursor& cur) {
    cur.skip_ws();
    if (!cur.try_consume("w@")) throw parse_error("expected word", cur.pos);
    long long level = cur.integer();
    cur.expect('[', "'['");
    std::vector<Syllable> syllables;
    cur.skip_ws();
    if (!cur.try_consume(']')) {
        for (;;) {
            cur.skip_ws();
            Side side;
            if (cur.try_consume('A')) {
                side = Side::A;
            } else if (cur.try_consume('B')) {
                side = Side::B;
            } else {
                throw parse_error("expected syllable side", cur.pos);
            }
            cur.expect(':', "':'");
            cur.skip_ws();
            GElement elem = [&] {
                if (cur.try_consume("inv(")) {
                    GElement inner = parse_gelement_at(cur);
                    cur.skip_ws();
                    cur.expect(')', "')'");
                    return ginv(inner);
                }
                return parse_gelement_at(cur);
            }();
            syllables.push_back(Syllable{side, std::move(elem)});
            cur.skip_ws();
            if (cur.try_consume(']')) break;
            cur.expect(';', "';' or ']'");
        }
    }
    return Word{level, std::move(syllables)};
}

void finish(Cursor& cur) {
    cur.skip_ws();
    if (!cur.eof()) throw parse_error("unexpected trailing input", cur.pos);
}

} // namespace

std::string to_string(const ShiftedPermutation& h) {
    std::vector<std::string> parts;
    if (h.shift != 0) parts.push_back("s^" + std::to_string(h.shift));
    for (const auto& cyc : cycles_of(h.finite)) {
        std::string p = "(";
        for (std::size_t k = 0; k < cyc.size(); ++k) {
            if (k) p += ' ';
            p += std::to_string(cyc[k]);
        }
        p += ')';
        parts.push_back(std::move(p));
    }
    if (parts.empty()) return "()";
    std::string out;
    append_joined(out, parts, " ");
    return out;
}

std::string to_string(const VMap& v) {
    std::string out = "v{";
    const auto& support = v.support();
    for (std::size_t k = 0; k < support.size(); ++k) {
        if (k) out += ',';
        out += std::to_string(support[k]);
    }
    out += '}';
    return out;
}

std::string to_string(const GElement& a) {
    return "g@" + std::to_string(a.level) + "[" + to_string(a.v) + "; " +
           to_string(a.h) + "]";
}

std::string to_string(const Word& w) {
    std::string out = "w@" + std::to_string(w.segment_level()) + "[";
    if (w.size() == 0) return out + "]";
    std::vector<std::string> parts;
    for (const Syllable& syl : w.syllables()) {
        parts.push_back(std::string(syl.side == Side::A ? "A:" : "B:") +
                        to_string(syl.element));
    }
    out += ' ';
    append_joined(out, parts, " ; ");
    out += " ]";
    return out;
}

ShiftedPermutation parse_permutation(const std::string& text) {
    Cursor cur{text};
    ShiftedPermutation h = parse_permutation_terms(cur, '\0');
    finish(cur);
    return h;
}

VMap parse_vmap(const std::string& text) {
    Cursor cur{text};
    VMap v = parse_vmap_at(cur);
    finish(cur);
    return v;
}

GElement parse_gelement(const std::string& text) {
    Cursor cur{text};
    GElement a = parse_gelement_at(cur);
    finish(cur);
    return a;
}

Word parse_word(const std::string& text) {
    Cursor cur{text};
    Word w = parse_word_at(cur);
    finish(cur);
    return w;
}

std::string eval_element(const std::string& text) {
    Cursor probe{text};
    probe.skip_ws();
    const std::string& t = probe.text;
    std::size_t p = probe.pos;
    if (t.compare(p, 2, "w@") == 0) return to_string(reduce(parse_word(text)));
    if (t.compare(p, 2, "g@") == 0) return to_string(parse_gelement(text));
    if (t.compare(p, 2, "v{") == 0 || t.compare(p, 2, "z@") == 0)
        return to_string(parse_vmap(text));
    return to_string(parse_permutation(text));
}

} // namespace jseg
