#pragma once

// Finitely presented groups: the textual DSL, the parser, and the built-in
// presentations for every group family the engine knows.
//
// Grammar (whitespace insignificant):
//   presentation := 'gens' ':' ident (',' ident)* ';' 'rels' ':' [relation (',' relation)*]
//   relation     := word ('=' word)*          -- x=y=z gives relators x*y^-1, y*z^-1
//   word         := term (['*'] term)*        -- juxtaposition, optional '*'
//   term         := atom ('^' exponent)*      -- left associative
//   atom         := ident | '1' | '(' word ')' | '[' word ',' word ']'
//   exponent     := integer                   -- power
//                 | atom                      -- conjugation: a^b = b^-1 a b
//
// Inverse/power bind tighter than juxtaposition: a^-1b means (a^-1)*b.

#include <cctype>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "unitlab/word.hpp"

namespace unitlab {

struct ParseError : std::runtime_error {
    ParseError(const std::string& msg, size_t offset)
        : std::runtime_error(msg + " (at byte " + std::to_string(offset) + ")"),
          offset(offset) {}
    size_t offset;
};

struct Presentation {
    std::vector<std::string> generators;
    std::vector<Word> relators;  // freely reduced, source order

    int generator_index(const std::string& name) const {
        for (size_t i = 0; i < generators.size(); ++i)
            if (generators[i] == name) return static_cast<int>(i);
        return -1;
    }
    bool operator==(const Presentation&) const = default;
};

namespace detail {

struct Lexer {
    explicit Lexer(const std::string& s) : src(s) {}
    const std::string& src;
    size_t pos = 0;

    void skip_ws() {
        while (pos < src.size() && std::isspace(static_cast<unsigned char>(src[pos]))) ++pos;
    }
    char peek() {
        skip_ws();
        return pos < src.size() ? src[pos] : '\0';
    }
    bool consume(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }
    void expect(char c, const char* what) {
        if (!consume(c)) throw ParseError(std::string("expected '") + c + "' " + what, pos);
    }
    std::optional<std::string> ident() {
        skip_ws();
        if (pos >= src.size() || !std::isalpha(static_cast<unsigned char>(src[pos]))) return {};
        size_t start = pos;
        while (pos < src.size() &&
               (std::isalnum(static_cast<unsigned char>(src[pos])) || src[pos] == '_'))
            ++pos;
        return src.substr(start, pos - start);
    }
    std::optional<long> integer() {
        skip_ws();
        size_t start = pos;
        size_t p = pos;
        if (p < src.size() && src[p] == '-') ++p;
        if (p >= src.size() || !std::isdigit(static_cast<unsigned char>(src[p]))) return {};
        while (p < src.size() && std::isdigit(static_cast<unsigned char>(src[p]))) ++p;
        pos = p;
        return std::stol(src.substr(start, pos - start));
    }
    bool keyword(const char* kw) {
        skip_ws();
        size_t save = pos;
        auto id = ident();
        if (id && *id == kw) return true;
        pos = save;
        return false;
    }
};

class WordParser {
public:
    WordParser(Lexer& lx, const std::vector<std::string>& gens) : lx_(lx), gens_(gens) {}

    Word word() {
        Word w = term();
        for (;;) {
            lx_.consume('*');
            char c = lx_.peek();
            bool starts_term = std::isalpha(static_cast<unsigned char>(c)) || c == '(' ||
                               c == '[' || c == '1';
            if (!starts_term) return reduced(w);
            w = concat(w, term());
        }
    }

private:
    Word term() {
        Word w = atom();
        while (lx_.consume('^')) {
            if (auto e = lx_.integer()) {
                w = power(w, static_cast<int>(*e));
            } else {
                w = conjugated(w, atom());
            }
        }
        return w;
    }

    Word atom() {
        size_t at = lx_.pos;
        char c = lx_.peek();
        if (c == '(') {
            lx_.consume('(');
            Word w = word();
            lx_.expect(')', "to close parenthesis");
            return w;
        }
        if (c == '[') {
            lx_.consume('[');
            Word a = word();
            lx_.expect(',', "in commutator");
            Word b = word();
            lx_.expect(']', "to close commutator");
            return commutator_word(a, b);
        }
        if (auto n = lx_.integer()) {
            if (*n == 1) return {};
            throw ParseError("only the literal 1 may appear as a word", at);
        }
        if (auto id = lx_.ident()) {
            for (size_t i = 0; i < gens_.size(); ++i)
                if (gens_[i] == *id) return Word{{{static_cast<int>(i), 1}}};
            throw ParseError("unknown generator '" + *id + "'", at);
        }
        throw ParseError("expected a generator, '1', '(' or '['", at);
    }

    Lexer& lx_;
    const std::vector<std::string>& gens_;
};

}  // namespace detail

inline Presentation parse_presentation(const std::string& text) {
    detail::Lexer lx(text);
    if (!lx.keyword("gens")) throw ParseError("expected 'gens'", lx.pos);
    lx.expect(':', "after 'gens'");
    Presentation p;
    do {
        auto id = lx.ident();
        if (!id) throw ParseError("expected generator name", lx.pos);
        if (p.generator_index(*id) >= 0)
            throw ParseError("duplicate generator '" + *id + "'", lx.pos);
        p.generators.push_back(*id);
    } while (lx.consume(','));
    lx.expect(';', "after generator list");
    if (!lx.keyword("rels")) throw ParseError("expected 'rels'", lx.pos);
    lx.expect(':', "after 'rels'");
    detail::WordParser wp(lx, p.generators);
    if (lx.peek() != '\0') {
        do {
            std::vector<Word> chain;
            chain.push_back(wp.word());
            while (lx.consume('=')) chain.push_back(wp.word());
            if (chain.size() == 1) {
                if (!chain[0].empty()) p.relators.push_back(chain[0]);
            } else {
                for (size_t i = 0; i + 1 < chain.size(); ++i) {
                    Word r = concat(chain[i], inverse(chain[i + 1]));
                    if (!r.empty()) p.relators.push_back(r);
                }
            }
        } while (lx.consume(','));
    }
    lx.skip_ws();
    if (lx.pos != text.size()) throw ParseError("trailing input", lx.pos);
    return p;
}

// Parses a word over the given generator names (used for algebra literals).
inline Word parse_word(const std::string& text, const std::vector<std::string>& gens) {
    detail::Lexer lx(text);
    detail::WordParser wp(lx, gens);
    Word w = wp.word();
    lx.skip_ws();
    if (lx.pos != text.size()) throw ParseError("trailing input in word", lx.pos);
    return w;
}

// Canonical pretty-printer; parse(to_string(p)) == p.
inline std::string to_string(const Presentation& p) {
    std::string s = "gens: ";
    for (size_t i = 0; i < p.generators.size(); ++i) {
        if (i) s += ", ";
        s += p.generators[i];
    }
    s += "; rels:";
    for (size_t i = 0; i < p.relators.size(); ++i) {
        s += i ? ", " : " ";
        s += to_string(p.relators[i], p.generators);
    }
    return s;
}

namespace detail {

inline Word gen_word(int g, int e = 1) { return reduced(Word{{{g, e}}}); }

inline int pow2(int k) { return 1 << k; }

}  // namespace detail

// Built-in presentations, verbatim from the families the engine classifies.
//
//   Cyclic(n)            <a | a^n>
//   S(n, m), n,m >= 2    <a,b | a^{2^n} = b^{2^m} = 1, a^b = a^{1+2^{n-1}}>
//   DihedralPow(k >= 3)  order 2^k
//   GenQuaternion(k >= 3) order 2^k
//   Q8                   <a,b | a^4 = 1, a^2 = b^2 = [a,b]>
//   H32                  three-generator group of order 32
//   H245                 Suzuki 2-group of order 64 (four generators)
//   TheoremIII(n >= 2)   cyclic 2^n extended by the quaternion group, order 2^{n+3}
//   S22                  <a,b | a^4 = b^4 = 1, a^2 = [b,a]>
//   ModularS(n >= 3)     modular group of order 2^{n+1}
inline Presentation builtin(const std::string& family, const std::vector<int>& params = {}) {
    using detail::gen_word;
    using detail::pow2;
    auto need = [&](size_t k) {
        if (params.size() != k)
            throw std::invalid_argument("builtin " + family + ": expected " +
                                        std::to_string(k) + " parameter(s)");
    };
    auto from_text = [](const char* text) { return parse_presentation(text); };

    if (family == "Cyclic") {
        need(1);
        if (params[0] < 1) throw std::invalid_argument("Cyclic: order must be >= 1");
        Presentation p;
        p.generators = {"a"};
        p.relators = {gen_word(0, params[0])};
        return p;
    }
    if (family == "S") {
        need(2);
        int n = params[0], m = params[1];
        if (n < 2 || m < 2) throw std::invalid_argument("S(n,m): need n,m >= 2");
        Presentation p;
        p.generators = {"a", "b"};
        Word a = gen_word(0), b = gen_word(1);
        p.relators = {power(a, pow2(n)), power(b, pow2(m)),
                      concat(conjugated(a, b), power(a, -(1 + pow2(n - 1))))};
        return p;
    }
    if (family == "DihedralPow") {
        need(1);
        int k = params[0];
        if (k < 3) throw std::invalid_argument("DihedralPow: need k >= 3");
        Presentation p;
        p.generators = {"a", "b"};
        Word a = gen_word(0), b = gen_word(1);
        p.relators = {power(a, pow2(k - 1)), power(b, 2),
                      concat(conjugated(a, b), a)};
        return p;
    }
    if (family == "GenQuaternion") {
        need(1);
        int k = params[0];
        if (k < 3) throw std::invalid_argument("GenQuaternion: need k >= 3");
        Presentation p;
        p.generators = {"a", "b"};
        Word a = gen_word(0), b = gen_word(1);
        p.relators = {power(a, pow2(k - 1)),
                      concat(power(b, 2), power(a, -pow2(k - 2))),
                      concat(conjugated(a, b), a)};
        return p;
    }
    if (family == "Q8") {
        need(0);
        return from_text("gens: a,b; rels: a^4=1, a^2=b^2=[a,b]");
    }
    if (family == "S22") {
        need(0);
        return from_text("gens: a,b; rels: a^4=b^4=1, a^2=[b,a]");
    }
    if (family == "H32") {
        need(0);
        return from_text(
            "gens: x,y,u; rels: x^4=y^4=1, x^2=[y,x], y^2=u^2=[u,x], x^2*y^2=[u,y]");
    }
    if (family == "H245") {
        need(0);
        return from_text(
            "gens: x,y,u,v; rels: x^4=y^4=[v,u]=1, x^2=v^2=[y,x]=[v,y], "
            "y^2=u^2=[u,x], x^2*y^2=[u,y]=[v,x]");
    }
    if (family == "TheoremIII") {
        need(1);
        int n = params[0];
        if (n < 2) throw std::invalid_argument("TheoremIII: need n >= 2");
        Presentation p;
        p.generators = {"a", "b", "d"};
        Word a = gen_word(0), b = gen_word(1), d = gen_word(2);
        p.relators = {power(a, 4),
                      concat(power(a, 2), power(b, -2)),
                      concat(power(a, 2), inverse(commutator_word(a, b))),
                      power(d, pow2(n)),
                      concat(commutator_word(a, d), power(d, -pow2(n - 1))),
                      commutator_word(b, d)};
        return p;
    }
    if (family == "ModularS") {
        if (params.size() == 2 && params[1] != 1)
            throw std::invalid_argument("ModularS: second parameter must be 1");
        int n = params.empty() ? 0 : params[0];
        if (params.empty() || n < 3) throw std::invalid_argument("ModularS: need n >= 3");
        Presentation p;
        p.generators = {"a", "b"};
        Word a = gen_word(0), b = gen_word(1);
        p.relators = {power(a, pow2(n)), power(b, 2),
                      concat(conjugated(a, b), power(a, -(1 + pow2(n - 1))))};
        return p;
    }
    throw std::invalid_argument("unknown builtin family '" + family + "'");
}

}  // namespace unitlab
