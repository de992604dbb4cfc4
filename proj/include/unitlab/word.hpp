#pragma once

// Words in a free group: sequences of (generator, exponent) syllables.

#include <cstdlib>
#include <string>
#include <vector>

namespace unitlab {

struct Syllable {
    int gen = 0;   // index into a generator-name list
    int exp = 0;   // nonzero after reduction
    bool operator==(const Syllable&) const = default;
};

struct Word {
    std::vector<Syllable> syl;
    bool empty() const { return syl.empty(); }
    bool operator==(const Word&) const = default;
};

// Free reduction: merge adjacent syllables with equal generator, drop zero
// exponents. Idempotent.
inline Word reduced(const Word& w) {
    Word r;
    for (const auto& s : w.syl) {
        if (s.exp == 0) continue;
        if (!r.syl.empty() && r.syl.back().gen == s.gen) {
            r.syl.back().exp += s.exp;
            if (r.syl.back().exp == 0) r.syl.pop_back();
        } else {
            r.syl.push_back(s);
        }
    }
    return r;
}

inline Word inverse(const Word& w) {
    Word r;
    for (auto it = w.syl.rbegin(); it != w.syl.rend(); ++it)
        r.syl.push_back({it->gen, -it->exp});
    return r;
}

inline Word concat(const Word& a, const Word& b) {
    Word r = a;
    r.syl.insert(r.syl.end(), b.syl.begin(), b.syl.end());
    return reduced(r);
}

inline Word power(const Word& w, int e) {
    if (e == 0) return {};
    Word base = e > 0 ? w : inverse(w);
    Word r;
    for (int i = 0; i < std::abs(e); ++i) r = concat(r, base);
    return r;
}

// b^-1 a b
inline Word conjugated(const Word& a, const Word& b) {
    return concat(concat(inverse(b), a), b);
}

// [a,b] = a^-1 b^-1 a b
inline Word commutator_word(const Word& a, const Word& b) {
    return concat(concat(inverse(a), inverse(b)), concat(a, b));
}

inline std::string to_string(const Word& w, const std::vector<std::string>& names) {
    if (w.syl.empty()) return "1";
    std::string s;
    for (size_t i = 0; i < w.syl.size(); ++i) {
        if (i) s += "*";
        s += names[w.syl[i].gen];
        if (w.syl[i].exp != 1) s += "^" + std::to_string(w.syl[i].exp);
    }
    return s;
}

}  // namespace unitlab
