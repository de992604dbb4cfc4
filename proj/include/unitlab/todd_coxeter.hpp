#pragma once

// HLT-style coset enumeration over the trivial subgroup, with coincidence
// handling via union-find and a merge queue. On success the live cosets are in
// bijection with the group elements and the regular representation's
// multiplication table is returned.

#include <stdexcept>
#include <string>
#include <vector>

#include "unitlab/group.hpp"
#include "unitlab/presentation.hpp"

namespace unitlab {

struct CosetLimitExceeded : std::runtime_error {
    explicit CosetLimitExceeded(int limit)
        : std::runtime_error("coset enumeration exceeded limit of " +
                             std::to_string(limit) +
                             " live cosets (group too large or infinite)"),
          limit(limit) {}
    int limit;
};

namespace detail {

class CosetTable {
public:
    CosetTable(int ngens, int limit) : ncols_(2 * ngens), limit_(limit) {
        new_coset();
    }

    int find(int c) {
        while (rep_[c] != c) {
            rep_[c] = rep_[rep_[c]];
            c = rep_[c];
        }
        return c;
    }

    int entry(int c, int x) const { return table_[c][x] < 0 ? -1 : table_[c][x]; }
    int size() const { return static_cast<int>(table_.size()); }
    int live() const { return live_; }
    static int inv_col(int x) { return x ^ 1; }

    int define(int c, int x) {
        int n = new_coset();
        table_[c][x] = n;
        table_[n][inv_col(x)] = c;
        return n;
    }

    // Fully scans relator w (letters = column indices) from coset alpha,
    // defining cosets as needed and processing any coincidence discovered.
    void scan_and_fill(int alpha, const std::vector<int>& w) {
        int f = alpha, b = alpha;
        int i = 0, j = static_cast<int>(w.size()) - 1;
        for (;;) {
            while (i <= j && table_[f][w[i]] >= 0) f = find(table_[f][w[i++]]);
            if (i > j) {
                if (f != b) coincidence(f, b);
                return;
            }
            while (j >= i && table_[b][inv_col(w[j])] >= 0)
                b = find(table_[b][inv_col(w[j--])]);
            if (j < i) {
                if (f != b) coincidence(f, b);
                return;
            }
            if (j == i) {
                table_[f][w[i]] = b;
                table_[b][inv_col(w[i])] = f;
                return;
            }
            f = define(f, w[i++]);
        }
    }

    void fill_row(int alpha) {
        for (int x = 0; x < ncols_; ++x)
            if (table_[alpha][x] < 0) define(alpha, x);
    }

    bool is_live(int c) { return find(c) == c; }

    const std::vector<int>& row(int c) const { return table_[c]; }

private:
    int new_coset() {
        if (live_ >= limit_) throw CosetLimitExceeded(limit_);
        table_.emplace_back(ncols_, -1);
        rep_.push_back(static_cast<int>(rep_.size()));
        ++live_;
        return static_cast<int>(table_.size()) - 1;
    }

    void merge(int a, int b, std::vector<int>& queue) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (a > b) std::swap(a, b);
        rep_[b] = a;
        --live_;
        queue.push_back(b);
    }

    void coincidence(int a, int b) {
        std::vector<int> queue;
        merge(a, b, queue);
        for (size_t qi = 0; qi < queue.size(); ++qi) {
            int gamma = queue[qi];
            for (int x = 0; x < ncols_; ++x) {
                int delta = table_[gamma][x];
                if (delta < 0) continue;
                table_[delta][inv_col(x)] = -1;
                int mu = find(gamma);
                int nu = find(delta);
                if (table_[mu][x] >= 0) {
                    merge(nu, table_[mu][x], queue);
                } else if (table_[nu][inv_col(x)] >= 0) {
                    merge(mu, table_[nu][inv_col(x)], queue);
                } else {
                    table_[mu][x] = nu;
                    table_[nu][inv_col(x)] = mu;
                }
            }
        }
    }

    int ncols_;
    int limit_;
    int live_ = 0;
    std::vector<std::vector<int>> table_;
    std::vector<int> rep_;
};

inline std::vector<int> relator_letters(const Word& w) {
    std::vector<int> letters;
    for (const auto& s : w.syl) {
        int col = s.exp > 0 ? 2 * s.gen : 2 * s.gen + 1;
        for (int i = 0; i < std::abs(s.exp); ++i) letters.push_back(col);
    }
    return letters;
}

}  // namespace detail

inline FiniteGroup todd_coxeter(const Presentation& p, int coset_limit = 100000) {
    if (p.relators.empty())
        throw std::invalid_argument(
            "todd_coxeter: presentation has no relators (free group is infinite)");
    if (coset_limit < 1) throw std::invalid_argument("todd_coxeter: coset_limit < 1");
    const int ngens = static_cast<int>(p.generators.size());
    std::vector<std::vector<int>> rels;
    for (const auto& r : p.relators) rels.push_back(detail::relator_letters(r));

    detail::CosetTable ct(ngens, coset_limit);
    for (int alpha = 0; alpha < ct.size(); ++alpha) {
        if (!ct.is_live(alpha)) continue;
        for (const auto& r : rels) {
            ct.scan_and_fill(alpha, r);
            if (!ct.is_live(alpha)) break;
        }
        if (ct.is_live(alpha)) ct.fill_row(alpha);
    }

    // Canonical renumbering: breadth-first closure from the identity coset over
    // the generator columns; identity gets index 0.
    const int n = ct.live();
    std::vector<int> number(ct.size(), -1);
    std::vector<int> bfs;
    std::vector<Word> word;
    int start = ct.find(0);
    number[start] = 0;
    bfs.push_back(start);
    word.emplace_back();
    for (size_t i = 0; i < bfs.size(); ++i)
        for (int j = 0; j < ngens; ++j) {
            int y = ct.find(ct.row(bfs[i])[2 * j]);
            if (number[y] < 0) {
                number[y] = static_cast<int>(bfs.size());
                bfs.push_back(y);
                word.push_back(concat(word[i], Word{{{j, 1}}}));
            }
        }
    if (static_cast<int>(bfs.size()) != n)
        throw GroupError("todd_coxeter: generator closure misses live cosets");

    // act[e][j] = e * generator j, in canonical numbering.
    std::vector<std::vector<int>> act(n, std::vector<int>(ngens));
    for (int e = 0; e < n; ++e)
        for (int j = 0; j < ngens; ++j) act[e][j] = number[ct.find(ct.row(bfs[e])[2 * j])];

    FiniteGroup g;
    g.order = n;
    g.identity = 0;
    g.mul.assign(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            int f = a;
            for (const auto& s : word[b].syl)
                for (int t = 0; t < s.exp; ++t) f = act[f][s.gen];
            g.mul[a][b] = f;
        }
    g.inv.assign(n, -1);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (g.mul[a][b] == 0) {
                g.inv[a] = b;
                break;
            }
    for (int j = 0; j < ngens; ++j) g.generators.push_back(act[0][j]);
    g.names.assign(n, "");
    for (int e = 0; e < n; ++e) g.names[e] = to_string(word[e], p.generators);

    validate_group(g);
    for (const auto& r : p.relators)
        if (eval_word(g, r) != g.identity)
            throw GroupError("todd_coxeter: relator does not evaluate to identity");
    return g;
}

inline FiniteGroup todd_coxeter(const std::string& text, int coset_limit = 100000) {
    return todd_coxeter(parse_presentation(text), coset_limit);
}

}  // namespace unitlab
