#pragma once

// Finite groups as explicit multiplication tables, plus the subgroup-theoretic
// invariants and product constructions the classifier relies on.

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "unitlab/word.hpp"

namespace unitlab {

struct GroupError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct FiniteGroup {
    int order = 1;
    int identity = 0;
    std::vector<std::vector<int>> mul;  // order x order, row-major
    std::vector<int> inv;
    std::vector<int> generators;        // element indices
    std::vector<std::string> names;     // optional display names, size order or 0

    int op(int a, int b) const { return mul[a][b]; }

    std::string name_of(int x) const {
        if (x == identity) return "1";
        if (x >= 0 && x < static_cast<int>(names.size()) && !names[x].empty())
            return names[x];
        return "g" + std::to_string(x);
    }
};

inline FiniteGroup trivial_group() {
    FiniteGroup g;
    g.order = 1;
    g.mul = {{0}};
    g.inv = {0};
    g.names = {"1"};
    return g;
}

// Full axiom validation. Associativity is exhaustive for order <= 256, sampled
// on 4096 random triples above that.
inline void validate_group(const FiniteGroup& g) {
    const int n = g.order;
    if (n <= 0) throw GroupError("group: nonpositive order");
    if (static_cast<int>(g.mul.size()) != n) throw GroupError("group: bad table height");
    for (const auto& row : g.mul) {
        if (static_cast<int>(row.size()) != n) throw GroupError("group: bad table width");
        for (int v : row)
            if (v < 0 || v >= n) throw GroupError("group: table entry out of range");
    }
    if (g.identity < 0 || g.identity >= n) throw GroupError("group: identity out of range");
    for (int x = 0; x < n; ++x)
        if (g.mul[g.identity][x] != x || g.mul[x][g.identity] != x)
            throw GroupError("group: identity law fails");
    if (static_cast<int>(g.inv.size()) != n) throw GroupError("group: bad inverse table");
    for (int x = 0; x < n; ++x) {
        int y = g.inv[x];
        if (y < 0 || y >= n || g.mul[x][y] != g.identity || g.mul[y][x] != g.identity)
            throw GroupError("group: inverse law fails");
    }
    auto check_assoc = [&](int a, int b, int c) {
        if (g.mul[g.mul[a][b]][c] != g.mul[a][g.mul[b][c]])
            throw GroupError("group: associativity fails");
    };
    if (n <= 256) {
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                for (int c = 0; c < n; ++c) check_assoc(a, b, c);
    } else {
        std::mt19937 rng(0xA55);
        for (int t = 0; t < 4096; ++t)
            check_assoc(static_cast<int>(rng() % n), static_cast<int>(rng() % n),
                        static_cast<int>(rng() % n));
    }
    for (int x : g.generators)
        if (x < 0 || x >= n) throw GroupError("group: generator index out of range");
    // Generator closure must span the whole group.
    std::vector<char> seen(n, 0);
    std::vector<int> queue{g.identity};
    seen[g.identity] = 1;
    for (size_t i = 0; i < queue.size(); ++i)
        for (int gen : g.generators) {
            int y = g.mul[queue[i]][gen];
            if (!seen[y]) {
                seen[y] = 1;
                queue.push_back(y);
            }
        }
    if (static_cast<int>(queue.size()) != n)
        throw GroupError("group: generators do not span the group");
}

inline int element_power(const FiniteGroup& g, int x, int e) {
    int base = e >= 0 ? x : g.inv[x];
    int k = e >= 0 ? e : -e;
    int r = g.identity;
    for (int i = 0; i < k; ++i) r = g.mul[r][base];
    return r;
}

inline int element_order(const FiniteGroup& g, int x) {
    int c = x, o = 1;
    while (c != g.identity) {
        c = g.mul[c][x];
        ++o;
    }
    return o;
}

inline int exponent(const FiniteGroup& g) {
    auto lcm = [](int a, int b) {
        int x = a, y = b;
        while (y) {
            int t = x % y;
            x = y;
            y = t;
        }
        return a / x * b;
    };
    int e = 1;
    for (int x = 0; x < g.order; ++x) e = lcm(e, element_order(g, x));
    return e;
}

inline bool is_abelian(const FiniteGroup& g) {
    for (int a = 0; a < g.order; ++a)
        for (int b = a + 1; b < g.order; ++b)
            if (g.mul[a][b] != g.mul[b][a]) return false;
    return true;
}

inline int eval_word(const FiniteGroup& g, const Word& w) {
    int r = g.identity;
    for (const auto& s : w.syl) {
        if (s.gen < 0 || s.gen >= static_cast<int>(g.generators.size()))
            throw GroupError("eval_word: generator index out of range");
        r = g.mul[r][element_power(g, g.generators[s.gen], s.exp)];
    }
    return r;
}

// ---------------------------------------------------------------------------
// Subgroups

struct Subgroup {
    const FiniteGroup* parent = nullptr;
    std::vector<int> elements;   // sorted
    std::vector<char> member;    // size parent->order

    int size() const { return static_cast<int>(elements.size()); }
    bool contains(int x) const { return member[x]; }
};

inline Subgroup make_subgroup(const FiniteGroup& g, std::vector<int> closed_elems) {
    Subgroup s;
    s.parent = &g;
    std::sort(closed_elems.begin(), closed_elems.end());
    closed_elems.erase(std::unique(closed_elems.begin(), closed_elems.end()),
                       closed_elems.end());
    s.elements = std::move(closed_elems);
    s.member.assign(g.order, 0);
    for (int x : s.elements) s.member[x] = 1;
    return s;
}

inline Subgroup subgroup_generated(const FiniteGroup& g, const std::vector<int>& gens) {
    std::vector<char> seen(g.order, 0);
    std::vector<int> queue{g.identity};
    seen[g.identity] = 1;
    for (size_t i = 0; i < queue.size(); ++i)
        for (int gen : gens) {
            int y = g.mul[queue[i]][gen];
            if (!seen[y]) {
                seen[y] = 1;
                queue.push_back(y);
            }
        }
    return make_subgroup(g, queue);
}

inline std::vector<int> involutions_of(const FiniteGroup& g) {
    std::vector<int> r;
    for (int x = 0; x < g.order; ++x)
        if (x != g.identity && g.mul[x][x] == g.identity) r.push_back(x);
    return r;
}

inline Subgroup center(const FiniteGroup& g) {
    std::vector<int> z;
    for (int x = 0; x < g.order; ++x) {
        bool central = true;
        for (int y = 0; y < g.order && central; ++y)
            if (g.mul[x][y] != g.mul[y][x]) central = false;
        if (central) z.push_back(x);
    }
    return make_subgroup(g, z);
}

inline Subgroup centralizer(const FiniteGroup& g, const std::vector<int>& s) {
    std::vector<int> c;
    for (int x = 0; x < g.order; ++x) {
        bool ok = true;
        for (int y : s)
            if (g.mul[x][y] != g.mul[y][x]) {
                ok = false;
                break;
            }
        if (ok) c.push_back(x);
    }
    return make_subgroup(g, c);
}

inline int commutator(const FiniteGroup& g, int x, int y) {
    return g.mul[g.mul[g.inv[x]][g.inv[y]]][g.mul[x][y]];
}

inline Subgroup commutator_subgroup(const FiniteGroup& g) {
    std::vector<int> gens;
    for (int x = 0; x < g.order; ++x)
        for (int y = 0; y < g.order; ++y) gens.push_back(commutator(g, x, y));
    return subgroup_generated(g, gens);
}

inline Subgroup omega_subgroup(const FiniteGroup& g) {
    return subgroup_generated(g, involutions_of(g));
}

inline Subgroup frattini_subgroup(const FiniteGroup& g) {
    std::vector<int> gens;
    for (int x = 0; x < g.order; ++x) gens.push_back(g.mul[x][x]);
    for (int x = 0; x < g.order; ++x)
        for (int y = 0; y < g.order; ++y) gens.push_back(commutator(g, x, y));
    return subgroup_generated(g, gens);
}

// <x^{2^k} : x in G>
inline Subgroup agemo_like(const FiniteGroup& g, int k) {
    std::vector<int> gens;
    for (int x = 0; x < g.order; ++x) gens.push_back(element_power(g, x, 1 << k));
    return subgroup_generated(g, gens);
}

// <x : x^{2^k} = 1>
inline Subgroup omega_like(const FiniteGroup& g, int k) {
    std::vector<int> gens;
    for (int x = 0; x < g.order; ++x)
        if (element_power(g, x, 1 << k) == g.identity) gens.push_back(x);
    return subgroup_generated(g, gens);
}

inline bool is_central(const FiniteGroup& g, const Subgroup& s) {
    for (int x : s.elements)
        for (int y = 0; y < g.order; ++y)
            if (g.mul[x][y] != g.mul[y][x]) return false;
    return true;
}

inline bool is_normal(const FiniteGroup& g, const Subgroup& s) {
    for (int x : s.elements)
        for (int y = 0; y < g.order; ++y)
            if (!s.contains(g.mul[g.mul[g.inv[y]][x]][y])) return false;
    return true;
}

inline std::vector<std::vector<int>> conjugacy_classes(const FiniteGroup& g) {
    std::vector<std::vector<int>> classes;
    std::vector<char> seen(g.order, 0);
    for (int x = 0; x < g.order; ++x) {
        if (seen[x]) continue;
        std::vector<int> cl;
        for (int y = 0; y < g.order; ++y) {
            int c = g.mul[g.mul[g.inv[y]][x]][y];
            if (!seen[c]) {
                seen[c] = 1;
                cl.push_back(c);
            }
        }
        std::sort(cl.begin(), cl.end());
        classes.push_back(std::move(cl));
    }
    return classes;
}

// Independent cross-check target for frattini_subgroup: intersection of all
// index-2 subgroups, found as kernels of surjections onto the 2-element group.
// Each surjection is determined by its values on the generators; every
// assignment is tried and verified as a homomorphism on the full table.
inline Subgroup frattini_via_maximal_subgroups(const FiniteGroup& g) {
    const int k = static_cast<int>(g.generators.size());
    if (k > 20) throw GroupError("frattini_via_maximal_subgroups: too many generators");
    std::vector<char> in_all(g.order, 1);
    bool found_any = false;
    for (unsigned mask = 1; mask < (1u << k); ++mask) {
        std::vector<int> val(g.order, -1);
        val[g.identity] = 0;
        std::vector<int> queue{g.identity};
        bool ok = true;
        for (size_t i = 0; i < queue.size() && ok; ++i)
            for (int j = 0; j < k; ++j) {
                int y = g.mul[queue[i]][g.generators[j]];
                int v = val[queue[i]] ^ ((mask >> j) & 1);
                if (val[y] < 0) {
                    val[y] = v;
                    queue.push_back(y);
                } else if (val[y] != v) {
                    ok = false;
                    break;
                }
            }
        if (!ok) continue;
        for (int x = 0; x < g.order && ok; ++x)
            for (int y = 0; y < g.order; ++y)
                if (val[g.mul[x][y]] != (val[x] ^ val[y])) {
                    ok = false;
                    break;
                }
        if (!ok) continue;
        found_any = true;
        for (int x = 0; x < g.order; ++x)
            if (val[x] != 0) in_all[x] = 0;
    }
    std::vector<int> elems;
    if (!found_any) {
        // No index-2 subgroup: the whole group is its own Frattini-closure here
        // only for the trivial group.
        for (int x = 0; x < g.order; ++x) elems.push_back(x);
    } else {
        for (int x = 0; x < g.order; ++x)
            if (in_all[x]) elems.push_back(x);
    }
    return make_subgroup(g, elems);
}

// ---------------------------------------------------------------------------
// Product constructions

namespace detail {

inline std::string joined_name(const std::string& a, const std::string& b) {
    if (a == "1") return b;
    if (b == "1") return a;
    return a + "*" + b;
}

}  // namespace detail

inline FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h) {
    FiniteGroup r;
    r.order = g.order * h.order;
    auto idx = [&](int a, int x) { return a * h.order + x; };
    r.identity = idx(g.identity, h.identity);
    r.mul.assign(r.order, std::vector<int>(r.order));
    r.inv.assign(r.order, 0);
    r.names.assign(r.order, "");
    for (int a = 0; a < g.order; ++a)
        for (int x = 0; x < h.order; ++x) {
            int i = idx(a, x);
            r.inv[i] = idx(g.inv[a], h.inv[x]);
            r.names[i] = detail::joined_name(g.name_of(a), h.name_of(x));
            for (int b = 0; b < g.order; ++b)
                for (int y = 0; y < h.order; ++y)
                    r.mul[i][idx(b, y)] = idx(g.mul[a][b], h.mul[x][y]);
        }
    for (int gen : g.generators) r.generators.push_back(idx(gen, h.identity));
    for (int gen : h.generators) r.generators.push_back(idx(g.identity, gen));
    validate_group(r);
    return r;
}

// action[j] is a permutation of n's elements giving how h's j-th generator acts.
inline FiniteGroup semidirect_product(const FiniteGroup& n, const FiniteGroup& h,
                                      const std::vector<std::vector<int>>& action) {
    if (action.size() != h.generators.size())
        throw GroupError("semidirect_product: one permutation per generator of h required");
    for (const auto& perm : action) {
        if (static_cast<int>(perm.size()) != n.order)
            throw GroupError("semidirect_product: permutation size mismatch");
        if (perm[n.identity] != n.identity)
            throw GroupError("semidirect_product: not an automorphism (moves identity)");
        std::vector<char> hit(n.order, 0);
        for (int v : perm) {
            if (v < 0 || v >= n.order || hit[v])
                throw GroupError("semidirect_product: not a permutation");
            hit[v] = 1;
        }
        for (int a = 0; a < n.order; ++a)
            for (int b = 0; b < n.order; ++b)
                if (perm[n.mul[a][b]] != n.mul[perm[a]][perm[b]])
                    throw GroupError("semidirect_product: not an automorphism");
    }
    // Extend generator actions to a homomorphism h -> Aut(n) by breadth-first
    // composition; any conflict means the assignment violates a relation of h.
    std::vector<std::vector<int>> act(h.order);
    std::vector<int> idperm(n.order);
    for (int i = 0; i < n.order; ++i) idperm[i] = i;
    act[h.identity] = idperm;
    std::vector<int> queue{h.identity};
    for (size_t i = 0; i < queue.size(); ++i) {
        int x = queue[i];
        for (size_t j = 0; j < h.generators.size(); ++j) {
            int y = h.mul[x][h.generators[j]];
            // sigma_y = sigma_x . sigma_gen (apply gen's permutation first is a
            // convention choice; consistency with the table is what matters):
            std::vector<int> comp(n.order);
            for (int v = 0; v < n.order; ++v) comp[v] = act[x][action[j][v]];
            if (act[y].empty()) {
                act[y] = std::move(comp);
                queue.push_back(y);
            } else if (act[y] != comp) {
                throw GroupError("semidirect_product: action violates a relation of h");
            }
        }
    }
    if (static_cast<int>(queue.size()) != h.order)
        throw GroupError("semidirect_product: generators of h do not span h");
    FiniteGroup r;
    r.order = n.order * h.order;
    auto idx = [&](int a, int x) { return a * h.order + x; };
    r.identity = idx(n.identity, h.identity);
    r.mul.assign(r.order, std::vector<int>(r.order));
    r.inv.assign(r.order, 0);
    r.names.assign(r.order, "");
    for (int a = 0; a < n.order; ++a)
        for (int x = 0; x < h.order; ++x) {
            int i = idx(a, x);
            r.names[i] = detail::joined_name(n.name_of(a), h.name_of(x));
            for (int b = 0; b < n.order; ++b)
                for (int y = 0; y < h.order; ++y)
                    r.mul[i][idx(b, y)] = idx(n.mul[a][act[x][b]], h.mul[x][y]);
        }
    for (int i = 0; i < r.order; ++i)
        for (int j = 0; j < r.order; ++j)
            if (r.mul[i][j] == r.identity) {
                r.inv[i] = j;
                break;
            }
    for (int gen : n.generators) r.generators.push_back(idx(gen, h.identity));
    for (int gen : h.generators) r.generators.push_back(idx(n.identity, gen));
    validate_group(r);
    return r;
}

inline FiniteGroup quotient_by_normal(const FiniteGroup& g, const Subgroup& nsub) {
    if (nsub.parent != &g) throw GroupError("quotient: subgroup of a different group");
    if (!is_normal(g, nsub)) throw GroupError("quotient: subgroup is not normal");
    // Coset representative: smallest element index in the coset.
    std::vector<int> rep(g.order);
    for (int x = 0; x < g.order; ++x) {
        int m = x;
        for (int nn : nsub.elements) m = std::min(m, g.mul[x][nn]);
        rep[x] = m;
    }
    std::vector<int> coset_of(g.order, -1);
    std::vector<int> reps;
    for (int x = 0; x < g.order; ++x)
        if (coset_of[rep[x]] < 0) {
            coset_of[rep[x]] = static_cast<int>(reps.size());
            reps.push_back(rep[x]);
        }
    for (int x = 0; x < g.order; ++x) coset_of[x] = coset_of[rep[x]];
    FiniteGroup q;
    q.order = static_cast<int>(reps.size());
    q.identity = coset_of[g.identity];
    q.mul.assign(q.order, std::vector<int>(q.order));
    q.inv.assign(q.order, 0);
    q.names.assign(q.order, "");
    for (int i = 0; i < q.order; ++i) {
        q.inv[i] = coset_of[g.inv[reps[i]]];
        q.names[i] = g.name_of(reps[i]);
        for (int j = 0; j < q.order; ++j) q.mul[i][j] = coset_of[g.mul[reps[i]][reps[j]]];
    }
    for (int gen : g.generators) {
        int img = coset_of[gen];
        if (img != q.identity &&
            std::find(q.generators.begin(), q.generators.end(), img) == q.generators.end())
            q.generators.push_back(img);
    }
    if (q.generators.empty() && q.order > 1)
        throw GroupError("quotient: lost all generators");
    if (q.generators.empty()) q.generators.push_back(q.identity);
    validate_group(q);
    return q;
}

inline FiniteGroup central_product(const FiniteGroup& g, const FiniteGroup& h, int z_g,
                                   int z_h) {
    for (int y = 0; y < g.order; ++y)
        if (g.mul[z_g][y] != g.mul[y][z_g])
            throw GroupError("central_product: z_g is not central");
    for (int y = 0; y < h.order; ++y)
        if (h.mul[z_h][y] != h.mul[y][z_h])
            throw GroupError("central_product: z_h is not central");
    if (element_order(g, z_g) != element_order(h, z_h))
        throw GroupError("central_product: identified elements have different orders");
    FiniteGroup d = direct_product(g, h);
    int glued = z_g * h.order + h.inv[z_h];  // (z_g, z_h^{-1})
    Subgroup nsub = subgroup_generated(d, {glued});
    return quotient_by_normal(d, nsub);
}

// Re-derive element display names as breadth-first words over the group's
// generators, using the supplied generator names.
inline FiniteGroup with_generator_names(FiniteGroup g,
                                        const std::vector<std::string>& gen_names) {
    if (gen_names.size() != g.generators.size())
        throw GroupError("with_generator_names: name count mismatch");
    std::vector<Word> word(g.order);
    std::vector<char> seen(g.order, 0);
    std::vector<int> queue{g.identity};
    seen[g.identity] = 1;
    for (size_t i = 0; i < queue.size(); ++i)
        for (size_t j = 0; j < g.generators.size(); ++j) {
            int y = g.mul[queue[i]][g.generators[j]];
            if (!seen[y]) {
                seen[y] = 1;
                word[y] = concat(word[queue[i]], Word{{{static_cast<int>(j), 1}}});
                queue.push_back(y);
            }
        }
    g.names.assign(g.order, "");
    for (int x = 0; x < g.order; ++x)
        g.names[x] = seen[x] ? to_string(word[x], gen_names) : "";
    return g;
}

// ---------------------------------------------------------------------------
// Invariants and reports

struct StructuralReport {
    int order = 0;
    int exponent = 0;
    bool abelian = false;
    int num_involutions = 0;
    int num_classes = 0;
    int center_order = 0;
    int commutator_order = 0;
    int frattini_order = 0;
    int omega_order = 0;
    bool phi_equals_omega = false;
    bool omega_central = false;
    bool involutions_central = false;
    bool commutator_in_omega = false;
};

inline StructuralReport structural_report(const FiniteGroup& g) {
    StructuralReport r;
    r.order = g.order;
    r.exponent = exponent(g);
    r.abelian = is_abelian(g);
    auto invols = involutions_of(g);
    r.num_involutions = static_cast<int>(invols.size());
    r.num_classes = static_cast<int>(conjugacy_classes(g).size());
    Subgroup z = center(g);
    Subgroup comm = commutator_subgroup(g);
    Subgroup phi = frattini_subgroup(g);
    Subgroup om = omega_subgroup(g);
    r.center_order = z.size();
    r.commutator_order = comm.size();
    r.frattini_order = phi.size();
    r.omega_order = om.size();
    r.phi_equals_omega = phi.elements == om.elements;
    r.omega_central = is_central(g, om);
    r.involutions_central = true;
    for (int x : invols)
        if (!z.contains(x)) r.involutions_central = false;
    r.commutator_in_omega = true;
    for (int x : comm.elements)
        if (!om.contains(x)) r.commutator_in_omega = false;
    return r;
}

// ---------------------------------------------------------------------------
// Isomorphism testing

namespace detail {

struct Fingerprint {
    int order;
    bool abelian;
    int exponent;
    int center_order;
    int commutator_order;
    int frattini_order;
    std::map<int, int> order_census;
    std::vector<int> class_sizes;  // sorted
    bool operator==(const Fingerprint&) const = default;
};

inline Fingerprint fingerprint(const FiniteGroup& g) {
    Fingerprint f;
    f.order = g.order;
    f.abelian = is_abelian(g);
    f.exponent = exponent(g);
    f.center_order = center(g).size();
    f.commutator_order = commutator_subgroup(g).size();
    f.frattini_order = frattini_subgroup(g).size();
    for (int x = 0; x < g.order; ++x) f.order_census[element_order(g, x)]++;
    for (const auto& cl : conjugacy_classes(g)) f.class_sizes.push_back((int)cl.size());
    std::sort(f.class_sizes.begin(), f.class_sizes.end());
    return f;
}

// Minimal generating set: elements independent modulo the Frattini subgroup.
inline std::vector<int> minimal_generators(const FiniteGroup& g) {
    Subgroup cur = frattini_subgroup(g);
    std::vector<int> gens;
    for (int x = 0; x < g.order && cur.size() < g.order; ++x) {
        if (cur.contains(x)) continue;
        gens.push_back(x);
        std::vector<int> seed = cur.elements;
        seed.push_back(x);
        cur = subgroup_generated(g, seed);
    }
    return gens;
}

}  // namespace detail

// Returns a full element bijection phi (g-index -> h-index), verified to be a
// homomorphism on every pair, or nullopt.
inline std::optional<std::vector<int>> isomorphism_test(const FiniteGroup& g,
                                                        const FiniteGroup& h) {
    if (g.order != h.order) return std::nullopt;
    if (g.order == 1) return std::vector<int>{h.identity};
    if (detail::fingerprint(g) != detail::fingerprint(h)) return std::nullopt;

    std::vector<int> mg = detail::minimal_generators(g);
    const int d = static_cast<int>(mg.size());

    // Breadth-first spanning structure of g over the minimal generators.
    std::vector<int> parent(g.order, -1), via(g.order, -1), bfs{g.identity};
    std::vector<char> seen(g.order, 0);
    seen[g.identity] = 1;
    for (size_t i = 0; i < bfs.size(); ++i)
        for (int j = 0; j < d; ++j) {
            int y = g.mul[bfs[i]][mg[j]];
            if (!seen[y]) {
                seen[y] = 1;
                parent[y] = bfs[i];
                via[y] = j;
                bfs.push_back(y);
            }
        }

    // Orders of the subgroups generated by prefixes of mg, for pruning.
    std::vector<int> prefix_order(d);
    for (int k = 0; k < d; ++k) {
        std::vector<int> pre(mg.begin(), mg.begin() + k + 1);
        prefix_order[k] = subgroup_generated(g, pre).size();
    }

    std::vector<int> g_elt_order(g.order), h_elt_order(h.order);
    for (int x = 0; x < g.order; ++x) g_elt_order[x] = element_order(g, x);
    for (int x = 0; x < h.order; ++x) h_elt_order[x] = element_order(h, x);
    std::vector<int> g_class_size(g.order), h_class_size(h.order);
    for (const auto& cl : conjugacy_classes(g))
        for (int x : cl) g_class_size[x] = static_cast<int>(cl.size());
    for (const auto& cl : conjugacy_classes(h))
        for (int x : cl) h_class_size[x] = static_cast<int>(cl.size());

    std::vector<std::vector<int>> cands(d);
    for (int k = 0; k < d; ++k)
        for (int y = 0; y < h.order; ++y)
            if (h_elt_order[y] == g_elt_order[mg[k]] &&
                h_class_size[y] == g_class_size[mg[k]])
                cands[k].push_back(y);

    std::vector<int> imgs(d, -1);
    std::optional<std::vector<int>> result;

    auto complete = [&]() -> bool {
        std::vector<int> phi(g.order, -1);
        phi[g.identity] = h.identity;
        for (size_t i = 1; i < bfs.size(); ++i) {
            int e = bfs[i];
            phi[e] = h.mul[phi[parent[e]]][imgs[via[e]]];
        }
        std::vector<char> hit(h.order, 0);
        for (int v : phi) {
            if (v < 0 || hit[v]) return false;
            hit[v] = 1;
        }
        for (int x = 0; x < g.order; ++x)
            for (int y = 0; y < g.order; ++y)
                if (phi[g.mul[x][y]] != h.mul[phi[x]][phi[y]]) return false;
        result = std::move(phi);
        return true;
    };

    std::function<bool(int)> bt = [&](int k) -> bool {
        if (k == d) return complete();
        for (int y : cands[k]) {
            imgs[k] = y;
            std::vector<int> pre(imgs.begin(), imgs.begin() + k + 1);
            if (subgroup_generated(h, pre).size() != prefix_order[k]) continue;
            if (bt(k + 1)) return true;
        }
        imgs[k] = -1;
        return false;
    };
    bt(0);
    return result;
}

}  // namespace unitlab
