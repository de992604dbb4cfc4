#pragma once

// The group algebra KG over GF(2) or GF(4), viewed as a GF(2) bit vector of
// dimension k*|G| (k = field extension degree). For GF(4) the element
// sum_g (u_g + v_g*w) g, with w a root of w^2 = w + 1, is stored as two planes:
// plane 0 holds the u coefficients, plane 1 the v coefficients.

#include <cassert>
#include <stdexcept>
#include <string>
#include <vector>

#include "unitlab/gf2.hpp"
#include "unitlab/group.hpp"
#include "unitlab/presentation.hpp"

namespace unitlab {

enum class Field { GF2 = 1, GF4 = 2 };

inline std::string to_string(Field f) { return f == Field::GF2 ? "gf2" : "gf4"; }

// Scalar of GF(4): a + b*w.
struct F4 {
    bool a = false;
    bool b = false;
    bool operator==(const F4&) const = default;
    bool is_zero() const { return !a && !b; }
    bool is_one() const { return a && !b; }
};

class Algebra {
public:
    using Elem = BitVec;

    Algebra(const FiniteGroup& g, Field field) : g_(&g), field_(field) {
        n_ = g.order;
        k_ = field == Field::GF2 ? 1 : 2;
        dim_ = k_ * n_;
        gen_names_.reserve(g.generators.size());
        for (int gen : g.generators) gen_names_.push_back(g.name_of(gen));
    }

    const FiniteGroup& group() const { return *g_; }
    Field field() const { return field_; }
    int n() const { return n_; }
    int dim() const { return dim_; }

    Elem zero() const { return Elem(dim_); }
    Elem one() const { return basis_elem(g_->identity); }

    Elem basis_elem(int gidx, int plane = 0) const {
        check_plane(plane);
        Elem e(dim_);
        e.set(plane * n_ + gidx);
        return e;
    }

    F4 coeff(const Elem& x, int gidx) const {
        check_elem(x);
        F4 c;
        c.a = x.test(gidx);
        if (k_ == 2) c.b = x.test(n_ + gidx);
        return c;
    }

    Elem add(const Elem& x, const Elem& y) const {
        check_elem(x);
        check_elem(y);
        return x ^ y;
    }

    // Convolution product, support-driven.
    Elem mul(const Elem& x, const Elem& y) const {
        check_elem(x);
        check_elem(y);
        Elem r(dim_);
        if (k_ == 1) {
            x.for_each_set([&](int i) {
                const auto& row = g_->mul[i];
                y.for_each_set([&](int j) { r.flip(row[j]); });
            });
            return r;
        }
        // GF(4): (a1 + b1 w)(a2 + b2 w) = (a1a2 + b1b2) + (a1b2 + b1a2 + b1b2) w.
        for (int i = 0; i < n_; ++i) {
            bool a1 = x.test(i), b1 = x.test(n_ + i);
            if (!a1 && !b1) continue;
            const auto& row = g_->mul[i];
            for (int j = 0; j < n_; ++j) {
                bool a2 = y.test(j), b2 = y.test(n_ + j);
                if (!a2 && !b2) continue;
                bool r0 = (a1 && a2) != (b1 && b2);
                bool r1 = ((a1 && b2) != (b1 && a2)) != (b1 && b2);
                if (r0) r.flip(row[j]);
                if (r1) r.flip(n_ + row[j]);
            }
        }
        return r;
    }

    // Deliberately independent implementation (dense double loop over all group
    // element pairs) used to re-verify reported witnesses.
    Elem mul_reference(const Elem& x, const Elem& y) const {
        check_elem(x);
        check_elem(y);
        Elem r(dim_);
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j) {
                F4 c1 = coeff(x, i), c2 = coeff(y, j);
                bool r0 = (c1.a && c2.a) != (c1.b && c2.b);
                bool r1 = ((c1.a && c2.b) != (c1.b && c2.a)) != (c1.b && c2.b);
                int t = g_->mul[i][j];
                if (r0) r.flip(t);
                if (r1) {
                    if (k_ == 1) throw std::logic_error("mul_reference: GF(4) bits in GF(2)");
                    r.flip(n_ + t);
                }
            }
        return r;
    }

    Elem square(const Elem& x) const { return mul(x, x); }

    bool commute(const Elem& x, const Elem& y) const { return mul(x, y) == mul(y, x); }

    F4 augmentation(const Elem& x) const {
        check_elem(x);
        F4 s;
        x.for_each_set([&](int i) {
            if (i < n_)
                s.a = !s.a;
            else
                s.b = !s.b;
        });
        return s;
    }

    // Multiply by the field scalar w (GF(4) only): (u + vw) w = v + (u+v) w.
    Elem scale_w(const Elem& x) const {
        if (k_ != 2) throw std::invalid_argument("scale_w: GF(4) only");
        check_elem(x);
        Elem r(dim_);
        for (int i = 0; i < n_; ++i) {
            bool u = x.test(i), v = x.test(n_ + i);
            if (v) r.set(i);
            if (u != v) r.set(n_ + i);
        }
        return r;
    }

    // Sum of the distinct powers of g.
    Elem bar(int gidx) const {
        Elem r(dim_);
        int c = g_->identity;
        do {
            r.flip(c);
            c = g_->mul[c][gidx];
        } while (c != g_->identity);
        return r;
    }

    // L(KG): span of xy + yx; as a GF(2) space it is spanned by gh + hg and,
    // over GF(4), additionally by w(gh + hg).
    GF2Basis commutator_subspace() const {
        GF2Basis basis(dim_);
        for (int i = 0; i < n_; ++i)
            for (int j = i + 1; j < n_; ++j) {
                int p = g_->mul[i][j], q = g_->mul[j][i];
                if (p == q) continue;
                Elem v(dim_);
                v.flip(p);
                v.flip(q);
                basis.insert(v);
                if (k_ == 2) basis.insert(scale_w(v));
            }
        return basis;
    }

    // I(N): span of g(m - 1) for g in G, m in N.
    GF2Basis augmentation_ideal(const Subgroup& nsub) const {
        if (nsub.parent != g_)
            throw std::invalid_argument("augmentation_ideal: subgroup of a different group");
        GF2Basis basis(dim_);
        for (int gidx = 0; gidx < n_; ++gidx)
            for (int m : nsub.elements) {
                if (m == g_->identity) continue;
                Elem v(dim_);
                v.flip(g_->mul[gidx][m]);
                v.flip(gidx);
                basis.insert(v);
                if (k_ == 2) basis.insert(scale_w(v));
            }
        return basis;
    }

    // GF(2) basis of the augmentation-zero subspace: (g + 1) and, over GF(4),
    // w(g + 1) for g != 1.
    std::vector<Elem> augzero_basis() const {
        std::vector<Elem> basis;
        for (int p = 0; p < k_; ++p)
            for (int gidx = 0; gidx < n_; ++gidx) {
                if (gidx == g_->identity) continue;
                Elem v(dim_);
                v.set(p * n_ + gidx);
                v.flip(p * n_ + g_->identity);
                basis.push_back(v);
            }
        return basis;
    }

    // Inverse of an augmentation-1 element u: u = 1 + t with t nilpotent, so
    // u^{-1} = 1 + t + t^2 + ...
    Elem unit_inverse(const Elem& u) const {
        if (!augmentation(u).is_one())
            throw std::invalid_argument("unit_inverse: augmentation is not 1");
        Elem t = u ^ one();
        Elem acc = one();
        Elem term = t;
        int guard = 0;
        while (term.any()) {
            acc ^= term;
            term = mul(term, t);
            if (++guard > 4 * dim_)
                throw std::logic_error("unit_inverse: nilpotency bound exceeded");
        }
        return acc;
    }

    // Literal format: terms joined by '+'; each term is a word over the group's
    // generator names ('1' for the identity), optionally prefixed by the GF(4)
    // scalars 'w*' or 'w2*' (w2 = w^2 = 1 + w).
    Elem parse_literal(const std::string& text) const {
        Elem r(dim_);
        size_t pos = 0;
        while (pos <= text.size()) {
            size_t next = text.find('+', pos);
            std::string term = text.substr(
                pos, next == std::string::npos ? std::string::npos : next - pos);
            size_t b = term.find_first_not_of(" \t\n");
            size_t e = term.find_last_not_of(" \t\n");
            if (b == std::string::npos)
                throw std::invalid_argument("parse_literal: empty term");
            term = term.substr(b, e - b + 1);
            F4 scalar{true, false};
            if (term.rfind("w*", 0) == 0) {
                scalar = {false, true};
                term = term.substr(2);
            } else if (term.rfind("w2*", 0) == 0) {
                scalar = {true, true};
                term = term.substr(3);
            }
            if (scalar.b && k_ == 1)
                throw std::invalid_argument("parse_literal: GF(4) scalar over GF(2)");
            Word w = parse_word(term, gen_names_);
            int gidx = eval_word(*g_, w);
            if (scalar.a) r.flip(gidx);
            if (scalar.b) r.flip(n_ + gidx);
            if (next == std::string::npos) break;
            pos = next + 1;
        }
        return r;
    }

    std::string to_literal(const Elem& x) const {
        check_elem(x);
        std::string s;
        for (int gidx = 0; gidx < n_; ++gidx) {
            F4 c = coeff(x, gidx);
            if (c.is_zero()) continue;
            if (!s.empty()) s += " + ";
            if (c.a && c.b)
                s += "w2*";
            else if (c.b)
                s += "w*";
            s += g_->name_of(gidx);
        }
        return s.empty() ? "0" : s;
    }

private:
    void check_elem(const Elem& x) const {
        if (x.size() != dim_)
            throw std::invalid_argument("algebra: element belongs to a different algebra");
    }
    void check_plane(int p) const {
        if (p < 0 || p >= k_) throw std::invalid_argument("algebra: bad plane");
    }

    const FiniteGroup* g_;
    Field field_;
    int n_, k_, dim_;
    std::vector<std::string> gen_names_;
};

}  // namespace unitlab
