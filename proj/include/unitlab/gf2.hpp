#pragma once

// Bit-packed GF(2) vectors and row-reduced subspace bases.

#include <cassert>
#include <cstdint>
#include <functional>
#include <random>
#include <stdexcept>
#include <vector>

namespace unitlab {

class BitVec {
public:
    BitVec() = default;
    explicit BitVec(int bits) : bits_(bits), w_((bits + 63) / 64, 0) {}

    int size() const { return bits_; }

    bool test(int i) const {
        assert(i >= 0 && i < bits_);
        return (w_[static_cast<size_t>(i) >> 6] >> (i & 63)) & 1u;
    }
    void set(int i) {
        assert(i >= 0 && i < bits_);
        w_[static_cast<size_t>(i) >> 6] |= std::uint64_t{1} << (i & 63);
    }
    void flip(int i) {
        assert(i >= 0 && i < bits_);
        w_[static_cast<size_t>(i) >> 6] ^= std::uint64_t{1} << (i & 63);
    }

    BitVec& operator^=(const BitVec& o) {
        assert(bits_ == o.bits_);
        for (size_t k = 0; k < w_.size(); ++k) w_[k] ^= o.w_[k];
        return *this;
    }
    friend BitVec operator^(BitVec a, const BitVec& b) { return a ^= b; }

    bool operator==(const BitVec& o) const { return bits_ == o.bits_ && w_ == o.w_; }
    bool operator!=(const BitVec& o) const { return !(*this == o); }

    bool any() const {
        for (auto w : w_)
            if (w) return true;
        return false;
    }
    bool none() const { return !any(); }

    int popcount() const {
        int c = 0;
        for (auto w : w_) c += __builtin_popcountll(w);
        return c;
    }

    // Highest set bit, or -1.
    int top_bit() const {
        for (int k = static_cast<int>(w_.size()) - 1; k >= 0; --k)
            if (w_[k]) return k * 64 + 63 - __builtin_clzll(w_[k]);
        return -1;
    }

    template <typename F>
    void for_each_set(F&& f) const {
        for (size_t k = 0; k < w_.size(); ++k) {
            std::uint64_t w = w_[k];
            while (w) {
                int b = __builtin_ctzll(w);
                f(static_cast<int>(k) * 64 + b);
                w &= w - 1;
            }
        }
    }

private:
    int bits_ = 0;
    std::vector<std::uint64_t> w_;
};

// Subspace of GF(2)^n kept in reduced row-echelon form.
// Pivot of a row is its highest set bit; pivots strictly decrease down the list.
class GF2Basis {
public:
    GF2Basis() = default;
    explicit GF2Basis(int ambient) : ambient_(ambient) {}

    int ambient() const { return ambient_; }
    int rank() const { return static_cast<int>(rows_.size()); }
    const std::vector<BitVec>& rows() const { return rows_; }
    const std::vector<int>& pivots() const { return pivots_; }

    BitVec reduce(BitVec v) const {
        assert(v.size() == ambient_);
        for (size_t i = 0; i < rows_.size(); ++i)
            if (v.test(pivots_[i])) v ^= rows_[i];
        return v;
    }

    bool contains(const BitVec& v) const { return reduce(v).none(); }

    // Inserts v if independent; keeps RREF. Returns false if v was already in the span.
    bool insert(BitVec v) {
        v = reduce(v);
        if (v.none()) return false;
        int p = v.top_bit();
        for (auto& r : rows_)
            if (r.test(p)) r ^= v;
        size_t pos = 0;
        while (pos < rows_.size() && pivots_[pos] > p) ++pos;
        rows_.insert(rows_.begin() + pos, v);
        pivots_.insert(pivots_.begin() + pos, p);
        return true;
    }

    bool operator==(const GF2Basis& o) const {
        return ambient_ == o.ambient_ && rows_ == o.rows_;
    }

private:
    int ambient_ = 0;
    std::vector<BitVec> rows_;
    std::vector<int> pivots_;
};

// Kernel of the linear map determined by the images of the standard basis vectors.
inline GF2Basis kernel_from_images(const std::vector<BitVec>& images, int domain_dim) {
    assert(static_cast<int>(images.size()) == domain_dim);
    GF2Basis kernel(domain_dim);
    std::vector<BitVec> rows_f;
    std::vector<int> piv_f;
    std::vector<BitVec> rows_b;
    for (int i = 0; i < domain_dim; ++i) {
        BitVec f = images[i];
        BitVec b(domain_dim);
        b.set(i);
        for (size_t k = 0; k < rows_f.size(); ++k) {
            if (f.test(piv_f[k])) {
                f ^= rows_f[k];
                b ^= rows_b[k];
            }
        }
        if (f.none()) {
            kernel.insert(b);
        } else {
            rows_f.push_back(f);
            piv_f.push_back(f.top_bit());
            rows_b.push_back(b);
        }
    }
    return kernel;
}

// Kernel of an additive map given as a callable. The map is spot-checked for
// additivity on random pairs; a violation is a caller bug.
inline GF2Basis kernel_of_additive_map(const std::function<BitVec(const BitVec&)>& f,
                                       int domain_dim, unsigned spot_checks = 8) {
    std::vector<BitVec> images;
    images.reserve(domain_dim);
    for (int i = 0; i < domain_dim; ++i) {
        BitVec e(domain_dim);
        e.set(i);
        images.push_back(f(e));
    }
    std::mt19937 rng(0xC0FFEE);
    for (unsigned c = 0; c < spot_checks && domain_dim > 0; ++c) {
        BitVec u(domain_dim), v(domain_dim);
        for (int i = 0; i < domain_dim; ++i) {
            if (rng() & 1) u.set(i);
            if (rng() & 1) v.set(i);
        }
        BitVec lhs = f(u ^ v);
        BitVec rhs = f(u) ^ f(v);
        if (lhs != rhs) throw std::logic_error("kernel_of_additive_map: map is not additive");
    }
    return kernel_from_images(images, domain_dim);
}

// Intersection of two row spaces (Zassenhaus).
inline GF2Basis intersect(const GF2Basis& a, const GF2Basis& b) {
    assert(a.ambient() == b.ambient());
    const int n = a.ambient();
    // Rows (u|u) for u in a, (v|0) for v in b; reduced rows with zero left half
    // have right halves spanning the intersection.
    std::vector<BitVec> rows;
    std::vector<int> pivs;
    GF2Basis inter(n);
    auto wide = [&](const BitVec& left, const BitVec& right) {
        BitVec w(2 * n);
        left.for_each_set([&](int i) { w.set(n + i); });
        right.for_each_set([&](int i) { w.set(i); });
        return w;
    };
    auto add_row = [&](BitVec w) {
        for (size_t k = 0; k < rows.size(); ++k)
            if (w.test(pivs[k])) w ^= rows[k];
        if (w.none()) return;
        bool left_zero = true;
        for (int i = n; i < 2 * n && left_zero; ++i)
            if (w.test(i)) left_zero = false;
        if (left_zero) {
            BitVec r(n);
            w.for_each_set([&](int i) { r.set(i); });
            inter.insert(r);
        } else {
            rows.push_back(w);
            pivs.push_back(w.top_bit());
        }
    };
    for (const auto& u : a.rows()) add_row(wide(u, u));
    for (const auto& v : b.rows()) add_row(wide(v, BitVec(n)));
    return inter;
}

}  // namespace unitlab
