#pragma once

// Decision procedures on involutions of the normalized unit group V(KG).
//
// In characteristic 2, x is an involution of V(KG) iff x = 1 + z with z != 0,
// z^2 = 0 and chi(z) = 0 (since (1+z)^2 = 1 + z^2). All such z live in the
// square-zero kernel W = { z : chi(z) = 0, z^2 in L(KG) }, a GF(2) subspace,
// which is enumerated in Gray-code order with incremental updates of z^2.

#include <atomic>
#include <chrono>
#include <cstdint>
#include <functional>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "unitlab/algebra.hpp"
#include "unitlab/gf2.hpp"
#include "unitlab/todd_coxeter.hpp"

namespace unitlab {

struct DimensionExceeded : std::runtime_error {
    DimensionExceeded(int dim, int max_dim)
        : std::runtime_error("square-zero kernel dimension " + std::to_string(dim) +
                             " exceeds limit " + std::to_string(max_dim)) {}
};

inline constexpr int kDefaultMaxDim = 30;

// W = { z : chi(z) = 0, z^2 in L(KG) }. Computed as the kernel of the additive
// map z -> z^2 mod L(KG) restricted to the augmentation-zero subspace.
// Squaring is GF(2)-additive modulo L by the polarization identity
// (x+y)^2 = x^2 + y^2 + (xy + yx).
inline GF2Basis square_zero_kernel(const Algebra& alg) {
    const std::vector<BitVec> az = alg.augzero_basis();
    const int m = static_cast<int>(az.size());
    const GF2Basis L = alg.commutator_subspace();
    auto embed = [&](const BitVec& coords) {
        BitVec z(alg.dim());
        coords.for_each_set([&](int i) { z ^= az[i]; });
        return z;
    };
    GF2Basis coord_kernel = kernel_of_additive_map(
        [&](const BitVec& coords) { return L.reduce(alg.square(embed(coords))); }, m);
    GF2Basis w(alg.dim());
    for (const auto& row : coord_kernel.rows()) w.insert(embed(row));
    return w;
}

namespace detail {

inline std::uint64_t to_u64(const BitVec& v) {
    std::uint64_t r = 0;
    v.for_each_set([&](int i) { r |= std::uint64_t{1} << i; });
    return r;
}

inline BitVec from_u64(std::uint64_t v, int dim) {
    BitVec r(dim);
    while (v) {
        r.set(__builtin_ctzll(v));
        v &= v - 1;
    }
    return r;
}

// Gray-code scan over span(basis) on the packed 64-bit representation
// (requires alg.dim() <= 64). For every nonzero z with z^2 == 0 the visitor is
// called; returning false stops all workers. The visitor may be called from
// several threads and must synchronize internally.
inline void scan_u64(const Algebra& alg, const std::vector<BitVec>& basis, int workers,
                     const std::function<bool(const BitVec&)>& visit) {
    const int d = static_cast<int>(basis.size());
    const int dim = alg.dim();
    std::vector<std::uint64_t> b(d), sq(d);
    for (int i = 0; i < d; ++i) {
        b[i] = to_u64(basis[i]);
        sq[i] = to_u64(alg.square(basis[i]));
    }
    // cross[j*d + i] = b_i b_j + b_j b_i
    std::vector<std::uint64_t> cross(static_cast<size_t>(d) * d, 0);
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j) {
            std::uint64_t c =
                to_u64(alg.mul(basis[i], basis[j]) ^ alg.mul(basis[j], basis[i]));
            cross[static_cast<size_t>(j) * d + i] = c;
            cross[static_cast<size_t>(i) * d + j] = c;
        }

    const std::uint64_t total = std::uint64_t{1} << d;
    workers = std::max(1, std::min<int>(workers, 64));
    std::atomic<bool> stop{false};

    auto run_range = [&](std::uint64_t lo, std::uint64_t hi) {
        // State for step m covers gray(m) = m ^ (m >> 1); initialize at lo - 1.
        std::uint64_t g0 = (lo - 1) ^ ((lo - 1) >> 1);
        BitVec z0(dim);
        for (int i = 0; i < d; ++i)
            if ((g0 >> i) & 1) z0 ^= basis[i];
        std::uint64_t z = to_u64(z0);
        std::uint64_t z2 = to_u64(alg.square(z0));
        std::vector<std::uint64_t> s(d, 0);
        for (int i = 0; i < d; ++i)
            s[i] = to_u64(alg.mul(z0, basis[i]) ^ alg.mul(basis[i], z0));
        for (std::uint64_t m = lo; m < hi; ++m) {
            if ((m & 0xFFF) == 0 && stop.load(std::memory_order_relaxed)) return;
            const int j = __builtin_ctzll(m);
            z ^= b[j];
            z2 ^= sq[j] ^ s[j];
            const std::uint64_t* cj = &cross[static_cast<size_t>(j) * d];
            for (int i = 0; i < d; ++i) s[i] ^= cj[i];
            if (z2 == 0) {
                if (!visit(from_u64(z, dim))) {
                    stop.store(true, std::memory_order_relaxed);
                    return;
                }
            }
        }
    };

    if (workers == 1 || total < 4096) {
        run_range(1, total);
        return;
    }
    std::vector<std::thread> threads;
    std::uint64_t chunk = (total - 1) / workers + 1;
    for (int t = 0; t < workers; ++t) {
        std::uint64_t lo = std::max<std::uint64_t>(1, t * chunk);
        std::uint64_t hi = std::min<std::uint64_t>(total, (t + 1) * chunk);
        if (lo >= hi) continue;
        threads.emplace_back(run_range, lo, hi);
    }
    for (auto& th : threads) th.join();
}

// Generic fallback for dimensions above 64 bits; single-threaded.
inline void scan_generic(const Algebra& alg, const std::vector<BitVec>& basis,
                         const std::function<bool(const BitVec&)>& visit) {
    const int d = static_cast<int>(basis.size());
    std::vector<BitVec> sq(d), s(d, BitVec(alg.dim()));
    for (int i = 0; i < d; ++i) sq[i] = alg.square(basis[i]);
    std::vector<BitVec> cross(static_cast<size_t>(d) * d, BitVec(alg.dim()));
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j) {
            BitVec c = alg.mul(basis[i], basis[j]) ^ alg.mul(basis[j], basis[i]);
            cross[static_cast<size_t>(j) * d + i] = c;
            cross[static_cast<size_t>(i) * d + j] = c;
        }
    BitVec z(alg.dim()), z2(alg.dim());
    const std::uint64_t total = std::uint64_t{1} << d;
    for (std::uint64_t m = 1; m < total; ++m) {
        const int j = __builtin_ctzll(m);
        z ^= basis[j];
        z2 ^= sq[j];
        z2 ^= s[j];
        for (int i = 0; i < d; ++i) s[i] ^= cross[static_cast<size_t>(j) * d + i];
        if (z2.none() && !visit(z)) return;
    }
}

inline void scan_square_zero(const Algebra& alg, const std::vector<BitVec>& basis,
                             int workers,
                             const std::function<bool(const BitVec&)>& visit) {
    if (static_cast<int>(basis.size()) >= 63)
        throw std::invalid_argument("scan_square_zero: basis too large to enumerate");
    if (alg.dim() <= 64)
        scan_u64(alg, basis, workers, visit);
    else
        scan_generic(alg, basis, visit);
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Verdicts

struct Verdict {
    enum class Tag { Good, Bad, Unknown };
    Tag tag = Tag::Unknown;
    int kernel_dim = -1;
    long long involution_count = -1;  // number of involutions seen (Good verdicts)
    std::optional<std::pair<BitVec, BitVec>> witness;  // noncommuting involutions
    std::string note;
    double elapsed_seconds = 0;
};

inline std::string to_string(Verdict::Tag t) {
    switch (t) {
        case Verdict::Tag::Good: return "good";
        case Verdict::Tag::Bad: return "bad";
        default: return "unknown";
    }
}

// Re-verifies a claimed noncommuting involution pair with the independent
// reference multiplication; throws if the claim does not hold up.
inline void reverify_witness(const Algebra& alg, const BitVec& x, const BitVec& y) {
    const BitVec one = alg.one();
    if (!alg.augmentation(x).is_one() || !alg.augmentation(y).is_one())
        throw std::logic_error("witness: augmentation is not 1");
    if (alg.mul_reference(x, x) != one || alg.mul_reference(y, y) != one)
        throw std::logic_error("witness: square is not 1");
    if (alg.mul_reference(x, y) == alg.mul_reference(y, x))
        throw std::logic_error("witness: pair commutes");
}

// Enumerates the involutions 1+z of V(KG) (dimension permitting) and checks
// that they pairwise commute. A GF(2) basis of the accepted z's is maintained;
// since commuting-with-z is additive in the other argument, testing each new z
// against the basis rows covers the whole accepted span. Basis rows are sums
// of pairwise-commuting square-zero elements and are therefore square-zero
// themselves, so reported witnesses are genuine involutions.
inline Verdict all_involutions_commute(const Algebra& alg, int max_dim = kDefaultMaxDim,
                                       int workers = 1) {
    const auto t0 = std::chrono::steady_clock::now();
    Verdict v;
    GF2Basis w = square_zero_kernel(alg);
    v.kernel_dim = w.rank();
    auto finish = [&](Verdict::Tag tag) {
        v.tag = tag;
        v.elapsed_seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        return v;
    };
    if (is_abelian(alg.group())) {
        // Commutative algebra: all units commute.
        v.note = "abelian group: the group algebra is commutative";
        v.involution_count = v.kernel_dim < 62 ? (1LL << v.kernel_dim) - 1 : -1;
        return finish(Verdict::Tag::Good);
    }
    if (v.kernel_dim > max_dim) {
        v.note = "kernel dimension " + std::to_string(v.kernel_dim) +
                 " exceeds max_dim " + std::to_string(max_dim);
        return finish(Verdict::Tag::Unknown);
    }
    std::mutex mu;
    GF2Basis accepted(alg.dim());
    long long count = 0;
    bool bad = false;
    detail::scan_square_zero(alg, w.rows(), workers, [&](const BitVec& z) {
        std::lock_guard<std::mutex> lock(mu);
        if (bad) return false;
        ++count;
        if (accepted.contains(z)) return true;
        for (const auto& u : accepted.rows()) {
            if (!alg.commute(z, u)) {
                BitVec x = z ^ alg.one();
                BitVec y = u ^ alg.one();
                reverify_witness(alg, x, y);
                v.witness = {x, y};
                bad = true;
                return false;
            }
        }
        accepted.insert(z);
        return true;
    });
    if (bad) return finish(Verdict::Tag::Bad);
    v.involution_count = count;
    return finish(Verdict::Tag::Good);
}

// All involutions of V(KG), as explicit elements 1+z. Intended for small
// kernels; throws DimensionExceeded otherwise.
inline std::vector<BitVec> enumerate_involutions(const Algebra& alg,
                                                 int max_dim = kDefaultMaxDim) {
    GF2Basis w = square_zero_kernel(alg);
    if (w.rank() > max_dim) throw DimensionExceeded(w.rank(), max_dim);
    std::vector<BitVec> out;
    std::mutex mu;
    detail::scan_square_zero(alg, w.rows(), 1, [&](const BitVec& z) {
        std::lock_guard<std::mutex> lock(mu);
        out.push_back(z ^ alg.one());
        return true;
    });
    return out;
}

// ---------------------------------------------------------------------------
// Omega(V) = 1 + I(Omega(G))

struct OmegaCheck {
    bool holds = false;
    bool partial = false;  // only the containment direction was checked
    std::string diagnostic;
    int ideal_dim = 0;
    long long square_zero_count = -1;
};

inline OmegaCheck omega_v_equals_ideal(const Algebra& alg, int max_dim = kDefaultMaxDim,
                                       int workers = 1) {
    OmegaCheck r;
    const FiniteGroup& g = alg.group();
    Subgroup om = omega_subgroup(g);
    GF2Basis ideal = alg.augmentation_ideal(om);
    r.ideal_dim = ideal.rank();
    // Containment 1 + I(Omega(G)) <= Omega(V) u {1}: if every basis element of
    // the ideal squares to zero and the basis elements pairwise commute, then
    // by polarization every z in the ideal has z^2 = 0.
    const auto& rows = ideal.rows();
    for (const auto& b : rows)
        if (alg.square(b).any()) {
            r.diagnostic = "ideal basis element with nonzero square: " + alg.to_literal(b);
            return r;
        }
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = i + 1; j < rows.size(); ++j)
            if (!alg.commute(rows[i], rows[j])) {
                r.diagnostic = "noncommuting ideal basis pair: " +
                               alg.to_literal(rows[i]) + " ; " + alg.to_literal(rows[j]);
                return r;
            }
    // Containment Omega(V) <= 1 + I(Omega(G)): every square-zero z must lie in
    // the ideal.
    GF2Basis w = square_zero_kernel(alg);
    if (w.rank() > max_dim) {
        r.holds = true;
        r.partial = true;
        r.diagnostic = "kernel dimension " + std::to_string(w.rank()) +
                       " exceeds max_dim; only the ideal-side containment checked";
        return r;
    }
    std::mutex mu;
    long long count = 0;
    bool ok = true;
    detail::scan_square_zero(alg, w.rows(), workers, [&](const BitVec& z) {
        std::lock_guard<std::mutex> lock(mu);
        ++count;
        if (!ideal.contains(z)) {
            ok = false;
            r.diagnostic = "square-zero element outside the ideal: " + alg.to_literal(z);
            return false;
        }
        return true;
    });
    r.square_zero_count = count;
    r.holds = ok;
    return r;
}

// ---------------------------------------------------------------------------
// Witnesses

inline bool verify_witness_pair(const Algebra& alg, const std::string& lit1,
                                const std::string& lit2) {
    BitVec x1 = alg.parse_literal(lit1);
    BitVec x2 = alg.parse_literal(lit2);
    if (!alg.augmentation(x1).is_one() || !alg.augmentation(x2).is_one())
        throw std::invalid_argument("verify_witness_pair: literal is not augmentation-1");
    const BitVec one = alg.one();
    bool ok = alg.square(x1) == one && alg.square(x2) == one &&
              alg.mul(x1, x2) != alg.mul(x2, x1);
    bool ok_ref = alg.mul_reference(x1, x1) == one && alg.mul_reference(x2, x2) == one &&
                  alg.mul_reference(x1, x2) != alg.mul_reference(x2, x1);
    if (ok != ok_ref)
        throw std::logic_error("verify_witness_pair: multiplication paths disagree");
    return ok;
}

// Hard-coded witness pairs for the three order-64 bad groups, over the
// presentations in which the pairs are stated.
struct Section2Witness {
    std::string host_name;
    FiniteGroup host;
    std::string lit1;
    std::string lit2;
};

inline std::vector<Section2Witness> section2_witnesses() {
    std::vector<Section2Witness> out;
    {
        FiniteGroup q8 = todd_coxeter(builtin("Q8"), 1000);
        FiniteGroup q8q8 =
            with_generator_names(direct_product(q8, q8), {"a", "b", "c", "d"});
        out.push_back({"Q8xQ8", std::move(q8q8),
                       "1+a+b*c^2+c+a*b*c+a^2*d+a*b*d+a*c*d+b*c*d", "1+b+b*c^2"});
    }
    {
        FiniteGroup h = todd_coxeter(
            "gens: a,b,d,f; rels: a^4=b^4=1, f^2=d^2=a^2, [a,b]=1, "
            "[a,d]=[b,f]=[d,f]=b^2, [b,d]=a^2, [a,f]=a^2*b^2",
            2000);
        out.push_back({"H245", std::move(h),
                       "1+a+a*b+d+a^2*b*d+f+b*f+a*b^2*d*f+a^3*b^3*d*f", "1+b+b^3"});
    }
    {
        FiniteGroup h = todd_coxeter(
            "gens: a,b,d,f; rels: a^4=d^4=1, b^2=a^2=[a,b], f^2=d^2=[d,f], "
            "[a,d]=[b,d]=[b,f]=1, [a,f]=a^2",
            2000);
        out.push_back({"S22oQ8", std::move(h),
                       "1+d^2*a+b+a^3*d+b*d+f+a*b*f+d*f+a*b*d*f", "1+b+b*d^2"});
    }
    return out;
}

// Constructive search for a noncommuting involution pair. Tries, in order:
// (a) pairs of group involutions; (b) 1+(a+1)g for a an involution of G;
// (c) 1+(1+c^2)(c+b), 1+(1+c^2)(c+cb) for c of order 8; (d) square-zero
// perturbations 1+g(1+g^{2^{t-2}})(1+b) for g of order 2^t >= 8; (e) the
// hard-coded pairs above, transported through an explicit isomorphism.
// Absence of a result does NOT imply the group is good.
inline std::optional<std::pair<BitVec, BitVec>> witness_search(const Algebra& alg) {
    const FiniteGroup& g = alg.group();
    const BitVec one = alg.one();
    std::vector<BitVec> pool;
    std::optional<std::pair<BitVec, BitVec>> found;
    auto try_add = [&](const BitVec& x) -> bool {
        for (const auto& y : pool)
            if (!alg.commute(x, y)) {
                reverify_witness(alg, x, y);
                found = {x, y};
                return true;
            }
        if (pool.size() < 512) pool.push_back(x);
        return false;
    };
    // (a)
    for (int a : involutions_of(g))
        if (try_add(alg.basis_elem(a))) return found;
    // (b)
    for (int a : involutions_of(g))
        for (int h = 0; h < g.order; ++h) {
            BitVec z = alg.basis_elem(g.mul[a][h]) ^ alg.basis_elem(h);
            if (z.any() && alg.square(z).none() && try_add(z ^ one)) return found;
        }
    // (c)
    for (int c = 0; c < g.order; ++c) {
        if (element_order(g, c) != 8) continue;
        int c2 = g.mul[c][c];
        BitVec t = one ^ alg.basis_elem(c2);
        for (int b = 0; b < g.order; ++b) {
            BitVec z1 = alg.mul(t, alg.basis_elem(c) ^ alg.basis_elem(b));
            BitVec z2 = alg.mul(t, alg.basis_elem(c) ^ alg.basis_elem(g.mul[c][b]));
            if (z1.none() || z2.none()) continue;
            if (alg.square(z1).any() || alg.square(z2).any()) continue;
            BitVec x1 = z1 ^ one, x2 = z2 ^ one;
            if (!alg.commute(x1, x2)) {
                reverify_witness(alg, x1, x2);
                return std::make_pair(x1, x2);
            }
        }
    }
    // (d)
    for (int x = 0; x < g.order; ++x) {
        int o = element_order(g, x);
        if (o < 8) continue;
        int h = element_power(g, x, o / 4);
        BitVec gx = alg.basis_elem(x);
        BitVec f1 = one ^ alg.basis_elem(h);
        for (int b = 0; b < g.order; ++b) {
            BitVec z = alg.mul(alg.mul(gx, f1), one ^ alg.basis_elem(b));
            if (z.any() && alg.square(z).none() && try_add(z ^ one)) return found;
        }
    }
    // (e)
    for (const auto& s2 : section2_witnesses()) {
        if (s2.host.order != g.order) continue;
        auto phi = isomorphism_test(s2.host, g);
        if (!phi) continue;
        Algebra host_alg(s2.host, Field::GF2);
        auto transport = [&](const std::string& lit) {
            BitVec src = host_alg.parse_literal(lit);
            BitVec dst(alg.dim());
            src.for_each_set([&](int i) { dst.flip((*phi)[i]); });
            return dst;
        };
        BitVec x1 = transport(s2.lit1), x2 = transport(s2.lit2);
        if (alg.square(x1) == one && alg.square(x2) == one && !alg.commute(x1, x2)) {
            reverify_witness(alg, x1, x2);
            return std::make_pair(x1, x2);
        }
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Lemma oracles

// For an abelian group over GF(2): exhaustively confirms that
// { z in KG : z^2 = 0 } coincides with I(Omega(G)).
inline bool lemma4_oracle(const Algebra& alg) {
    const FiniteGroup& g = alg.group();
    if (!is_abelian(g)) throw std::invalid_argument("lemma4_oracle: group is not abelian");
    if (alg.field() != Field::GF2)
        throw std::invalid_argument("lemma4_oracle: GF(2) only");
    if (g.order > 20) throw std::invalid_argument("lemma4_oracle: group too large");
    GF2Basis ideal = alg.augmentation_ideal(omega_subgroup(g));
    std::vector<BitVec> basis;
    for (int i = 0; i < g.order; ++i) basis.push_back(alg.basis_elem(i));
    long long count = 0;
    bool ok = true;
    std::mutex mu;
    detail::scan_square_zero(alg, basis, 1, [&](const BitVec& z) {
        std::lock_guard<std::mutex> lock(mu);
        ++count;
        if (!ideal.contains(z)) {
            ok = false;
            return false;
        }
        return true;
    });
    return ok && count == (1LL << ideal.rank()) - 1;
}

// For H = C_{2^n} over GF(2), 2 <= n <= 4: checks exhaustively that whenever
// v^2 lies in the span of { v * c^i * (1 + c^{2^{n-1}}) : i }, then v^2 = 0.
inline bool lemma5_oracle(int n) {
    if (n < 2 || n > 4) throw std::invalid_argument("lemma5_oracle: need 2 <= n <= 4");
    const int N = 1 << n;
    const int half = N / 2;
    // Element c^k has index k; v is a bitmask over exponents.
    auto rot = [&](std::uint32_t v, int i) -> std::uint32_t {
        return ((v << i) | (v >> (N - i))) & ((1u << N) - 1u);
    };
    std::vector<std::uint32_t> sq(N);
    for (int k = 0; k < N; ++k) sq[k] = 1u << ((2 * k) % N);
    for (std::uint32_t v = 0; v < (1u << N); ++v) {
        // Squaring is additive in a commutative algebra of characteristic 2.
        std::uint32_t v2 = 0;
        for (int k = 0; k < N; ++k)
            if ((v >> k) & 1) v2 ^= sq[k];
        if (v2 == 0) continue;
        // Row-reduce the spanning vectors v * c^i * (1 + c^{half}).
        std::uint32_t rows[32];
        int pivs[32];
        int nrows = 0;
        for (int i = 0; i < N; ++i) {
            std::uint32_t r = rot(v, i % N) ^ rot(v, (i + half) % N);
            for (int t = 0; t < nrows; ++t)
                if ((r >> pivs[t]) & 1) r ^= rows[t];
            if (r) {
                rows[nrows] = r;
                pivs[nrows] = 31 - __builtin_clz(r);
                ++nrows;
            }
        }
        std::uint32_t red = v2;
        for (int t = 0; t < nrows; ++t)
            if ((red >> pivs[t]) & 1) red ^= rows[t];
        if (red == 0) return false;  // v^2 in the span but v^2 != 0
    }
    return true;
}

}  // namespace unitlab
