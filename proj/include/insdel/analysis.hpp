#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "insdel/align.hpp"
#include "insdel/rational.hpp"
#include "insdel/seq.hpp"

namespace insdel {

// One level of the nested-substring sampling process, with the full
// distribution enumerated instead of sampled: all statistics are exact.
struct MartingaleLevel {
    long long r = 0;  // period examined at this level
    long long l = 0;  // block length round(r * eps^2), floored at 1
    std::vector<std::vector<Rational>> freq;  // per block, length-q frequency vector
    std::vector<Rational> block_bias;         // per block (q == 2 only)
    std::vector<Rational> block_adv;          // per block, advantage against A_r
    Rational e_bias, var_bias;                // binary bias statistics
    std::vector<Rational> e_freq, var_freq;   // per-symbol frequency statistics
    Rational sum_var_freq;                    // f_i = sum_p Var(F^p_i)
    Rational e_adv;
};

struct MartingaleTrace {
    Rational eps;
    int q = 2;
    int z = 1;                // advantage order used for q > 2
    long long used_length = 0;  // |v| after truncation to a multiple of l_1
    std::string length_note;    // records truncation, if any
    std::vector<MartingaleLevel> levels;
};

// Exhaustive version of the paper's sampling process: level i splits v into
// all blocks of length l_i (the nesting is even, so the uniform nested choice
// is uniform over these blocks) and records the exact distribution of
// frequency, bias and advantage-to-A_{r_i}. periods must be descending; each
// l_{i+1} must divide l_i (domain error naming the level otherwise), and v is
// truncated to the largest multiple of l_1.
inline MartingaleTrace martingale_trace(const Seq& v, const std::vector<long long>& periods,
                                        const Rational& eps, int z = 1) {
    if (v.empty()) throw std::domain_error("martingale_trace: empty string");
    if (periods.empty()) throw std::domain_error("martingale_trace: no periods");
    if (!(Rational(0) < eps && eps < Rational(1)))
        throw std::domain_error("martingale_trace: eps must be in (0,1)");
    const int q = v.q();
    if (z < 1 || z >= q) throw std::domain_error("martingale_trace: z outside 1..q-1");

    std::vector<long long> lengths;
    for (size_t i = 0; i < periods.size(); ++i) {
        if (i > 0 && periods[i] >= periods[i - 1])
            throw std::domain_error("martingale_trace: periods must be strictly descending");
        Rational l = Rational(periods[i]) * eps * eps;
        // round to nearest, floor at 1
        long long li = (l - Rational(l.floor()) < Rational(1, 2)) ? l.floor() : l.floor() + 1;
        lengths.push_back(std::max<long long>(1, li));
    }
    for (size_t i = 1; i < lengths.size(); ++i)
        if (lengths[i - 1] % lengths[i] != 0)
            throw std::domain_error("martingale_trace: block length at level " +
                                    std::to_string(i + 1) + " does not divide level " +
                                    std::to_string(i));

    MartingaleTrace trace;
    trace.eps = eps;
    trace.q = q;
    trace.z = z;
    trace.used_length = static_cast<long long>(v.size()) / lengths[0] * lengths[0];
    if (trace.used_length == 0)
        throw std::domain_error("martingale_trace: v shorter than the first block length");
    trace.length_note = trace.used_length == static_cast<long long>(v.size())
                            ? "full length used"
                            : "truncated from " + std::to_string(v.size()) + " to " +
                                  std::to_string(trace.used_length) + " symbols";
    Seq used = v.substr(0, static_cast<size_t>(trace.used_length));

    for (size_t lev = 0; lev < periods.size(); ++lev) {
        MartingaleLevel level;
        level.r = periods[lev];
        level.l = lengths[lev];
        const long long l = level.l;
        const long long blocks = trace.used_length / l;
        level.e_freq.assign(q, Rational(0));
        level.var_freq.assign(q, Rational(0));
        std::vector<Rational> sq_freq(q, Rational(0));
        Rational sum_bias(0), sq_bias(0), sum_adv(0);
        for (long long b = 0; b < blocks; ++b) {
            Seq block = used.substr(static_cast<size_t>(b * l), static_cast<size_t>(l));
            std::vector<Rational> f = freq_vector(block);
            for (int p = 0; p < q; ++p) {
                level.e_freq[p] += f[p];
                sq_freq[p] += f[p] * f[p];
            }
            Rational adv = qary_advantage_periodic(block, level.r, q, q == 2 ? 1 : z);
            sum_adv += adv;
            level.block_adv.push_back(adv);
            if (q == 2) {
                Rational bb = f[1] - f[0];
                level.block_bias.push_back(bb);
                sum_bias += bb;
                sq_bias += bb * bb;
            }
            level.freq.push_back(std::move(f));
        }
        Rational inv(1, blocks);
        for (int p = 0; p < q; ++p) {
            level.e_freq[p] *= inv;
            level.var_freq[p] = sq_freq[p] * inv - level.e_freq[p] * level.e_freq[p];
            level.sum_var_freq += level.var_freq[p];
        }
        level.e_adv = sum_adv * inv;
        if (q == 2) {
            level.e_bias = sum_bias * inv;
            level.var_bias = sq_bias * inv - level.e_bias * level.e_bias;
        }
        trace.levels.push_back(std::move(level));
    }
    return trace;
}

// Per-block labels: j in 0..q-1 when the block's projection under the
// optimal matching lies entirely inside a j-run of A_r, otherwise U_e (-1).
// Blocks with an empty projection are classified U_e.
struct BlockClassification {
    static constexpr int kBoundary = -1;  // U_e
    std::vector<int> labels;
    long long boundary_count = 0;

    long long count(int label) const {
        long long c = 0;
        for (int v : labels) c += (v == label);
        return c;
    }
};

inline BlockClassification classify_blocks(const Seq& v, long long r, long long l) {
    if (v.empty()) throw std::domain_error("classify_blocks: empty string");
    if (l < 1 || static_cast<long long>(v.size()) % l != 0)
        throw std::domain_error("classify_blocks: block length must divide |v|");
    const int q = v.q();
    PeriodicWitness w = qary_advantage_periodic_witness(v, r, q, 1);
    std::vector<int32_t> sub(static_cast<size_t>(w.length));
    for (long long t = 0; t < w.length; ++t)
        sub[static_cast<size_t>(t)] = alternating_symbol(w.offset + t, r, q);
    Matching m = lcs(v, Seq(q, std::move(sub)));

    const long long blocks = static_cast<long long>(v.size()) / l;
    BlockClassification cls;
    cls.labels.assign(static_cast<size_t>(blocks), BlockClassification::kBoundary);
    size_t k = 0;
    for (long long b = 0; b < blocks; ++b) {
        long long first = -1, last = -1;
        while (k < m.pairs.size() && m.pairs[k].first < (b + 1) * l) {
            if (first < 0) first = m.pairs[k].second;
            last = m.pairs[k].second;
            ++k;
        }
        if (first < 0) continue;  // empty projection -> U_e
        long long run_first = (w.offset + first) / r;
        long long run_last = (w.offset + last) / r;
        if (run_first == run_last)
            cls.labels[static_cast<size_t>(b)] = static_cast<int>(run_first % q);
    }
    for (int lab : cls.labels) cls.boundary_count += (lab == BlockClassification::kBoundary);
    return cls;
}

// Largest possible sum f_1 p_1 + ... + f_q p_q subject to sum f = F,
// sum p = P, products ordered descending and f_1 p_1 <= m; the closed-form
// three-branch optimum. Branch selection compares m against FP/u^2.
inline double f_max(double big_f, double big_p, double m, int q) {
    if (big_f <= 0 || big_p <= 0 || m <= 0) throw std::domain_error("f_max: F, P, m must be > 0");
    if (q < 2) throw std::domain_error("f_max: q must be >= 2");
    const double fp = big_f * big_p;
    if (fp <= m) return fp;
    const double ratio = fp / m;  // > 1
    auto u = static_cast<long long>(std::floor(std::sqrt(ratio)));
    while (u >= 1 && static_cast<double>(u) * static_cast<double>(u) >= ratio) --u;
    while (static_cast<double>(u + 1) * static_cast<double>(u + 1) < ratio) ++u;
    // now u^2 < ratio <= (u+1)^2, i.e. FP/(u+1)^2 <= m < FP/u^2
    if (u >= q) return m * q;
    double root = std::sqrt(fp) - static_cast<double>(u) * std::sqrt(m);
    return static_cast<double>(u) * m + root * root;
}

namespace detail {

template <typename T>
bool nonpos_is_negative(const T& v) {
    return v < T(0);
}
template <typename T>
bool nonpos_unit_sum(const T& sum);
template <>
inline bool nonpos_unit_sum<double>(const double& sum) {
    return std::abs(sum - 1.0) <= 1e-9;
}
template <>
inline bool nonpos_unit_sum<Rational>(const Rational& sum) {
    return sum == Rational(1);
}

}  // namespace detail

// LHS of the non-positivity bound: with w = floor(z/2) + 1,
//   even z:  (3z+2)/2 * f*_w p_w + (2z+1) * sum_{j>w} f*_j p_j
//   odd  z:  (z+1)/2  * f*_w p_w + (2z+1) * sum_{j>w} f*_j p_j
// Callers assert <= 1. Works in double or exact Rational arithmetic.
template <typename T>
T nonpositivity_lhs(const std::vector<T>& fstar, const std::vector<T>& p, int q, int z) {
    if (q < 2 || static_cast<int>(fstar.size()) != q || static_cast<int>(p.size()) != q)
        throw std::domain_error("nonpositivity_lhs: vectors must have length q >= 2");
    if (z < 1 || z >= q) throw std::domain_error("nonpositivity_lhs: z outside 1..q-1");
    T fsum(0), psum(0);
    for (int j = 0; j < q; ++j) {
        if (detail::nonpos_is_negative(fstar[j]) || detail::nonpos_is_negative(p[j]))
            throw std::domain_error("nonpositivity_lhs: vectors must be non-negative");
        fsum += fstar[j];
        psum += p[j];
    }
    if (!detail::nonpos_unit_sum(fsum) || !detail::nonpos_unit_sum(psum))
        throw std::domain_error("nonpositivity_lhs: vectors must have unit sum");
    std::vector<T> prod(q);
    for (int j = 0; j < q; ++j) prod[j] = fstar[j] * p[j];
    for (int j = 0; j + 1 < q; ++j)
        if (prod[j] < prod[j + 1])
            throw std::domain_error("nonpositivity_lhs: products must be ordered descending");
    const int w = z / 2 + 1;
    T head = z % 2 == 0 ? T(3 * z + 2) / T(2) : T(z + 1) / T(2);
    T lhs = head * prod[w - 1];
    for (int j = w; j < q; ++j) lhs += T(2 * z + 1) * prod[j];
    return lhs;
}

struct VarianceBound {
    Rational variance;
    Rational bound;  // (xi/2)(a_0 - a_1)^2
};

// Three-valued variance bound: if the first two values each occur with
// probability at least xi, Var(X) >= (xi/2)(a_0 - a_1)^2.
inline VarianceBound three_valued_var_bound(const std::array<Rational, 3>& a,
                                            const std::array<Rational, 3>& probs,
                                            const Rational& xi) {
    Rational sum(0);
    for (const auto& pr : probs) {
        if (pr < Rational(0)) throw std::domain_error("three_valued_var_bound: negative probability");
        sum += pr;
    }
    if (sum != Rational(1)) throw std::domain_error("three_valued_var_bound: probabilities must sum to 1");
    if (probs[0] < xi || probs[1] < xi)
        throw std::domain_error("three_valued_var_bound: probs[0], probs[1] must be >= xi");
    Rational mean(0), second(0);
    for (int i = 0; i < 3; ++i) {
        mean += probs[i] * a[i];
        second += probs[i] * a[i] * a[i];
    }
    VarianceBound out;
    out.variance = second - mean * mean;
    out.bound = xi / Rational(2) * (a[0] - a[1]) * (a[0] - a[1]);
    return out;
}

}  // namespace insdel
