#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "insdel/rational.hpp"
#include "insdel/seq.hpp"

namespace insdel {

// Symbol of the infinite alternating string with run length r at position
// pos: runs of 0, then 1, ..., then q-1, cycling.
inline int32_t alternating_symbol(long long pos, long long r, int q) {
    return static_cast<int32_t>((pos / r) % q);
}

// Monotone alignment of equal symbols between two strings; interchangeable
// with a common subsequence.
struct Matching {
    std::vector<std::pair<long long, long long>> pairs;  // 0-based (i, i') into (a, b)

    size_t size() const { return pairs.size(); }

    void validate(const Seq& a, const Seq& b) const {
        long long pi = -1, pj = -1;
        for (const auto& [i, j] : pairs) {
            if (i <= pi || j <= pj)
                throw std::domain_error("matching: indices not strictly increasing");
            if (i >= static_cast<long long>(a.size()) || j >= static_cast<long long>(b.size()))
                throw std::domain_error("matching: index out of range");
            if (a[i] != b[j]) throw std::domain_error("matching: matched symbols differ");
            pi = i;
            pj = j;
        }
    }
};

// Row-wise bit-parallel LCS length kernel. Masks are built once over a; each
// push() extends the second string by one symbol and returns LCS(a, b_so_far).
// The row vector encodes the positions where the DP row increments, so its
// popcount is the LCS length; the update is the classic shift/subtract
// recurrence evaluated modulo 2^(64*words).
class BitLcs {
public:
    explicit BitLcs(const Seq& a)
        : n_(a.size()), words_((n_ + 63) / 64), masks_(static_cast<size_t>(a.q()) * words_, 0),
          row_(words_, 0) {
        for (size_t i = 0; i < n_; ++i)
            masks_[static_cast<size_t>(a[i]) * words_ + i / 64] |= uint64_t{1} << (i % 64);
    }

    void reset() {
        std::fill(row_.begin(), row_.end(), 0);
    }

    int push(int32_t symbol) {
        const uint64_t* m = masks_.data() + static_cast<size_t>(symbol) * words_;
        uint64_t carry = 1;  // the |1 of the shifted row
        uint64_t borrow = 0;
        int len = 0;
        for (size_t w = 0; w < words_; ++w) {
            uint64_t x = row_[w] | m[w];
            uint64_t y = (row_[w] << 1) | carry;
            carry = row_[w] >> 63;
            uint64_t y2 = y + borrow;
            uint64_t over = y2 < y;
            uint64_t t = x - y2;
            borrow = over | (x < y2);
            row_[w] = x & ~t;
            len += std::popcount(row_[w]);
        }
        return len;
    }

    int current() const {
        int len = 0;
        for (uint64_t w : row_) len += std::popcount(w);
        return len;
    }

private:
    size_t n_;
    size_t words_;
    std::vector<uint64_t> masks_;
    std::vector<uint64_t> row_;
};

// LCS length only; O(|a||b|/64) time, O(|a|) memory.
inline int lcs_length(const Seq& a, const Seq& b) {
    if (a.q() != b.q()) throw std::domain_error("lcs: alphabet mismatch");
    if (a.empty() || b.empty()) return 0;
    BitLcs k(a);
    int len = 0;
    for (size_t j = 0; j < b.size(); ++j) len = k.push(b[j]);
    return len;
}

// Entry j is LCS(a, b[0..j)); size |b|+1.
inline std::vector<int> lcs_prefix_lengths(const Seq& a, const Seq& b) {
    if (a.q() != b.q()) throw std::domain_error("lcs: alphabet mismatch");
    std::vector<int> out(b.size() + 1, 0);
    if (a.empty()) return out;
    BitLcs k(a);
    for (size_t j = 0; j < b.size(); ++j) out[j + 1] = k.push(b[j]);
    return out;
}

// Maximum matching via the full DP table with deterministic traceback: on
// ties the move consuming a symbol of a is preferred. Memory O(|a||b|).
inline Matching lcs(const Seq& a, const Seq& b) {
    if (a.q() != b.q()) throw std::domain_error("lcs: alphabet mismatch");
    const size_t n = a.size(), m = b.size();
    if (std::min(n, m) >= std::numeric_limits<uint16_t>::max())
        throw std::domain_error("lcs: traceback table limited to 65534-symbol strings");
    std::vector<uint16_t> dp((n + 1) * (m + 1), 0);
    auto at = [&](size_t i, size_t j) -> uint16_t& { return dp[i * (m + 1) + j]; };
    for (size_t i = 1; i <= n; ++i)
        for (size_t j = 1; j <= m; ++j) {
            uint16_t best = std::max(at(i - 1, j), at(i, j - 1));
            if (a[i - 1] == b[j - 1]) best = std::max<uint16_t>(best, at(i - 1, j - 1) + 1);
            at(i, j) = best;
        }
    Matching out;
    size_t i = n, j = m;
    while (i > 0 && j > 0) {
        if (at(i, j) == at(i - 1, j)) {
            --i;
        } else if (a[i - 1] == b[j - 1] && at(i, j) == at(i - 1, j - 1) + 1) {
            out.pairs.emplace_back(i - 1, j - 1);
            --i;
            --j;
        } else {
            --j;
        }
    }
    std::reverse(out.pairs.begin(), out.pairs.end());
    return out;
}

// adv_M = (3|M| - |a| - |b|) / |a|, exact.
inline Rational adv_of_matching(const Matching& m, const Seq& a, const Seq& b) {
    if (a.empty()) throw std::domain_error("advantage: |a| must be >= 1");
    if (a.q() != b.q()) throw std::domain_error("advantage: alphabet mismatch");
    m.validate(a, b);
    long long k = static_cast<long long>(m.size());
    return Rational(3 * k - static_cast<long long>(a.size()) - static_cast<long long>(b.size()),
                    static_cast<long long>(a.size()));
}

// adv(a, b): the matching maximizing adv_M is the LCS since adv_M is
// increasing in |M|.
inline Rational advantage(const Seq& a, const Seq& b) {
    if (a.empty()) throw std::domain_error("advantage: |a| must be >= 1");
    if (a.q() != b.q()) throw std::domain_error("advantage: alphabet mismatch");
    long long k = lcs_length(a, b);
    return Rational(3 * k - static_cast<long long>(a.size()) - static_cast<long long>(b.size()),
                    static_cast<long long>(a.size()));
}

// adv^{q,i}_M = ((2i+1)|M| - |a| - ((i+i^2)/q)|b|) / |a|. For q=2, i=1 this
// coincides with adv_M.
inline Rational qary_adv_of_matching(const Matching& m, const Seq& a, const Seq& b, int q,
                                     int order) {
    if (order < 1 || order >= q) throw std::domain_error("qary advantage: order i outside 1..q-1");
    if (a.q() != q || b.q() != q) throw std::domain_error("qary advantage: alphabet mismatch");
    if (a.empty()) throw std::domain_error("qary advantage: |a| must be >= 1");
    m.validate(a, b);
    long long k = static_cast<long long>(m.size());
    long long i = order;
    long long na = static_cast<long long>(a.size());
    long long nb = static_cast<long long>(b.size());
    return Rational(q * ((2 * i + 1) * k - na) - (i + i * i) * nb, q * na);
}

inline Rational qary_advantage(const Seq& a, const Seq& b, int q, int order) {
    if (order < 1 || order >= q) throw std::domain_error("qary advantage: order i outside 1..q-1");
    if (a.q() != q || b.q() != q) throw std::domain_error("qary advantage: alphabet mismatch");
    if (a.empty()) throw std::domain_error("qary advantage: |a| must be >= 1");
    long long k = lcs_length(a, b);
    long long i = order;
    long long na = static_cast<long long>(a.size());
    long long nb = static_cast<long long>(b.size());
    return Rational(q * ((2 * i + 1) * k - na) - (i + i * i) * nb, q * na);
}

struct PeriodicWitness {
    Rational value;
    long long offset = 0;  // start position inside one period of A_r
    long long length = 0;  // witness substring length
};

// Advantage of a against the best substring of the infinite alternating
// string (the paper defines this as a minimum but every use needs the
// maximum; see the project notes). Search space: start offsets within one
// period and lengths up to min(q|a|, qr + 2|a|) -- flanks longer than one
// period past the matched region never help, and a q-factor length gap makes
// every extension unprofitable. The unit tests validate the cap against an
// uncapped brute force on small instances.
inline PeriodicWitness qary_advantage_periodic_witness(const Seq& a, long long r, int q,
                                                       int order) {
    if (a.empty()) throw std::domain_error("advantage_periodic: |a| must be >= 1");
    if (r < 1) throw std::domain_error("advantage_periodic: period must be >= 1");
    if (order < 1 || order >= q)
        throw std::domain_error("advantage_periodic: order i outside 1..q-1");
    if (a.q() != q) throw std::domain_error("advantage_periodic: alphabet mismatch");
    const long long na = static_cast<long long>(a.size());
    const long long len_cap = std::min(static_cast<long long>(q) * na,
                                       static_cast<long long>(q) * r + 2 * na);
    const long long i = order;
    // Maximize the numerator q(2i+1)m - (i+i^2)L over (offset, L); the
    // -q|a| term and the q|a| denominator are constant.
    long long best = std::numeric_limits<long long>::min();
    long long best_off = 0, best_len = 1;
    BitLcs kernel(a);
    for (long long off = 0; off < static_cast<long long>(q) * r; ++off) {
        kernel.reset();
        for (long long len = 1; len <= len_cap; ++len) {
            long long m = kernel.push(alternating_symbol(off + len - 1, r, q));
            long long num = q * (2 * i + 1) * m - (i + i * i) * len;
            if (num > best) {
                best = num;
                best_off = off;
                best_len = len;
            }
        }
    }
    PeriodicWitness w;
    w.value = Rational(best - q * na, q * na);
    w.offset = best_off;
    w.length = best_len;
    return w;
}

inline Rational qary_advantage_periodic(const Seq& a, long long r, int q, int order) {
    return qary_advantage_periodic_witness(a, r, q, order).value;
}

// Binary case: adv(a, A_r) as max over substrings of A_r = (0^r 1^r)^inf.
inline PeriodicWitness advantage_periodic_witness(const Seq& a, long long r, int q) {
    if (q != 2) throw std::domain_error("advantage_periodic: binary form requires q == 2");
    return qary_advantage_periodic_witness(a, r, 2, 1);
}

inline Rational advantage_periodic(const Seq& a, long long r, int q) {
    return advantage_periodic_witness(a, r, q).value;
}

// Weighted edit budget: deletions cost 2z, insertions cost 1.
struct BudgetWeights {
    long long deletion_weight;       // == 2z
    long long insertion_weight = 1;  // fixed
    long long z;

    static BudgetWeights for_z(long long z) {
        if (z < 1) throw std::domain_error("budget weights: z must be >= 1");
        return BudgetWeights{2 * z, 1, z};
    }
};

struct EditBudget {
    long long deletions = 0;
    long long insertions = 0;
    long long cost = 0;
};

// Minimal (D, I, I + 2zD) over edit scripts turning x into w. The cost
// equals |w| + 2z|x| - (2z+1)|M|, decreasing in |M|, so the LCS minimizes it.
inline EditBudget min_edit_budget(const Seq& x, const Seq& w, const BudgetWeights& weights) {
    if (x.q() != w.q()) throw std::domain_error("min_edit_budget: alphabet mismatch");
    if (weights.z < 1 || weights.deletion_weight != 2 * weights.z || weights.insertion_weight != 1)
        throw std::domain_error("min_edit_budget: malformed weights");
    long long m = lcs_length(x, w);
    EditBudget b;
    b.deletions = static_cast<long long>(x.size()) - m;
    b.insertions = static_cast<long long>(w.size()) - m;
    b.cost = b.insertions + weights.deletion_weight * b.deletions;
    return b;
}

}  // namespace insdel
