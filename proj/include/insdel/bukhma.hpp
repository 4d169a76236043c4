#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "insdel/align.hpp"
#include "insdel/rational.hpp"
#include "insdel/seq.hpp"

namespace insdel {

// Prefix of length l of the infinite alternating string with run length r:
// r copies of 0, r copies of 1, ..., r copies of q-1, cycling.
inline Seq alternating_prefix(long long r, long long l, int q) {
    if (r < 1) throw std::domain_error("alternating_prefix: period must be >= 1");
    if (l < 0) throw std::domain_error("alternating_prefix: negative length");
    std::vector<int32_t> sym(static_cast<size_t>(l));
    for (long long t = 0; t < l; ++t) sym[t] = alternating_symbol(t, r, q);
    return Seq(q, std::move(sym));
}

// Bukh-Ma code: codewords are length-n prefixes of alternating strings whose
// periods grow geometrically by at least 1/eps^4.
struct BukhMaCode {
    long long n = 0;
    Rational eps;
    int q = 2;
    std::vector<long long> periods;  // ascending, periods[0] == 1

    size_t size() const { return periods.size(); }

    Seq codeword(size_t k) const {
        if (k >= periods.size()) throw std::domain_error("bukhma: codeword index out of range");
        return alternating_prefix(periods[k], n, q);
    }

    void validate() const {
        if (n < 1) throw std::domain_error("bukhma: block length must be >= 1");
        if (!(Rational(0) < eps && eps < Rational(1)))
            throw std::domain_error("bukhma: eps must be in (0,1)");
        if (periods.empty() || periods.front() != 1)
            throw std::domain_error("bukhma: periods must start at 1");
        // ratio check r_{k+1}/r_k >= 1/eps^4, exactly: r_{k+1} a^4 >= r_k b^4
        // for eps = a/b.
        __int128 a4 = ipow4(eps.num()), b4 = ipow4(eps.den());
        for (size_t k = 0; k + 1 < periods.size(); ++k) {
            if (periods[k + 1] <= periods[k])
                throw std::domain_error("bukhma: periods must be strictly ascending");
            if (static_cast<__int128>(periods[k + 1]) * a4 < static_cast<__int128>(periods[k]) * b4)
                throw std::domain_error("bukhma: period ratio below 1/eps^4 after index " +
                                        std::to_string(k));
        }
        if (periods.back() > n) throw std::domain_error("bukhma: period exceeds block length");
    }

    static __int128 ipow4(long long v) {
        __int128 x = v;
        return x * x * x * x;
    }
};

// Periods round((1/eps^4)^k) for k with (1/eps^4)^k < n, deduplicated, with
// any period whose ratio to its predecessor fell below 1/eps^4 after rounding
// dropped. A code of size 1 is legal when n admits no second period.
inline BukhMaCode build_code(long long n, const Rational& eps, int q) {
    if (!(Rational(0) < eps && eps < Rational(1)))
        throw std::domain_error("build_code: eps must be in (0,1)");
    if (n < 1) throw std::domain_error("build_code: n must be >= 1");
    BukhMaCode code;
    code.n = n;
    code.eps = eps;
    code.q = q;
    // (1/eps^4)^k iterated in long double; exact for the dyadic eps used in
    // practice and far below rounding ambiguity at desk scale otherwise.
    long double base = std::pow(static_cast<long double>(eps.den()) / eps.num(), 4.0L);
    long double value = 1.0L;
    std::vector<long long> raw;
    while (value < static_cast<long double>(n)) {
        raw.push_back(static_cast<long long>(std::llroundl(value)));
        value *= base;
    }
    __int128 a4 = BukhMaCode::ipow4(eps.num()), b4 = BukhMaCode::ipow4(eps.den());
    for (long long p : raw) {
        if (p > n) break;
        if (!code.periods.empty()) {
            long long prev = code.periods.back();
            if (p <= prev) continue;  // rounding collision
            if (static_cast<__int128>(p) * a4 < static_cast<__int128>(prev) * b4)
                continue;  // ratio invariant violated after rounding
        }
        code.periods.push_back(p);
    }
    code.validate();
    return code;
}

// Desk-scale escape hatch: an explicit period ladder (e.g. to guarantee a
// code size) validated against the same invariants.
inline BukhMaCode code_from_periods(long long n, const Rational& eps, int q,
                                    std::vector<long long> periods) {
    BukhMaCode code;
    code.n = n;
    code.eps = eps;
    code.q = q;
    code.periods = std::move(periods);
    code.validate();
    return code;
}

struct SurvivorInfo {
    size_t index = 0;        // codeword index in the code (ascending period)
    long long period = 0;
    long long deletions = 0;   // D of min_edit_budget(codeword, w)
    long long insertions = 0;  // I of min_edit_budget(codeword, w)
    int z_witness = 1;         // smallest z whose budget admits the codeword
};

struct InnerDecodeReport {
    std::vector<SurvivorInfo> survivors;  // ascending by period
    size_t list_size = 0;
};

namespace detail {

// I + 2zD <= (1-eps) * n * ((2q-1)z - z^2)/q, compared exactly.
inline bool budget_admits(long long ins, long long del, long long z, long long n, int q,
                          const Rational& eps) {
    __int128 lhs = static_cast<__int128>(ins + 2 * z * del) * eps.den() * q;
    __int128 rhs = static_cast<__int128>(eps.den() - eps.num()) * n * ((2 * q - 1) * z - z * z);
    return lhs <= rhs;
}

}  // namespace detail

// Brute-force list decoder: codeword x survives iff some z in 1..q-1 admits
// its minimal budget (for q=2 this is exactly I + 2D <= (1-eps)n). If w was
// produced from x by any script within the budget, x survives, because the
// LCS minimizes (D, I) jointly.
inline InnerDecodeReport inner_list_decode(const Seq& w, const BukhMaCode& code,
                                           const Rational& eps) {
    if (w.q() != code.q) throw std::domain_error("inner_list_decode: alphabet mismatch");
    InnerDecodeReport report;
    BitLcs kernel(w);
    for (size_t k = 0; k < code.periods.size(); ++k) {
        // LCS(w, codeword) streamed against the alternating string; no
        // codeword materialization.
        kernel.reset();
        long long m = 0;
        for (long long t = 0; t < code.n; ++t)
            m = kernel.push(alternating_symbol(t, code.periods[k], code.q));
        long long del = code.n - m;
        long long ins = static_cast<long long>(w.size()) - m;
        for (int z = 1; z < code.q; ++z) {
            if (detail::budget_admits(ins, del, z, code.n, code.q, eps)) {
                report.survivors.push_back(SurvivorInfo{k, code.periods[k], del, ins, z});
                break;
            }
        }
    }
    report.list_size = report.survivors.size();
    return report;
}

}  // namespace insdel
