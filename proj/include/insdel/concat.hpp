#pragma once

#include <algorithm>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "insdel/align.hpp"
#include "insdel/bukhma.hpp"
#include "insdel/channel.hpp"
#include "insdel/rational.hpp"
#include "insdel/rng.hpp"
#include "insdel/seq.hpp"

namespace insdel {

// Raised when the outer list decoder would exceed its cap; never truncated
// silently.
struct OuterListOverflow : std::runtime_error {
    explicit OuterListOverflow(const std::string& what) : std::runtime_error(what) {}
};

// Contract the concatenated decoder consumes. list_decode must return every
// codeword reachable from the received string by at most delta_out * n_out
// deletions (the LCS threshold below captures exactly that), and insertions
// up to gamma_out * n_out never evict a codeword from the list.
struct OuterCodeContract {
    int sigma_out = 2;
    long long n_out = 0;
    Rational delta_out;
    Rational gamma_out;
    long long list_cap = 0;        // L_out
    std::vector<Seq> codebook;     // message m encodes to codebook[m]

    long long message_count() const { return static_cast<long long>(codebook.size()); }

    Seq encode(long long message) const {
        if (message < 0 || message >= message_count())
            throw std::domain_error("outer encode: message out of range");
        return codebook[static_cast<size_t>(message)];
    }

    // Brute force: every codeword whose LCS with the received string reaches
    // (1 - delta_out) * n_out survives.
    std::vector<long long> list_decode(const Seq& received) const {
        if (received.q() != sigma_out)
            throw std::domain_error("outer decode: alphabet mismatch");
        std::vector<long long> out;
        for (long long m = 0; m < message_count(); ++m) {
            long long match = lcs_length(received, codebook[static_cast<size_t>(m)]);
            // match >= (1 - delta_out) * n_out, exactly
            if (static_cast<__int128>(match) * delta_out.den() >=
                static_cast<__int128>(delta_out.den() - delta_out.num()) * n_out) {
                if (static_cast<long long>(out.size()) >= list_cap)
                    throw OuterListOverflow("outer list decoder exceeded cap L_out = " +
                                            std::to_string(list_cap));
                out.push_back(m);
            }
        }
        return out;
    }
};

// Seeded random outer code with brute-force threshold list decoding; a
// stand-in behind the contract so a real outer construction can be plugged
// in later. Tolerances start unset (0); the params builder fills them.
inline OuterCodeContract substitute_outer(int sigma_out, long long n_out, long long message_count,
                                          uint64_t seed) {
    if (sigma_out < 2) throw std::domain_error("substitute_outer: sigma_out must be >= 2");
    if (n_out < 1) throw std::domain_error("substitute_outer: n_out must be >= 1");
    // message_count <= sigma_out^n_out, guarded without overflow
    long double capacity = std::pow(static_cast<long double>(sigma_out),
                                    static_cast<long double>(n_out));
    if (message_count < 1 ||
        (capacity < 1e18L && message_count > static_cast<long long>(capacity)))
        throw std::domain_error("substitute_outer: message_count exceeds sigma_out^n_out");
    OuterCodeContract outer;
    outer.sigma_out = sigma_out;
    outer.n_out = n_out;
    outer.list_cap = message_count;
    Rng rng(seed);
    std::set<std::vector<int32_t>> seen;
    while (static_cast<long long>(outer.codebook.size()) < message_count) {
        Seq word = rng.random_seq(sigma_out, static_cast<size_t>(n_out));
        if (seen.insert(word.symbols()).second) outer.codebook.push_back(word);
    }
    return outer;
}

struct ConcatParams {
    Rational eps;
    int q = 2;
    long long n_in = 0;
    BukhMaCode inner;
    OuterCodeContract outer;
    Rational eps_in;

    void validate() const {
        inner.validate();
        if (inner.q != q || inner.n != n_in)
            throw std::domain_error("concat params: inner code does not match (q, n_in)");
        if (static_cast<long long>(inner.size()) < outer.sigma_out)
            throw std::domain_error("concat params: inner code smaller than outer alphabet");
        Rational cap = q == 2 ? Rational(3, 16) * eps : eps / Rational(16);
        if (eps_in > cap)
            throw std::domain_error("concat params: eps_in above " +
                                    std::string(q == 2 ? "(3/16) eps" : "eps/16"));
        if (!(Rational(0) < eps_in)) throw std::domain_error("concat params: eps_in must be > 0");
    }
};

// Binary window width: w = floor((2 - eps/4 - 3 eps (i-1)/16) / (eps/16)) + 1;
// the window itself spans w * (n_in eps / 16) symbols.
inline long long window_width(const Rational& eps, long long i) {
    if (!(Rational(0) < eps && eps < Rational(1)))
        throw std::domain_error("window_width: eps must be in (0,1)");
    long long rounds = (Rational(8) / eps).ceil();
    if (i < 1 || i > rounds) throw std::domain_error("window_width: round index out of range");
    Rational numer = Rational(2) - eps / Rational(4) -
                     Rational(3 * (i - 1), 16) * eps;
    return (numer * Rational(16) / eps).floor() + 1;
}

// q-ary window width for weighted budget z; may come out non-positive for
// late rounds whose deletion bucket cannot occur, which the decoder skips.
inline long long qary_window_width(const Rational& eps, long long i, int q, int z) {
    if (!(Rational(0) < eps && eps < Rational(1)))
        throw std::domain_error("qary_window_width: eps must be in (0,1)");
    if (q < 2) throw std::domain_error("qary_window_width: q must be >= 2");
    if (z < 1 || z > q - 1) throw std::domain_error("qary_window_width: z outside 1..q-1");
    long long rounds = (Rational(16) * Rational(q) / eps).ceil();
    if (i < 1 || i > rounds) throw std::domain_error("qary_window_width: round index out of range");
    Rational budget_coeff((2 * q - 1) * static_cast<long long>(z) -
                              static_cast<long long>(z) * z,
                          q);
    Rational numer = Rational(1) + (Rational(1) - eps / Rational(4)) * budget_coeff -
                     eps / Rational(16 * static_cast<long long>(q)) * Rational(i - 1) *
                         Rational(2 * static_cast<long long>(z) + 1);
    return (numer * Rational(16) / eps).floor() + 1;
}

// Encoding: outer-encode the message, then replace each outer symbol by the
// inner codeword of the same index. |output| = n_in * n_out.
inline Seq concat_encode(const ConcatParams& params, long long message) {
    params.validate();
    Seq outer_word = params.outer.encode(message);
    std::vector<int32_t> sym;
    sym.reserve(static_cast<size_t>(params.n_in) * outer_word.size());
    for (size_t s = 0; s < outer_word.size(); ++s) {
        Seq block = params.inner.codeword(static_cast<size_t>(outer_word[s]));
        sym.insert(sym.end(), block.symbols().begin(), block.symbols().end());
    }
    return Seq(params.q, std::move(sym));
}

namespace detail {

// One sliding-window pass: inner-decode every window, appending the outer
// symbols of the survivors (ascending period, i.e. ascending index) in
// window order.
inline void run_phase_one(const Seq& received, const ConcatParams& params, long long step,
                          long long window_len, std::vector<int32_t>* t_symbols) {
    const long long n = static_cast<long long>(received.size());
    for (long long start = 0; start < n; start += step) {
        long long len = std::min(window_len, n - start);
        Seq window = received.substr(static_cast<size_t>(start), static_cast<size_t>(len));
        InnerDecodeReport rep = inner_list_decode(window, params.inner, params.eps_in);
        for (const SurvivorInfo& s : rep.survivors)
            if (static_cast<long long>(s.index) < params.outer.sigma_out)
                t_symbols->push_back(static_cast<int32_t>(s.index));
    }
}

inline long long integral_step(const Rational& step, const char* what) {
    if (!step.is_integer() || step.num() < 1)
        throw std::domain_error(std::string(what) +
                                " must be a positive integer at these parameters (got " +
                                step.to_string() + ")");
    return step.num();
}

}  // namespace detail

// Algorithm-1 decoder. Binary: ceil(8/eps) rounds, window w_i * (n_in eps/16)
// sliding in steps of n_in eps/16. q-ary: additionally loops z = 1..q-1 with
// qary window widths and step n_in eps/(16 q). Output: deduplicated union of
// the per-round outer lists, ascending.
inline std::vector<long long> concat_decode(const Seq& received, const ConcatParams& params) {
    params.validate();
    if (received.q() != params.q) throw std::domain_error("concat_decode: alphabet mismatch");
    std::set<long long> out;
    if (received.empty()) return {};
    const Rational n_in(params.n_in);
    if (params.q == 2) {
        long long step = detail::integral_step(n_in * params.eps / Rational(16),
                                               "concat_decode: n_in*eps/16");
        long long rounds = (Rational(8) / params.eps).ceil();
        for (long long i = 1; i <= rounds; ++i) {
            std::vector<int32_t> t_symbols;
            detail::run_phase_one(received, params, step, window_width(params.eps, i) * step,
                                  &t_symbols);
            Seq t(params.outer.sigma_out, std::move(t_symbols));
            for (long long m : params.outer.list_decode(t)) out.insert(m);
        }
    } else {
        long long step = detail::integral_step(
            n_in * params.eps / Rational(16 * static_cast<long long>(params.q)),
            "concat_decode: n_in*eps/(16q)");
        long long rounds = (Rational(16) * Rational(params.q) / params.eps).ceil();
        for (int z = 1; z <= params.q - 1; ++z) {
            for (long long i = 1; i <= rounds; ++i) {
                long long w = qary_window_width(params.eps, i, params.q, z);
                if (w < 1) continue;  // deletion bucket cannot occur
                std::vector<int32_t> t_symbols;
                detail::run_phase_one(received, params, step, w * step * params.q, &t_symbols);
                Seq t(params.outer.sigma_out, std::move(t_symbols));
                for (long long m : params.outer.list_decode(t)) out.insert(m);
            }
        }
    }
    return {out.begin(), out.end()};
}

// Per-block attribution of a sequential transcript: ops interior to a block
// count toward it, ops at block seams (and ops on symbols previous seam ops
// introduced) count as boundary and belong to no block.
struct BlockErrorCounts {
    std::vector<long long> deletions;
    std::vector<long long> insertions;
    long long boundary_insertions = 0;
    long long boundary_deletions = 0;

    long long error_count(size_t block) const {
        return insertions[block] + 2 * deletions[block];
    }
    long long interior_total() const {
        long long t = 0;
        for (size_t b = 0; b < deletions.size(); ++b) t += error_count(b);
        return t;
    }
};

inline BlockErrorCounts attribute_script(const Seq& codeword, const EditScript& script,
                                         long long n_in) {
    if (n_in < 1 || static_cast<long long>(codeword.size()) % n_in != 0)
        throw std::domain_error("attribute_script: n_in must divide |codeword|");
    const long long blocks = static_cast<long long>(codeword.size()) / n_in;
    BlockErrorCounts counts;
    counts.deletions.assign(static_cast<size_t>(blocks), 0);
    counts.insertions.assign(static_cast<size_t>(blocks), 0);
    std::vector<int32_t> owner(codeword.size());
    for (size_t t = 0; t < codeword.size(); ++t)
        owner[t] = static_cast<int32_t>(static_cast<long long>(t) / n_in);
    for (size_t k = 0; k < script.ops.size(); ++k) {
        const EditOp& op = script.ops[k];
        long long n = static_cast<long long>(owner.size());
        if (op.kind == EditOp::Kind::kDelete) {
            if (op.pos < 0 || op.pos >= n)
                throw std::domain_error("attribute_script: delete out of range at op " +
                                        std::to_string(k));
            int32_t b = owner[static_cast<size_t>(op.pos)];
            if (b >= 0)
                ++counts.deletions[static_cast<size_t>(b)];
            else
                ++counts.boundary_deletions;
            owner.erase(owner.begin() + op.pos);
        } else {
            if (op.pos < 0 || op.pos > n)
                throw std::domain_error("attribute_script: insert out of range at op " +
                                        std::to_string(k));
            int32_t left = op.pos > 0 ? owner[static_cast<size_t>(op.pos - 1)] : -1;
            int32_t right = op.pos < n ? owner[static_cast<size_t>(op.pos)] : -1;
            int32_t b = (left == right && left >= 0) ? left : -1;
            if (b >= 0)
                ++counts.insertions[static_cast<size_t>(b)];
            else
                ++counts.boundary_insertions;
            owner.insert(owner.begin() + op.pos, b);
        }
    }
    return counts;
}

// Desk-scale parameter builder. The inner code is an explicit doubling
// ladder {1, 2, 4, ...} sized to the outer alphabet (its eps field, 17/20,
// certifies the ratio-2 invariant); the paper-scale geometric construction
// cannot reach sigma_out codewords at these block lengths.
struct ConcatOverrides {
    Rational delta_out;      // 0 means use the default
    Rational gamma_out;
    Rational eps_in;
    long long list_cap = 0;  // 0 means message_count
};

inline ConcatParams make_concat_params(int q, const Rational& eps, long long n_in,
                                       long long n_out, int sigma_out, long long message_count,
                                       uint64_t seed, const ConcatOverrides& over = {}) {
    ConcatParams params;
    params.q = q;
    params.eps = eps;
    params.n_in = n_in;
    std::vector<long long> periods;
    for (long long p = 1; static_cast<long long>(periods.size()) < sigma_out; p *= 2) {
        if (p > n_in)
            throw std::domain_error("make_concat_params: n_in too small for sigma_out codewords");
        periods.push_back(p);
    }
    params.inner = code_from_periods(n_in, Rational(17, 20), q, periods);
    params.eps_in = over.eps_in != Rational(0)
                        ? over.eps_in
                        : (q == 2 ? Rational(3, 16) * eps : eps / Rational(16));
    params.outer = substitute_outer(sigma_out, n_out, message_count, seed);
    long long q2 = static_cast<long long>(q) * q;
    params.outer.delta_out =
        over.delta_out != Rational(0)
            ? over.delta_out
            : (q == 2 ? Rational(1) - Rational(3, 128) * eps * eps
                      : Rational(1) - Rational(3, 128 * q2) * eps * eps);
    params.outer.gamma_out = over.gamma_out != Rational(0)
                                 ? over.gamma_out
                                 : Rational(32 * static_cast<long long>(params.inner.size())) / eps;
    if (over.list_cap > 0) params.outer.list_cap = over.list_cap;
    params.validate();
    return params;
}

}  // namespace insdel
