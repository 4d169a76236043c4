#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "insdel/channel.hpp"
#include "insdel/rational.hpp"
#include "insdel/seq.hpp"

namespace insdel {

// The feasibility polygon F_q as exact rational (gamma, delta) vertices.
struct Region {
    int q = 2;
    std::vector<std::pair<Rational, Rational>> vertices;
};

// Vertices (i(i-1)/q, (q-i)/q) for i = 1..q ordered by increasing gamma,
// then (0, 0).
inline Region region_vertices(int q) {
    if (q < 2) throw std::domain_error("region: q must be >= 2");
    Region region;
    region.q = q;
    for (long long i = 1; i <= q; ++i)
        region.vertices.emplace_back(Rational(i * (i - 1), q), Rational(q - i, q));
    region.vertices.emplace_back(Rational(0), Rational(0));
    return region;
}

// gamma * a + delta * b = c with a = 1, b = 2i, c = ((2q-1)i - i^2)/q; the
// line through the polygon vertices for i and i+1.
struct BoundaryLine {
    Rational a, b, c;
};

inline BoundaryLine boundary_line(int q, int i) {
    if (i < 1 || i > q - 1) throw std::domain_error("boundary_line: i outside 1..q-1");
    long long il = i;
    return BoundaryLine{Rational(1), Rational(2 * il), Rational((2 * q - 1) * il - il * il, q)};
}

struct ContainsResult {
    bool inside = false;
    std::optional<int> z_witness;  // smallest admitting z
};

// Membership in (1-shrink) F_q. The region is the union over z of the
// half-planes under the boundary lines; the polygon border is excluded
// except the two half-open axis segments, which the strict comparison
// below admits automatically.
inline ContainsResult contains(int q, const Rational& gamma, const Rational& delta,
                               const Rational& shrink) {
    if (q < 2) throw std::domain_error("contains: q must be >= 2");
    if (gamma < Rational(0) || delta < Rational(0))
        throw std::domain_error("contains: gamma and delta must be non-negative");
    if (shrink < Rational(0) || shrink >= Rational(1))
        throw std::domain_error("contains: shrink must be in [0,1)");
    for (int z = 1; z <= q - 1; ++z) {
        Rational lhs = gamma + Rational(2 * static_cast<long long>(z)) * delta;
        Rational rhs = (Rational(1) - shrink) * boundary_line(q, z).c;
        if (lhs < rhs) return ContainsResult{true, z};
    }
    return ContainsResult{false, std::nullopt};
}

// Output of a constructive impossibility adversary; the script replays the
// attack exactly.
struct AttackResult {
    Seq output;
    EditScript script;
    long long deletions_used = 0;
    long long insertions_used = 0;
    std::string pattern_id;  // determined solely by the kept-symbol set(s)
};

namespace detail {

// Kept symbols: the i most frequent, ties broken toward smaller symbols,
// returned sorted ascending.
inline std::vector<int32_t> kept_symbols(const Seq& x, int i) {
    SymbolStats st = symbol_stats(x);
    std::vector<int32_t> order(x.q());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int32_t a, int32_t b) {
        return st.counts[a] != st.counts[b] ? st.counts[a] > st.counts[b] : a < b;
    });
    std::vector<int32_t> kept(order.begin(), order.begin() + i);
    std::sort(kept.begin(), kept.end());
    return kept;
}

inline std::string symbol_set_id(const std::vector<int32_t>& kept) {
    std::string id;
    for (size_t k = 0; k < kept.size(); ++k) {
        if (k) id += ',';
        id += std::to_string(kept[k]);
    }
    return id;
}

}  // namespace detail

// Theorem-5 style collapse: delete every occurrence of the q-i least
// frequent symbols, trim from the end to exactly floor(n i / q) survivors,
// then insert to reach the canonical pattern (s_1 s_2 ... s_i)^L over the
// kept symbols sorted ascending. On balanced inputs with q | n the budgets
// are exactly (n(q-i)/q deletions, n i(i-1)/q insertions); otherwise they
// are the corresponding ceilings.
inline AttackResult adversary_single(const Seq& x, int i) {
    const int q = x.q();
    if (i < 1 || i > q) throw std::domain_error("adversary_single: i outside 1..q");
    const long long n = static_cast<long long>(x.size());
    const long long keep_len = n * i / q;  // floor
    std::vector<int32_t> kept_set = detail::kept_symbols(x, i);
    std::vector<bool> is_kept(q, false);
    for (int32_t s : kept_set) is_kept[s] = true;

    // Deletions, emitted in descending original position so that evolving
    // positions coincide with original indices.
    std::vector<int32_t> survivors;
    std::vector<long long> delete_at;
    long long surviving = 0;
    for (long long t = 0; t < n; ++t) surviving += is_kept[x[t]];
    long long to_trim = surviving - keep_len;  // top-i counts always cover keep_len
    for (long long t = n - 1; t >= 0; --t) {
        if (!is_kept[x[t]] || to_trim > 0) {
            to_trim -= is_kept[x[t]];
            delete_at.push_back(t);
        } else {
            survivors.push_back(x[t]);
        }
    }
    std::reverse(survivors.begin(), survivors.end());

    AttackResult res;
    for (long long pos : delete_at) res.script.ops.push_back(EditOp::del(pos));
    res.deletions_used = static_cast<long long>(delete_at.size());

    // Embed survivors into (s_1 ... s_i)^keep_len greedily; everything not
    // matched is inserted, in ascending final position.
    const long long out_len = keep_len * i;
    std::vector<int32_t> pattern(static_cast<size_t>(out_len));
    for (long long t = 0; t < out_len; ++t) pattern[t] = kept_set[t % i];
    std::vector<int32_t> rank(q, -1);
    for (int k = 0; k < i; ++k) rank[kept_set[k]] = k;
    long long cursor = 0;
    std::vector<bool> matched(static_cast<size_t>(out_len), false);
    for (int32_t s : survivors) {
        cursor += (rank[s] - cursor % i + i) % i;
        matched[cursor] = true;
        ++cursor;
    }
    for (long long t = 0; t < out_len; ++t)
        if (!matched[t]) res.script.ops.push_back(EditOp::ins(t, pattern[t]));
    res.insertions_used = out_len - keep_len;
    res.output = Seq(q, std::move(pattern));
    res.pattern_id = detail::symbol_set_id(kept_set);
    return res;
}

// Theorem-7 time sharing: adversary_single(i) on the first alpha*n symbols
// and adversary_single(i+1) on the rest. alpha = 1 degenerates to the pure
// single-i attack.
inline AttackResult adversary_timeshare(const Seq& x, int i, const Rational& alpha) {
    const int q = x.q();
    if (i < 1 || i > q - 1) throw std::domain_error("adversary_timeshare: i outside 1..q-1");
    if (!(Rational(0) < alpha && alpha <= Rational(1)))
        throw std::domain_error("adversary_timeshare: alpha outside (0,1]");
    Rational split = alpha * Rational(static_cast<long long>(x.size()));
    if (!split.is_integer())
        throw std::domain_error("adversary_timeshare: alpha * |x| must be integral");
    const auto head_len = static_cast<size_t>(split.num());
    AttackResult head = adversary_single(x.substr(0, head_len), i);
    AttackResult tail = adversary_single(x.substr(head_len, x.size() - head_len), i + 1);

    AttackResult res;
    res.output = head.output + tail.output;
    res.script = head.script;
    const long long offset = static_cast<long long>(head.output.size());
    for (EditOp op : tail.script.ops) {
        op.pos += offset;
        res.script.ops.push_back(op);
    }
    res.deletions_used = head.deletions_used + tail.deletions_used;
    res.insertions_used = head.insertions_used + tail.insertions_used;
    res.pattern_id = head.pattern_id + "|" + tail.pattern_id;
    return res;
}

}  // namespace insdel
