#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "insdel/rng.hpp"
#include "insdel/seq.hpp"

namespace insdel {

// One edit operation. Positions index the evolving string at the moment the
// op is applied: a script is a sequential transcript, not an alignment.
struct EditOp {
    enum class Kind { kDelete, kInsert };
    Kind kind;
    long long pos;
    int32_t symbol = 0;  // insert only

    static EditOp del(long long pos) { return {Kind::kDelete, pos, 0}; }
    static EditOp ins(long long pos, int32_t symbol) { return {Kind::kInsert, pos, symbol}; }
};

struct EditScript {
    std::vector<EditOp> ops;

    long long deletions() const {
        long long d = 0;
        for (const auto& op : ops) d += op.kind == EditOp::Kind::kDelete;
        return d;
    }
    long long insertions() const {
        return static_cast<long long>(ops.size()) - deletions();
    }
};

// Applies ops in order. |output| = |x| - D + I.
inline Seq apply_script(const Seq& x, const EditScript& s) {
    std::vector<int32_t> cur(x.symbols());
    for (size_t k = 0; k < s.ops.size(); ++k) {
        const EditOp& op = s.ops[k];
        long long n = static_cast<long long>(cur.size());
        if (op.kind == EditOp::Kind::kDelete) {
            if (op.pos < 0 || op.pos >= n)
                throw std::domain_error("apply_script: delete position out of range at op " +
                                        std::to_string(k));
            cur.erase(cur.begin() + op.pos);
        } else {
            if (op.pos < 0 || op.pos > n)
                throw std::domain_error("apply_script: insert position out of range at op " +
                                        std::to_string(k));
            if (op.symbol < 0 || op.symbol >= x.q())
                throw std::domain_error("apply_script: inserted symbol outside alphabet at op " +
                                        std::to_string(k));
            cur.insert(cur.begin() + op.pos, op.symbol);
        }
    }
    return Seq(x.q(), std::move(cur));
}

// D uniformly placed deletions followed by I uniformly placed insertions of
// uniform symbols; reproducible from the seed.
inline EditScript random_script(const Seq& x, long long deletions, long long insertions,
                                uint64_t seed) {
    if (deletions < 0 || insertions < 0)
        throw std::domain_error("random_script: negative op count");
    if (deletions > static_cast<long long>(x.size()))
        throw std::domain_error("random_script: more deletions than symbols");
    Rng rng(seed);
    EditScript s;
    s.ops.reserve(static_cast<size_t>(deletions + insertions));
    long long len = static_cast<long long>(x.size());
    for (long long d = 0; d < deletions; ++d) {
        s.ops.push_back(EditOp::del(rng.range(0, len - 1)));
        --len;
    }
    for (long long i = 0; i < insertions; ++i) {
        long long pos = rng.range(0, len);
        auto symbol = static_cast<int32_t>(rng.below(static_cast<uint64_t>(x.q())));
        s.ops.push_back(EditOp::ins(pos, symbol));
        ++len;
    }
    return s;
}

struct ScriptCost {
    long long deletions = 0;
    long long insertions = 0;
    long long weighted = 0;  // I + 2zD
};

inline ScriptCost script_cost(const EditScript& s, long long z) {
    if (z < 1) throw std::domain_error("script_cost: z must be >= 1");
    ScriptCost c;
    c.deletions = s.deletions();
    c.insertions = s.insertions();
    c.weighted = c.insertions + 2 * z * c.deletions;
    return c;
}

}  // namespace insdel
