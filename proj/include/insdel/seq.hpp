#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "insdel/rational.hpp"

namespace insdel {

// Finite string over the alphabet {0, ..., q-1}. Immutable value type; all
// operations on it are pure, so instances can be shared freely across
// threads.
class Seq {
public:
    Seq() : q_(2) {}
    Seq(int q, std::vector<int32_t> symbols) : q_(q), sym_(std::move(symbols)) {
        if (q < 2) throw std::domain_error("seq: alphabet size must be >= 2");
        for (int32_t s : sym_)
            if (s < 0 || s >= q)
                throw std::domain_error("seq: symbol " + std::to_string(s) +
                                        " outside alphabet of size " + std::to_string(q));
    }

    // Base-36 text form ("0011", "012a..."), only defined for q <= 36.
    static Seq from_text(int q, std::string_view text) {
        if (q > 36) throw std::domain_error("seq: text form requires q <= 36");
        std::vector<int32_t> sym;
        sym.reserve(text.size());
        for (char c : text) sym.push_back(digit_value(c));
        return Seq(q, std::move(sym));
    }

    int q() const { return q_; }
    size_t size() const { return sym_.size(); }
    bool empty() const { return sym_.empty(); }
    int32_t operator[](size_t i) const { return sym_[i]; }
    const std::vector<int32_t>& symbols() const { return sym_; }

    Seq substr(size_t pos, size_t len) const {
        if (pos > sym_.size() || pos + len > sym_.size())
            throw std::domain_error("seq: substring out of range");
        Seq out;
        out.q_ = q_;
        out.sym_.assign(sym_.begin() + pos, sym_.begin() + pos + len);
        return out;
    }

    std::string to_text() const {
        if (q_ > 36) throw std::domain_error("seq: text form requires q <= 36");
        std::string s;
        s.reserve(sym_.size());
        for (int32_t v : sym_) s.push_back(digit_char(v));
        return s;
    }

    friend bool operator==(const Seq& a, const Seq& b) {
        return a.q_ == b.q_ && a.sym_ == b.sym_;
    }
    friend bool operator!=(const Seq& a, const Seq& b) { return !(a == b); }

    friend Seq operator+(const Seq& a, const Seq& b) {
        if (a.q_ != b.q_) throw std::domain_error("seq: alphabet mismatch in concatenation");
        Seq out;
        out.q_ = a.q_;
        out.sym_ = a.sym_;
        out.sym_.insert(out.sym_.end(), b.sym_.begin(), b.sym_.end());
        return out;
    }

private:
    static int32_t digit_value(char c) {
        if (c >= '0' && c <= '9') return c - '0';
        if (c >= 'a' && c <= 'z') return c - 'a' + 10;
        if (c >= 'A' && c <= 'Z') return c - 'A' + 10;
        throw std::domain_error(std::string("seq: bad symbol character '") + c + "'");
    }
    static char digit_char(int32_t v) {
        return v < 10 ? static_cast<char>('0' + v) : static_cast<char>('a' + v - 10);
    }

    int q_;
    std::vector<int32_t> sym_;
};

struct SymbolStats {
    std::vector<long long> counts;  // length q, sums to length
    long long length = 0;
};

inline SymbolStats symbol_stats(const Seq& w) {
    SymbolStats st;
    st.counts.assign(w.q(), 0);
    st.length = static_cast<long long>(w.size());
    for (size_t i = 0; i < w.size(); ++i) ++st.counts[w[i]];
    return st;
}

// Number of appearances of symbol a in w.
inline long long count(const Seq& w, int a) {
    if (a < 0 || a >= w.q()) throw std::domain_error("count: symbol outside alphabet");
    long long c = 0;
    for (size_t i = 0; i < w.size(); ++i)
        if (w[i] == a) ++c;
    return c;
}

// (count_1 - count_0) / |w|, binary strings only.
inline Rational bias(const Seq& w) {
    if (w.q() != 2) throw std::domain_error("bias: defined for binary strings only");
    if (w.empty()) throw std::domain_error("bias: empty string");
    long long ones = count(w, 1);
    long long zeros = static_cast<long long>(w.size()) - ones;
    return Rational(ones - zeros, static_cast<long long>(w.size()));
}

// Entry p is count_p(w)/|w|; entries sum to exactly 1.
inline std::vector<Rational> freq_vector(const Seq& w) {
    if (w.empty()) throw std::domain_error("freq_vector: empty string");
    SymbolStats st = symbol_stats(w);
    std::vector<Rational> f;
    f.reserve(w.q());
    for (int p = 0; p < w.q(); ++p) f.emplace_back(st.counts[p], st.length);
    return f;
}

}  // namespace insdel
