#pragma once

#include <bit>
#include <cstdint>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "superklr/colored_sequence.hpp"

namespace superklr {

// Square-free monomials in the odd generators x_{r,1}, one per strand, kept
// as bitmasks over strand positions (bit r <=> factor x_{r+1,1} present).
// A thickness-2 strand carries a single odd dot-class generator: the digon,
// dumbbell and zero-pitchfork relations force its module to be the image of
// the splitter idempotent, which has rank two.
using Mono = std::uint32_t;

inline int mono_degree(Mono m) { return std::popcount(m); }

inline Mono mono_below(int r) { return (Mono(1) << r) - 1; }

// Sign of moving x_r to its sorted slot inside m from the left.
inline int mono_prefix_sign(Mono m, int r) {
    return (std::popcount(m & mono_below(r)) & 1) ? -1 : 1;
}

// Integer-coefficient linear combination of square-free monomials attached
// to a colored sequence. All arithmetic is exact.
class ExteriorElement {
public:
    ExteriorElement() = default;
    explicit ExteriorElement(ColoredSequence ctx) : ctx_(std::move(ctx)) {}

    static ExteriorElement unit(const ColoredSequence& ctx) {
        ExteriorElement e(ctx);
        e.terms_[0] = 1;
        return e;
    }
    static ExteriorElement monomial(const ColoredSequence& ctx, Mono m, std::int64_t c = 1) {
        ExteriorElement e(ctx);
        e.add(m, c);
        return e;
    }
    static ExteriorElement generator(const ColoredSequence& ctx, int r) {
        return monomial(ctx, Mono(1) << r);
    }

    const ColoredSequence& context() const { return ctx_; }
    const std::map<Mono, std::int64_t>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    std::int64_t coeff(Mono m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? 0 : it->second;
    }

    void add(Mono m, std::int64_t c) {
        if (c == 0) return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_[m] = c;
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    ExteriorElement& operator+=(const ExteriorElement& o) {
        check_context(o);
        for (auto& [m, c] : o.terms_) add(m, c);
        return *this;
    }
    ExteriorElement& operator-=(const ExteriorElement& o) {
        check_context(o);
        for (auto& [m, c] : o.terms_) add(m, -c);
        return *this;
    }
    friend ExteriorElement operator+(ExteriorElement a, const ExteriorElement& b) { return a += b; }
    friend ExteriorElement operator-(ExteriorElement a, const ExteriorElement& b) { return a -= b; }
    ExteriorElement operator*(std::int64_t s) const {
        ExteriorElement r(ctx_);
        if (s == 0) return r;
        for (auto& [m, c] : terms_) r.terms_[m] = c * s;
        return r;
    }

    bool operator==(const ExteriorElement& o) const {
        return ctx_ == o.ctx_ && terms_ == o.terms_;
    }
    bool operator!=(const ExteriorElement& o) const { return !(*this == o); }

    // Homogeneous accessors; reject mixed-degree elements.
    bool homogeneous() const {
        if (terms_.empty()) return true;
        int d = mono_degree(terms_.begin()->first);
        for (auto& [m, c] : terms_)
            if (mono_degree(m) != d) return false;
        return true;
    }
    int degree() const {
        if (terms_.empty()) return 0;
        if (!homogeneous()) throw std::domain_error("inhomogeneous element has no degree");
        return mono_degree(terms_.begin()->first);
    }
    int parity() const { return degree() & 1; }

    // Internal q-degree (2*word length + context offset), for bookkeeping checks.
    int qdegree() const { return 2 * degree() + ctx_.degree_offset(); }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto& [m, c] : terms_) {
            std::int64_t a = c;
            if (!first) {
                os << (a < 0 ? " - " : " + ");
                if (a < 0) a = -a;
            } else if (a < 0) {
                os << "-";
                a = -a;
            }
            if (a != 1 || m == 0) os << a;
            bool dot = a != 1;
            for (int r = 0; r < 32; ++r)
                if (m & (Mono(1) << r)) {
                    if (dot) os << "^";
                    os << "x" << (r + 1);
                    dot = true;
                }
            first = false;
        }
        return os.str();
    }

private:
    void check_context(const ExteriorElement& o) const {
        if (ctx_ != o.ctx_) throw std::invalid_argument("context mismatch");
    }

    ColoredSequence ctx_;
    std::map<Mono, std::int64_t> terms_;
};

// Supercommutative product: x^2 = 0, xy = -yx for distinct generators.
inline ExteriorElement multiply(const ExteriorElement& a, const ExteriorElement& b) {
    if (a.context() != b.context()) throw std::invalid_argument("context mismatch");
    ExteriorElement r(a.context());
    for (auto& [ma, ca] : a.terms()) {
        for (auto& [mb, cb] : b.terms()) {
            if (ma & mb) continue;
            // Sign of interleaving sorted ma with sorted mb.
            int sign = 1;
            Mono rest = mb;
            while (rest) {
                int j = std::countr_zero(rest);
                rest &= rest - 1;
                if (std::popcount(ma & ~mono_below(j)) & 1) sign = -sign;
            }
            r.add(ma | mb, ca * cb * sign);
        }
    }
    return r;
}

// Left wedge by the generator x_{r+1,1}.
inline ExteriorElement wedge_generator(int r, const ExteriorElement& f) {
    ExteriorElement out(f.context());
    Mono bit = Mono(1) << r;
    for (auto& [m, c] : f.terms()) {
        if (m & bit) continue;
        out.add(m | bit, c * mono_prefix_sign(m, r));
    }
    return out;
}

// Left contraction against the generator x_{r+1,1} (signed Leibniz term).
inline ExteriorElement contract_generator(int r, const ExteriorElement& f) {
    ExteriorElement out(f.context());
    Mono bit = Mono(1) << r;
    for (auto& [m, c] : f.terms()) {
        if (!(m & bit)) continue;
        out.add(m & ~bit, c * mono_prefix_sign(m, r));
    }
    return out;
}

// Extended Demazure operator d_{u,z}: sends both designated generators to 1,
// all others to 0, extended by d(fg) = d(f)g + (-1)^{|f|} f d(g).
// Requires homogeneous input (the Leibniz sign is undefined otherwise).
inline ExteriorElement demazure(int u, int z, const ExteriorElement& f) {
    if (u == z) throw std::invalid_argument("demazure needs distinct generators");
    if (!f.homogeneous()) throw std::domain_error("demazure requires homogeneous input");
    ExteriorElement out = contract_generator(u, f);
    out += contract_generator(z, f);
    return out;
}

// Adjacent Demazure d_i = d_{x_i, x_{i+1}} (1-based), as in the operator lemma.
inline ExteriorElement demazure_adjacent(int i, const ExteriorElement& f) {
    return demazure(i - 1, i, f);
}

// Action of a permutation w of strand positions: x_{r,*} -> x_{w(r),*},
// renormalized against the fixed monomial order (so a ring automorphism).
// w is given as images of positions 0..d-1; the target context is the
// w-relabeled sequence.
inline ExteriorElement permute(const std::vector<int>& w, const ExteriorElement& f) {
    const auto& src = f.context();
    const int d = src.size();
    if (static_cast<int>(w.size()) != d) throw std::invalid_argument("permutation size mismatch");
    std::vector<Strand> tgt_strands(d);
    for (int r = 0; r < d; ++r) tgt_strands[w[r]] = src.strand(r);
    ColoredSequence tgt(src.rank(), std::move(tgt_strands));
    ExteriorElement out(tgt);
    for (auto& [m, c] : f.terms()) {
        std::vector<int> imgs;
        Mono rest = m, nm = 0;
        while (rest) {
            int j = std::countr_zero(rest);
            rest &= rest - 1;
            imgs.push_back(w[j]);
            nm |= Mono(1) << w[j];
        }
        int sign = 1;
        for (size_t a = 0; a < imgs.size(); ++a)
            for (size_t b = a + 1; b < imgs.size(); ++b)
                if (imgs[a] > imgs[b]) sign = -sign;
        out.add(nm, c * sign);
    }
    return out;
}

// All 2^d square-free monomials of the context, in mask order.
inline std::vector<Mono> basis(const ColoredSequence& ctx) {
    const int d = ctx.size();
    std::vector<Mono> out;
    out.reserve(size_t(1) << d);
    for (Mono m = 0; m < (Mono(1) << d); ++m) out.push_back(m);
    return out;
}

} // namespace superklr
