#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "superklr/colored_sequence.hpp"
#include "superklr/exterior.hpp"
#include "superklr/scalars.hpp"

namespace superklr {

// Generators of the diagram calculus. Positions are 0-based strand slots.
enum class GenKind { Dot, Cross, SplitUp, MergeDown };

struct Gen {
    GenKind kind;
    int pos;

    auto operator<=>(const Gen&) const = default;
};

inline int color_inner(int i, int j) {
    if (i == j) return 2;
    if (i == j + 1 || j == i + 1) return -1;
    return 0;
}

// Applies the boundary transformation of a generator to a sequence.
// Throws when the generator does not fit.
inline ColoredSequence gen_target(const Gen& g, const ColoredSequence& src) {
    const int d = src.size();
    std::vector<Strand> s = src.strands();
    switch (g.kind) {
    case GenKind::Dot:
        if (g.pos < 0 || g.pos >= d) throw std::invalid_argument("dot position");
        if (s[g.pos].thickness != 1) throw std::invalid_argument("dots live on simple strands");
        return src;
    case GenKind::Cross:
        if (g.pos < 0 || g.pos + 1 >= d) throw std::invalid_argument("crossing position");
        std::swap(s[g.pos], s[g.pos + 1]);
        return ColoredSequence(src.rank(), std::move(s));
    case GenKind::SplitUp: {
        if (g.pos < 0 || g.pos >= d) throw std::invalid_argument("split position");
        if (s[g.pos].thickness != 2) throw std::invalid_argument("split needs a double strand");
        Strand simple{s[g.pos].color, 1};
        s[g.pos] = simple;
        s.insert(s.begin() + g.pos + 1, simple);
        return ColoredSequence(src.rank(), std::move(s));
    }
    case GenKind::MergeDown: {
        if (g.pos < 0 || g.pos + 1 >= d) throw std::invalid_argument("merge position");
        if (s[g.pos].thickness != 1 || s[g.pos + 1].thickness != 1 ||
            s[g.pos].color != s[g.pos + 1].color)
            throw std::invalid_argument("merge needs two simple strands of one color");
        s[g.pos].thickness = 2;
        s.erase(s.begin() + g.pos + 1);
        return ColoredSequence(src.rank(), std::move(s));
    }
    }
    throw std::logic_error("unreachable");
}

// Declared degree of a generator on a given source sequence.
inline int gen_degree(const Gen& g, const ColoredSequence& src) {
    switch (g.kind) {
    case GenKind::Dot:
        return 2;
    case GenKind::SplitUp:
    case GenKind::MergeDown:
        return -1;
    case GenKind::Cross: {
        const auto& a = src.strand(g.pos);
        const auto& b = src.strand(g.pos + 1);
        return -color_inner(a.color, b.color) * a.thickness * b.thickness;
    }
    }
    throw std::logic_error("unreachable");
}

// Declared parity: dots and split-up are odd, merge-down even; a simple-simple
// crossing has parity p_{ij}, thick crossings are even.
inline int gen_parity(const Gen& g, const ColoredSequence& src) {
    switch (g.kind) {
    case GenKind::Dot:
    case GenKind::SplitUp:
        return 1;
    case GenKind::MergeDown:
        return 0;
    case GenKind::Cross: {
        const auto& a = src.strand(g.pos);
        const auto& b = src.strand(g.pos + 1);
        if (a.thickness == 1 && b.thickness == 1) return ScalarConfig::p(a.color, b.color);
        return 0;
    }
    }
    throw std::logic_error("unreachable");
}

// A vertical composite of layers, each holding one non-identity generator
// padded by identities; layers are listed bottom to top.
class DiagramWord {
public:
    DiagramWord() = default;
    DiagramWord(ColoredSequence source, std::vector<Gen> layers)
        : source_(std::move(source)), layers_(std::move(layers)) {
        ColoredSequence cur = source_;
        degree_ = 0;
        parity_ = 0;
        for (const auto& g : layers_) {
            degree_ += gen_degree(g, cur);
            parity_ ^= gen_parity(g, cur);
            cur = gen_target(g, cur);
        }
        target_ = std::move(cur);
    }

    const ColoredSequence& source() const { return source_; }
    const ColoredSequence& target() const { return target_; }
    const std::vector<Gen>& layers() const { return layers_; }
    int degree() const { return degree_; }
    int parity() const { return parity_; }

    DiagramWord stacked_under(const DiagramWord& top) const {
        if (top.source() != target_) throw std::invalid_argument("boundary mismatch");
        std::vector<Gen> ls = layers_;
        ls.insert(ls.end(), top.layers_.begin(), top.layers_.end());
        return DiagramWord(source_, std::move(ls));
    }

    auto operator<=>(const DiagramWord&) const = default;

    std::string str() const {
        std::ostringstream os;
        os << source_.str();
        for (const auto& g : layers_) {
            os << " ";
            switch (g.kind) {
            case GenKind::Dot: os << "dot"; break;
            case GenKind::Cross: os << "x"; break;
            case GenKind::SplitUp: os << "split"; break;
            case GenKind::MergeDown: os << "merge"; break;
            }
            os << g.pos;
        }
        return os.str();
    }

private:
    ColoredSequence source_, target_;
    std::vector<Gen> layers_;
    int degree_ = 0, parity_ = 0;
};

// Integer linear combination of diagram words with fixed boundaries and
// homogeneous (degree, parity).
class LinearMorphism {
public:
    LinearMorphism() = default;
    explicit LinearMorphism(const DiagramWord& w, std::int64_t c = 1) { add(w, c); }

    void add(const DiagramWord& w, std::int64_t c) {
        if (c == 0) return;
        if (terms_.empty()) {
            source_ = w.source();
            target_ = w.target();
            degree_ = w.degree();
            parity_ = w.parity();
        } else if (w.source() != source_ || w.target() != target_ || w.degree() != degree_ ||
                   w.parity() != parity_) {
            throw std::invalid_argument("inhomogeneous combination of diagram words");
        }
        auto it = terms_.find(w);
        if (it == terms_.end()) {
            terms_[w] = c;
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    LinearMorphism& operator+=(const LinearMorphism& o) {
        for (auto& [w, c] : o.terms_) add(w, c);
        return *this;
    }
    LinearMorphism operator*(std::int64_t s) const {
        LinearMorphism r;
        for (auto& [w, c] : terms_) r.add(w, c * s);
        return r;
    }

    bool empty() const { return terms_.empty(); }
    const std::map<DiagramWord, std::int64_t>& terms() const { return terms_; }
    const ColoredSequence& source() const { return source_; }
    const ColoredSequence& target() const { return target_; }
    int degree() const { return degree_; }
    int parity() const { return parity_; }

private:
    std::map<DiagramWord, std::int64_t> terms_;
    ColoredSequence source_, target_;
    int degree_ = 0, parity_ = 0;
};

// Vertical composition: bottom first, then top.
inline LinearMorphism compose_vertical(const LinearMorphism& top, const LinearMorphism& bottom) {
    if (top.empty() || bottom.empty()) return LinearMorphism();
    if (top.source() != bottom.target()) throw std::invalid_argument("boundary mismatch");
    LinearMorphism r;
    for (auto& [wb, cb] : bottom.terms())
        for (auto& [wt, ct] : top.terms()) r.add(wb.stacked_under(wt), cb * ct);
    return r;
}

// Horizontal juxtaposition in the left-then-right chronology normal form:
// all layers of `left` run below all layers of `right`.
inline LinearMorphism compose_horizontal(const LinearMorphism& left, const LinearMorphism& right) {
    if (left.empty() || right.empty()) return LinearMorphism();
    LinearMorphism r;
    const int off = left.target().size();
    for (auto& [wl, cl] : left.terms()) {
        for (auto& [wr, cr] : right.terms()) {
            std::vector<Gen> ls = wl.layers();
            for (const auto& g : wr.layers()) ls.push_back({g.kind, g.pos + off});
            r.add(DiagramWord(wl.source().concat(wr.source()), std::move(ls)), cl * cr);
        }
    }
    return r;
}

// Same juxtaposition with the opposite chronology (right runs first); by the
// super-interchange law this equals (-1)^{p(left)p(right)} times the normal form.
inline LinearMorphism compose_horizontal_late_left(const LinearMorphism& left,
                                                   const LinearMorphism& right) {
    if (left.empty() || right.empty()) return LinearMorphism();
    LinearMorphism r;
    const int off = left.source().size();
    for (auto& [wl, cl] : left.terms()) {
        for (auto& [wr, cr] : right.terms()) {
            std::vector<Gen> ls;
            for (const auto& g : wr.layers()) ls.push_back({g.kind, g.pos + off});
            for (const auto& g : wl.layers()) ls.push_back(g);
            r.add(DiagramWord(wl.source().concat(wr.source()), std::move(ls)), cl * cr);
        }
    }
    return r;
}

namespace detail {

// Small local element on 1..3 slots, keyed by local masks.
using LocalElt = std::map<Mono, std::int64_t>;

inline void local_add(LocalElt& e, Mono m, std::int64_t c) {
    if (c == 0) return;
    auto it = e.find(m);
    if (it == e.end())
        e[m] = c;
    else {
        it->second += c;
        if (it->second == 0) e.erase(it);
    }
}

} // namespace detail

namespace detail {

// Expansion of thick crossings into simple-strand composites: split the thick
// strand, cross the two simple copies over the other strand, close the digon
// back up with one dot.
inline std::vector<Gen> thick_cross_layers(const ColoredSequence& src, int r) {
    const int th1 = src.strand(r).thickness;
    const int th2 = src.strand(r + 1).thickness;
    if (th1 == 2 && th2 == 1) {
        return {{GenKind::SplitUp, r},
                {GenKind::Cross, r + 1},
                {GenKind::Cross, r},
                {GenKind::Dot, r + 1},
                {GenKind::MergeDown, r + 1}};
    }
    // (1,2) and (2,2) share the same shape; for (2,2) the inner crossings are
    // thick-simple and expand recursively.
    return {{GenKind::SplitUp, r + 1},
            {GenKind::Cross, r},
            {GenKind::Cross, r + 1},
            {GenKind::Dot, r},
            {GenKind::MergeDown, r}};
}

} // namespace detail

// The operator representation of a single generator layer.
inline ExteriorElement apply_generator(const Gen& g, const ExteriorElement& f,
                                       const ScalarConfig& sc) {
    const ColoredSequence& src = f.context();
    const ColoredSequence tgt = gen_target(g, src);
    const int r = g.pos;

    if (g.kind == GenKind::Cross &&
        (src.strand(r).thickness == 2 || src.strand(r + 1).thickness == 2)) {
        ExteriorElement cur = f;
        for (const auto& layer : detail::thick_cross_layers(src, r))
            cur = apply_generator(layer, cur, sc);
        if (cur.context() != tgt) throw std::logic_error("thick crossing expansion mismatch");
        return cur;
    }

    const int span = (g.kind == GenKind::Dot || g.kind == GenKind::SplitUp) ? 1 : 2;
    const int tspan = (g.kind == GenKind::SplitUp) ? 2 : (g.kind == GenKind::MergeDown ? 1 : span);
    const int odd = gen_parity(g, src);
    const Mono low = mono_below(r);
    const Mono mid = (span == 1 ? Mono(1) : Mono(3)) << r;
    const int ctx_par = src.parity_offset_before(r);

    // Local tables, bit 0 = slot r, bit 1 = slot r+1 (source side).
    auto local = [&](Mono lm) {
        detail::LocalElt out;
        switch (g.kind) {
        case GenKind::Dot:
            if (lm == 0) detail::local_add(out, 1, 1);
            break;
        case GenKind::SplitUp:
            if (lm == 0)
                detail::local_add(out, 0, 1);
            else {
                detail::local_add(out, 1, 1);
                detail::local_add(out, 2, -1);
            }
            break;
        case GenKind::MergeDown:
            if (lm == 1 || lm == 2)
                detail::local_add(out, 0, 1);
            else if (lm == 3)
                detail::local_add(out, 1, -1);
            break;
        case GenKind::Cross: {
            const int c1 = src.strand(r).color, c2 = src.strand(r + 1).color;
            if (c1 == c2) {
                const std::int64_t rc = sc.r(c1);
                if (lm == 1 || lm == 2)
                    detail::local_add(out, 0, rc);
                else if (lm == 3) {
                    detail::local_add(out, 2, rc);
                    detail::local_add(out, 1, -rc);
                }
            } else if (c1 == c2 + 1) {
                // Descending adjacent pair: multiply the swapped element by
                // t_{c2,c1} x_r + t_{c1,c2} x_{r+1} in the target ring.
                const std::int64_t ta = sc.t(c2, c1), tb = sc.t(c1, c2);
                if (lm == 0) {
                    detail::local_add(out, 1, ta);
                    detail::local_add(out, 2, tb);
                } else if (lm == 1) {
                    detail::local_add(out, 3, ta);
                } else if (lm == 2) {
                    detail::local_add(out, 3, -tb);
                }
            } else {
                const std::int64_t tc = (std::abs(c1 - c2) > 1 && c1 > c2) ? sc.t(c1, c2) : 1;
                if (lm == 0)
                    detail::local_add(out, 0, tc);
                else if (lm == 1)
                    detail::local_add(out, 2, tc);
                else if (lm == 2)
                    detail::local_add(out, 1, tc);
                else
                    detail::local_add(out, 3, -tc);
            }
            break;
        }
        }
        return out;
    };

    ExteriorElement out(tgt);
    for (auto& [m, c] : f.terms()) {
        const Mono mlow = m & low;
        const Mono mmid = (m & mid) >> r;
        Mono mhigh = m & ~(low | mid);
        // Shift the tail when the strand count changes under the generator.
        if (tspan > span)
            mhigh <<= 1;
        else if (tspan < span)
            mhigh >>= 1;
        std::int64_t sign = 1;
        if (odd && ((mono_degree(mlow) + ctx_par) & 1)) sign = -sign;
        for (auto& [lm, lc] : local(mmid)) out.add(mlow | (lm << r) | mhigh, c * lc * sign);
    }
    return out;
}

// A diagram acts as zero on elements whose sequence is not its source.
inline ExteriorElement evaluate(const DiagramWord& w, const ExteriorElement& x,
                                const ScalarConfig& sc) {
    if (x.context() != w.source()) return ExteriorElement(w.target());
    ExteriorElement cur = x;
    for (const auto& g : w.layers()) cur = apply_generator(g, cur, sc);
    return cur;
}

inline ExteriorElement evaluate(const LinearMorphism& m, const ExteriorElement& x,
                                const ScalarConfig& sc) {
    ExteriorElement out((m.empty() ? x.context() : m.target()));
    for (auto& [w, c] : m.terms()) out += evaluate(w, x, sc) * c;
    return out;
}

// Oracle equality through the representation: true iff both sides act the
// same way on every basis monomial of the shared source.
inline bool semantically_equal(const LinearMorphism& a, const LinearMorphism& b,
                               const ScalarConfig& sc) {
    if (a.empty() && b.empty()) return true;
    const LinearMorphism& ref = a.empty() ? b : a;
    if (!a.empty() && !b.empty()) {
        if (a.source() != b.source() || a.target() != b.target()) return false;
        if (a.degree() != b.degree() || a.parity() != b.parity()) return false;
    }
    for (Mono m : basis(ref.source())) {
        ExteriorElement x = ExteriorElement::monomial(ref.source(), m);
        ExteriorElement va = evaluate(a, x, sc), vb = evaluate(b, x, sc);
        if (va.is_zero() && vb.is_zero()) continue;
        if (va != vb) return false;
    }
    return true;
}

// Identity morphism of a sequence (the empty word).
inline LinearMorphism identity_morphism(const ColoredSequence& ctx) {
    return LinearMorphism(DiagramWord(ctx, {}));
}

} // namespace superklr
