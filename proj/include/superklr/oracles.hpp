#pragma once

#include <bit>
#include <sstream>
#include <string>
#include <vector>

#include "superklr/bigraded.hpp"
#include "superklr/braid.hpp"
#include "superklr/homology.hpp"
#include "superklr/laurent.hpp"

namespace superklr {

// Kauffman bracket state sum with writhe normalization, converted to the
// q-variable convention where the unknot maps to q + 1/q. Exact in Z[A,1/A]
// throughout; the final substitution is A^2 -> -1/q.
inline Laurent kauffman_jones(const Braid& b) {
    b.validate();
    const int c = b.crossings();
    Laurent bracket; // in A
    for (std::uint32_t st = 0; st < (1u << c); ++st) {
        Resolution r(b, st);
        // Zero bits are A-smoothings for either crossing sign.
        int aexp = c - 2 * std::popcount(st);
        Laurent term(1, aexp);
        Laurent delta = Laurent(-1, 2) + Laurent(-1, -2);
        for (int i = 1; i < r.circles(); ++i) term *= delta;
        bracket += term;
    }
    const int w = b.writhe();
    // f = (-A)^{-3w} * bracket, then one extra unknot factor.
    Laurent f = bracket.shifted(-3 * w);
    if (w & 1) f = f * Laurent(-1, 0);
    f *= Laurent(-1, 2) + Laurent(-1, -2);
    Laurent out;
    for (auto& [e, coeff] : f.terms()) {
        if (e % 2 != 0) throw std::logic_error("odd A-exponent in normalized bracket");
        int k = e / 2; // A^{2k} -> (-1)^k q^{-k}
        out.add_term(-k, (k % 2 == 0) ? coeff : -coeff);
    }
    return out;
}

namespace detail {

inline std::vector<int> circle_map_between(const Braid& b, const Resolution& ru,
                                           const Resolution& rv) {
    const int k = b.strands;
    const int levels = std::max(b.crossings(), 1);
    std::vector<int> map(ru.circles(), -1);
    for (int lev = 0; lev < levels; ++lev)
        for (int pos = 0; pos < k; ++pos) {
            int cu = ru.circle_at(pos, lev);
            if (map[cu] < 0) map[cu] = rv.circle_at(pos, lev);
        }
    return map;
}

} // namespace detail

// The classical even Khovanov complex over the same resolution cube, with
// the commutative rank-two Frobenius algebra and the standard alternating
// cube signs. Gradings match the main pipeline.
inline BigradedComplex even_khovanov_complex(const Braid& b) {
    b.validate();
    const int c = b.crossings();
    const int nminus = b.n_minus(), nplus = b.n_plus();
    const int w = b.writhe();
    std::vector<Resolution> res;
    res.reserve(1u << c);
    for (std::uint32_t st = 0; st < (1u << c); ++st) res.emplace_back(b, st);

    auto hdeg = [&](std::uint32_t st) { return std::popcount(st) - nminus; };
    auto qshift = [&](std::uint32_t st) { return 2 * w + std::popcount(st) - nplus; };

    BigradedComplex out;
    std::vector<int> offset(1u << c, 0);
    std::map<int, int> hdim;
    for (std::uint32_t st = 0; st < (1u << c); ++st) {
        offset[st] = hdim[hdeg(st)];
        hdim[hdeg(st)] += 1 << res[st].circles();
    }
    for (std::uint32_t st = 0; st < (1u << c); ++st) {
        auto& qs = out.qdeg[hdeg(st)];
        qs.resize(hdim[hdeg(st)]);
        for (int m = 0; m < (1 << res[st].circles()); ++m)
            qs[offset[st] + m] = qshift(st) + res[st].circles() - 2 * std::popcount(unsigned(m));
    }
    for (auto& [h, n] : hdim)
        if (hdim.count(h + 1)) out.diff[h] = IntMat(hdim[h + 1], n);

    for (std::uint32_t st = 0; st < (1u << c); ++st) {
        for (int j = 0; j < c; ++j) {
            if (st >> j & 1) continue;
            const std::uint32_t tv = st | (1u << j);
            const Resolution& ru = res[st];
            const Resolution& rv = res[tv];
            const int sign = (std::popcount(st & ((1u << j) - 1)) & 1) ? -1 : 1;
            IntMat& d = out.diff[hdeg(st)];
            const bool merge = ru.circles() > rv.circles();
            if (merge) {
                auto cmap = detail::circle_map_between(b, ru, rv);
                auto [A, B] = ru.site_circles(j);
                for (int m = 0; m < (1 << ru.circles()); ++m) {
                    if ((m >> A & 1) && (m >> B & 1)) continue; // x^2 = 0
                    int tgt = 0;
                    for (int ci = 0; ci < ru.circles(); ++ci)
                        if (m >> ci & 1) tgt |= 1 << cmap[ci];
                    d.at(offset[tv] + tgt, offset[st] + m) = sign;
                }
            } else {
                auto cmap = detail::circle_map_between(b, ru, rv);
                auto [A, B] = rv.site_circles(j);
                const int C = ru.site_circles(j).first;
                cmap[C] = A;
                for (int m = 0; m < (1 << ru.circles()); ++m) {
                    int base = 0;
                    for (int ci = 0; ci < ru.circles(); ++ci)
                        if (m >> ci & 1) base |= 1 << cmap[ci];
                    // 1 -> x_A + x_B on the split circles, x_C -> x_A x_B.
                    for (int extra : {A, B}) {
                        if (base >> extra & 1) continue;
                        d.at(offset[tv] + (base | (1 << extra)), offset[st] + m) =
                            IntMat::checked(
                                d.at(offset[tv] + (base | (1 << extra)), offset[st] + m), sign);
                    }
                }
            }
        }
    }
    out.validate();
    return out;
}

inline HomologyTable even_khovanov(const Braid& b) {
    return smith_homology(gaussian_eliminate(even_khovanov_complex(b)));
}

// Degreewise comparison of the main invariant with even Khovanov homology
// over Z, Q and F2.
struct CompareReport {
    bool equal_over_Z = true;
    bool equal_over_Q = true;
    bool equal_mod_2 = true;
    std::vector<std::string> integral_diffs;

    std::string str() const {
        std::ostringstream os;
        os << "Z: " << (equal_over_Z ? "identical" : "distinct")
           << ", Q: " << (equal_over_Q ? "identical" : "distinct")
           << ", F2: " << (equal_mod_2 ? "identical" : "distinct");
        for (auto& d : integral_diffs) os << "\n  " << d;
        return os.str();
    }
};

inline CompareReport compare_homologies(const HomologyTable& main_h, const HomologyTable& even_h,
                                        const Poincare& main_f2, const Poincare& even_f2) {
    CompareReport rep;
    auto keys = [&](const HomologyTable& t) {
        std::vector<std::pair<int, int>> ks;
        for (auto& [hq, g] : t.groups) ks.push_back(hq);
        return ks;
    };
    auto all = keys(main_h);
    for (auto k : keys(even_h)) all.push_back(k);
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());
    for (auto [h, q] : all) {
        const auto& a = main_h.at(h, q);
        const auto& b = even_h.at(h, q);
        if (a.free_rank != b.free_rank || a.torsion != b.torsion) {
            rep.equal_over_Z = false;
            std::ostringstream os;
            os << "(h=" << h << ", q=" << q << "): main Z^" << a.free_rank;
            for (auto t : a.torsion) os << "+Z/" << t;
            os << " vs even Z^" << b.free_rank;
            for (auto t : b.torsion) os << "+Z/" << t;
            rep.integral_diffs.push_back(os.str());
        }
        if (a.free_rank != b.free_rank) rep.equal_over_Q = false;
    }
    rep.equal_mod_2 = (main_f2 == even_f2);
    return rep;
}

} // namespace superklr
