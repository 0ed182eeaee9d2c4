#pragma once

#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "superklr/bigraded.hpp"
#include "superklr/laurent.hpp"
#include "superklr/snf.hpp"

namespace superklr {

struct HomologyGroup {
    int free_rank = 0;
    std::vector<std::int64_t> torsion; // invariant factors > 1, divisibility order

    bool trivial() const { return free_rank == 0 && torsion.empty(); }
    bool operator==(const HomologyGroup&) const = default;
};

// Integral homology, bigraded by (homological degree h, q-degree j).
struct HomologyTable {
    std::map<std::pair<int, int>, HomologyGroup> groups;

    const HomologyGroup& at(int h, int q) const {
        static const HomologyGroup zero;
        auto it = groups.find({h, q});
        return it == groups.end() ? zero : it->second;
    }

    bool operator==(const HomologyTable& o) const { return groups == o.groups; }

    std::string str() const {
        std::ostringstream os;
        for (auto& [hq, g] : groups) {
            os << "(h=" << hq.first << ", q=" << hq.second << "): Z^" << g.free_rank;
            for (auto t : g.torsion) os << " + Z/" << t;
            os << "\n";
        }
        return os.str();
    }
};

namespace detail {

// Restriction of d_h to the q-graded block, as index lists plus the submatrix.
inline IntMat q_block(const BigradedComplex& c, int h, int q, const std::vector<int>& src_idx,
                      const std::vector<int>& tgt_idx) {
    IntMat out(static_cast<int>(tgt_idx.size()), static_cast<int>(src_idx.size()));
    auto it = c.diff.find(h);
    if (it == c.diff.end()) return out;
    for (size_t r = 0; r < tgt_idx.size(); ++r)
        for (size_t cc = 0; cc < src_idx.size(); ++cc)
            out.at(static_cast<int>(r), static_cast<int>(cc)) =
                it->second.at(tgt_idx[r], src_idx[cc]);
    return out;
}

inline std::vector<int> q_indices(const BigradedComplex& c, int h, int q) {
    std::vector<int> idx;
    auto it = c.qdeg.find(h);
    if (it == c.qdeg.end()) return idx;
    for (size_t i = 0; i < it->second.size(); ++i)
        if (it->second[i] == q) idx.push_back(static_cast<int>(i));
    return idx;
}

inline std::vector<int> q_values(const BigradedComplex& c) {
    std::vector<int> qs;
    for (auto& [h, v] : c.qdeg)
        for (int q : v) qs.push_back(q);
    std::sort(qs.begin(), qs.end());
    qs.erase(std::unique(qs.begin(), qs.end()), qs.end());
    return qs;
}

} // namespace detail

// Exact integral homology from Smith normal forms of the two adjacent
// differential blocks in each (h, q) bidegree.
inline HomologyTable smith_homology(const BigradedComplex& c) {
    HomologyTable table;
    for (int q : detail::q_values(c)) {
        for (auto& [h, qs] : c.qdeg) {
            auto mid = detail::q_indices(c, h, q);
            if (mid.empty()) continue;
            auto below = detail::q_indices(c, h - 1, q);
            auto above = detail::q_indices(c, h + 1, q);
            IntMat din = detail::q_block(c, h - 1, q, below, mid);
            IntMat dout = detail::q_block(c, h, q, mid, above);
            SmithResult sin = smith(din);
            SmithResult sout = smith(dout);
            HomologyGroup g;
            g.free_rank = static_cast<int>(mid.size()) - sout.rank - sin.rank;
            for (auto f : sin.invariant_factors)
                if (f > 1) g.torsion.push_back(f);
            if (!g.trivial()) table.groups[{h, q}] = g;
        }
    }
    return table;
}

enum class Coefficients { Z, Q, F2, Fp };

struct CoefficientField {
    Coefficients kind = Coefficients::Q;
    std::int64_t p = 0;

    static CoefficientField rationals() { return {Coefficients::Q, 0}; }
    static CoefficientField mod(std::int64_t p) {
        return {p == 2 ? Coefficients::F2 : Coefficients::Fp, p};
    }
};

// Dimension counts over a field: rationals see the free ranks; F_p adds a
// torsion contribution in the two degrees adjacent to each p-torsion class.
inline Poincare poincare(const HomologyTable& t, const CoefficientField& field) {
    Poincare out;
    for (auto& [hq, g] : t.groups) {
        auto [h, q] = hq;
        out.add(h, q, g.free_rank);
        if (field.kind != Coefficients::Q) {
            for (auto f : g.torsion)
                if (f % field.p == 0) {
                    out.add(h, q, 1);
                    out.add(h - 1, q, 1);
                }
        }
    }
    return out;
}

inline Laurent euler_characteristic(const HomologyTable& t) {
    Laurent out;
    for (auto& [hq, g] : t.groups)
        out.add_term(hq.second, (hq.first % 2 == 0 ? 1 : -1) * g.free_rank);
    return out;
}

// Coefficient-wise reduction: F_p Betti numbers per bidegree computed from
// ranks of the reduced differentials.
inline Poincare reduce_mod(const BigradedComplex& c, std::int64_t p) {
    Poincare out;
    for (int q : detail::q_values(c)) {
        for (auto& [h, qs] : c.qdeg) {
            auto mid = detail::q_indices(c, h, q);
            if (mid.empty()) continue;
            auto below = detail::q_indices(c, h - 1, q);
            auto above = detail::q_indices(c, h + 1, q);
            int rin = rank_mod_p(detail::q_block(c, h - 1, q, below, mid), p);
            int rout = rank_mod_p(detail::q_block(c, h, q, mid, above), p);
            int dim = static_cast<int>(mid.size()) - rin - rout;
            out.add(h, q, dim);
        }
    }
    return out;
}

} // namespace superklr
