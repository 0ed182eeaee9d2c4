#pragma once

#include <map>
#include <stdexcept>
#include <vector>

#include "superklr/laurent.hpp"
#include "superklr/snf.hpp"

namespace superklr {

// Cochain complex of free Z-modules with a q-grading preserved by the
// differential. d_h maps degree h to degree h+1; rows of d_h are indexed by
// the basis of C_{h+1}.
class BigradedComplex {
public:
    std::map<int, std::vector<int>> qdeg; // h -> q-degree per basis vector
    std::map<int, IntMat> diff;           // h -> d_h

    int dim(int h) const {
        auto it = qdeg.find(h);
        return it == qdeg.end() ? 0 : static_cast<int>(it->second.size());
    }

    const IntMat& d(int h) const {
        static const IntMat empty;
        auto it = diff.find(h);
        return it == diff.end() ? empty : it->second;
    }

    int hmin() const { return qdeg.empty() ? 0 : qdeg.begin()->first; }
    int hmax() const { return qdeg.empty() ? 0 : qdeg.rbegin()->first; }

    Poincare chain_poincare() const {
        Poincare p;
        for (auto& [h, qs] : qdeg)
            for (int q : qs) p.add(h, q, 1);
        return p;
    }

    // d^2 = 0 and q-homogeneity of every differential entry.
    void validate() const {
        for (auto& [h, m] : diff) {
            if (m.rows() != dim(h + 1) || m.cols() != dim(h))
                throw std::logic_error("differential shape mismatch");
            const auto& qs = qdeg.at(h);
            const auto& qt = qdeg.at(h + 1);
            for (int r = 0; r < m.rows(); ++r)
                for (int c = 0; c < m.cols(); ++c)
                    if (m.at(r, c) != 0 && qt[r] != qs[c])
                        throw std::logic_error("differential is not q-homogeneous");
        }
        for (auto& [h, m] : diff) {
            auto it = diff.find(h + 1);
            if (it == diff.end()) continue;
            if (!(it->second * m).is_zero()) throw std::logic_error("d^2 != 0");
        }
    }

    BigradedComplex shifted(int dh, int dq) const {
        BigradedComplex out;
        for (auto& [h, qs] : qdeg) {
            auto& v = out.qdeg[h + dh];
            v = qs;
            for (int& q : v) q += dq;
        }
        for (auto& [h, m] : diff) out.diff[h + dh] = m;
        return out;
    }
};

// Homotopy reduction: repeatedly cancels +-1 pivots of the differentials
// (two-term acyclic subcomplex removal). Preserves the homotopy type.
inline BigradedComplex gaussian_eliminate(BigradedComplex c) {
    bool progress = true;
    while (progress) {
        progress = false;
        // Smallest differential first.
        std::vector<int> hs;
        for (auto& [h, m] : c.diff) hs.push_back(h);
        std::sort(hs.begin(), hs.end(), [&](int a, int b) {
            auto sz = [&](int h) {
                return size_t(c.diff[h].rows()) * size_t(c.diff[h].cols());
            };
            return sz(a) < sz(b);
        });
        for (int h : hs) {
            IntMat& m = c.diff[h];
            int pr = -1, pc = -1;
            for (int r = 0; r < m.rows() && pr < 0; ++r)
                for (int col = 0; col < m.cols(); ++col)
                    if (m.at(r, col) == 1 || m.at(r, col) == -1) {
                        pr = r;
                        pc = col;
                        break;
                    }
            if (pr < 0) continue;
            progress = true;
            const std::int64_t phi = m.at(pr, pc);

            const int nr = m.rows(), nc = m.cols();
            IntMat nm(nr - 1, nc - 1);
            for (int r = 0, rr = 0; r < nr; ++r) {
                if (r == pr) continue;
                for (int col = 0, cc = 0; col < nc; ++col) {
                    if (col == pc) continue;
                    nm.at(rr, cc) =
                        IntMat::checked(m.at(r, col), -m.at(r, pc) * phi * m.at(pr, col));
                    ++cc;
                }
                ++rr;
            }
            m = std::move(nm);
            // Adjacent differentials lose the canceled row/column.
            if (auto it = c.diff.find(h - 1); it != c.diff.end()) {
                IntMat& e = it->second;
                IntMat ne(e.rows() - 1, e.cols());
                for (int r = 0, rr = 0; r < e.rows(); ++r) {
                    if (r == pc) continue;
                    for (int col = 0; col < e.cols(); ++col) ne.at(rr, col) = e.at(r, col);
                    ++rr;
                }
                it->second = std::move(ne);
            }
            if (auto it = c.diff.find(h + 1); it != c.diff.end()) {
                IntMat& f = it->second;
                IntMat nf(f.rows(), f.cols() - 1);
                for (int r = 0; r < f.rows(); ++r)
                    for (int col = 0, cc = 0; col < f.cols(); ++col) {
                        if (col == pr) continue;
                        nf.at(r, cc++) = f.at(r, col);
                    }
                it->second = std::move(nf);
            }
            auto& qs = c.qdeg[h];
            qs.erase(qs.begin() + pc);
            auto& qt = c.qdeg[h + 1];
            qt.erase(qt.begin() + pr);
            break; // sizes changed; restart the sweep
        }
    }
    // Drop empty degrees and zero differentials.
    for (auto it = c.qdeg.begin(); it != c.qdeg.end();)
        it = it->second.empty() ? c.qdeg.erase(it) : std::next(it);
    for (auto it = c.diff.begin(); it != c.diff.end();)
        it = (it->second.rows() == 0 || it->second.cols() == 0) ? c.diff.erase(it)
                                                                : std::next(it);
    return c;
}

} // namespace superklr
