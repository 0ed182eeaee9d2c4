#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "superklr/bigraded.hpp"
#include "superklr/braid.hpp"
#include "superklr/scalars.hpp"
#include "superklr/snf.hpp"
#include "superklr/webs.hpp"

namespace superklr {

struct CubeOptions {
    ScalarConfig scalars;
    std::uint64_t sign_seed = 0;
};

// The hypercube of resolutions of a braid closure. Chain groups are spanned
// by dot patterns on the circles of each resolved diagram; edges carry the
// chronological Frobenius maps with a global sign assignment solved so that
// every square anticommutes.
class Cube {
public:
    struct Vertex {
        std::uint32_t state = 0;
        int circles = 0;
        int h = 0;
        int qshift = 0;
        int parity_offset = 0;
        std::vector<int> lambda; // dot-class normalization per circle
        int basepoint = 0;       // circle through the leftmost bottom strand
    };

    struct Edge {
        std::uint32_t u = 0, v = 0;
        int crossing = 0;
        bool is_merge = true;
        char tag = 'a';
        int A = 0, B = 0, C = 0; // local circles (A, B on the 2-circle side)
        int parity = 0;          // declared parity of the local map
        IntMat matrix;           // unsigned, dim(v) x dim(u)
        int eps = 1;             // solved global sign
    };

    Cube(const Braid& braid, const std::vector<CrossingSite>& sites, CubeOptions opt)
        : braid_(braid), sites_(sites), opt_(std::move(opt)) {
        braid_.validate();
        if (braid_.crossings() > 24) throw std::invalid_argument("too many crossings");
        build_vertices();
        build_edges();
        assign_parity_offsets();
        normalize_dot_classes();
        solve_signs();
    }

    const Braid& braid() const { return braid_; }
    int crossings() const { return braid_.crossings(); }
    const std::vector<Vertex>& vertices() const { return verts_; }
    const std::vector<Edge>& edges() const { return edges_; }
    const Resolution& resolution(std::uint32_t state) const { return res_[state]; }
    bool parity_consistent() const { return parity_consistent_; }
    bool lambda_consistent() const { return lambda_consistent_; }
    int sign_freedom() const { return static_cast<int>(sign_kernel_.size()); }

    int dim(std::uint32_t state) const { return 1 << verts_[state].circles; }

    // q-degree of a dot pattern: undotted circles sit in degree +1, dotted
    // in degree -1, on top of the vertex shift.
    int qdeg(std::uint32_t state, std::uint32_t pattern) const {
        const Vertex& v = verts_[state];
        return v.qshift + v.circles - 2 * std::popcount(pattern);
    }

    BigradedComplex assemble() const {
        BigradedComplex c;
        std::vector<int> offset(verts_.size(), 0);
        std::map<int, int> hdim;
        for (const auto& v : verts_) {
            offset[v.state] = hdim[v.h];
            hdim[v.h] += 1 << v.circles;
        }
        for (const auto& v : verts_) {
            auto& qs = c.qdeg[v.h];
            qs.resize(hdim[v.h]);
            for (int m = 0; m < (1 << v.circles); ++m)
                qs[offset[v.state] + m] = qdeg(v.state, m);
        }
        for (auto& [h, n] : hdim)
            if (hdim.count(h + 1)) c.diff[h] = IntMat(hdim[h + 1], n);
        for (const auto& e : edges_) {
            IntMat& d = c.diff[verts_[e.u].h];
            for (int r = 0; r < e.matrix.rows(); ++r)
                for (int col = 0; col < e.matrix.cols(); ++col)
                    if (e.matrix.at(r, col))
                        d.at(offset[e.v] + r, offset[e.u] + col) = e.eps * e.matrix.at(r, col);
        }
        c.validate(); // d^2 = 0 and q-homogeneity are hard invariants
        return c;
    }

    // Basepoint dot insertion; commutes with the differential.
    IntMat reduced_X(std::uint32_t state) const {
        const Vertex& v = verts_[state];
        const int n = 1 << v.circles;
        IntMat x(n, n);
        const int b = v.basepoint;
        for (int m = 0; m < n; ++m) {
            if (m & (1 << b)) continue;
            x.at(m | (1 << b), m) = v.lambda[b] * wedge_sign(m, b);
        }
        return x;
    }

    // Dot-class contraction summed over all circles (the Leibniz extension);
    // the acyclic operator of the reduced decomposition.
    IntMat reduced_Delta(std::uint32_t state) const {
        const Vertex& v = verts_[state];
        const int n = 1 << v.circles;
        IntMat dl(n, n);
        for (int m = 0; m < n; ++m)
            for (int cidx = 0; cidx < v.circles; ++cidx)
                if (m & (1 << cidx))
                    dl.at(m & ~(1 << cidx), m) = v.lambda[cidx] * wedge_sign(m & ~(1 << cidx), cidx);
        return dl;
    }

    struct ReducedResult {
        BigradedComplex complex; // q-shifted by +1 (reduced = q . ker Delta)
        bool certificate = true; // degreewise dim M = dim ker + dim ker[q-2]
    };

    // Kernel subcomplex of Delta with the q-shift convention of the reduced
    // theory. The kernel is computed per (vertex, q) block so basis vectors
    // stay homogeneous; the restricted differential is solved exactly.
    ReducedResult reduced_split() const {
        ReducedResult out;
        // Kernel bases per vertex, with q-degrees.
        struct KerBlock {
            IntMat basis; // dim(v) x r, columns homogeneous
            std::vector<int> q;
        };
        std::vector<KerBlock> ker(verts_.size());
        for (const auto& v : verts_) {
            IntMat dl = reduced_Delta(v.state);
            const int n = 1 << v.circles;
            std::map<int, std::vector<int>> by_q;
            for (int m = 0; m < n; ++m) by_q[qdeg(v.state, m)].push_back(m);
            std::vector<std::pair<int, std::vector<std::int64_t>>> cols;
            for (auto& [q, idx] : by_q) {
                // Restrict Delta to this q block (target block q+2).
                std::vector<int> tgt = by_q.count(q + 2) ? by_q[q + 2] : std::vector<int>{};
                IntMat blk(static_cast<int>(tgt.size()), static_cast<int>(idx.size()));
                for (size_t r = 0; r < tgt.size(); ++r)
                    for (size_t cc = 0; cc < idx.size(); ++cc)
                        blk.at(static_cast<int>(r), static_cast<int>(cc)) =
                            dl.at(tgt[r], idx[cc]);
                IntMat kb = kernel(blk);
                for (int j = 0; j < kb.cols(); ++j) {
                    std::vector<std::int64_t> col(n, 0);
                    for (size_t i = 0; i < idx.size(); ++i)
                        col[idx[i]] = kb.at(static_cast<int>(i), j);
                    cols.push_back({q, std::move(col)});
                }
            }
            KerBlock kb;
            kb.basis = IntMat(n, static_cast<int>(cols.size()));
            for (size_t j = 0; j < cols.size(); ++j) {
                kb.q.push_back(cols[j].first);
                for (int i = 0; i < n; ++i) kb.basis.at(i, static_cast<int>(j)) = cols[j].second[i];
            }
            // Certificate: M ~ ker + q^2 ker, degreewise.
            std::map<int, int> mod_dim, ker_dim;
            for (int m = 0; m < n; ++m) mod_dim[qdeg(v.state, m)]++;
            for (int q : kb.q) ker_dim[q]++;
            for (auto& [q, dm] : mod_dim) {
                int expect = (ker_dim.count(q) ? ker_dim[q] : 0) +
                             (ker_dim.count(q + 2) ? ker_dim[q + 2] : 0);
                if (dm != expect) out.certificate = false;
            }
            ker[v.state] = std::move(kb);
        }
        // Offsets per homological degree.
        std::vector<int> offset(verts_.size(), 0);
        std::map<int, int> hdim;
        for (const auto& v : verts_) {
            offset[v.state] = hdim[v.h];
            hdim[v.h] += ker[v.state].basis.cols();
        }
        for (const auto& v : verts_) {
            auto& qs = out.complex.qdeg[v.h];
            qs.resize(hdim[v.h]);
            for (int j = 0; j < ker[v.state].basis.cols(); ++j)
                qs[offset[v.state] + j] = ker[v.state].q[j] - 1; // dots lower q, so ker sits high
        }
        for (auto& [h, n] : hdim)
            if (hdim.count(h + 1)) out.complex.diff[h] = IntMat(hdim[h + 1], n);
        for (const auto& e : edges_) {
            const auto& ku = ker[e.u];
            const auto& kv = ker[e.v];
            if (ku.basis.cols() == 0 || kv.basis.cols() == 0) continue;
            IntMat img = e.matrix * ku.basis;
            IntMat coords;
            if (!solve(kv.basis, img, coords))
                throw std::logic_error("reduced subcomplex is not d-invariant");
            IntMat& d = out.complex.diff[verts_[e.u].h];
            for (int r = 0; r < coords.rows(); ++r)
                for (int cc = 0; cc < coords.cols(); ++cc)
                    if (coords.at(r, cc))
                        d.at(offset[e.v] + r, offset[e.u] + cc) = e.eps * coords.at(r, cc);
        }
        out.complex.validate();
        return out;
    }

    // Structure identities of the chronological Frobenius layer, checked as
    // matrix identities on every vertex module.
    bool structure_checks() const {
        for (const auto& e : edges_) {
            // mu . delta = 0 on the one-circle side of every edge.
            IntMat mu = e.is_merge ? e.matrix : companion_matrix(e);
            IntMat de = e.is_merge ? companion_matrix(e) : e.matrix;
            if (!(mu * de).is_zero()) return false;
        }
        for (const auto& v : verts_) {
            IntMat X = reduced_X(v.state);
            IntMat D = reduced_Delta(v.state);
            const int n = 1 << v.circles;
            if (!(D * D).is_zero()) return false;
            if (!(X * D + D * X == IntMat::identity(n))) return false;
        }
        for (const auto& e : edges_) {
            if (!(e.matrix * reduced_X(e.u) == reduced_X(e.v) * e.matrix)) return false;
            if (!(e.matrix * reduced_Delta(e.u) == reduced_Delta(e.v) * e.matrix)) return false;
        }
        return true;
    }

    // Distinct admissible sign assignments indexed by kernel combinations.
    std::vector<std::uint64_t> sign_assignment_seeds(int count) const {
        std::vector<std::uint64_t> seeds;
        for (std::uint64_t s = 0; s < (1ull << std::min(sign_freedom(), 16)) && (int)seeds.size() < count;
             ++s)
            seeds.push_back(s);
        return seeds;
    }

private:
    static int wedge_sign(int mask, int idx) {
        return (std::popcount(static_cast<unsigned>(mask) & ((1u << idx) - 1)) & 1) ? -1 : 1;
    }

    void build_vertices() {
        const int c = braid_.crossings();
        const int n = 1 << c;
        int dq_comp = 0, dh_comp = 0;
        for (const auto& s : sites_) {
            dq_comp += s.dq;
            dh_comp += s.dh;
        }
        int w = 0, nminus = 0, nplus = 0;
        for (const auto& s : sites_) {
            w += s.fform_sign;
            (s.fform_sign > 0 ? nplus : nminus)++;
        }
        res_.reserve(n);
        verts_.resize(n);
        for (int st = 0; st < n; ++st) {
            res_.emplace_back(fform_braid(), static_cast<std::uint32_t>(st));
            Vertex& v = verts_[st];
            v.state = static_cast<std::uint32_t>(st);
            v.circles = res_[st].circles();
            v.h = std::popcount(static_cast<unsigned>(st)) - nminus + dh_comp;
            v.qshift = 2 * w + std::popcount(static_cast<unsigned>(st)) - nplus + dq_comp;
            v.lambda.assign(v.circles, 1);
            v.basepoint = res_[st].basepoint_circle();
        }
    }

    // The braid whose letters carry the F-form signs (identical to the input
    // for braid sources; PD rotation may flip signs with compensations).
    const Braid& fform_braid() {
        if (!fform_.has_value()) {
            Braid fb = braid_;
            for (size_t i = 0; i < sites_.size(); ++i)
                fb.word[sites_[i].index] =
                    sites_[i].fform_sign * std::abs(fb.word[sites_[i].index]);
            fform_ = std::move(fb);
        }
        return *fform_;
    }

    // Circle correspondence u -> v across an edge (away from the surgery the
    // map is a bijection; the surgery circles follow the merge/split).
    std::vector<int> circle_map(const Resolution& ru, const Resolution& rv) const {
        const Braid& b = *fform_;
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

    void build_edges() {
        const int c = braid_.crossings();
        for (std::uint32_t st = 0; st < (1u << c); ++st) {
            for (int j = 0; j < c; ++j) {
                if ((st >> j) & 1) continue;
                Edge e;
                e.u = st;
                e.v = st | (1u << j);
                e.crossing = j;
                const Resolution& ru = res_[e.u];
                const Resolution& rv = res_[e.v];
                const int cu = ru.circles(), cv = rv.circles();
                if (std::abs(cu - cv) != 1)
                    throw std::logic_error("edge changes circle count by more than one");
                e.is_merge = cu > cv;
                const Resolution& two = e.is_merge ? ru : rv;
                auto [a, bb] = two.site_circles(j);
                if (a == bb) throw std::logic_error("surgery circles coincide on the 2-side");
                e.A = a;
                e.B = bb;
                const Resolution& one = e.is_merge ? rv : ru;
                e.C = one.site_circles(j).first;
                e.tag = crossing_tag(j);
                e.parity = e.is_merge ? (e.tag == 'a' ? 0 : 1) : (e.tag == 'a' ? 1 : 0);
                e.matrix = edge_matrix(e);
                edges_.push_back(std::move(e));
            }
        }
        edge_index_.assign(size_t(1) << c, std::vector<int>(c, -1));
        for (size_t i = 0; i < edges_.size(); ++i)
            edge_index_[edges_[i].u][edges_[i].crossing] = static_cast<int>(i);
    }

    // Frobenius case of a crossing, read off the minimal closure state
    // where every other crossing is capped; this matches the local pictures
    // and is a property of the crossing alone.
    char crossing_tag(int j) {
        if (tag_cache_.empty()) tag_cache_.assign(braid_.crossings(), 0);
        if (tag_cache_[j]) return tag_cache_[j];
        const Braid& fb = *fform_;
        std::uint32_t st = 0;
        for (int i = 0; i < fb.crossings(); ++i) {
            const bool capcup_bit = fb.word[i] > 0; // bit giving the cap-cup smoothing
            if (i == j ? !capcup_bit : capcup_bit) st |= 1u << i;
        }
        Resolution minimal(fb, st);
        tag_cache_[j] = minimal.frobenius_case(j);
        return tag_cache_[j];
    }

    struct LocalCoeffs {
        std::int64_t wA, wB, ratio;
    };

    LocalCoeffs local_coeffs(const Edge& e) const {
        const CrossingSite& site = sites_.at(e.crossing);
        const int c1 = site.col, c2 = site.col + 1;
        std::int64_t t12 = opt_.scalars.t(c1, c2), t21 = opt_.scalars.t(c2, c1);
        if (e.tag == 'a') return {-t12, t21, t12 * t21};
        return {-t21, t12, t12 * t21};
    }

    IntMat merge_matrix(const Edge& e, const Resolution& ru, const Resolution& rv) const {
        auto cmap = circle_map(ru, rv);
        const int nu = 1 << ru.circles(), nv = 1 << rv.circles();
        auto lc = local_coeffs(e);
        IntMat m(nv, nu);
        for (int mu = 0; mu < nu; ++mu) {
            if ((mu >> e.A & 1) && (mu >> e.B & 1)) continue; // e_C ^ e_C = 0
            std::int64_t coeff = (mu >> e.B & 1) ? lc.ratio : 1;
            int sign = 1, tgt = 0;
            std::vector<int> imgs;
            for (int ci = 0; ci < ru.circles(); ++ci)
                if (mu >> ci & 1) imgs.push_back(cmap[ci]);
            for (size_t x = 0; x < imgs.size(); ++x)
                for (size_t y = x + 1; y < imgs.size(); ++y)
                    if (imgs[x] > imgs[y]) sign = -sign;
            for (int ci : imgs) tgt |= 1 << ci;
            m.at(tgt, mu) = IntMat::checked(m.at(tgt, mu), coeff * sign);
        }
        return m;
    }

    IntMat split_matrix(const Edge& e, const Resolution& ru, const Resolution& rv) const {
        auto cmap = circle_map(ru, rv);
        cmap[e.C] = e.A; // sub sends the merged dot class to the first circle
        const int nu = 1 << ru.circles(), nv = 1 << rv.circles();
        auto lc = local_coeffs(e);
        IntMat m(nv, nu);
        for (int mu = 0; mu < nu; ++mu) {
            int sign = 1, base = 0;
            std::vector<int> imgs;
            for (int ci = 0; ci < ru.circles(); ++ci)
                if (mu >> ci & 1) imgs.push_back(cmap[ci]);
            for (size_t x = 0; x < imgs.size(); ++x)
                for (size_t y = x + 1; y < imgs.size(); ++y)
                    if (imgs[x] > imgs[y]) sign = -sign;
            for (int ci : imgs) base |= 1 << ci;
            // Right wedge with wA e_A + wB e_B.
            for (auto [cidx, w] : {std::pair{e.A, lc.wA}, std::pair{e.B, lc.wB}}) {
                if (base >> cidx & 1) continue;
                int rsign =
                    (std::popcount(static_cast<unsigned>(base) >> (cidx + 1)) & 1) ? -1 : 1;
                m.at(base | (1 << cidx), mu) =
                    IntMat::checked(m.at(base | (1 << cidx), mu), w * sign * rsign);
            }
        }
        return m;
    }

    IntMat edge_matrix(const Edge& e) const {
        const Resolution& ru = res_[e.u];
        const Resolution& rv = res_[e.v];
        return e.is_merge ? merge_matrix(e, ru, rv) : split_matrix(e, ru, rv);
    }

    // The reverse-direction Frobenius map over the same surgery (used for
    // the mu.delta = 0 identities).
    IntMat companion_matrix(const Edge& e) const {
        Edge rev = e;
        rev.is_merge = !e.is_merge;
        const Resolution& ru = res_[e.u];
        const Resolution& rv = res_[e.v];
        return rev.is_merge ? merge_matrix(rev, rv, ru) : split_matrix(rev, rv, ru);
    }

    void assign_parity_offsets() {
        parity_consistent_ = true;
        std::vector<int> seen(verts_.size(), -1);
        seen[0] = 0;
        std::vector<std::uint32_t> queue{0};
        while (!queue.empty()) {
            std::uint32_t u = queue.back();
            queue.pop_back();
            for (const auto& e : edges_) {
                std::uint32_t other;
                if (e.u == u)
                    other = e.v;
                else if (e.v == u)
                    other = e.u;
                else
                    continue;
                int jump = (e.tag == 'b') ? 1 : 0;
                int want = seen[u] ^ jump;
                if (seen[other] < 0) {
                    seen[other] = want;
                    queue.push_back(other);
                } else if (seen[other] != want) {
                    parity_consistent_ = false;
                }
            }
        }
        for (auto& v : verts_) v.parity_offset = std::max(seen[v.state], 0);
        propagate_lambda();
    }

    // Dot-class normalizations: the physical dot on a circle is lambda times
    // the basis dot, with lambda forced along every edge (a merge sends the
    // B-side dot to ratio times the C-side dot). At the default sign
    // configuration everything is +1.
    void propagate_lambda() {
        lambda_consistent_ = true;
        if (opt_.scalars.all_default()) return;
        std::vector<char> visited(verts_.size(), 0);
        visited[0] = 1;
        std::vector<std::uint32_t> queue{0};
        auto reconcile = [&](std::uint32_t to, const std::vector<int>& want) {
            if (!visited[to]) {
                verts_[to].lambda = want;
                visited[to] = 1;
                queue.push_back(to);
            } else if (verts_[to].lambda != want) {
                lambda_consistent_ = false;
            }
        };
        while (!queue.empty()) {
            std::uint32_t u = queue.back();
            queue.pop_back();
            for (const auto& e : edges_) {
                if (e.u != u && e.v != u) continue;
                const std::uint32_t two = e.is_merge ? e.u : e.v;
                const std::uint32_t one = e.is_merge ? e.v : e.u;
                auto cmap = circle_map(res_[two], res_[one]); // A, B -> C
                auto lc = local_coeffs(e);
                if (u == two) {
                    std::vector<int> want = verts_[one].lambda;
                    const auto& lf = verts_[two].lambda;
                    bool ok = true;
                    std::vector<char> set(want.size(), 0);
                    for (int ci = 0; ci < res_[two].circles(); ++ci) {
                        int lam = lf[ci];
                        if (ci == e.B) lam = static_cast<int>(lam * lc.ratio);
                        int img = cmap[ci];
                        if (set[img] && want[img] != lam) ok = false;
                        want[img] = lam;
                        set[img] = 1;
                    }
                    if (!ok) lambda_consistent_ = false;
                    reconcile(one, want);
                } else {
                    std::vector<int> want = verts_[two].lambda;
                    const auto& lf = verts_[one].lambda;
                    for (int ci = 0; ci < res_[two].circles(); ++ci) {
                        int pre = cmap[ci]; // circle of `one` this maps onto
                        int lam = lf[pre];
                        if (ci == e.B) lam = static_cast<int>(lam * lc.ratio);
                        want[ci] = lam;
                    }
                    reconcile(two, want);
                }
            }
        }
    }

    // Rescales every edge matrix into the basis of physical dot classes
    // (basis vector of pattern m scaled by the product of its lambdas); this
    // makes the t-coefficients coherent across the cube.
    void normalize_dot_classes() {
        if (opt_.scalars.all_default()) return;
        if (!lambda_consistent_)
            throw std::logic_error(
                "unit twists with t_ij t_ji = -1 need the deferred tensor-sign "
                "bookkeeping; pick t_ij = t_ji on adjacent pairs");
        auto scale = [&](const Vertex& v, int mask) {
            int s = 1;
            for (int ci = 0; ci < v.circles; ++ci)
                if (mask >> ci & 1) s *= v.lambda[ci];
            return s;
        };
        for (auto& e : edges_) {
            const Vertex& vu = verts_[e.u];
            const Vertex& vv = verts_[e.v];
            for (int r = 0; r < e.matrix.rows(); ++r)
                for (int c = 0; c < e.matrix.cols(); ++c)
                    if (e.matrix.at(r, c))
                        e.matrix.at(r, c) *= scale(vv, r) * scale(vu, c);
        }
    }

    void solve_signs() {
        const int c = braid_.crossings();
        const int ne = static_cast<int>(edges_.size());
        // Equations over GF(2): rows are faces, columns are edges, plus rhs.
        std::vector<std::vector<std::uint64_t>> rows;
        std::vector<int> rhs;
        const int words = (ne + 63) / 64;
        for (std::uint32_t st = 0; st < (1u << c); ++st) {
            for (int j = 0; j < c; ++j) {
                if ((st >> j) & 1) continue;
                for (int j2 = j + 1; j2 < c; ++j2) {
                    if ((st >> j2) & 1) continue;
                    int e1 = edge_index_[st][j];
                    int e2 = edge_index_[st | (1u << j)][j2];
                    int e3 = edge_index_[st][j2];
                    int e4 = edge_index_[st | (1u << j2)][j];
                    IntMat p1 = edges_[e2].matrix * edges_[e1].matrix;
                    IntMat p2 = edges_[e4].matrix * edges_[e3].matrix;
                    if (p1.is_zero() && p2.is_zero()) continue;
                    int s = p1.proportionality_sign(p2);
                    if (s == 0)
                        throw std::logic_error("face composites are not proportional");
                    std::vector<std::uint64_t> row(words, 0);
                    for (int eid : {e1, e2, e3, e4}) row[eid / 64] ^= 1ull << (eid % 64);
                    rows.push_back(std::move(row));
                    rhs.push_back(s == 1 ? 1 : 0);
                }
            }
        }
        // Gaussian elimination, lexicographically least pivots.
        std::vector<int> pivot_of_col(ne, -1);
        int rank = 0;
        for (int col = 0; col < ne && rank < (int)rows.size(); ++col) {
            int pr = -1;
            for (int r = rank; r < (int)rows.size(); ++r)
                if (rows[r][col / 64] >> (col % 64) & 1) {
                    pr = r;
                    break;
                }
            if (pr < 0) continue;
            std::swap(rows[pr], rows[rank]);
            std::swap(rhs[pr], rhs[rank]);
            for (int r = 0; r < (int)rows.size(); ++r) {
                if (r != rank && (rows[r][col / 64] >> (col % 64) & 1)) {
                    for (int wd = 0; wd < words; ++wd) rows[r][wd] ^= rows[rank][wd];
                    rhs[r] ^= rhs[rank];
                }
            }
            pivot_of_col[col] = rank;
            ++rank;
        }
        for (int r = rank; r < (int)rows.size(); ++r)
            if (rhs[r]) throw std::logic_error("sign system unsolvable");
        // Particular solution: free variables zero.
        std::vector<int> x(ne, 0);
        for (int col = ne - 1; col >= 0; --col) {
            if (pivot_of_col[col] < 0) continue;
            int r = pivot_of_col[col];
            int v = rhs[r];
            for (int col2 = col + 1; col2 < ne; ++col2)
                if (rows[r][col2 / 64] >> (col2 % 64) & 1) v ^= x[col2];
            x[col] = v;
        }
        // Kernel basis from the free columns.
        sign_kernel_.clear();
        for (int fc = 0; fc < ne; ++fc) {
            if (pivot_of_col[fc] >= 0) continue;
            std::vector<int> k(ne, 0);
            k[fc] = 1;
            for (int col = 0; col < ne; ++col) {
                if (pivot_of_col[col] < 0) continue;
                int r = pivot_of_col[col];
                if (rows[r][fc / 64] >> (fc % 64) & 1) k[col] = 1;
            }
            sign_kernel_.push_back(std::move(k));
            if (sign_kernel_.size() >= 16) break;
        }
        for (size_t bit = 0; bit < sign_kernel_.size(); ++bit)
            if (opt_.sign_seed >> bit & 1)
                for (int i = 0; i < ne; ++i) x[i] ^= sign_kernel_[bit][i];
        for (int i = 0; i < ne; ++i) edges_[i].eps = x[i] ? -1 : 1;
    }

    Braid braid_;
    std::vector<CrossingSite> sites_;
    CubeOptions opt_;
    std::optional<Braid> fform_;
    std::vector<Resolution> res_;
    std::vector<Vertex> verts_;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> edge_index_;
    std::vector<std::vector<int>> sign_kernel_;
    std::vector<char> tag_cache_;
    bool parity_consistent_ = true;
    bool lambda_consistent_ = true;
};

} // namespace superklr
