#pragma once

#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "superklr/braid.hpp"
#include "superklr/colored_sequence.hpp"

namespace superklr {

// One ladder rung moving `thickness` boxes from column `col` to `col`+1
// (columns are 1-based).
struct Rung {
    int col = 1;
    int thickness = 1;
};

// A crossing slot in the compiled ladder. The local complex sits at columns
// (col, col+1); compensation shifts apply when the F-form sign differs from
// the diagram sign (never for braid input, where no rotation occurs).
struct CrossingSite {
    int index = 0;      // position in the braid word
    int sign = 1;       // crossing sign in the input diagram
    int fform_sign = 1; // sign after conversion to F-form
    int col = 1;        // left column of the local picture
    int dq = 0;         // compensation shift in q
    int dh = 0;         // compensation shift in homological degree

    bool flipped() const { return sign != fform_sign; }
};

// Ladder web with all rungs pointing right; slices are recorded bottom to
// top as flat rungs interleaved with crossing slots.
struct FFormWeb {
    int columns = 2;
    std::vector<int> lambda; // bottom weight
    std::vector<int> mu;     // top weight
    // slice s is either a rung (rung_at[s] >= 0 indexes rungs) or a crossing
    // (site_at[s] >= 0 indexes sites).
    std::vector<Rung> rungs;
    std::vector<int> slice_kind; // 0 = rung, 1 = crossing
    std::vector<int> slice_ref;
    bool explicit_closure = true; // false: closure carried by the canonical pairing

    // Applies every flat rung and checks that labels stay in {0,1,2}; at a
    // crossing slot both local words must be admissible. Returns the final
    // weight of the flat part.
    std::vector<int> validate(const std::vector<CrossingSite>& sites) const {
        std::vector<int> w = lambda;
        size_t ri = 0, si = 0;
        auto move = [&](int col, int th) {
            if (col < 1 || col >= columns) throw std::logic_error("rung column out of range");
            w[col - 1] -= th;
            w[col] += th;
            if (w[col - 1] < 0 || w[col] > 2) throw std::logic_error("label out of {0,1,2}");
        };
        for (size_t s = 0; s < slice_kind.size(); ++s) {
            if (slice_kind[s] == 0) {
                const Rung& r = rungs.at(slice_ref[s]);
                move(r.col, r.thickness);
                ++ri;
            } else {
                // crossing at (c, c+1): both resolutions move one box from c
                // and one from c+1 rightward, in the two orders.
                const CrossingSite& site = sites.at(slice_ref[s]);
                int c = site.col;
                std::vector<int> probe = w;
                auto step = [&](std::vector<int>& v, int col) {
                    v[col - 1] -= 1;
                    v[col] += 1;
                    if (v[col - 1] < 0 || v[col] > 2)
                        throw std::logic_error("inadmissible crossing slice");
                };
                step(probe, c);
                step(probe, c + 1); // merged order
                std::vector<int> probe2 = w;
                step(probe2, c + 1);
                step(probe2, c); // parallel order
                if (probe != probe2) throw std::logic_error("crossing orders disagree");
                w = probe;
                ++si;
            }
        }
        (void)ri;
        (void)si;
        return w;
    }
};

struct CompiledWeb {
    FFormWeb web;
    std::vector<CrossingSite> sites;
};

// The divided-power word of the canonical 1-morphism from the dominant
// level-2 weight to the antidominant one: blocks move right, rightmost
// first. Letters are returned bottom to top.
inline std::vector<Strand> canonical_word(const std::vector<int>& lambda) {
    std::vector<int> w = lambda;
    const int k = static_cast<int>(w.size());
    for (int v : w)
        if (v < 0 || v > 2) throw std::invalid_argument("weight entries must lie in {0,1,2}");
    std::vector<int> target = w;
    std::sort(target.begin(), target.end());
    std::vector<Strand> letters;
    // Move the rightmost movable block first, as in the closure words; each
    // block travels as a unit to its final slot.
    for (int pass = 0; pass < k * k + 4; ++pass) {
        if (w == target) break;
        int src = -1;
        for (int i = k - 1; i >= 0; --i) {
            if (w[i] == 0) continue;
            // Find the final slot this block still has to reach.
            int need = 0;
            for (int j = i + 1; j < k; ++j)
                if (w[j] < target[j]) need = 1;
            if (w[i] > target[i] || need) {
                src = i;
                break;
            }
        }
        if (src < 0) break;
        if (src + 1 >= k) throw std::logic_error("canonical word: no room to the right");
        int th = std::min(w[src], 2 - w[src + 1]);
        if (th <= 0) throw std::logic_error("canonical word: blocked");
        letters.push_back({src + 1, th});
        w[src] -= th;
        w[src + 1] += th;
    }
    if (w != target) throw std::logic_error("canonical word did not terminate");
    // Letters were produced bottom to top already (rightmost block first).
    return letters;
}

// Compiles a braid closure to F-form. For one- and two-strand braids this is
// the verbatim ladder from the closure pictures: bottom word parks the second
// return at the last column, the braid band drifts right one column per
// crossing, and the top word carries the first return to its exit. Wider
// braids keep the braid band explicit and carry the closure through the
// canonical pairing of boundary columns.
inline CompiledWeb compile_fform(const Braid& b) {
    b.validate();
    CompiledWeb out;
    const int k = b.strands;
    const int c = b.crossings();

    auto add_rung = [&](int col, int th) {
        out.web.rungs.push_back({col, th});
        out.web.slice_kind.push_back(0);
        out.web.slice_ref.push_back(static_cast<int>(out.web.rungs.size()) - 1);
    };
    auto add_site = [&](CrossingSite s) {
        out.sites.push_back(s);
        out.web.slice_kind.push_back(1);
        out.web.slice_ref.push_back(static_cast<int>(out.sites.size()) - 1);
    };

    if (k == 1) {
        out.web.columns = 2;
        out.web.lambda = {2, 0};
        add_rung(1, 2);
        out.web.mu = {0, 2};
        return out;
    }

    if (k == 2) {
        if (c == 0) {
            out.web.columns = 2;
            out.web.lambda = {2, 2};
            out.web.mu = {2, 2};
            return out;
        }
        const int cols = c + 2;
        out.web.columns = cols;
        out.web.lambda.assign(cols, 0);
        out.web.lambda[0] = out.web.lambda[1] = 2;
        // Bottom closure: second return travels to the last column.
        for (int col = 2; col <= c + 1; ++col) add_rung(col, 1);
        // Braid band: crossing m sits at columns (m, m+1).
        for (int m = 0; m < c; ++m)
            add_site({m, b.word[m] > 0 ? 1 : -1, b.word[m] > 0 ? 1 : -1, m + 1, 0, 0});
        // Top closure: first return meets the first exit at column c+1.
        for (int col = 1; col <= c; ++col) add_rung(col, 1);
        out.web.mu.assign(cols, 0);
        out.web.mu[cols - 1] = out.web.mu[cols - 2] = 2;
        return out;
    }

    // k >= 3: explicit braid band with make-room pushes; the trace closure
    // is carried by the canonical pairing of the boundary columns rather
    // than explicit parked-return rungs (the flat part stays admissible).
    out.web.explicit_closure = false;
    struct Step {
        bool is_site;
        Rung rung;
        CrossingSite site;
    };
    auto simulate = [&](std::vector<Step>* emit) {
        std::vector<int> col(k);
        std::iota(col.begin(), col.end(), 1);
        int maxcol = k;
        auto rung = [&](int c0) {
            if (emit) emit->push_back({false, {c0, 1}, {}});
        };
        std::function<void(int, int)> make_room = [&](int pos, int mincol) {
            if (pos >= k || col[pos] >= mincol) return;
            make_room(pos + 1, mincol + 1);
            while (col[pos] < mincol) {
                rung(col[pos]);
                ++col[pos];
            }
            maxcol = std::max(maxcol, col[pos]);
        };
        for (int m = 0; m < c; ++m) {
            const int p = std::abs(b.word[m]) - 1;
            while (col[p] + 1 < col[p + 1]) {
                rung(col[p]);
                ++col[p];
            }
            make_room(p + 2, col[p + 1] + 2);
            if (emit)
                emit->push_back({true,
                                 {},
                                 {m, b.word[m] > 0 ? 1 : -1, b.word[m] > 0 ? 1 : -1, col[p], 0, 0}});
            col[p] = col[p + 1];
            col[p + 1] = col[p] + 1;
            maxcol = std::max(maxcol, col[p + 1] + 1);
        }
        return maxcol;
    };
    const int zmax = simulate(nullptr);
    out.web.columns = zmax + k + 1;
    out.web.lambda.assign(out.web.columns, 0);
    for (int i = 0; i < k; ++i) out.web.lambda[i] = 2;
    // Park one box of each boundary pair beyond the braid band, rightmost
    // pair first.
    for (int p = k - 1; p >= 0; --p)
        for (int c0 = p + 1; c0 < zmax + p + 1; ++c0) add_rung(c0, 1);
    std::vector<Step> steps;
    simulate(&steps);
    for (const auto& st : steps) {
        if (st.is_site)
            add_site(st.site);
        else
            add_rung(st.rung.col, st.rung.thickness);
    }
    out.web.mu = out.web.validate(out.sites);
    return out;
}

} // namespace superklr
