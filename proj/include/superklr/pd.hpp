#pragma once

#include <json.hpp>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "superklr/braid.hpp"

namespace superklr {

// Oriented PD crossing: edge labels for the over strand (in, out) and the
// under strand (in, out), plus the crossing sign.
struct PdCrossing {
    int over_in = 0, over_out = 0;
    int under_in = 0, under_out = 0;
    int sign = 1;
};

struct PdCode {
    std::vector<PdCrossing> crossings;

    static PdCode from_json(const nlohmann::json& j) {
        PdCode pd;
        for (auto& rec : j) {
            PdCrossing x;
            x.over_in = rec.at("over").at(0).get<int>();
            x.over_out = rec.at("over").at(1).get<int>();
            x.under_in = rec.at("under").at(0).get<int>();
            x.under_out = rec.at("under").at(1).get<int>();
            x.sign = rec.at("sign").get<int>();
            if (x.sign != 1 && x.sign != -1) throw std::invalid_argument("sign must be +-1");
            pd.crossings.push_back(x);
        }
        pd.validate();
        return pd;
    }

    nlohmann::json to_json() const {
        nlohmann::json j = nlohmann::json::array();
        for (auto& x : crossings)
            j.push_back({{"over", {x.over_in, x.over_out}},
                         {"under", {x.under_in, x.under_out}},
                         {"sign", x.sign}});
        return j;
    }

    void validate() const {
        std::map<int, int> in_count, out_count;
        for (auto& x : crossings) {
            in_count[x.over_in]++;
            in_count[x.under_in]++;
            out_count[x.over_out]++;
            out_count[x.under_out]++;
        }
        if (in_count.size() != out_count.size())
            throw std::invalid_argument("PD code: dangling edge labels");
        for (auto& [e, n] : in_count)
            if (n != 1 || out_count[e] != 1)
                throw std::invalid_argument("PD code: every edge needs one head and one tail");
    }
};

namespace pd_detail {

// Planar rotation of the four edge slots, counterclockwise from southwest.
// Positive crossing: (over-in, under-in, over-out, under-out);
// negative: (under-in, over-in, under-out, over-out).
// Out-slots are 2 and 3 in both cases.
inline std::array<int, 4> slots_ccw(const PdCrossing& x) {
    if (x.sign > 0) return {x.over_in, x.under_in, x.over_out, x.under_out};
    return {x.under_in, x.over_in, x.under_out, x.over_out};
}

inline bool slot_is_out(int s) { return s >= 2; }

struct PlanarData {
    // dart = 4*crossing + slot; alpha = other end of the same edge.
    std::vector<int> alpha;
    std::vector<std::vector<int>> faces;        // orbits of sigma . alpha
    std::vector<int> face_of_dart;
    std::vector<int> seifert_of_edge_tail;      // seifert circle per tail dart
};

inline PlanarData analyze(const PdCode& pd) {
    const int c = static_cast<int>(pd.crossings.size());
    PlanarData out;
    out.alpha.assign(4 * c, -1);
    std::map<int, int> tail_of, head_of;
    for (int i = 0; i < c; ++i) {
        auto sl = slots_ccw(pd.crossings[i]);
        for (int s = 0; s < 4; ++s) {
            int dart = 4 * i + s;
            if (slot_is_out(s))
                tail_of[sl[s]] = dart;
            else
                head_of[sl[s]] = dart;
        }
    }
    for (auto& [e, d] : tail_of) {
        auto it = head_of.find(e);
        if (it == head_of.end()) throw std::invalid_argument("PD code: unmatched edge");
        out.alpha[d] = it->second;
        out.alpha[it->second] = d;
    }
    // Faces: orbits of dart -> rotate(alpha(dart)).
    out.face_of_dart.assign(4 * c, -1);
    for (int d0 = 0; d0 < 4 * c; ++d0) {
        if (out.face_of_dart[d0] >= 0) continue;
        std::vector<int> face;
        int d = d0;
        while (out.face_of_dart[d] < 0) {
            out.face_of_dart[d] = static_cast<int>(out.faces.size());
            face.push_back(d);
            int a = out.alpha[d];
            d = (a & ~3) | ((a + 1) & 3);
        }
        out.faces.push_back(std::move(face));
    }
    // Seifert circles: follow over-in -> under-out, under-in -> over-out.
    // Work on tail darts: successor(tail dart) = tail dart of the next edge.
    std::map<int, int> succ; // edge -> edge
    for (auto& x : pd.crossings) {
        succ[x.over_in] = x.under_out;
        succ[x.under_in] = x.over_out;
    }
    std::map<int, int> circle_of_edge;
    int ncirc = 0;
    for (auto& [e, d] : tail_of) {
        if (circle_of_edge.count(e)) continue;
        int cur = e;
        while (!circle_of_edge.count(cur)) {
            circle_of_edge[cur] = ncirc;
            cur = succ.at(cur);
        }
        ++ncirc;
    }
    out.seifert_of_edge_tail.assign(4 * c, -1);
    for (auto& [e, d] : tail_of) out.seifert_of_edge_tail[d] = circle_of_edge[e];
    return out;
}

} // namespace pd_detail

// Converts an oriented link PD code to a braid word whose trace closure is
// the same link. Vogel's algorithm: repeatedly remove defective faces (two
// coherent edges on distinct Seifert circles) with a Reidemeister II
// insertion, then read the braid off the nested Seifert circles.
inline Braid pd_to_braid(PdCode pd) {
    if (pd.crossings.empty()) return Braid{1, {}};
    int next_label = 0;
    for (auto& x : pd.crossings)
        next_label = std::max({next_label, x.over_in, x.over_out, x.under_in, x.under_out});
    ++next_label;

    for (int rounds = 0; rounds < 200; ++rounds) {
        auto pl = pd_detail::analyze(pd);
        // Find a defective face: two tail darts (forward edges) or two head
        // darts (backward edges) on different Seifert circles.
        int da = -1, db = -1;
        bool forward = true;
        for (auto& face : pl.faces) {
            for (size_t i = 0; i < face.size() && da < 0; ++i)
                for (size_t j = i + 1; j < face.size() && da < 0; ++j) {
                    int d1 = face[i], d2 = face[j];
                    bool out1 = pd_detail::slot_is_out(d1 & 3);
                    bool out2 = pd_detail::slot_is_out(d2 & 3);
                    if (out1 != out2) continue;
                    int t1 = out1 ? d1 : pl.alpha[d1];
                    int t2 = out2 ? d2 : pl.alpha[d2];
                    if (pl.seifert_of_edge_tail[t1] == pl.seifert_of_edge_tail[t2]) continue;
                    da = d1;
                    db = d2;
                    forward = out1;
                }
            if (da >= 0) break;
        }
        if (da < 0) break; // braided

        // Edge labels of the two defect edges.
        auto label_of_tail = [&](int dart) {
            return pd_detail::slots_ccw(pd.crossings[dart >> 2])[dart & 3];
        };
        int e_lab = label_of_tail(forward ? da : pl.alpha[da]);
        int f_lab = label_of_tail(forward ? db : pl.alpha[db]);

        // Reidemeister II insertion: e fingers over f inside the face.
        int em = next_label++, eb = next_label++, fm = next_label++, fb = next_label++;
        auto relabel_head = [&](int old_lab, int new_lab) {
            for (auto& x : pd.crossings) {
                if (x.over_in == old_lab) {
                    x.over_in = new_lab;
                    return;
                }
                if (x.under_in == old_lab) {
                    x.under_in = new_lab;
                    return;
                }
            }
            throw std::logic_error("relabel: head not found");
        };
        relabel_head(e_lab, eb);
        relabel_head(f_lab, fb);
        PdCrossing x1, x2;
        x1.over_in = e_lab;
        x1.over_out = em;
        x1.under_in = fm;
        x1.under_out = fb;
        x1.sign = forward ? -1 : 1;
        x2.over_in = em;
        x2.over_out = eb;
        x2.under_in = f_lab;
        x2.under_out = fm;
        x2.sign = -x1.sign;
        pd.crossings.push_back(x1);
        pd.crossings.push_back(x2);
        if (rounds == 199) throw std::runtime_error("Vogel moves did not terminate");
    }

    // Seifert circles of the braided diagram.
    std::map<int, int> succ;
    for (auto& x : pd.crossings) {
        succ[x.over_in] = x.under_out;
        succ[x.under_in] = x.over_out;
    }
    std::map<int, int> circle_of_edge;
    std::vector<std::vector<int>> circle_edges; // cyclic edge walk per circle
    for (auto& [e, s] : succ) {
        if (circle_of_edge.count(e)) continue;
        std::vector<int> walk;
        int cur = e;
        while (!circle_of_edge.count(cur)) {
            circle_of_edge[cur] = static_cast<int>(circle_edges.size());
            walk.push_back(cur);
            cur = succ.at(cur);
        }
        circle_edges.push_back(std::move(walk));
    }
    const int ncirc = static_cast<int>(circle_edges.size());

    // Crossings join two circles; the simple graph per component must be a
    // path, whose order gives the strand indices.
    std::vector<std::set<int>> adj(ncirc);
    for (auto& x : pd.crossings) {
        int a = circle_of_edge.at(x.over_in);
        int b = circle_of_edge.at(x.under_in);
        if (a == b) throw std::runtime_error("self-adjacent Seifert circle after Vogel moves");
        adj[a].insert(b);
        adj[b].insert(a);
    }
    std::vector<int> strand_of(ncirc, -1);
    int next_strand = 0;
    std::vector<char> used(ncirc, 0);
    for (int start = 0; start < ncirc; ++start) {
        if (used[start]) continue;
        // Walk the path component from an endpoint.
        int end = start;
        std::set<int> seen{start};
        bool moved = true;
        while (moved) {
            moved = false;
            for (int nb : adj[end])
                if (!seen.count(nb)) {
                    if (adj[end].size() > 2)
                        throw std::runtime_error("Seifert graph is not a path");
                    end = nb;
                    seen.insert(nb);
                    moved = true;
                    break;
                }
            if (adj[end].size() == 1 && seen.size() > 1) break;
        }
        int cur = end, prev = -1;
        while (true) {
            used[cur] = 1;
            strand_of[cur] = next_strand++;
            int nxt = -1;
            for (int nb : adj[cur])
                if (nb != prev && !used[nb]) nxt = nb;
            if (nxt < 0) break;
            prev = cur;
            cur = nxt;
        }
    }

    // Cyclic crossing order along each circle, then merge into a word.
    auto crossings_along = [&](int circ) {
        std::vector<int> order; // crossing indices
        for (int e : circle_edges[circ]) {
            for (size_t i = 0; i < pd.crossings.size(); ++i) {
                const auto& x = pd.crossings[i];
                if (x.over_in == e || x.under_in == e) {
                    order.push_back(static_cast<int>(i));
                    break;
                }
            }
        }
        return order;
    };

    std::vector<int> word_ids; // crossing indices in braid order
    std::vector<int> circ_of_strand(next_strand);
    for (int ci = 0; ci < ncirc; ++ci) circ_of_strand[strand_of[ci]] = ci;
    for (int s = 0; s < next_strand; ++s) {
        int ci = circ_of_strand[s];
        auto cyc = crossings_along(ci);
        if (cyc.empty()) continue;
        auto involves_lower = [&](int xi) {
            const auto& x = pd.crossings[xi];
            int a = strand_of[circle_of_edge.at(x.over_in)];
            int b = strand_of[circle_of_edge.at(x.under_in)];
            return std::min(a, b) < s;
        };
        bool has_anchor = false;
        for (int xi : cyc) has_anchor = has_anchor || involves_lower(xi);
        if (!has_anchor) {
            for (int xi : cyc)
                if (std::find(word_ids.begin(), word_ids.end(), xi) == word_ids.end())
                    word_ids.push_back(xi);
            continue;
        }
        // Rotate so the walk starts at an anchor, then place each run of new
        // crossings right after its anchor.
        size_t start = 0;
        while (!involves_lower(cyc[start])) ++start;
        std::rotate(cyc.begin(), cyc.begin() + start, cyc.end());
        int anchor_pos = -1;
        for (int xi : cyc) {
            if (involves_lower(xi)) {
                auto it = std::find(word_ids.begin(), word_ids.end(), xi);
                if (it == word_ids.end()) throw std::logic_error("anchor missing from word");
                anchor_pos = static_cast<int>(it - word_ids.begin());
            } else if (std::find(word_ids.begin(), word_ids.end(), xi) == word_ids.end()) {
                word_ids.insert(word_ids.begin() + (++anchor_pos), xi);
            }
        }
    }

    Braid out;
    out.strands = std::max(next_strand, 1);
    for (int xi : word_ids) {
        const auto& x = pd.crossings[xi];
        int a = strand_of[circle_of_edge.at(x.over_in)];
        int b = strand_of[circle_of_edge.at(x.under_in)];
        if (std::abs(a - b) != 1)
            throw std::runtime_error("crossing joins non-adjacent strands after Vogel moves");
        out.word.push_back(x.sign * (std::min(a, b) + 1));
    }
    out.validate();
    return out;
}

// PD presentation of a braid closure (for round trips and tests).
inline PdCode braid_to_pd(const Braid& b) {
    b.validate();
    const int k = b.strands;
    const int c = b.crossings();
    if (c == 0) throw std::invalid_argument("zero-crossing braids have no PD code");
    // Arc labels: (position, level) consecutively relabeled along each strand
    // interval between crossings, wrapping through the closure.
    const int levels = c;
    auto arc = [&](int pos, int lev) { return ((lev % levels + levels) % levels) * k + pos + 1; };
    // Collapse labels across levels not separated by a crossing at this
    // position: use union-find over (pos, lev).
    std::vector<int> parent(k * levels);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (int j = 0; j < c; ++j) {
        const int p = std::abs(b.word[j]) - 1;
        for (int q = 0; q < k; ++q) {
            if (q == p || q == p + 1) continue;
            int a = (arc(q, j) - 1), bb = (arc(q, j + 1) - 1);
            parent[find(a)] = find(bb);
        }
    }
    PdCode pd;
    for (int j = 0; j < c; ++j) {
        const int p = std::abs(b.word[j]) - 1;
        int bl = find(arc(p, j) - 1) + 1;      // below left
        int br = find(arc(p + 1, j) - 1) + 1;  // below right
        int al = find(arc(p, j + 1) - 1) + 1;  // above left
        int ar = find(arc(p + 1, j + 1) - 1) + 1;
        PdCrossing x;
        x.sign = b.word[j] > 0 ? 1 : -1;
        if (x.sign > 0) {
            x.over_in = bl;
            x.over_out = ar;
            x.under_in = br;
            x.under_out = al;
        } else {
            x.over_in = br;
            x.over_out = al;
            x.under_in = bl;
            x.under_out = ar;
        }
        pd.crossings.push_back(x);
    }
    pd.validate();
    return pd;
}

} // namespace superklr
