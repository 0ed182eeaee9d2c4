#pragma once

#include <cstdint>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace superklr {

// A braid word on `strands` strands; letters are nonzero integers a with
// |a| < strands, sign giving the crossing sign. Links enter as trace closures.
struct Braid {
    int strands = 1;
    std::vector<int> word;

    int crossings() const { return static_cast<int>(word.size()); }
    int writhe() const {
        int w = 0;
        for (int a : word) w += (a > 0) ? 1 : -1;
        return w;
    }
    int n_plus() const {
        int n = 0;
        for (int a : word)
            if (a > 0) ++n;
        return n;
    }
    int n_minus() const { return crossings() - n_plus(); }

    Braid mirror() const {
        Braid b{strands, word};
        for (int& a : b.word) a = -a;
        return b;
    }

    void validate() const {
        if (strands < 1) throw std::invalid_argument("braid needs at least one strand");
        for (int a : word)
            if (a == 0 || std::abs(a) >= strands)
                throw std::invalid_argument("braid letter out of range");
    }

    std::string str() const {
        std::ostringstream os;
        os << strands << ":";
        for (int a : word) os << " " << a;
        return os.str();
    }

    // Text format "k: a1 a2 ...".
    static Braid parse(const std::string& text) {
        Braid b;
        std::string s = text;
        auto colon = s.find(':');
        if (colon == std::string::npos) throw std::invalid_argument("braid format is 'k: a1 a2 ...'");
        b.strands = std::stoi(s.substr(0, colon));
        std::istringstream is(s.substr(colon + 1));
        int a;
        while (is >> a) b.word.push_back(a);
        if (!is.eof()) throw std::invalid_argument("bad braid letter");
        b.validate();
        return b;
    }
};

enum class Smoothing { Parallel, CapCup };

// Cube coordinates: state bit 0 sits in homological degree 0 for positive
// crossings and carries the cap-cup for negative ones, so that bit flips
// always raise the homological degree by one.
inline Smoothing smoothing_of(int letter, int bit) {
    if (letter > 0) return bit ? Smoothing::CapCup : Smoothing::Parallel;
    return bit ? Smoothing::Parallel : Smoothing::CapCup;
}

namespace detail {

struct Dsu {
    std::vector<int> p;
    explicit Dsu(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
    int find(int x) {
        while (p[x] != x) x = p[x] = p[p[x]];
        return x;
    }
    void unite(int a, int b) { p[find(a)] = find(b); }
};

} // namespace detail

// Circle decomposition of one full resolution of a braid closure.
// Strand segments live between consecutive crossings; segment levels wrap
// through the trace closure.
class Resolution {
public:
    Resolution(const Braid& b, std::uint32_t state) : braid_(b), state_(state) {
        const int k = b.strands;
        levels_ = std::max(b.crossings(), 1);
        detail::Dsu dsu(k * levels_);
        auto node = [&](int pos, int lev) { return ((lev % levels_ + levels_) % levels_) * k + pos; };
        for (int j = 0; j < b.crossings(); ++j) {
            const int p = std::abs(b.word[j]) - 1;
            const Smoothing sm = smoothing_of(b.word[j], (state >> j) & 1);
            for (int q = 0; q < k; ++q) {
                if (q == p || q == p + 1) continue;
                dsu.unite(node(q, j), node(q, j + 1));
            }
            if (sm == Smoothing::Parallel) {
                dsu.unite(node(p, j), node(p, j + 1));
                dsu.unite(node(p + 1, j), node(p + 1, j + 1));
            } else {
                dsu.unite(node(p, j), node(p + 1, j));
                dsu.unite(node(p, j + 1), node(p + 1, j + 1));
            }
        }
        circle_of_node_.assign(k * levels_, -1);
        for (int v = 0; v < k * levels_; ++v) {
            int root = dsu.find(v);
            if (circle_of_node_[root] < 0) {
                circle_of_node_[root] = circles_++;
            }
            circle_of_node_[v] = circle_of_node_[root];
        }
        // Renumber circles by their least node so ordering is canonical.
        std::vector<int> first(circles_, -1);
        int next = 0;
        std::vector<int> remap(circles_, -1);
        for (int v = 0; v < k * levels_; ++v) {
            int c = circle_of_node_[v];
            if (remap[c] < 0) remap[c] = next++;
        }
        for (auto& c : circle_of_node_) c = remap[c];
        (void)first;
    }

    int circles() const { return circles_; }
    std::uint32_t state() const { return state_; }

    int circle_at(int pos, int level) const {
        int lev = ((level % levels_) + levels_) % levels_;
        return circle_of_node_[lev * braid_.strands + pos];
    }

    // The circle through the leftmost strand at the bottom of the diagram.
    int basepoint_circle() const { return circle_at(0, 0); }

    // Circles meeting crossing j from below-left / below-right (parallel state)
    // or cap / cup (cap-cup state).
    std::pair<int, int> site_circles(int j) const {
        const int p = std::abs(braid_.word[j]) - 1;
        const Smoothing sm = smoothing_of(braid_.word[j], (state_ >> j) & 1);
        if (sm == Smoothing::Parallel) return {circle_at(p, j), circle_at(p + 1, j)};
        return {circle_at(p, j), circle_at(p, j + 1)};
    }

    Smoothing smoothing_at(int j) const {
        return smoothing_of(braid_.word[j], (state_ >> j) & 1);
    }

    // Case tag of the local Frobenius configuration at crossing j, evaluated
    // on the two-circle side of an edge: follow the strand upward from the
    // upper-left corner of the site; the side of its first cap-cup turn
    // distinguishes the side-by-side picture (a) from the offset one (b).
    char frobenius_case(int j) const {
        const int c = braid_.crossings();
        if (c <= 1) return 'a';
        int q = std::abs(braid_.word[j]) - 1;
        int s = j + 1;
        for (int steps = 0; steps < 2 * c; ++steps) {
            int jj = ((s % c) + c) % c;
            if (jj == j) break;
            const int pj = std::abs(braid_.word[jj]) - 1;
            if ((q == pj || q == pj + 1) && smoothing_at(jj) == Smoothing::CapCup) {
                const int partner = (q == pj) ? pj + 1 : pj - 1;
                return partner < q ? 'a' : 'b';
            }
            ++s;
        }
        return 'a';
    }

private:
    Braid braid_;
    std::uint32_t state_;
    int levels_ = 1;
    int circles_ = 0;
    std::vector<int> circle_of_node_;
};

} // namespace superklr
