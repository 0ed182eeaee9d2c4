#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace superklr {

struct Strand {
    int color = 1;     // in I = {1..n}
    int thickness = 1; // 1 or 2

    auto operator<=>(const Strand&) const = default;
};

// A word i_1^(e_1) ... i_d^(e_d) of colors with thicknesses in {1,2},
// living in ambient rank n.
class ColoredSequence {
public:
    ColoredSequence() = default;
    ColoredSequence(int rank, std::vector<Strand> strands)
        : rank_(rank), strands_(std::move(strands)) {
        for (const auto& s : strands_) {
            if (s.color < 1 || s.color > rank_) throw std::invalid_argument("color out of range");
            if (s.thickness != 1 && s.thickness != 2)
                throw std::invalid_argument("thickness must be 1 or 2");
        }
    }

    static ColoredSequence simple(int rank, const std::vector<int>& colors) {
        std::vector<Strand> s;
        s.reserve(colors.size());
        for (int c : colors) s.push_back({c, 1});
        return ColoredSequence(rank, std::move(s));
    }

    int rank() const { return rank_; }
    int size() const { return static_cast<int>(strands_.size()); }
    const Strand& strand(int r) const { return strands_.at(r); }
    const std::vector<Strand>& strands() const { return strands_; }

    int boxes() const {
        int b = 0;
        for (const auto& s : strands_) b += s.thickness;
        return b;
    }

    // nu = sum of thickness * color multiplicity, as color -> count.
    std::map<int, int> nu() const {
        std::map<int, int> v;
        for (const auto& s : strands_) v[s.color] += s.thickness;
        return v;
    }

    ColoredSequence concat(const ColoredSequence& o) const {
        if (rank_ != o.rank_) throw std::invalid_argument("rank mismatch");
        std::vector<Strand> s = strands_;
        s.insert(s.end(), o.strands_.begin(), o.strands_.end());
        return ColoredSequence(rank_, std::move(s));
    }

    // Expands thickness-2 strands into repeated boxes.
    std::vector<int> box_colors() const {
        std::vector<int> out;
        for (const auto& s : strands_)
            for (int k = 0; k < s.thickness; ++k) out.push_back(s.color);
        return out;
    }

    // Internal q-degree offset of the context: the operator action of every
    // generator shifts (2 * word length + offset) by exactly the declared
    // degree of that generator.
    int degree_offset() const {
        int off = 0;
        for (const auto& s : strands_)
            if (s.thickness == 2) ++off;
        auto bc = box_colors();
        for (size_t r = 0; r < bc.size(); ++r)
            for (size_t s = r + 1; s < bc.size(); ++s)
                if (bc[s] == bc[r] + 1) --off;
        return off;
    }

    // Parity contribution of the strands strictly left of position r;
    // thickness-2 strands carry an odd internal offset.
    int parity_offset_before(int r) const {
        int p = 0;
        for (int i = 0; i < r && i < size(); ++i)
            if (strands_[i].thickness == 2) ++p;
        return p & 1;
    }

    // Weight path of the F-word read right to left from ambient weight lambda:
    // strand of color i, thickness e moves e boxes from column i to i+1.
    // Returns false if any intermediate weight leaves {0,1,2}^k (level-2 range).
    bool admissible_from(std::vector<int> lambda) const {
        const int k = static_cast<int>(lambda.size());
        for (int r = size() - 1; r >= 0; --r) {
            const auto& s = strands_[r];
            int i = s.color;
            if (i < 1 || i + 1 > k) return false;
            lambda[i - 1] -= s.thickness;
            lambda[i] += s.thickness;
            if (lambda[i - 1] < 0 || lambda[i] > 2) return false;
        }
        return true;
    }

    // True if some dominant level-2 weight of length <= max_cols admits this word.
    bool level2_admissible(int max_cols) const {
        for (int k = 2; k <= max_cols; ++k) {
            for (int twos = 0; twos <= k; ++twos) {
                for (int eps = 0; eps <= 1; ++eps) {
                    if (twos == k && eps == 1) continue;
                    std::vector<int> lam(k, 0);
                    for (int i = 0; i < twos; ++i) lam[i] = 2;
                    if (eps && twos < k) lam[twos] = 1;
                    if (admissible_from(lam)) return true;
                }
            }
        }
        return false;
    }

    auto operator<=>(const ColoredSequence&) const = default;

    std::string str() const {
        std::ostringstream os;
        os << "(";
        for (int r = 0; r < size(); ++r) {
            if (r) os << " ";
            os << strands_[r].color;
            if (strands_[r].thickness == 2) os << "^(2)";
        }
        os << ")";
        return os.str();
    }

private:
    int rank_ = 1;
    std::vector<Strand> strands_;
};

} // namespace superklr
