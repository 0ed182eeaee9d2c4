#pragma once

#include <cstdlib>
#include <map>
#include <stdexcept>
#include <utility>

namespace superklr {

// Sign choices (r_i, t_ij) for the diagram calculus, restricted to +-1.
// Constraints: t_ii = 1 and t_ij = t_ji whenever |i-j| != 1.
class ScalarConfig {
public:
    ScalarConfig() = default;

    void set_r(int color, int sign) {
        check_sign(sign);
        r_[color] = sign;
    }

    void set_t(int i, int j, int sign) {
        check_sign(sign);
        if (i == j && sign != 1) throw std::invalid_argument("t_ii must be 1");
        if (std::abs(i - j) != 1) {
            t_[{i, j}] = sign;
            t_[{j, i}] = sign;
        } else {
            t_[{i, j}] = sign;
        }
    }

    int r(int color) const {
        auto it = r_.find(color);
        return it == r_.end() ? 1 : it->second;
    }

    int t(int i, int j) const {
        if (i == j) return 1;
        auto it = t_.find({i, j});
        return it == t_.end() ? 1 : it->second;
    }

    // p_ii = p_{i+1,i} = 1, all other p_ij = 0.
    static int p(int i, int j) { return (i == j || i == j + 1) ? 1 : 0; }

    bool all_default() const {
        for (auto& [k, v] : r_)
            if (v != 1) return false;
        for (auto& [k, v] : t_)
            if (v != 1) return false;
        return true;
    }

private:
    static void check_sign(int s) {
        if (s != 1 && s != -1) throw std::invalid_argument("scalars must be +-1");
    }

    std::map<int, int> r_;
    std::map<std::pair<int, int>, int> t_;
};

} // namespace superklr
