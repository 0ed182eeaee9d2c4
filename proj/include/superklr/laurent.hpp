#pragma once

#include <cstdint>
#include <map>
#include <sstream>
#include <string>

namespace superklr {

// Laurent polynomial in one variable with integer coefficients.
// Zero coefficients are never stored.
class Laurent {
public:
    Laurent() = default;
    explicit Laurent(std::int64_t c, int exp = 0) {
        if (c != 0) coeffs_[exp] = c;
    }

    static Laurent monomial(int exp, std::int64_t c = 1) { return Laurent(c, exp); }

    const std::map<int, std::int64_t>& terms() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }

    std::int64_t coeff(int exp) const {
        auto it = coeffs_.find(exp);
        return it == coeffs_.end() ? 0 : it->second;
    }

    void add_term(int exp, std::int64_t c) {
        if (c == 0) return;
        auto it = coeffs_.find(exp);
        if (it == coeffs_.end()) {
            coeffs_[exp] = c;
        } else {
            it->second += c;
            if (it->second == 0) coeffs_.erase(it);
        }
    }

    Laurent& operator+=(const Laurent& o) {
        for (auto& [e, c] : o.coeffs_) add_term(e, c);
        return *this;
    }
    Laurent& operator-=(const Laurent& o) {
        for (auto& [e, c] : o.coeffs_) add_term(e, -c);
        return *this;
    }
    friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
    friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }

    friend Laurent operator*(const Laurent& a, const Laurent& b) {
        Laurent r;
        for (auto& [ea, ca] : a.coeffs_)
            for (auto& [eb, cb] : b.coeffs_) r.add_term(ea + eb, ca * cb);
        return r;
    }
    Laurent& operator*=(const Laurent& o) { return *this = *this * o; }

    Laurent shifted(int s) const {
        Laurent r;
        for (auto& [e, c] : coeffs_) r.coeffs_[e + s] = c;
        return r;
    }

    // q -> q^{-1}
    Laurent mirrored() const {
        Laurent r;
        for (auto& [e, c] : coeffs_) r.coeffs_[-e] = c;
        return r;
    }

    bool operator==(const Laurent& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const Laurent& o) const { return !(*this == o); }

    // True divisibility test over Z[q, q^-1]; on success sets quotient.
    // Degrees stay within [lo(this) - lo(d), hi(this) - hi(d)], so ordinary
    // polynomial long division terminates.
    bool divide(const Laurent& d, Laurent& quot) const {
        quot = Laurent();
        if (d.is_zero()) return is_zero();
        if (is_zero()) return true;
        const int qlo = coeffs_.begin()->first - d.coeffs_.begin()->first;
        const int qhi = coeffs_.rbegin()->first - d.coeffs_.rbegin()->first;
        if (qlo > qhi) return false;
        Laurent rem = *this;
        const int dlead = d.coeffs_.rbegin()->first;
        const std::int64_t dc = d.coeffs_.rbegin()->second;
        while (!rem.is_zero()) {
            int rlead = rem.coeffs_.rbegin()->first;
            std::int64_t rc = rem.coeffs_.rbegin()->second;
            int e = rlead - dlead;
            if (e < qlo || e > qhi || rc % dc != 0) return false;
            Laurent t(rc / dc, e);
            quot += t;
            rem -= t * d;
        }
        return true;
    }

    std::string str(const std::string& var = "q") const {
        if (coeffs_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto& [e, c] : coeffs_) {
            std::int64_t a = c;
            if (!first) {
                os << (a < 0 ? " - " : " + ");
                if (a < 0) a = -a;
            } else if (a < 0) {
                os << "-";
                a = -a;
            }
            if (a != 1 || e == 0) os << a;
            if (e != 0) {
                if (a != 1) os << "*";
                os << var;
                if (e != 1) os << "^" << e;
            }
            first = false;
        }
        return os.str();
    }

private:
    std::map<int, std::int64_t> coeffs_;
};

// Polynomial in t (homological variable) with Laurent-in-q coefficients.
class Poincare {
public:
    void add(int h, const Laurent& p) {
        if (p.is_zero()) return;
        auto it = rows_.find(h);
        if (it == rows_.end()) {
            rows_[h] = p;
        } else {
            it->second += p;
            if (it->second.is_zero()) rows_.erase(it);
        }
    }
    void add(int h, int q, std::int64_t c) { add(h, Laurent(c, q)); }

    const std::map<int, Laurent>& rows() const { return rows_; }

    Laurent euler() const {
        Laurent r;
        for (auto& [h, p] : rows_) {
            if (h % 2 == 0)
                r += p;
            else
                r -= p;
        }
        return r;
    }

    Laurent collapse_q() const {
        Laurent r;
        for (auto& [h, p] : rows_) r += p;
        return r;
    }

    bool operator==(const Poincare& o) const { return rows_ == o.rows_; }

    std::string str() const {
        if (rows_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto& [h, p] : rows_) {
            if (!first) os << " + ";
            os << "t^" << h << "*(" << p.str() << ")";
            first = false;
        }
        return os.str();
    }

private:
    std::map<int, Laurent> rows_;
};

} // namespace superklr
