#ifndef SEXTIC_RAT_POLY_HPP
#define SEXTIC_RAT_POLY_HPP

/* Dense univariate polynomials over Q: the coefficient side of field
 * element arithmetic, characteristic polynomials and the extended Euclid
 * used for inverses mod f_m.
 */

#include "sextic/int_poly.hpp"
#include "sextic/numeric.hpp"

#include <sstream>
#include <tuple>
#include <vector>

namespace sextic {

class RatPoly {
  public:
    RatPoly() = default;
    explicit RatPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }
    explicit RatPoly(const IntPoly& p) {
        c_.reserve(p.coeffs().size());
        for (const Int& v : p.coeffs()) c_.emplace_back(v);
    }

    static RatPoly constant(Rat v) {
        std::vector<Rat> c;
        if (sgn(v) != 0) c.push_back(std::move(v));
        return RatPoly(std::move(c));
    }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<Rat>& coeffs() const { return c_; }

    Rat coeff(int i) const {
        if (i < 0 || i >= static_cast<int>(c_.size())) return Rat(0);
        return c_[i];
    }

    const Rat& lc() const {
        if (is_zero()) throw domain_error("lc of zero polynomial");
        return c_.back();
    }

    bool is_monic() const { return !is_zero() && c_.back() == 1; }

    bool operator==(const RatPoly& o) const { return c_ == o.c_; }

    RatPoly operator-() const {
        std::vector<Rat> c(c_);
        for (Rat& v : c) v = -v;
        return RatPoly(std::move(c));
    }

    RatPoly operator+(const RatPoly& o) const {
        std::vector<Rat> c(std::max(c_.size(), o.c_.size()));
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (i < c_.size()) c[i] += c_[i];
            if (i < o.c_.size()) c[i] += o.c_[i];
        }
        return RatPoly(std::move(c));
    }

    RatPoly operator-(const RatPoly& o) const { return *this + (-o); }

    RatPoly operator*(const RatPoly& o) const {
        if (is_zero() || o.is_zero()) return RatPoly();
        std::vector<Rat> c(c_.size() + o.c_.size() - 1);
        for (std::size_t i = 0; i < c_.size(); ++i)
            for (std::size_t j = 0; j < o.c_.size(); ++j)
                c[i + j] += c_[i] * o.c_[j];
        return RatPoly(std::move(c));
    }

    RatPoly operator*(const Rat& s) const {
        if (sgn(s) == 0) return RatPoly();
        std::vector<Rat> c(c_);
        for (Rat& v : c) v *= s;
        return RatPoly(std::move(c));
    }

    RatPoly derivative() const {
        if (c_.size() <= 1) return RatPoly();
        std::vector<Rat> c(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) c[i - 1] = c_[i] * Rat(static_cast<long>(i));
        return RatPoly(std::move(c));
    }

    Rat eval(const Rat& x) const {
        Rat r(0);
        for (std::size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
        return r;
    }

    bool has_integer_coeffs() const {
        for (const Rat& v : c_)
            if (!is_integer(v)) return false;
        return true;
    }

    /* smallest d > 0 with d * this integral, plus the integer polynomial */
    std::pair<IntPoly, Int> cleared_denominators() const {
        Int d(1);
        for (const Rat& v : c_) d = lcm_int(d, v.get_den());
        std::vector<Int> c(c_.size());
        for (std::size_t i = 0; i < c_.size(); ++i) {
            Rat s = c_[i] * Rat(d);
            c[i] = to_int(s);
        }
        return {IntPoly(std::move(c)), d};
    }

    std::string str(const std::string& var = "x") const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (std::size_t i = c_.size(); i-- > 0;) {
            if (sgn(c_[i]) == 0) continue;
            Rat a = c_[i];
            if (!first) os << (sgn(a) < 0 ? " - " : " + ");
            else if (sgn(a) < 0) os << "-";
            first = false;
            Rat v = abs(a);
            if (v != 1 || i == 0) os << v.get_str();
            if (i > 0) {
                if (v != 1) os << "*";
                os << var;
                if (i > 1) os << "^" << i;
            }
        }
        return os.str();
    }

  private:
    std::vector<Rat> c_;

    void trim() {
        while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
    }
};

/* Division with remainder over Q: a = q*b + r, deg r < deg b. */
inline std::pair<RatPoly, RatPoly> divrem(const RatPoly& a, const RatPoly& b) {
    if (b.is_zero()) throw domain_error("divrem: zero divisor");
    std::vector<Rat> r(a.coeffs());
    std::vector<Rat> q;
    int db = b.degree();
    if (a.degree() >= db) q.assign(a.degree() - db + 1, Rat(0));
    int dr = a.degree();
    auto deg_of = [&]() {
        while (dr >= 0 && sgn(r[dr]) == 0) --dr;
    };
    deg_of();
    while (dr >= db) {
        Rat f = r[dr] / b.lc();
        q[dr - db] = f;
        for (int i = 0; i <= db; ++i) r[dr - db + i] -= f * b.coeff(i);
        deg_of();
    }
    r.resize(dr + 1);
    return {RatPoly(std::move(q)), RatPoly(std::move(r))};
}

/* Extended Euclid: returns (g, u, v) with u*a + v*b = g, g monic (or zero). */
inline std::tuple<RatPoly, RatPoly, RatPoly> xgcd(const RatPoly& a, const RatPoly& b) {
    RatPoly r0 = a, r1 = b;
    RatPoly u0 = RatPoly::constant(Rat(1)), u1;
    RatPoly v0, v1 = RatPoly::constant(Rat(1));
    while (!r1.is_zero()) {
        auto [q, r2] = divrem(r0, r1);
        RatPoly u2 = u0 - q * u1;
        RatPoly v2 = v0 - q * v1;
        r0 = std::move(r1); r1 = std::move(r2);
        u0 = std::move(u1); u1 = std::move(u2);
        v0 = std::move(v1); v1 = std::move(v2);
    }
    if (r0.is_zero()) return {r0, u0, v0};
    Rat inv = Rat(1) / r0.lc();
    return {r0 * inv, u0 * inv, v0 * inv};
}

}  // namespace sextic

#endif
