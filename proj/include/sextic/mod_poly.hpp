#ifndef SEXTIC_MOD_POLY_HPP
#define SEXTIC_MOD_POLY_HPP

/* Dense univariate polynomials over Z/p.  Ring operations work for any
 * modulus >= 2; divrem, gcd and radical additionally need invertible
 * leading coefficients, which the callers guarantee by using prime p.
 */

#include "sextic/int_poly.hpp"
#include "sextic/numeric.hpp"

#include <vector>

namespace sextic {

class ModPoly {
  public:
    explicit ModPoly(Int modulus) : p_(std::move(modulus)) {
        if (p_ < 2) throw domain_error("ModPoly: modulus must be >= 2");
    }

    ModPoly(Int modulus, std::vector<Int> coeffs) : p_(std::move(modulus)), c_(std::move(coeffs)) {
        if (p_ < 2) throw domain_error("ModPoly: modulus must be >= 2");
        for (Int& v : c_) v = mod_floor(v, p_);
        trim();
    }

    static ModPoly reduce(const IntPoly& p, const Int& modulus) {
        return ModPoly(modulus, p.coeffs());
    }

    const Int& modulus() const { return p_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<Int>& coeffs() const { return c_; }

    Int coeff(int i) const {
        if (i < 0 || i >= static_cast<int>(c_.size())) return Int(0);
        return c_[i];
    }

    const Int& lc() const {
        if (is_zero()) throw domain_error("lc of zero polynomial");
        return c_.back();
    }

    bool is_monic() const { return !is_zero() && c_.back() == 1; }

    bool operator==(const ModPoly& o) const { return p_ == o.p_ && c_ == o.c_; }

    ModPoly operator+(const ModPoly& o) const {
        check_same(o);
        std::vector<Int> c(std::max(c_.size(), o.c_.size()));
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (i < c_.size()) c[i] += c_[i];
            if (i < o.c_.size()) c[i] += o.c_[i];
        }
        return ModPoly(p_, std::move(c));
    }

    ModPoly operator-(const ModPoly& o) const {
        check_same(o);
        std::vector<Int> c(std::max(c_.size(), o.c_.size()));
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (i < c_.size()) c[i] += c_[i];
            if (i < o.c_.size()) c[i] -= o.c_[i];
        }
        return ModPoly(p_, std::move(c));
    }

    ModPoly operator*(const ModPoly& o) const {
        check_same(o);
        if (is_zero() || o.is_zero()) return ModPoly(p_);
        std::vector<Int> c(c_.size() + o.c_.size() - 1);
        for (std::size_t i = 0; i < c_.size(); ++i)
            for (std::size_t j = 0; j < o.c_.size(); ++j)
                c[i + j] += c_[i] * o.c_[j];
        return ModPoly(p_, std::move(c));
    }

    ModPoly operator*(const Int& s) const {
        std::vector<Int> c(c_);
        for (Int& v : c) v *= s;
        return ModPoly(p_, std::move(c));
    }

    ModPoly derivative() const {
        if (c_.size() <= 1) return ModPoly(p_);
        std::vector<Int> c(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) c[i - 1] = c_[i] * Int(static_cast<long>(i));
        return ModPoly(p_, std::move(c));
    }

    /* Monic scalar multiple; needs lc invertible mod p. */
    ModPoly monic() const {
        if (is_zero()) return *this;
        auto inv = mod_inverse(lc(), p_);
        if (!inv) throw domain_error("monic: leading coefficient not invertible");
        return *this * *inv;
    }

    IntPoly lift() const {  // coefficients in [0, p)
        return IntPoly(c_);
    }

    std::string str(const std::string& var = "x") const { return lift().str(var); }

  private:
    Int p_;
    std::vector<Int> c_;

    void check_same(const ModPoly& o) const {
        if (p_ != o.p_) throw domain_error("ModPoly: modulus mismatch");
    }

    void trim() {
        while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
    }
};

/* a = q*b + r with deg r < deg b; requires lc(b) invertible mod p. */
inline std::pair<ModPoly, ModPoly> divrem(const ModPoly& a, const ModPoly& b) {
    if (b.is_zero()) throw domain_error("divrem: zero divisor");
    const Int& p = a.modulus();
    auto inv = mod_inverse(b.lc(), p);
    if (!inv) throw domain_error("divrem: leading coefficient not invertible");
    std::vector<Int> r(a.coeffs());
    int db = b.degree();
    std::vector<Int> q(a.degree() >= db ? a.degree() - db + 1 : 0);
    int dr = a.degree();
    auto renorm = [&]() {
        while (dr >= 0 && sgn(mod_floor(r[dr], p)) == 0) --dr;
    };
    renorm();
    while (dr >= db) {
        Int f = mod_floor(r[dr] * *inv, p);
        q[dr - db] = f;
        for (int i = 0; i <= db; ++i) r[dr - db + i] -= f * b.coeff(i);
        r[dr] = 0;
        renorm();
    }
    r.resize(dr + 1);
    return {ModPoly(p, std::move(q)), ModPoly(p, std::move(r))};
}

/* Exact quotient; remainder must vanish. */
inline ModPoly exact_quot(const ModPoly& a, const ModPoly& b) {
    auto [q, r] = divrem(a, b);
    if (!r.is_zero()) throw inconsistency_error("exact_quot: nonzero remainder");
    return q;
}

/* Monic gcd over F_p. */
inline ModPoly gcd(ModPoly a, ModPoly b) {
    while (!b.is_zero()) {
        auto [q, r] = divrem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

namespace detail {
/* For u with u' = 0 over the prime field F_p, u(x) = v(x)^p with v read off
 * from the coefficients at indices divisible by p. */
inline ModPoly pth_root(const ModPoly& u) {
    const Int& p = u.modulus();
    if (!p.fits_slong_p())
        throw domain_error("pth_root: modulus too large for a p-th power of positive degree");
    long pl = p.get_si();
    std::vector<Int> c;
    for (long i = 0; i * pl <= u.degree(); ++i) c.push_back(u.coeff(static_cast<int>(i * pl)));
    return ModPoly(p, std::move(c));
}
}  // namespace detail

/* Squarefree radical over F_p (p prime): the monic product of the distinct
 * irreducible factors.  Factors whose multiplicity is divisible by p are
 * invisible to a/gcd(a,a'); they are recovered through p-th roots. */
inline ModPoly mod_radical(const ModPoly& a) {
    if (a.is_zero()) throw domain_error("mod_radical of zero polynomial");
    if (a.degree() == 0) return ModPoly(a.modulus(), {Int(1)});
    ModPoly am = a.monic();
    ModPoly d = am.derivative();
    if (d.is_zero())  // a is a p-th power
        return mod_radical(detail::pth_root(am));
    ModPoly g = gcd(am, d);
    ModPoly w = exact_quot(am, g);  // distinct factors with multiplicity not divisible by p
    // strip all w-factors from g: what is left is an exact p-th power
    ModPoly u = std::move(g);
    for (;;) {
        ModPoly c = gcd(u, w);
        if (c.degree() == 0) break;
        u = exact_quot(u, c);
    }
    if (u.degree() == 0) return w;
    return w * mod_radical(detail::pth_root(u));
}

}  // namespace sextic

#endif
