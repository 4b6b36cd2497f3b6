#ifndef SEXTIC_INT_POLY_HPP
#define SEXTIC_INT_POLY_HPP

/* Dense univariate polynomials over Z.  Coefficients are stored ascending
 * with no trailing zeros; the zero polynomial is the empty vector.
 * Resultants go through the subresultant PRS, so all intermediate values
 * stay integral without the coefficient blowup of naive Euclid.
 */

#include "sextic/numeric.hpp"

#include <initializer_list>
#include <sstream>
#include <vector>

namespace sextic {

class IntPoly {
  public:
    IntPoly() = default;
    explicit IntPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(); }
    IntPoly(std::initializer_list<long> coeffs) {
        c_.reserve(coeffs.size());
        for (long v : coeffs) c_.emplace_back(v);
        trim();
    }

    static IntPoly monomial(Int coeff, int deg) {
        std::vector<Int> c(deg + 1);
        c[deg] = std::move(coeff);
        return IntPoly(std::move(c));
    }

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

    bool operator==(const IntPoly& o) const { return c_ == o.c_; }

    IntPoly operator-() const {
        std::vector<Int> c(c_);
        for (Int& v : c) v = -v;
        return IntPoly(std::move(c));
    }

    IntPoly operator+(const IntPoly& o) const {
        std::vector<Int> c(std::max(c_.size(), o.c_.size()));
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (i < c_.size()) c[i] += c_[i];
            if (i < o.c_.size()) c[i] += o.c_[i];
        }
        return IntPoly(std::move(c));
    }

    IntPoly operator-(const IntPoly& o) const { return *this + (-o); }

    IntPoly operator*(const IntPoly& o) const {
        if (is_zero() || o.is_zero()) return IntPoly();
        std::vector<Int> c(c_.size() + o.c_.size() - 1);
        for (std::size_t i = 0; i < c_.size(); ++i)
            for (std::size_t j = 0; j < o.c_.size(); ++j)
                c[i + j] += c_[i] * o.c_[j];
        return IntPoly(std::move(c));
    }

    IntPoly operator*(const Int& s) const {
        if (sgn(s) == 0) return IntPoly();
        std::vector<Int> c(c_);
        for (Int& v : c) v *= s;
        return IntPoly(std::move(c));
    }

    IntPoly shifted(int k) const {  // multiply by x^k
        if (is_zero()) return IntPoly();
        std::vector<Int> c(c_.size() + k);
        for (std::size_t i = 0; i < c_.size(); ++i) c[i + k] = c_[i];
        return IntPoly(std::move(c));
    }

    IntPoly derivative() const {
        if (c_.size() <= 1) return IntPoly();
        std::vector<Int> c(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) c[i - 1] = c_[i] * Int(static_cast<long>(i));
        return IntPoly(std::move(c));
    }

    Int eval(const Int& x) const {
        Int r(0);
        for (std::size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
        return r;
    }

    /* gcd of the coefficients, normalized >= 0 (0 for the zero polynomial) */
    Int content() const {
        Int g(0);
        for (const Int& v : c_) g = gcd_int(g, v);
        return g;
    }

    IntPoly primitive_part() const {
        if (is_zero()) return IntPoly();
        Int g = content();
        std::vector<Int> c(c_.size());
        for (std::size_t i = 0; i < c_.size(); ++i) c[i] = exact_div(c_[i], g);
        return IntPoly(std::move(c));
    }

    /* exact division by a scalar; throws inconsistency_error on remainder */
    IntPoly divided_by(const Int& s) const {
        std::vector<Int> c(c_.size());
        for (std::size_t i = 0; i < c_.size(); ++i) c[i] = exact_div(c_[i], s);
        return IntPoly(std::move(c));
    }

    std::string str(const std::string& var = "x") const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (std::size_t i = c_.size(); i-- > 0;) {
            if (sgn(c_[i]) == 0) continue;
            Int a = c_[i];
            if (!first) os << (sgn(a) < 0 ? " - " : " + ");
            else if (sgn(a) < 0) os << "-";
            first = false;
            Int v = abs(a);
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
    std::vector<Int> c_;

    void trim() {
        while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
    }
};

/* Pseudo-remainder: R with lc(b)^(deg a - deg b + 1) * a = q*b + R. */
inline IntPoly pseudo_rem(const IntPoly& a, const IntPoly& b) {
    if (b.is_zero()) throw domain_error("pseudo_rem: zero divisor");
    if (a.degree() < b.degree()) throw domain_error("pseudo_rem: deg a < deg b");
    const Int& d = b.lc();
    long e = a.degree() - b.degree() + 1;
    IntPoly r = a;
    while (!r.is_zero() && r.degree() >= b.degree()) {
        IntPoly s = b.shifted(r.degree() - b.degree()) * r.lc();
        r = r * d - s;
        --e;
    }
    for (; e > 0; --e) r = r * d;
    return r;
}

/* Res(a, b): determinant of the Sylvester matrix, computed by the
 * subresultant PRS (Collins; cf. Cohen, alg. 3.3.7).  Fraction-free. */
inline Int resultant(IntPoly a, IntPoly b) {
    if (a.is_zero() || b.is_zero())
        throw domain_error("resultant of zero polynomial");
    if (a.degree() == 0 && b.degree() == 0) return Int(1);

    int sign = 1;
    if (a.degree() < b.degree()) {
        if ((a.degree() & 1) && (b.degree() & 1)) sign = -sign;
        std::swap(a, b);
    }
    if (b.degree() == 0) {
        Int r = pow_int(b.lc(), a.degree());
        return sign > 0 ? r : -r;
    }

    Int ca = a.content(), cb = b.content();
    a = a.divided_by(ca);
    b = b.divided_by(cb);
    Int scale = pow_int(ca, b.degree()) * pow_int(cb, a.degree());

    Int g(1), h(1);
    for (;;) {
        int delta = a.degree() - b.degree();
        if ((a.degree() & 1) && (b.degree() & 1)) sign = -sign;
        IntPoly r = pseudo_rem(a, b);
        a = b;
        Int div = g * pow_int(h, delta);
        b = r.divided_by(div);
        g = a.lc();
        if (delta > 0) h = exact_div(pow_int(g, delta), pow_int(h, delta - 1));
        if (b.is_zero()) return Int(0);
        if (b.degree() == 0) break;
    }
    Int res = exact_div(pow_int(b.lc(), a.degree()), pow_int(h, a.degree() - 1));
    res *= scale;
    return sign > 0 ? res : -res;
}

/* disc(a) = (-1)^(n(n-1)/2) Res(a, a') for monic a of degree n >= 2.
 * Only the monic case is needed here; anything else is rejected. */
inline Int discriminant(const IntPoly& a) {
    if (a.is_zero() || !a.is_monic() || a.degree() < 2)
        throw domain_error("discriminant requires a monic polynomial of degree >= 2");
    Int r = resultant(a, a.derivative());
    long n = a.degree();
    return ((n * (n - 1) / 2) % 2 == 0) ? r : -r;
}

}  // namespace sextic

#endif
