#ifndef SEXTIC_SEXTIC_FIELD_HPP
#define SEXTIC_SEXTIC_FIELD_HPP

/* Arithmetic in the simplest sextic field K_m = Q(alpha), where alpha is a
 * root of
 *
 *   f_m = x^6 - 2m x^5 - (5m+15) x^4 - 20 x^3 + 5m x^2 + (2m+6) x + 1.
 *
 * Elements are rational coordinate vectors in the power basis
 * 1, alpha, ..., alpha^5.  The cyclic Galois action is generated by
 * sigma: alpha -> (alpha - 1)/(alpha + 2); everything here is exact, no
 * embeddings are ever evaluated numerically.
 */

#include "sextic/int_poly.hpp"
#include "sextic/mod_poly.hpp"
#include "sextic/numeric.hpp"
#include "sextic/rat_matrix.hpp"
#include "sextic/rat_poly.hpp"

#include <array>
#include <memory>

namespace sextic {

inline Int qm_of(const Int& m) { return m * m + 3 * m + 9; }

inline bool is_excluded_parameter(const Int& m) {
    return m == -8 || m == -3 || m == 0 || m == 5;
}

/* f_m, monic of degree 6 */
inline IntPoly defining_poly(const Int& m) {
    return IntPoly(std::vector<Int>{Int(1), 2 * m + 6, 5 * m, Int(-20), -(5 * m + 15), -2 * m, Int(1)});
}

class SexticField {
  public:
    explicit SexticField(Int m) : m_(std::move(m)), q_(qm_of(m_)), f_(defining_poly(m_)) {
        if (is_excluded_parameter(m_))
            throw domain_error("parameter m = " + m_.get_str() +
                               " is excluded (f_m is reducible)");
        // alpha + 2 must be invertible for sigma; f_m(-2) = -27 identically
        if (f_.eval(Int(-2)) != -27)
            throw inconsistency_error("f_m(-2) != -27");

        // x^6 mod f_m (degree <= 5), used by the multiply-reduce loop
        for (int i = 0; i < 6; ++i) x6_red_[i] = -f_.coeff(i);

        // power-basis coordinates of x^k mod f_m for k = 0..10
        pow_red_[0].fill(Rat(0));
        pow_red_[0][0] = 1;
        for (int k = 1; k <= 10; ++k) pow_red_[k] = shift_reduce(pow_red_[k - 1]);

        // Tr(alpha^j) = trace of the multiplication matrix of alpha^j
        for (int j = 0; j <= 5; ++j) {
            Rat t(0);
            for (int i = 0; i < 6; ++i) t += pow_red_[i + j][i];
            power_traces_[j] = to_int(t);
        }

        // sigma(alpha) = (alpha - 1) * (alpha + 2)^{-1}
        RatPoly num(std::vector<Rat>{Rat(-1), Rat(1)});
        RatPoly den(std::vector<Rat>{Rat(2), Rat(1)});
        auto [g, u, v] = xgcd(den, RatPoly(f_));
        if (g.degree() != 0)
            throw inconsistency_error("alpha + 2 not invertible mod f_m");
        RatPoly s = divrem(num * u, RatPoly(f_)).second;
        sigma_alpha_.fill(Rat(0));
        for (int i = 0; i <= s.degree(); ++i) sigma_alpha_[i] = s.coeff(i);
    }

    const Int& m() const { return m_; }
    const Int& q() const { return q_; }
    const IntPoly& poly() const { return f_; }
    const std::array<Rat, 6>& sigma_alpha() const { return sigma_alpha_; }
    const std::array<Int, 6>& power_traces() const { return power_traces_; }

    /* multiply by alpha and reduce mod f_m */
    std::array<Rat, 6> shift_reduce(const std::array<Rat, 6>& v) const {
        std::array<Rat, 6> r;
        r[0] = v[5] * x6_red_[0];
        for (int i = 1; i < 6; ++i) r[i] = v[i - 1] + v[5] * x6_red_[i];
        return r;
    }

    std::array<Rat, 6> mul_coords(const std::array<Rat, 6>& a, const std::array<Rat, 6>& b) const {
        std::array<Rat, 11> c;
        c.fill(Rat(0));
        for (int i = 0; i < 6; ++i) {
            if (sgn(a[i]) == 0) continue;
            for (int j = 0; j < 6; ++j) {
                if (sgn(b[j]) == 0) continue;
                c[i + j] += a[i] * b[j];
            }
        }
        std::array<Rat, 6> r;
        for (int i = 0; i < 6; ++i) r[i] = std::move(c[i]);
        for (int k = 10; k >= 6; --k) {
            if (sgn(c[k]) == 0) continue;
            for (int i = 0; i < 6; ++i) r[i] += c[k] * pow_red_[k][i];
        }
        return r;
    }

  private:
    Int m_, q_;
    IntPoly f_;
    std::array<Int, 6> x6_red_;
    std::array<std::array<Rat, 6>, 11> pow_red_;
    std::array<Int, 6> power_traces_;
    std::array<Rat, 6> sigma_alpha_;
};

using FieldPtr = std::shared_ptr<const SexticField>;

inline FieldPtr make_sextic_field(const Int& m) { return std::make_shared<SexticField>(m); }

class FieldElement {
  public:
    FieldElement(FieldPtr field, std::array<Rat, 6> coords)
        : field_(std::move(field)), c_(std::move(coords)) {
        if (!field_) throw domain_error("FieldElement: null field");
    }

    static FieldElement zero(FieldPtr f) { return FieldElement(std::move(f), {}); }

    static FieldElement rational(FieldPtr f, Rat v) {
        std::array<Rat, 6> c{};
        c[0] = std::move(v);
        return FieldElement(std::move(f), std::move(c));
    }

    static FieldElement one(FieldPtr f) { return rational(std::move(f), Rat(1)); }

    static FieldElement alpha(FieldPtr f) {
        std::array<Rat, 6> c{};
        c[1] = 1;
        return FieldElement(std::move(f), std::move(c));
    }

    const FieldPtr& field() const { return field_; }
    const std::array<Rat, 6>& coords() const { return c_; }

    bool is_zero() const {
        for (const Rat& v : c_)
            if (sgn(v) != 0) return false;
        return true;
    }

    bool is_rational() const {
        for (int i = 1; i < 6; ++i)
            if (sgn(c_[i]) != 0) return false;
        return true;
    }

    Rat as_rational() const {
        if (!is_rational()) throw domain_error("element is not rational");
        return c_[0];
    }

    /* coordinate polynomial in the power basis */
    RatPoly coord_poly() const { return RatPoly(std::vector<Rat>(c_.begin(), c_.end())); }

    bool operator==(const FieldElement& o) const {
        check_same(o);
        return c_ == o.c_;
    }

    FieldElement operator-() const {
        std::array<Rat, 6> c;
        for (int i = 0; i < 6; ++i) c[i] = -c_[i];
        return FieldElement(field_, std::move(c));
    }

    FieldElement operator+(const FieldElement& o) const {
        check_same(o);
        std::array<Rat, 6> c;
        for (int i = 0; i < 6; ++i) c[i] = c_[i] + o.c_[i];
        return FieldElement(field_, std::move(c));
    }

    FieldElement operator-(const FieldElement& o) const {
        check_same(o);
        std::array<Rat, 6> c;
        for (int i = 0; i < 6; ++i) c[i] = c_[i] - o.c_[i];
        return FieldElement(field_, std::move(c));
    }

    FieldElement operator*(const FieldElement& o) const {
        check_same(o);
        return FieldElement(field_, field_->mul_coords(c_, o.c_));
    }

    FieldElement operator*(const Rat& s) const {
        std::array<Rat, 6> c;
        for (int i = 0; i < 6; ++i) c[i] = c_[i] * s;
        return FieldElement(field_, std::move(c));
    }

  private:
    FieldPtr field_;
    std::array<Rat, 6> c_;

    void check_same(const FieldElement& o) const {
        if (field_.get() != o.field_.get() && field_->m() != o.field_->m())
            throw domain_error("field mismatch");
    }
};

/* Inverse via extended Euclid of the coordinate polynomial with f_m. */
inline FieldElement elem_inv(const FieldElement& a) {
    if (a.is_zero()) throw domain_error("inverse of zero");
    RatPoly g = a.coord_poly();
    auto [d, u, v] = xgcd(g, RatPoly(a.field()->poly()));
    if (d.degree() != 0)
        throw inconsistency_error("gcd with f_m is not constant; f_m reducible?");
    RatPoly inv = divrem(u, RatPoly(a.field()->poly())).second;
    std::array<Rat, 6> c{};
    for (int i = 0; i <= inv.degree(); ++i) c[i] = inv.coeff(i);
    return FieldElement(a.field(), std::move(c));
}

/* Image under sigma: evaluate the coordinate polynomial at sigma(alpha). */
inline FieldElement galois_sigma(const FieldElement& a) {
    const FieldPtr& f = a.field();
    FieldElement sa(f, f->sigma_alpha());
    FieldElement r = FieldElement::zero(f);
    for (int i = 5; i >= 0; --i) {
        r = r * sa;
        if (sgn(a.coords()[i]) != 0) r = r + FieldElement::rational(f, a.coords()[i]);
    }
    return r;
}

inline FieldElement galois_sigma_pow(FieldElement a, int k) {
    k %= 6;
    if (k < 0) k += 6;
    for (int i = 0; i < k; ++i) a = galois_sigma(a);
    return a;
}

/* Multiplication-by-a matrix in the power basis; row j holds a * alpha^j. */
inline RatMatrix6 mult_matrix(const FieldElement& a) {
    RatMatrix6 m;
    std::array<Rat, 6> row = a.coords();
    for (int j = 0; j < 6; ++j) {
        for (int i = 0; i < 6; ++i) m.at(j, i) = row[i];
        if (j < 5) row = a.field()->shift_reduce(row);
    }
    return m;
}

inline Rat elem_norm(const FieldElement& a) { return mult_matrix(a).det(); }

inline Rat elem_trace(const FieldElement& a) {
    Rat t(0);
    const auto& s = a.field()->power_traces();
    for (int i = 0; i < 6; ++i) t += a.coords()[i] * Rat(s[i]);
    return t;
}

inline RatPoly elem_charpoly(const FieldElement& a) { return matrix_charpoly(mult_matrix(a)); }

/* An element is an algebraic integer iff its characteristic polynomial has
 * integer coefficients (charpoly = minpoly^k plus Gauss's lemma). */
inline bool is_algebraic_integer(const FieldElement& a) {
    if (!is_integer(elem_trace(a))) return false;  // cheap necessary condition
    return elem_charpoly(a).has_integer_coeffs();
}

}  // namespace sextic

#endif
