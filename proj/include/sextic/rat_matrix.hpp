#ifndef SEXTIC_RAT_MATRIX_HPP
#define SEXTIC_RAT_MATRIX_HPP

/* Exact 6x6 rational matrices: determinants (fraction-free after clearing
 * row denominators), inverses, and characteristic polynomials obtained by
 * evaluating det(tI - M) at t = 0..6 and interpolating.
 */

#include "sextic/numeric.hpp"
#include "sextic/rat_poly.hpp"

#include <array>
#include <vector>

namespace sextic {

class RatMatrix6 {
  public:
    static constexpr int N = 6;

    RatMatrix6() = default;

    static RatMatrix6 identity() {
        RatMatrix6 m;
        for (int i = 0; i < N; ++i) m.at(i, i) = 1;
        return m;
    }

    Rat& at(int i, int j) { return a_[i * N + j]; }
    const Rat& at(int i, int j) const { return a_[i * N + j]; }

    bool operator==(const RatMatrix6& o) const { return a_ == o.a_; }

    Rat trace() const {
        Rat t(0);
        for (int i = 0; i < N; ++i) t += at(i, i);
        return t;
    }

    std::array<Rat, N> row(int i) const {
        std::array<Rat, N> r;
        for (int j = 0; j < N; ++j) r[j] = at(i, j);
        return r;
    }

    RatMatrix6 operator*(const RatMatrix6& o) const {
        RatMatrix6 r;
        for (int i = 0; i < N; ++i)
            for (int k = 0; k < N; ++k) {
                if (sgn(at(i, k)) == 0) continue;
                for (int j = 0; j < N; ++j) r.at(i, j) += at(i, k) * o.at(k, j);
            }
        return r;
    }

    /* row vector * matrix */
    friend std::array<Rat, N> operator*(const std::array<Rat, N>& v, const RatMatrix6& m) {
        std::array<Rat, N> r;
        r.fill(Rat(0));
        for (int i = 0; i < N; ++i) {
            if (sgn(v[i]) == 0) continue;
            for (int j = 0; j < N; ++j) r[j] += v[i] * m.at(i, j);
        }
        return r;
    }

    Rat det() const {
        // clear denominators row by row, then run Bareiss on the integer matrix
        std::array<std::array<Int, N>, N> z;
        Int scale(1);
        for (int i = 0; i < N; ++i) {
            Int d(1);
            for (int j = 0; j < N; ++j) d = lcm_int(d, at(i, j).get_den());
            for (int j = 0; j < N; ++j) z[i][j] = to_int(at(i, j) * Rat(d));
            scale *= d;
        }
        Int dz = det_bareiss(z);
        return make_rat(dz, scale);
    }

    /* Gauss-Jordan over Q; throws domain_error on a singular matrix. */
    RatMatrix6 inverse() const {
        RatMatrix6 a = *this;
        RatMatrix6 inv = identity();
        for (int col = 0; col < N; ++col) {
            int piv = -1;
            for (int i = col; i < N; ++i)
                if (sgn(a.at(i, col)) != 0) { piv = i; break; }
            if (piv < 0) throw domain_error("inverse of singular matrix");
            if (piv != col)
                for (int j = 0; j < N; ++j) {
                    std::swap(a.at(piv, j), a.at(col, j));
                    std::swap(inv.at(piv, j), inv.at(col, j));
                }
            Rat f = Rat(1) / a.at(col, col);
            for (int j = 0; j < N; ++j) {
                a.at(col, j) *= f;
                inv.at(col, j) *= f;
            }
            for (int i = 0; i < N; ++i) {
                if (i == col || sgn(a.at(i, col)) == 0) continue;
                Rat g = a.at(i, col);
                for (int j = 0; j < N; ++j) {
                    a.at(i, j) -= g * a.at(col, j);
                    inv.at(i, j) -= g * inv.at(col, j);
                }
            }
        }
        return inv;
    }

  private:
    std::array<Rat, N * N> a_{};  // row-major

    static Int det_bareiss(std::array<std::array<Int, N>, N>& m) {
        Int prev(1);
        int sign = 1;
        for (int k = 0; k + 1 < N; ++k) {
            if (sgn(m[k][k]) == 0) {
                int piv = -1;
                for (int i = k + 1; i < N; ++i)
                    if (sgn(m[i][k]) != 0) { piv = i; break; }
                if (piv < 0) return Int(0);
                std::swap(m[k], m[piv]);
                sign = -sign;
            }
            for (int i = k + 1; i < N; ++i)
                for (int j = k + 1; j < N; ++j)
                    m[i][j] = exact_div(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev);
            prev = m[k][k];
        }
        return sign > 0 ? m[N - 1][N - 1] : -m[N - 1][N - 1];
    }
};

/* det(tI - M), monic of degree 6, by exact evaluation at t = 0,...,6 and
 * Lagrange interpolation. */
inline RatPoly matrix_charpoly(const RatMatrix6& m) {
    constexpr int N = RatMatrix6::N;
    std::array<Rat, N + 1> values;
    for (int t = 0; t <= N; ++t) {
        RatMatrix6 a;
        for (int i = 0; i < N; ++i)
            for (int j = 0; j < N; ++j)
                a.at(i, j) = (i == j ? Rat(t) - m.at(i, j) : -m.at(i, j));
        values[t] = a.det();
    }
    // Lagrange basis accumulated as polynomials over Q
    RatPoly result;
    for (int t = 0; t <= N; ++t) {
        RatPoly basis = RatPoly::constant(Rat(1));
        Rat denom(1);
        for (int s = 0; s <= N; ++s) {
            if (s == t) continue;
            basis = basis * RatPoly(std::vector<Rat>{Rat(-s), Rat(1)});
            denom *= Rat(t - s);
        }
        result = result + basis * (values[t] / denom);
    }
    if (result.degree() != N || !result.is_monic())
        throw inconsistency_error("matrix_charpoly: interpolation did not produce a monic sextic");
    return result;
}

}  // namespace sextic

#endif
