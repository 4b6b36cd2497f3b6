#ifndef SEXTIC_INTEGRAL_BASIS_HPP
#define SEXTIC_INTEGRAL_BASIS_HPP

/* Instantiation of the parametric integral basis B_m at a concrete m, and
 * the certification pipeline that proves it really is an integral basis
 * with the claimed discriminant:
 *
 *   (i)   q_m = m^2+3m+9 squarefree (complete trial division),
 *   (ii)  every basis element is an algebraic integer,
 *   (iii) disc(B_m) = 2^(2l) q_m^5 exactly, by two independent routes,
 *   (iv)  the spanned order is 2- and 3-maximal (exhaustive enumeration),
 *   (v)   Z[alpha_m] is p-maximal for every p | q_m (Dedekind test), which
 *         transfers to the order since its index over Z[alpha_m] divides 6^3,
 *   (vi)  no other prime can divide the index, because its square would
 *         have to divide 2^(2l) q_m^5.
 */

#include "sextic/basis_templates.hpp"
#include "sextic/int_poly.hpp"
#include "sextic/mod_poly.hpp"
#include "sextic/numeric.hpp"
#include "sextic/rat_matrix.hpp"
#include "sextic/sextic_field.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace sextic {

inline constexpr long kDefaultTrialDivisionBound = 1000000;

enum class Squarefree { yes, no, undecided };

inline const char* to_string(Squarefree s) {
    switch (s) {
        case Squarefree::yes: return "yes";
        case Squarefree::no: return "no";
        default: return "undecided";
    }
}

struct Factorization {
    std::vector<std::pair<Int, int>> factors;  // (prime, exponent)
    Int cofactor;                              // 1 when fully factored
    bool complete;
};

/* Trial division by 2, 3 and the 6k+-1 wheel up to `bound`.  A cofactor
 * c > 1 with all prime factors above the bound is still recognized as
 * prime when c <= bound^2.  `complete` is false otherwise. */
inline Factorization trial_factor(Int n, const Int& bound) {
    if (sgn(n) == 0) throw domain_error("trial_factor(0)");
    n = abs(n);
    Factorization out{{}, Int(1), true};
    auto strip = [&](const Int& p) {
        int e = 0;
        while (divides(p, n)) {
            n = exact_div(n, p);
            ++e;
        }
        if (e > 0) out.factors.emplace_back(p, e);
    };
    strip(Int(2));
    strip(Int(3));
    for (Int d(5); d <= bound && d * d <= n; d += 4) {
        strip(d);
        d += 2;
        if (d > bound || d * d > n) break;
        strip(d);
    }
    if (n > 1) {
        if (n <= bound * bound) {  // all factors exceed bound, so n is prime
            out.factors.emplace_back(n, 1);
        } else {
            out.cofactor = n;
            out.complete = false;
        }
    }
    return out;
}

/* Squarefreeness by complete trial division.  When a cofactor remains, it
 * is decided anyway if possible (perfect power, or small enough that it
 * must be prime or a product of two distinct primes); otherwise the verdict
 * is an explicit `undecided`, never a guess. */
inline Squarefree is_squarefree(const Int& n, const Int& bound = Int(kDefaultTrialDivisionBound)) {
    if (sgn(n) == 0) return Squarefree::no;
    Factorization f = trial_factor(n, bound);
    for (const auto& [p, e] : f.factors)
        if (e >= 2) return Squarefree::no;
    if (f.complete) return Squarefree::yes;
    const Int& c = f.cofactor;  // every prime factor of c exceeds bound
    if (mpz_perfect_power_p(c.get_mpz_t())) return Squarefree::no;
    if (c <= bound * bound * bound) return Squarefree::yes;  // prime or p*q, p != q
    return Squarefree::undecided;
}

struct IntegralBasis {
    FieldPtr field;
    std::vector<FieldElement> elements;  // b_1 = 1, ..., b_6
    RatMatrix6 basis_matrix;             // row i: power-basis coordinates of b_{i+1}
    int template_r;                      // representative residue in 1..36; 0 for ad-hoc bases
    int disc_exponent;                   // l with claimed D_K = 2^(2l) q^5; -1 if not applicable

    Int claimed_disc() const {
        if (disc_exponent < 0) throw domain_error("basis has no discriminant claim");
        return pow_int(Int(2), 2 * disc_exponent) * pow_int(field->q(), 5);
    }
};

/* Residue representative in 1..36. */
inline int residue_36(const Int& m) {
    Int r = mod_floor(m, Int(36));
    long v = r.get_si();
    return v == 0 ? 36 : static_cast<int>(v);
}

inline const BasisTemplate& template_for(const Int& m) {
    if (is_excluded_parameter(m))
        throw domain_error("parameter m = " + m.get_str() + " is excluded");
    int r = residue_36(m);
    const BasisTemplate* t = template_for_residue(r);
    if (!t)
        throw domain_error("m = " + m.get_str() + " has 3 | m, so q_m is never squarefree");
    return *t;
}

inline IntegralBasis instantiate_basis(const FieldPtr& field) {
    const BasisTemplate& t = template_for(field->m());
    IntegralBasis b;
    b.field = field;
    b.template_r = t.residues.front();
    b.disc_exponent = t.disc_exponent;
    for (int i = 0; i < 6; ++i) {
        std::array<Rat, 6> coords;
        for (int j = 0; j < 6; ++j)
            coords[j] = make_rat(Int(t.numerators[i][j]), Int(t.denominators[i]));
        b.elements.emplace_back(field, coords);
        for (int j = 0; j < 6; ++j) b.basis_matrix.at(i, j) = coords[j];
    }
    return b;
}

inline IntegralBasis instantiate_basis(const Int& m) {
    return instantiate_basis(make_sextic_field(m));
}

/* The power basis 1, alpha, ..., alpha^5 of Z[alpha_m], packaged like an
 * IntegralBasis so the same maximality machinery applies to it. */
inline IntegralBasis power_basis(const FieldPtr& field) {
    IntegralBasis b;
    b.field = field;
    b.template_r = 0;
    b.disc_exponent = -1;
    std::array<Rat, 6> coords{};
    coords[0] = 1;
    for (int i = 0; i < 6; ++i) {
        b.elements.emplace_back(field, coords);
        for (int j = 0; j < 6; ++j) b.basis_matrix.at(i, j) = coords[j];
        if (i < 5) coords = field->shift_reduce(coords);
    }
    return b;
}

/* disc(B) = det(basis_matrix)^2 * disc(f_m); exactly an integer for any
 * basis of an order. */
inline Int basis_discriminant(const IntegralBasis& b) {
    Rat d = b.basis_matrix.det();
    if (sgn(d) == 0) throw domain_error("basis matrix is singular");
    Rat value = d * d * Rat(discriminant(b.field->poly()));
    if (!is_integer(value))
        throw inconsistency_error("basis discriminant is not an integer");
    return value.get_num();
}

/* Independent route: Gram determinant of the trace form, det(Tr(b_i b_j)). */
inline Int basis_discriminant_gram(const IntegralBasis& b) {
    RatMatrix6 gram;
    for (int i = 0; i < 6; ++i)
        for (int j = i; j < 6; ++j) {
            Rat t = elem_trace(b.elements[i] * b.elements[j]);
            gram.at(i, j) = t;
            gram.at(j, i) = t;
        }
    Rat d = gram.det();
    if (!is_integer(d))
        throw inconsistency_error("trace-form Gram determinant is not an integer");
    return d.get_num();
}

/* Dedekind test: is Z[alpha_m] p-maximal?  With fbar = f_m mod p,
 * gbar = radical(fbar), hbar = fbar/gbar, monic lifts g, h, and
 * t = (g h - f_m)/p, the order is p-maximal iff gcd(tbar, gbar, hbar) = 1
 * in F_p[x]. */
inline bool dedekind_test(const Int& m, const Int& p) {
    if (p < 2) throw domain_error("dedekind_test: p must be a prime");
    IntPoly f = defining_poly(m);
    ModPoly fbar = ModPoly::reduce(f, p);
    ModPoly gbar = mod_radical(fbar);
    ModPoly hbar = exact_quot(fbar, gbar);
    IntPoly g = gbar.lift();
    IntPoly h = hbar.lift();
    IntPoly t = (g * h - f).divided_by(p);  // exact because g h = f mod p
    ModPoly tbar = ModPoly::reduce(t, p);
    ModPoly d = gcd(gcd(tbar, gbar), hbar);
    return d.degree() == 0;
}

/* f_m = (x - m/3)^6 in (Z/q_m)[x]; 3 is invertible mod q_m since q_m
 * squarefree forces 3 to not divide q_m. */
inline bool verify_qm_congruence(const Int& m) {
    Int q = qm_of(m);
    if (divides(Int(3), q))
        throw domain_error("verify_qm_congruence: 3 | q_m (q_m cannot be squarefree)");
    Int root = mod_floor(m * *mod_inverse(Int(3), q), q);
    ModPoly lin(q, {-root, Int(1)});
    ModPoly pow = lin * lin;  // (x - m/3)^2
    pow = pow * pow * lin * lin;
    return pow == ModPoly::reduce(defining_poly(m), q);
}

/* The two exact polynomial identities behind the Dedekind argument, checked
 * with rational arithmetic at this concrete m:
 *
 *   (x - m/3)^6 - f_m(x) = (q_m / 3^6) * l(x)
 *   l(x) = 3 (x - m/3) (405 x^3 + (540 - 45m) x^2 + (45m + 30m^2) x
 *          + 4m^3 + 33m^2 - 162) + 5(m+6)(m-3) q_m + 3^6
 *
 * with l(x) = 1215 x^4 + (1620 - 540m) x^3 + (135m^2 - 405m) x^2
 *             + (54m^2 - 18m^3 - 486) x + m^4 - 3m^3 + 27m - 81.
 */
inline bool verify_ell_identity(const Int& m) {
    Int q = qm_of(m);
    RatPoly ell(std::vector<Rat>{
        Rat(Int(m * m * m * m - 3 * m * m * m + 27 * m - 81)),
        Rat(Int(54 * m * m - 18 * m * m * m - 486)),
        Rat(Int(135 * m * m - 405 * m)),
        Rat(Int(1620 - 540 * m)),
        Rat(1215)});
    RatPoly xm3(std::vector<Rat>{make_rat(-m, Int(3)), Rat(1)});  // x - m/3
    RatPoly pow6 = xm3 * xm3;
    pow6 = pow6 * pow6 * xm3 * xm3;
    RatPoly lhs = pow6 - RatPoly(defining_poly(m));
    if (!(lhs == ell * make_rat(q, pow_int(Int(3), 6)))) return false;

    RatPoly cubic(std::vector<Rat>{
        Rat(Int(4 * m * m * m + 33 * m * m - 162)),
        Rat(Int(45 * m + 30 * m * m)),
        Rat(Int(540 - 45 * m)),
        Rat(405)});
    RatPoly rhs = xm3 * cubic * Rat(3) +
                  RatPoly::constant(Rat(Int(5 * (m + 6) * (m - 3) * q + 729)));
    return ell == rhs;
}

/* Searches for a nonzero a in {0..p-1}^6 making (a_1 b_1 + ... + a_6 b_6)/p
 * an algebraic integer.  Such a witness exists iff p divides the index of
 * the order spanned by B in the maximal order. */
inline std::optional<std::array<Int, 6>> find_denominator_witness(const IntegralBasis& b,
                                                                  const Int& p) {
    if (p < 2 || p > 64) throw domain_error("find_denominator_witness: p out of supported range");
    long pl = p.get_si();
    Rat inv_p = make_rat(Int(1), p);

    // trace pre-filter: Tr((a . B)/p) must be an integer
    std::array<Int, 6> elt_traces;
    for (int i = 0; i < 6; ++i) elt_traces[i] = to_int(elem_trace(b.elements[i]));

    std::array<long, 6> a{};
    for (;;) {
        // odometer increment
        int k = 0;
        while (k < 6 && a[k] == pl - 1) {
            a[k] = 0;
            ++k;
        }
        if (k == 6) break;
        ++a[k];

        Int tr(0);
        for (int i = 0; i < 6; ++i)
            if (a[i]) tr += elt_traces[i] * a[i];
        if (sgn(mod_floor(tr, p)) != 0) continue;

        FieldElement beta = FieldElement::zero(b.field);
        for (int i = 0; i < 6; ++i)
            if (a[i]) beta = beta + b.elements[i] * Rat(a[i]);
        beta = beta * inv_p;
        if (is_algebraic_integer(beta)) {
            std::array<Int, 6> witness;
            for (int i = 0; i < 6; ++i) witness[i] = a[i];
            return witness;
        }
    }
    return std::nullopt;
}

/* True iff the order spanned by B is p-maximal (no nonzero a in {0..p-1}^6
 * makes (a . B)/p integral). */
inline bool enumerate_p_maximality(const IntegralBasis& b, const Int& p) {
    return !find_denominator_witness(b, p).has_value();
}

struct MaximalityEvidence {
    Int p;  // 0 stands for "every remaining prime"
    std::string method;  // dedekind-on-Z[alpha] | enumeration | disc-squarefree
    bool ok;
};

struct CertificationReport {
    Int m;
    Int q;
    int template_r = 0;
    int disc_exponent = -1;
    Squarefree q_squarefree = Squarefree::undecided;
    bool integrality_ok = false;
    Int disc_computed;
    Int disc_claimed;
    std::vector<MaximalityEvidence> maximality;
    bool certified = false;
    std::string failure_reason;
};

/* Runs the whole Theorem-1 pipeline for one m.  Throws domain_error for the
 * excluded parameters; every other failure is reported in the result. */
inline CertificationReport certify_integral_basis(const Int& m,
                                                  const Int& trial_bound = Int(kDefaultTrialDivisionBound)) {
    if (is_excluded_parameter(m))
        throw domain_error("parameter m = " + m.get_str() + " is excluded");

    CertificationReport rep;
    rep.m = m;
    rep.q = qm_of(m);

    rep.q_squarefree = is_squarefree(rep.q, trial_bound);
    if (rep.q_squarefree != Squarefree::yes) {
        rep.failure_reason = rep.q_squarefree == Squarefree::no
                                 ? "q_m is not squarefree"
                                 : "q_m squarefreeness undecided at trial-division bound";
        return rep;
    }

    FieldPtr field = make_sextic_field(m);
    IntegralBasis basis = instantiate_basis(field);
    rep.template_r = basis.template_r;
    rep.disc_exponent = basis.disc_exponent;

    rep.integrality_ok = true;
    for (const FieldElement& e : basis.elements)
        if (!is_algebraic_integer(e)) rep.integrality_ok = false;
    if (!rep.integrality_ok) {
        rep.failure_reason = "a basis element is not an algebraic integer";
        return rep;
    }

    rep.disc_computed = basis_discriminant(basis);
    rep.disc_claimed = basis.claimed_disc();
    if (basis_discriminant_gram(basis) != rep.disc_computed)
        throw inconsistency_error("the two discriminant routes disagree at m = " + m.get_str());
    if (rep.disc_computed != rep.disc_claimed) {
        rep.failure_reason = "discriminant does not match the template claim";
        return rep;
    }

    bool all_ok = true;
    for (long p : {2L, 3L}) {
        bool ok = enumerate_p_maximality(basis, Int(p));
        rep.maximality.push_back({Int(p), "enumeration", ok});
        all_ok = all_ok && ok;
    }

    /* p | q_m: the Dedekind test certifies Z[alpha_m] p-maximal, and
     * [O_B : Z[alpha_m]] divides 6^3 which is coprime to p, so the spanned
     * order is p-maximal too. */
    Factorization qf = trial_factor(rep.q, trial_bound);
    if (!qf.complete) {
        rep.failure_reason = "q_m could not be fully factored at the trial-division bound";
        return rep;
    }
    for (const auto& [p, e] : qf.factors) {
        if (p == 2 || p == 3)
            throw inconsistency_error("q_m divisible by " + p.get_str() + " cannot be squarefree");
        bool ok = dedekind_test(m, p);
        rep.maximality.push_back({p, "dedekind-on-Z[alpha]", ok});
        all_ok = all_ok && ok;
    }

    /* any other prime p dividing the index would satisfy p^2 | D_K =
     * 2^(2l) q_m^5 with q_m odd squarefree, leaving only the primes already
     * covered above */
    rep.maximality.push_back({Int(0), "disc-squarefree", true});

    if (!all_ok) {
        rep.failure_reason = "a maximality check failed";
        return rep;
    }
    rep.certified = true;
    return rep;
}

}  // namespace sextic

#endif
