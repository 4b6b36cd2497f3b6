#ifndef SEXTIC_MONOGENITY_HPP
#define SEXTIC_MONOGENITY_HPP

/* Index computation and the three-factor index form decomposition.  For an
 * integral element beta = y_2 b_2 + ... + y_6 b_6 (the b_1 component never
 * matters) the index factors through the Galois action:
 *
 *   F_1 = N(beta - sigma beta)   = q_m G_1
 *   F_2 = N(beta - sigma^2 beta) = q_m G_2
 *   N(beta - sigma^3 beta) = -F_3^2 with F_3 = 2^l sqrt(q_m) G_3
 *
 * with integers G_i and |G_1 G_2 G_3| = I(beta).  The observation
 * q_m | 27 G_1 + G_2 makes q_m | 27 +- 1 necessary for a power integral
 * basis, which kills monogenity outside q_m in {7, 13}.  G_3 enters only
 * through |G_3|, so sqrt(q_m) never needs to be represented.
 */

#include "sextic/integral_basis.hpp"
#include "sextic/numeric.hpp"
#include "sextic/sextic_field.hpp"

#include <algorithm>
#include <array>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace sextic {

/* Coordinates y_2..y_6 of an element in the integral basis (y_1 is
 * irrelevant for the index and is not carried). */
struct CoordVector {
    std::array<Int, 5> y;

    bool is_zero() const {
        for (const Int& v : y)
            if (sgn(v) != 0) return false;
        return true;
    }

    bool operator==(const CoordVector& o) const { return y == o.y; }

    bool operator<(const CoordVector& o) const {
        for (int i = 0; i < 5; ++i) {
            int c = cmp(y[i], o.y[i]);
            if (c != 0) return c < 0;
        }
        return false;
    }

    /* sign-normalized representative: first nonzero coordinate positive */
    CoordVector canonical() const {
        for (const Int& v : y) {
            if (sgn(v) > 0) return *this;
            if (sgn(v) < 0) {
                CoordVector n;
                for (int i = 0; i < 5; ++i) n.y[i] = -y[i];
                return n;
            }
        }
        return *this;
    }

    std::string str() const {
        std::string s = "(";
        for (int i = 0; i < 5; ++i) {
            if (i) s += ",";
            s += y[i].get_str();
        }
        return s + ")";
    }
};

struct IndexFactorization {
    Int G1, G2, absG3;
    Int qm;
    int ell;
};

enum class Verdict { non_monogenic, obstruction_inconclusive };

inline const char* to_string(Verdict v) {
    return v == Verdict::non_monogenic ? "non-monogenic" : "monogenic-possible";
}

/* A certified basis plus everything precomputed that index queries reuse:
 * the inverse basis matrix, the sigma^k difference images of the basis
 * elements, and denominator-cleared copies of those for the fast search
 * filter. */
class BasisContext {
  public:
    explicit BasisContext(const Int& m, const Int& trial_bound = Int(kDefaultTrialDivisionBound))
        : BasisContext(certify_integral_basis(m, trial_bound)) {}

    /* from an existing certification, to avoid re-running the pipeline */
    explicit BasisContext(CertificationReport rep) : report_(std::move(rep)) {
        const Int& m = report_.m;
        if (!report_.certified)
            throw domain_error("m = " + m.get_str() + " not certified: " + report_.failure_reason);
        field_ = make_sextic_field(m);
        basis_ = instantiate_basis(field_);
        inv_matrix_ = basis_.basis_matrix.inverse();
        for (int k = 0; k < 3; ++k) {
            for (int i = 1; i < 6; ++i) {
                FieldElement img = galois_sigma_pow(basis_.elements[i], k + 1);
                diffs_[k].push_back(basis_.elements[i] - img);
            }
            Int den(1);
            for (const FieldElement& e : diffs_[k])
                for (const Rat& c : e.coords()) den = lcm_int(den, c.get_den());
            cleared_denom_[k] = den;
            for (int i = 0; i < 5; ++i)
                for (int j = 0; j < 6; ++j)
                    cleared_[k][i][j] = to_int(diffs_[k][i].coords()[j] * Rat(den));
        }
    }

    const CertificationReport& report() const { return report_; }
    const IntegralBasis& basis() const { return basis_; }
    const FieldPtr& field() const { return field_; }
    const Int& q() const { return field_->q(); }
    int ell() const { return basis_.disc_exponent; }

    FieldElement element_of(const CoordVector& v) const {
        FieldElement beta = FieldElement::zero(field_);
        for (int i = 0; i < 5; ++i)
            if (sgn(v.y[i]) != 0) beta = beta + basis_.elements[i + 1] * Rat(v.y[i]);
        return beta;
    }

    /* beta - sigma^k beta, assembled from the precomputed differences */
    FieldElement sigma_difference(const CoordVector& v, int k) const {
        FieldElement g = FieldElement::zero(field_);
        for (int i = 0; i < 5; ++i)
            if (sgn(v.y[i]) != 0) g = g + diffs_[k - 1][i] * Rat(v.y[i]);
        return g;
    }

    /* integral-basis coordinates of an element given in the power basis */
    std::array<Rat, 6> to_basis_coords(const std::array<Rat, 6>& power_coords) const {
        return power_coords * inv_matrix_;
    }

    const Int& cleared_denom(int k) const { return cleared_denom_[k - 1]; }
    const std::array<std::array<Int, 6>, 5>& cleared_diffs(int k) const { return cleared_[k - 1]; }

  private:
    CertificationReport report_;
    FieldPtr field_;
    IntegralBasis basis_;
    RatMatrix6 inv_matrix_;
    std::array<std::vector<FieldElement>, 3> diffs_;
    std::array<Int, 3> cleared_denom_;
    std::array<std::array<std::array<Int, 6>, 5>, 3> cleared_;
};

/* I(beta): absolute determinant of the integral-basis coordinates of
 * 1, beta, ..., beta^5.  Zero exactly when beta is not primitive. */
inline Int index_of(const BasisContext& ctx, const CoordVector& v) {
    FieldElement beta = ctx.element_of(v);
    RatMatrix6 coords;
    std::array<Rat, 6> power{};
    power[0] = 1;
    for (int j = 0; j < 6; ++j) {
        std::array<Rat, 6> row = ctx.to_basis_coords(power);
        for (int i = 0; i < 6; ++i) {
            if (!is_integer(row[i]))
                throw inconsistency_error("power of an integral element has non-integer coordinates");
            coords.at(j, i) = std::move(row[i]);
        }
        if (j < 5) power = ctx.field()->mul_coords(power, beta.coords());
    }
    return abs(to_int(coords.det()));
}

inline IndexFactorization index_form_factors(const BasisContext& ctx, const CoordVector& v) {
    if (v.is_zero()) throw domain_error("index_form_factors: zero coordinate vector");
    const Int& q = ctx.q();
    Int F1 = to_int(elem_norm(ctx.sigma_difference(v, 1)));
    Int F2 = to_int(elem_norm(ctx.sigma_difference(v, 2)));
    Int n3 = to_int(elem_norm(ctx.sigma_difference(v, 3)));

    IndexFactorization out;
    out.qm = q;
    out.ell = ctx.ell();
    if (!divides(q, F1) || !divides(q, F2))
        throw inconsistency_error("F1, F2 not divisible by q_m at " + v.str());
    out.G1 = exact_div(F1, q);
    out.G2 = exact_div(F2, q);
    Int d = pow_int(Int(2), 2 * out.ell) * q;
    if (!divides(d, -n3))
        throw inconsistency_error("-N(beta - sigma^3 beta) not divisible by 2^(2l) q_m at " + v.str());
    auto root = exact_sqrt(exact_div(-n3, d));
    if (!root)
        throw inconsistency_error("-N(beta - sigma^3 beta)/(2^(2l) q_m) is not a perfect square at " +
                                  v.str());
    out.absG3 = *root;
    if (sgn(mod_floor(27 * out.G1 + out.G2, q)) != 0)
        throw inconsistency_error("q_m does not divide 27 G1 + G2 at " + v.str());
    return out;
}

struct ObstructionResult {
    Verdict verdict;
    long points_checked;
};

/* Checks q_m | 27 G1 + G2 on the full {-1,0,1}^5 cube plus `samples`
 * pseudorandom vectors (any violation throws), then applies the
 * divisibility obstruction: a solution of the index form equation forces
 * q_m | 27 +- 1, i.e. q_m in {7, 13}. */
inline ObstructionResult obstruction_check(const BasisContext& ctx, int samples = 200,
                                           unsigned long seed = 20240306) {
    long checked = 0;
    std::array<long, 5> a;
    a.fill(-1);
    for (;;) {
        CoordVector v;
        bool zero = true;
        for (int i = 0; i < 5; ++i) {
            v.y[i] = a[i];
            if (a[i] != 0) zero = false;
        }
        if (!zero) {
            index_form_factors(ctx, v);  // throws on any inconsistency
            ++checked;
        }
        int k = 0;
        while (k < 5 && a[k] == 1) a[k++] = -1;
        if (k == 5) break;
        ++a[k];
    }
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> dist(-1000000, 1000000);
    for (int s = 0; s < samples; ++s) {
        CoordVector v;
        bool zero = true;
        for (int i = 0; i < 5; ++i) {
            v.y[i] = dist(rng);
            if (sgn(v.y[i]) != 0) zero = false;
        }
        if (zero) v.y[0] = 1;
        index_form_factors(ctx, v);
        ++checked;
    }
    bool possible = divides(ctx.q(), Int(26)) || divides(ctx.q(), Int(28));
    return {possible ? Verdict::obstruction_inconclusive : Verdict::non_monogenic, checked};
}

/* Theorem 2 generator tables (coordinates y_2..y_6, up to sign).  The same
 * rows ship in data/generators_m1.txt and data/generators_m-1.txt; a test
 * keeps the two copies identical. */
inline const std::vector<CoordVector>& generator_table(const Int& m) {
    auto build = [](std::initializer_list<std::array<long, 5>> rows) {
        std::vector<CoordVector> t;
        for (const auto& r : rows) {
            CoordVector v;
            for (int i = 0; i < 5; ++i) v.y[i] = r[i];
            t.push_back(v);
        }
        return t;
    };
    static const std::vector<CoordVector> m1 = build({
        {0, 6, 4, 0, -1},      {1, 1, -2, -2, 1},     {2, -3, -3, -1, 1},
        {4, -2, -6, -3, 2},    {6, -21, -30, -11, 10},{7, -10, -20, -9, 7},
        {7, -8, -15, -6, 5},   {8, 1, -10, -7, 4},    {8, 4, -10, -16, 7},
        {8, -3, -9, -4, 3},    {8, -2, -11, -6, 4},   {9, -5, -14, -7, 5},
        {9, -1, -15, -10, 6},  {9, 3, -16, -13, 7},   {9, 1, -10, -7, 4},
        {9, 5, -11, -10, 5},   {13, -1, -17, -12, 7}, {15, -5, -20, -10, 7},
        {16, -7, -25, -13, 9}, {17, -4, -24, -14, 9}, {24, -6, -35, -20, 13},
        {24, -12, -39, -20, 14}, {24, -10, -34, -17, 12}, {28, -102, -147, -54, 49},
        {32, -15, -48, -24, 17}, {33, -5, -45, -27, 17}, {41, -8, -54, -31, 20},
        {41, -14, -58, -31, 21}, {49, -23, -71, -35, 25}, {57, -9, -75, -44, 28},
        {59, -2, -86, -57, 34},  {105, -54, -157, -76, 55}, {146, -33, -198, -112, 73},
        {246, 13, -359, -250, 145}, {517, -268, -774, -374, 271}, {723, -155, -970, -551, 358},
    });
    static const std::vector<CoordVector> m_1 = build({
        {0, 0, 2, 0, -1},      {1, 13, 18, -4, -8},   {1, 9, 22, -3, -10},
        {2, 6, 11, -2, -5},    {2, 73, 119, -23, -53},{2, 9, 11, -3, -5},
        {3, 35, 56, -11, -25}, {3, 3, 2, -1, -1},     {3, 4, 4, -1, -2},
        {3, 11, 37, -4, -17},  {5, 10, 11, -3, -5},   {13, 23, 22, -7, -10},
        {27, 96, 112, -29, -50}, {27, 39, 37, -12, -17},
    });
    if (m == 1) return m1;
    if (m == -1) return m_1;
    throw domain_error("no generator table for m = " + m.get_str());
}

struct GeneratorTableReport {
    Int m;
    long total = 0;
    std::vector<std::pair<CoordVector, Int>> failures;  // vector and its actual index
    bool all_ok() const { return failures.empty(); }
};

inline GeneratorTableReport verify_generator_table(const Int& m) {
    const std::vector<CoordVector>& table = generator_table(m);
    BasisContext ctx(m);
    GeneratorTableReport rep;
    rep.m = m;
    for (const CoordVector& v : table) {
        ++rep.total;
        Int idx = index_of(ctx, v);
        if (idx != 1) rep.failures.emplace_back(v, idx);
    }
    return rep;
}

namespace detail {
/* |N(sum y_i w_i)| for denominator-cleared integer difference vectors,
 * as a resultant with f_m; returns nullopt for the zero combination. */
inline std::optional<Int> cleared_norm(const IntPoly& f, const std::array<std::array<Int, 6>, 5>& w,
                                       const std::array<Int, 5>& y) {
    std::vector<Int> u(6);
    bool zero = true;
    for (int i = 0; i < 5; ++i) {
        if (sgn(y[i]) == 0) continue;
        for (int j = 0; j < 6; ++j) u[j] += y[i] * w[i][j];
    }
    for (const Int& c : u)
        if (sgn(c) != 0) zero = false;
    if (zero) return std::nullopt;
    return resultant(f, IntPoly(std::move(u)));
}
}  // namespace detail

/* All generators of power integral bases with max |y_i| <= bound, up to
 * sign.  The three norm factors prune the box; survivors are confirmed by
 * the index determinant. */
inline std::vector<CoordVector> search_generators(const BasisContext& ctx, const Int& bound,
                                                  const Int& work_limit = Int(100000000)) {
    if (sgn(bound) < 0) throw domain_error("search_generators: negative bound");
    Int width = 2 * bound + 1;
    Int total = width * width * width * width * width;
    if (total > work_limit)
        throw work_limit_error("box search would visit " + total.get_str() +
                               " candidates, above the work limit " + work_limit.get_str());

    const IntPoly& f = ctx.field()->poly();
    const Int& q = ctx.q();
    long b = bound.get_si();

    // acceptance thresholds for |G_i| = 1, on the denominator-cleared scale
    Int thr1 = q * pow_int(ctx.cleared_denom(1), 6);
    Int thr2 = q * pow_int(ctx.cleared_denom(2), 6);
    Int thr3 = pow_int(Int(2), 2 * ctx.ell()) * q * pow_int(ctx.cleared_denom(3), 6);

    std::vector<CoordVector> found;
    std::array<long, 5> a;
    a.fill(-b);
    a[0] = 0;  // canonical representatives have y_2 >= 0
    for (;;) {
        std::array<Int, 5> y;
        bool zero = true, canonical = true;
        for (int i = 0; i < 5; ++i) {
            y[i] = a[i];
            if (a[i] != 0 && zero) {
                zero = false;
                canonical = a[i] > 0;
            }
        }
        if (!zero && canonical) {
            auto n1 = detail::cleared_norm(f, ctx.cleared_diffs(1), y);
            if (n1 && abs(*n1) == thr1) {
                auto n2 = detail::cleared_norm(f, ctx.cleared_diffs(2), y);
                if (n2 && abs(*n2) == thr2) {
                    auto n3 = detail::cleared_norm(f, ctx.cleared_diffs(3), y);
                    if (n3 && -*n3 == thr3) {
                        CoordVector v{y};
                        if (index_of(ctx, v) == 1) found.push_back(v);
                    }
                }
            }
        }
        int k = 4;
        while (k >= 0 && a[k] == b) a[k--] = -b;
        if (k < 0) break;
        ++a[k];
    }
    std::sort(found.begin(), found.end());
    return found;
}

struct ScanRecord {
    Int m;
    Int q;
    int template_r = 0;
    Int disc;  // computed D_K when certified, otherwise 0
    bool certified = false;
    bool skipped = false;
    std::string verdict;         // empty when skipped or uncertified
    std::string skipped_reason;  // empty unless skipped
};

struct ScanOptions {
    Int trial_bound = Int(kDefaultTrialDivisionBound);
    int obstruction_samples = 200;
    unsigned long seed = 20240306;
};

/* One record per m in [from, to]: excluded parameters and non-squarefree
 * q_m are reported as skipped; for the rest the basis is certified and the
 * obstruction applied. */
inline std::vector<ScanRecord> scan_range(const Int& from, const Int& to,
                                          const ScanOptions& opts = {}) {
    if (from > to) throw domain_error("scan_range: empty range");
    std::vector<ScanRecord> records;
    for (Int m = from; m <= to; ++m) {
        ScanRecord rec;
        rec.m = m;
        rec.q = qm_of(m);
        if (is_excluded_parameter(m)) {
            rec.skipped = true;
            rec.skipped_reason = "excluded parameter";
            records.push_back(std::move(rec));
            continue;
        }
        Squarefree sf = is_squarefree(rec.q, opts.trial_bound);
        if (sf != Squarefree::yes) {
            rec.skipped = true;
            rec.skipped_reason = sf == Squarefree::no ? "q not squarefree"
                                                      : "q squarefreeness undecided";
            records.push_back(std::move(rec));
            continue;
        }
        CertificationReport rep = certify_integral_basis(m, opts.trial_bound);
        rec.template_r = rep.template_r;
        rec.certified = rep.certified;
        rec.disc = rep.disc_computed;
        if (rec.certified) {
            BasisContext ctx(std::move(rep));
            ObstructionResult obs = obstruction_check(ctx, opts.obstruction_samples, opts.seed);
            rec.verdict = to_string(obs.verdict);
        }
        records.push_back(std::move(rec));
    }
    return records;
}

}  // namespace sextic

#endif
