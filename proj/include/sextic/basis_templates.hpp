#ifndef SEXTIC_BASIS_TEMPLATES_HPP
#define SEXTIC_BASIS_TEMPLATES_HPP

/* The 19 parametric integral-basis shapes, one per residue class of m
 * mod 36 (classes divisible by 3 never occur: 3 | m forces 9 | m^2+3m+9).
 * Each template lists the six basis elements as integer polynomials in x
 * over a common small denominator; substituting x = alpha_m instantiates
 * the basis.  disc_exponent is l in D_K = 2^(2l) * q_m^5, l in {0, 3}.
 *
 * The same data ships as data/basis_templates.txt; a test cross-checks the
 * two copies entry by entry, so a transcription slip in either place
 * cannot survive.
 */

#include "sextic/numeric.hpp"

#include <array>
#include <istream>
#include <sstream>
#include <string>
#include <vector>

namespace sextic {

struct BasisTemplate {
    std::vector<int> residues;                     // in 1..36
    std::array<std::array<long, 6>, 6> numerators; // row i: coefficients of x^0..x^5
    std::array<long, 6> denominators;
    int disc_exponent;                             // l with D_K = 2^(2l) q^5

    bool covers(int r) const {
        for (int v : residues)
            if (v == r) return true;
        return false;
    }
};

inline const std::vector<BasisTemplate>& basis_templates() {
    static const std::vector<BasisTemplate> table = [] {
        auto row = [](std::vector<int> rs, std::array<std::array<long, 6>, 6> nums,
                      std::array<long, 6> dens, int ell) {
            return BasisTemplate{std::move(rs), nums, dens, ell};
        };
        const std::array<long, 6> e1{1, 0, 0, 0, 0, 0};
        const std::array<long, 6> ex{0, 1, 0, 0, 0, 0};
        const std::array<long, 6> ex2{0, 0, 1, 0, 0, 0};
        const std::array<long, 6> ex3{0, 0, 0, 1, 0, 0};
        std::vector<BasisTemplate> t;
        t.push_back(row({1}, {e1, ex, ex2, {1, 1, 0, 1, 0, 0}, {4, 1, 3, 0, 1, 0}, {11, 3, 13, 6, 2, 1}},
                        {1, 1, 1, 2, 6, 18}, 0));
        t.push_back(row({2}, {e1, ex, ex2, ex3, {1, 0, 0, 1, 1, 0}, {2, 7, 6, 2, 0, 1}},
                        {1, 1, 1, 1, 3, 9}, 3));
        t.push_back(row({4}, {e1, ex, ex2, {1, 0, 1, 1, 0, 0}, {1, 1, 3, 0, 1, 0}, {8, 3, 1, 3, 2, 1}},
                        {1, 1, 1, 2, 6, 18}, 0));
        t.push_back(row({5}, {e1, ex, ex2, {1, 1, 0, 1, 0, 0}, {1, 0, 3, 1, 1, 0}, {8, 10, 3, 5, 0, 1}},
                        {1, 1, 1, 2, 6, 18}, 0));
        t.push_back(row({7, 34}, {e1, ex, ex2, ex3, {1, 1, 0, 0, 1, 0}, {5, 3, 7, 0, 2, 1}},
                        {1, 1, 1, 1, 3, 9}, 3));
        t.push_back(row({8}, {e1, ex, ex2, {1, 0, 1, 1, 0, 0}, {4, 3, 0, 1, 1, 0}, {5, 13, 0, 8, 0, 1}},
                        {1, 1, 1, 2, 6, 18}, 0));
        t.push_back(row({10, 19}, {e1, ex, ex2, ex3, {1, 1, 0, 0, 1, 0}, {2, 3, 4, 6, 2, 1}},
                        {1, 1, 1, 1, 3, 9}, 3));
        t.push_back(row({11}, {e1, ex, ex2, ex3, {1, 0, 0, 1, 1, 0}, {2, 7, 6, 2, 0, 1}},
                        {1, 1, 1, 1, 3, 9}, 3));
        t.push_back(row({13}, {e1, ex, ex2, {1, 1, 0, 1, 0, 0}, {4, 1, 3, 0, 1, 0}, {8, 12, 1, 3, 2, 1}},
                        {1, 1, 1, 2, 6, 18}, 0));
        t.push_back(row({14, 23}, {e1, ex, ex2, ex3, {1, 0, 0, 1, 1, 0}, {8, 1, 3, 5, 0, 1}},
                        {1, 1, 1, 1, 3, 9}, 3));
        t.push_back(row({16}, {e1, ex, ex2, {1, 0, 1, 1, 0, 0}, {1, 1, 3, 0, 1, 0}, {5, 3, 16, 0, 2, 1}},
                        {1, 1, 1, 2, 6, 18}, 0));
        t.push_back(row({17}, {e1, ex, ex2, {1, 1, 0, 1, 0, 0}, {1, 0, 3, 1, 1, 0}, {5, 13, 9, 8, 0, 1}},
                        {1, 1, 1, 2, 6, 18}, 0));
        t.push_back(row({20}, {e1, ex, ex2, {1, 0, 1, 1, 0, 0}, {4, 3, 0, 1, 1, 0}, {11, 7, 6, 2, 0, 1}},
                        {1, 1, 1, 2, 6, 18}, 0));
        t.push_back(row({22, 31}, {e1, ex, ex2, ex3, {1, 1, 0, 0, 1, 0}, {8, 3, 1, 3, 2, 1}},
                        {1, 1, 1, 1, 3, 9}, 3));
        t.push_back(row({25}, {e1, ex, ex2, {1, 1, 0, 1, 0, 0}, {4, 1, 3, 0, 1, 0}, {5, 3, 7, 0, 2, 1}},
                        {1, 1, 1, 2, 6, 18}, 0));
        t.push_back(row({26, 35}, {e1, ex, ex2, ex3, {1, 0, 0, 1, 1, 0}, {5, 4, 0, 8, 0, 1}},
                        {1, 1, 1, 1, 3, 9}, 3));
        t.push_back(row({28}, {e1, ex, ex2, {1, 0, 1, 1, 0, 0}, {1, 1, 3, 0, 1, 0}, {11, 3, 4, 6, 2, 1}},
                        {1, 1, 1, 2, 6, 18}, 0));
        t.push_back(row({29}, {e1, ex, ex2, {1, 1, 0, 1, 0, 0}, {1, 0, 3, 1, 1, 0}, {11, 7, 15, 2, 0, 1}},
                        {1, 1, 1, 2, 6, 18}, 0));
        t.push_back(row({32}, {e1, ex, ex2, {1, 0, 1, 1, 0, 0}, {4, 3, 0, 1, 1, 0}, {8, 1, 3, 5, 0, 1}},
                        {1, 1, 1, 2, 6, 18}, 0));
        return t;
    }();
    return table;
}

/* nullptr when r is not covered (i.e. 3 | r) */
inline const BasisTemplate* template_for_residue(int r) {
    for (const BasisTemplate& t : basis_templates())
        if (t.covers(r)) return &t;
    return nullptr;
}

/* Reader for the machine-readable copy of the table.  Format, line based:
 *
 *   template
 *   residues 26 35
 *   ell 3
 *   b 1 : 1 0 0 0 0 0        (six lines: denominator : c0 ... c5)
 *   ...
 *   end
 *
 * '#' starts a comment; blank lines are ignored.
 */
inline std::vector<BasisTemplate> parse_basis_templates(std::istream& in) {
    std::vector<BasisTemplate> out;
    std::string line;
    BasisTemplate cur{};
    int element_count = 0;
    bool open = false;
    int lineno = 0;
    auto fail = [&](const std::string& msg) {
        throw domain_error("basis template file, line " + std::to_string(lineno) + ": " + msg);
    };
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok)) continue;
        if (tok == "template") {
            if (open) fail("nested template");
            cur = BasisTemplate{};
            element_count = 0;
            open = true;
        } else if (tok == "residues") {
            if (!open) fail("residues outside template");
            int r;
            while (ls >> r) cur.residues.push_back(r);
            if (cur.residues.empty()) fail("empty residue list");
        } else if (tok == "ell") {
            if (!open) fail("ell outside template");
            if (!(ls >> cur.disc_exponent)) fail("missing ell value");
        } else if (tok == "b") {
            if (!open) fail("element outside template");
            if (element_count >= 6) fail("more than six elements");
            long den;
            std::string colon;
            if (!(ls >> den >> colon) || colon != ":") fail("expected 'b <den> : c0 .. c5'");
            cur.denominators[element_count] = den;
            for (int i = 0; i < 6; ++i)
                if (!(ls >> cur.numerators[element_count][i])) fail("expected six coefficients");
            ++element_count;
        } else if (tok == "end") {
            if (!open) fail("stray end");
            if (element_count != 6) fail("template has fewer than six elements");
            out.push_back(cur);
            open = false;
        } else {
            fail("unknown directive '" + tok + "'");
        }
    }
    if (open) fail("unterminated template");
    return out;
}

}  // namespace sextic

#endif
