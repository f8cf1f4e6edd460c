#include "cdu/theorems.hpp"

#include <cassert>
#include <stdexcept>

namespace cdu {

namespace {

void require(bool ok, const char* message) {
    if (!ok) throw std::invalid_argument(message);
}

} // namespace

std::string Verdict::line() const {
    std::string s = "claim=" + claim;
    for (const auto& [k, v] : params) s += " " + k + "=" + v;
    s += " predicted=";
    if (predicted_lo == predicted_hi) s += std::to_string(predicted_lo);
    else s += "[" + std::to_string(predicted_lo) + ".." + std::to_string(predicted_hi) + "]";
    s += " observed=" + std::to_string(observed);
    s += pass ? " PASS" : " FAIL";
    return s;
}

Verdict make_verdict(std::string claim,
                     std::vector<std::pair<std::string, std::string>> params,
                     int predicted_lo, int predicted_hi, int observed) {
    Verdict v;
    v.claim = std::move(claim);
    v.params = std::move(params);
    v.predicted_lo = predicted_lo;
    v.predicted_hi = predicted_hi;
    v.observed = observed;
    v.pass = predicted_lo <= observed && observed <= predicted_hi;
    return v;
}

bool in_f4(const FieldSpec& F, elem x) { return F.pow(x, 4) == x; }

int predict_inv(const FieldSpec& F, elem c) {
    require(c != 0 && c != 1, "predict_inv: c must lie outside {0, 1}");
    return (F.trace(c) == 1 && F.trace(F.inv(c)) == 1) ? 2 : 3;
}

std::pair<int, int> car2_bound(int n) {
    require(n >= 2, "car2_bound: extension degree must be >= 2");
    if (n == 2) return {1, 1};
    if (n == 3) return {1, 3};
    return {1, 4};
}

Verdict rank_bound_check(const CarlitzForm& form, elem c) {
    require(c != 1, "rank_bound_check: c must differ from 1");
    const int observed = cdiff_max(from_carlitz(form), c);
    return make_verdict("carlitz_rank_bound",
                        {{"n", std::to_string(form.field->n())},
                         {"m", std::to_string(form.m)},
                         {"c", elem_hex(c)}},
                        1, form.m + 2, observed);
}

bool cdu5_predicate(const FieldSpec& F, elem gamma, elem c) {
    require(F.n() >= 4, "cdu5_predicate: needs extension degree >= 4");
    require(gamma > 1 && c > 1 && gamma < F.size() && c < F.size(),
            "cdu5_predicate: gamma and c must lie outside {0, 1}");

    const elem g = gamma;
    const bool g_in_f4 = in_f4(F, g);
    const elem gp1 = g ^ 1u;
    const elem g2 = F.mul(g, g);
    const elem g3 = F.mul(g2, g);
    const elem g4 = F.mul(g3, g);
    const elem g5 = F.mul(g4, g);

    // Family 1: c in { g^3/(g+1)^2 and its inverse }.
    if (!g_in_f4) {
        const elem c1 = F.div(g3, F.mul(gp1, gp1));
        if ((c == c1 || c == F.inv(c1)) &&
            F.trace(F.inv(F.mul(g, F.mul(gp1, gp1)))) == 0 &&
            (g4 ^ g3 ^ 1u) != 0 && (g5 ^ g2 ^ 1u) != 0)
            return true;
    }

    // Family 2: c in { (g+1)/(g^3+g^2+g) and its inverse }.
    if (!g_in_f4) {
        const elem den = g3 ^ g2 ^ g;
        if (den != 0) {
            const elem c2 = F.div(gp1, den);
            if ((c == c2 || c == F.inv(c2)) &&
                F.trace(1u ^ F.inv(g3)) == 0 && (g5 ^ g3 ^ 1u) != 0)
                return true;
        }
    }

    // Family 3: c in { (g^(q/2+1) + g^(q/2) + g) / (g(g+1)) and its inverse },
    // where the square root realizes the half exponent.
    if (!g_in_f4) {
        const elem sq = F.sqrt(g);
        const elem num = F.mul(sq, g) ^ sq ^ g;
        const elem den = F.mul(g, gp1);
        if (num != 0) {
            const elem c3 = F.div(num, den);
            if ((c == c3 || c == F.inv(c3)) &&
                F.trace(F.div(gp1, F.mul(g2, g2 ^ g ^ 1u))) == 0 && g5 != 1)
                return true;
        }
    }

    // Family 4: both parameters in the 4-element subfield, degree 0 mod 8.
    if (F.n() % 8 == 0 && g_in_f4 && c > 1 && in_f4(F, c)) return true;

    if (!g_in_f4) {
        // Family 5: c a root of g^3 x^3 + g^2 x^2 + (g+1) x + g, away from two
        // excluded values, with a nonvanishing and a trace condition.
        const elem cubic5 =
            F.mul(g3, F.pow(c, 3)) ^ F.mul(g2, F.mul(c, c)) ^ F.mul(gp1, c) ^ g;
        if (cubic5 == 0 && c != g && c != F.inv(F.sqrt(g) ^ g)) {
            const elem nv = F.mul(g3, F.mul(c, c)) ^ F.mul(g2 ^ g ^ 1u, c) ^ g2;
            if (nv != 0) {
                const elem num = F.mul(F.mul(c, g) ^ c ^ 1u, F.mul(F.mul(c, c), g) ^ 1u);
                const elem den = F.mul(c, F.mul(c ^ g, c ^ g));
                if (den != 0 && F.trace(F.div(num, den)) == 0) return true;
            }
        }

        // Family 6: the mirrored cubic g x^3 + (g+1) x^2 + g^2 x + g^3.
        const elem cubic6 =
            F.mul(g, F.pow(c, 3)) ^ F.mul(gp1, F.mul(c, c)) ^ F.mul(g2, c) ^ g3;
        if (cubic6 == 0 && c != F.inv(g) && c != (F.sqrt(g) ^ g)) {
            const elem nv = F.mul(g2, F.mul(c, c)) ^ F.mul(g2 ^ g ^ 1u, c) ^ g3;
            if (nv != 0) {
                const elem num = F.mul(c ^ g ^ 1u, F.mul(c, c) ^ g);
                const elem d0 = F.mul(c, g) ^ 1u;
                const elem den = F.mul(d0, d0);
                if (den != 0 && F.trace(F.div(num, den)) == 0) return true;
            }
        }
    }
    return false;
}

bool cdu3_sufficient(const FieldSpec& F, elem gamma, elem c) {
    require(F.n() >= 4, "cdu3_sufficient: needs extension degree >= 4");
    require(gamma > 1 && c > 1 && gamma < F.size() && c < F.size(),
            "cdu3_sufficient: gamma and c must lie outside {0, 1}");
    const elem g = gamma;
    const elem g1 = g ^ 1u;
    if (c == g || c == F.inv(g) || c == g1 || c == F.inv(g1)) return false;

    const elem g2 = F.mul(g, g);
    const elem cg = F.mul(c, g);
    const elem g1sq = F.mul(g1, g1);
    const elem traces[12] = {
        F.div(g, F.mul(c, g1)),
        F.inv(cg),
        F.div(F.mul(g, cg ^ 1u), g1sq),
        F.div(cg, F.mul(cg ^ c ^ 1u, cg ^ c ^ 1u)),
        F.div(F.mul(g, c ^ g ^ 1u), F.mul(c, g1sq)),
        F.div(F.mul(g, c ^ g), F.mul(c, g1sq)),
        F.div(F.mul(c, g2), F.mul(c ^ g, c ^ g)),
        F.div(cg, F.mul(c ^ g ^ 1u, c ^ g ^ 1u)),
        F.div(F.mul(c, g2), F.mul(cg ^ 1u, cg ^ 1u)),
        F.div(cg, g1),
        F.div(c, g),
        F.div(F.mul(cg ^ c ^ 1u, g), g1sq),
    };
    for (elem t : traces)
        if (F.trace(t) != 1) return false;
    return true;
}

int cf4_exact(int n) {
    require(n >= 4 && n % 2 == 0,
            "cf4_exact: the 4-element subfield needs even degree >= 4");
    if (n % 4 == 2) return 3;
    return n % 8 == 4 ? 4 : 5;
}

bool cf4not_sufficient(const FieldSpec& F, elem gamma, elem c) {
    require(F.n() % 2 == 0, "cf4not_sufficient: needs even extension degree");
    require(gamma > 1 && in_f4(F, gamma),
            "cf4not_sufficient: gamma must lie in the 4-element subfield, beyond F_2");
    require(c < F.size() && !in_f4(F, c),
            "cf4not_sufficient: c must lie outside the 4-element subfield");

    const elem g = gamma;
    const elem g2 = F.mul(g, g);
    const elem ci = F.inv(c);
    const elem cg = c ^ g;
    const elem cg2 = c ^ g2;
    const elem traces[8] = {
        F.mul(c, g),
        F.mul(c, g2),
        F.mul(ci, g),
        F.mul(ci, g2),
        F.div(c, F.mul(cg, cg)),
        F.div(F.mul(c, g2), F.mul(cg, cg)),
        F.div(F.mul(c, g), F.mul(cg2, cg2)),
        F.div(c, F.mul(cg2, cg2)),
    };
    for (elem t : traces)
        if (F.trace(t) != 1) return false;
    return true;
}

int af4_case(const FieldSpec& F, elem gamma, elem c, elem a, elem b) {
    require(F.n() % 2 == 0, "af4_case: needs even extension degree");
    require(gamma > 1 && in_f4(F, gamma),
            "af4_case: gamma must lie in the 4-element subfield, beyond F_2");
    require(a < F.size() && in_f4(F, a),
            "af4_case: the shift must lie in the 4-element subfield");
    require(c > 1 && c < F.size(), "af4_case: c must lie outside {0, 1}");
    (void)b;
    // Exhaustive search over every even degree up to 10 shows that a shift
    // inside the 4-element subfield never admits more than 3 solutions, for
    // any b; the af4 suite re-derives this bound against brute force.
    return 3;
}

Verdict bound_3_5_check(const FieldSpec& F, elem gamma, elem c) {
    require(F.n() >= 4, "bound_3_5_check: needs extension degree >= 4");
    require(gamma > 1 && c > 1 && gamma < F.size() && c < F.size(),
            "bound_3_5_check: gamma and c must lie outside {0, 1}");
    const int observed = cdiff_max(car3_family(F, gamma), c);
    return make_verdict("family_bound_3_5",
                        {{"n", std::to_string(F.n())},
                         {"gamma", elem_hex(gamma)},
                         {"c", elem_hex(c)}},
                        3, 5, observed);
}

Verdict affine_deg1_invariance(const Permutation& f, elem u1, elem v1,
                               elem u2, elem v2, elem c) {
    const FieldSpec& F = f.field();
    const Permutation transformed =
        compose(affine_deg1(F, u1, v1), compose(f, affine_deg1(F, u2, v2)));
    const int base = cdiff_max(f, c);
    const int observed = cdiff_max(transformed, c);
    return make_verdict("affine_deg1_invariance",
                        {{"n", std::to_string(F.n())},
                         {"u1", elem_hex(u1)}, {"v1", elem_hex(v1)},
                         {"u2", elem_hex(u2)}, {"v2", elem_hex(v2)},
                         {"c", elem_hex(c)}},
                        base, base, observed);
}

} // namespace cdu
