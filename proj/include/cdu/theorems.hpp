#pragma once

#include <string>
#include <utility>
#include <vector>

#include "cdu/carlitz.hpp"
#include "cdu/cdiff.hpp"
#include "cdu/field.hpp"

namespace cdu {

// One closed-form claim instance checked against brute force. For exact
// claims predicted_lo == predicted_hi; for bound claims they bracket the
// admissible range. pass = predicted_lo <= observed <= predicted_hi.
struct Verdict {
    std::string claim;
    std::vector<std::pair<std::string, std::string>> params;
    int predicted_lo = 0;
    int predicted_hi = 0;
    int observed = 0;
    bool pass = false;

    // "claim=... n=4 c=0x3 predicted=2 observed=2 PASS" (bounds as [lo..hi])
    std::string line() const;
};

Verdict make_verdict(std::string claim,
                     std::vector<std::pair<std::string, std::string>> params,
                     int predicted_lo, int predicted_hi, int observed);

// x lies in the 4-element subfield iff x^4 = x (only possible beyond F_2 when
// n is even).
bool in_f4(const FieldSpec& field, elem x);

// Uniformity of the inverse map: 2 when trace(c) = trace(1/c) = 1, else 3.
// Requires c outside {0, 1}.
int predict_inv(const FieldSpec& field, elem c);

// Uniformity range of the inverse map composed with the transposition (0,1):
// exactly 1 at n = 2, at most 3 at n = 3, at most 4 for n >= 4.
std::pair<int, int> car2_bound(int n);

// Observed uniformity of a declared-rank-m form is at most m + 2 (c != 1).
Verdict rank_bound_check(const CarlitzForm& form, elem c);

// Exact characterization of uniformity 5 for the gamma family: true iff one
// of six condition families holds (special multiplier pairs with trace
// conditions, the subfield case at n = 0 mod 8, or c a root of one of two
// mirrored cubics under additional nonvanishing and trace conditions).
// Requires c, gamma outside {0, 1} and n >= 4.
bool cdu5_predicate(const FieldSpec& field, elem gamma, elem c);

// Sufficient condition for uniformity exactly 3: c outside the four excluded
// values {gamma, 1/gamma, gamma+1, 1/(gamma+1)} and twelve trace expressions
// all equal to 1. Requires c, gamma outside {0, 1} and n >= 4.
bool cdu3_sufficient(const FieldSpec& field, elem gamma, elem c);

// Exact uniformity when both c and gamma lie in the 4-element subfield
// (n even): 3 when n = 2 mod 4, 4 when n = 4 mod 8, 5 when n = 0 mod 8.
int cf4_exact(int n);

// Sufficient condition for uniformity exactly 3 when gamma lies in the
// 4-element subfield but c does not (n even): eight trace expressions all 1.
// Independently of it, every such (c, gamma) has uniformity within [3, 4].
bool cf4not_sufficient(const FieldSpec& field, elem gamma, elem c);

// Upper bound on #solutions of the c-differential equation at (a, b) when the
// shift a lies in the 4-element subfield (n even, gamma in F4 minus F2,
// c outside {0, 1}): the count never exceeds 3, for every b. Exhaustive
// verification backs the bound; see the af4 suite and the theorems tests.
int af4_case(const FieldSpec& field, elem gamma, elem c, elem a, elem b);

// Observed uniformity of the gamma family lies in [3, 5] (n >= 4).
Verdict bound_3_5_check(const FieldSpec& field, elem gamma, elem c);

// Degree-one affine equivalence preserves uniformity:
// uniformity(A1 . f . A2, c) = uniformity(f, c) for A_i(x) = u_i x + v_i.
Verdict affine_deg1_invariance(const Permutation& f, elem u1, elem v1,
                               elem u2, elem v2, elem c);

} // namespace cdu
