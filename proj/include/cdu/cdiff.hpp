#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <utility>

#include "cdu/carlitz.hpp"
#include "cdu/field.hpp"

namespace cdu {

// Result of scanning all (a, b) for one multiplier c. The shift a = 0 is
// excluded exactly when c = 1; for every other c it is included and, for a
// permutation, contributes counts of 1.
struct CDiffReport {
    elem c = 0;
    int max_count = 0;                    // the c-differential uniformity
    std::pair<elem, elem> witness{0, 0};  // lexicographically smallest maximizer
    std::map<int, std::uint64_t> spectrum; // count value -> #(a,b) attaining it
    bool truncated = false;               // a bounded scan stopped early

    bool is_pcn() const { return max_count == 1; }
    bool is_apcn() const { return max_count == 2; }
};

// #{ x : f(x + a) + c*f(x) = b }  (characteristic 2: subtraction = addition).
int cdiff_count(const Permutation& f, elem c, elem a, elem b);

// Full scan: one histogram pass per admissible a, O(2^(2n)) total. The
// spectrum covers every admissible (a, b) pair, so counts times multiplicities
// sum to 2^n times the number of admissible shifts.
CDiffReport cdiff_uniformity(const Permutation& f, elem c);

// Bound-check variant: stops as soon as max_count reaches threshold. When it
// stops early the report is marked truncated and the spectrum covers only the
// scanned shifts; max_count equals the true maximum whenever the true maximum
// is below the threshold, and is otherwise some value >= threshold.
CDiffReport cdiff_uniformity_bounded(const Permutation& f, elem c, int threshold);

// Maximum count only (no spectrum allocation); early_exit_threshold = 0 scans
// everything, > 0 stops once the maximum reaches the threshold.
int cdiff_max(const Permutation& f, elem c, int early_exit_threshold = 0);

// Both directions of the multiplier symmetry: the maxima for c and inv(c)
// agree, and pointwise #solutions(c, a, b) = #solutions(inv(c), a, b*inv(c)).
// Requires c != 0.
bool cdiff_symmetric(const Permutation& f, elem c);

// P_a = {0, 1, gamma} union {a, a+1, a+gamma}: the points where the shifted
// c-differential equation of the gamma family escapes pure inverse algebra.
struct BoundarySet {
    elem gamma = 0, a = 0;
    std::set<elem> members;
};

BoundarySet boundary_set(const FieldSpec& field, elem gamma, elem a);

// Predicted number (0, 1 or 2) of solutions x outside P_a of
// f(x + a) + c*f(x) = b for f = car3_family(gamma). Exactly two solutions iff
//   b != 0, ab + c + 1 != 0, trace(abc / (ab+c+1)^2) = 0, and the four linear
//   guards (b+c)a + b+c+1, (b+1)a + b+c+1, (bg+c)a + g(bg+c+1),
//   (bg+1)a + g(bg+c+1) are all nonzero;
// otherwise the count is the number of roots of b x^2 + (ab+c+1) x + ca that
// land outside P_a. Requires a != 0, c and gamma outside {0, 1}, n >= 4.
int outside_pa_predict(const FieldSpec& field, elem gamma, elem c, elem a, elem b);

} // namespace cdu
