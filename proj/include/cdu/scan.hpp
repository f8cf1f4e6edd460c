#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "cdu/cdiff.hpp"
#include "cdu/field.hpp"
#include "cdu/theorems.hpp"

namespace cdu {

// All field elements outside {0, 1}, ascending — the admissible range for
// both the family parameter gamma and the multiplier c.
std::vector<elem> elems_outside_f2(const FieldSpec& field);

// The two elements of the 4-element subfield beyond F_2, ascending.
// Requires even extension degree.
std::vector<elem> f4_beyond_f2(const FieldSpec& field);

// Uniformity of the gamma family member for every (gamma, c) pair, flattened
// gamma-major and saturated to 255. threshold > 0 stops each scan as soon as
// a count reaches it (exact whenever the true maximum is below the
// threshold). Work is split across jobs threads in fixed contiguous blocks,
// so the result never depends on jobs.
std::vector<std::uint8_t> scan_maxes(const FieldSpec& field,
                                     const std::vector<elem>& gammas,
                                     const std::vector<elem>& cs,
                                     int jobs, int threshold);

struct ScanConfig {
    int jobs = 1;
    // 0 scans fully; >= 4 prunes each scan once a count reaches the
    // threshold. At 5 — the proven ceiling for the gamma family — the tables
    // are provably unchanged and only wasted refinement is cut. Values 1..3
    // are rejected: they would conflate the uniformity-3 rows.
    int early_exit_threshold = 0;
};

// Labelled counts for one table.
struct TableResult {
    int table = 0;
    int n = 0;
    std::uint32_t modulus = 0;
    std::vector<std::pair<std::string, std::uint64_t>> rows;

    std::string csv() const;  // header "n,label,count"
    std::string json() const;
};

// table 1 — histogram of gamma-family uniformities over all (gamma, c) pairs
//     outside F_2; one row per observed value, with "3", "4", "5" always
//     present.
// table 2 — "value3": #pairs of uniformity exactly 3; "corollary": #pairs
//     passing the twelve-trace sufficient condition (every one of which is
//     confirmed to have uniformity 3).
// table 3 — gamma restricted to the 4-element subfield beyond F_2 (even n),
//     c to the multipliers outside that subfield; counts are of multipliers
//     for a single gamma ("value3" = #c of uniformity exactly 3, "corollary"
//     = #c passing the eight-trace sufficient condition, a subset of the
//     former). The two admissible gammas always give the same counts: their
//     qualifying sets are squares of one another (asserted), though not
//     necessarily identical.
TableResult run_table(const FieldSpec& field, int table, const ScanConfig& cfg);

// Names of the verification suites run_verify accepts.
const std::vector<std::string>& verify_suite_names();

// Run one named suite over the given degrees (default modulus each) and
// return one verdict per degree. Suites needing the 4-element subfield skip
// odd degrees. Randomized suites are seeded per degree and fully
// deterministic.
std::vector<Verdict> run_verify(const std::string& suite,
                                const std::vector<int>& ns, int jobs);

// Full uniformity reports for a fixed permutation, one per multiplier, in
// the given order.
std::vector<CDiffReport> compute_reports(const Permutation& f,
                                         const std::vector<elem>& cs,
                                         int jobs);

// header "c,max_count,witness_a,witness_b,pcn,apcn,spectrum"; the spectrum
// cell is "count:multiplicity" entries joined by ';', counts ascending.
std::string reports_csv(const std::vector<CDiffReport>& reports);
std::string reports_json(const Permutation& f,
                         const std::vector<CDiffReport>& reports);

} // namespace cdu
