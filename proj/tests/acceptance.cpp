// Acceptance checks for the library: each criterion prints a few detail
// lines and one final "CRITERION k: PASS|FAIL" line. Run with no argument to
// execute all nine in order (exit 0 only if every one passes), or with a
// single number 1..9 to run just that criterion.

#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "cdu/scan.hpp"

using cdu::elem;
using cdu::FieldSpec;
using cdu::Permutation;

namespace {

std::map<std::string, std::uint64_t> as_map(const cdu::TableResult& r) {
    return {r.rows.begin(), r.rows.end()};
}

Permutation random_perm(const FieldSpec& F, std::mt19937_64& rng) {
    std::vector<std::uint16_t> t(F.size());
    for (std::uint32_t i = 0; i < F.size(); ++i) t[i] = static_cast<std::uint16_t>(i);
    for (std::uint32_t i = F.size() - 1; i > 0; --i)
        std::swap(t[i], t[rng() % (i + 1)]);
    return Permutation(F, t);
}

// ---------------------------------------------------------------- criterion 1
// The uniformity histogram over all (gamma, c) pairs outside F_2 reproduces
// the frozen counts for n = 4..8.
bool criterion_1() {
    struct Golden {
        int n;
        std::uint64_t threes, fours, fives;
    };
    const Golden goldens[] = {{4, 32, 164, 0},
                              {5, 10, 820, 70},
                              {6, 28, 3576, 240},
                              {7, 196, 15176, 504},
                              {8, 672, 62880, 964}};
    bool ok = true;
    for (const auto& g : goldens) {
        const FieldSpec F(g.n);
        const auto m = as_map(cdu::run_table(F, 1, {}));
        const bool row_ok = m.at("3") == g.threes && m.at("4") == g.fours &&
                            m.at("5") == g.fives;
        std::cout << "[criterion 1] n=" << g.n << " counts 3/4/5 = " << m.at("3")
                  << "/" << m.at("4") << "/" << m.at("5") << " expected "
                  << g.threes << "/" << g.fours << "/" << g.fives
                  << (row_ok ? " ok" : " MISMATCH") << "\n";
        ok = ok && row_ok;
    }
    return ok;
}

// ---------------------------------------------------------------- criterion 2
// The value-3 census: pairs of uniformity exactly 3, and the subset that the
// twelve-trace sufficient condition certifies, for n = 4..8.
bool criterion_2() {
    struct Golden {
        int n;
        std::uint64_t value3, corollary;
    };
    const Golden goldens[] = {
        {4, 32, 0}, {5, 10, 0}, {6, 28, 12}, {7, 196, 14}, {8, 672, 64}};
    bool ok = true;
    for (const auto& g : goldens) {
        const FieldSpec F(g.n);
        const auto m = as_map(cdu::run_table(F, 2, {}));
        const bool row_ok =
            m.at("value3") == g.value3 && m.at("corollary") == g.corollary;
        std::cout << "[criterion 2] n=" << g.n << " value3/corollary = "
                  << m.at("value3") << "/" << m.at("corollary") << " expected "
                  << g.value3 << "/" << g.corollary
                  << (row_ok ? " ok" : " MISMATCH") << "\n";
        ok = ok && row_ok;
    }
    return ok;
}

// ---------------------------------------------------------------- criterion 3
// The subfield-parameter census (gamma in the 4-element subfield beyond F_2,
// multipliers outside that subfield, counts over distinct multipliers) for
// even n = 4..12, computed both with a full scan and with pruning at the
// proven ceiling of 5; the two modes must agree with the frozen counts.
bool criterion_3() {
    struct Golden {
        int n;
        std::uint64_t value3, corollary;
    };
    const Golden goldens[] = {
        {4, 4, 0}, {6, 0, 0}, {8, 8, 8}, {10, 20, 10}, {12, 136, 84}};
    bool ok = true;
    for (const auto& g : goldens) {
        const FieldSpec F(g.n);
        const auto full = as_map(cdu::run_table(F, 3, {}));
        cdu::ScanConfig pruned;
        pruned.early_exit_threshold = 5;
        const auto fast = as_map(cdu::run_table(F, 3, pruned));
        const bool row_ok = full.at("value3") == g.value3 &&
                            full.at("corollary") == g.corollary && full == fast;
        std::cout << "[criterion 3] n=" << g.n << " value3/corollary = "
                  << full.at("value3") << "/" << full.at("corollary")
                  << " expected " << g.value3 << "/" << g.corollary
                  << (full == fast ? ", pruned scan identical"
                                   : ", pruned scan DIFFERS")
                  << (row_ok ? " ok" : " MISMATCH") << "\n";
        ok = ok && row_ok;
    }
    return ok;
}

// ---------------------------------------------------------------- criterion 4
// The uniformity-5 characterization is an exact iff over every (gamma, c)
// pair outside F_2 for n = 4..8.
bool criterion_4() {
    bool ok = true;
    for (int n = 4; n <= 8; ++n) {
        const FieldSpec F(n);
        const auto range = cdu::elems_outside_f2(F);
        const auto maxes = cdu::scan_maxes(F, range, range, 1, 6);
        std::uint64_t qualifying = 0, mismatches = 0;
        for (std::size_t gi = 0; gi < range.size(); ++gi)
            for (std::size_t ci = 0; ci < range.size(); ++ci) {
                const bool predicted =
                    cdu::cdu5_predicate(F, range[gi], range[ci]);
                const bool observed = maxes[gi * range.size() + ci] == 5;
                if (predicted != observed) ++mismatches;
                if (predicted) ++qualifying;
            }
        std::cout << "[criterion 4] n=" << n << " pairs="
                  << range.size() * range.size() << " qualifying=" << qualifying
                  << " mismatches=" << mismatches
                  << (mismatches == 0 ? " ok" : " MISMATCH") << "\n";
        ok = ok && mismatches == 0;
    }
    return ok;
}

// ---------------------------------------------------------------- criterion 5
// The two-trace rule gives the exact uniformity of the inverse map for every
// multiplier outside F_2, n = 4..8.
bool criterion_5() {
    bool ok = true;
    for (int n = 4; n <= 8; ++n) {
        const FieldSpec F(n);
        const Permutation inv = cdu::inverse_map(F);
        std::uint64_t mismatches = 0;
        for (elem c = 2; c < F.size(); ++c)
            if (cdu::predict_inv(F, c) != cdu::cdiff_max(inv, c)) ++mismatches;
        std::cout << "[criterion 5] n=" << n << " multipliers=" << F.size() - 2
                  << " mismatches=" << mismatches
                  << (mismatches == 0 ? " ok" : " MISMATCH") << "\n";
        ok = ok && mismatches == 0;
    }
    return ok;
}

// ---------------------------------------------------------------- criterion 6
// With both gamma and c in the 4-element subfield beyond F_2, the uniformity
// equals the piecewise constant 4, 3, 5, 3, 4 at n = 4, 6, 8, 10, 12.
bool criterion_6() {
    const std::vector<int> ns = {4, 6, 8, 10, 12};
    const int expected[] = {4, 3, 5, 3, 4};
    bool ok = true;
    for (std::size_t i = 0; i < ns.size(); ++i) {
        if (cdu::cf4_exact(ns[i]) != expected[i]) {
            std::cout << "[criterion 6] n=" << ns[i]
                      << " piecewise value disagrees with the frozen literal\n";
            ok = false;
        }
    }
    const auto verdicts = cdu::run_verify("cf4", ns, 1);
    for (const auto& v : verdicts) {
        std::cout << "[criterion 6] " << v.line() << "\n";
        ok = ok && v.pass;
    }
    ok = ok && verdicts.size() == ns.size();
    return ok;
}

// ---------------------------------------------------------------- criterion 7
// Composing the inverse map with the linearized twist x^4 + gx (g a root of
// the degree-4 modulus) raises the g-uniformity from 3 to 4.
bool criterion_7() {
    const FieldSpec F(4, 0x13);
    const elem g = 0x2;
    std::vector<std::uint16_t> a_table(F.size());
    for (elem x = 0; x < F.size(); ++x)
        a_table[x] = static_cast<std::uint16_t>(F.pow(x, 4) ^ F.mul(g, x));
    const Permutation a(F, a_table);
    const Permutation inv = cdu::inverse_map(F);
    const int base = cdu::cdiff_max(inv, g);
    const int twisted = cdu::cdiff_max(cdu::compose(a, inv), g);
    std::cout << "[criterion 7] inverse map: uniformity " << base
              << " (expected 3); twisted by x^4+gx: " << twisted
              << " (expected 4)\n";
    return base == 3 && twisted == 4;
}

// ---------------------------------------------------------------- criterion 8
// Tiny degrees, as stated: at n = 2 the family is perfect for every (gamma,
// c); at n = 3 the uniformity is 2 when gamma^3 + gamma + 1 = 0 and 3
// otherwise, for every c outside F_2.
bool criterion_8() {
    bool ok = true;

    const FieldSpec F2(2);
    int perfect = 0;
    for (elem gamma : {elem(2), elem(3)}) {
        const Permutation f = cdu::car3_family(F2, gamma);
        for (elem c : {elem(2), elem(3)})
            if (cdu::cdiff_max(f, c) == 1) ++perfect;
    }
    std::cout << "[criterion 8] n=2: " << perfect
              << "/4 pairs are perfect (uniformity 1)"
              << (perfect == 4 ? " ok" : " MISMATCH") << "\n";
    ok = ok && perfect == 4;

    const FieldSpec F3(3, 0xb);
    std::cout << "[criterion 8] n=3 stated rule: uniformity 2 when gamma^3 + "
                 "gamma + 1 = 0, else 3\n";
    std::uint64_t pairs = 0, stated_hits = 0, reversed_hits = 0;
    for (elem gamma = 2; gamma < F3.size(); ++gamma) {
        const Permutation f = cdu::car3_family(F3, gamma);
        const bool is_root = (F3.pow(gamma, 3) ^ gamma ^ 1u) == 0;
        const int stated = is_root ? 2 : 3;
        for (elem c = 2; c < F3.size(); ++c) {
            const int observed = cdu::cdiff_max(f, c);
            ++pairs;
            if (observed == stated) ++stated_hits;
            if (observed == (is_root ? 3 : 2)) ++reversed_hits;
        }
        const int observed_first = cdu::cdiff_max(f, 2);
        std::cout << "[criterion 8] n=3 gamma=0x" << std::hex << gamma
                  << std::dec << (is_root ? " (root)" : " (non-root)")
                  << ": stated " << stated << ", observed " << observed_first
                  << (observed_first == stated ? " ok" : " MISMATCH") << "\n";
    }
    std::cout << "[criterion 8] n=3 stated rule matched " << stated_hits << "/"
              << pairs << " pairs; the reversed assignment (3 on roots, 2 "
                 "otherwise) matched "
              << reversed_hits << "/" << pairs << "\n";
    if (stated_hits != pairs) {
        std::cout << "[criterion 8] note: every observation contradicts the "
                     "stated n=3 rule and matches its reverse; the stated "
                     "rule is checked as written and therefore fails\n";
        ok = false;
    }
    return ok;
}

// ---------------------------------------------------------------- criterion 9
// Randomized and exhaustive structural invariants.
bool criterion_9() {
    bool ok = true;

    // (a) swapping the multiplier for its inverse preserves the whole
    // differential spectrum: 100 random permutations, every nonzero c.
    {
        std::mt19937_64 rng(901);
        std::uint64_t checked = 0, failures = 0;
        for (int n : {4, 5, 6}) {
            const FieldSpec F(n);
            const int reps = n == 4 ? 34 : 33;
            for (int r = 0; r < reps; ++r) {
                const Permutation f = random_perm(F, rng);
                for (elem c = 1; c < F.size(); ++c) {
                    ++checked;
                    if (!cdu::cdiff_symmetric(f, c)) ++failures;
                }
            }
        }
        std::cout << "[criterion 9a] multiplier-inverse symmetry: " << checked
                  << " checks, " << failures << " failures"
                  << (failures == 0 ? " ok" : " MISMATCH") << "\n";
        ok = ok && failures == 0;
    }

    // (b) degree-one twists on both sides never change the uniformity:
    // 100 random (f, twists, c) combinations.
    {
        std::mt19937_64 rng(902);
        std::uint64_t failures = 0;
        for (int t = 0; t < 100; ++t) {
            const FieldSpec F(4 + t % 3);
            const Permutation f = random_perm(F, rng);
            const elem u1 = static_cast<elem>(1 + rng() % (F.size() - 1));
            const elem u2 = static_cast<elem>(1 + rng() % (F.size() - 1));
            const elem v1 = static_cast<elem>(rng() % F.size());
            const elem v2 = static_cast<elem>(rng() % F.size());
            const elem c = static_cast<elem>(1 + rng() % (F.size() - 1));
            if (!cdu::affine_deg1_invariance(f, u1, v1, u2, v2, c).pass)
                ++failures;
        }
        std::cout << "[criterion 9b] degree-one twist invariance: 100 checks, "
                  << failures << " failures"
                  << (failures == 0 ? " ok" : " MISMATCH") << "\n";
        ok = ok && failures == 0;
    }

    // (c) a declared continued-fraction form of length m never exceeds
    // uniformity m + 2: 200 random forms with m <= 5, every c != 1.
    {
        std::mt19937_64 rng(903);
        std::uint64_t checked = 0, failures = 0;
        for (int n = 4; n <= 8; ++n) {
            const FieldSpec F(n);
            for (int t = 0; t < 40; ++t) {
                const int m = 1 + static_cast<int>(rng() % 5);
                std::vector<elem> a(static_cast<std::size_t>(m) + 2);
                a[0] = static_cast<elem>(1 + rng() % (F.size() - 1));
                a[1] = static_cast<elem>(rng() % F.size());
                for (int i = 2; i <= m; ++i)
                    a[i] = static_cast<elem>(1 + rng() % (F.size() - 1));
                a[m + 1] = static_cast<elem>(rng() % F.size());
                const Permutation f =
                    cdu::from_carlitz(cdu::CarlitzForm(F, a));
                for (elem c = 0; c < F.size(); ++c) {
                    if (c == 1) continue;
                    ++checked;
                    if (cdu::cdiff_max(f, c) > m + 2) ++failures;
                }
            }
        }
        std::cout << "[criterion 9c] length-m uniformity bound m+2: " << checked
                  << " checks, " << failures << " failures"
                  << (failures == 0 ? " ok" : " MISMATCH") << "\n";
        ok = ok && failures == 0;
    }

    // (d) the closed-form count of solutions avoiding the boundary set P_a
    // matches brute force: exhaustively at n = 4, 5 and on 10^4 random
    // combinations at n = 8.
    {
        std::uint64_t checked = 0, failures = 0;
        const auto brute = [](const Permutation& f, const cdu::BoundarySet& pa,
                              elem c, elem a, elem b) {
            const FieldSpec& F = f.field();
            int cnt = 0;
            for (elem x = 0; x < F.size(); ++x) {
                if (pa.members.count(x) != 0) continue;
                if ((f(x ^ a) ^ F.mul(c, f(x))) == b) ++cnt;
            }
            return cnt;
        };
        for (int n : {4, 5}) {
            const FieldSpec F(n);
            for (elem gamma = 2; gamma < F.size(); ++gamma) {
                const Permutation f = cdu::car3_family(F, gamma);
                for (elem a = 1; a < F.size(); ++a) {
                    const cdu::BoundarySet pa = cdu::boundary_set(F, gamma, a);
                    for (elem c = 2; c < F.size(); ++c)
                        for (elem b = 0; b < F.size(); ++b) {
                            ++checked;
                            if (cdu::outside_pa_predict(F, gamma, c, a, b) !=
                                brute(f, pa, c, a, b))
                                ++failures;
                        }
                }
            }
        }
        std::mt19937_64 rng(904);
        const FieldSpec F8(8);
        for (int t = 0; t < 10000; ++t) {
            const elem gamma = static_cast<elem>(2 + rng() % (F8.size() - 2));
            const elem c = static_cast<elem>(2 + rng() % (F8.size() - 2));
            const elem a = static_cast<elem>(1 + rng() % (F8.size() - 1));
            const elem b = static_cast<elem>(rng() % F8.size());
            const Permutation f = cdu::car3_family(F8, gamma);
            const cdu::BoundarySet pa = cdu::boundary_set(F8, gamma, a);
            ++checked;
            if (cdu::outside_pa_predict(F8, gamma, c, a, b) !=
                brute(f, pa, c, a, b))
                ++failures;
        }
        std::cout << "[criterion 9d] boundary-avoiding solution counts: "
                  << checked << " checks, " << failures << " failures"
                  << (failures == 0 ? " ok" : " MISMATCH") << "\n";
        ok = ok && failures == 0;
    }

    // (e) the quadratic solver agrees with an exhaustive root scan for every
    // coefficient triple with a nonzero leading term, n = 2..6.
    {
        std::uint64_t checked = 0, failures = 0;
        for (int n = 2; n <= 6; ++n) {
            const FieldSpec F(n);
            for (elem a2 = 1; a2 < F.size(); ++a2)
                for (elem a1 = 0; a1 < F.size(); ++a1)
                    for (elem a0 = 0; a0 < F.size(); ++a0) {
                        int direct = 0;
                        for (elem x = 0; x < F.size(); ++x)
                            if ((F.mul(a2, F.mul(x, x)) ^ F.mul(a1, x) ^ a0) == 0)
                                ++direct;
                        ++checked;
                        if (F.quad_count(a2, a1, a0) != direct) ++failures;
                    }
        }
        std::cout << "[criterion 9e] quadratic root counts: " << checked
                  << " triples, " << failures << " failures"
                  << (failures == 0 ? " ok" : " MISMATCH") << "\n";
        ok = ok && failures == 0;
    }

    // (f) all three tables are representation-independent: identical rows
    // under a second irreducible modulus at n = 4 and n = 6.
    {
        const auto alt_modulus = [](int n, std::uint32_t skip) {
            for (std::uint32_t p = (1u << n) + 1;; p += 2) {
                if (p == skip) continue;
                try {
                    FieldSpec probe(n, p);
                    return p;
                } catch (const std::exception&) {
                }
            }
        };
        bool all_equal = true;
        for (int n : {4, 6}) {
            const FieldSpec base(n);
            const FieldSpec alt(n, alt_modulus(n, base.modulus()));
            for (int table = 1; table <= 3; ++table) {
                const bool same = cdu::run_table(base, table, {}).rows ==
                                  cdu::run_table(alt, table, {}).rows;
                if (!same) all_equal = false;
                std::cout << "[criterion 9f] n=" << n << " table " << table
                          << ": " << base.modulus_hex() << " vs "
                          << alt.modulus_hex()
                          << (same ? " identical" : " DIFFER") << "\n";
            }
        }
        ok = ok && all_equal;
    }

    return ok;
}

bool run_criterion(int k) {
    switch (k) {
        case 1: return criterion_1();
        case 2: return criterion_2();
        case 3: return criterion_3();
        case 4: return criterion_4();
        case 5: return criterion_5();
        case 6: return criterion_6();
        case 7: return criterion_7();
        case 8: return criterion_8();
        case 9: return criterion_9();
        default: return false;
    }
}

} // namespace

int main(int argc, char** argv) {
    std::vector<int> selected;
    if (argc > 1) {
        const int k = std::atoi(argv[1]);
        if (k < 1 || k > 9) {
            std::cerr << "usage: acceptance [1..9]\n";
            return 2;
        }
        selected.push_back(k);
    } else {
        for (int k = 1; k <= 9; ++k) selected.push_back(k);
    }

    bool all = true;
    for (int k : selected) {
        bool pass = false;
        try {
            pass = run_criterion(k);
        } catch (const std::exception& e) {
            std::cout << "[criterion " << k << "] unexpected error: " << e.what()
                      << "\n";
        }
        std::cout << "CRITERION " << k << ": " << (pass ? "PASS" : "FAIL")
                  << std::endl;
        all = all && pass;
    }
    return all ? 0 : 1;
}
