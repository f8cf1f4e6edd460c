#include "cdu/cdiff.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>
#include <vector>

namespace cdu {

namespace {

std::vector<std::uint16_t> multiplier_table(const FieldSpec& F, elem c) {
    std::vector<std::uint16_t> mulc(F.size());
    for (elem y = 0; y < F.size(); ++y)
        mulc[y] = static_cast<std::uint16_t>(F.mul(c, y));
    return mulc;
}

CDiffReport scan(const Permutation& f, elem c, int threshold) {
    const FieldSpec& F = f.field();
    const std::uint32_t size = F.size();
    const std::uint16_t* tab = f.table().data();
    const std::vector<std::uint16_t> mulc = multiplier_table(F, c);

    CDiffReport rep;
    rep.c = c;
    std::vector<std::uint32_t> hist(size);
    std::vector<std::uint64_t> by_count(size + 1, 0);
    std::uint32_t shifts_scanned = 0;

    for (std::uint32_t a = 0; a < size; ++a) {
        if (c == 1 && a == 0) continue;
        std::fill(hist.begin(), hist.end(), 0);
        for (std::uint32_t x = 0; x < size; ++x)
            ++hist[tab[x ^ a] ^ mulc[tab[x]]];
        for (std::uint32_t b = 0; b < size; ++b) {
            const std::uint32_t h = hist[b];
            ++by_count[h];
            if (static_cast<int>(h) > rep.max_count) {
                rep.max_count = static_cast<int>(h);
                rep.witness = {a, b};
            }
        }
        ++shifts_scanned;
        if (threshold > 0 && rep.max_count >= threshold) {
            rep.truncated = a + 1 < size;
            break;
        }
    }

    std::uint64_t mass = 0;
    for (std::uint32_t h = 0; h <= size; ++h) {
        if (by_count[h] != 0) rep.spectrum[static_cast<int>(h)] = by_count[h];
        mass += static_cast<std::uint64_t>(h) * by_count[h];
    }
    assert(mass == static_cast<std::uint64_t>(size) * shifts_scanned &&
           "per-shift counts partition the domain");
    (void)mass;
    return rep;
}

} // namespace

int cdiff_count(const Permutation& f, elem c, elem a, elem b) {
    const FieldSpec& F = f.field();
    int count = 0;
    for (std::uint32_t x = 0; x < F.size(); ++x)
        if ((f(x ^ a) ^ F.mul(c, f(x))) == b) ++count;
    return count;
}

CDiffReport cdiff_uniformity(const Permutation& f, elem c) { return scan(f, c, 0); }

CDiffReport cdiff_uniformity_bounded(const Permutation& f, elem c, int threshold) {
    if (threshold < 1)
        throw std::invalid_argument("cdiff_uniformity_bounded: threshold must be >= 1");
    return scan(f, c, threshold);
}

int cdiff_max(const Permutation& f, elem c, int early_exit_threshold) {
    const FieldSpec& F = f.field();
    const std::uint32_t size = F.size();
    const std::uint16_t* tab = f.table().data();
    const std::vector<std::uint16_t> mulc = multiplier_table(F, c);

    int best = 0;
    std::vector<std::uint32_t> hist(size);
    for (std::uint32_t a = 0; a < size; ++a) {
        if (c == 1 && a == 0) continue;
        std::fill(hist.begin(), hist.end(), 0);
        for (std::uint32_t x = 0; x < size; ++x)
            ++hist[tab[x ^ a] ^ mulc[tab[x]]];
        for (std::uint32_t b = 0; b < size; ++b)
            if (static_cast<int>(hist[b]) > best) best = static_cast<int>(hist[b]);
        if (early_exit_threshold > 0 && best >= early_exit_threshold) break;
    }
    return best;
}

bool cdiff_symmetric(const Permutation& f, elem c) {
    if (c == 0)
        throw std::invalid_argument("cdiff_symmetric: c must be nonzero");
    const FieldSpec& F = f.field();
    const std::uint32_t size = F.size();
    const elem ci = F.inv(c);
    const std::uint16_t* tab = f.table().data();
    const std::vector<std::uint16_t> mulc = multiplier_table(F, c);
    const std::vector<std::uint16_t> mulci = multiplier_table(F, ci);

    int max_c = 0, max_ci = 0;
    std::vector<std::uint32_t> hist_c(size), hist_ci(size);
    for (std::uint32_t a = 0; a < size; ++a) {
        if (c == 1 && a == 0) continue;
        std::fill(hist_c.begin(), hist_c.end(), 0);
        std::fill(hist_ci.begin(), hist_ci.end(), 0);
        for (std::uint32_t x = 0; x < size; ++x) {
            ++hist_c[tab[x ^ a] ^ mulc[tab[x]]];
            ++hist_ci[tab[x ^ a] ^ mulci[tab[x]]];
        }
        for (std::uint32_t b = 0; b < size; ++b) {
            // #solutions for (c, a, b) must equal #solutions for (c^-1, a, b*c^-1)
            if (hist_c[b] != hist_ci[F.mul(b, ci)]) return false;
            max_c = std::max(max_c, static_cast<int>(hist_c[b]));
            max_ci = std::max(max_ci, static_cast<int>(hist_ci[b]));
        }
    }
    return max_c == max_ci;
}

BoundarySet boundary_set(const FieldSpec& field, elem gamma, elem a) {
    if (gamma <= 1 || gamma >= field.size() || a >= field.size())
        throw std::invalid_argument(
            "boundary_set: needs gamma outside {0, 1} and a in the field");
    BoundarySet s;
    s.gamma = gamma;
    s.a = a;
    for (elem p : {elem(0), elem(1), gamma})
        s.members.insert({p, p ^ a});
    return s;
}

int outside_pa_predict(const FieldSpec& F, elem gamma, elem c, elem a, elem b) {
    if (F.n() < 4)
        throw std::invalid_argument("outside_pa_predict: needs extension degree >= 4");
    if (a == 0)
        throw std::invalid_argument("outside_pa_predict: shift a must be nonzero");
    if (gamma <= 1 || c <= 1)
        throw std::invalid_argument("outside_pa_predict: gamma and c must lie outside {0, 1}");

    const elem abc1 = F.mul(a, b) ^ c ^ 1u; // ab + c + 1
    const elem g = gamma;

    // The exactly-two criterion: quadratic genuinely quadratic, solvable, and
    // none of its roots collides with a point of P_a.
    if (b != 0 && abc1 != 0) {
        const bool solvable =
            F.trace(F.div(F.mul(F.mul(a, b), c), F.mul(abc1, abc1))) == 0;
        const bool guards =
            (F.mul(b ^ c, a) ^ b ^ c ^ 1u) != 0 &&
            (F.mul(b ^ 1u, a) ^ b ^ c ^ 1u) != 0 &&
            (F.mul(F.mul(b, g) ^ c, a) ^ F.mul(g, F.mul(b, g) ^ c ^ 1u)) != 0 &&
            (F.mul(F.mul(b, g) ^ 1u, a) ^ F.mul(g, F.mul(b, g) ^ c ^ 1u)) != 0;
        if (solvable && guards) return 2;
    }

    // Otherwise count the roots of b x^2 + (ab+c+1) x + ca that avoid P_a.
    std::vector<elem> roots;
    const elem ca = F.mul(c, a);
    if (b == 0) {
        if (abc1 != 0) roots.push_back(F.div(ca, abc1)); // linear equation
    } else {
        roots = F.quad_roots(b, abc1, ca);
    }
    const BoundarySet pa = boundary_set(F, gamma, a);
    int outside = 0;
    for (elem r : roots)
        if (pa.members.count(r) == 0) ++outside;
    assert(outside <= 2);
    return outside;
}

} // namespace cdu
