#include "cdu/carlitz.hpp"

#include <cassert>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace cdu {

Permutation::Permutation(const FieldSpec& field, std::vector<std::uint16_t> table)
    : field_(&field), table_(std::move(table)) {
    const std::uint32_t size = field.size();
    if (table_.size() != size)
        throw std::invalid_argument("Permutation: table has " +
                                    std::to_string(table_.size()) + " entries, field needs " +
                                    std::to_string(size));
    std::vector<bool> seen(size, false);
    for (std::uint32_t x = 0; x < size; ++x) {
        const std::uint16_t y = table_[x];
        if (y >= size)
            throw std::invalid_argument("Permutation: value " + elem_hex(y) +
                                        " at index " + elem_hex(x) + " is outside the field");
        if (seen[y])
            throw std::invalid_argument("Permutation: not a bijection, value " +
                                        elem_hex(y) + " appears twice");
        seen[y] = true;
    }
}

Permutation Permutation::inverse() const {
    std::vector<std::uint16_t> t(table_.size());
    for (std::uint32_t x = 0; x < table_.size(); ++x)
        t[table_[x]] = static_cast<std::uint16_t>(x);
    return Permutation(*field_, std::move(t));
}

Permutation identity_perm(const FieldSpec& field) {
    std::vector<std::uint16_t> t(field.size());
    for (std::uint32_t x = 0; x < field.size(); ++x)
        t[x] = static_cast<std::uint16_t>(x);
    return Permutation(field, std::move(t));
}

Permutation inverse_map(const FieldSpec& field) {
    std::vector<std::uint16_t> t(field.size());
    for (std::uint32_t x = 0; x < field.size(); ++x)
        t[x] = static_cast<std::uint16_t>(field.inv(x));
    return Permutation(field, std::move(t));
}

Permutation affine_deg1(const FieldSpec& field, elem u, elem v) {
    if (u == 0)
        throw std::invalid_argument("affine_deg1: slope must be nonzero");
    std::vector<std::uint16_t> t(field.size());
    for (std::uint32_t x = 0; x < field.size(); ++x)
        t[x] = static_cast<std::uint16_t>(field.mul(u, x) ^ v);
    return Permutation(field, std::move(t));
}

Permutation compose(const Permutation& f, const Permutation& g) {
    const FieldSpec& ff = f.field();
    const FieldSpec& gf = g.field();
    if (ff.n() != gf.n() || ff.modulus() != gf.modulus())
        throw std::invalid_argument("compose: permutations live on different fields");
    std::vector<std::uint16_t> t(f.size());
    for (std::uint32_t x = 0; x < f.size(); ++x)
        t[x] = f(g(x));
    return Permutation(f.field(), std::move(t));
}

Permutation cycle_perm(const FieldSpec& field, const std::vector<elem>& points) {
    if (points.size() < 2)
        throw std::invalid_argument("cycle_perm: need at least two points");
    std::vector<std::uint16_t> t(field.size());
    for (std::uint32_t x = 0; x < field.size(); ++x)
        t[x] = static_cast<std::uint16_t>(x);
    std::set<elem> distinct;
    for (elem p : points) {
        if (p >= field.size())
            throw std::invalid_argument("cycle_perm: point " + elem_hex(p) +
                                        " is outside the field");
        if (!distinct.insert(p).second)
            throw std::invalid_argument("cycle_perm: duplicate point " + elem_hex(p));
    }
    for (std::size_t i = 0; i < points.size(); ++i)
        t[points[i]] = static_cast<std::uint16_t>(points[(i + 1) % points.size()]);
    return Permutation(field, std::move(t));
}

Permutation car3_family(const FieldSpec& field, elem gamma) {
    if (gamma == 0 || gamma == 1)
        throw std::invalid_argument("car3_family: gamma must lie outside {0, 1}");
    if (gamma >= field.size())
        throw std::invalid_argument("car3_family: gamma " + elem_hex(gamma) +
                                    " is outside the field");
    std::vector<std::uint16_t> t(field.size());
    for (std::uint32_t x = 0; x < field.size(); ++x)
        t[x] = static_cast<std::uint16_t>(field.inv(x));
    t[0] = 1;
    t[1] = static_cast<std::uint16_t>(field.inv(gamma));
    t[gamma] = 0;
    return Permutation(field, std::move(t));
}

CarlitzForm::CarlitzForm(const FieldSpec& f, std::vector<elem> coefficients)
    : field(&f), coeffs(std::move(coefficients)), m(static_cast<int>(coeffs.size()) - 2) {
    if (m < 1)
        throw std::invalid_argument("CarlitzForm: need at least three coefficients (m >= 1)");
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i] >= f.size())
            throw std::invalid_argument("CarlitzForm: coefficient " + elem_hex(coeffs[i]) +
                                        " is outside the field");
        const bool must_be_nonzero = i == 0 || (i >= 2 && i <= static_cast<std::size_t>(m));
        if (must_be_nonzero && coeffs[i] == 0)
            throw std::invalid_argument("CarlitzForm: coefficient a_" + std::to_string(i) +
                                        " must be nonzero");
    }
}

Permutation from_carlitz(const CarlitzForm& form) {
    const FieldSpec& F = *form.field;
    std::vector<std::uint16_t> t(F.size());
    for (std::uint32_t x = 0; x < F.size(); ++x) {
        elem acc = F.mul(form.coeffs[0], x) ^ form.coeffs[1];
        for (int i = 2; i <= form.m + 1; ++i)
            acc = F.inv(acc) ^ form.coeffs[i];
        t[x] = static_cast<std::uint16_t>(acc);
    }
    return Permutation(F, std::move(t));
}

ConvergentData convergents(const CarlitzForm& form) {
    const FieldSpec& F = *form.field;
    ConvergentData d;
    d.alphas = {0, form.coeffs[0]};
    d.betas = {1, form.coeffs[1]};
    for (int i = 2; i <= form.m + 1; ++i) {
        d.alphas.push_back(F.mul(form.coeffs[i], d.alphas[i - 1]) ^ d.alphas[i - 2]);
        d.betas.push_back(F.mul(form.coeffs[i], d.betas[i - 1]) ^ d.betas[i - 2]);
    }
    for (int i = 1; i <= form.m; ++i)
        if (d.alphas[i] != 0)
            d.poles.insert(F.div(d.betas[i], d.alphas[i]));
    d.rm_num = {d.alphas[form.m + 1], d.betas[form.m + 1]};
    d.rm_den = {d.alphas[form.m], d.betas[form.m]};
    // Cross-product identity, the workhorse of the normalization proof.
    assert((F.mul(d.alphas[form.m], d.betas[form.m + 1]) ^
            F.mul(d.alphas[form.m + 1], d.betas[form.m])) == form.coeffs[0]);
    return d;
}

Normalized normalize(const CarlitzForm& form) {
    const FieldSpec& F = *form.field;
    const ConvergentData conv = convergents(form);
    const elem a0 = form.coeffs[0];
    const elem am = conv.alphas[form.m];
    const elem am1 = conv.alphas[form.m + 1];
    const elem bm = conv.betas[form.m];
    const elem bm1 = conv.betas[form.m + 1];
    const Permutation f = from_carlitz(form);

    if (am != 0) {
        // A1(x) = (a0 x + beta_m) / alpha_m,  A2(y) = alpha_m y + alpha_(m+1).
        Permutation a1 = affine_deg1(F, F.div(a0, am), F.div(bm, am));
        Permutation a2 = affine_deg1(F, am, am1);
        Permutation g = compose(a2, compose(f, a1));
        std::set<elem> p;
        for (elem pole : conv.poles)
            p.insert(F.div(F.mul(am, pole) ^ bm, a0)); // A1^(-1)(pole)
        assert(p.count(0) == 1 && "beta_m/alpha_m is itself a pole");
        assert(static_cast<int>(p.size()) <= form.m);
        return Normalized{std::move(g), std::move(p), NormalKind::inv_like,
                          std::move(a1), std::move(a2)};
    }
    // alpha_m == 0 forces alpha_(m+1) beta_m = a_0, so both factors are
    // nonzero and A2(y) = (beta_m y + beta_(m+1)) / alpha_(m+1) is affine.
    assert(F.mul(am1, bm) == a0);
    Permutation a1 = identity_perm(F);
    Permutation a2 = affine_deg1(F, F.div(bm, am1), F.div(bm1, am1));
    Permutation g = compose(a2, f);
    std::set<elem> p = conv.poles;
    assert(static_cast<int>(p.size()) <= form.m);
    return Normalized{std::move(g), std::move(p), NormalKind::identity_like,
                      std::move(a1), std::move(a2)};
}

Permutation read_permutation(const FieldSpec& field, std::istream& in) {
    std::vector<std::uint16_t> t;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::size_t start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos || line[start] == '#') continue;
        std::size_t end = line.find_last_not_of(" \t\r");
        std::uint32_t v;
        try {
            v = parse_hex(line.substr(start, end - start + 1));
        } catch (const std::invalid_argument& e) {
            throw std::runtime_error("line " + std::to_string(lineno) + ": " + e.what());
        }
        if (v >= field.size())
            throw std::runtime_error("line " + std::to_string(lineno) + ": value " +
                                     elem_hex(v) + " is outside the field");
        t.push_back(static_cast<std::uint16_t>(v));
    }
    if (t.size() != field.size())
        throw std::runtime_error("expected " + std::to_string(field.size()) +
                                 " values, found " + std::to_string(t.size()));
    return Permutation(field, std::move(t));
}

void write_permutation(const Permutation& f, std::ostream& out) {
    char buf[8];
    for (std::uint32_t x = 0; x < f.size(); ++x) {
        std::snprintf(buf, sizeof buf, "%x\n", static_cast<unsigned>(f(x)));
        out << buf;
    }
}

} // namespace cdu
