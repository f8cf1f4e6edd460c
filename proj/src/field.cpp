#include "cdu/field.hpp"

#include <algorithm>
#include <cassert>
#include <cstdio>
#include <stdexcept>

namespace cdu {

namespace {

constexpr std::uint32_t kNoArtinRoot = 0xFFFFFFFFu;

// Carryless multiply-and-reduce used only during table construction, before
// the log tables exist.
std::uint32_t slow_mul(std::uint32_t a, std::uint32_t b, std::uint32_t mod, int n) {
    std::uint32_t r = 0;
    while (b != 0) {
        if (b & 1u) r ^= a;
        b >>= 1;
        a <<= 1;
        if (a & (1u << n)) a ^= mod;
    }
    return r;
}

} // namespace

int poly_degree(std::uint32_t p) {
    if (p == 0) return -1;
    int d = 0;
    while (p >> (d + 1)) ++d;
    return d;
}

std::uint32_t poly_mod(std::uint32_t a, std::uint32_t m) {
    if (m == 0) throw std::invalid_argument("poly_mod: zero modulus");
    const int dm = poly_degree(m);
    for (int da = poly_degree(a); da >= dm; da = poly_degree(a))
        a ^= m << (da - dm);
    return a;
}

bool poly_irreducible(std::uint32_t p, std::uint32_t* factor_out) {
    const int d = poly_degree(p);
    if (d <= 0) return false;
    if (d == 1) return true;
    for (std::uint32_t f = 2; poly_degree(f) <= d / 2; ++f) {
        if (poly_mod(p, f) == 0) {
            if (factor_out) *factor_out = f;
            return false;
        }
    }
    return true;
}

std::uint32_t default_modulus(int n) {
    if (n < 2 || n > 16)
        throw std::invalid_argument("default_modulus: degree must be in 2..16");
    // Constant term must be 1, otherwise X divides the polynomial.
    for (std::uint32_t m = (1u << n) | 1u; m < (2u << n); m += 2)
        if (poly_irreducible(m)) return m;
    throw std::logic_error("default_modulus: no irreducible polynomial found");
}

std::string elem_hex(elem x) {
    char buf[16];
    std::snprintf(buf, sizeof buf, "0x%x", x);
    return buf;
}

std::uint32_t parse_hex(const std::string& s) {
    std::size_t pos = 0;
    if (s.size() >= 2 && s[0] == '0' && (s[1] == 'x' || s[1] == 'X')) pos = 2;
    if (pos >= s.size())
        throw std::invalid_argument("parse_hex: empty value '" + s + "'");
    std::uint64_t v = 0;
    for (; pos < s.size(); ++pos) {
        const char ch = s[pos];
        int digit;
        if (ch >= '0' && ch <= '9') digit = ch - '0';
        else if (ch >= 'a' && ch <= 'f') digit = ch - 'a' + 10;
        else if (ch >= 'A' && ch <= 'F') digit = ch - 'A' + 10;
        else throw std::invalid_argument("parse_hex: bad hex digit in '" + s + "'");
        v = (v << 4) | static_cast<std::uint64_t>(digit);
        if (v > 0xFFFFFFFFull)
            throw std::invalid_argument("parse_hex: value out of range in '" + s + "'");
    }
    return static_cast<std::uint32_t>(v);
}

FieldSpec::FieldSpec(int n, std::uint32_t modulus) : n_(n) {
    if (n < 2 || n > 16)
        throw std::invalid_argument("FieldSpec: extension degree must be in 2..16");
    size_ = 1u << n;
    modulus_ = modulus == 0 ? default_modulus(n) : modulus;
    if (poly_degree(modulus_) != n)
        throw std::invalid_argument("FieldSpec: modulus " + elem_hex(modulus_) +
                                    " does not have degree " + std::to_string(n));
    std::uint32_t factor = 0;
    if (!poly_irreducible(modulus_, &factor))
        throw std::invalid_argument("FieldSpec: reducible modulus " + elem_hex(modulus_) +
                                    ": divisible by " + elem_hex(factor));

    // Log/antilog tables from the smallest multiplicative generator. The
    // antilog table is doubled so mul() can add logs without reducing.
    const std::uint32_t order = size_ - 1;
    log_.assign(size_, 0);
    alog_.assign(2 * order, 0);
    for (elem g = 2; g < size_; ++g) {
        std::uint32_t acc = 1;
        std::uint32_t k = 0;
        for (; k < order; ++k) {
            if (k > 0 && acc == 1) break; // order of g divides k < order
            alog_[k] = static_cast<std::uint16_t>(acc);
            acc = slow_mul(acc, g, modulus_, n);
        }
        if (k == order && acc == 1) {
            generator_ = g;
            break;
        }
    }
    assert(generator_ != 0 && "multiplicative group of a field is cyclic");
    for (std::uint32_t k = 0; k < order; ++k) {
        alog_[k + order] = alog_[k];
        log_[alog_[k]] = static_cast<std::uint16_t>(k);
    }

    inv_.assign(size_, 0);
    for (elem x = 1; x < size_; ++x)
        inv_[x] = alog_[(order - log_[x]) % order];

    sqrt_.assign (size_, 0);
    for (elem x = 0; x < size_; ++x)
        sqrt_[mul(x, x)] = static_cast<std::uint16_t>(x);

    trace_.assign(size_, 0);
    for (elem x = 0; x < size_; ++x) {
        elem acc = x, t = x;
        for (int i = 1; i < n; ++i) {
            t = mul(t, t);
            acc ^= t;
        }
        assert(acc <= 1 && "trace lands in the prime field");
        trace_[x] = static_cast<std::uint8_t>(acc);
    }

    // Preimage table of y -> y^2 + y, for solving quadratics in O(1).
    artin_.assign(size_, kNoArtinRoot);
    for (elem y = 0; y < size_; ++y) {
        const elem d = mul(y, y) ^ y;
        if (y < artin_[d]) artin_[d] = y;
    }
}

std::string FieldSpec::modulus_hex() const { return elem_hex(modulus_); }

elem FieldSpec::pow(elem x, std::uint64_t k) const {
    if (x == 0) return k == 0 ? 1 : 0;
    const std::uint64_t order = size_ - 1;
    const std::uint64_t e = (static_cast<std::uint64_t>(log_[x]) * (k % order)) % order;
    return alog_[e];
}

unsigned FieldSpec::log(elem x) const {
    if (x == 0 || x >= size_)
        throw std::invalid_argument("log: argument must be a nonzero field element");
    return log_[x];
}

int FieldSpec::quad_count(elem a2, elem a1, elem a0) const {
    if (a2 == 0)
        throw std::invalid_argument("quad_count: leading coefficient is zero");
    if (a1 == 0) return 1;
    const elem d = div(mul(a0, a2), mul(a1, a1));
    return trace_[d] == 0 ? 2 : 0;
}

std::vector<elem> FieldSpec::quad_roots(elem a2, elem a1, elem a0) const {
    if (a2 == 0)
        throw std::invalid_argument("quad_roots: leading coefficient is zero");
    std::vector<elem> roots;
    if (a1 == 0) {
        roots.push_back(sqrt_[div(a0, a2)]);
    } else {
        const elem d = div(mul(a0, a2), mul(a1, a1));
        if (trace_[d] == 0) {
            const elem y = artin_[d];
            assert(y != kNoArtinRoot);
            const elem r = div(a1, a2); // substitution x = r*y maps to y^2+y = d
            roots.push_back(mul(r, y));
            roots.push_back(mul(r, y ^ 1u));
            std::sort(roots.begin(), roots.end());
        }
    }
    for (elem x : roots)
        assert((mul(a2, mul(x, x)) ^ mul(a1, x) ^ a0) == 0);
    assert(static_cast<int>(roots.size()) == quad_count(a2, a1, a0));
    return roots;
}

} // namespace cdu
