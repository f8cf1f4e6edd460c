#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace cdu {

// A field element in polynomial-basis representation: bit i of the integer is
// the coefficient of X^i. Valid values are < 2^n for the ambient field.
using elem = std::uint32_t;

// --- polynomials over F_2, encoded the same way (used for moduli) ---

// Degree of p as a polynomial over F_2; -1 for p == 0.
int poly_degree(std::uint32_t p);

// Remainder of a modulo m (carryless polynomial division), m != 0.
std::uint32_t poly_mod(std::uint32_t a, std::uint32_t m);

// Irreducibility over F_2 by trial division with every polynomial of degree
// 1..deg(p)/2. When p is reducible and factor_out is non-null, *factor_out
// receives one nontrivial factor that divides p.
bool poly_irreducible(std::uint32_t p, std::uint32_t* factor_out = nullptr);

// The smallest irreducible polynomial of degree n, comparing encoded values as
// integers (equivalently: lexicographically by coefficient vector read from
// X^n down to 1).
std::uint32_t default_modulus(int n);

// --- hexadecimal element I/O ---

std::string elem_hex(elem x);                  // "0x1b"
std::uint32_t parse_hex(const std::string& s); // accepts "0x1b" and "1b"

// GF(2^n) for 2 <= n <= 16. Multiplication, inversion, square roots and
// traces run on tables built once at construction from a multiplicative
// generator. Immutable afterwards: every member function is a pure function
// of its arguments, so unrestricted concurrent reads are safe.
class FieldSpec {
public:
    // modulus == 0 selects default_modulus(n). Throws std::invalid_argument
    // when n is out of range, the modulus does not have degree exactly n, or
    // the modulus is reducible (the message names a factor).
    explicit FieldSpec(int n, std::uint32_t modulus = 0);

    int n() const { return n_; }
    std::uint32_t size() const { return size_; }  // 2^n
    std::uint32_t modulus() const { return modulus_; }
    std::string modulus_hex() const;
    elem generator() const { return generator_; } // element the log tables use

    elem add(elem x, elem y) const { return x ^ y; }

    elem mul(elem x, elem y) const {
        return (x != 0 && y != 0) ? alog_[log_[x] + log_[y]] : 0;
    }

    // Multiplicative inverse with inv(0) = 0.
    elem inv(elem x) const { return inv_[x]; }

    // mul(x, inv(y)); yields 0 when y == 0.
    elem div(elem x, elem y) const { return mul(x, inv_[y]); }

    // x^k with 0^0 = 1 and 0^k = 0 for k > 0.
    elem pow(elem x, std::uint64_t k) const;

    // Absolute trace x + x^2 + x^4 + ... + x^(2^(n-1)), always 0 or 1.
    int trace(elem x) const { return trace_[x]; }

    // The unique square root (the Frobenius map is a bijection).
    elem sqrt(elem x) const { return sqrt_[x]; }

    // Discrete log with respect to generator(); x must be nonzero.
    unsigned log(elem x) const;
    elem antilog(unsigned k) const { return alog_[k % (size_ - 1)]; }

    // Number of roots of a2 x^2 + a1 x + a0 = 0, by the closed form:
    // 1 when a1 == 0; otherwise 2 or 0 as trace(a0*a2 / a1^2) is 0 or 1.
    // Throws std::invalid_argument when a2 == 0.
    int quad_count(elem a2, elem a1, elem a0) const;

    // The roots themselves, sorted ascending; size always equals quad_count.
    std::vector<elem> quad_roots(elem a2, elem a1, elem a0) const;

private:
    int n_ = 0;
    std::uint32_t modulus_ = 0;
    std::uint32_t size_ = 0;
    elem generator_ = 0;
    std::vector<std::uint16_t> log_;   // index: nonzero element
    std::vector<std::uint16_t> alog_;  // doubled so mul needs no reduction
    std::vector<std::uint16_t> inv_;
    std::vector<std::uint16_t> sqrt_;
    std::vector<std::uint8_t> trace_;
    std::vector<std::uint32_t> artin_; // artin_[d] = least y with y^2+y = d
};

inline FieldSpec make_field(int n, std::uint32_t modulus = 0) {
    return FieldSpec(n, modulus);
}

} // namespace cdu
