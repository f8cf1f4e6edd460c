#pragma once

#include <cstdint>
#include <iosfwd>
#include <set>
#include <utility>
#include <vector>

#include "cdu/field.hpp"

namespace cdu {

// A bijective lookup table over the elements of a field. The FieldSpec must
// outlive the permutation. Construction verifies bijectivity and reports the
// first value that appears twice.
class Permutation {
public:
    Permutation(const FieldSpec& field, std::vector<std::uint16_t> table);

    const FieldSpec& field() const { return *field_; }
    elem operator()(elem x) const { return table_[x]; }
    const std::vector<std::uint16_t>& table() const { return table_; }
    std::uint32_t size() const { return static_cast<std::uint32_t>(table_.size()); }

    Permutation inverse() const;

private:
    const FieldSpec* field_;
    std::vector<std::uint16_t> table_;
};

Permutation identity_perm(const FieldSpec& field);

// x -> x^(2^n - 2), i.e. the multiplicative inverse with 0 -> 0.
Permutation inverse_map(const FieldSpec& field);

// x -> u*x + v with u != 0 (an affine permutation of degree one).
Permutation affine_deg1(const FieldSpec& field, elem u, elem v);

// x -> f(g(x)); both permutations must live on the same field.
Permutation compose(const Permutation& f, const Permutation& g);

// The cycle points[0] -> points[1] -> ... -> points[last] -> points[0],
// identity elsewhere. Points must be pairwise distinct, at least two.
Permutation cycle_perm(const FieldSpec& field, const std::vector<elem>& points);

// The inverse map composed with the 3-cycle 0 -> 1 -> gamma -> 0:
//   F(0) = 1, F(1) = inv(gamma), F(gamma) = 0, F(x) = inv(x) elsewhere.
// Requires gamma not in {0, 1}.
Permutation car3_family(const FieldSpec& field, elem gamma);

// Coefficients (a_0, ..., a_(m+1)) of the m-fold inverse alternation
//   F(x) = (...((a_0 x + a_1)^(2^n-2) + a_2)^(2^n-2) ... + a_m)^(2^n-2) + a_(m+1)
// with a_0 != 0 and a_2, ..., a_m != 0. m is a declared rank bound (>= 1);
// whether m is minimal is never decided here.
struct CarlitzForm {
    CarlitzForm(const FieldSpec& field, std::vector<elem> coefficients);

    const FieldSpec* field;
    std::vector<elem> coeffs; // size m + 2
    int m;
};

// Evaluate the nested expression at every point; the result is bijective.
Permutation from_carlitz(const CarlitzForm& form);

// Convergent sequences alpha_i, beta_i (0 <= i <= m+1) with
//   alpha_0 = 0, alpha_1 = a_0, beta_0 = 1, beta_1 = a_1,
//   alpha_i = a_i alpha_(i-1) + alpha_(i-2), beta_i likewise.
// The rational map R_m(x) = (alpha_(m+1) x + beta_(m+1)) / (alpha_m x + beta_m)
// agrees with the form at every x outside the pole set
//   O_m = { beta_i / alpha_i : 1 <= i <= m, alpha_i != 0 }.
struct ConvergentData {
    std::vector<elem> alphas, betas;
    std::set<elem> poles;               // O_m
    std::pair<elem, elem> rm_num;       // (alpha_(m+1), beta_(m+1))
    std::pair<elem, elem> rm_den;       // (alpha_m, beta_m)
};

ConvergentData convergents(const CarlitzForm& form);

// Conjugating a form by explicit degree-one affine maps leaves either the
// inverse map or the identity, up to at most m exceptional points:
//   inv_like      g = A2 . F . A1 equals inv(x) for x outside p, and 0 is in p
//   identity_like g = A2 . F      equals x      for x outside p
enum class NormalKind { inv_like, identity_like };

struct Normalized {
    Permutation g;      // A2 . F . A1
    std::set<elem> p;   // exceptional points, |p| <= m
    NormalKind kind;
    Permutation a1, a2; // the affine witnesses (a1 is the identity when unused)
};

Normalized normalize(const CarlitzForm& form);

// Text import/export: one hexadecimal output value per line, line index =
// input; blank lines and lines starting with '#' are skipped. Round-trips
// exactly. Import rejects wrong length and repeated values.
Permutation read_permutation(const FieldSpec& field, std::istream& in);
void write_permutation(const Permutation& f, std::ostream& out);

} // namespace cdu
