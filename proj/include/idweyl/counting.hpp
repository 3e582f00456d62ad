#pragma once
// Exact counting: arbitrary-precision helpers (Mobius, totient, binomials,
// Catalan numbers), integer polynomials, the closed-form code cardinalities,
// generating polynomials, q-binomials, sphere-size formulas, Dyck-word
// enumeration and greedy decomposition, and the composition identity tying
// Catalan products to a central binomial.

#include "idweyl/bitseq.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <vector>

namespace idweyl {

using BigInt = boost::multiprecision::cpp_int;

// Univariate polynomial with exact integer coefficients, index = exponent,
// canonical form (no trailing zero coefficient).
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<BigInt> coeffs);

    static IntPoly one();
    static IntPoly monomial(int degree, BigInt coeff = 1);

    const std::vector<BigInt>& coeffs() const { return c_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    BigInt coeff(int k) const;

    IntPoly& operator+=(const IntPoly& o);
    friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
    bool operator==(const IntPoly&) const = default;

    BigInt eval(const BigInt& q) const;

    // Reduce modulo q^m - 1 by folding every exponent to exponent mod m.
    IntPoly fold_exponents(int m) const;

    std::string str(const std::string& var = "X") const;

private:
    std::vector<BigInt> c_;
    void normalize();
};

// Memoized arithmetic tables. All functions are thread safe and
// observationally pure.
int mobius(long long n);            // n >= 1
long long totient(long long n);     // n >= 1
BigInt binomial(long long n, long long k);
BigInt catalan_number(int c);       // binomial(2c, c) / (c + 1)

// Number of length-n strings whose moment is congruent to a modulo n+1,
// evaluated by the divisor-sum formula (odd divisors d of n+1):
//   1/(2(n+1)) * sum mobius(d/(d,a)) * totient(d)/totient(d/(d,a)) * 2^((n+1)/d).
// The leading division is asserted exact. n >= 1.
BigInt card_levenshtein(int n, long long a);

// Number of weight-h length-(v+h) strings with inversion count congruent to
// a modulo v+h, by the analogous divisor sum over d | gcd(v,h) with
// binomial((v+h)/d, v/d) in place of the power of two. v, h >= 1.
BigInt card_path_code(int v, int h, long long a);

// q-binomial coefficient via the addition recurrence
// [n k] = [n-1 k-1] + q^k [n-1 k]; degree k(n-k). Requires 0 <= kq <= nq.
IntPoly gaussian_binomial(int nq, int kq);

// Distribution of the moment over all length-n strings / of the length over
// the 2^n index-set elements of the rank-n group. Both are computed twice,
// by direct enumeration and as the product of (1 + X^i) for i = 1..n, and
// verified equal (std::logic_error otherwise).
IntPoly genfun_moment(int n);
IntPoly genfun_length(int n);

// Closed-form t-step insertion sphere sizes: sum of binomial(n+t, i) over
// i <= t for single-bit insertions, binomial(n+2t, t) for balanced adjacent
// insertions. Both independent of the starting length-n word.
BigInt sphere_size_standard(int n, int t);
BigInt sphere_size_bai(int n, int t);

// Path-insertion iterated spheres have no such closed form: sizes at t = 0
// and t = 1 are 1 and n+2, but depth two already depends on the word. This
// report verifies those facts and the witness pair (|..(00)| , |..(01)|) =
// (15, 16) at depth two, including the exact member sets.
struct PathSphereReport {
    bool ok = false;
    std::string detail;
};
PathSphereReport path_sphere_facts();

// All length-2c strings that start with `lead` (when c > 0) and in which
// every prefix contains at least as many `lead` symbols as others; there are
// catalan_number(c) of them for either lead bit.
std::vector<BitSeq> dyck_enumerate(int c, char lead);

// Greedy factorization x = p_1 y_1 p_2 y_2 ... p_n y_n r against a template
// y of length n: each p_i is the shortest prefix of the remainder that is a
// balanced dominant word led by the complement of y_i and is followed by
// y_i; the tail r must have equal bit counts. Succeeds with sum(c) = t
// exactly when x lies in the t-step balanced-adjacent insertion sphere of y.
struct DyckDecomposition {
    std::vector<long long> c;     // |p_1|/2, ..., |p_n|/2, |r|/2
    std::vector<BitSeq> factors;  // p_1, ..., p_n, r
    long long t() const;
};
std::optional<DyckDecomposition> dyck_decompose(const BitSeq& x, const BitSeq& y);

// Sum over all compositions c_1 + ... + c_{n+1} = t of
// (c_{n+1} + 1) * prod catalan_number(c_i), compared with binomial(n+2t, t).
struct CatalanIdentityReport {
    BigInt lhs, rhs;
    bool equal = false;
};
CatalanIdentityReport catalan_identity(int n, int t);

}  // namespace idweyl
