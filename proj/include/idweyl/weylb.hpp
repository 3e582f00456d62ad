#pragma once
// Hyperoctahedral (signed-permutation) machinery: the rank-n reflection
// group with generators s_1 = sign flip of coordinate 1 and s_i = swap of
// coordinates i-1, i for i >= 2, its root system, length via root counting,
// the 2^n index-set elements whose orbit vectors have entry -1/2 exactly on
// the index set, the bijections tying those elements to bit strings, and the
// operator words that realize single-bit insertions inside the rank-(n+1)
// group.

#include "idweyl/bitseq.hpp"

#include <vector>

namespace idweyl {

// Weight vectors have half-integer entries stored doubled: the base weight
// (1/2, ..., 1/2) is stored as (1, ..., 1). Roots use plain integer entries;
// the group action below is sign-and-permute, so it never leaves either
// lattice.
using Vec = std::vector<int>;

// Base weight (1/2, ..., 1/2) of rank n, doubled storage.
Vec base_weight(int n);

struct SignedPerm {
    // Window notation: the element maps coordinate axis i to axis
    // |window[i-1]|, negated when window[i-1] < 0. Identity window is 1..n.
    std::vector<int> window;

    int rank() const { return static_cast<int>(window.size()); }
    bool is_identity() const;
    bool operator==(const SignedPerm&) const = default;
};

SignedPerm identity_perm(int n);

// Generator s_i of the rank-n group, 1 <= i <= n.
SignedPerm generator_b(int n, int i);

// Product of generators, rightmost letter applied first.
SignedPerm perm_from_word(int n, const std::vector<int>& word);

// compose(a, b) applies b first, then a.
SignedPerm compose(const SignedPerm& a, const SignedPerm& b);
SignedPerm inverse(const SignedPerm& w);

// Linear action on a coordinate vector of matching length.
// Throws std::invalid_argument on dimension mismatch.
Vec apply(const SignedPerm& w, const Vec& v);

// Embed into rank m >= rank(w), fixing the new trailing coordinates.
SignedPerm promote(const SignedPerm& w, int m);

struct RootSystemB {
    int rank;
    std::vector<Vec> simple_roots;    // e_1, then e_i - e_{i-1} for i >= 2
    std::vector<Vec> positive_roots;  // {e_i} and {e_j +- e_i, i < j}: n^2 roots

    explicit RootSystemB(int n);      // throws std::invalid_argument for n < 0
    bool is_positive(const Vec& r) const;
};

// Number of positive roots mapped to negative roots; equals the minimal
// number of generators needed to express w.
int length(const SignedPerm& w);

// A minimal-length generator word for w, built by repeatedly taking the
// smallest i with length(s_i w) < length(w). Result multiplies to w
// (rightmost letter applied first) and has exactly length(w) letters.
std::vector<int> reduced_word(const SignedPerm& w);

// Element parameterized by a subset J of {1..n}: the product of blocks
// (s_j s_{j-1} ... s_1) for j in J taken in increasing order, the largest
// block rightmost (applied first). Its orbit vector on the base weight has
// entry -1/2 exactly at positions in J, and the concatenated word is reduced
// with length equal to the sum of J.
struct MinusculeB {
    int n = 0;
    std::vector<int> J;  // sorted

    bool operator==(const MinusculeB&) const = default;
};

// Throws std::invalid_argument when J is not a subset of {1..n}.
MinusculeB minuscule_from_subset(int n, std::vector<int> J);

std::vector<int> minuscule_word(const MinusculeB& w);
SignedPerm minuscule_perm(const MinusculeB& w);

// Cosets of the stabilizer of the base weight (the subgroup generated by
// s_2..s_n) correspond one-to-one with orbit vectors and hence with index
// subsets; the subset is used as the canonical coset label.
struct CosetB {
    int n = 0;
    std::vector<int> J;  // sorted

    bool operator==(const CosetB&) const = default;
};

CosetB coset_of(const SignedPerm& w);            // label of w's coset
MinusculeB min_coset_rep(const CosetB& c);       // shortest element in the coset

// The four equivalent descriptions of an index subset. Every map below is a
// bijection for fixed rank; the inverses recover J.
BitSeq bij_f01(int n, const std::vector<int>& J);           // 1 exactly at J
Vec bij_f12(int n, const std::vector<int>& J);              // -1/2 exactly at J
MinusculeB bij_fM(int n, std::vector<int> J);
CosetB bij_fcoset(int n, std::vector<int> J);

std::vector<int> bij_f01_inv(const BitSeq& x);              // support of x
std::vector<int> bij_f12_inv(const Vec& lambda);            // negative positions
std::vector<int> bij_fM_inv(const MinusculeB& w);

// Operator realizing one bit insertion group-theoretically: the right
// subword of length j of the palindrome
//   s_{n+1} s_n ... s_2 s_1 s_2 ... s_n s_{n+1}
// inside the rank-(n+1) group, 0 <= j <= 2n+1. The insertion of bit b into
// gap i of a length-n string corresponds to index j = n + b + (-1)^(b+1) i
// (the inverse of psi). The full word (j = 2n+1) is the sign flip of the
// last coordinate.
SignedPerm insertion_op(int n, int j);

// Minimal-coset-representative action: embeds w into the rank of v (which
// must be >= rank(w)), applies v to w's orbit vector, and reads off the new
// index subset. Throws std::invalid_argument when rank(v) < rank(w).
MinusculeB act_on_minuscule(const SignedPerm& v, const MinusculeB& w);

}  // namespace idweyl
