#pragma once
// Constant-weight bit strings read as monotone lattice paths in a v x h
// rectangle (0 = vertical step, 1 = horizontal step), their index-set
// parameterization inside the symmetric group on coordinates -v..h-1, the
// two insertion-operator families on paths, the interleaving shuffle, and
// balanced adjacent pair insertions/deletions.
//
// Logical coordinate indices run -v..h-1 (storage offset +v). The adjacent
// transposition s_i swaps coordinates i-1 and i, so the ambient group for
// one path insertion, acting on coordinates -(v+1)..h, has generators
// s_{-v}..s_h.

#include "idweyl/bitseq.hpp"
#include "idweyl/weylb.hpp"  // Vec

#include <cstddef>
#include <vector>

namespace idweyl {

// Length v+h and exactly h ones.
bool is_path(const BitSeq& x, int v, int h);

// Element parameterized by a v-element subset J of {-v..h-1}: the product
// of blocks (s_j s_{j-1} ... s_{k+1}) for the k-th smallest member j of J
// (k = -v..-1, block empty when j = k), leftmost block for the smallest k,
// rightmost block applied first. Its orbit vector on the weight
// (1/2)^v (-1/2)^h has entry +1/2 exactly at positions in J.
struct MinusculeA {
    int v = 0, h = 0;
    std::vector<int> J;  // sorted, v elements from -v..h-1

    bool operator==(const MinusculeA&) const = default;
};

// The four equivalent descriptions of one index subset.
struct PathForms {
    BitSeq bits;             // 0 exactly at positions in J
    Vec weight_vec;          // +1/2 exactly at J (doubled storage)
    MinusculeA minuscule;
    std::vector<int> coset;  // canonical coset label: J itself
};

// Throws std::invalid_argument when J is not a v-element subset of -v..h-1.
PathForms g_bijections(const std::vector<int>& J, int v, int h);

// Inverse of the bits map: logical indices of the 0 symbols.
std::vector<int> path_to_subset(const BitSeq& x, int v);

// Generator word of the element (logical letters, rightmost applied first).
std::vector<int> minuscule_word_a(const MinusculeA& w);

// Sum of (j_k - k) over the sorted members; equals inversions(bits).
long long length_a(const MinusculeA& w);

// Apply a word of logical letters to the entries of a vector indexed
// -v..len-v-1 (letter i swaps storage positions i+v-1 and i+v), rightmost
// letter first. Used for word-versus-table cross checks.
template <typename T>
std::vector<T> apply_word_a(const std::vector<int>& word, std::vector<T> vec, int v) {
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        std::size_t p = static_cast<std::size_t>(*it + v);
        std::swap(vec[p - 1], vec[p]);
    }
    return vec;
}

// Prepend 0 and append 1: embeds a (v,h) path into (v+1, h+1) without
// changing its inversion count.
BitSeq kappa(const BitSeq& y);

// j-th path insertion of y (0 <= j <= 2(v+h)+1): the right subword of
// length j of the palindrome s_h ... s_{-v} ... s_h applied after kappa.
// Bit level: for j <= v+h, prepend 0 and insert 1 at gap v+h-j; for
// j >= v+h+1, prepend 1 and insert 0 at gap j-v-h-1. Inversion counts along
// j = 0..2(v+h)+1 rise from inv(y) to inv(y) + v+h+1, one unit per change.
BitSeq path_insert(const BitSeq& y, int j);

// Letters of the defining palindrome for the (v,h) path insertions, in
// product order (leftmost first; the right subword of length j consists of
// the last j letters).
std::vector<int> path_insert_word(int v, int h);

// All distinct path insertions of y; always |y| + 2 elements.
std::vector<BitSeq> path_insertion_sphere(const BitSeq& y);

// All results of deleting the first bit together with one later bit of the
// opposite value. Empty for constant words.
std::vector<BitSeq> path_deletion_sphere(const BitSeq& y);

// j-th insertion of the second family (0 <= j <= 2(v+h)+1): the inserted 0
// drifts rightward from the front while the inserted 1 drifts leftward from
// the back, one swap per step, crossing in the middle. Realizes the right
// subwords of the palindrome s_h s_{-v} s_{h-1} s_{-(v-1)} ... applied
// after kappa.
BitSeq h_insert(const BitSeq& y, int j);

std::vector<int> h_insert_word(int v, int h);
std::vector<BitSeq> h_insertion_sphere(const BitSeq& y);

// Interleaving shuffle x_1 x_n x_2 x_{n-1} ... and its inverse. Conjugating
// the second insertion family by the shuffle turns it into balanced
// adjacent pair insertions.
BitSeq azby(const BitSeq& x);
BitSeq azby_inverse(const BitSeq& x);

// Insert the two-bit pattern "01" or "10" at the given gap.
// Throws std::out_of_range / std::invalid_argument on bad input.
BitSeq bai_insert(const BitSeq& x, std::size_t gap, const std::string& pattern);

// All distinct results of one balanced adjacent insertion.
std::vector<BitSeq> bai_insertion_sphere(const BitSeq& x);

// All results of deleting an adjacent unequal pair.
std::vector<BitSeq> bad_deletion_sphere(const BitSeq& x);

}  // namespace idweyl
