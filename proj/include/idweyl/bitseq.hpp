#pragma once
// Bit-sequence primitives: weighted-position and inversion statistics,
// single-symbol insertions and deletions, insertion/deletion spheres, and
// iterated spheres under the three operator families implemented by this
// library (single-bit, lattice-path, balanced-adjacent-pair).

#include <cstddef>
#include <string>
#include <vector>

namespace idweyl {

// A bit sequence is an ASCII string over {'0','1'}. The empty string is the
// valid null word. All set-valued results are sorted lexicographically and
// de-duplicated unless stated otherwise.
using BitSeq = std::string;

bool is_bit_string(const BitSeq& x);

// Throws std::invalid_argument when x contains a character other than 0/1.
void require_bits(const BitSeq& x);

// Sum of i * x_i over 1-based positions i.
long long moment(const BitSeq& x);

// Number of index pairs i < j with x_i = 1 and x_j = 0.
long long inversions(const BitSeq& x);

// Number of 1 symbols.
int weight(const BitSeq& x);

// (#zeros) - (#ones) = |x| - 2 wt(x). Additive over concatenation.
int balance(const BitSeq& x);

// Insert bit b into gap i (0 = before the first symbol, n = after the last).
// Throws std::out_of_range when i > |x| and std::invalid_argument on a bad bit.
BitSeq insert_bit(const BitSeq& x, std::size_t i, char b);

// Remove the symbol at 1-based position i. Throws std::out_of_range when
// i = 0 or i > |x| (deleting from the empty word is always out of range).
BitSeq delete_bit(const BitSeq& x, std::size_t i);

// All results of one insertion / one deletion. |insertion_sphere(x)| is
// always |x| + 2; |deletion_sphere(x)| is the number of runs in x.
std::vector<BitSeq> insertion_sphere(const BitSeq& x);
std::vector<BitSeq> deletion_sphere(const BitSeq& x);

// Debug variant keeping one entry per (gap, bit) operation, sorted, with
// duplicates preserved.
std::vector<BitSeq> insertion_sphere_multiset(const BitSeq& x);

// Selects the operator family that drives a single insertion step.
enum class SphereFamily { Standard, Path, Bai };

// Breadth-first closure of t single-step insertions under the chosen family.
// t = 0 yields {x}.
std::vector<BitSeq> iterated_sphere(const BitSeq& x, int t, SphereFamily family);

// Enumeration order for the single-bit insertions into a length-m sequence:
// psi(m, j) is the unique (i, b) with m + b + (-1)^(b+1) * i = j, so b = 0
// gives i = m - j for j <= m and b = 1 gives i = j - m - 1 for j >= m + 1.
// Walking j = 0 .. 2m+1 lists the insertion results of any x of length m in
// non-decreasing moment order. Throws std::out_of_range for j > 2m+1.
struct GapBit {
    std::size_t gap;
    char bit;
    bool operator==(const GapBit&) const = default;
};
GapBit psi(std::size_t m, std::size_t j);

// All length-n bit strings / all weight-h strings of length v+h, sorted.
std::vector<BitSeq> all_bit_strings(int n);
std::vector<BitSeq> enumerate_paths(int v, int h);

}  // namespace idweyl
