// Lattice-path index sets, the two path insertion families, the interleaving
// shuffle, and balanced adjacent pair operations.

#include "idweyl/weyla.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <stdexcept>

namespace idweyl {

bool is_path(const BitSeq& x, int v, int h) {
    return is_bit_string(x) && static_cast<int>(x.size()) == v + h && weight(x) == h;
}

static void check_subset_a(const std::vector<int>& J, int v, int h) {
    if (static_cast<int>(J.size()) != v)
        throw std::invalid_argument("index subset must have exactly v elements");
    std::set<int> seen;
    for (int j : J) {
        if (j < -v || j > h - 1)
            throw std::invalid_argument("index subset member outside -v..h-1");
        if (!seen.insert(j).second) throw std::invalid_argument("duplicate subset member");
    }
}

PathForms g_bijections(const std::vector<int>& J, int v, int h) {
    check_subset_a(J, v, h);
    std::vector<int> sorted = J;
    std::sort(sorted.begin(), sorted.end());

    PathForms f;
    f.bits.assign(static_cast<std::size_t>(v + h), '1');
    f.weight_vec.assign(static_cast<std::size_t>(v + h), -1);
    for (int j : sorted) {
        f.bits[static_cast<std::size_t>(j + v)] = '0';
        f.weight_vec[static_cast<std::size_t>(j + v)] = 1;
    }
    f.minuscule = MinusculeA{v, h, sorted};
    f.coset = sorted;
    return f;
}

std::vector<int> path_to_subset(const BitSeq& x, int v) {
    require_bits(x);
    std::vector<int> J;
    for (std::size_t i = 0; i < x.size(); ++i)
        if (x[i] == '0') J.push_back(static_cast<int>(i) - v);
    return J;
}

std::vector<int> minuscule_word_a(const MinusculeA& w) {
    check_subset_a(w.J, w.v, w.h);
    std::vector<int> sorted = w.J;
    std::sort(sorted.begin(), sorted.end());
    // k-th smallest member contributes the block s_j s_{j-1} ... s_{k+1}
    // (empty when j = k); blocks concatenate left to right as k rises from
    // -v to -1, and the rightmost block is applied first.
    std::vector<int> word;
    for (std::size_t idx = 0; idx < sorted.size(); ++idx) {
        int k = static_cast<int>(idx) - w.v;
        for (int i = sorted[idx]; i >= k + 1; --i) word.push_back(i);
    }
    return word;
}

long long length_a(const MinusculeA& w) {
    check_subset_a(w.J, w.v, w.h);
    std::vector<int> sorted = w.J;
    std::sort(sorted.begin(), sorted.end());
    long long total = 0;
    for (std::size_t idx = 0; idx < sorted.size(); ++idx)
        total += sorted[idx] - (static_cast<int>(idx) - w.v);
    return total;
}

BitSeq kappa(const BitSeq& y) {
    require_bits(y);
    return "0" + y + "1";
}

BitSeq path_insert(const BitSeq& y, int j) {
    require_bits(y);
    int n = static_cast<int>(y.size());
    if (j < 0 || j > 2 * n + 1) throw std::out_of_range("path insertion index outside 0..2n+1");
    // First half walks the appended 1 leftward through the word; second half
    // walks the prepended-0-turned-1 ... see the defining palindrome: after
    // the midpoint the leading symbol is a 1 and a 0 walks rightward.
    if (j <= n) return "0" + insert_bit(y, static_cast<std::size_t>(n - j), '1');
    return "1" + insert_bit(y, static_cast<std::size_t>(j - n - 1), '0');
}

std::vector<int> path_insert_word(int v, int h) {
    if (v < 0 || h < 0) throw std::invalid_argument("negative path shape");
    int n = v + h;
    // s_h s_{h-1} ... s_{-v} ... s_{h-1} s_h acting on coordinates -(v+1)..h.
    std::vector<int> word;
    for (int k = 1; k <= 2 * n + 1; ++k)
        word.push_back(k <= n + 1 ? h + 1 - k : k - 2 * v - h - 1);
    return word;
}

std::vector<BitSeq> path_insertion_sphere(const BitSeq& y) {
    int n = static_cast<int>(y.size());
    std::set<BitSeq> out;
    for (int j = 0; j <= 2 * n + 1; ++j) out.insert(path_insert(y, j));
    return {out.begin(), out.end()};
}

std::vector<BitSeq> path_deletion_sphere(const BitSeq& y) {
    require_bits(y);
    std::set<BitSeq> out;
    for (std::size_t j = 1; j < y.size(); ++j)
        if (y[j] != y[0]) {
            BitSeq z = y.substr(1);
            z.erase(j - 1, 1);
            out.insert(std::move(z));
        }
    return {out.begin(), out.end()};
}

BitSeq h_insert(const BitSeq& y, int j) {
    require_bits(y);
    int n = static_cast<int>(y.size());
    if (j < 0 || j > 2 * n + 1) throw std::out_of_range("insertion index outside 0..2n+1");
    // Token array 0 y 1 over positions 1..n+2. Step k swaps one adjacent
    // pair: odd steps advance the leading 0 rightward, even steps advance
    // the trailing 1 leftward; past the midpoint (min with 2n+2-k) the two
    // inserted symbols have crossed and retrace the mirrored swaps.
    BitSeq arr = kappa(y);
    for (int k = 1; k <= j; ++k) {
        int m = std::min(k, 2 * n + 2 - k);
        std::size_t p = m % 2 == 1 ? static_cast<std::size_t>((m + 1) / 2)
                                   : static_cast<std::size_t>(n + 2 - m / 2);
        std::swap(arr[p - 1], arr[p]);
    }
    return arr;
}

std::vector<int> h_insert_word(int v, int h) {
    if (v < 0 || h < 0) throw std::invalid_argument("negative path shape");
    int n = v + h;
    // Palindrome s_h s_{-v} s_{h-1} s_{-(v-1)} ... on coordinates -(v+1)..h.
    std::vector<int> word;
    for (int k = 1; k <= 2 * n + 1; ++k) {
        int m = std::min(k, 2 * n + 2 - k);
        word.push_back(m % 2 == 1 ? -v + (m - 1) / 2 : h - m / 2 + 1);
    }
    return word;
}

std::vector<BitSeq> h_insertion_sphere(const BitSeq& y) {
    int n = static_cast<int>(y.size());
    std::set<BitSeq> out;
    for (int j = 0; j <= 2 * n + 1; ++j) out.insert(h_insert(y, j));
    return {out.begin(), out.end()};
}

BitSeq azby(const BitSeq& x) {
    require_bits(x);
    BitSeq out;
    out.reserve(x.size());
    std::size_t lo = 0, hi = x.size();
    while (lo < hi) {
        out.push_back(x[lo++]);
        if (lo < hi) out.push_back(x[--hi]);
    }
    return out;
}

BitSeq azby_inverse(const BitSeq& x) {
    require_bits(x);
    BitSeq out(x.size(), '0');
    std::size_t lo = 0, hi = x.size();
    std::size_t k = 0;
    while (lo < hi) {
        out[lo++] = x[k++];
        if (lo < hi) out[--hi] = x[k++];
    }
    return out;
}

BitSeq bai_insert(const BitSeq& x, std::size_t gap, const std::string& pattern) {
    if (pattern != "01" && pattern != "10")
        throw std::invalid_argument("pattern must be \"01\" or \"10\"");
    if (gap > x.size()) throw std::out_of_range("insertion gap past end of sequence");
    BitSeq y = x;
    y.insert(gap, pattern);
    return y;
}

std::vector<BitSeq> bai_insertion_sphere(const BitSeq& x) {
    std::set<BitSeq> out;
    for (std::size_t i = 0; i <= x.size(); ++i) {
        out.insert(bai_insert(x, i, "01"));
        out.insert(bai_insert(x, i, "10"));
    }
    return {out.begin(), out.end()};
}

std::vector<BitSeq> bad_deletion_sphere(const BitSeq& x) {
    require_bits(x);
    std::set<BitSeq> out;
    for (std::size_t i = 0; i + 1 < x.size(); ++i)
        if (x[i] != x[i + 1]) {
            BitSeq z = x;
            z.erase(i, 2);
            out.insert(std::move(z));
        }
    return {out.begin(), out.end()};
}

}  // namespace idweyl
