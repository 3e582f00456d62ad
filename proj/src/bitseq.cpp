// Bit-sequence primitives. Iterated spheres dispatch on the operator family,
// so this translation unit also pulls in the path/pair single-step spheres.

#include "idweyl/bitseq.hpp"
#include "idweyl/weyla.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace idweyl {

bool is_bit_string(const BitSeq& x) {
    return std::all_of(x.begin(), x.end(), [](char c) { return c == '0' || c == '1'; });
}

void require_bits(const BitSeq& x) {
    if (!is_bit_string(x))
        throw std::invalid_argument("not a bit string: \"" + x + "\"");
}

long long moment(const BitSeq& x) {
    long long s = 0;
    for (std::size_t i = 0; i < x.size(); ++i)
        if (x[i] == '1') s += static_cast<long long>(i) + 1;
    return s;
}

long long inversions(const BitSeq& x) {
    long long ones = 0, total = 0;
    for (char c : x) {
        if (c == '1')
            ++ones;
        else
            total += ones;
    }
    return total;
}

int weight(const BitSeq& x) {
    return static_cast<int>(std::count(x.begin(), x.end(), '1'));
}

int balance(const BitSeq& x) {
    return static_cast<int>(x.size()) - 2 * weight(x);
}

BitSeq insert_bit(const BitSeq& x, std::size_t i, char b) {
    if (b != '0' && b != '1') throw std::invalid_argument("bit must be '0' or '1'");
    if (i > x.size()) throw std::out_of_range("insertion gap past end of sequence");
    BitSeq y = x;
    y.insert(y.begin() + static_cast<std::ptrdiff_t>(i), b);
    return y;
}

BitSeq delete_bit(const BitSeq& x, std::size_t i) {
    if (i == 0 || i > x.size()) throw std::out_of_range("deletion position outside 1..n");
    BitSeq y = x;
    y.erase(y.begin() + static_cast<std::ptrdiff_t>(i) - 1);
    return y;
}

std::vector<BitSeq> insertion_sphere(const BitSeq& x) {
    std::set<BitSeq> out;
    for (std::size_t i = 0; i <= x.size(); ++i) {
        out.insert(insert_bit(x, i, '0'));
        out.insert(insert_bit(x, i, '1'));
    }
    return {out.begin(), out.end()};
}

std::vector<BitSeq> deletion_sphere(const BitSeq& x) {
    if (x.empty()) throw std::invalid_argument("deletion sphere of the empty word");
    std::set<BitSeq> out;
    for (std::size_t i = 1; i <= x.size(); ++i) out.insert(delete_bit(x, i));
    return {out.begin(), out.end()};
}

std::vector<BitSeq> insertion_sphere_multiset(const BitSeq& x) {
    std::vector<BitSeq> out;
    for (std::size_t i = 0; i <= x.size(); ++i) {
        out.push_back(insert_bit(x, i, '0'));
        out.push_back(insert_bit(x, i, '1'));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<BitSeq> iterated_sphere(const BitSeq& x, int t, SphereFamily family) {
    if (t < 0) throw std::invalid_argument("negative sphere depth");
    require_bits(x);
    std::vector<BitSeq> (*step)(const BitSeq&) = nullptr;
    switch (family) {
        case SphereFamily::Standard: step = insertion_sphere; break;
        case SphereFamily::Path: step = path_insertion_sphere; break;
        case SphereFamily::Bai: step = bai_insertion_sphere; break;
    }
    std::set<BitSeq> layer{x};
    for (int k = 0; k < t; ++k) {
        std::set<BitSeq> next;
        for (const BitSeq& y : layer)
            for (BitSeq& z : step(y)) next.insert(std::move(z));
        layer = std::move(next);
    }
    return {layer.begin(), layer.end()};
}

GapBit psi(std::size_t m, std::size_t j) {
    if (j > 2 * m + 1) throw std::out_of_range("psi index past 2m+1");
    if (j <= m) return {m - j, '0'};
    return {j - m - 1, '1'};
}

std::vector<BitSeq> all_bit_strings(int n) {
    if (n < 0 || n > 30) throw std::invalid_argument("length outside 0..30");
    std::vector<BitSeq> out;
    out.reserve(1ull << n);
    for (unsigned long long v = 0; v < (1ull << n); ++v) {
        BitSeq x(static_cast<std::size_t>(n), '0');
        for (int i = 0; i < n; ++i)
            if (v >> (n - 1 - i) & 1) x[static_cast<std::size_t>(i)] = '1';
        out.push_back(std::move(x));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<BitSeq> enumerate_paths(int v, int h) {
    if (v < 0 || h < 0) throw std::invalid_argument("negative path shape");
    BitSeq x(static_cast<std::size_t>(v), '0');
    x.append(static_cast<std::size_t>(h), '1');
    std::vector<BitSeq> out;
    do {
        out.push_back(x);
    } while (std::next_permutation(x.begin(), x.end()));
    return out;  // next_permutation emits lexicographic order
}

}  // namespace idweyl
