#include "idweyl/bitseq.hpp"
#include "idweyl/weyla.hpp"

#include "doctest.h"

#include <algorithm>
#include <set>
#include <stdexcept>

using namespace idweyl;

TEST_CASE("statistics on small words") {
    CHECK(moment("") == 0);
    CHECK(moment("01001") == 7);
    CHECK(moment("111") == 6);
    CHECK(moment("0001") == 4);
    CHECK(inversions("011001110") == 9);
    CHECK(inversions("10") == 1);
    CHECK(inversions("01") == 0);
    CHECK(weight("01101") == 3);
    CHECK(balance("01101") == -1);
    CHECK(balance("0011") == 0);
    CHECK(is_bit_string("0101"));
    CHECK(is_bit_string(""));
    CHECK_FALSE(is_bit_string("012"));
    CHECK_THROWS_AS(require_bits("01x"), std::invalid_argument);
}

TEST_CASE("insert and delete are inverse at the touched position") {
    for (int n = 0; n <= 6; ++n)
        for (const BitSeq& x : all_bit_strings(n))
            for (std::size_t i = 0; i <= x.size(); ++i)
                for (char b : {'0', '1'}) {
                    BitSeq z = insert_bit(x, i, b);
                    CHECK(z.size() == x.size() + 1);
                    CHECK(delete_bit(z, i + 1) == x);
                }
    CHECK_THROWS_AS(insert_bit("01", 3, '0'), std::out_of_range);
    CHECK_THROWS_AS(insert_bit("01", 0, 'x'), std::invalid_argument);
    CHECK_THROWS_AS(delete_bit("", 1), std::out_of_range);
    CHECK_THROWS_AS(delete_bit("01", 0), std::out_of_range);
    CHECK_THROWS_AS(delete_bit("01", 3), std::out_of_range);
}

TEST_CASE("one-step spheres") {
    CHECK(insertion_sphere("000") ==
          std::vector<BitSeq>{"0000", "0001", "0010", "0100", "1000"});
    CHECK(deletion_sphere("0101") == std::vector<BitSeq>{"001", "010", "011", "101"});
    CHECK(deletion_sphere("0") == std::vector<BitSeq>{""});
    CHECK(insertion_sphere("") == std::vector<BitSeq>{"0", "1"});

    for (int n = 0; n <= 7; ++n)
        for (const BitSeq& x : all_bit_strings(n)) {
            auto ins = insertion_sphere(x);
            CHECK(ins.size() == x.size() + 2);
            CHECK(std::is_sorted(ins.begin(), ins.end()));
            if (n > 0) {
                int runs = 1;
                for (std::size_t i = 1; i < x.size(); ++i)
                    if (x[i] != x[i - 1]) ++runs;
                CHECK(static_cast<int>(deletion_sphere(x).size()) == runs);
            }
        }
}

TEST_CASE("insertion and deletion spheres are dual relations") {
    for (int n = 0; n <= 8; ++n)
        for (const BitSeq& y : all_bit_strings(n)) {
            for (const BitSeq& z : insertion_sphere(y)) {
                auto ds = deletion_sphere(z);
                CHECK(std::binary_search(ds.begin(), ds.end(), y));
            }
            if (n > 0)
                for (const BitSeq& w : deletion_sphere(y)) {
                    auto is = insertion_sphere(w);
                    CHECK(std::binary_search(is.begin(), is.end(), y));
                }
        }
}

TEST_CASE("psi enumerates insertions in non-decreasing moment order") {
    CHECK(psi(3, 3) == GapBit{0, '0'});
    CHECK(psi(3, 0) == GapBit{3, '0'});
    CHECK(psi(3, 7) == GapBit{3, '1'});
    CHECK(psi(0, 0) == GapBit{0, '0'});
    CHECK(psi(0, 1) == GapBit{0, '1'});
    CHECK_THROWS_AS(psi(3, 8), std::out_of_range);

    for (std::size_t m = 0; m <= 6; ++m) {
        // Each (gap, bit) pair appears exactly once across j = 0..2m+1.
        std::set<std::pair<std::size_t, char>> seen;
        for (std::size_t j = 0; j <= 2 * m + 1; ++j) {
            GapBit gb = psi(m, j);
            CHECK(gb.gap <= m);
            CHECK(seen.insert({gb.gap, gb.bit}).second);
        }
        CHECK(seen.size() == 2 * m + 2);
    }

    for (int n = 0; n <= 6; ++n)
        for (const BitSeq& x : all_bit_strings(n)) {
            long long prev = -1;
            for (std::size_t j = 0; j <= 2 * x.size() + 1; ++j) {
                GapBit gb = psi(x.size(), j);
                long long m = moment(insert_bit(x, gb.gap, gb.bit));
                CHECK(m >= prev);
                prev = m;
            }
        }
}

TEST_CASE("insertion sphere multiset keeps one entry per operation") {
    auto ms = insertion_sphere_multiset("00");
    CHECK(ms.size() == 6);
    CHECK(std::is_sorted(ms.begin(), ms.end()));
    CHECK(std::count(ms.begin(), ms.end(), "000") == 3);
}

TEST_CASE("iterated spheres agree with the one-step families") {
    for (int n = 0; n <= 5; ++n)
        for (const BitSeq& x : all_bit_strings(n)) {
            CHECK(iterated_sphere(x, 0, SphereFamily::Standard) == std::vector<BitSeq>{x});
            CHECK(iterated_sphere(x, 1, SphereFamily::Standard) == insertion_sphere(x));
            CHECK(iterated_sphere(x, 1, SphereFamily::Path) == path_insertion_sphere(x));
            CHECK(iterated_sphere(x, 1, SphereFamily::Bai) == bai_insertion_sphere(x));
        }
    CHECK_THROWS_AS(iterated_sphere("01", -1, SphereFamily::Standard),
                    std::invalid_argument);
}

TEST_CASE("fixed depth-two path spheres") {
    auto s00 = iterated_sphere("00", 2, SphereFamily::Path);
    CHECK(s00.size() == 15);
    CHECK(s00 == enumerate_paths(4, 2));
    auto s01 = iterated_sphere("01", 2, SphereFamily::Path);
    CHECK(s01.size() == 16);
    CHECK(std::binary_search(s01.begin(), s01.end(), BitSeq("010101")));
    CHECK_FALSE(std::binary_search(s01.begin(), s01.end(), BitSeq("110000")));
}

TEST_CASE("enumerators") {
    CHECK(all_bit_strings(0) == std::vector<BitSeq>{""});
    CHECK(all_bit_strings(2) == std::vector<BitSeq>{"00", "01", "10", "11"});
    CHECK(all_bit_strings(3).size() == 8);
    CHECK_THROWS_AS(all_bit_strings(-1), std::invalid_argument);
    CHECK_THROWS_AS(all_bit_strings(31), std::invalid_argument);

    CHECK(enumerate_paths(2, 1) == std::vector<BitSeq>{"001", "010", "100"});
    CHECK(enumerate_paths(0, 0) == std::vector<BitSeq>{""});
    auto p22 = enumerate_paths(2, 2);
    CHECK(p22.size() == 6);
    CHECK(p22.front() == "0011");
    CHECK(p22.back() == "1100");
    CHECK(std::is_sorted(p22.begin(), p22.end()));
}
