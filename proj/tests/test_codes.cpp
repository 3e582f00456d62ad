#include "idweyl/codes.hpp"

#include "idweyl/bitseq.hpp"
#include "idweyl/weyla.hpp"

#include "doctest.h"

#include <stdexcept>
#include <vector>

using namespace idweyl;

TEST_CASE("code specs reduce their residues") {
    CHECK(CodeSpec::levenshtein(3, 7).a == 3);
    CHECK(CodeSpec::levenshtein(3, -1).a == 3);
    CHECK(CodeSpec::levenshtein(4, 0).modulus() == 5);
    CHECK(CodeSpec::levenshtein(4, 0).word_length() == 4);
    CHECK(CodeSpec::path(2, 3, 7).a == 2);
    CHECK(CodeSpec::path(2, 3, 0).modulus() == 5);
    CHECK(CodeSpec::path(2, 3, 0).word_length() == 5);
    CHECK(CodeSpec::bad(2, 2, 1).modulus() == 4);

    CHECK_THROWS_AS(CodeSpec::levenshtein(0, 0), std::invalid_argument);
    CHECK_THROWS_AS(CodeSpec::path(0, 3, 0), std::invalid_argument);
    CHECK_THROWS_AS(CodeSpec::bad(3, 0, 0), std::invalid_argument);
}

TEST_CASE("descriptions") {
    CHECK(CodeSpec::levenshtein(4, 0).describe() == "moment residue code (n=4, a=0 mod 5)");
    CHECK(CodeSpec::path(3, 4, 1).describe().find("path inversion code") == 0);
    CHECK(CodeSpec::bad(3, 3, 1).describe().find("shuffled") == 0);
}

TEST_CASE("membership") {
    CodeSpec vt = CodeSpec::levenshtein(4, 0);
    CHECK(membership(vt, "0000"));
    CHECK(membership(vt, "0110"));
    CHECK(membership(vt, "1001"));
    CHECK(membership(vt, "1111"));
    CHECK_FALSE(membership(vt, "0001"));
    CHECK_THROWS_AS(membership(vt, "000"), std::invalid_argument);

    CodeSpec path = CodeSpec::path(3, 4, 1);
    CHECK(membership(path, "0010111"));
    CHECK_FALSE(membership(path, "0011011"));
    CHECK_THROWS_AS(membership(path, "0000111"), std::invalid_argument);
    CHECK_THROWS_AS(membership(path, "001011"), std::invalid_argument);

    CodeSpec bad = CodeSpec::bad(3, 3, 1);
    CHECK(membership(bad, "010110"));
    CHECK_FALSE(membership(bad, "000111"));
}

TEST_CASE("enumeration") {
    CHECK(enumerate_code(CodeSpec::levenshtein(1, 0)) == std::vector<BitSeq>{"0"});
    CHECK(enumerate_code(CodeSpec::levenshtein(3, 0)) ==
          std::vector<BitSeq>{"000", "101"});
    CHECK(enumerate_code(CodeSpec::path(3, 4, 1)) ==
          std::vector<BitSeq>{"0010111", "0111100", "1011010", "1100110", "1101001"});
    CHECK(enumerate_code(CodeSpec::bad(3, 3, 1)) ==
          std::vector<BitSeq>{"010110", "100011", "101100"});

    CHECK_THROWS_AS(enumerate_code(CodeSpec::levenshtein(25, 0)), GuardError);
    CHECK_THROWS_AS(enumerate_code(CodeSpec::path(12, 12, 0)), GuardError);
    CHECK(enumerate_code(CodeSpec::levenshtein(5, 0), 5).size() == 6);
}

TEST_CASE("deletion decoding") {
    CHECK(vt_decode_deletion("00", 3, 0) == "000");
    CHECK(vt_decode_deletion("10", 3, 0) == "101");
    CHECK(vt_decode_insertion("0000", 3, 0) == "000");
    CHECK(vt_decode_insertion("1010", 3, 0) == "101");

    CHECK(path_decode("11100", 2, 3, 1) == "0111100");
    CHECK(path_decode("01011", 2, 3, 1) == "0010111");
    CHECK(path_decode("10101", 2, 3, 1) == "1101001");

    CHECK(bad_decode("0101", 2, 2, 1) == "010110");
    CHECK(bad_decode("1010", 2, 2, 1) == "101100");
    CHECK(bad_decode("1001", 2, 2, 1) == "100011");
}

TEST_CASE("decoder failures carry their kind") {
    try {
        vt_decode_deletion("0", 3, 0);
        FAIL("expected DecodeError");
    } catch (const DecodeError& e) {
        CHECK(e.kind == DecodeError::Kind::NoCandidate);
        CHECK(std::string(e.what()).find("shorter") != std::string::npos);
    }
    CHECK_THROWS_AS(vt_decode_insertion("00000", 3, 0), DecodeError);
    CHECK_THROWS_AS(path_decode("11100", 3, 2, 1), DecodeError);
    CHECK_THROWS_AS(path_decode("111", 2, 3, 1), DecodeError);
    CHECK_THROWS_AS(bad_decode("0001", 2, 2, 1), DecodeError);
}

TEST_CASE("perfectness verifier issues certificates") {
    auto ambient = all_bit_strings(3);
    auto sphere = [](const BitSeq& c) { return deletion_sphere(c); };

    std::vector<BitSeq> code = {"0000", "0110", "1001", "1111"};
    PerfectnessReport rep = verify_perfect(code, sphere, ambient);
    CHECK(rep.ok);
    CHECK(rep.failure == PerfectnessReport::Failure::None);
    CHECK(rep.describe() == "spheres partition the ambient set");

    std::vector<BitSeq> holey = {"0000", "0110", "1111"};
    rep = verify_perfect(holey, sphere, ambient);
    CHECK_FALSE(rep.ok);
    CHECK(rep.failure == PerfectnessReport::Failure::Uncovered);
    CHECK(rep.witness == "001");
    CHECK(rep.describe().find("uncovered") != std::string::npos);

    std::vector<BitSeq> crowded = {"0000", "0001", "0110", "1001", "1111"};
    rep = verify_perfect(crowded, sphere, ambient);
    CHECK_FALSE(rep.ok);
    CHECK(rep.failure == PerfectnessReport::Failure::DoublyCovered);
    CHECK(rep.witness == "000");
    CHECK(rep.codeword_a == "0000");
    CHECK(rep.codeword_b == "0001");
    CHECK(rep.describe().find("doubly covered") != std::string::npos);
}

TEST_CASE("decoders invert single channel events") {
    for (int n = 2; n <= 6; ++n)
        for (int a = 0; a <= n; ++a)
            for (const BitSeq& c : enumerate_code(CodeSpec::levenshtein(n, a))) {
                for (const BitSeq& z : deletion_sphere(c))
                    CHECK(vt_decode_deletion(z, n, a) == c);
                for (const BitSeq& z : insertion_sphere(c))
                    CHECK(vt_decode_insertion(z, n, a) == c);
            }

    for (int a = 0; a < 5; ++a) {
        for (const BitSeq& c : enumerate_code(CodeSpec::path(3, 2, a)))
            for (const BitSeq& z : path_deletion_sphere(c))
                CHECK(path_decode(z, 2, 1, a) == c);
        for (const BitSeq& c : enumerate_code(CodeSpec::bad(2, 3, a)))
            for (const BitSeq& z : bad_deletion_sphere(c))
                CHECK(bad_decode(z, 1, 2, a) == c);
    }
}
