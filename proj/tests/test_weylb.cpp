#include "idweyl/weylb.hpp"

#include "doctest.h"

#include <algorithm>
#include <map>
#include <queue>
#include <random>
#include <stdexcept>

using namespace idweyl;

namespace {

// Breadth-first search over the group from the identity, multiplying by
// generators on the left; returns word-metric distances.
std::map<std::vector<int>, int> cayley_distances(int n) {
    std::map<std::vector<int>, int> dist;
    std::queue<SignedPerm> frontier;
    SignedPerm e = identity_perm(n);
    dist[e.window] = 0;
    frontier.push(e);
    while (!frontier.empty()) {
        SignedPerm w = frontier.front();
        frontier.pop();
        int d = dist[w.window];
        for (int i = 1; i <= n; ++i) {
            SignedPerm nxt = compose(generator_b(n, i), w);
            if (dist.emplace(nxt.window, d + 1).second) frontier.push(nxt);
        }
    }
    return dist;
}

}  // namespace

TEST_CASE("generators and windows") {
    CHECK(identity_perm(3).window == std::vector<int>{1, 2, 3});
    CHECK(identity_perm(0).window.empty());
    CHECK(generator_b(3, 1).window == std::vector<int>{-1, 2, 3});
    CHECK(generator_b(3, 2).window == std::vector<int>{2, 1, 3});
    CHECK(generator_b(3, 3).window == std::vector<int>{1, 3, 2});
    CHECK_THROWS_AS(generator_b(3, 0), std::invalid_argument);
    CHECK_THROWS_AS(generator_b(3, 4), std::invalid_argument);
    CHECK(identity_perm(4).is_identity());
    CHECK_FALSE(generator_b(4, 2).is_identity());
}

TEST_CASE("compose applies its right factor first") {
    std::mt19937 rng(11u);
    std::uniform_int_distribution<int> letter(1, 4);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<int> wa, wb;
        for (int k = 0; k < 5; ++k) {
            wa.push_back(letter(rng));
            wb.push_back(letter(rng));
        }
        SignedPerm a = perm_from_word(4, wa);
        SignedPerm b = perm_from_word(4, wb);
        Vec v = {3, -1, 4, 2};
        CHECK(idweyl::apply(compose(a, b), v) == idweyl::apply(a, idweyl::apply(b, v)));
        CHECK(compose(a, inverse(a)).is_identity());
        CHECK(compose(inverse(a), a).is_identity());
    }
    CHECK_THROWS_AS(idweyl::apply(identity_perm(3), Vec{1, 2}), std::invalid_argument);
}

TEST_CASE("defining relations hold") {
    for (int n = 2; n <= 5; ++n) {
        for (int i = 1; i <= n; ++i)
            CHECK(perm_from_word(n, {i, i}).is_identity());
        CHECK(perm_from_word(n, {1, 2, 1, 2, 1, 2, 1, 2}).is_identity());
        CHECK_FALSE(perm_from_word(n, {1, 2, 1, 2, 1, 2}).is_identity());
        for (int i = 2; i + 1 <= n; ++i)
            CHECK(perm_from_word(n, {i, i + 1, i, i + 1, i, i + 1}).is_identity());
        for (int i = 1; i <= n; ++i)
            for (int j = i + 2; j <= n; ++j)
                CHECK(perm_from_word(n, {i, j, i, j}).is_identity());
    }
}

TEST_CASE("length equals the word metric") {
    for (int n = 1; n <= 3; ++n) {
        auto dist = cayley_distances(n);
        CHECK(dist.size() == (n == 1 ? 2u : n == 2 ? 8u : 48u));
        for (const auto& [window, d] : dist) {
            SignedPerm w{window};
            CHECK(length(w) == d);
            CHECK(length(inverse(w)) == d);
        }
    }
    CHECK(length(identity_perm(5)) == 0);
    for (int i = 1; i <= 5; ++i) CHECK(length(generator_b(5, i)) == 1);
    // The longest element negates every coordinate and flips all n^2
    // positive roots.
    CHECK(length(SignedPerm{{-1, -2, -3, -4}}) == 16);
}

TEST_CASE("reduced words multiply back and have minimal length") {
    auto dist = cayley_distances(3);
    for (const auto& [window, d] : dist) {
        SignedPerm w{window};
        auto word = reduced_word(w);
        CHECK(static_cast<int>(word.size()) == d);
        CHECK(perm_from_word(3, word) == w);
    }
}

TEST_CASE("index subsets give reduced block words") {
    MinusculeB w = minuscule_from_subset(4, {1, 3});
    CHECK(minuscule_word(w) == std::vector<int>{1, 3, 2, 1});
    CHECK(length(minuscule_perm(w)) == 4);

    CHECK(minuscule_word(minuscule_from_subset(3, {})).empty());
    CHECK(minuscule_perm(minuscule_from_subset(3, {})).is_identity());
    CHECK_THROWS_AS(minuscule_from_subset(3, {0}), std::invalid_argument);
    CHECK_THROWS_AS(minuscule_from_subset(3, {4}), std::invalid_argument);
    CHECK_THROWS_AS(minuscule_from_subset(3, {2, 2}), std::invalid_argument);

    for (int n = 0; n <= 5; ++n)
        for (unsigned mask = 0; mask < (1u << n); ++mask) {
            std::vector<int> J;
            int sum = 0;
            for (int i = 1; i <= n; ++i)
                if (mask >> (i - 1) & 1) {
                    J.push_back(i);
                    sum += i;
                }
            MinusculeB m = minuscule_from_subset(n, J);
            auto word = minuscule_word(m);
            CHECK(static_cast<int>(word.size()) == sum);
            CHECK(length(minuscule_perm(m)) == sum);
            CHECK(perm_from_word(n, word) == minuscule_perm(m));
        }
}

TEST_CASE("the four subset descriptions translate into each other") {
    for (int n = 0; n <= 5; ++n)
        for (unsigned mask = 0; mask < (1u << n); ++mask) {
            std::vector<int> J;
            for (int i = 1; i <= n; ++i)
                if (mask >> (i - 1) & 1) J.push_back(i);

            BitSeq x = bij_f01(n, J);
            Vec lambda = bij_f12(n, J);
            MinusculeB w = bij_fM(n, J);
            CosetB c = bij_fcoset(n, J);

            CHECK(bij_f01_inv(x) == J);
            CHECK(bij_f12_inv(lambda) == J);
            CHECK(bij_fM_inv(w) == J);
            CHECK(c.J == J);

            // Orbit vector: the element really sends the base weight to the
            // vector with -1/2 exactly on J.
            CHECK(idweyl::apply(minuscule_perm(w), base_weight(n)) == lambda);
            // Coset label reads the same subset off the orbit vector.
            CHECK(coset_of(minuscule_perm(w)).J == J);
            // Minimal representative of that coset is the element itself.
            CHECK(min_coset_rep(c) == w);

            // Translations between the value types.
            for (std::size_t i = 0; i < x.size(); ++i) {
                CHECK(lambda[i] == (x[i] == '1' ? -1 : 1));
                CHECK(base_weight(n)[i] - lambda[i] == 2 * (x[i] - '0'));
            }
        }
}

TEST_CASE("coset labels are constant on stabilizer cosets") {
    std::mt19937 rng(23u);
    std::uniform_int_distribution<int> letter(2, 4);
    for (unsigned mask = 0; mask < 16; ++mask) {
        std::vector<int> J;
        for (int i = 1; i <= 4; ++i)
            if (mask >> (i - 1) & 1) J.push_back(i);
        SignedPerm w = minuscule_perm(minuscule_from_subset(4, J));
        for (int trial = 0; trial < 10; ++trial) {
            std::vector<int> stab_word;
            for (int k = 0; k < 6; ++k) stab_word.push_back(letter(rng));
            SignedPerm u = perm_from_word(4, stab_word);
            CHECK(idweyl::apply(u, base_weight(4)) == base_weight(4));
            CHECK(coset_of(compose(w, u)).J == J);
        }
    }
}

TEST_CASE("minimal coset representatives minimize length") {
    // Group the whole rank-3 group by coset label and compare each class
    // minimum against the chosen representative.
    auto dist = cayley_distances(3);
    std::map<std::vector<int>, int> min_len;
    for (const auto& [window, d] : dist) {
        auto label = coset_of(SignedPerm{window}).J;
        auto it = min_len.find(label);
        if (it == min_len.end() || d < it->second) min_len[label] = d;
    }
    CHECK(min_len.size() == 8);
    for (const auto& [label, d] : min_len) {
        MinusculeB rep = min_coset_rep(CosetB{3, label});
        CHECK(length(minuscule_perm(rep)) == d);
    }
}

TEST_CASE("insertion operators are palindrome subwords") {
    CHECK(insertion_op(3, 0).is_identity());
    CHECK(insertion_op(2, 3) == perm_from_word(3, {1, 2, 3}));
    CHECK(insertion_op(2, 5) == perm_from_word(3, {3, 2, 1, 2, 3}));
    CHECK(insertion_op(3, 7).window == std::vector<int>{1, 2, 3, -4});
    CHECK(insertion_op(0, 1).window == std::vector<int>{-1});
    CHECK_THROWS_AS(insertion_op(2, 6), std::out_of_range);

    // j = n+1 (the middle of the order) prepends -1/2 to the embedded orbit
    // vector.
    for (int n = 0; n <= 4; ++n)
        for (unsigned mask = 0; mask < (1u << n); ++mask) {
            std::vector<int> J;
            for (int i = 1; i <= n; ++i)
                if (mask >> (i - 1) & 1) J.push_back(i);
            Vec iota = bij_f12(n, J);
            iota.push_back(1);
            Vec expect;
            expect.push_back(-1);
            for (int e : bij_f12(n, J)) expect.push_back(e);
            CHECK(idweyl::apply(insertion_op(n, n + 1), iota) == expect);
        }
}

TEST_CASE("operator action on index subsets matches bit insertion") {
    for (int n = 0; n <= 4; ++n)
        for (unsigned mask = 0; mask < (1u << n); ++mask) {
            std::vector<int> J;
            BitSeq x;
            for (int i = 1; i <= n; ++i) {
                bool on = mask >> (i - 1) & 1;
                if (on) J.push_back(i);
                x.push_back(on ? '1' : '0');
            }
            MinusculeB w = bij_fM(n, J);
            for (char b : {'0', '1'})
                for (int i = 0; i <= n; ++i) {
                    int j = b == '0' ? n - i : n + 1 + i;
                    MinusculeB got = act_on_minuscule(insertion_op(n, j), w);
                    BitSeq z = insert_bit(x, static_cast<std::size_t>(i), b);
                    CHECK(got == bij_fM(n + 1, bij_f01_inv(z)));
                }
        }
    CHECK_THROWS_AS(
        act_on_minuscule(identity_perm(2), minuscule_from_subset(3, {1})),
        std::invalid_argument);
}

TEST_CASE("promote embeds and respects rank checks") {
    SignedPerm w = perm_from_word(2, {1, 2});
    SignedPerm p = promote(w, 4);
    CHECK(p.window.size() == 4);
    CHECK(p.window[2] == 3);
    CHECK(p.window[3] == 4);
    CHECK_THROWS_AS(promote(p, 2), std::invalid_argument);
}

TEST_CASE("root systems") {
    RootSystemB rs(3);
    CHECK(rs.positive_roots.size() == 9);
    CHECK(rs.simple_roots.size() == 3);
    CHECK(rs.is_positive(Vec{1, 0, 0}));
    CHECK(rs.is_positive(Vec{-1, 1, 0}));
    CHECK_FALSE(rs.is_positive(Vec{0, -1, 0}));
    CHECK(RootSystemB(0).positive_roots.empty());
    CHECK_THROWS_AS(RootSystemB(-1), std::invalid_argument);
}
