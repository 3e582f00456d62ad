// Signed permutations, type-B roots, length by root counting, index-set
// elements and their bijections, and the insertion operator words.

#include "idweyl/weylb.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <set>
#include <stdexcept>

namespace idweyl {

Vec base_weight(int n) {
    if (n < 0) throw std::invalid_argument("negative rank");
    return Vec(static_cast<std::size_t>(n), 1);
}

bool SignedPerm::is_identity() const {
    for (int i = 0; i < rank(); ++i)
        if (window[static_cast<std::size_t>(i)] != i + 1) return false;
    return true;
}

SignedPerm identity_perm(int n) {
    if (n < 0) throw std::invalid_argument("negative rank");
    SignedPerm w;
    w.window.resize(static_cast<std::size_t>(n));
    std::iota(w.window.begin(), w.window.end(), 1);
    return w;
}

SignedPerm generator_b(int n, int i) {
    if (i < 1 || i > n) throw std::invalid_argument("generator index outside 1..n");
    SignedPerm w = identity_perm(n);
    if (i == 1)
        w.window[0] = -1;
    else
        std::swap(w.window[static_cast<std::size_t>(i) - 2],
                  w.window[static_cast<std::size_t>(i) - 1]);
    return w;
}

SignedPerm compose(const SignedPerm& a, const SignedPerm& b) {
    if (a.rank() != b.rank()) throw std::invalid_argument("rank mismatch in composition");
    SignedPerm c;
    c.window.resize(b.window.size());
    for (std::size_t i = 0; i < b.window.size(); ++i) {
        int bi = b.window[i];
        int img = a.window[static_cast<std::size_t>(std::abs(bi)) - 1];
        c.window[i] = bi < 0 ? -img : img;
    }
    return c;
}

SignedPerm inverse(const SignedPerm& w) {
    SignedPerm r;
    r.window.resize(w.window.size());
    for (std::size_t i = 0; i < w.window.size(); ++i) {
        int wi = w.window[i];
        std::size_t j = static_cast<std::size_t>(std::abs(wi)) - 1;
        int pre = static_cast<int>(i) + 1;
        r.window[j] = wi < 0 ? -pre : pre;
    }
    return r;
}

SignedPerm perm_from_word(int n, const std::vector<int>& word) {
    SignedPerm w = identity_perm(n);
    for (int i : word) w = compose(w, generator_b(n, i));
    return w;
}

Vec apply(const SignedPerm& w, const Vec& v) {
    if (static_cast<int>(v.size()) != w.rank())
        throw std::invalid_argument("vector length does not match rank");
    Vec out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        int wi = w.window[i];
        std::size_t j = static_cast<std::size_t>(std::abs(wi)) - 1;
        out[j] = wi < 0 ? -v[i] : v[i];
    }
    return out;
}

SignedPerm promote(const SignedPerm& w, int m) {
    if (m < w.rank()) throw std::invalid_argument("cannot demote a signed permutation");
    SignedPerm r = w;
    for (int i = w.rank() + 1; i <= m; ++i) r.window.push_back(i);
    return r;
}

RootSystemB::RootSystemB(int n) : rank(n) {
    if (n < 0) throw std::invalid_argument("negative rank");
    auto unit = [n](int i) {
        Vec e(static_cast<std::size_t>(n), 0);
        e[static_cast<std::size_t>(i)] = 1;
        return e;
    };
    if (n > 0) simple_roots.push_back(unit(0));
    for (int i = 1; i < n; ++i) {
        Vec a = unit(i);
        a[static_cast<std::size_t>(i) - 1] = -1;
        simple_roots.push_back(a);
    }
    for (int i = 0; i < n; ++i) positive_roots.push_back(unit(i));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int sgn : {1, -1}) {
                Vec r = unit(j);
                r[static_cast<std::size_t>(i)] = sgn;
                positive_roots.push_back(r);
            }
    assert(static_cast<int>(positive_roots.size()) == n * n);
}

bool RootSystemB::is_positive(const Vec& r) const {
    return std::find(positive_roots.begin(), positive_roots.end(), r) !=
           positive_roots.end();
}

int length(const SignedPerm& w) {
    RootSystemB rs(w.rank());
    int cnt = 0;
    for (const Vec& r : rs.positive_roots) {
        Vec img = idweyl::apply(w, r);
        for (int& c : img) c = -c;
        if (rs.is_positive(img)) ++cnt;
    }
    return cnt;
}

std::vector<int> reduced_word(const SignedPerm& w) {
    std::vector<int> out;
    SignedPerm cur = w;
    int len = length(cur);
    while (len > 0) {
        bool found = false;
        for (int i = 1; i <= cur.rank(); ++i) {
            SignedPerm next = compose(generator_b(cur.rank(), i), cur);
            int nl = length(next);
            if (nl < len) {
                out.push_back(i);
                cur = std::move(next);
                len = nl;
                found = true;
                break;
            }
        }
        assert(found && "every non-identity element has a left descent");
        (void)found;
    }
    assert(cur.is_identity());
    return out;
}

static void check_subset(int n, const std::vector<int>& J) {
    std::set<int> seen;
    for (int j : J) {
        if (j < 1 || j > n) throw std::invalid_argument("subset member outside 1..n");
        if (!seen.insert(j).second) throw std::invalid_argument("duplicate subset member");
    }
}

MinusculeB minuscule_from_subset(int n, std::vector<int> J) {
    if (n < 0) throw std::invalid_argument("negative rank");
    check_subset(n, J);
    std::sort(J.begin(), J.end());
    return MinusculeB{n, std::move(J)};
}

std::vector<int> minuscule_word(const MinusculeB& w) {
    // Blocks in increasing order of j, so the largest block sits rightmost
    // and is applied first; each block peels the orbit vector by one new
    // coordinate per letter, which keeps the concatenation reduced.
    std::vector<int> word;
    for (int j : w.J)
        for (int i = j; i >= 1; --i) word.push_back(i);
    return word;
}

SignedPerm minuscule_perm(const MinusculeB& w) {
    return perm_from_word(w.n, minuscule_word(w));
}

CosetB coset_of(const SignedPerm& w) {
    Vec lam = idweyl::apply(w, base_weight(w.rank()));
    CosetB c;
    c.n = w.rank();
    for (int i = 0; i < w.rank(); ++i)
        if (lam[static_cast<std::size_t>(i)] < 0) c.J.push_back(i + 1);
    return c;
}

MinusculeB min_coset_rep(const CosetB& c) {
    return minuscule_from_subset(c.n, c.J);
}

BitSeq bij_f01(int n, const std::vector<int>& J) {
    check_subset(n, J);
    BitSeq x(static_cast<std::size_t>(n), '0');
    for (int j : J) x[static_cast<std::size_t>(j) - 1] = '1';
    return x;
}

Vec bij_f12(int n, const std::vector<int>& J) {
    check_subset(n, J);
    Vec lam = base_weight(n);
    for (int j : J) lam[static_cast<std::size_t>(j) - 1] = -1;
    return lam;
}

MinusculeB bij_fM(int n, std::vector<int> J) {
    return minuscule_from_subset(n, std::move(J));
}

CosetB bij_fcoset(int n, std::vector<int> J) {
    check_subset(n, J);
    std::sort(J.begin(), J.end());
    return CosetB{n, std::move(J)};
}

std::vector<int> bij_f01_inv(const BitSeq& x) {
    require_bits(x);
    std::vector<int> J;
    for (std::size_t i = 0; i < x.size(); ++i)
        if (x[i] == '1') J.push_back(static_cast<int>(i) + 1);
    return J;
}

std::vector<int> bij_f12_inv(const Vec& lambda) {
    std::vector<int> J;
    for (std::size_t i = 0; i < lambda.size(); ++i) {
        if (lambda[i] != 1 && lambda[i] != -1)
            throw std::invalid_argument("vector entries must be +-1/2");
        if (lambda[i] < 0) J.push_back(static_cast<int>(i) + 1);
    }
    return J;
}

std::vector<int> bij_fM_inv(const MinusculeB& w) {
    return w.J;
}

SignedPerm insertion_op(int n, int j) {
    if (n < 0) throw std::invalid_argument("negative base length");
    if (j < 0 || j > 2 * n + 1) throw std::out_of_range("operator index outside 0..2n+1");
    // Palindrome s_{n+1} s_n ... s_2 s_1 s_2 ... s_n s_{n+1} in rank n+1.
    std::vector<int> full;
    for (int i = n + 1; i >= 2; --i) full.push_back(i);
    full.push_back(1);
    for (int i = 2; i <= n + 1; ++i) full.push_back(i);
    std::vector<int> word(full.end() - j, full.end());
    return perm_from_word(n + 1, word);
}

MinusculeB act_on_minuscule(const SignedPerm& v, const MinusculeB& w) {
    if (v.rank() < w.n) throw std::invalid_argument("rank too small to act");
    // Embedding appends +1/2 coordinates, so the index subset is unchanged.
    SignedPerm wp = promote(minuscule_perm(w), v.rank());
    CosetB c = coset_of(compose(v, wp));
    return min_coset_rep(c);
}

}  // namespace idweyl
