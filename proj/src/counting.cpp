// Exact counting: integer polynomials, arithmetic tables, cardinality
// formulas, generating polynomials, sphere sizes, and Dyck machinery.

#include "idweyl/counting.hpp"
#include "idweyl/weylb.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace idweyl {

IntPoly::IntPoly(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) {
    normalize();
}

void IntPoly::normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPoly IntPoly::one() {
    return IntPoly({1});
}

IntPoly IntPoly::monomial(int degree, BigInt coeff) {
    if (degree < 0) throw std::invalid_argument("negative degree");
    std::vector<BigInt> c(static_cast<std::size_t>(degree) + 1, 0);
    c.back() = std::move(coeff);
    return IntPoly(std::move(c));
}

BigInt IntPoly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return 0;
    return c_[static_cast<std::size_t>(k)];
}

IntPoly& IntPoly::operator+=(const IntPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    normalize();
    return *this;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.c_.empty() || b.c_.empty()) return IntPoly{};
    std::vector<BigInt> c(a.c_.size() + b.c_.size() - 1, 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return IntPoly(std::move(c));
}

BigInt IntPoly::eval(const BigInt& q) const {
    BigInt acc = 0;
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * q + c_[i];
    return acc;
}

IntPoly IntPoly::fold_exponents(int m) const {
    if (m < 1) throw std::invalid_argument("fold modulus must be positive");
    std::vector<BigInt> c(static_cast<std::size_t>(m), 0);
    for (std::size_t i = 0; i < c_.size(); ++i) c[i % static_cast<std::size_t>(m)] += c_[i];
    return IntPoly(std::move(c));
}

std::string IntPoly::str(const std::string& var) const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < c_.size(); ++k) {
        if (c_[k] == 0) continue;
        BigInt a = c_[k];
        if (first) {
            if (a < 0) os << "-";
            first = false;
        } else {
            os << (a < 0 ? " - " : " + ");
        }
        BigInt mag = abs(a);
        if (k == 0 || mag != 1) os << mag;
        if (k >= 1) {
            os << var;
            if (k >= 2) os << "^" << k;
        }
    }
    return os.str();
}

int mobius(long long n) {
    if (n < 1) throw std::invalid_argument("mobius argument must be positive");
    static std::map<long long, int> cache;
    static std::mutex mtx;
    {
        std::lock_guard<std::mutex> lock(mtx);
        auto it = cache.find(n);
        if (it != cache.end()) return it->second;
    }
    int res = 1;
    long long m = n;
    for (long long p = 2; p * p <= m; ++p)
        if (m % p == 0) {
            m /= p;
            if (m % p == 0) {
                res = 0;
                m = 1;
                break;
            }
            res = -res;
        }
    if (m > 1) res = -res;
    std::lock_guard<std::mutex> lock(mtx);
    cache.emplace(n, res);
    return res;
}

long long totient(long long n) {
    if (n < 1) throw std::invalid_argument("totient argument must be positive");
    static std::map<long long, long long> cache;
    static std::mutex mtx;
    {
        std::lock_guard<std::mutex> lock(mtx);
        auto it = cache.find(n);
        if (it != cache.end()) return it->second;
    }
    long long res = n, m = n;
    for (long long p = 2; p * p <= m; ++p)
        if (m % p == 0) {
            while (m % p == 0) m /= p;
            res -= res / p;
        }
    if (m > 1) res -= res / m;
    std::lock_guard<std::mutex> lock(mtx);
    cache.emplace(n, res);
    return res;
}

BigInt binomial(long long n, long long k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    BigInt acc = 1;
    for (long long i = 1; i <= k; ++i) {
        acc *= n - k + i;
        acc /= i;  // exact: acc is binomial(n-k+i, i) at this point
    }
    return acc;
}

BigInt catalan_number(int c) {
    if (c < 0) throw std::invalid_argument("negative Catalan index");
    static std::vector<BigInt> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    while (static_cast<int>(cache.size()) <= c) {
        int m = static_cast<int>(cache.size());
        BigInt val = binomial(2LL * m, m) / (m + 1);
        cache.push_back(std::move(val));
    }
    return cache[static_cast<std::size_t>(c)];
}

// Shared shape of the two divisor-sum cardinality formulas: the number of
// residue-a values of an equidistributed-by-d statistic, where `bulk(d)`
// counts the d-periodic objects.
static BigInt residue_class_count(long long modulus, long long a,
                                  const std::vector<long long>& divisors,
                                  const std::function<BigInt(long long)>& bulk,
                                  long long denominator) {
    a = ((a % modulus) + modulus) % modulus;
    BigInt total = 0;
    for (long long d : divisors) {
        long long q = d / std::gcd(d, a);
        long long phi_ratio = totient(d) / totient(q);
        assert(totient(d) % totient(q) == 0);
        total += BigInt(mobius(q)) * phi_ratio * bulk(d);
    }
    if (total % denominator != 0)
        throw std::logic_error("cardinality divisor sum is not divisible by its denominator");
    return total / denominator;
}

BigInt card_levenshtein(int n, long long a) {
    if (n < 1) throw std::invalid_argument("length must be at least 1");
    long long N = n + 1;
    std::vector<long long> divisors;
    for (long long d = 1; d <= N; d += 2)
        if (N % d == 0) divisors.push_back(d);
    return residue_class_count(
        N, a, divisors, [N](long long d) { return BigInt(1) << (N / d); }, 2 * N);
}

BigInt card_path_code(int v, int h, long long a) {
    if (v < 1 || h < 1) throw std::invalid_argument("both step counts must be at least 1");
    long long n = v + h;
    long long g = std::gcd<long long>(v, h);
    std::vector<long long> divisors;
    for (long long d = 1; d <= g; ++d)
        if (g % d == 0) divisors.push_back(d);
    return residue_class_count(
        n, a, divisors, [n, v](long long d) { return binomial(n / d, v / d); }, n);
}

IntPoly gaussian_binomial(int nq, int kq) {
    if (kq < 0 || kq > nq) throw std::invalid_argument("require 0 <= k <= n");
    // Addition recurrence [n k] = [n-1 k-1] + q^k [n-1 k]; row n is built
    // from row n-1 without any division.
    std::vector<IntPoly> row(static_cast<std::size_t>(kq) + 1);
    row[0] = IntPoly::one();
    for (int m = 1; m <= nq; ++m)
        for (int k = std::min(m, kq); k >= 1; --k) {
            IntPoly val = IntPoly::monomial(k) * row[static_cast<std::size_t>(k)];
            val += row[static_cast<std::size_t>(k) - 1];
            row[static_cast<std::size_t>(k)] = k == m ? IntPoly::one() : std::move(val);
        }
    return row[static_cast<std::size_t>(kq)];
}

static IntPoly product_one_plus_powers(int n) {
    IntPoly acc = IntPoly::one();
    for (int i = 1; i <= n; ++i) {
        IntPoly factor = IntPoly::one();
        factor += IntPoly::monomial(i);
        acc = acc * factor;
    }
    return acc;
}

IntPoly genfun_moment(int n) {
    if (n < 0 || n > 24) throw std::invalid_argument("length outside 0..24");
    std::vector<BigInt> hist(static_cast<std::size_t>(n) * (n + 1) / 2 + 1, 0);
    for (const BitSeq& x : all_bit_strings(n)) hist[static_cast<std::size_t>(moment(x))] += 1;
    IntPoly by_enum{std::move(hist)};
    if (by_enum != product_one_plus_powers(n))
        throw std::logic_error("moment distribution disagrees with its product form");
    return by_enum;
}

IntPoly genfun_length(int n) {
    if (n < 0 || n > 16) throw std::invalid_argument("rank outside 0..16");
    std::vector<BigInt> hist(static_cast<std::size_t>(n) * (n + 1) / 2 + 1, 0);
    for (unsigned long long mask = 0; mask < (1ull << n); ++mask) {
        std::vector<int> J;
        for (int i = 0; i < n; ++i)
            if (mask >> i & 1) J.push_back(i + 1);
        int l = length(minuscule_perm(minuscule_from_subset(n, J)));
        hist[static_cast<std::size_t>(l)] += 1;
    }
    IntPoly by_enum{std::move(hist)};
    if (by_enum != product_one_plus_powers(n))
        throw std::logic_error("length distribution disagrees with its product form");
    return by_enum;
}

BigInt sphere_size_standard(int n, int t) {
    if (n < 0 || t < 0) throw std::invalid_argument("negative arguments");
    BigInt total = 0;
    for (int i = 0; i <= t; ++i) total += binomial(n + t, i);
    return total;
}

BigInt sphere_size_bai(int n, int t) {
    if (n < 0 || t < 0) throw std::invalid_argument("negative arguments");
    return binomial(n + 2LL * t, t);
}

PathSphereReport path_sphere_facts() {
    PathSphereReport rep;
    for (int n = 0; n <= 6; ++n)
        for (const BitSeq& x : all_bit_strings(n)) {
            if (iterated_sphere(x, 0, SphereFamily::Path) != std::vector<BitSeq>{x}) {
                rep.detail = "depth-0 sphere of " + x + " is not {x}";
                return rep;
            }
            if (static_cast<int>(iterated_sphere(x, 1, SphereFamily::Path).size()) != n + 2) {
                rep.detail = "depth-1 sphere of " + x + " does not have n+2 members";
                return rep;
            }
        }
    const std::vector<BitSeq> expect00 = {
        "000011", "000101", "000110", "001001", "001010", "001100", "010001", "010010",
        "010100", "011000", "100001", "100010", "100100", "101000", "110000"};
    const std::vector<BitSeq> expect01 = {
        "000111", "001011", "001101", "010011", "010101", "010110", "011001", "011010",
        "100011", "100101", "100110", "101001", "101010", "110001", "110010", "110100"};
    auto s00 = iterated_sphere("00", 2, SphereFamily::Path);
    auto s01 = iterated_sphere("01", 2, SphereFamily::Path);
    if (s00 != expect00) {
        rep.detail = "depth-2 sphere of 00 differs from the expected 15 members";
        return rep;
    }
    if (s00 != enumerate_paths(4, 2)) {
        rep.detail = "depth-2 sphere of 00 is not the full (4,2) path set";
        return rep;
    }
    if (s01 != expect01) {
        rep.detail = "depth-2 sphere of 01 differs from the expected 16 members";
        return rep;
    }
    rep.ok = true;
    rep.detail = "depth 0/1 sizes hold up to length 6; depth-2 pair (00, 01) gives (15, 16)";
    return rep;
}

static bool dominant_word(const BitSeq& p, char lead) {
    if (p.empty()) return true;
    if (p[0] != lead) return false;
    int d = 0;
    for (char c : p) {
        d += c == lead ? 1 : -1;
        if (d < 0) return false;
    }
    return d == 0;
}

std::vector<BitSeq> dyck_enumerate(int c, char lead) {
    if (c < 0) throw std::invalid_argument("negative half-length");
    if (lead != '0' && lead != '1') throw std::invalid_argument("lead must be '0' or '1'");
    std::vector<BitSeq> out;
    BitSeq cur;
    // Backtracking over prefixes that never let the non-lead count exceed
    // the lead count.
    auto rec = [&](auto&& self, int used_lead, int used_other) -> void {
        if (used_lead + used_other == 2 * c) {
            out.push_back(cur);
            return;
        }
        if (used_lead < c) {
            cur.push_back(lead);
            self(self, used_lead + 1, used_other);
            cur.pop_back();
        }
        if (used_other < used_lead) {
            cur.push_back(lead == '0' ? '1' : '0');
            self(self, used_lead, used_other + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0, 0);
    std::sort(out.begin(), out.end());
    return out;
}

long long DyckDecomposition::t() const {
    return std::accumulate(c.begin(), c.end(), 0LL);
}

std::optional<DyckDecomposition> dyck_decompose(const BitSeq& x, const BitSeq& y) {
    require_bits(x);
    require_bits(y);
    if (x.size() < y.size() || (x.size() - y.size()) % 2 != 0) return std::nullopt;
    DyckDecomposition dec;
    std::size_t pos = 0;
    for (char yi : y) {
        // Shortest prefix of the remainder with zero balance followed by the
        // template letter; balance counts the complement of yi as the up step.
        std::size_t k = pos;
        int d = 0;
        bool found = false;
        for (; k < x.size(); ++k) {
            if (d == 0 && x[k] == yi) {
                found = true;
                break;
            }
            d += x[k] != yi ? 1 : -1;
        }
        if (!found) return std::nullopt;
        BitSeq p = x.substr(pos, k - pos);
        if (p.size() % 2 != 0 || !dominant_word(p, yi == '1' ? '0' : '1')) return std::nullopt;
        dec.c.push_back(static_cast<long long>(p.size() / 2));
        dec.factors.push_back(std::move(p));
        pos = k + 1;
    }
    BitSeq tail = x.substr(pos);
    if (tail.size() % 2 != 0) return std::nullopt;
    if (std::count(tail.begin(), tail.end(), '0') !=
        std::count(tail.begin(), tail.end(), '1'))
        return std::nullopt;
    dec.c.push_back(static_cast<long long>(tail.size() / 2));
    dec.factors.push_back(std::move(tail));
    return dec;
}

CatalanIdentityReport catalan_identity(int n, int t) {
    if (n < 0 || t < 0) throw std::invalid_argument("negative arguments");
    CatalanIdentityReport rep;
    std::vector<int> parts(static_cast<std::size_t>(n) + 1, 0);
    BigInt lhs = 0;
    // All compositions of t into n+1 ordered non-negative parts.
    auto rec = [&](auto&& self, std::size_t idx, int remaining) -> void {
        if (idx + 1 == parts.size()) {
            parts[idx] = remaining;
            BigInt term = parts.back() + 1;
            for (int ci : parts) term *= catalan_number(ci);
            lhs += term;
            return;
        }
        for (int ci = 0; ci <= remaining; ++ci) {
            parts[idx] = ci;
            self(self, idx + 1, remaining - ci);
        }
    };
    rec(rec, 0, t);
    rep.lhs = lhs;
    rep.rhs = binomial(n + 2LL * t, t);
    rep.equal = rep.lhs == rep.rhs;
    return rep;
}

}  // namespace idweyl
