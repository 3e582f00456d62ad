// Generalized insertion/deletion families: axiom checkers, generic spheres,
// residue-class codes, the built-in families, and JSON interchange.

#include "idweyl/genins.hpp"
#include "idweyl/weyla.hpp"

#include "json.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace idweyl {

namespace {

bool sorted_unique(const std::vector<BitSeq>& v) {
    return std::adjacent_find(v.begin(), v.end(),
                              [](const BitSeq& a, const BitSeq& b) { return a >= b; }) == v.end();
}

bool contains(const std::vector<BitSeq>& sorted, const BitSeq& x) {
    return std::binary_search(sorted.begin(), sorted.end(), x);
}

void validate_family(const InsertionFamily& fam) {
    if (fam.domain.empty()) throw std::invalid_argument("family domain is empty");
    if (fam.ops.empty()) throw std::invalid_argument("family has no insertion ops");
    for (const BitSeq& x : fam.domain) require_bits(x);
    for (const BitSeq& y : fam.codomain) require_bits(y);
    if (!sorted_unique(fam.domain) || !sorted_unique(fam.codomain))
        throw std::invalid_argument("domain and codomain must be sorted and duplicate free");
    for (const BitSeq& y : fam.codomain)
        if (!fam.weight.count(y))
            throw std::invalid_argument("weight is undefined on codomain value " + y);
    for (const auto& op : fam.ops) {
        if (op.size() != fam.domain.size())
            throw std::invalid_argument("op is not a total map on the domain");
        for (const auto& [x, y] : op) {
            if (!contains(fam.domain, x))
                throw std::invalid_argument("op defined outside the domain at " + x);
            if (!contains(fam.codomain, y))
                throw std::invalid_argument("op value outside the codomain: " + y);
        }
    }
}

}  // namespace

std::string CheckI1I2Result::describe() const {
    std::ostringstream os;
    if (ok)
        os << "insertion axioms hold; weight span S = " << S;
    else
        os << "insertion axioms fail on input \"" << witness_x << "\" near op " << witness_j;
    return os.str();
}

CheckI1I2Result check_I1_I2(const InsertionFamily& fam) {
    validate_family(fam);
    CheckI1I2Result res;
    bool have_span = false;
    for (const BitSeq& x : fam.domain) {
        std::vector<long long> w;
        w.reserve(fam.ops.size());
        const BitSeq* prev = nullptr;
        for (std::size_t j = 0; j < fam.ops.size(); ++j) {
            const BitSeq& y = fam.ops[j].at(x);
            w.push_back(fam.weight.at(y));
            if (j > 0 && *prev != y && w[j] != w[j - 1] + 1) {
                res.witness_x = x;
                res.witness_j = static_cast<int>(j) - 1;
                return res;
            }
            prev = &y;
        }
        long long span = w.back() - w.front();
        if (!have_span) {
            res.S = span;
            have_span = true;
        } else if (span != res.S) {
            res.witness_x = x;
            res.witness_j = 0;
            return res;
        }
    }
    res.ok = true;
    return res;
}

std::string CheckD1D2Result::describe() const {
    std::ostringstream os;
    if (ok)
        os << "deletion graphs match the insertion family";
    else if (d1_failed)
        os << "deletion op " << witness_index << " on \"" << witness
           << "\" is not inverted by any insertion op";
    else
        os << "insertion op " << witness_index << " on \"" << witness
           << "\" has no matching deletion";
    return os.str();
}

CheckD1D2Result check_D1_D2(const DeletionFamily& del) {
    const InsertionFamily& fam = del.paired_with;
    validate_family(fam);
    CheckD1D2Result res;

    std::map<BitSeq, std::set<BitSeq>> images;
    for (const auto& op : fam.ops)
        for (const auto& [x, y] : op) images[x].insert(y);

    std::set<std::pair<BitSeq, BitSeq>> recorded;
    for (std::size_t j = 0; j < del.partials.size(); ++j) {
        std::map<BitSeq, BitSeq> as_map;
        for (const auto& [y, x] : del.partials[j]) {
            if (!contains(fam.codomain, y) || !contains(fam.domain, x))
                throw std::invalid_argument("deletion pair outside codomain x domain");
            auto [it, fresh] = as_map.emplace(y, x);
            if (!fresh && it->second != x)
                throw std::invalid_argument("deletion op is not a partial map at " + y);
            recorded.emplace(y, x);
            if (!images.at(x).count(y)) {
                res.d1_failed = true;
                res.witness_index = static_cast<int>(j);
                res.witness = y;
                return res;
            }
        }
    }

    for (std::size_t i = 0; i < fam.ops.size(); ++i)
        for (const auto& [x, y] : fam.ops[i])
            if (!recorded.count({y, x})) {
                res.witness_index = static_cast<int>(i);
                res.witness = x;
                return res;
            }

    res.ok = true;
    return res;
}

std::vector<BitSeq> family_insertion_sphere(const InsertionFamily& fam, const BitSeq& x) {
    if (!contains(fam.domain, x))
        throw std::invalid_argument("value outside the family domain: " + x);
    std::set<BitSeq> out;
    for (const auto& op : fam.ops) out.insert(op.at(x));
    return {out.begin(), out.end()};
}

std::vector<BitSeq> family_deletion_sphere(const InsertionFamily& fam, const BitSeq& y) {
    if (!contains(fam.codomain, y))
        throw std::invalid_argument("value outside the family codomain: " + y);
    std::set<BitSeq> out;
    for (const auto& op : fam.ops)
        for (const auto& [x, img] : op)
            if (img == y) out.insert(x);
    return {out.begin(), out.end()};
}

std::vector<BitSeq> construct_Ca(const InsertionFamily& fam, long long a) {
    CheckI1I2Result chk = check_I1_I2(fam);
    if (!chk.ok)
        throw std::invalid_argument("family fails the insertion axioms: " + chk.describe());
    long long mod = chk.S + 1;
    long long target = ((a % mod) + mod) % mod;
    std::vector<BitSeq> code;
    for (const BitSeq& y : fam.codomain)
        if (((fam.weight.at(y) % mod) + mod) % mod == target) code.push_back(y);
    return code;
}

InsertionFamily make_standard_family(int n) {
    if (n < 0 || n > 14) throw std::invalid_argument("length outside 0..14");
    InsertionFamily fam;
    fam.name = "standard";
    fam.domain = all_bit_strings(n);
    fam.codomain = all_bit_strings(n + 1);
    for (const BitSeq& y : fam.codomain) fam.weight[y] = moment(y);
    fam.ops.resize(2 * static_cast<std::size_t>(n) + 2);
    for (std::size_t j = 0; j < fam.ops.size(); ++j) {
        GapBit gb = psi(static_cast<std::size_t>(n), j);
        for (const BitSeq& x : fam.domain) fam.ops[j][x] = insert_bit(x, gb.gap, gb.bit);
    }
    return fam;
}

InsertionFamily make_path_family(int v, int h) {
    if (v < 0 || h < 0 || v + h > 14) throw std::invalid_argument("step counts outside range");
    InsertionFamily fam;
    fam.name = "path";
    fam.domain = enumerate_paths(v, h);
    fam.codomain = enumerate_paths(v + 1, h + 1);
    for (const BitSeq& y : fam.codomain) fam.weight[y] = inversions(y);
    int n = v + h;
    fam.ops.resize(2 * static_cast<std::size_t>(n) + 2);
    for (std::size_t j = 0; j < fam.ops.size(); ++j)
        for (const BitSeq& x : fam.domain) fam.ops[j][x] = path_insert(x, static_cast<int>(j));
    return fam;
}

InsertionFamily make_h_family(int v, int h) {
    if (v < 0 || h < 0 || v + h > 14) throw std::invalid_argument("step counts outside range");
    InsertionFamily fam;
    fam.name = "h";
    fam.domain = enumerate_paths(v, h);
    fam.codomain = enumerate_paths(v + 1, h + 1);
    for (const BitSeq& y : fam.codomain) fam.weight[y] = inversions(y);
    int n = v + h;
    fam.ops.resize(2 * static_cast<std::size_t>(n) + 2);
    for (std::size_t j = 0; j < fam.ops.size(); ++j)
        for (const BitSeq& x : fam.domain) fam.ops[j][x] = h_insert(x, static_cast<int>(j));
    return fam;
}

InsertionFamily make_bai_family(int v, int h) {
    InsertionFamily inner = make_h_family(v, h);
    InsertionFamily fam;
    fam.name = "bai";
    for (const BitSeq& x : inner.domain) fam.domain.push_back(azby(x));
    for (const BitSeq& y : inner.codomain) fam.codomain.push_back(azby(y));
    std::sort(fam.domain.begin(), fam.domain.end());
    std::sort(fam.codomain.begin(), fam.codomain.end());
    for (const BitSeq& y : fam.codomain) fam.weight[y] = inversions(azby_inverse(y));
    fam.ops.resize(inner.ops.size());
    for (std::size_t j = 0; j < inner.ops.size(); ++j)
        for (const auto& [x, y] : inner.ops[j]) fam.ops[j][azby(x)] = azby(y);
    return fam;
}

DeletionFamily make_standard_deletions(int n) {
    DeletionFamily del;
    del.name = "standard";
    del.paired_with = make_standard_family(n);
    del.partials.resize(static_cast<std::size_t>(n) + 1);
    for (const BitSeq& y : del.paired_with.codomain)
        for (std::size_t i = 1; i <= y.size(); ++i)
            del.partials[i - 1].emplace_back(y, delete_bit(y, i));
    return del;
}

DeletionFamily make_path_deletions(int v, int h) {
    DeletionFamily del;
    del.name = "path";
    del.paired_with = make_path_family(v, h);
    // One partial per later position: defined where that bit differs from the
    // leading bit, image = drop both.
    del.partials.resize(static_cast<std::size_t>(v + h) + 1);
    for (const BitSeq& y : del.paired_with.codomain)
        for (std::size_t p = 2; p <= y.size(); ++p)
            if (y[p - 1] != y[0]) {
                BitSeq x = delete_bit(delete_bit(y, p), 1);
                del.partials[p - 2].emplace_back(y, x);
            }
    return del;
}

DeletionFamily make_bad_deletions(int v, int h) {
    DeletionFamily del;
    del.name = "bad";
    del.paired_with = make_bai_family(v, h);
    // One partial per adjacent position pair (p, p+1), defined where the two
    // bits differ.
    del.partials.resize(static_cast<std::size_t>(v + h) + 1);
    for (const BitSeq& y : del.paired_with.codomain)
        for (std::size_t p = 1; p + 1 <= y.size(); ++p)
            if (y[p - 1] != y[p]) {
                BitSeq x = delete_bit(delete_bit(y, p + 1), p);
                del.partials[p - 1].emplace_back(y, x);
            }
    return del;
}

InsertionFamily family_from_json_text(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object()) throw std::invalid_argument("top-level JSON value must be an object");
    InsertionFamily fam;
    try {
        fam.name = j.value("name", std::string{});
        for (const auto& s : j.at("domain")) fam.domain.push_back(s.get<BitSeq>());
        for (const auto& s : j.at("codomain")) fam.codomain.push_back(s.get<BitSeq>());
        for (const auto& [k, val] : j.at("weight").items())
            fam.weight[k] = val.get<long long>();
        for (const auto& op_json : j.at("ops")) {
            std::map<BitSeq, BitSeq> op;
            for (const auto& [k, val] : op_json.items()) op[k] = val.get<BitSeq>();
            fam.ops.push_back(std::move(op));
        }
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("malformed family JSON: ") + e.what());
    }
    std::sort(fam.domain.begin(), fam.domain.end());
    fam.domain.erase(std::unique(fam.domain.begin(), fam.domain.end()), fam.domain.end());
    std::sort(fam.codomain.begin(), fam.codomain.end());
    fam.codomain.erase(std::unique(fam.codomain.begin(), fam.codomain.end()),
                       fam.codomain.end());
    for (const auto& kv : fam.weight) require_bits(kv.first);
    validate_family(fam);
    return fam;
}

std::string family_to_json_text(const InsertionFamily& fam) {
    nlohmann::json j;
    if (!fam.name.empty()) j["name"] = fam.name;
    j["domain"] = fam.domain;
    j["codomain"] = fam.codomain;
    j["weight"] = nlohmann::json::object();
    for (const auto& [y, w] : fam.weight) j["weight"][y] = w;
    j["ops"] = nlohmann::json::array();
    for (const auto& op : fam.ops) {
        nlohmann::json oj = nlohmann::json::object();
        for (const auto& [x, y] : op) oj[x] = y;
        j["ops"].push_back(std::move(oj));
    }
    return j.dump(2);
}

}  // namespace idweyl
