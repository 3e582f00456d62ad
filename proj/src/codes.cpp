// Residue-class codes over bit strings and lattice paths, sphere-search
// decoders for one deletion or insertion, and the brute-force perfectness
// verifier.

#include "idweyl/codes.hpp"
#include "idweyl/weyla.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace idweyl {

namespace {

long long reduce(long long value, long long mod) {
    return ((value % mod) + mod) % mod;
}

}  // namespace

CodeSpec CodeSpec::levenshtein(int n, int a) {
    if (n < 1) throw std::invalid_argument("word length must be at least 1");
    CodeSpec spec;
    spec.kind = Kind::Levenshtein;
    spec.n = n;
    spec.a = static_cast<int>(reduce(a, n + 1));
    return spec;
}

CodeSpec CodeSpec::path(int v, int h, int a) {
    if (v < 1 || h < 1) throw std::invalid_argument("both step counts must be at least 1");
    CodeSpec spec;
    spec.kind = Kind::Path;
    spec.v = v;
    spec.h = h;
    spec.a = static_cast<int>(reduce(a, v + h));
    return spec;
}

CodeSpec CodeSpec::bad(int v, int h, int a) {
    CodeSpec spec = path(v, h, a);
    spec.kind = Kind::Bad;
    return spec;
}

int CodeSpec::modulus() const {
    return kind == Kind::Levenshtein ? n + 1 : v + h;
}

int CodeSpec::word_length() const {
    return kind == Kind::Levenshtein ? n : v + h;
}

std::string CodeSpec::describe() const {
    std::ostringstream os;
    switch (kind) {
        case Kind::Levenshtein:
            os << "moment residue code (n=" << n;
            break;
        case Kind::Path:
            os << "path inversion code (v=" << v << ", h=" << h;
            break;
        case Kind::Bad:
            os << "shuffled path inversion code (v=" << v << ", h=" << h;
            break;
    }
    os << ", a=" << a << " mod " << modulus() << ")";
    return os.str();
}

bool membership(const CodeSpec& spec, const BitSeq& x) {
    require_bits(x);
    if (static_cast<int>(x.size()) != spec.word_length())
        throw std::invalid_argument("word length does not match the code");
    switch (spec.kind) {
        case CodeSpec::Kind::Levenshtein:
            return reduce(moment(x), spec.modulus()) == spec.a;
        case CodeSpec::Kind::Path:
            if (weight(x) != spec.h)
                throw std::invalid_argument("word weight does not match the code");
            return reduce(inversions(x), spec.modulus()) == spec.a;
        case CodeSpec::Kind::Bad:
            if (weight(x) != spec.h)
                throw std::invalid_argument("word weight does not match the code");
            return reduce(inversions(azby_inverse(x)), spec.modulus()) == spec.a;
    }
    throw std::logic_error("unreachable");
}

std::vector<BitSeq> enumerate_code(const CodeSpec& spec, int size_guard) {
    if (spec.word_length() > size_guard) {
        std::ostringstream os;
        os << "enumeration of " << spec.describe() << " exceeds the size guard ("
           << spec.word_length() << " > " << size_guard << ")";
        throw GuardError(os.str());
    }
    std::vector<BitSeq> ambient = spec.kind == CodeSpec::Kind::Levenshtein
                                      ? all_bit_strings(spec.n)
                                      : enumerate_paths(spec.v, spec.h);
    std::vector<BitSeq> code;
    for (const BitSeq& x : ambient)
        if (membership(spec, x)) code.push_back(x);
    return code;
}

DecodeError::DecodeError(Kind k, const std::string& what)
    : std::runtime_error(what), kind(k) {}

namespace {

BitSeq unique_candidate(std::vector<BitSeq> candidates, const std::string& channel) {
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    if (candidates.empty())
        throw DecodeError(DecodeError::Kind::NoCandidate,
                          "no codeword explains the received word (" + channel + ")");
    if (candidates.size() > 1)
        throw DecodeError(DecodeError::Kind::MultipleCandidates,
                          "several codewords explain the received word (" + channel + ")");
    return candidates.front();
}

}  // namespace

BitSeq vt_decode_deletion(const BitSeq& z, int n, int a) {
    CodeSpec spec = CodeSpec::levenshtein(n, a);
    require_bits(z);
    if (static_cast<int>(z.size()) != n - 1)
        throw DecodeError(DecodeError::Kind::NoCandidate,
                          "received word must be one symbol shorter than the code");
    std::vector<BitSeq> candidates;
    for (const BitSeq& x : insertion_sphere(z))
        if (membership(spec, x)) candidates.push_back(x);
    return unique_candidate(std::move(candidates), "one deletion");
}

BitSeq vt_decode_insertion(const BitSeq& z, int n, int a) {
    CodeSpec spec = CodeSpec::levenshtein(n, a);
    require_bits(z);
    if (static_cast<int>(z.size()) != n + 1)
        throw DecodeError(DecodeError::Kind::NoCandidate,
                          "received word must be one symbol longer than the code");
    std::vector<BitSeq> candidates;
    for (const BitSeq& x : deletion_sphere(z))
        if (membership(spec, x)) candidates.push_back(x);
    return unique_candidate(std::move(candidates), "one insertion");
}

BitSeq path_decode(const BitSeq& z, int v, int h, int a) {
    require_bits(z);
    if (v < 0 || h < 0) throw std::invalid_argument("invalid path shape");
    if (!is_path(z, v, h))
        throw DecodeError(DecodeError::Kind::NoCandidate,
                          "received word is not a path with the expected step counts");
    CodeSpec spec = CodeSpec::path(v + 1, h + 1, a);
    std::vector<BitSeq> candidates;
    for (const BitSeq& y : path_insertion_sphere(z))
        if (membership(spec, y)) candidates.push_back(y);
    return unique_candidate(std::move(candidates), "one path deletion");
}

BitSeq bad_decode(const BitSeq& z, int v, int h, int a) {
    require_bits(z);
    if (v < 0 || h < 0) throw std::invalid_argument("invalid path shape");
    if (!is_path(z, v, h))
        throw DecodeError(DecodeError::Kind::NoCandidate,
                          "received word is not a path with the expected step counts");
    CodeSpec spec = CodeSpec::bad(v + 1, h + 1, a);
    std::vector<BitSeq> candidates;
    for (const BitSeq& y : bai_insertion_sphere(z))
        if (membership(spec, y)) candidates.push_back(y);
    return unique_candidate(std::move(candidates), "one balanced adjacent deletion");
}

std::string PerfectnessReport::describe() const {
    std::ostringstream os;
    switch (failure) {
        case Failure::None:
            os << "spheres partition the ambient set";
            break;
        case Failure::Uncovered:
            os << "uncovered ambient element: " << witness;
            break;
        case Failure::DoublyCovered:
            os << "doubly covered ambient element: " << witness << " (from " << codeword_a
               << " and " << codeword_b << ")";
            break;
    }
    return os.str();
}

PerfectnessReport verify_perfect(
    const std::vector<BitSeq>& codebook,
    const std::function<std::vector<BitSeq>(const BitSeq&)>& sphere,
    const std::vector<BitSeq>& ambient) {
    std::map<BitSeq, std::vector<BitSeq>> covered_by;
    for (const BitSeq& c : codebook)
        for (const BitSeq& y : sphere(c)) covered_by[y].push_back(c);

    std::vector<BitSeq> universe = ambient;
    std::sort(universe.begin(), universe.end());
    universe.erase(std::unique(universe.begin(), universe.end()), universe.end());

    PerfectnessReport rep;
    for (const BitSeq& y : universe)
        if (!covered_by.count(y)) {
            rep.failure = PerfectnessReport::Failure::Uncovered;
            rep.witness = y;
            return rep;
        }
    for (const BitSeq& y : universe) {
        auto& cs = covered_by.at(y);
        if (cs.size() > 1) {
            std::sort(cs.begin(), cs.end());
            rep.failure = PerfectnessReport::Failure::DoublyCovered;
            rep.witness = y;
            rep.codeword_a = cs[0];
            rep.codeword_b = cs[1];
            return rep;
        }
    }
    rep.ok = true;
    return rep;
}

}  // namespace idweyl
