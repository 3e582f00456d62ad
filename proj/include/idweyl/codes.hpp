#pragma once
// Concrete residue-class codes and their decoders: moment-residue codes on
// length-n strings (perfect for one symbol deletion), inversion-residue
// lattice-path codes decoded against two-bit path deletions, their shuffled
// images decoded against balanced adjacent deletions, and a brute-force
// perfectness verifier producing witness certificates.

#include "idweyl/bitseq.hpp"

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace idweyl {

struct CodeSpec {
    enum class Kind { Levenshtein, Path, Bad };

    Kind kind = Kind::Levenshtein;
    int n = 0;       // word length (Levenshtein)
    int v = 0;       // zeros (Path / Bad)
    int h = 0;       // ones  (Path / Bad)
    int a = 0;       // residue, reduced modulo modulus()

    static CodeSpec levenshtein(int n, int a);
    static CodeSpec path(int v, int h, int a);
    static CodeSpec bad(int v, int h, int a);

    int modulus() const;      // n+1, or v+h for the path shapes
    int word_length() const;  // n, or v+h
    std::string describe() const;
};

// Residue test: moment for Levenshtein, inversions for Path, inversions of
// the unshuffled word for Bad. Throws std::invalid_argument on a length or
// weight mismatch.
bool membership(const CodeSpec& spec, const BitSeq& x);

// All members, lexicographic. Refuses (GuardError) when word_length()
// exceeds size_guard; widen explicitly for larger runs.
struct GuardError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
std::vector<BitSeq> enumerate_code(const CodeSpec& spec, int size_guard = 20);

// Decoder failures. NoCandidate signals malformed input (for the perfect
// codes, a wrong-length word); MultipleCandidates can only arise on the
// insertion side, whose uniqueness is established empirically, not assumed.
struct DecodeError : std::runtime_error {
    enum class Kind { NoCandidate, MultipleCandidates };
    Kind kind;
    DecodeError(Kind k, const std::string& what);
};

// Sphere-search decoders. Each scans the relevant insertion or deletion
// sphere of the received word for members of the code.
//  - vt_decode_deletion: z of length n-1, one deletion happened; the unique
//    length-n completion in the code.
//  - vt_decode_insertion: z of length n+1, one insertion happened; unique
//    candidate enforced, MultipleCandidates reported otherwise.
//  - path_decode: z weight-h length-(v+h); the unique codeword of the
//    (v+1, h+1, a) path code whose two-bit path deletions produce z.
//  - bad_decode: same shape; the unique codeword of the shuffled
//    (v+1, h+1, a) code reachable by one balanced adjacent insertion.
BitSeq vt_decode_deletion(const BitSeq& z, int n, int a);
BitSeq vt_decode_insertion(const BitSeq& z, int n, int a);
BitSeq path_decode(const BitSeq& z, int v, int h, int a);
BitSeq bad_decode(const BitSeq& z, int v, int h, int a);

// Certificate for sphere-partition verification. When verification fails,
// the witness is the lexicographically smallest uncovered ambient element
// if any exists, otherwise the lexicographically smallest doubly covered
// element together with its two covering codewords (sorted).
struct PerfectnessReport {
    enum class Failure { None, Uncovered, DoublyCovered };

    bool ok = false;
    Failure failure = Failure::None;
    BitSeq witness;
    BitSeq codeword_a, codeword_b;
    std::string describe() const;
};

PerfectnessReport verify_perfect(
    const std::vector<BitSeq>& codebook,
    const std::function<std::vector<BitSeq>(const BitSeq&)>& sphere,
    const std::vector<BitSeq>& ambient);

}  // namespace idweyl
