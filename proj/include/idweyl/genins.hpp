#pragma once
// Generalized insertion/deletion families over finite, materialized domains:
// axiom checkers for the unit-step and constant-span conditions on ordered
// insertion-operator lists, the paired partial-deletion condition pair,
// generic spheres, residue-class code construction, the three built-in
// families, and a JSON interchange format.

#include "idweyl/bitseq.hpp"

#include <map>
#include <string>
#include <vector>

namespace idweyl {

// Ordered list of total maps domain -> codomain together with an integer
// weight on the codomain. The two axioms checked by check_I1_I2:
//   (I1) consecutive ops on the same input either coincide or raise the
//        weight by exactly one;
//   (I2) the weight gap between the last and the first op is one constant S
//        across the whole domain.
struct InsertionFamily {
    std::string name;
    std::vector<BitSeq> domain;                 // sorted, duplicate free
    std::vector<BitSeq> codomain;               // sorted, duplicate free
    std::map<BitSeq, long long> weight;         // defined on every codomain value
    std::vector<std::map<BitSeq, BitSeq>> ops;  // each total on the domain
};

struct CheckI1I2Result {
    bool ok = false;
    long long S = 0;       // meaningful when ok
    BitSeq witness_x;      // meaningful when !ok: failing input ...
    int witness_j = -1;    // ... and op index (I1: between j and j+1; I2: at j = 0)
    std::string describe() const;
};

// Exhaustive verification over the whole domain.
// Throws std::invalid_argument on an empty op list or a malformed family.
CheckI1I2Result check_I1_I2(const InsertionFamily& fam);

// Deletion side, kept as explicit graphs so partiality is visible. The two
// conditions of check_D1_D2:
//   (D1) every recorded pair (y, x) is reversed by some insertion op;
//   (D2) every insertion result I(x) is mapped back to x by some deletion.
struct DeletionFamily {
    std::string name;
    std::vector<std::vector<std::pair<BitSeq, BitSeq>>> partials;  // (y, x) pairs
    InsertionFamily paired_with;
};

struct CheckD1D2Result {
    bool ok = false;
    bool d1_failed = false;   // otherwise the witness is a (D2) failure
    int witness_index = -1;   // failing deletion (D1) or insertion (D2) op
    BitSeq witness;           // failing y (D1) or x (D2)
    std::string describe() const;
};

CheckD1D2Result check_D1_D2(const DeletionFamily& del);

// Generic spheres: all op images of x, and all domain values some op maps
// onto y. Throw std::invalid_argument when the argument is outside the
// domain / codomain.
std::vector<BitSeq> family_insertion_sphere(const InsertionFamily& fam, const BitSeq& x);
std::vector<BitSeq> family_deletion_sphere(const InsertionFamily& fam, const BitSeq& y);

// Residue-class code {y in codomain : weight(y) = a mod S+1} for the span S
// measured by check_I1_I2. Such a code corrects one family insertion
// exactly. Throws std::invalid_argument when the family fails the axioms.
std::vector<BitSeq> construct_Ca(const InsertionFamily& fam, long long a);

// Built-in families.
//  - standard: single-bit insertions into length-n strings, enumerated in
//    the non-decreasing-moment order given by psi; weight = moment.
//  - path: the 2(v+h)+2 path insertions on weight-h words; weight = inversions.
//  - second path family ("h"): the drifting-pair insertions; same weight.
//  - bai: the second family conjugated by the interleaving shuffle, acting
//    as balanced adjacent pair insertions; weight = inversions of the
//    unshuffled word.
InsertionFamily make_standard_family(int n);
InsertionFamily make_path_family(int v, int h);
InsertionFamily make_h_family(int v, int h);
InsertionFamily make_bai_family(int v, int h);

// Paired deletion graphs for the families above.
DeletionFamily make_standard_deletions(int n);   // per-position symbol removal
DeletionFamily make_path_deletions(int v, int h);  // first bit + later opposite bit
DeletionFamily make_bad_deletions(int v, int h);   // adjacent unequal pair removal

// JSON interchange:
// {"domain": [...], "codomain": [...], "weight": {"value": int, ...},
//  "ops": [{"x": "y", ...}, ...]}.
// The loader validates bit strings, weight totality on the codomain, and op
// totality on the domain; throws std::invalid_argument on malformed input.
InsertionFamily family_from_json_text(const std::string& text);
std::string family_to_json_text(const InsertionFamily& fam);

}  // namespace idweyl
