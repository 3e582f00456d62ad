#pragma once
// Exhaustive verification routines shared by the CLI `verify` subcommand and
// the acceptance harness. Each routine checks one global statement over a
// size range and reports pass/fail with a human-readable detail line
// (including a witness on failure). Defaults are the ranges the project is
// promised to hold on; smaller values give quicker partial runs.

#include <string>

namespace idweyl {

struct CheckResult {
    bool pass = false;
    std::string detail;
};

// Deletion spheres of every moment-residue code partition the length-(n-1)
// strings, for 2 <= n <= max_n and every residue.
CheckResult check_vt_perfectness(int max_n = 12);

// The group-length of the index-set element of supp(x) equals moment(x) for
// every x of length <= max_n.
CheckResult check_moment_length(int max_n = 8);

// The rank-(n+1) insertion operator with index n + b + (-1)^(b+1) i acts on
// index-set elements exactly as inserting bit b at gap i acts on bit
// strings, for all n <= max_n, all subsets, all (i, b).
CheckResult check_conjugation(int max_n = 6);

// Moment distribution over length-n strings = length distribution over the
// 2^n index-set elements = product of (1 + X^i), as exact polynomials.
CheckResult check_genfun(int max_n = 10);

// Axiom check for the path insertion family (and the drifting-pair variant)
// on every shape with v+h <= max_total: unit steps, constant span, and the
// induced residue modulus S+1 = v+h+2.
CheckResult check_family_axioms_path(int max_total = 8);
CheckResult check_family_axioms_h(int max_total = 8);

// Two-bit path deletion spheres of every inversion-residue code on
// (v+1, h+1) partition the (v, h) paths, for all v+h <= max_total and every
// residue; includes the fixed (2,3,1) instance with its exact codeword and
// sphere sets.
CheckResult check_path_perfectness(int max_total = 9);

// Same for the shuffled codes against balanced adjacent deletions,
// including the fixed (2,2,1) instance.
CheckResult check_bad_perfectness(int max_total = 9);

// Divisor-sum cardinality formulas match enumeration for all residues, up
// to length max_n (moment codes) and max_total (path codes); row sums and
// the fixed spot values are included.
CheckResult check_cardinalities(int max_n = 14, int max_total = 14);

// Closed-form sphere sizes match breadth-first enumeration on `samples`
// fixed-seed random words per (n, t), plus the depth-two path-insertion
// counterexample pair (15, 16) with exact member sets.
CheckResult check_sphere_sizes(int max_n = 8, int max_t = 3, int samples = 20);

// Composition identity: the weighted Catalan-product sum over compositions
// of t into n+1 parts equals binomial(n+2t, t), exactly, for n <= max_n,
// t <= max_t.
CheckResult check_catalan(int max_n = 8, int max_t = 5);

// Every codeword of every implemented code, subjected to every admissible
// single deletion, decodes back exactly: moment codes for n <= max_n, path
// and shuffled codes for v+h <= max_total.
CheckResult check_decoder_roundtrips(int max_n = 12, int max_total = 9);

}  // namespace idweyl
