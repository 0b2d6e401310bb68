#pragma once

#include <string>
#include <vector>

#include "bsp/bracket.hpp"

namespace bsp {

struct CheckResult {
  std::string name;
  std::string status;  // "pass" | "fail" | "skip"
  std::string detail;  // counterexample or skip reason, empty on plain pass

  [[nodiscard]] bool passed() const { return status != "fail"; }
};

// Cyclic Jacobi sum on every generator triple, via the biderivation extension.
CheckResult check_jacobi(const BracketTable& t);

// Every monomial of {z_i,z_k} carries torus weight lambda_i + lambda_k.
CheckResult check_weight_homogeneity(const BracketTable& t);

// {z_i,-} = z_i a_i + b_i with b_i(z_k) in C[z_{i+1}..z_k] and
// lambda_i(h_i) = ±<alpha_i,alpha_i> != 0.
CheckResult check_ore_shape(const BracketTable& t, const OreData& ore);

// Full chart only: b_i(z_k) in C[z_{i+1}..z_{k-1}] and the symmetry
// lambda_i(h_k) = lambda_k(h_i), which also covers the reversed Ore data
// b'_k(z_i) = b_i(z_k).
CheckResult check_symmetric_cgl(const BracketTable& t, const OreData& ore);

// a_i is a Poisson derivation, b_i satisfies the twisted Leibniz rule, and
// [d_h, b_i] = lambda_i(h) b_i; checked on all generator pairs, which
// suffices by bilinearity and the Leibniz rule built into the extension.
CheckResult check_derivation_axioms(const BracketTable& t, const OreData& ore);

// Full chart only: every b_i kills each generator within `cap` applications.
CheckResult check_nilpotent(const BracketTable& t, const OreData& ore, int cap = 64);

bool is_log_canonical(const BracketTable& t);
// Sufficient conditions: trivial chart; all letters distinct; single
// reflection sitting at the last occurrence of its letter.
bool predict_log_canonical(const Word& w, const Subexpression& g);
// Detector vs. prediction, with exact coefficient formulas where predicted.
CheckResult check_log_canonical(const BracketTable& t);

// {z_i,z_k} minus its z_i z_k term vanishes coefficient-wise mod 2.
CheckResult check_mod2(const BracketTable& t);

CheckResult check_integrality(const BracketTable& t);

// Per-variable degrees: z_i at most 1, z_k at most 2, interior variables at
// most 3 (at most 1 when all roots share one length).
CheckResult check_degree_bounds(const BracketTable& t);

// Both sigma engines produce identical polynomials for every positive root
// and every target position.
CheckResult check_engines_agree(const StructureTable& st, const Word& w, const Subexpression& g);

// The table is unchanged under a sign flip and under a non-unit rescale of a
// non-simple root vector pair.
CheckResult check_basis_independence(const StructureTable& st, const Word& w,
                                     const Subexpression& g);

// Group-side expansion oracle agreement for every admissible (i, beta, kappa),
// plus the symbolic translation identity for each rank-one representative.
CheckResult check_c_oracle(const StructureTable& st);

}  // namespace bsp
