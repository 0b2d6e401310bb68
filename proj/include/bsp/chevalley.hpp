#pragma once

#include <gmpxx.h>

#include <map>
#include <vector>

#include "bsp/polynomial.hpp"
#include "bsp/root_system.hpp"

namespace bsp {

// Signed-root ids: t in [0, m) is positive_roots[t], t in [m, 2m) is
// -positive_roots[t - m], with m = rs.num_positive().
int root_id(const RootSystem& rs, const Weight& v);
Weight root_weight(const RootSystem& rs, int id);
int negate_id(const RootSystem& rs, int id);

// Structure constants [e_x, e_y] = N_{x,y} e_{x+y} of a fixed Cartan-Weyl
// basis.  `chevalley` marks bases with integral constants |N| = p+1 (the
// standard construction, or a sign flip of it); rescaled bases keep
// [e_a, e_{-a}] = h_a but have rational constants.
struct StructureTable {
  RootSystem rs;
  bool chevalley = true;
  std::vector<mpq_class> n;  // dense (2m)^2, zero where x+y is not a root

  [[nodiscard]] const mpq_class& constant(int idx, int idy) const {
    return n[static_cast<size_t>(idx) * rs.num_positive() * 2 + idy];
  }
};

// Standard basis: on each extraspecial pair the constant is +(p+1); all other
// constants follow from the bilinear-form identities, inductively by height.
StructureTable build_chevalley(const RootSystem& rs);

// New basis with e_beta -> factor * e_beta, e_{-beta} -> factor^{-1} * e_{-beta}.
StructureTable rescale_basis(const StructureTable& st, const Weight& beta,
                             const mpq_class& factor);

// N_{x,y}; zero when x+y is not a root.
mpq_class structure_constant(const StructureTable& st, const Weight& x, const Weight& y);

// eps_j = (j+1)/N_{alpha, beta-(p-j)alpha} for j = 0..p+q-1, alpha = alpha_i.
std::vector<mpq_class> epsilon_seq(const StructureTable& st, int i, const Weight& beta);

// One-parameter expansion coefficient c^{kappa,j}_{alpha_i,beta}; kappa is the
// reflection when kappa_s, the identity otherwise.  j ranges over 0..q for the
// reflection and 0..p for the identity; beta = alpha_i admits only the
// identity with j = 0 (value 1).
mpq_class c_coeff(const StructureTable& st, int i, const Weight& beta, bool kappa_s, int j);

// Lie-algebra element with polynomial coefficients; basis index j < rank is
// h_{alpha_{j+1}}, index rank + id is e_{root id}.
using LieElement = std::map<int, Polynomial>;

LieElement lie_basis_e(const StructureTable& st, int id, int nvars);
LieElement ad_e(const StructureTable& st, int id, const LieElement& v);

// exp(scalar * ad e_{id}) applied to v; scalar is any polynomial, the series
// terminates because ad e_{id} is nilpotent on the adjoint representation.
LieElement ad_exp(const StructureTable& st, int id, const Polynomial& scalar, LieElement v);

// Conjugation by the rank-one Weyl representative built from the two
// opposite one-parameter subgroups at parameters -1, 1, -1 (inverse element).
LieElement ad_weyl_rep_inverse(const StructureTable& st, int i, LieElement v);
LieElement ad_weyl_rep(const StructureTable& st, int i, LieElement v);

// Group-side expansion of Ad_{p(t)^{-1}} e_beta where p(t) is the chart
// factor at a letter alpha_i with or without the reflection; returns the
// coefficient of e_{kappa(beta) - j*alpha_i} for each admissible j.
std::map<int, mpq_class> ad_group_expand(const StructureTable& st, int i, const Weight& beta,
                                         bool kappa_s);

// Translation identity u(t) * (u(z) * rep) = u(t+z) * rep on the adjoint
// representation, checked symbolically in t, z on every basis vector.
bool check_translation_identity(const StructureTable& st, int i);

}  // namespace bsp
