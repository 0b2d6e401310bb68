#pragma once

#include <vector>

#include "bsp/chevalley.hpp"
#include "bsp/polynomial.hpp"
#include "bsp/root_system.hpp"

namespace bsp {

// One admissible chain: exponents j_m..j_{k-1} over the window positions and
// the product of expansion coefficients along the chain.
struct ChainTerm {
  std::vector<int> j;
  mpq_class c;
};

// All chains for the window [m, k]: starting from beta, position l maps the
// running root through gamma_l and down j_l steps along alpha_{w_l}, staying
// inside the positive roots, and must land on alpha_{w_k} after position k-1.
// A running root equal to alpha_{w_l} continues only through the identity
// branch (j_l = 0, factor 1) and dies under the reflection.
std::vector<ChainTerm> enumerate_chains(const StructureTable& st, const Word& w,
                                        const Subexpression& g, const Weight& beta, int m, int k);

// Chain generating function phi for the window [m, k]; polynomial in the
// global variables z_m..z_{k-1} (nvars = w.size()).
Polynomial phi(const StructureTable& st, const Word& w, const Subexpression& g, const Weight& beta,
               int m, int k);

// Torus correction psi: weighted sum of truncated phis over the identity
// positions of the window.
Polynomial psi(const StructureTable& st, const Word& w, const Subexpression& g, const Weight& beta,
               int m, int k);

// Hamiltonian coefficient sigma^{(m)}_{e_beta}(z_k), closed form:
// phi + psi z_k on a reflection letter, -phi z_k^2 + psi z_k on an identity.
Polynomial sigma_closed(const StructureTable& st, const Word& w, const Subexpression& g,
                        const Weight& beta, int m, int k);

// Independent engine: the same coefficient by direct recursion on the first
// window letter, with the Cartan branch handled explicitly.
Polynomial sigma_recursive(const StructureTable& st, const Word& w, const Subexpression& g,
                           const Weight& beta, int m, int k);

// Signed coefficient of z_i z_k in {z_i, z_k}: the prefix-twisted inner
// product, positive on identity letters and negated on reflections.
long quadratic_coeff(const RootSystem& rs, const Word& w, const Subexpression& g, int i, int k);

struct BracketTable {
  RootSystem rs;
  Word word;
  Subexpression gamma;
  int n = 0;
  std::vector<Polynomial> entries;         // pair_index(i,k,n) -> {z_i,z_k}
  std::vector<long> quad;                  // coefficient of z_i z_k per pair
  std::vector<Weight> lambda;              // torus weight of z_i (index i-1)
  std::vector<Eigen::VectorXi> h;          // distinguished coroot-lattice element per position

  [[nodiscard]] const Polynomial& entry(int i, int k) const {
    return entries[pair_index(i, k, n)];
  }
  [[nodiscard]] long quad_coeff(int i, int k) const { return quad[pair_index(i, k, n)]; }
};

BracketTable bracket_table(const StructureTable& st, const Word& w, const Subexpression& g);

// lambda_k(h_i) for the table's weights and coroot elements.
long weight_on_h(const BracketTable& t, int k, int i);

// Ore presentation data: {z_i, f} = z_i a_i(f) + b_i(f) on C[z_{i+1}..z_n].
struct OreData {
  int n = 0;
  // a[pair_index(i,k,n)] = a_i(z_k)/z_k = lambda_k(h_i), for i < k
  std::vector<long> a;
  // b[pair_index(i,k,n)] = b_i(z_k), for i < k
  std::vector<Polynomial> b;

  [[nodiscard]] long a_scalar(int i, int k) const { return a[pair_index(i, k, n)]; }
  [[nodiscard]] const Polynomial& b_image(int i, int k) const {
    return b[pair_index(i, k, n)];
  }
};

OreData extract_ore_data(const BracketTable& t);

// b_i as a derivation of C[z_1..z_n] (images vanish at positions <= i).
Derivation b_derivation(const OreData& ore, int i);
// a_i likewise.
Derivation a_derivation(const OreData& ore, int i);

}  // namespace bsp
