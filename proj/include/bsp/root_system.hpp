#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace bsp {

// Lattice vector in the simple-root basis.
using Weight = Eigen::VectorXi;

struct WeightLess {
  bool operator()(const Weight& a, const Weight& b) const {
    return std::lexicographical_compare(a.data(), a.data() + a.size(), b.data(),
                                        b.data() + b.size());
  }
};

// Word of simple reflections, letters are 1-based simple-root indices.
struct Word {
  std::vector<int> letters;

  [[nodiscard]] int size() const { return static_cast<int>(letters.size()); }
  [[nodiscard]] int letter(int i) const { return letters[i - 1]; }  // 1-based
};

// One bit per word position: 1 takes the reflection, 0 takes the identity.
struct Subexpression {
  std::vector<std::uint8_t> bits;

  [[nodiscard]] int size() const { return static_cast<int>(bits.size()); }
  [[nodiscard]] bool s_at(int i) const { return bits[i - 1] != 0; }  // 1-based

  static Subexpression full(int n) { return {std::vector<std::uint8_t>(n, 1)}; }
  static Subexpression trivial(int n) { return {std::vector<std::uint8_t>(n, 0)}; }
  [[nodiscard]] bool is_full() const {
    for (auto b : bits)
      if (!b) return false;
    return true;
  }
};

struct RootSystem {
  char type = 0;  // 'A'..'G'
  int rank = 0;
  // cartan(i,j) = <alpha_j, alpha_i^vee>, 0-based storage for 1-based indices.
  Eigen::MatrixXi cartan;
  // d(i) = <alpha_i,alpha_i>/2 in the normalization where short roots have norm 2.
  Eigen::VectorXi d;
  std::vector<Weight> positive_roots;  // sorted by height, then lexicographically
  std::map<Weight, int, WeightLess> positive_index;

  [[nodiscard]] int num_positive() const { return static_cast<int>(positive_roots.size()); }
  [[nodiscard]] std::string name() const { return std::string(1, type) + std::to_string(rank); }
};

// Valid ranks: A n>=1, B n>=2, C n>=3, D n>=4, E 6..8, F 4, G 2.
RootSystem build_root_system(char type, int rank);

Weight simple_root(const RootSystem& rs, int i);

// W-invariant symmetric form with short-root norm 2; integral on the lattice.
long inner(const RootSystem& rs, const Weight& a, const Weight& b);

// <b, a^vee> = 2<b,a>/<a,a> for a root `a`.
long pairing(const RootSystem& rs, const Weight& b, const Weight& a);

Weight reflect_simple(const RootSystem& rs, int i, const Weight& v);  // s_i(v)

bool is_positive_root(const RootSystem& rs, const Weight& v);
bool is_root(const RootSystem& rs, const Weight& v);

// gamma_m ... gamma_i applied to v right-to-left (gamma_i first); 1-based,
// inclusive window [m, i]; empty when i < m.
Weight apply_weyl_range(const RootSystem& rs, const Word& w, const Subexpression& g, int m, int i,
                        Weight v);

// gamma^i = gamma_1 ... gamma_i.
Weight apply_weyl_prefix(const RootSystem& rs, const Word& w, const Subexpression& g, int i,
                         const Weight& v);

struct RootString {
  int p;  // max j with beta - j*alpha a root
  int q;  // max j with beta + j*alpha a root
};

// alpha-string through beta for roots alpha, beta, beta != ±alpha.
RootString root_string(const RootSystem& rs, const Weight& alpha, const Weight& beta);
RootString root_string_simple(const RootSystem& rs, int i, const Weight& beta);

// Coroot of the root x in the simple-coroot basis (always integral).
Eigen::VectorXi coroot(const RootSystem& rs, const Weight& x);

// lambda(h) for h in the coroot lattice (simple-coroot coordinates).
long eval_on_coroot(const RootSystem& rs, const Weight& lambda, const Eigen::VectorXi& h);

}  // namespace bsp
