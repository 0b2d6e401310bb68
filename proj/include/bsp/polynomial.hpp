#pragma once

#include <gmpxx.h>

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "json.hpp"

namespace bsp {

// Exponent vector, one entry per variable z_1..z_n.
using Exps = std::vector<int>;

// Sparse multivariate polynomial over Q with a canonical term order
// (descending lexicographic on exponent vectors), so iteration order,
// text output and JSON output are all deterministic.
class Polynomial {
 public:
  using TermMap = std::map<Exps, mpq_class, std::greater<Exps>>;

  Polynomial() : nvars_(0) {}
  explicit Polynomial(int nvars) : nvars_(nvars) {}

  static Polynomial constant(int nvars, const mpq_class& c);
  static Polynomial variable(int nvars, int i);  // z_i, 1-based
  static Polynomial monomial(int nvars, const Exps& e, const mpq_class& c);

  [[nodiscard]] int nvars() const { return nvars_; }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] const TermMap& terms() const { return terms_; }
  [[nodiscard]] mpq_class coeff(const Exps& e) const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  Polynomial& operator*=(const mpq_class& c);

  friend bool operator==(const Polynomial& a, const Polynomial& b) = default;

 private:
  void add_term(const Exps& e, const mpq_class& c);

  int nvars_;
  TermMap terms_;
};

Polynomial operator+(Polynomial a, const Polynomial& b);
Polynomial operator-(Polynomial a, const Polynomial& b);
Polynomial operator*(const Polynomial& a, const Polynomial& b);
Polynomial operator*(Polynomial a, const mpq_class& c);
Polynomial operator-(Polynomial a);

Polynomial derivative(const Polynomial& f, int i);  // d/dz_i, 1-based

// True when every variable occurring in f lies in [lo, hi] (1-based, inclusive).
bool support_within(const Polynomial& f, int lo, int hi);

// Drops every term that involves a variable z_j with j > k.  f lies in
// C[z_1..z_k] exactly when this returns f unchanged.
Polynomial substitute_zero_above(const Polynomial& f, int k);

bool is_integral(const Polynomial& f);

// Reduces an integral polynomial coefficient-wise into {0..m-1}.
Polynomial reduce_mod(const Polynomial& f, unsigned long m);

int degree_in(const Polynomial& f, int i);  // max exponent of z_i

// "z_1 z_3 - 2 z_2", terms in descending lexicographic order; "0" when zero.
std::string to_text(const Polynomial& f);

// [{"coeff":"-2","exps":[0,1,0]}, ...] in the canonical term order.
nlohmann::json terms_to_json(const Polynomial& f);
Polynomial terms_from_json(int nvars, const nlohmann::json& arr);

// Derivation of C[z_1..z_n] given by its images on the variables.  Images may
// be left empty for variables the derivation is never applied to.
struct Derivation {
  int nvars = 0;
  std::vector<Polynomial> images;  // images[i-1] = d(z_i)

  [[nodiscard]] const Polynomial& image(int i) const { return images[i - 1]; }
};

Polynomial apply_derivation(const Derivation& d, const Polynomial& f);

// Packed index for an ordered pair 1 <= i < k <= n.
inline int pair_index(int i, int k, int n) {
  return (i - 1) * n - i * (i - 1) / 2 + (k - i - 1);
}

// Biderivation extension of a table of generator brackets {z_i,z_k}
// (entries[pair_index(i,k,n)], i < k) to arbitrary polynomials.
Polynomial poisson_bracket_extend(const std::vector<Polynomial>& entries, int n,
                                  const Polynomial& f, const Polynomial& g);

}  // namespace bsp
