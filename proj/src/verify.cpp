#include "bsp/verify.hpp"

#include <set>
#include <sstream>

namespace bsp {

namespace {

std::string pair_label(int i, int k) {
  return "{z_" + std::to_string(i) + ",z_" + std::to_string(k) + "}";
}

CheckResult pass(std::string name) { return {std::move(name), "pass", ""}; }
CheckResult fail(std::string name, std::string detail) {
  return {std::move(name), "fail", std::move(detail)};
}
CheckResult skip(std::string name, std::string detail) {
  return {std::move(name), "skip", std::move(detail)};
}

}  // namespace

CheckResult check_jacobi(const BracketTable& t) {
  const int n = t.n;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = j + 1; k <= n; ++k) {
        const Polynomial zi = Polynomial::variable(n, i);
        const Polynomial zj = Polynomial::variable(n, j);
        const Polynomial zk = Polynomial::variable(n, k);
        Polynomial s = poisson_bracket_extend(t.entries, n, zi, t.entry(j, k));
        s += poisson_bracket_extend(t.entries, n, zj, -t.entry(i, k));
        s += poisson_bracket_extend(t.entries, n, zk, t.entry(i, j));
        if (!s.is_zero())
          return fail("jacobi", "triple (" + std::to_string(i) + "," + std::to_string(j) + "," +
                                    std::to_string(k) + "): residue " + to_text(s));
      }
  return pass("jacobi");
}

CheckResult check_weight_homogeneity(const BracketTable& t) {
  for (int i = 1; i <= t.n; ++i)
    for (int k = i + 1; k <= t.n; ++k) {
      const Weight want = t.lambda[i - 1] + t.lambda[k - 1];
      for (const auto& [e, c] : t.entry(i, k).terms()) {
        Weight got = Weight::Zero(t.rs.rank);
        for (int m = 0; m < t.n; ++m)
          if (e[m] != 0) got += e[m] * t.lambda[m];
        if (got != want)
          return fail("homogeneity", pair_label(i, k) + ": monomial with weight mismatch");
      }
    }
  return pass("homogeneity");
}

CheckResult check_ore_shape(const BracketTable& t, const OreData& ore) {
  for (int i = 1; i <= t.n; ++i) {
    const long lii = weight_on_h(t, i, i);
    const long norm = 2L * t.rs.d(t.word.letter(i) - 1);
    const long want = t.gamma.s_at(i) ? -norm : norm;
    if (lii != want)
      return fail("ore", "lambda_" + std::to_string(i) + "(h_" + std::to_string(i) +
                             ") = " + std::to_string(lii) + ", expected " + std::to_string(want));
    for (int k = i + 1; k <= t.n; ++k)
      if (!support_within(ore.b_image(i, k), i + 1, k))
        return fail("ore", pair_label(i, k) + ": b-part leaves C[z_" + std::to_string(i + 1) +
                               "..z_" + std::to_string(k) + "]");
  }
  return pass("ore");
}

CheckResult check_symmetric_cgl(const BracketTable& t, const OreData& ore) {
  if (!t.gamma.is_full()) return skip("cgl", "symmetric CGL shape applies to the full chart only");
  for (int i = 1; i <= t.n; ++i)
    for (int k = i + 1; k <= t.n; ++k) {
      if (!support_within(ore.b_image(i, k), i + 1, k - 1))
        return fail("cgl", pair_label(i, k) + ": b-part leaves C[z_" + std::to_string(i + 1) +
                               "..z_" + std::to_string(k - 1) + "]");
      if (weight_on_h(t, i, k) != weight_on_h(t, k, i))
        return fail("cgl", "lambda pairing not symmetric at (" + std::to_string(i) + "," +
                               std::to_string(k) + ")");
    }
  return pass("cgl");
}

CheckResult check_derivation_axioms(const BracketTable& t, const OreData& ore) {
  const int n = t.n;
  for (int i = 1; i < n; ++i) {
    const Derivation ai = a_derivation(ore, i);
    const Derivation bi = b_derivation(ore, i);
    for (int j = i + 1; j <= n; ++j) {
      const Polynomial zj = Polynomial::variable(n, j);
      for (int l = j + 1; l <= n; ++l) {
        const Polynomial zl = Polynomial::variable(n, l);
        const Polynomial& fjl = t.entry(j, l);
        Polynomial lhs = apply_derivation(ai, fjl);
        Polynomial rhs = poisson_bracket_extend(t.entries, n, ai.image(j), zl) +
                         poisson_bracket_extend(t.entries, n, zj, ai.image(l));
        if (lhs != rhs)
          return fail("axiom-a", "i=" + std::to_string(i) + " on " + pair_label(j, l));
        lhs = apply_derivation(bi, fjl);
        rhs = poisson_bracket_extend(t.entries, n, bi.image(j), zl) +
              poisson_bracket_extend(t.entries, n, zj, bi.image(l)) +
              ai.image(j) * bi.image(l) - bi.image(j) * ai.image(l);
        if (lhs != rhs)
          return fail("axiom-b", "i=" + std::to_string(i) + " on " + pair_label(j, l));
      }
    }
    for (int hj = 1; hj <= t.rs.rank; ++hj) {
      Eigen::VectorXi h = Eigen::VectorXi::Zero(t.rs.rank);
      h(hj - 1) = 1;
      const long li = eval_on_coroot(t.rs, t.lambda[i - 1], h);
      Derivation dh;
      dh.nvars = n;
      for (int m = 1; m <= n; ++m)
        dh.images.push_back(Polynomial::variable(n, m) *
                            mpq_class(eval_on_coroot(t.rs, t.lambda[m - 1], h)));
      for (int k = i + 1; k <= n; ++k) {
        const Polynomial& bik = bi.image(k);
        const long lk = eval_on_coroot(t.rs, t.lambda[k - 1], h);
        Polynomial comm = apply_derivation(dh, bik) - bik * mpq_class(lk);
        if (comm != bik * mpq_class(li))
          return fail("axiom-h",
                      "i=" + std::to_string(i) + ", h index " + std::to_string(hj));
      }
    }
  }
  return pass("axioms");
}

CheckResult check_nilpotent(const BracketTable& t, const OreData& ore, int cap) {
  if (!t.gamma.is_full())
    return skip("nilpotent", "checked on the full chart only; other charts admit "
                             "non-nilpotent b-derivations");
  for (int i = 1; i < t.n; ++i) {
    const Derivation bi = b_derivation(ore, i);
    for (int k = i + 1; k <= t.n; ++k) {
      Polynomial f = Polynomial::variable(t.n, k);
      int steps = 0;
      while (!f.is_zero()) {
        if (++steps > cap)
          return fail("nilpotent", "b_" + std::to_string(i) + " did not kill z_" +
                                       std::to_string(k) + " within " + std::to_string(cap) +
                                       " steps");
        f = apply_derivation(bi, f);
      }
    }
  }
  return pass("nilpotent");
}

bool is_log_canonical(const BracketTable& t) {
  for (int i = 1; i <= t.n; ++i)
    for (int k = i + 1; k <= t.n; ++k) {
      const Polynomial& f = t.entry(i, k);
      if (f.is_zero()) continue;
      if (f.terms().size() != 1) return false;
      const auto& e = f.terms().begin()->first;
      for (int m = 0; m < t.n; ++m) {
        const int want = (m == i - 1 || m == k - 1) ? 1 : 0;
        if (e[m] != want) return false;
      }
    }
  return true;
}

namespace {

// Position of the single reflection when it sits at the last occurrence of
// its letter; 0 otherwise.
int single_late_reflection(const Word& w, const Subexpression& g) {
  int i0 = 0;
  for (int i = 1; i <= w.size(); ++i)
    if (g.s_at(i)) {
      if (i0 != 0) return 0;
      i0 = i;
    }
  if (i0 == 0) return 0;
  for (int j = i0 + 1; j <= w.size(); ++j)
    if (w.letter(j) == w.letter(i0)) return 0;
  return i0;
}

bool all_letters_distinct(const Word& w) {
  std::set<int> s(w.letters.begin(), w.letters.end());
  return static_cast<int>(s.size()) == w.size();
}

}  // namespace

bool predict_log_canonical(const Word& w, const Subexpression& g) {
  bool trivial = true;
  for (int i = 1; i <= w.size(); ++i)
    if (g.s_at(i)) trivial = false;
  if (trivial) return true;
  if (all_letters_distinct(w)) return true;
  return single_late_reflection(w, g) != 0;
}

CheckResult check_log_canonical(const BracketTable& t) {
  const bool detected = is_log_canonical(t);
  const bool predicted = predict_log_canonical(t.word, t.gamma);
  if (predicted && !detected) return fail("logcanonical", "predicted log-canonical chart is not");
  if (!predicted) {
    CheckResult r = pass("logcanonical");
    r.detail = detected ? "log-canonical (no sufficient condition applied)"
                        : "not log-canonical (no sufficient condition applied)";
    return r;
  }

  const RootSystem& rs = t.rs;
  bool trivial = true;
  for (int i = 1; i <= t.n; ++i)
    if (t.gamma.s_at(i)) trivial = false;
  const int i0 = single_late_reflection(t.word, t.gamma);
  for (int i = 1; i <= t.n; ++i)
    for (int k = i + 1; k <= t.n; ++k) {
      const Weight ai = simple_root(rs, t.word.letter(i));
      const Weight ak = simple_root(rs, t.word.letter(k));
      long want = 0;
      bool have_formula = false;
      if (trivial) {
        want = inner(rs, ai, ak);
        have_formula = true;
      } else if (i0 != 0) {
        if (k < i0 || i > i0) {
          want = inner(rs, ai, ak);
          have_formula = true;
        } else if (i <= i0 && i0 <= k) {
          want = inner(rs, ai, reflect_simple(rs, t.word.letter(i0), ak));
          have_formula = true;
        }
      }
      if (!have_formula) continue;
      Polynomial expected(t.n);
      if (want != 0)
        expected = Polynomial::variable(t.n, i) * Polynomial::variable(t.n, k) * mpq_class(want);
      if (t.entry(i, k) != expected)
        return fail("logcanonical",
                    pair_label(i, k) + " = " + to_text(t.entry(i, k)) + ", classification gives " +
                        to_text(expected));
    }
  return pass("logcanonical");
}

CheckResult check_mod2(const BracketTable& t) {
  for (int i = 1; i <= t.n; ++i)
    for (int k = i + 1; k <= t.n; ++k) {
      Polynomial g = t.entry(i, k);
      g -= Polynomial::variable(t.n, i) * Polynomial::variable(t.n, k) *
           mpq_class(t.quad_coeff(i, k));
      if (!is_integral(g) || !reduce_mod(g, 2).is_zero())
        return fail("mod2", pair_label(i, k) + " is not log-canonical mod 2");
    }
  return pass("mod2");
}

CheckResult check_integrality(const BracketTable& t) {
  for (int i = 1; i <= t.n; ++i)
    for (int k = i + 1; k <= t.n; ++k)
      if (!is_integral(t.entry(i, k)))
        return fail("integrality", pair_label(i, k) + " has a non-integer coefficient");
  return pass("integrality");
}

CheckResult check_degree_bounds(const BracketTable& t) {
  bool laced = true;
  for (int j = 0; j < t.rs.rank; ++j)
    if (t.rs.d(j) != 1) laced = false;
  const int interior_cap = laced ? 1 : 3;
  for (int i = 1; i <= t.n; ++i)
    for (int k = i + 1; k <= t.n; ++k) {
      const Polynomial& f = t.entry(i, k);
      if (!support_within(f, i, k))
        return fail("degrees", pair_label(i, k) + " uses variables outside [i,k]");
      if (degree_in(f, i) > 1 || degree_in(f, k) > 2)
        return fail("degrees", pair_label(i, k) + " breaks an endpoint degree bound");
      for (int m = i + 1; m < k; ++m)
        if (degree_in(f, m) > interior_cap)
          return fail("degrees", pair_label(i, k) + " breaks the interior degree bound at z_" +
                                     std::to_string(m));
    }
  return pass("degrees");
}

CheckResult check_engines_agree(const StructureTable& st, const Word& w,
                                const Subexpression& g) {
  for (const auto& beta : st.rs.positive_roots)
    for (int k = 1; k <= w.size(); ++k) {
      if (sigma_closed(st, w, g, beta, 1, k) != sigma_recursive(st, w, g, beta, 1, k))
        return fail("engines", "engines disagree at k=" + std::to_string(k));
    }
  return pass("engines");
}

namespace {

bool tables_equal(const BracketTable& a, const BracketTable& b) {
  if (a.entries != b.entries || a.quad != b.quad) return false;
  for (int i = 0; i < a.n; ++i)
    if (a.lambda[i] != b.lambda[i] || a.h[i] != b.h[i]) return false;
  return true;
}

std::string root_label(const Weight& r) {
  std::string s = "(";
  for (int j = 0; j < r.size(); ++j) {
    if (j) s += ',';
    s += std::to_string(r(j));
  }
  return s + ")";
}

}  // namespace

CheckResult check_basis_independence(const StructureTable& st, const Word& w,
                                     const Subexpression& g) {
  const RootSystem& rs = st.rs;
  std::vector<Weight> non_simple;
  for (const auto& r : rs.positive_roots)
    if (r.sum() > 1) non_simple.push_back(r);
  if (non_simple.empty())
    return skip("basis-independence", "rank-one system has no non-simple root");
  const BracketTable base = bracket_table(st, w, g);
  const BracketTable flipped = bracket_table(rescale_basis(st, non_simple.front(), -1), w, g);
  if (!tables_equal(base, flipped))
    return fail("basis-independence",
                "sign flip at " + root_label(non_simple.front()) + " changed the table");
  const BracketTable scaled = bracket_table(rescale_basis(st, non_simple.back(), 2), w, g);
  if (!tables_equal(base, scaled))
    return fail("basis-independence",
                "rescale by 2 at " + root_label(non_simple.back()) + " changed the table");
  return pass("basis-independence");
}

CheckResult check_c_oracle(const StructureTable& st) {
  const RootSystem& rs = st.rs;
  const int m = rs.num_positive();
  for (int i = 1; i <= rs.rank; ++i) {
    if (!check_translation_identity(st, i))
      return fail("oracle", "translation identity fails at letter " + std::to_string(i));
    const Weight alpha = simple_root(rs, i);
    for (int id = 0; id < 2 * m; ++id) {
      const Weight beta = root_weight(rs, id);
      if (beta == alpha || beta == Weight(-alpha)) continue;
      const RootString s = root_string(rs, alpha, beta);
      for (bool kappa_s : {true, false}) {
        const auto got = ad_group_expand(st, i, beta, kappa_s);
        const int hi = kappa_s ? s.q : s.p;
        if (static_cast<int>(got.size()) != hi + 1)
          return fail("oracle", "expansion length mismatch at letter " + std::to_string(i));
        for (int j = 0; j <= hi; ++j) {
          auto it = got.find(j);
          if (it == got.end() || it->second != c_coeff(st, i, beta, kappa_s, j))
            return fail("oracle", "coefficient mismatch at letter " + std::to_string(i) +
                                      ", j=" + std::to_string(j));
        }
      }
    }
  }
  return pass("oracle");
}

}  // namespace bsp
