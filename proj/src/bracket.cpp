#include "bsp/bracket.hpp"

#include <stdexcept>

namespace bsp {

namespace {

void validate_case(const RootSystem& rs, const Word& w, const Subexpression& g) {
  if (g.size() != w.size()) throw std::invalid_argument("gamma length differs from word length");
  for (int i = 1; i <= w.size(); ++i)
    if (w.letter(i) < 1 || w.letter(i) > rs.rank)
      throw std::invalid_argument("word letter outside the rank");
}

void chain_dfs(const StructureTable& st, const Word& w, const Subexpression& g,
               const Weight& target, int k, int l, const Weight& beta, std::vector<int>& j,
               const mpq_class& c, std::vector<ChainTerm>& out) {
  const RootSystem& rs = st.rs;
  if (l == k) {
    if (beta == target) out.push_back({j, c});
    return;
  }
  const int a = w.letter(l);
  const Weight alpha = simple_root(rs, a);
  if (beta == alpha) {
    if (!g.s_at(l)) {  // identity branch only; the reflection kills the chain
      j.push_back(0);
      chain_dfs(st, w, g, target, k, l + 1, beta, j, c, out);
      j.pop_back();
    }
    return;
  }
  Weight cur = g.s_at(l) ? reflect_simple(rs, a, beta) : beta;
  for (int step = 0; is_positive_root(rs, cur); ++step, cur -= alpha) {
    j.push_back(step);
    chain_dfs(st, w, g, target, k, l + 1, cur, j,
              c * c_coeff(st, a, beta, g.s_at(l), step), out);
    j.pop_back();
  }
}

}  // namespace

std::vector<ChainTerm> enumerate_chains(const StructureTable& st, const Word& w,
                                        const Subexpression& g, const Weight& beta, int m,
                                        int k) {
  validate_case(st.rs, w, g);
  if (m < 1 || k > w.size() || m > k) throw std::invalid_argument("bad window");
  std::vector<ChainTerm> out;
  std::vector<int> j;
  chain_dfs(st, w, g, simple_root(st.rs, w.letter(k)), k, m, beta, j, 1, out);
  return out;
}

Polynomial phi(const StructureTable& st, const Word& w, const Subexpression& g, const Weight& beta,
               int m, int k) {
  const int n = w.size();
  Polynomial out(n);
  for (const auto& term : enumerate_chains(st, w, g, beta, m, k)) {
    Exps e(n, 0);
    for (int l = m; l < k; ++l) e[l - 1] = term.j[l - m];
    out += Polynomial::monomial(n, e, term.c);
  }
  return out;
}

Polynomial psi(const StructureTable& st, const Word& w, const Subexpression& g, const Weight& beta,
               int m, int k) {
  const RootSystem& rs = st.rs;
  const int n = w.size();
  Polynomial out(n);
  const Weight mu_k = apply_weyl_range(rs, w, g, m, k, simple_root(rs, w.letter(k)));
  for (int i = m; i < k; ++i) {
    if (g.s_at(i)) continue;
    const Weight mu_i = apply_weyl_range(rs, w, g, m, i, simple_root(rs, w.letter(i)));
    const long num = 2 * inner(rs, mu_i, mu_k);
    const long den = inner(rs, mu_i, mu_i);
    if (num % den != 0) throw std::logic_error("non-integral Cartan quotient");
    if (num == 0) continue;
    out -= phi(st, w, g, beta, m, i) * Polynomial::variable(n, i) * mpq_class(num / den);
  }
  return out;
}

Polynomial sigma_closed(const StructureTable& st, const Word& w, const Subexpression& g,
                        const Weight& beta, int m, int k) {
  const int n = w.size();
  const Polynomial zk = Polynomial::variable(n, k);
  const Polynomial f = phi(st, w, g, beta, m, k);
  const Polynomial p = psi(st, w, g, beta, m, k);
  if (g.s_at(k)) return f + p * zk;
  return -(f * zk * zk) + p * zk;
}

namespace {

// sigma^{(m)} of the Cartan element h (simple-coroot coordinates) applied to
// z_k: scaling by minus the window weight of z_k evaluated at h.
Polynomial sigma_cartan(const StructureTable& st, const Word& w, const Subexpression& g,
                        const Eigen::VectorXi& h, int m, int k) {
  const RootSystem& rs = st.rs;
  const Weight mu = apply_weyl_range(rs, w, g, m, k, simple_root(rs, w.letter(k)));
  const long c = -eval_on_coroot(rs, mu, h);
  Polynomial out(w.size());
  if (c != 0) out += Polynomial::variable(w.size(), k) * mpq_class(c);
  return out;
}

}  // namespace

Polynomial sigma_recursive(const StructureTable& st, const Word& w, const Subexpression& g,
                           const Weight& beta, int m, int k) {
  const RootSystem& rs = st.rs;
  const int n = w.size();
  const int a = w.letter(m);
  const Weight alpha = simple_root(rs, a);
  if (m == k) {
    if (beta != alpha) return Polynomial(n);
    if (g.s_at(m)) return Polynomial::constant(n, 1);
    const Polynomial zk = Polynomial::variable(n, k);
    return -(zk * zk);
  }
  Polynomial out(n);
  const Polynomial zm = Polynomial::variable(n, m);
  if (beta == alpha) {
    if (g.s_at(m)) return out;
    out += sigma_recursive(st, w, g, beta, m + 1, k);
    out += zm * sigma_cartan(st, w, g, coroot(rs, alpha), m + 1, k);
    return out;
  }
  Weight cur = g.s_at(m) ? reflect_simple(rs, a, beta) : beta;
  Polynomial zpow = Polynomial::constant(n, 1);
  for (int step = 0; is_positive_root(rs, cur); ++step, cur -= alpha) {
    out += zpow * sigma_recursive(st, w, g, cur, m + 1, k) *
           c_coeff(st, a, beta, g.s_at(m), step);
    zpow *= zm;
  }
  return out;
}

long quadratic_coeff(const RootSystem& rs, const Word& w, const Subexpression& g, int i, int k) {
  const Weight mi = apply_weyl_prefix(rs, w, g, i, simple_root(rs, w.letter(i)));
  const Weight mk = apply_weyl_prefix(rs, w, g, k, simple_root(rs, w.letter(k)));
  const long v = inner(rs, mi, mk);
  return g.s_at(i) ? -v : v;
}

BracketTable bracket_table(const StructureTable& st, const Word& w, const Subexpression& g) {
  const RootSystem& rs = st.rs;
  validate_case(rs, w, g);
  const int n = w.size();
  BracketTable t;
  t.rs = rs;
  t.word = w;
  t.gamma = g;
  t.n = n;
  t.entries.resize(static_cast<size_t>(n) * (n - 1) / 2, Polynomial(n));
  t.quad.resize(t.entries.size(), 0);
  for (int i = 1; i <= n; ++i) {
    t.lambda.push_back(-apply_weyl_prefix(rs, w, g, i, simple_root(rs, w.letter(i))));
    const Weight x = apply_weyl_prefix(rs, w, g, i - 1, simple_root(rs, w.letter(i)));
    Eigen::VectorXi hi(rs.rank);
    for (int j = 0; j < rs.rank; ++j) hi(j) = -rs.d(j) * x(j);
    t.h.push_back(hi);
  }
  for (int i = 1; i <= n; ++i) {
    const int di = rs.d(w.letter(i) - 1);
    for (int k = i + 1; k <= n; ++k) {
      const long c = quadratic_coeff(rs, w, g, i, k);
      const size_t idx = pair_index(i, k, n);
      t.quad[idx] = c;
      Polynomial f(n);
      if (c != 0) f += Polynomial::variable(n, i) * Polynomial::variable(n, k) * mpq_class(c);
      if (g.s_at(i))
        f -= sigma_closed(st, w, g, simple_root(rs, w.letter(i)), i + 1, k) * mpq_class(2 * di);
      t.entries[idx] = std::move(f);
    }
  }
  return t;
}

long weight_on_h(const BracketTable& t, int k, int i) {
  return eval_on_coroot(t.rs, t.lambda[k - 1], t.h[i - 1]);
}

OreData extract_ore_data(const BracketTable& t) {
  OreData ore;
  ore.n = t.n;
  ore.a.resize(t.entries.size(), 0);
  ore.b.resize(t.entries.size(), Polynomial(t.n));
  for (int i = 1; i <= t.n; ++i) {
    for (int k = i + 1; k <= t.n; ++k) {
      const size_t idx = pair_index(i, k, t.n);
      const long aik = weight_on_h(t, k, i);
      ore.a[idx] = aik;
      Polynomial b = t.entry(i, k);
      if (aik != 0)
        b -= Polynomial::variable(t.n, i) * Polynomial::variable(t.n, k) * mpq_class(aik);
      ore.b[idx] = std::move(b);
    }
  }
  return ore;
}

Derivation b_derivation(const OreData& ore, int i) {
  Derivation d;
  d.nvars = ore.n;
  d.images.assign(ore.n, Polynomial(ore.n));
  for (int k = i + 1; k <= ore.n; ++k) d.images[k - 1] = ore.b_image(i, k);
  return d;
}

Derivation a_derivation(const OreData& ore, int i) {
  Derivation d;
  d.nvars = ore.n;
  d.images.assign(ore.n, Polynomial(ore.n));
  for (int k = i + 1; k <= ore.n; ++k)
    d.images[k - 1] = Polynomial::variable(ore.n, k) * mpq_class(ore.a_scalar(i, k));
  return d;
}

}  // namespace bsp
