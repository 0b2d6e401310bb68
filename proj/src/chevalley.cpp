#include "bsp/chevalley.hpp"

#include <stdexcept>

namespace bsp {

namespace {

long binom(int a, int b) {
  if (b < 0 || b > a) return 0;
  long r = 1;
  for (int t = 1; t <= b; ++t) r = r * (a - b + t) / t;
  return r;
}

}  // namespace

int root_id(const RootSystem& rs, const Weight& v) {
  auto it = rs.positive_index.find(v);
  if (it != rs.positive_index.end()) return it->second;
  it = rs.positive_index.find(Weight(-v));
  if (it != rs.positive_index.end()) return rs.num_positive() + it->second;
  throw std::invalid_argument("not a root");
}

Weight root_weight(const RootSystem& rs, int id) {
  const int m = rs.num_positive();
  return id < m ? rs.positive_roots[id] : Weight(-rs.positive_roots[id - m]);
}

int negate_id(const RootSystem& rs, int id) {
  const int m = rs.num_positive();
  return id < m ? id + m : id - m;
}

namespace {

class Builder {
 public:
  explicit Builder(const RootSystem& rs) : rs_(rs), m_(rs.num_positive()), n_(4L * m_ * m_, 0) {}

  StructureTable run() {
    for (int t = 0; t < m_; ++t) {
      if (rs_.positive_roots[t].sum() < 2) continue;
      fill_sum(t);
    }
    for (int x = 0; x < 2 * m_; ++x)
      for (int y = 0; y < 2 * m_; ++y) {
        if (x < m_ && y < m_) continue;
        Weight s = root_weight(rs_, x) + root_weight(rs_, y);
        if (is_root(rs_, s)) at(x, y) = general(x, y);
      }
    verify();
    return StructureTable{rs_, true, std::move(n_)};
  }

 private:
  mpq_class& at(int x, int y) { return n_[static_cast<size_t>(x) * 2 * m_ + y]; }

  // Positive special pairs only, valid once both entries are filled.
  mpq_class pos(int a, int b) const { return n_[static_cast<size_t>(a) * 2 * m_ + b]; }

  // N_{x,y} for arbitrary sign ids, assuming positive pairs of lower sum
  // height are already filled; single reduction step through the two-term
  // bilinear identity on x + y + (-(x+y)) = 0.
  mpq_class general(int x, int y) const {
    Weight wx = root_weight(rs_, x), wy = root_weight(rs_, y);
    if (x < m_ && y < m_) return pos(x, y);
    if (x >= m_ && y >= m_) return -pos(x - m_, y - m_);
    if (x >= m_) return -general(y, x);
    // x = rho positive, y = -nu negative
    const int rho = x, nu = y - m_;
    Weight wrho = wx, wnu = rs_.positive_roots[nu];
    Weight diff = wrho - wnu;
    if (is_positive_root(rs_, diff)) {
      int mu = rs_.positive_index.at(diff);
      return mpq_class(inner(rs_, diff, diff)) / inner(rs_, wrho, wrho) * -pos(nu, mu);
    }
    Weight diff2 = wnu - wrho;
    int mu = rs_.positive_index.at(diff2);
    return mpq_class(inner(rs_, diff2, diff2)) / inner(rs_, wnu, wnu) * pos(mu, rho);
  }

  void fill_sum(int t) {
    const Weight xi = rs_.positive_roots[t];
    std::vector<std::pair<int, int>> pairs;
    for (int a = 0; a < t; ++a) {
      Weight eta = xi - rs_.positive_roots[a];
      auto it = rs_.positive_index.find(eta);
      if (it != rs_.positive_index.end() && a < it->second) pairs.emplace_back(a, it->second);
    }
    if (pairs.empty()) throw std::logic_error("no decomposition of a non-simple root");

    const auto [eps, eta] = pairs.front();  // extraspecial: minimal first member
    RootString s = root_string(rs_, rs_.positive_roots[eps], rs_.positive_roots[eta]);
    at(eps, eta) = s.p + 1;
    at(eta, eps) = -(s.p + 1);

    const Weight weps = rs_.positive_roots[eps], weta = rs_.positive_roots[eta];
    const long xi2 = inner(rs_, xi, xi);
    for (size_t idx = 1; idx < pairs.size(); ++idx) {
      const auto [a, b] = pairs[idx];
      const Weight wa = rs_.positive_roots[a], wb = rs_.positive_roots[b];
      mpq_class acc = 0;
      Weight d1 = weps - wa;  // (eps, -a) and (-b, eta) legs
      if (is_root(rs_, d1))
        acc += general(eps, m_ + a) * general(m_ + b, eta) / inner(rs_, d1, d1);
      Weight d2 = weps - wb;  // (-b, eps) and (-a, eta) legs
      if (is_root(rs_, d2))
        acc += general(m_ + b, eps) * general(m_ + a, eta) / inner(rs_, d2, d2);
      mpq_class nab = acc * xi2 / pos(eps, eta);
      at(a, b) = nab;
      at(b, a) = -nab;
    }
  }

  void verify() const {
    for (int x = 0; x < 2 * m_; ++x) {
      const Weight wx = root_weight(rs_, x);
      for (int y = 0; y < 2 * m_; ++y) {
        const Weight wy = root_weight(rs_, y);
        Weight s = wx + wy;
        const mpq_class& nxy = n_[static_cast<size_t>(x) * 2 * m_ + y];
        if (!is_root(rs_, s)) {
          if (nxy != 0) throw std::logic_error("nonzero constant on a non-root sum");
          continue;
        }
        RootString str = root_string(rs_, wx, wy);
        if (nxy != str.p + 1 && nxy != -(str.p + 1))
          throw std::logic_error("constant magnitude differs from p+1");
        if (n_[static_cast<size_t>(y) * 2 * m_ + x] != -nxy)
          throw std::logic_error("constants not antisymmetric");
        int nx = x < m_ ? x + m_ : x - m_, ny = y < m_ ? y + m_ : y - m_;
        if (n_[static_cast<size_t>(nx) * 2 * m_ + ny] != -nxy)
          throw std::logic_error("opposite-pair sign rule violated");
        // x + y + z = 0 forces N_{x,y}/<z,z> = N_{y,z}/<x,x> = N_{z,x}/<y,y>.
        int z = negate_id(rs_, root_id(rs_, s));
        const Weight wz = root_weight(rs_, z);
        mpq_class r1 = nxy / inner(rs_, wz, wz);
        mpq_class r2 = n_[static_cast<size_t>(y) * 2 * m_ + z] / inner(rs_, wx, wx);
        mpq_class r3 = n_[static_cast<size_t>(z) * 2 * m_ + x] / inner(rs_, wy, wy);
        if (r1 != r2 || r1 != r3) throw std::logic_error("triple identity violated");
      }
    }
  }

  const RootSystem& rs_;
  int m_;
  std::vector<mpq_class> n_;
};

}  // namespace

StructureTable build_chevalley(const RootSystem& rs) { return Builder(rs).run(); }

StructureTable rescale_basis(const StructureTable& st, const Weight& beta,
                             const mpq_class& factor) {
  if (factor == 0) throw std::invalid_argument("zero rescale factor");
  const RootSystem& rs = st.rs;
  const int m = rs.num_positive();
  const int bid = root_id(rs, beta);
  auto scale_of = [&](int id) -> mpq_class {
    if (id == bid) return factor;
    if (id == negate_id(rs, bid)) return 1 / factor;
    return 1;
  };
  StructureTable out = st;
  out.chevalley = st.chevalley && (factor == 1 || factor == -1);
  for (int x = 0; x < 2 * m; ++x)
    for (int y = 0; y < 2 * m; ++y) {
      mpq_class& v = out.n[static_cast<size_t>(x) * 2 * m + y];
      if (v == 0) continue;
      Weight s = root_weight(rs, x) + root_weight(rs, y);
      v *= scale_of(x) * scale_of(y) / scale_of(root_id(rs, s));
    }
  return out;
}

mpq_class structure_constant(const StructureTable& st, const Weight& x, const Weight& y) {
  if (!is_root(st.rs, Weight(x + y))) return 0;
  return st.constant(root_id(st.rs, x), root_id(st.rs, y));
}

std::vector<mpq_class> epsilon_seq(const StructureTable& st, int i, const Weight& beta) {
  const Weight alpha = simple_root(st.rs, i);
  RootString s = root_string(st.rs, alpha, beta);
  std::vector<mpq_class> eps;
  eps.reserve(s.p + s.q);
  for (int j = 0; j < s.p + s.q; ++j) {
    Weight b = beta - (s.p - j) * alpha;
    mpq_class n = structure_constant(st, alpha, b);
    if (n == 0) throw std::logic_error("vanishing constant inside a root string");
    eps.push_back(mpq_class(j + 1) / n);
    if (st.chevalley && eps.back() != 1 && eps.back() != -1)
      throw std::logic_error("string coefficient is not a sign");
  }
  return eps;
}

mpq_class c_coeff(const StructureTable& st, int i, const Weight& beta, bool kappa_s, int j) {
  const Weight alpha = simple_root(st.rs, i);
  if (beta == alpha) {
    if (!kappa_s && j == 0) return 1;
    throw std::invalid_argument("beta = alpha admits only the identity at j = 0");
  }
  if (beta == Weight(-alpha)) throw std::invalid_argument("beta = -alpha");
  RootString s = root_string(st.rs, alpha, beta);
  auto eps = epsilon_seq(st, i, beta);
  auto prod = [&](int lo, int hi) {  // eps_lo * ... * eps_hi, empty when hi < lo
    mpq_class r = 1;
    for (int t = lo; t <= hi; ++t) r *= eps[t];
    return r;
  };
  if (kappa_s) {
    if (j < 0 || j > s.q) throw std::invalid_argument("j outside 0..q");
    mpq_class r = prod(0, s.p - 1) / prod(0, s.q - j - 1) * binom(s.p + j, j);
    return s.p % 2 == 0 ? r : mpq_class(-r);
  }
  if (j < 0 || j > s.p) throw std::invalid_argument("j outside 0..p");
  mpq_class r = prod(s.p - j, s.p - 1) * binom(s.q + j, j);
  return j % 2 == 0 ? r : mpq_class(-r);
}

LieElement lie_basis_e(const StructureTable& st, int id, int nvars) {
  return {{st.rs.rank + id, Polynomial::constant(nvars, 1)}};
}

LieElement ad_e(const StructureTable& st, int id, const LieElement& v) {
  const RootSystem& rs = st.rs;
  const int r = rs.rank;
  const Weight wx = root_weight(rs, id);
  LieElement out;
  auto add = [&](int key, const Polynomial& p) {
    auto [it, inserted] = out.emplace(key, p);
    if (!inserted) {
      it->second += p;
      if (it->second.is_zero()) out.erase(it);
    }
  };
  for (const auto& [key, poly] : v) {
    if (key < r) {
      // [e_x, h_j] = -<x, alpha_j^vee> e_x
      long c = -pairing(rs, wx, simple_root(rs, key + 1));
      if (c != 0) add(r + id, poly * mpq_class(c));
      continue;
    }
    const int yid = key - r;
    if (yid == negate_id(rs, id)) {
      Eigen::VectorXi h = coroot(rs, wx);
      for (int jj = 0; jj < r; ++jj)
        if (h(jj) != 0) add(jj, poly * mpq_class(h(jj)));
      continue;
    }
    const Weight wy = root_weight(rs, yid);
    Weight s = wx + wy;
    if (!is_root(rs, s)) continue;
    add(r + root_id(rs, s), poly * st.constant(id, yid));
  }
  return out;
}

LieElement ad_exp(const StructureTable& st, int id, const Polynomial& scalar, LieElement v) {
  LieElement out = v;
  LieElement cur = std::move(v);
  for (int m = 1; !cur.empty(); ++m) {
    if (m > 12) throw std::logic_error("ad series failed to terminate");
    cur = ad_e(st, id, cur);
    for (auto& [key, poly] : cur) {
      poly *= scalar;
      poly *= mpq_class(1, m);
    }
    for (auto it = cur.begin(); it != cur.end();) {
      if (it->second.is_zero()) {
        it = cur.erase(it);
        continue;
      }
      auto [oit, inserted] = out.emplace(it->first, it->second);
      if (!inserted) {
        oit->second += it->second;
        if (oit->second.is_zero()) out.erase(oit);
      }
      ++it;
    }
  }
  return out;
}

LieElement ad_weyl_rep_inverse(const StructureTable& st, int i, LieElement v) {
  const int pos = root_id(st.rs, simple_root(st.rs, i));
  const int neg = negate_id(st.rs, pos);
  const int nv = v.empty() ? 0 : v.begin()->second.nvars();
  const Polynomial one = Polynomial::constant(nv, 1);
  v = ad_exp(st, pos, one, std::move(v));
  v = ad_exp(st, neg, -one, std::move(v));
  v = ad_exp(st, pos, one, std::move(v));
  return v;
}

LieElement ad_weyl_rep(const StructureTable& st, int i, LieElement v) {
  const int pos = root_id(st.rs, simple_root(st.rs, i));
  const int neg = negate_id(st.rs, pos);
  const int nv = v.empty() ? 0 : v.begin()->second.nvars();
  const Polynomial one = Polynomial::constant(nv, 1);
  v = ad_exp(st, pos, -one, std::move(v));
  v = ad_exp(st, neg, one, std::move(v));
  v = ad_exp(st, pos, -one, std::move(v));
  return v;
}

std::map<int, mpq_class> ad_group_expand(const StructureTable& st, int i, const Weight& beta,
                                         bool kappa_s) {
  const RootSystem& rs = st.rs;
  const Weight alpha = simple_root(rs, i);
  const int pos = root_id(rs, alpha);
  const int neg = negate_id(rs, pos);
  const Polynomial t = Polynomial::variable(1, 1);
  LieElement v = lie_basis_e(st, root_id(rs, beta), 1);
  Weight kb;
  if (kappa_s) {
    // chart factor u_{alpha}(t) * rep; its inverse acts by u(-t) first, then rep^{-1}
    v = ad_exp(st, pos, -t, std::move(v));
    v = ad_weyl_rep_inverse(st, i, std::move(v));
    kb = reflect_simple(rs, i, beta);
  } else {
    v = ad_exp(st, neg, -t, std::move(v));
    kb = beta;
  }
  std::map<int, mpq_class> out;
  for (const auto& [key, poly] : v) {
    if (key < rs.rank) throw std::logic_error("Cartan component in a root-vector expansion");
    Weight w = root_weight(rs, key - rs.rank);
    Weight diff = kb - w;
    int j = -1;
    for (int l = 0; l < rs.rank; ++l) {
      if (alpha(l) == 0) {
        if (diff(l) != 0) throw std::logic_error("expansion outside the string");
      } else {
        j = diff(l) / alpha(l);
      }
    }
    if (j < 0 || w != Weight(kb - j * alpha)) throw std::logic_error("expansion outside the string");
    if (poly.terms().size() != 1) throw std::logic_error("non-monomial expansion coefficient");
    const auto& [e, c] = *poly.terms().begin();
    if (e[0] != j) throw std::logic_error("coefficient degree differs from string step");
    out.emplace(j, c);
  }
  return out;
}

bool check_translation_identity(const StructureTable& st, int i) {
  const RootSystem& rs = st.rs;
  const int pos = root_id(rs, simple_root(rs, i));
  const Polynomial t = Polynomial::variable(2, 1), z = Polynomial::variable(2, 2);
  const int dim = rs.rank + 2 * rs.num_positive();
  for (int b = 0; b < dim; ++b) {
    LieElement v;
    v.emplace(b, Polynomial::constant(2, 1));
    LieElement w = ad_weyl_rep(st, i, v);
    LieElement lhs = ad_exp(st, pos, t, ad_exp(st, pos, z, w));
    LieElement rhs = ad_exp(st, pos, t + z, w);
    if (lhs != rhs) return false;
  }
  return true;
}

}  // namespace bsp
