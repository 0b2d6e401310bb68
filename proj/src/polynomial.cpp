#include "bsp/polynomial.hpp"

#include <sstream>
#include <stdexcept>

namespace bsp {

Polynomial Polynomial::constant(int nvars, const mpq_class& c) {
  Polynomial p(nvars);
  p.add_term(Exps(nvars, 0), c);
  return p;
}

Polynomial Polynomial::variable(int nvars, int i) {
  if (i < 1 || i > nvars) throw std::invalid_argument("variable index out of range");
  Exps e(nvars, 0);
  e[i - 1] = 1;
  return monomial(nvars, e, 1);
}

Polynomial Polynomial::monomial(int nvars, const Exps& e, const mpq_class& c) {
  if (static_cast<int>(e.size()) != nvars) throw std::invalid_argument("exponent size mismatch");
  Polynomial p(nvars);
  p.add_term(e, c);
  return p;
}

mpq_class Polynomial::coeff(const Exps& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? mpq_class(0) : it->second;
}

void Polynomial::add_term(const Exps& e, const mpq_class& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (nvars_ != o.nvars_) throw std::invalid_argument("nvars mismatch");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (nvars_ != o.nvars_) throw std::invalid_argument("nvars mismatch");
  for (const auto& [e, c] : o.terms_) add_term(e, mpq_class(-c));
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
  if (nvars_ != o.nvars_) throw std::invalid_argument("nvars mismatch");
  Polynomial out(nvars_);
  Exps e(nvars_);
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : o.terms_) {
      for (int m = 0; m < nvars_; ++m) e[m] = ea[m] + eb[m];
      out.add_term(e, ca * cb);
    }
  }
  terms_ = std::move(out.terms_);
  return *this;
}

Polynomial& Polynomial::operator*=(const mpq_class& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial r = a;
  return r *= b;
}
Polynomial operator*(Polynomial a, const mpq_class& c) { return a *= c; }
Polynomial operator-(Polynomial a) { return a *= mpq_class(-1); }

Polynomial derivative(const Polynomial& f, int i) {
  Polynomial out(f.nvars());
  for (const auto& [e, c] : f.terms()) {
    if (e[i - 1] == 0) continue;
    Exps d = e;
    d[i - 1] -= 1;
    out += Polynomial::monomial(f.nvars(), d, c * e[i - 1]);
  }
  return out;
}

bool support_within(const Polynomial& f, int lo, int hi) {
  for (const auto& [e, c] : f.terms())
    for (int m = 0; m < f.nvars(); ++m)
      if (e[m] != 0 && (m + 1 < lo || m + 1 > hi)) return false;
  return true;
}

Polynomial substitute_zero_above(const Polynomial& f, int k) {
  Polynomial out(f.nvars());
  for (const auto& [e, c] : f.terms()) {
    bool keep = true;
    for (int m = k; m < f.nvars(); ++m)
      if (e[m] != 0) {
        keep = false;
        break;
      }
    if (keep) out += Polynomial::monomial(f.nvars(), e, c);
  }
  return out;
}

bool is_integral(const Polynomial& f) {
  for (const auto& [e, c] : f.terms())
    if (c.get_den() != 1) return false;
  return true;
}

Polynomial reduce_mod(const Polynomial& f, unsigned long m) {
  if (!is_integral(f)) throw std::invalid_argument("reduce_mod on non-integral polynomial");
  Polynomial out(f.nvars());
  for (const auto& [e, c] : f.terms()) {
    mpz_class r = c.get_num() % static_cast<long>(m);
    if (r < 0) r += static_cast<long>(m);
    if (r != 0) out += Polynomial::monomial(f.nvars(), e, mpq_class(r));
  }
  return out;
}

int degree_in(const Polynomial& f, int i) {
  int d = 0;
  for (const auto& [e, c] : f.terms()) d = std::max(d, e[i - 1]);
  return d;
}

std::string to_text(const Polynomial& f) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : f.terms()) {
    const bool neg = c < 0;
    mpq_class mag = neg ? mpq_class(-c) : c;
    if (first) {
      if (neg) os << "-";
      first = false;
    } else {
      os << (neg ? " - " : " + ");
    }
    std::string vars;
    for (int m = 0; m < f.nvars(); ++m) {
      if (e[m] == 0) continue;
      if (!vars.empty()) vars += ' ';
      vars += "z_" + std::to_string(m + 1);
      if (e[m] > 1) vars += '^' + std::to_string(e[m]);
    }
    if (vars.empty()) {
      os << mag.get_str();
    } else if (mag == 1) {
      os << vars;
    } else {
      os << mag.get_str() << ' ' << vars;
    }
  }
  return os.str();
}

nlohmann::json terms_to_json(const Polynomial& f) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& [e, c] : f.terms()) {
    nlohmann::json t;
    t["coeff"] = c.get_str();
    t["exps"] = e;
    arr.push_back(std::move(t));
  }
  return arr;
}

Polynomial terms_from_json(int nvars, const nlohmann::json& arr) {
  Polynomial out(nvars);
  for (const auto& t : arr) {
    mpq_class c(t.at("coeff").get<std::string>());
    c.canonicalize();
    Exps e = t.at("exps").get<Exps>();
    if (static_cast<int>(e.size()) != nvars) throw std::invalid_argument("exps size mismatch");
    out += Polynomial::monomial(nvars, e, c);
  }
  return out;
}

Polynomial apply_derivation(const Derivation& d, const Polynomial& f) {
  Polynomial out(f.nvars());
  for (const auto& [e, c] : f.terms()) {
    for (int m = 0; m < f.nvars(); ++m) {
      if (e[m] == 0) continue;
      Exps ex = e;
      ex[m] -= 1;
      out += d.image(m + 1) * Polynomial::monomial(f.nvars(), ex, c * e[m]);
    }
  }
  return out;
}

Polynomial poisson_bracket_extend(const std::vector<Polynomial>& entries, int n,
                                  const Polynomial& f, const Polynomial& g) {
  std::vector<Polynomial> df(n), dg(n);
  std::vector<bool> in_f(n, false), in_g(n, false);
  for (const auto& [e, c] : f.terms())
    for (int m = 0; m < n; ++m)
      if (e[m] != 0) in_f[m] = true;
  for (const auto& [e, c] : g.terms())
    for (int m = 0; m < n; ++m)
      if (e[m] != 0) in_g[m] = true;
  for (int m = 1; m <= n; ++m) {
    if (in_f[m - 1] || in_g[m - 1]) {
      df[m - 1] = derivative(f, m);
      dg[m - 1] = derivative(g, m);
    }
  }
  Polynomial out(n);
  for (int i = 1; i <= n; ++i) {
    for (int k = i + 1; k <= n; ++k) {
      if (!(in_f[i - 1] || in_g[i - 1]) || !(in_f[k - 1] || in_g[k - 1])) continue;
      Polynomial wedge = df[i - 1] * dg[k - 1] - df[k - 1] * dg[i - 1];
      if (wedge.is_zero()) continue;
      out += entries[pair_index(i, k, n)] * wedge;
    }
  }
  return out;
}

}  // namespace bsp
