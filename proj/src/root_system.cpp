#include "bsp/root_system.hpp"

#include <algorithm>
#include <stdexcept>

namespace bsp {

namespace {

void validate_type(char type, int rank) {
  const bool ok = (type == 'A' && rank >= 1) || (type == 'B' && rank >= 2) ||
                  (type == 'C' && rank >= 3) || (type == 'D' && rank >= 4) ||
                  (type == 'E' && rank >= 6 && rank <= 8) || (type == 'F' && rank == 4) ||
                  (type == 'G' && rank == 2);
  if (!ok)
    throw std::invalid_argument("invalid type/rank: " + std::string(1, type) +
                                std::to_string(rank));
}

// cartan(i,j) = <alpha_j, alpha_i^vee>; bonds set pairwise per Dynkin diagram.
Eigen::MatrixXi cartan_matrix(char type, int rank) {
  Eigen::MatrixXi a = Eigen::MatrixXi::Identity(rank, rank) * 2;
  auto bond = [&](int i, int j, int aij, int aji) {
    a(i - 1, j - 1) = aij;
    a(j - 1, i - 1) = aji;
  };
  auto chain = [&](int from, int to) {
    for (int i = from; i < to; ++i) bond(i, i + 1, -1, -1);
  };
  switch (type) {
    case 'A':
      chain(1, rank);
      break;
    case 'B':  // alpha_rank short
      chain(1, rank - 1);
      bond(rank - 1, rank, -1, -2);
      break;
    case 'C':  // alpha_rank long
      chain(1, rank - 1);
      bond(rank - 1, rank, -2, -1);
      break;
    case 'D':
      chain(1, rank - 2);
      bond(rank - 2, rank - 1, -1, -1);
      bond(rank - 2, rank, -1, -1);
      break;
    case 'E':  // node 2 attached to node 4; nodes 1,3,4,..,rank form the chain
      bond(1, 3, -1, -1);
      bond(2, 4, -1, -1);
      chain(3, rank);
      break;
    case 'F':  // alpha_1, alpha_2 long
      bond(1, 2, -1, -1);
      bond(2, 3, -1, -2);
      bond(3, 4, -1, -1);
      break;
    case 'G':  // alpha_1 short
      bond(1, 2, -3, -1);
      break;
    default:
      throw std::invalid_argument("unknown type");
  }
  return a;
}

Eigen::VectorXi half_norms(char type, int rank) {
  Eigen::VectorXi d = Eigen::VectorXi::Ones(rank);
  switch (type) {
    case 'B':
      for (int i = 0; i < rank - 1; ++i) d(i) = 2;
      break;
    case 'C':
      d(rank - 1) = 2;
      break;
    case 'F':
      d(0) = d(1) = 2;
      break;
    case 'G':
      d(1) = 3;
      break;
    default:
      break;
  }
  return d;
}

int expected_positive_count(char type, int rank) {
  switch (type) {
    case 'A':
      return rank * (rank + 1) / 2;
    case 'B':
    case 'C':
      return rank * rank;
    case 'D':
      return rank * (rank - 1);
    case 'E':
      return rank == 6 ? 36 : (rank == 7 ? 63 : 120);
    case 'F':
      return 24;
    case 'G':
      return 6;
    default:
      return -1;
  }
}

}  // namespace

RootSystem build_root_system(char type, int rank) {
  validate_type(type, rank);
  RootSystem rs;
  rs.type = type;
  rs.rank = rank;
  rs.cartan = cartan_matrix(type, rank);
  rs.d = half_norms(type, rank);

  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j)
      if (rs.d(i) * rs.cartan(i, j) != rs.d(j) * rs.cartan(j, i))
        throw std::logic_error("Cartan matrix is not symmetrizable");

  // Height-by-height closure: beta + alpha_i is a root iff q = p - <beta,alpha_i^vee> > 0.
  std::map<Weight, int, WeightLess> seen;
  std::vector<Weight> frontier;
  for (int i = 1; i <= rank; ++i) {
    Weight e = Weight::Zero(rank);
    e(i - 1) = 1;
    seen.emplace(e, 1);
    frontier.push_back(e);
  }
  std::vector<Weight> all(frontier);
  while (!frontier.empty()) {
    std::vector<Weight> next;
    for (const auto& beta : frontier) {
      for (int i = 1; i <= rank; ++i) {
        Weight alpha = Weight::Zero(rank);
        alpha(i - 1) = 1;
        if (beta == alpha) continue;
        int p = 0;
        Weight down = beta - alpha;
        while (seen.count(down)) {
          ++p;
          down -= alpha;
        }
        long pair = 0;
        for (int j = 0; j < rank; ++j) pair += rs.cartan(i - 1, j) * beta(j);
        if (p - pair > 0) {
          Weight up = beta + alpha;
          if (seen.emplace(up, 1).second) {
            next.push_back(up);
            all.push_back(up);
          }
        }
      }
    }
    frontier = std::move(next);
  }

  std::sort(all.begin(), all.end(), [](const Weight& a, const Weight& b) {
    int ha = a.sum(), hb = b.sum();
    if (ha != hb) return ha < hb;
    return WeightLess{}(a, b);
  });
  rs.positive_roots = std::move(all);
  for (int t = 0; t < rs.num_positive(); ++t) rs.positive_index.emplace(rs.positive_roots[t], t);

  if (rs.num_positive() != expected_positive_count(type, rank))
    throw std::logic_error("positive-root count mismatch for " + rs.name());
  return rs;
}

Weight simple_root(const RootSystem& rs, int i) {
  Weight e = Weight::Zero(rs.rank);
  e(i - 1) = 1;
  return e;
}

long inner(const RootSystem& rs, const Weight& a, const Weight& b) {
  // <alpha_i, alpha_j> = d_i * cartan(i,j)
  long s = 0;
  for (int i = 0; i < rs.rank; ++i) {
    if (a(i) == 0) continue;
    long row = 0;
    for (int j = 0; j < rs.rank; ++j) row += static_cast<long>(rs.cartan(i, j)) * b(j);
    s += static_cast<long>(a(i)) * rs.d(i) * row;
  }
  return s;
}

long pairing(const RootSystem& rs, const Weight& b, const Weight& a) {
  long num = 2 * inner(rs, b, a);
  long den = inner(rs, a, a);
  if (den == 0 || num % den != 0) throw std::invalid_argument("pairing against a non-root");
  return num / den;
}

Weight reflect_simple(const RootSystem& rs, int i, const Weight& v) {
  long pair = 0;
  for (int j = 0; j < rs.rank; ++j) pair += rs.cartan(i - 1, j) * v(j);
  Weight out = v;
  out(i - 1) -= static_cast<int>(pair);
  return out;
}

bool is_positive_root(const RootSystem& rs, const Weight& v) {
  return rs.positive_index.count(v) != 0;
}

bool is_root(const RootSystem& rs, const Weight& v) {
  return is_positive_root(rs, v) || is_positive_root(rs, Weight(-v));
}

Weight apply_weyl_range(const RootSystem& rs, const Word& w, const Subexpression& g, int m, int i,
                        Weight v) {
  for (int t = i; t >= m; --t)
    if (g.s_at(t)) v = reflect_simple(rs, w.letter(t), v);
  return v;
}

Weight apply_weyl_prefix(const RootSystem& rs, const Word& w, const Subexpression& g, int i,
                         const Weight& v) {
  return apply_weyl_range(rs, w, g, 1, i, v);
}

RootString root_string(const RootSystem& rs, const Weight& alpha, const Weight& beta) {
  if (beta == alpha || beta == Weight(-alpha)) throw std::invalid_argument("beta = ±alpha");
  RootString s{0, 0};
  Weight v = beta - alpha;
  while (is_root(rs, v)) {
    ++s.p;
    v -= alpha;
  }
  v = beta + alpha;
  while (is_root(rs, v)) {
    ++s.q;
    v += alpha;
  }
  return s;
}

RootString root_string_simple(const RootSystem& rs, int i, const Weight& beta) {
  return root_string(rs, simple_root(rs, i), beta);
}

Eigen::VectorXi coroot(const RootSystem& rs, const Weight& x) {
  long dx2 = inner(rs, x, x);
  if (dx2 == 0) throw std::invalid_argument("coroot of a non-root");
  Eigen::VectorXi c(rs.rank);
  for (int j = 0; j < rs.rank; ++j) {
    long num = 2L * x(j) * rs.d(j);
    if (num % dx2 != 0) throw std::logic_error("non-integral coroot");
    c(j) = static_cast<int>(num / dx2);
  }
  return c;
}

long eval_on_coroot(const RootSystem& rs, const Weight& lambda, const Eigen::VectorXi& h) {
  long s = 0;
  for (int j = 0; j < rs.rank; ++j) {
    if (h(j) == 0) continue;
    long pj = 0;
    for (int l = 0; l < rs.rank; ++l) pj += static_cast<long>(rs.cartan(j, l)) * lambda(l);
    s += static_cast<long>(h(j)) * pj;
  }
  return s;
}

}  // namespace bsp
