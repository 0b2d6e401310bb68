#include "bsp/cli.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <sstream>
#include <thread>

#include "json.hpp"

namespace bsp {

namespace {

std::string gamma_string(const Subexpression& g) {
  std::string s;
  for (auto b : g.bits) s += b ? '1' : '0';
  return s;
}

std::vector<CheckResult> run_chart_checks(const StructureTable& st, const BracketTable& t,
                                          const std::vector<std::string>& names,
                                          const CheckResult* oracle_cached) {
  std::vector<CheckResult> out;
  auto wants = [&](const std::string& n) {
    return std::find(names.begin(), names.end(), n) != names.end();
  };
  const OreData ore = extract_ore_data(t);
  for (const auto& name : kCheckNames) {
    if (!wants(name)) continue;
    if (name == "engines")
      out.push_back(check_engines_agree(st, t.word, t.gamma));
    else if (name == "oracle")
      out.push_back(*oracle_cached);
    else if (name == "jacobi")
      out.push_back(check_jacobi(t));
    else if (name == "homogeneity")
      out.push_back(check_weight_homogeneity(t));
    else if (name == "ore")
      out.push_back(check_ore_shape(t, ore));
    else if (name == "cgl")
      out.push_back(check_symmetric_cgl(t, ore));
    else if (name == "nilpotent")
      out.push_back(check_nilpotent(t, ore));
    else if (name == "logcanonical")
      out.push_back(check_log_canonical(t));
    else if (name == "mod2")
      out.push_back(check_mod2(t));
    else if (name == "basis-independence")
      out.push_back(check_basis_independence(st, t.word, t.gamma));
  }
  return out;
}

std::string chart_text(const JobSpec& job, const BracketTable& t,
                       const std::vector<CheckResult>& checks) {
  std::ostringstream os;
  os << "type: " << job.type << job.rank << "\n";
  os << "word: ";
  for (int i = 1; i <= t.n; ++i) os << (i > 1 ? "," : "") << t.word.letter(i);
  os << "\n";
  os << "gamma: " << gamma_string(t.gamma) << "\n";
  if (job.mod) os << "mod: " << *job.mod << "\n";
  for (int i = 1; i <= t.n; ++i)
    for (int k = i + 1; k <= t.n; ++k) {
      Polynomial f = t.entry(i, k);
      if (job.mod) f = reduce_mod(f, *job.mod);
      os << "{z_" << i << ",z_" << k << "} = " << to_text(f) << "\n";
    }
  for (const auto& c : checks) {
    os << "check " << c.name << ": " << c.status;
    if (!c.detail.empty()) os << " (" << c.detail << ")";
    os << "\n";
  }
  return os.str();
}

nlohmann::ordered_json chart_json(const JobSpec& job, const BracketTable& t,
                                  const std::vector<CheckResult>& checks) {
  nlohmann::ordered_json j;
  j["type"] = std::string(1, job.type) + std::to_string(job.rank);
  j["word"] = t.word.letters;
  j["gamma"] = gamma_string(t.gamma);
  j["normalization"] = "short_root_norm_2";
  if (job.mod) j["mod"] = *job.mod;
  auto weights = nlohmann::ordered_json::array();
  for (const auto& l : t.lambda) {
    std::vector<int> v(l.data(), l.data() + l.size());
    weights.push_back(v);
  }
  j["weights"] = std::move(weights);
  auto hs = nlohmann::ordered_json::array();
  for (const auto& h : t.h) {
    std::vector<int> v(h.data(), h.data() + h.size());
    hs.push_back(v);
  }
  j["h"] = std::move(hs);
  auto brackets = nlohmann::ordered_json::array();
  for (int i = 1; i <= t.n; ++i)
    for (int k = i + 1; k <= t.n; ++k) {
      nlohmann::ordered_json b;
      b["i"] = i;
      b["k"] = k;
      b["c_quadratic"] = t.quad_coeff(i, k);
      Polynomial f = t.entry(i, k);
      if (job.mod) f = reduce_mod(f, *job.mod);
      b["terms"] = terms_to_json(f);
      brackets.push_back(std::move(b));
    }
  j["brackets"] = std::move(brackets);
  auto cj = nlohmann::ordered_json::object();
  for (const auto& c : checks) {
    nlohmann::ordered_json one;
    one["status"] = c.status;
    if (!c.detail.empty()) one["detail"] = c.detail;
    cj[c.name] = std::move(one);
  }
  j["checks"] = std::move(cj);
  return j;
}

}  // namespace

bool parse_type(const std::string& s, char& type, int& rank) {
  if (s.size() < 2 || s[0] < 'A' || s[0] > 'G') return false;
  for (size_t i = 1; i < s.size(); ++i)
    if (!isdigit(static_cast<unsigned char>(s[i]))) return false;
  type = s[0];
  rank = std::stoi(s.substr(1));
  return true;
}

int worker_count() {
  if (const char* env = std::getenv("BSPOISSON_WORKERS")) {
    int v = std::atoi(env);
    if (v >= 1) return v;
  }
  unsigned hc = std::thread::hardware_concurrency();
  return hc == 0 ? 1 : static_cast<int>(hc);
}

int run_job(const JobSpec& job, std::ostream& out, std::ostream& err) {
  for (const auto& c : job.checks)
    if (std::find(kCheckNames.begin(), kCheckNames.end(), c) == kCheckNames.end()) {
      err << "unknown check: " << c << "\n";
      return 2;
    }
  RootSystem rs;
  try {
    rs = build_root_system(job.type, job.rank);
  } catch (const std::exception& e) {
    err << e.what() << "\n";
    return 2;
  }
  const int n = job.word.size();
  if (n == 0) {
    err << "empty word\n";
    return 2;
  }
  for (int i = 1; i <= n; ++i)
    if (job.word.letter(i) < 1 || job.word.letter(i) > rs.rank) {
      err << "word letter out of range: " << job.word.letter(i) << "\n";
      return 2;
    }

  std::vector<Subexpression> charts;
  if (job.gamma == "all") {
    for (long mask = 0; mask < (1L << n); ++mask) {
      Subexpression g;
      g.bits.resize(n);
      for (int i = 1; i <= n; ++i) g.bits[i - 1] = (mask >> (n - i)) & 1;
      charts.push_back(std::move(g));
    }
  } else if (job.gamma == "full") {
    charts.push_back(Subexpression::full(n));
  } else if (job.gamma == "trivial") {
    charts.push_back(Subexpression::trivial(n));
  } else {
    if (static_cast<int>(job.gamma.size()) != n) {
      err << "gamma length differs from word length\n";
      return 2;
    }
    Subexpression g;
    for (char c : job.gamma) {
      if (c != '0' && c != '1') {
        err << "gamma must be a bitstring or full|trivial|all\n";
        return 2;
      }
      g.bits.push_back(c == '1');
    }
    charts.push_back(std::move(g));
  }

  const StructureTable st = build_chevalley(rs);
  CheckResult oracle_cached;
  if (std::find(job.checks.begin(), job.checks.end(), "oracle") != job.checks.end())
    oracle_cached = check_c_oracle(st);

  struct ChartReport {
    std::string text;
    nlohmann::ordered_json json;
    bool failed = false;
  };
  std::vector<ChartReport> reports(charts.size());
  auto run_one = [&](size_t idx) {
    const BracketTable t = bracket_table(st, job.word, charts[idx]);
    const auto checks = run_chart_checks(st, t, job.checks, &oracle_cached);
    ChartReport r;
    for (const auto& c : checks)
      if (!c.passed()) r.failed = true;
    if (job.format == "json")
      r.json = chart_json(job, t, checks);
    else
      r.text = chart_text(job, t, checks);
    reports[idx] = std::move(r);
  };

  const int workers = std::min<int>(worker_count(), static_cast<int>(charts.size()));
  if (workers <= 1) {
    for (size_t idx = 0; idx < charts.size(); ++idx) run_one(idx);
  } else {
    std::atomic<size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w)
      pool.emplace_back([&] {
        for (size_t idx = next.fetch_add(1); idx < charts.size(); idx = next.fetch_add(1))
          run_one(idx);
      });
    for (auto& th : pool) th.join();
  }

  bool failed = false;
  if (job.format == "json") {
    if (charts.size() == 1) {
      out << reports[0].json.dump(2) << "\n";
    } else {
      nlohmann::ordered_json arr = nlohmann::ordered_json::array();
      for (auto& r : reports) arr.push_back(std::move(r.json));
      out << arr.dump(2) << "\n";
    }
  } else {
    for (size_t idx = 0; idx < reports.size(); ++idx) {
      if (idx) out << "\n";
      out << reports[idx].text;
    }
  }
  for (const auto& r : reports) failed |= r.failed;
  return failed ? 1 : 0;
}

}  // namespace bsp
