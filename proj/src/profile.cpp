#include "fg/profile.hpp"

#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <istream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>

namespace fg::cover {

const char* to_string(Method m) { return m == Method::Exact ? "exact" : "greedy"; }

Method parse_method(const std::string& text) {
  if (text == "exact" || text == "exact-budget") {
    return Method::Exact;
  }
  if (text == "greedy") {
    return Method::Greedy;
  }
  throw ParseError("unknown method '" + text + "' (expected exact or greedy)");
}

const char* to_string(VerdictKind v) {
  switch (v) {
    case VerdictKind::EmpiricallyNegligible:
      return "empirically-negligible";
    case VerdictKind::EmpiricallyNonnegligible:
      return "empirically-nonnegligible";
    case VerdictKind::Inconclusive:
      return "inconclusive";
  }
  return "?";
}

namespace {

CoverageResult solve_one(const SolveJob& job, std::uint64_t budget) {
  return job.method == Method::Exact ? best_cover_exact(job.word, job.N, budget) : best_cover_greedy(job.word, job.N);
}

}  // namespace

std::vector<CoverageResult> solve_batch(std::span<const SolveJob> jobs, std::uint64_t node_budget, Execution exec) {
  std::vector<CoverageResult> out(jobs.size());
  const auto count = static_cast<std::ptrdiff_t>(jobs.size());
  if (exec == Execution::Serial) {
    for (std::ptrdiff_t i = 0; i < count; ++i) {
      out[static_cast<std::size_t>(i)] = solve_one(jobs[static_cast<std::size_t>(i)], node_budget);
    }
    return out;
  }
  // Jobs differ wildly in cost (word length, N), hence dynamic scheduling.
#pragma omp parallel for schedule(dynamic, 1)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    out[static_cast<std::size_t>(i)] = solve_one(jobs[static_cast<std::size_t>(i)], node_budget);
  }
  return out;
}

void sort_rows(CoverageProfile& profile) {
  std::stable_sort(profile.rows.begin(), profile.rows.end(), [](const ProfileRow& a, const ProfileRow& b) {
    if (a.n != b.n) {
      return a.n < b.n;
    }
    if (a.N != b.N) {
      return a.N < b.N;
    }
    return std::string(to_string(a.method)) < std::string(to_string(b.method));
  });
}

CoverageProfile family_profile(const families::FamilySpec& spec, const ProfileRequest& request) {
  if (request.ns.empty() || request.Ns.empty() || request.methods.empty()) {
    throw std::invalid_argument("profile needs nonempty n, N and method ranges");
  }
  std::set<long long> ns(request.ns.begin(), request.ns.end());
  std::set<std::size_t> Ns(request.Ns.begin(), request.Ns.end());
  std::set<Method> methods(request.methods.begin(), request.methods.end());

  std::vector<SolveJob> jobs;
  CoverageProfile profile;
  for (long long n : ns) {
    const Word w = spec.at(n);
    for (std::size_t N : Ns) {
      for (Method m : methods) {
        jobs.push_back({w, N, m});
        ProfileRow row;
        row.family = spec.name();
        row.params = spec.params();
        row.n = n;
        row.length = w.size();
        row.N = N;
        row.method = m;
        profile.rows.push_back(row);
      }
    }
  }

  std::vector<double> ms(jobs.size(), 0.0);
  std::vector<CoverageResult> results(jobs.size());
  const auto count = static_cast<std::ptrdiff_t>(jobs.size());
  auto run = [&](std::ptrdiff_t i) {
    const auto k = static_cast<std::size_t>(i);
    const auto t0 = std::chrono::steady_clock::now();
    results[k] = solve_one(jobs[k], request.node_budget);
    if (request.timing) {
      ms[k] = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    }
  };
  if (request.exec == Execution::Serial) {
    for (std::ptrdiff_t i = 0; i < count; ++i) {
      run(i);
    }
  } else {
#pragma omp parallel for schedule(dynamic, 1)
    for (std::ptrdiff_t i = 0; i < count; ++i) {
      run(i);
    }
  }
  for (std::size_t k = 0; k < jobs.size(); ++k) {
    profile.rows[k].uncovered = results[k].uncovered_letters;
    profile.rows[k].optimality = results[k].optimality;
    profile.rows[k].ms = ms[k];
  }
  sort_rows(profile);
  return profile;
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) {
    return s;
  }
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') {
      out += "\"\"";
    } else {
      out.push_back(c);
    }
  }
  out.push_back('"');
  return out;
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string cur;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        cur.push_back('"');
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        cur.push_back(c);
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  fields.push_back(cur);
  return fields;
}

std::string fixed(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

}  // namespace

void write_csv(const CoverageProfile& profile, std::ostream& out) {
  out << kCsvHeader << '\n';
  for (const auto& r : profile.rows) {
    std::string method = to_string(r.method);
    if (r.optimality == Optimality::BudgetExhausted) {
      method += "-budget";
    }
    out << csv_field(r.family) << ',' << csv_field(r.params) << ',' << r.n << ',' << r.length << ',' << r.N << ','
        << method << ',' << r.uncovered << ',' << fixed(r.fraction(), 6) << ',' << fixed(r.ms, 3) << '\n';
  }
}

CoverageProfile read_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) {
    throw ParseError("profile CSV is empty");
  }
  if (!line.empty() && line.back() == '\r') {
    line.pop_back();
  }
  if (line != kCsvHeader) {
    throw ParseError("unexpected profile CSV header: " + line);
  }
  CoverageProfile p;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') {
      line.pop_back();
    }
    if (line.empty()) {
      continue;
    }
    const auto f = split_csv_line(line);
    if (f.size() != 9) {
      throw ParseError("profile CSV line " + std::to_string(lineno) + ": expected 9 fields");
    }
    try {
      ProfileRow r;
      r.family = f[0];
      r.params = f[1];
      r.n = std::stoll(f[2]);
      r.length = std::stoull(f[3]);
      r.N = std::stoull(f[4]);
      r.method = parse_method(f[5]);
      r.optimality = f[5] == "exact-budget" ? Optimality::BudgetExhausted
                     : r.method == Method::Exact ? Optimality::Exact
                                                 : Optimality::GreedyBound;
      r.uncovered = std::stoull(f[6]);
      r.ms = std::stod(f[8]);
      if (r.uncovered > r.length) {
        throw ParseError("uncovered exceeds length");
      }
      p.rows.push_back(r);
    } catch (const ParseError&) {
      throw;
    } catch (const std::exception& e) {
      throw ParseError("profile CSV line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return p;
}

std::string NegligibilityVerdict::label() const {
  if (kind == VerdictKind::EmpiricallyNegligible) {
    return std::string(to_string(kind)) + "(N=" + std::to_string(witness_N) + ")";
  }
  return to_string(kind);
}

std::string NegligibilityVerdict::to_json() const {
  nlohmann::ordered_json j;
  j["verdict"] = label();
  j["kind"] = to_string(kind);
  if (kind == VerdictKind::EmpiricallyNegligible) {
    j["N"] = witness_N;
  }
  j["heuristic"] = true;
  j["note"] = "finite-sample tail trend; negligibility quantifies over cofinite subsets and is not decided here";
  j["epsilons"] = epsilons;
  auto& rows = j["per_N"] = nlohmann::ordered_json::array();
  for (const auto& b : per_N) {
    nlohmann::ordered_json r;
    r["N"] = b.N;
    r["lengths"] = b.lengths;
    r["sufficient"] = b.sufficient;
    r["source"] = b.from_exact ? "exact" : "greedy";
    r["tail_max"] = b.tail_max;
    r["tail_min"] = b.tail_min;
    r["below"] = b.below;
    rows.push_back(r);
  }
  return j.dump(2);
}

NegligibilityVerdict negligibility_report(const CoverageProfile& profile, const std::vector<double>& epsilons) {
  NegligibilityVerdict v;
  v.epsilons = epsilons;
  if (profile.rows.empty() || epsilons.empty()) {
    return v;
  }
  const double eps_min = *std::min_element(epsilons.begin(), epsilons.end());
  const double eps_max = *std::max_element(epsilons.begin(), epsilons.end());

  // Per N, one fraction per n. Exact rows win over greedy ones; a
  // budget-exhausted row only bounds the optimum from above, like greedy.
  struct Cell {
    double fraction;
    bool exact;
  };
  std::map<std::size_t, std::map<long long, Cell>> table;
  for (const auto& r : profile.rows) {
    const bool exact = r.method == Method::Exact && r.optimality == Optimality::Exact;
    auto& cell = table[r.N];
    const auto it = cell.find(r.n);
    if (it == cell.end() || (exact && !it->second.exact)) {
      cell[r.n] = {r.fraction(), exact};
    }
  }

  bool any_negligible = false;
  bool all_sufficient_high = true;
  bool any_sufficient = false;
  for (const auto& [N, cells] : table) {
    BudgetVerdict b;
    b.N = N;
    b.lengths = cells.size();
    b.sufficient = cells.size() >= 3;
    std::vector<Cell> ordered;
    for (const auto& [n, c] : cells) {
      ordered.push_back(c);
    }
    const std::size_t tail = (ordered.size() + 1) / 2;
    b.from_exact = true;
    b.tail_max = 0.0;
    b.tail_min = 1.0;
    for (std::size_t i = ordered.size() - tail; i < ordered.size(); ++i) {
      b.tail_max = std::max(b.tail_max, ordered[i].fraction);
      b.tail_min = std::min(b.tail_min, ordered[i].fraction);
      b.from_exact = b.from_exact && ordered[i].exact;
    }
    for (double e : epsilons) {
      b.below.push_back(b.tail_max <= e);
    }
    if (b.sufficient) {
      any_sufficient = true;
      // Upper bounds (greedy) can certify smallness but never largeness.
      if (b.tail_max <= eps_min && !any_negligible) {
        any_negligible = true;
        v.witness_N = N;
      }
      if (!(b.from_exact && b.tail_min > eps_max)) {
        all_sufficient_high = false;
      }
    }
    v.per_N.push_back(std::move(b));
  }
  if (any_negligible) {
    v.kind = VerdictKind::EmpiricallyNegligible;
  } else if (any_sufficient && all_sufficient_high) {
    v.kind = VerdictKind::EmpiricallyNonnegligible;
  } else {
    v.kind = VerdictKind::Inconclusive;
  }
  return v;
}

}  // namespace fg::cover
