#pragma once

// Verification harness: sweeps (k, n) instances, compares the brute-force
// oracle's delta against the closed form, and serializes the records.
// Identical specs produce byte-identical CSV/JSON regardless of workers.

#include <atomic>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "lrc/closed_forms.hpp"
#include "lrc/closeness.hpp"
#include "lrc/harary.hpp"

namespace lrc {

struct VerificationRecord {
  int k = 0;
  int n = 0;
  Dyadic closeness_bf;
  Dyadic residual_bf;
  Dyadic delta_bf;
  BigRational normalized;
  std::optional<DeltaResult> formula;  // nullopt: no regime covers (k, n)
  std::vector<Edge> argmin_edges;
  bool match = false;
};

struct SweepSpec {
  std::vector<int> k_values;
  int n_min = 3;
  int n_max = 0;
  std::optional<Family> family;
  int workers = 1;
};

inline bool in_family(Family f, int k, int n) {
  return family_of(k, n) == f;
}

inline std::optional<Family> parse_family(std::string_view name) {
  if (name == "all") return std::nullopt;
  if (name == "h2") return Family::H2;
  if (name == "h2p") return Family::H2pEvenK;
  if (name == "h3_even") return Family::H3EvenN;
  if (name == "h5_even") return Family::H5EvenN;
  if (name == "hodd_even") return Family::HOddKEvenN;
  if (name == "h3_odd") return Family::H3OddN;
  if (name == "h5_odd") return Family::H5OddN;
  if (name == "hodd_odd") return Family::HOddKOddN;
  throw std::invalid_argument("unknown family: " + std::string(name));
}

// All (k, n) selected by the spec, ordered by (k, n).
inline std::vector<std::pair<int, int>> enumerate_instances(
    const SweepSpec& spec) {
  std::vector<int> ks = spec.k_values;
  std::sort(ks.begin(), ks.end());
  ks.erase(std::unique(ks.begin(), ks.end()), ks.end());
  std::vector<std::pair<int, int>> out;
  for (int k : ks) {
    if (k < 2) throw std::invalid_argument("k must be at least 2");
    for (int n = std::max(spec.n_min, k + 1); n <= spec.n_max; ++n) {
      if (spec.family && !in_family(*spec.family, k, n)) continue;
      out.emplace_back(k, n);
    }
  }
  if (out.empty()) throw std::invalid_argument("sweep selects no instances");
  return out;
}

inline VerificationRecord verify_instance(int k, int n) {
  Graph g = harary(k, n);
  ResidualReport rep = link_residual_closeness(g);
  VerificationRecord rec;
  rec.k = k;
  rec.n = n;
  rec.closeness_bf = rep.closeness;
  rec.residual_bf = rep.residual;
  rec.delta_bf = rep.delta;
  rec.normalized = rep.normalized;
  rec.argmin_edges = std::move(rep.argmin_edges);
  try {
    rec.formula = delta_link(k, n);
  } catch (const UncoveredRegimeError&) {
    rec.formula = std::nullopt;
  }
  rec.match = rec.formula && rec.formula->delta == rec.delta_bf;
  return rec;
}

struct VerifySummary {
  std::size_t total = 0;
  std::size_t matched = 0;
  std::size_t mismatched = 0;
  std::size_t uncovered = 0;
};

struct VerifyResult {
  std::vector<VerificationRecord> records;
  VerifySummary summary;
};

inline VerifyResult verify(const SweepSpec& spec) {
  auto instances = enumerate_instances(spec);
  std::vector<VerificationRecord> records(instances.size());
  auto run = [&](std::atomic<std::size_t>& next) {
    for (std::size_t i; (i = next.fetch_add(1)) < instances.size();)
      records[i] = verify_instance(instances[i].first, instances[i].second);
  };
  std::atomic<std::size_t> next{0};
  int w = std::clamp(spec.workers, 1, static_cast<int>(instances.size()));
  if (w == 1) {
    run(next);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(w));
    for (int t = 0; t < w; ++t) pool.emplace_back([&] { run(next); });
    for (auto& th : pool) th.join();
  }
  VerifyResult result;
  result.records = std::move(records);
  result.summary.total = result.records.size();
  for (const auto& rec : result.records) {
    if (!rec.formula)
      ++result.summary.uncovered;
    else if (rec.match)
      ++result.summary.matched;
    else
      ++result.summary.mismatched;
  }
  return result;
}

struct SweepRow {
  int k = 0;
  int n = 0;
  ResidualReport report;
  std::string regime;
};

inline std::vector<SweepRow> sweep(const SweepSpec& spec) {
  auto instances = enumerate_instances(spec);
  std::vector<SweepRow> rows(instances.size());
  auto run = [&](std::atomic<std::size_t>& next) {
    for (std::size_t i; (i = next.fetch_add(1)) < instances.size();) {
      auto [k, n] = instances[i];
      rows[i].k = k;
      rows[i].n = n;
      rows[i].report = link_residual_closeness(harary(k, n));
      try {
        rows[i].regime = regime_tag(delta_link(k, n).regime);
      } catch (const UncoveredRegimeError&) {
        rows[i].regime = "uncovered";
      }
    }
  };
  std::atomic<std::size_t> next{0};
  int w = std::clamp(spec.workers, 1, static_cast<int>(instances.size()));
  if (w == 1) {
    run(next);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(w));
    for (int t = 0; t < w; ++t) pool.emplace_back([&] { run(next); });
    for (auto& th : pool) th.join();
  }
  return rows;
}

// --- serialization ---------------------------------------------------------

inline std::string verify_csv(const std::vector<VerificationRecord>& records) {
  std::ostringstream out;
  out << "k,n,C,R,delta_bf,delta_formula,NR,regime,match,argmin_count\n";
  for (const auto& r : records) {
    out << r.k << ',' << r.n << ',' << r.closeness_bf.to_decimal_string()
        << ',' << r.residual_bf.to_decimal_string() << ','
        << r.delta_bf.to_decimal_string() << ',';
    if (r.formula)
      out << r.formula->delta.to_decimal_string();
    else
      out << "uncovered";
    out << ',' << rational_decimal(r.normalized) << ','
        << (r.formula ? regime_tag(r.formula->regime) : "uncovered") << ','
        << (r.match ? "true" : "false") << ',' << r.argmin_edges.size()
        << '\n';
  }
  return out.str();
}

inline nlohmann::ordered_json dyadic_json(const Dyadic& d) {
  return {{"decimal", d.to_decimal_string()},
          {"numerator", d.numerator().str()},
          {"exponent", d.exponent()}};
}

inline nlohmann::ordered_json rational_json(const BigRational& q) {
  return {{"decimal", rational_decimal(q)},
          {"numerator", boost::multiprecision::numerator(q).str()},
          {"denominator", boost::multiprecision::denominator(q).str()}};
}

inline nlohmann::ordered_json edges_json(const std::vector<Edge>& edges) {
  auto arr = nlohmann::ordered_json::array();
  for (Edge e : edges) arr.push_back({e.u, e.v});
  return arr;
}

inline nlohmann::ordered_json verify_json(const VerifyResult& result) {
  auto records = nlohmann::ordered_json::array();
  for (const auto& r : result.records) {
    nlohmann::ordered_json rec{{"k", r.k}, {"n", r.n}};
    rec["C"] = dyadic_json(r.closeness_bf);
    rec["R"] = dyadic_json(r.residual_bf);
    rec["delta_bf"] = dyadic_json(r.delta_bf);
    if (r.formula) {
      rec["delta_formula"] = dyadic_json(r.formula->delta);
      rec["regime"] = regime_tag(r.formula->regime);
      if (r.formula->theorem_param)
        rec["theorem_param"] = *r.formula->theorem_param;
    } else {
      rec["delta_formula"] = "uncovered";
      rec["regime"] = "uncovered";
    }
    rec["NR"] = rational_json(r.normalized);
    rec["match"] = r.match;
    rec["argmin_edges"] = edges_json(r.argmin_edges);
    records.push_back(std::move(rec));
  }
  return {{"records", std::move(records)},
          {"summary",
           {{"total", result.summary.total},
            {"matched", result.summary.matched},
            {"mismatched", result.summary.mismatched},
            {"uncovered", result.summary.uncovered}}}};
}

inline std::string sweep_csv(const std::vector<SweepRow>& rows) {
  std::ostringstream out;
  out << "k,n,C,R,delta,NR,regime,argmin_count\n";
  for (const auto& r : rows) {
    out << r.k << ',' << r.n << ','
        << r.report.closeness.to_decimal_string() << ','
        << r.report.residual.to_decimal_string() << ','
        << r.report.delta.to_decimal_string() << ','
        << rational_decimal(r.report.normalized) << ',' << r.regime << ','
        << r.report.argmin_edges.size() << '\n';
  }
  return out.str();
}

inline nlohmann::ordered_json sweep_json(const std::vector<SweepRow>& rows) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& r : rows) {
    nlohmann::ordered_json rec{{"k", r.k}, {"n", r.n}};
    rec["C"] = dyadic_json(r.report.closeness);
    rec["R"] = dyadic_json(r.report.residual);
    rec["delta"] = dyadic_json(r.report.delta);
    rec["NR"] = rational_json(r.report.normalized);
    rec["regime"] = r.regime;
    rec["argmin_edges"] = edges_json(r.report.argmin_edges);
    arr.push_back(std::move(rec));
  }
  return arr;
}

inline std::string summary_line(const VerifySummary& s) {
  std::ostringstream out;
  out << "verify: total=" << s.total << " matched=" << s.matched
      << " mismatched=" << s.mismatched << " uncovered=" << s.uncovered;
  return out.str();
}

}  // namespace lrc
