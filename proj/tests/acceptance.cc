// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Set XYZ_ACCEPTANCE_ONLY=4,7 to run a subset.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cli.h"
#include "reference.h"
#include "xyzcyclic/distance.h"
#include "xyzcyclic/errors.h"
#include "xyzcyclic/noise.h"
#include "xyzcyclic/oracle.h"
#include "xyzcyclic/parallel.h"

using namespace xyz;

namespace {

constexpr std::uint64_t kSeed = 20240601;

struct Verdict {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      if (!detail.empty()) detail += "; ";
      detail += what;
    }
  }
};

std::string fmt(double v, int digits = 4) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.*f", digits, v);
  return buf;
}

std::string interval(const RateEstimate& r) {
  const auto [lo, hi] = r.wilson();
  return "C(" + std::to_string(r.params.a) + "," + std::to_string(r.params.b) + ")=" + fmt(r.p_logical) + " [" +
         fmt(lo) + "," + fmt(hi) + "]";
}

// 95% intervals of consecutive estimates are disjoint and move in the
// requested direction.
bool strictly_ordered(const std::vector<RateEstimate>& rows, bool decreasing) {
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const auto prev = rows[i - 1].wilson();
    const auto cur = rows[i].wilson();
    if (decreasing ? !(cur.second < prev.first) : !(cur.first > prev.second)) return false;
  }
  return true;
}

std::string rows_text(const std::vector<RateEstimate>& rows) {
  std::string s;
  for (const auto& r : rows) s += (s.empty() ? "" : " ") + interval(r);
  return s;
}

std::vector<RateEstimate> g_rates;  // everything simulated, for the determinism check

Verdict commutation() {
  Verdict v;
  std::size_t bad = 0;
  for (std::size_t a = 0; a <= 50; ++a) {
    for (std::size_t b = 0; b <= 50; ++b) {
      if (!check_abelian(build_code({a, b}))) ++bad;
    }
  }
  v.require(bad == 0, std::to_string(bad) + " non-commuting codes");
  v.detail = v.pass ? "2601 codes commute" : v.detail;
  return v;
}

Verdict dimension() {
  Verdict v;
  std::size_t checked = 0;
  for (std::size_t a = 0; a <= 24; ++a) {
    for (std::size_t b = 0; b <= 24; ++b) {
      const auto gens = ref::xyz_generators(a, b);
      const std::size_t k = gens.size() - ref::rank(ref::symplectic_rows(gens));
      v.require(code_dimension({a, b}) == k, "mismatch at (" + std::to_string(a) + "," + std::to_string(b) + ")");
      ++checked;
    }
  }
  if (v.pass) v.detail = std::to_string(checked) + " codes match the dense rank";
  return v;
}

Verdict repetition() {
  Verdict v;
  std::size_t k1 = 0, k3 = 0;
  for (std::size_t a = 0; 2 * a + 7 <= 101; ++a) {
    for (std::size_t b = 0; 2 * (a + b) + 7 <= 101; ++b) {
      const XYZParams p{a, b};
      const std::string where = "(" + std::to_string(a) + "," + std::to_string(b) + ")";
      if (code_dimension(p) == 1) {
        ++k1;
        for (PauliType t : {PauliType::X, PauliType::Y, PauliType::Z}) {
          const GF2Poly poly = pure_noise_poly(p, t);
          const bool by_rank = circulant_rank(poly, p.n()) == p.n() - 1;
          v.require(has_repetition_structure(p, t) == by_rank, std::string("gcd/rank differ at ") + where + " " +
                                                                   pauli_char(t));
        }
      } else {
        ++k3;
        v.require(!repetition_by_rank(p, PauliType::Z), "k=3 code with pure-Z repetition at " + where);
      }
    }
  }
  if (v.pass) v.detail = std::to_string(k1) + " k=1 codes agree for X,Y,Z; " + std::to_string(k3) + " k=3 codes lack it";
  return v;
}

Verdict table1() {
  Verdict v;
  struct Row {
    std::size_t b, a, dx, dz, dy;
  };
  const std::vector<Row> rows = {{0, 5, 5, 5, 5}, {1, 8, 7, 7, 7}, {2, 13, 9, 9, 7}, {3, 20, 11, 11, 11}};
  std::string found;
  std::string dists;
  for (const Row& r : rows) {
    const auto hit = search_optimal(r.b, 60, 1000, default_distance_decoder(), kSeed);
    found += (found.empty() ? "" : " ") + std::string("b=") + std::to_string(r.b) + ":a=" +
             (hit ? std::to_string(hit->first) : std::string("none"));
    v.require(hit && hit->first == r.a, "search_optimal(b=" + std::to_string(r.b) + ") gave " +
                                            (hit ? std::to_string(hit->first) : std::string("none")) +
                                            ", expected " + std::to_string(r.a));
    if (hit && hit->first != r.a) {
      // Settle the disagreement by enumeration where affordable.
      const XYZParams found_params{hit->first, r.b};
      oracle::EnumerationBudget budget;
      budget.max_candidates = 2e10;
      try {
        const StabilizerCode code = build_code(found_params);
        const bool lighter = exhaustive_distance(code, distance_target(r.b) - 1, budget).has_value();
        const auto exact = exhaustive_distance(code, distance_target(r.b), budget);
        v.detail += std::string("; enumeration on C(") + std::to_string(hit->first) + "," + std::to_string(r.b) +
                    "): " + (lighter ? "lighter logical exists" : "no logical below " + std::to_string(distance_target(r.b))) +
                    ", exact d " + (exact ? "= " + std::to_string(*exact) : "> " + std::to_string(distance_target(r.b)));
      } catch (const BudgetExceeded&) {
        v.detail += "; enumeration over budget";
      }
    }
    const DistanceReport d = distance_upper_bound(build_code({r.a, r.b}), 1000, default_distance_decoder(), kSeed);
    dists += " C(" + std::to_string(r.a) + "," + std::to_string(r.b) + ")=(" + std::to_string(d.d_x_up) + "," +
             std::to_string(d.d_z_up) + "," + std::to_string(d.d_y_up) + ")";
    v.require(d.d_x_up == r.dx && d.d_z_up == r.dz && d.d_y_up == r.dy,
              "distance of C(" + std::to_string(r.a) + "," + std::to_string(r.b) + ") off");
  }
  v.detail = found + ";" + dists + (v.pass ? "" : " | " + v.detail);
  return v;
}

Verdict exact_distance() {
  Verdict v;
  const StabilizerCode five = StabilizerCode::from_labels({"IXZZX", "XIXZZ", "ZXIXZ", "ZZXIX", "XZZXI"});
  v.require(!exhaustive_distance(five, 2).has_value(), "[[5,1,3]] has a logical of weight <= 2");
  v.require(exhaustive_distance(five, 3) == std::optional<std::size_t>(3), "[[5,1,3]] has no weight-3 logical");
  const StabilizerCode c50 = build_code({5, 0});
  v.require(!exhaustive_distance(c50, 4).has_value(), "C(5,0) has a logical of weight <= 4");
  v.require(exhaustive_distance(c50, 5) == std::optional<std::size_t>(5), "C(5,0) has no weight-5 logical");
  if (v.pass) v.detail = "[[5,1,3]] d=3, C(5,0) d=5";
  return v;
}

Verdict x_witnesses() {
  Verdict v;
  std::size_t k1 = 0, k3 = 0;
  for (std::size_t b = 0; b <= 4; ++b) {
    for (std::size_t l = 1; l <= 4; ++l) {
      const XYZParams p = x_witness_params(b, l);
      const std::string where = "(b=" + std::to_string(b) + ",l=" + std::to_string(l) + ")";
      const StabilizerCode code = build_code(p);
      const PauliString pattern = x_witness_pattern(b, l);
      v.require(weight(pattern) == 2 * l + 1 && is_logical(code, pattern), "pattern not a logical at " + where);
      if (code_dimension(p) == 1) {
        ++k1;
        const PauliString w = x_logical_witness(b, l);
        v.require(w == pattern && is_logical(code, w) && weight(w) == 2 * l + 1, "witness invalid at " + where);
        v.require(symplectic_product(w, code.logicals()->z_rep) && symplectic_product(w, code.logicals()->y_rep),
                  "witness not in the X class at " + where);
      } else {
        ++k3;
        bool rejected = false;
        try {
          x_logical_witness(b, l);
        } catch (const PreconditionError&) {
          rejected = true;
        }
        v.require(rejected, "k=3 code accepted at " + where);
      }
    }
  }
  std::string dx;
  for (std::size_t l = 1; l <= 3; ++l) {
    const XYZParams p = x_witness_params(3, l);
    const DistanceReport r = distance_upper_bound(build_code(p), 500, default_distance_decoder(), kSeed);
    dx += (dx.empty() ? "" : ",") + std::to_string(r.d_x_up);
    v.require(r.d_x_up == 2 * l + 1, "d_x_up(a=" + std::to_string(p.a) + ") = " + std::to_string(r.d_x_up));
  }
  const std::string summary = std::to_string(k1) + " k=1 witnesses valid, " + std::to_string(k3) +
                              " k=3 parameter pairs rejected (pattern still logical); d_x_up for a=10,21,32: " + dx;
  v.detail = v.pass ? summary : summary + " | " + v.detail;
  return v;
}

Verdict y_witnesses() {
  Verdict v;
  const std::vector<XYZParams> table = {{5, 0}, {8, 1}, {13, 2}, {20, 3}, {34, 4}, {28, 5}, {54, 6}, {64, 7}};
  std::string weights;
  for (const XYZParams& p : table) {
    const std::string where = "C(" + std::to_string(p.a) + "," + std::to_string(p.b) + ")";
    try {
      const PauliString w = y_logical_witness(p);
      const StabilizerCode code = build_code(p);
      weights += (weights.empty() ? "" : ",") + std::to_string(weight(w));
      v.require(is_logical(code, w), where + " witness not logical");
      v.require(weight(w) == y_weight_upper_bound(p.b), where + " weight " + std::to_string(weight(w)));
    } catch (const std::exception& e) {
      v.require(false, where + ": " + e.what());
    }
  }
  v.detail = "weights " + weights + (v.pass ? "" : " | " + v.detail);
  return v;
}

Verdict pure_noise() {
  Verdict v;
  const DecoderConfig cfg = default_simulation_decoder();
  const RateEstimate half = logical_error_rate({5, 0}, NoiseModel::pure(PauliType::Z, 0.5), 10000, cfg, kSeed);
  v.require(std::abs(half.p_logical - 0.5) <= 0.02, "p=0.5 rate " + fmt(half.p_logical));
  std::vector<RateEstimate> low;
  for (XYZParams c : {XYZParams{5, 0}, XYZParams{8, 1}}) {
    low.push_back(logical_error_rate(c, NoiseModel::pure(PauliType::Z, 0.3), 10000, cfg, kSeed));
  }
  v.require(strictly_ordered(low, true), "p=0.3 ordering " + rows_text(low));
  g_rates.push_back(half);
  g_rates.insert(g_rates.end(), low.begin(), low.end());

  // Residuals over the same trial streams, for all three pure channels.
  std::size_t other = 0, total = 0;
  for (PauliType t : {PauliType::X, PauliType::Y, PauliType::Z}) {
    for (XYZParams c : {XYZParams{5, 0}, XYZParams{8, 1}}) {
      for (double p : {0.3, 0.5}) {
        const TrialRunner runner(c, NoiseModel::pure(t, p), cfg);
        for (std::size_t i = 0; i < 2000; ++i) {
          std::mt19937_64 rng = trial_rng(kSeed, 17, i);
          const TrialRecord r = runner.run(rng);
          const std::size_t w = weight(r.residual);
          ++total;
          if (!(w == 0 || (w == c.n() && r.residual == PauliString::uniform(c.n(), t)))) ++other;
        }
      }
    }
  }
  v.require(other == 0, std::to_string(other) + " residuals neither trivial nor the all-sigma logical");
  v.detail = "p=0.5 " + interval(half) + "; p=0.3 " + rows_text(low) + "; " + std::to_string(total) +
             " residuals trivial or weight N" + (v.pass ? "" : " | " + v.detail);
  return v;
}

std::vector<RateEstimate> three_codes(const NoiseModel& noise) {
  std::vector<RateEstimate> rows;
  for (XYZParams c : {XYZParams{5, 0}, XYZParams{8, 1}, XYZParams{13, 2}}) {
    rows.push_back(logical_error_rate(c, noise, 20000, default_simulation_decoder(), kSeed));
  }
  g_rates.insert(g_rates.end(), rows.begin(), rows.end());
  return rows;
}

Verdict depolarizing() {
  Verdict v;
  const auto below = three_codes(NoiseModel::depolarizing(0.08));
  const auto above = three_codes(NoiseModel::depolarizing(0.18));
  v.require(strictly_ordered(below, true), "p=0.08 not strictly decreasing");
  v.require(strictly_ordered(above, false), "p=0.18 not strictly increasing");
  v.detail = "p=0.08 " + rows_text(below) + "; p=0.18 " + rows_text(above) + (v.pass ? "" : " | " + v.detail);
  return v;
}

Verdict biased() {
  Verdict v;
  const auto rows = three_codes(NoiseModel::z_biased(0.30, 1000));
  v.require(strictly_ordered(rows, true), "eta=1000 p=0.30 not strictly decreasing");
  v.detail = "p=0.30 " + rows_text(rows) + (v.pass ? "" : " | " + v.detail);
  return v;
}

Verdict soundness() {
  Verdict v;
  std::vector<StabilizerCode> codes;
  std::vector<std::string> names;
  for (std::size_t a = 0; a <= 23; ++a) {
    for (std::size_t b = 0; 2 * (a + b) + 7 <= 53; ++b) {
      codes.push_back(build_code({a, b}));
      names.push_back("C(" + std::to_string(a) + "," + std::to_string(b) + ")");
    }
  }
  codes.push_back(StabilizerCode::from_labels({"IXZZX", "XIXZZ", "ZXIXZ", "ZZXIX", "XZZXI"}));
  names.push_back("[[5,1,3]]");
  std::vector<std::size_t> small;
  for (std::size_t i = 0; i < codes.size(); ++i) {
    if (codes[i].num_qubits() <= 7) small.push_back(i);
  }
  std::vector<SymplecticDecoder> decoders;
  std::vector<std::optional<SymplecticDecoder>> full(codes.size());
  for (std::size_t i = 0; i < codes.size(); ++i) {
    decoders.emplace_back(symplectic_check_matrix(codes[i].generators()), default_simulation_decoder());
  }
  DecoderConfig osd_full;
  osd_full.osd_order = 64;
  osd_full.stop_on_bp_convergence = false;
  for (std::size_t i : small) full[i].emplace(symplectic_check_matrix(codes[i].generators()), osd_full);

  std::size_t bad_syndrome = 0, ml_checked = 0, ml_mismatch = 0;
  const std::size_t instances = 10000;
  for (std::size_t t = 0; t < instances; ++t) {
    std::mt19937_64 rng = trial_rng(kSeed, 11, t);
    // Every fifth instance uses one of the n <= 7 codes.
    const std::size_t ci = t % 5 == 0 ? small[rng() % small.size()] : rng() % codes.size();
    const StabilizerCode& code = codes[ci];
    const std::size_t n = code.num_qubits();
    const double p = 0.01 + 0.25 * uniform_unit(rng);
    const double bias = uniform_unit(rng);
    const ChannelRates rates{p * (1 - bias) / 2, p * (1 - bias) / 2, p * bias};
    const ChannelPriors priors = ChannelPriors::uniform(n, QubitPrior::from_rates(rates.p_x, rates.p_y, rates.p_z));
    const PauliString e = sample_error(n, rates, rng);
    const BitVec s = syndrome(decoders[ci].check_matrix(), e);
    const DecodeResult r = decoders[ci].decode(s, priors);
    if (syndrome(decoders[ci].check_matrix(), r.correction) != s) ++bad_syndrome;
    if (full[ci]) {
      const DecodeResult f = full[ci]->decode(s, priors);
      if (syndrome(full[ci]->check_matrix(), f.correction) != s) ++bad_syndrome;
      const oracle::MlResult ml = oracle::ml_decode(code, s, priors);
      ++ml_checked;
      // Compare coset probabilities so exact ties between cosets pass.
      const double got = oracle::coset_log_probability(code, f.correction, priors);
      if (std::abs(got - ml.log_prob) > 1e-9 * std::max(1.0, std::abs(ml.log_prob))) ++ml_mismatch;
    }
  }
  v.require(bad_syndrome == 0, std::to_string(bad_syndrome) + " corrections miss their syndrome");
  v.require(ml_mismatch == 0, std::to_string(ml_mismatch) + " of " + std::to_string(ml_checked) +
                                  " small instances disagree with the ML coset");
  const std::string summary = std::to_string(instances) + " instances over " + std::to_string(codes.size()) +
                              " codes reproduce their syndromes; " + std::to_string(ml_checked) +
                              " n<=7 OSD-full decodes match the ML coset";
  v.detail = v.pass ? summary : summary + " | " + v.detail;
  return v;
}

std::string csv_of(const std::vector<RateEstimate>& rows) {
  std::ostringstream os;
  write_sweep_csv(os, rows);
  return os.str();
}

Verdict determinism() {
  Verdict v;
  // Recompute every simulated point, on several threads this time.
  std::vector<RateEstimate> again;
  SimulationOptions threaded;
  threaded.threads = 4;
  for (const auto& r : g_rates) {
    again.push_back(logical_error_rate(r.params, r.noise, r.trials, default_simulation_decoder(), r.seed, threaded));
  }
  v.require(csv_of(again) == csv_of(g_rates), "simulation CSV differs on rerun");

  std::ostringstream a, b, err;
  const std::vector<std::string> args = {"table1", "--b-min", "0", "--b-max", "1", "--trials", "300", "--seed", "5"};
  cli::run(args, a, err);
  cli::run(args, b, err);
  v.require(a.str() == b.str() && a.str().size() > 40, "table1 CSV differs on rerun");
  if (v.pass) v.detail = std::to_string(g_rates.size()) + " sweep rows and a table1 CSV reproduced byte for byte";
  return v;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    std::function<Verdict()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "commutation for a,b <= 50", commutation},
      {2, "dimension closed form vs rank, a,b <= 24", dimension},
      {3, "repetition gcd vs rank, N <= 101", repetition},
      {4, "optimal codes b=0..3", table1},
      {5, "exact distances by enumeration", exact_distance},
      {6, "logical-X witnesses", x_witnesses},
      {7, "logical-Y witnesses b <= 7", y_witnesses},
      {8, "pure Z noise", pure_noise},
      {9, "depolarizing crossing bracket", depolarizing},
      {10, "Z-biased ordering, eta=1000", biased},
      {11, "decoder soundness", soundness},
      {12, "determinism", determinism},
  };
  std::set<int> only;
  if (const char* env = std::getenv("XYZ_ACCEPTANCE_ONLY")) {
    std::stringstream ss(env);
    std::string item;
    while (std::getline(ss, item, ',')) only.insert(std::stoi(item));
  }
  int failures = 0;
  for (const auto& c : criteria) {
    // Criterion 12 replays the simulations of 8-10.
    if (!only.empty() && !only.count(c.id)) continue;
    const auto t0 = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = c.run();
    } catch (const std::exception& e) {
      v.pass = false;
      v.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (!v.pass) ++failures;
    std::cout << "ACCEPTANCE " << c.id << " " << (v.pass ? "PASS" : "FAIL") << " " << c.name << " (" << fmt(secs, 1)
              << "s): " << v.detail << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
