#include "xyzcyclic/distance.h"

#include <algorithm>
#include <mutex>
#include <stdexcept>

#include "xyzcyclic/errors.h"
#include "xyzcyclic/parallel.h"

namespace xyz {

namespace {

constexpr std::uint64_t kDistanceStream = 0x64697374;  // "dist"

struct TrialOutcome {
  std::optional<PauliString> best[3];  // indexed X, Z, Y
  bool skipped = false;
};

PauliType type_at(std::size_t i) { return i == 0 ? PauliType::X : (i == 1 ? PauliType::Z : PauliType::Y); }

}  // namespace

std::vector<std::size_t> independent_generator_indices(const StabilizerCode& code) {
  const auto& gens = code.generators();
  const std::size_t m = gens.size();
  std::vector<std::size_t> order;
  for (std::size_t i = 1; i < m; ++i) order.push_back(i);
  if (m > 0) order.push_back(0);

  const std::size_t width = 2 * code.num_qubits();
  GF2Matrix picked(0, width);
  std::vector<std::size_t> out;
  std::size_t rank = 0;
  for (std::size_t i : order) {
    picked.append_row(gens[i].symplectic());
    const std::size_t r = gf2_rank(picked);
    if (r > rank) {
      rank = r;
      out.push_back(i);
      if (rank == code.independent_rank()) break;
    } else {
      picked = GF2Matrix::from_rows(std::vector<BitVec>(picked.row_vectors().begin(), picked.row_vectors().end() - 1),
                                    width);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

PauliString random_coset_element(const PauliString& logical, const StabilizerCode& code, std::mt19937_64& rng) {
  PauliString out = logical;
  for (std::size_t i : independent_generator_indices(code)) {
    if (rng() >> 63) out *= code.generators()[i];
  }
  return out;
}

std::size_t DistanceReport::min_distance() const { return std::min({d_x_up, d_z_up, d_y_up}); }

std::size_t DistanceReport::get(PauliType t) const {
  switch (t) {
    case PauliType::X:
      return d_x_up;
    case PauliType::Z:
      return d_z_up;
    case PauliType::Y:
      return d_y_up;
  }
  return 0;
}

DecoderConfig default_distance_decoder() {
  DecoderConfig cfg;
  cfg.max_bp_iterations = 30;
  cfg.osd_order = 2;
  cfg.stop_on_bp_convergence = false;
  return cfg;
}

DistanceReport distance_upper_bound(const StabilizerCode& code, std::size_t trials, const DecoderConfig& cfg,
                                    std::uint64_t seed, const DistanceOptions& opts) {
  if (!code.logicals()) throw PreconditionError("distance_upper_bound: code has no stored logical operators");
  if (num_logical_qubits(code) != 1) throw PreconditionError("distance_upper_bound: code must encode one qubit");
  if (!(opts.prior_p > 0.0 && opts.prior_p < 0.75)) {
    throw std::invalid_argument("distance_upper_bound: prior_p must lie in (0, 0.75)");
  }
  cfg.validate();
  const std::size_t n = code.num_qubits();
  const LogicalSet& logicals = *code.logicals();
  const std::vector<std::size_t> indep = independent_generator_indices(code);
  std::vector<PauliString> base_rows;
  for (std::size_t i : indep) base_rows.push_back(code.generators()[i]);
  const ChannelPriors priors = ChannelPriors::depolarizing(n, opts.prior_p);
  BitVec target(base_rows.size() + 2);
  target.set(base_rows.size(), true);
  target.set(base_rows.size() + 1, true);

  // Appended rows for type t: the two other representatives in X, Z, Y order.
  static constexpr std::size_t kOthers[3][2] = {{1, 2}, {0, 2}, {0, 1}};

  std::vector<TrialOutcome> outcomes(trials);
  parallel_for(trials, opts.threads, [&](std::size_t trial) {
    std::mt19937_64 rng = trial_rng(seed, kDistanceStream, trial);
    PauliString gamma[3];
    for (std::size_t t = 0; t < 3; ++t) gamma[t] = random_coset_element(logicals.get(type_at(t)), code, rng);
    TrialOutcome& out = outcomes[trial];
    for (std::size_t t = 0; t < 3; ++t) {
      std::vector<PauliString> rows = base_rows;
      rows.push_back(gamma[kOthers[t][0]]);
      rows.push_back(gamma[kOthers[t][1]]);
      try {
        DecodeResult res = decode(symplectic_check_matrix(rows), target, priors, cfg);
        // The output anticommutes with both other logical types, so it is a
        // type-t logical whenever it commutes with every generator.
        if (is_logical(code, res.correction) &&
            symplectic_product(res.correction, logicals.get(type_at(kOthers[t][0]))) &&
            symplectic_product(res.correction, logicals.get(type_at(kOthers[t][1])))) {
          out.best[t] = std::move(res.correction);
        } else {
          out.skipped = true;
        }
      } catch (const InfeasibleSyndrome&) {
        out.skipped = true;
      }
    }
  });

  DistanceReport rep;
  rep.n = n;
  rep.trials = trials;
  rep.seed = seed;
  PauliString* witness[3] = {&rep.x_witness, &rep.z_witness, &rep.y_witness};
  std::size_t* bound[3] = {&rep.d_x_up, &rep.d_z_up, &rep.d_y_up};
  for (std::size_t t = 0; t < 3; ++t) {
    *witness[t] = logicals.get(type_at(t));
    *bound[t] = weight(*witness[t]);
  }
  for (const TrialOutcome& o : outcomes) {
    if (o.skipped) ++rep.skipped;
    for (std::size_t t = 0; t < 3; ++t) {
      if (o.best[t] && weight(*o.best[t]) < *bound[t]) {
        *bound[t] = weight(*o.best[t]);
        *witness[t] = *o.best[t];
      }
    }
    if (opts.keep_trace) rep.trace.push_back({rep.d_x_up, rep.d_z_up, rep.d_y_up});
  }
  return rep;
}

std::optional<std::size_t> exhaustive_distance(const StabilizerCode& code, std::size_t w_max,
                                               const oracle::EnumerationBudget& budget) {
  if (const auto hit = oracle::find_min_weight_logical(code, w_max, budget)) return weight(*hit);
  return std::nullopt;
}

std::optional<std::pair<std::size_t, DistanceReport>> search_optimal(std::size_t b, std::size_t a_max,
                                                                     std::size_t trials, const DecoderConfig& cfg,
                                                                     std::uint64_t seed, const SearchOptions& opts) {
  const std::size_t target = distance_target(b);
  for (std::size_t a = 0; a <= a_max; ++a) {
    const XYZParams p{a, b};
    if (code_dimension(p) != 1) continue;
    if (!has_repetition_structure(p, PauliType::X) || !has_repetition_structure(p, PauliType::Y) ||
        !has_repetition_structure(p, PauliType::Z)) {
      continue;
    }
    if (p.n() < target) continue;
    const StabilizerCode code = build_code(p);
    const std::size_t screen = std::min(opts.screen_trials, trials);
    DistanceReport rep = distance_upper_bound(code, screen, cfg, seed, opts.distance);
    if (rep.min_distance() < target) continue;
    if (trials > screen) rep = distance_upper_bound(code, trials, cfg, seed, opts.distance);
    if (rep.min_distance() != target) continue;
    rep.params = p;
    return std::make_pair(a, std::move(rep));
  }
  return std::nullopt;
}

const std::vector<OptimalCode>& known_optimal_codes() {
  static const std::vector<OptimalCode> table = {
      {0, 5, 5},    {1, 8, 7},    {2, 13, 7},   {3, 20, 11},  {4, 34, 13},  {5, 28, 13},
      {6, 54, 17},  {7, 64, 19},  {8, 63, 19},  {9, 101, 23}, {10, 122, 25}, {11, 114, 25},
  };
  return table;
}

OverheadRow overhead_row(std::size_t d, const std::vector<OptimalCode>& codes) {
  if (d < 3 || d % 2 == 0) throw std::invalid_argument("overhead: distance must be odd and at least 3");
  std::optional<std::size_t> best;
  for (const auto& c : codes) {
    if (c.d != d) continue;
    const std::size_t n = XYZParams{c.a, c.b}.n();
    if (!best || n < *best) best = n;
  }
  if (!best) throw std::invalid_argument("overhead: no listed XYZ cyclic code has distance " + std::to_string(d));
  return {d, *best, xzzx_qubit_count(d)};
}

}  // namespace xyz
