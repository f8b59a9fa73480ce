#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "xyzcyclic/decoder.h"
#include "xyzcyclic/oracle.h"
#include "xyzcyclic/pauli.h"
#include "xyzcyclic/xyz_code.h"

namespace xyz {

/// Indices of a maximal independent subset of the generators, scanning
/// 1, 2, ..., m-1 and then 0, so a cyclic code with one dependency drops
/// its first row.
std::vector<std::size_t> independent_generator_indices(const StabilizerCode& code);

/// logical times a uniformly random combination of the independent
/// generators.
PauliString random_coset_element(const PauliString& logical, const StabilizerCode& code, std::mt19937_64& rng);

struct DistanceTrial {
  std::size_t d_x = 0;
  std::size_t d_z = 0;
  std::size_t d_y = 0;
};

struct DistanceReport {
  std::optional<XYZParams> params;
  std::size_t n = 0;
  std::size_t d_x_up = 0;
  std::size_t d_z_up = 0;
  std::size_t d_y_up = 0;
  PauliString x_witness;
  PauliString z_witness;
  PauliString y_witness;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  /// Trials in which a decode was infeasible or returned a non-logical.
  std::size_t skipped = 0;
  /// Running minima after each trial, filled when requested.
  std::vector<DistanceTrial> trace;

  std::size_t min_distance() const;
  std::size_t get(PauliType t) const;
};

struct DistanceOptions {
  /// Depolarizing prior handed to the decoder; smaller favours lighter
  /// outputs.
  double prior_p = 0.05;
  std::size_t threads = 1;
  bool keep_trace = false;
};

/// Decoder settings used for distance estimation when none are given.
DecoderConfig default_distance_decoder();

/// Monte Carlo upper bounds on the minimum X-, Z- and Y-type logical
/// weights. Each trial draws one coset representative per logical type and,
/// for each type, decodes syndrome (0,...,0,1,1) against the independent
/// generators stacked with the two other representatives.
DistanceReport distance_upper_bound(const StabilizerCode& code, std::size_t trials, const DecoderConfig& cfg,
                                    std::uint64_t seed, const DistanceOptions& opts = {});

/// Exact minimum logical weight up to w_max by enumeration, or nullopt if
/// every logical is heavier. Throws BudgetExceeded when too costly.
std::optional<std::size_t> exhaustive_distance(const StabilizerCode& code, std::size_t w_max,
                                               const oracle::EnumerationBudget& budget = {});

/// Weight the optimal code for b is expected to reach.
inline std::size_t distance_target(std::size_t b) { return y_weight_upper_bound(b); }

struct SearchOptions {
  std::size_t screen_trials = 200;
  DistanceOptions distance;
};

/// Smallest a <= a_max such that C(a, b) encodes one qubit, has repetition
/// structure under pure X, Y and Z noise, and whose estimated distance equals
/// distance_target(b). Candidates are screened with a short run and
/// confirmed with `trials`.
std::optional<std::pair<std::size_t, DistanceReport>> search_optimal(std::size_t b, std::size_t a_max,
                                                                     std::size_t trials, const DecoderConfig& cfg,
                                                                     std::uint64_t seed,
                                                                     const SearchOptions& opts = {});

struct OptimalCode {
  std::size_t b;
  std::size_t a;
  std::size_t d;
};

/// Reference optimal codes for b = 0..11 with their min(d_X, d_Z, d_Y).
const std::vector<OptimalCode>& known_optimal_codes();

struct OverheadRow {
  std::size_t d;
  std::size_t xyz_n;
  std::size_t xzzx_n;
};

/// Qubit counts at distance d: the smallest optimal XYZ cyclic code of that
/// distance against d*d for XZZX. Rejects even d, d < 3, and distances no
/// listed code reaches.
OverheadRow overhead_row(std::size_t d, const std::vector<OptimalCode>& codes = known_optimal_codes());

}  // namespace xyz
