#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "xyzcyclic/decoder.h"
#include "xyzcyclic/pauli.h"
#include "xyzcyclic/xyz_code.h"

namespace xyz {

enum class NoiseKind { Depolarizing, ZBiased, Pure };

/// Single-qubit Pauli channel with total error rate p. For ZBiased,
/// eta = p_Z / (p_X + p_Y) with p_X = p_Y.
struct NoiseModel {
  NoiseKind kind = NoiseKind::Depolarizing;
  double p = 0.0;
  double eta = 0.0;
  PauliType sigma = PauliType::Z;

  static NoiseModel depolarizing(double p) { return {NoiseKind::Depolarizing, p, 0.0, PauliType::Z}; }
  static NoiseModel z_biased(double p, double eta) { return {NoiseKind::ZBiased, p, eta, PauliType::Z}; }
  static NoiseModel pure(PauliType sigma, double p) { return {NoiseKind::Pure, p, 0.0, sigma}; }

  /// depolarizing, z_biased, pure_X, pure_Y or pure_Z.
  std::string kind_name() const;
  /// Bias column of the CSV: 0.5 for depolarizing, eta for z_biased,
  /// inf for pure Z and 0 for pure X or Y.
  double eta_value() const;
};

/// Parses the names produced by kind_name(); eta is only read for z_biased.
NoiseModel parse_noise(const std::string& kind, double p, double eta = 0.0);

struct ChannelRates {
  double p_x = 0.0;
  double p_y = 0.0;
  double p_z = 0.0;
};

ChannelRates channel_rates(const NoiseModel& noise);
ChannelPriors priors_for(const NoiseModel& noise, std::size_t n);

PauliString sample_error(std::size_t n, const ChannelRates& rates, std::mt19937_64& rng);

enum class TrialOutcome { Success, LogicalFailure, Infeasible };

struct TrialRecord {
  PauliString error;
  PauliString correction;
  PauliString residual;
  TrialOutcome outcome = TrialOutcome::Success;
};

/// Decoder settings used by simulations when none are given: 50 serial
/// min-sum iterations (scale 0.625) followed by OSD of order 2.
DecoderConfig default_simulation_decoder();

struct SimulationOptions {
  /// Decode pure noise on the single circulant block. When false every
  /// noise model goes through the full symplectic decoder.
  bool pure_on_circulant = true;
  std::size_t threads = 1;
};

/// Decoding context for one (code, noise, decoder config) combination,
/// shareable across threads.
class TrialRunner {
 public:
  TrialRunner(const XYZParams& params, const NoiseModel& noise, const DecoderConfig& cfg,
              const SimulationOptions& opts = {});

  const StabilizerCode& code() const { return code_; }
  const NoiseModel& noise() const { return noise_; }

  TrialRecord run(std::mt19937_64& rng) const;
  /// Decodes a given error instead of sampling one.
  TrialRecord run_with_error(const PauliString& error) const;

 private:
  XYZParams params_;
  StabilizerCode code_;
  NoiseModel noise_;
  ChannelRates rates_;
  DecoderConfig cfg_;
  bool pure_path_ = false;
  std::optional<SymplecticDecoder> full_;
  std::optional<BinaryDecoder> binary_;
  ChannelPriors priors_;
  std::vector<double> bit_probs_;
};

TrialRecord run_trial(const XYZParams& params, const NoiseModel& noise, const DecoderConfig& cfg,
                      std::mt19937_64& rng, const SimulationOptions& opts = {});

struct RateEstimate {
  XYZParams params;
  NoiseModel noise;
  std::size_t trials = 0;
  std::size_t failures = 0;
  std::size_t infeasible = 0;
  double p_logical = 0.0;
  double stderr_ = 0.0;
  std::uint64_t seed = 0;

  /// Wilson score interval at the given z (1.96 for 95%).
  std::pair<double, double> wilson(double z = 1.96) const;
};

/// Wilson score interval for `failures` out of `trials`.
std::pair<double, double> wilson_interval(std::size_t failures, std::size_t trials, double z = 1.96);

/// p_logical counts logical failures only; infeasible decodes are tallied
/// on their own.
RateEstimate logical_error_rate(const XYZParams& params, const NoiseModel& noise, std::size_t trials,
                                const DecoderConfig& cfg, std::uint64_t seed, const SimulationOptions& opts = {});

/// Every (code, p) pair in code-major order, all with the same seed.
std::vector<RateEstimate> threshold_sweep(const std::vector<XYZParams>& codes, const NoiseModel& noise_kind,
                                          const std::vector<double>& p_grid, std::size_t trials,
                                          const DecoderConfig& cfg, std::uint64_t seed,
                                          const SimulationOptions& opts = {});

inline constexpr const char* kSweepCsvHeader = "a,b,n,noise_kind,eta,p,trials,failures,p_logical,stderr,seed";
inline constexpr const char* kSweepCsvSchema = "# xyzcyclic sweep schema v1";

/// Shortest round-trip decimal form.
std::string format_double(double v);
void write_sweep_csv(std::ostream& os, const std::vector<RateEstimate>& rows);

}  // namespace xyz
