#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "xyzcyclic/bitvec.h"
#include "xyzcyclic/gf2.h"
#include "xyzcyclic/pauli.h"

namespace xyz {

namespace detail {
struct TannerGraph;
}

/// Single-qubit Pauli channel. Probabilities must be nonnegative and sum to
/// one within 1e-12.
struct QubitPrior {
  double p_i = 1.0;
  double p_x = 0.0;
  double p_y = 0.0;
  double p_z = 0.0;

  static QubitPrior from_rates(double p_x, double p_y, double p_z) { return {1.0 - p_x - p_y - p_z, p_x, p_y, p_z}; }
  void validate() const;
};

struct ChannelPriors {
  std::vector<QubitPrior> qubits;

  static ChannelPriors uniform(std::size_t n, const QubitPrior& q) { return {std::vector<QubitPrior>(n, q)}; }
  static ChannelPriors depolarizing(std::size_t n, double p) { return uniform(n, QubitPrior::from_rates(p / 3, p / 3, p / 3)); }
  std::size_t num_qubits() const { return qubits.size(); }
  void validate() const;
};

enum class BpVariant { ProductSum, MinSum };
enum class BpSchedule { Parallel, Serial };

std::string to_string(BpVariant v);
std::string to_string(BpSchedule s);
BpVariant parse_bp_variant(const std::string& s);
BpSchedule parse_bp_schedule(const std::string& s);

struct DecoderConfig {
  std::size_t max_bp_iterations = 100;
  BpVariant bp_variant = BpVariant::ProductSum;
  double min_sum_scale = 1.0;
  /// 0 is OSD-0. Order w re-encodes every pattern of weight <= w over the
  /// non-pivot columns; when w covers all of them the search is exhaustive.
  std::size_t osd_order = 0;
  BpSchedule schedule = BpSchedule::Parallel;
  /// In an exhaustive OSD search over a stabilizer check matrix, pick the
  /// most probable stabilizer coset instead of the most probable error.
  bool coset_aware_exhaustive = true;
  /// Return the BP hard decision as soon as it matches the syndrome. When
  /// false, OSD post-processing runs on every call.
  bool stop_on_bp_convergence = true;

  void validate() const;
};

struct DecodeResult {
  PauliString correction;
  bool converged = false;
  bool used_osd = false;
  std::size_t iterations = 0;
};

struct BinaryDecodeResult {
  BitVec error;
  bool converged = false;
  bool used_osd = false;
  std::size_t iterations = 0;
};

/// Syndrome of a Pauli error against a check operator in symplectic form
/// (rows (h_z | h_x), see symplectic_check_matrix).
BitVec syndrome(const GF2Matrix& check_matrix, const PauliString& error);

/// BP + OSD over the 2n binary unknowns (e_x | e_z). Each qubit contributes a
/// factor node joining e_x[i] and e_z[i] that carries the joint channel
/// prior, so Y correlations enter message passing directly.
class SymplecticDecoder {
 public:
  SymplecticDecoder(GF2Matrix check_matrix, DecoderConfig cfg);

  const GF2Matrix& check_matrix() const { return check_; }
  const DecoderConfig& config() const { return cfg_; }

  /// Throws InfeasibleSyndrome if no Pauli reproduces `target`.
  DecodeResult decode(const BitVec& target, const ChannelPriors& priors) const;

 private:
  GF2Matrix check_;
  DecoderConfig cfg_;
  std::size_t n_;
  std::shared_ptr<const detail::TannerGraph> graph_;
  std::optional<RowSpaceBasis> stabilizers_;
};

/// BP + OSD for a plain binary parity-check problem with independent bits.
class BinaryDecoder {
 public:
  BinaryDecoder(GF2Matrix check_matrix, DecoderConfig cfg);

  const GF2Matrix& check_matrix() const { return check_; }
  BinaryDecodeResult decode(const BitVec& target, const std::vector<double>& bit_probs) const;

 private:
  GF2Matrix check_;
  DecoderConfig cfg_;
  std::shared_ptr<const detail::TannerGraph> graph_;
};

DecodeResult decode(const GF2Matrix& check_matrix, const BitVec& target, const ChannelPriors& priors,
                    const DecoderConfig& cfg);

/// Binary decoding of pure sigma noise on the single circulant block
/// generated by `circulant` (A for Z, B for X, C for Y).
BitVec decode_pure(PauliType sigma, const GF2Poly& circulant, std::size_t l, const BitVec& target, double p,
                   const DecoderConfig& cfg);

}  // namespace xyz
