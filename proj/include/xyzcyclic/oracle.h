#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "xyzcyclic/bitvec.h"
#include "xyzcyclic/decoder.h"
#include "xyzcyclic/gf2.h"
#include "xyzcyclic/pauli.h"

// Brute-force references. Nothing here touches the BP/OSD decoder path.
namespace xyz::oracle {

/// Enumeration limits; exceeding either one is refused with BudgetExceeded.
struct EnumerationBudget {
  double max_candidates = 1e8;
  std::size_t max_weight = 64;
};

/// Number of Pauli operators of weight 1..w_max on n qubits.
double pauli_candidates(std::size_t n, std::size_t w_max);

enum class MlMode { CosetAware, MostProbableError };
std::string to_string(MlMode m);

struct MlResult {
  PauliString correction;
  MlMode mode = MlMode::MostProbableError;
  /// log probability of the chosen coset (coset-aware) or error.
  double log_prob = 0.0;
};

/// Maximum-likelihood decoding by enumerating all 4^n Paulis (n <= 10).
/// The syndrome is indexed by the code's generator list. Coset-aware for
/// n <= 7, most probable error otherwise.
MlResult ml_decode(const StabilizerCode& code, const BitVec& syndrome, const ChannelPriors& priors,
                   const EnumerationBudget& budget = {});

/// Log probability of the stabilizer coset containing `error` (n <= 7).
double coset_log_probability(const StabilizerCode& code, const PauliString& error, const ChannelPriors& priors);

/// Most probable binary error with H e = syndrome by enumerating 2^n
/// patterns (n <= 20). Ties resolve to the lowest pattern index.
BitVec ml_decode_binary(const GF2Matrix& h, const BitVec& syndrome, const std::vector<double>& bit_probs,
                        const EnumerationBudget& budget = {});

enum class LogicalClass { X, Z, Y, Other };

struct EnumeratedLogical {
  PauliString op;
  LogicalClass cls = LogicalClass::Other;
};

/// Every logical of weight <= w_max, ordered by (weight, label). The class is
/// read off the commutation with the stored X_L / Z_L (Other if the code has
/// no stored logicals).
std::vector<EnumeratedLogical> enumerate_logicals(const StabilizerCode& code, std::size_t w_max,
                                                  const EnumerationBudget& budget = {});

/// Smallest-weight logical with weight <= w_max, searching weights in
/// ascending order and stopping at the first weight that has one.
std::optional<PauliString> find_min_weight_logical(const StabilizerCode& code, std::size_t w_max,
                                                   const EnumerationBudget& budget = {});

}  // namespace xyz::oracle
