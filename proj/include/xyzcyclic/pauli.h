#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "xyzcyclic/bitvec.h"
#include "xyzcyclic/gf2.h"

namespace xyz {

enum class PauliType { X, Y, Z };

char pauli_char(PauliType t);
/// Accepts 'X', 'Y' or 'Z'; throws otherwise.
PauliType parse_pauli_type(std::string_view s);

/// n-qubit Pauli operator in binary symplectic form, phase dropped.
/// Qubit i is X for (1,0), Z for (0,1), Y for (1,1).
class PauliString {
 public:
  PauliString() = default;
  explicit PauliString(std::size_t n) : x_(n), z_(n) {}
  PauliString(BitVec x, BitVec z);

  /// Uppercase labels over {I,X,Y,Z} only.
  static PauliString from_label(std::string_view label);
  /// Every qubit carries `t`.
  static PauliString uniform(std::size_t n, PauliType t);
  /// Symplectic vector (x | z) of length 2n.
  static PauliString from_symplectic(const BitVec& xz);

  std::size_t num_qubits() const { return x_.size(); }
  const BitVec& x() const { return x_; }
  const BitVec& z() const { return z_; }
  BitVec& x() { return x_; }
  BitVec& z() { return z_; }

  char at(std::size_t i) const;
  void set(std::size_t i, char pauli);

  BitVec symplectic() const { return x_.concat(z_); }
  std::string label() const;

  PauliString& operator*=(const PauliString& o);
  bool operator==(const PauliString& o) const = default;

  PauliString rotated(std::size_t k) const { return {x_.rotated(k), z_.rotated(k)}; }

 private:
  BitVec x_;
  BitVec z_;
};

/// 0 iff p and q commute. Throws std::invalid_argument on length mismatch.
bool symplectic_product(const PauliString& p, const PauliString& q);
PauliString multiply(const PauliString& p, const PauliString& q);
std::size_t weight(const PauliString& p);

/// Logical representatives of a single encoded qubit.
struct LogicalSet {
  PauliString x_rep;
  PauliString z_rep;
  PauliString y_rep;

  const PauliString& get(PauliType t) const;
};

/// Stabilizer code given by a (possibly redundant) generator list.
class StabilizerCode {
 public:
  StabilizerCode() = default;
  explicit StabilizerCode(std::vector<PauliString> generators, std::optional<LogicalSet> logicals = std::nullopt);
  static StabilizerCode from_labels(const std::vector<std::string>& labels);

  std::size_t num_qubits() const { return n_; }
  const std::vector<PauliString>& generators() const { return generators_; }
  /// Rows (H_x | H_z), one per generator.
  const GF2Matrix& h_matrix() const { return h_; }
  std::size_t independent_rank() const { return stabilizers_.rank(); }
  const std::optional<LogicalSet>& logicals() const { return logicals_; }
  void set_logicals(LogicalSet l);

  /// Membership in the stabilizer group, signs ignored.
  bool in_stabilizer_group(const PauliString& p) const;
  const RowSpaceBasis& stabilizer_basis() const { return stabilizers_; }

 private:
  std::size_t n_ = 0;
  std::vector<PauliString> generators_;
  GF2Matrix h_;
  RowSpaceBasis stabilizers_;
  std::optional<LogicalSet> logicals_;
};

GF2Matrix x_block(const StabilizerCode& code);
GF2Matrix z_block(const StabilizerCode& code);

/// H_x H_z^T + H_z H_x^T == 0.
bool check_abelian(const StabilizerCode& code);
std::size_t num_logical_qubits(const StabilizerCode& code);
bool commutes_with_all(const StabilizerCode& code, const PauliString& p);
/// Commutes with every generator and is not itself a stabilizer.
bool is_logical(const StabilizerCode& code, const PauliString& p);

/// Product of the generators whose index is set in `selection`.
PauliString product_of_generators(const StabilizerCode& code, const BitVec& selection);

/// Check operator for syndrome extraction on symplectic error vectors
/// (e_x | e_z): each row is (h_z | h_x), so row . e = symplectic product.
GF2Matrix symplectic_check_matrix(const std::vector<PauliString>& rows);

}  // namespace xyz
