#include "xyzcyclic/pauli.h"

#include <stdexcept>

namespace xyz {

char pauli_char(PauliType t) {
  switch (t) {
    case PauliType::X:
      return 'X';
    case PauliType::Y:
      return 'Y';
    case PauliType::Z:
      return 'Z';
  }
  return '?';
}

PauliType parse_pauli_type(std::string_view s) {
  if (s == "X" || s == "x") return PauliType::X;
  if (s == "Y" || s == "y") return PauliType::Y;
  if (s == "Z" || s == "z") return PauliType::Z;
  throw std::invalid_argument("unknown Pauli type '" + std::string(s) + "' (expected X, Y or Z)");
}

PauliString::PauliString(BitVec x, BitVec z) : x_(std::move(x)), z_(std::move(z)) {
  if (x_.size() != z_.size()) throw std::invalid_argument("PauliString: x and z parts differ in length");
}

PauliString PauliString::from_label(std::string_view label) {
  PauliString p(label.size());
  for (std::size_t i = 0; i < label.size(); ++i) p.set(i, label[i]);
  return p;
}

PauliString PauliString::uniform(std::size_t n, PauliType t) {
  PauliString p(n);
  if (t != PauliType::Z) p.x_ = BitVec::ones(n);
  if (t != PauliType::X) p.z_ = BitVec::ones(n);
  return p;
}

PauliString PauliString::from_symplectic(const BitVec& xz) {
  if (xz.size() % 2 != 0) throw std::invalid_argument("PauliString::from_symplectic: odd length");
  const std::size_t n = xz.size() / 2;
  return {xz.slice(0, n), xz.slice(n, n)};
}

char PauliString::at(std::size_t i) const {
  static constexpr char kChars[4] = {'I', 'X', 'Z', 'Y'};
  return kChars[(x_.get(i) ? 1 : 0) | (z_.get(i) ? 2 : 0)];
}

void PauliString::set(std::size_t i, char pauli) {
  switch (pauli) {
    case 'I':
      x_.set(i, false);
      z_.set(i, false);
      break;
    case 'X':
      x_.set(i, true);
      z_.set(i, false);
      break;
    case 'Y':
      x_.set(i, true);
      z_.set(i, true);
      break;
    case 'Z':
      x_.set(i, false);
      z_.set(i, true);
      break;
    default:
      throw std::invalid_argument(std::string("invalid Pauli label character '") + pauli + "' (expected I, X, Y or Z)");
  }
}

std::string PauliString::label() const {
  std::string s(num_qubits(), 'I');
  for (std::size_t i = 0; i < s.size(); ++i) s[i] = at(i);
  return s;
}

PauliString& PauliString::operator*=(const PauliString& o) {
  if (o.num_qubits() != num_qubits()) throw std::invalid_argument("Pauli product: qubit count mismatch");
  x_ ^= o.x_;
  z_ ^= o.z_;
  return *this;
}

bool symplectic_product(const PauliString& p, const PauliString& q) {
  if (p.num_qubits() != q.num_qubits()) throw std::invalid_argument("symplectic_product: qubit count mismatch");
  return p.x().dot(q.z()) != p.z().dot(q.x());
}

PauliString multiply(const PauliString& p, const PauliString& q) {
  PauliString r = p;
  r *= q;
  return r;
}

std::size_t weight(const PauliString& p) { return (p.x() | p.z()).popcount(); }

const PauliString& LogicalSet::get(PauliType t) const {
  switch (t) {
    case PauliType::X:
      return x_rep;
    case PauliType::Z:
      return z_rep;
    case PauliType::Y:
      break;
  }
  return y_rep;
}

StabilizerCode::StabilizerCode(std::vector<PauliString> generators, std::optional<LogicalSet> logicals)
    : generators_(std::move(generators)) {
  if (generators_.empty()) throw std::invalid_argument("StabilizerCode: at least one generator required");
  n_ = generators_.front().num_qubits();
  h_ = GF2Matrix(0, 2 * n_);
  for (const auto& g : generators_) {
    if (g.num_qubits() != n_) throw std::invalid_argument("StabilizerCode: generators differ in length");
    h_.append_row(g.symplectic());
  }
  stabilizers_ = RowSpaceBasis(h_);
  if (logicals) set_logicals(std::move(*logicals));
}

StabilizerCode StabilizerCode::from_labels(const std::vector<std::string>& labels) {
  std::vector<PauliString> gens;
  gens.reserve(labels.size());
  for (const auto& l : labels) gens.push_back(PauliString::from_label(l));
  return StabilizerCode(std::move(gens));
}

void StabilizerCode::set_logicals(LogicalSet l) {
  for (const PauliString* p : {&l.x_rep, &l.z_rep, &l.y_rep}) {
    if (p->num_qubits() != n_) throw std::invalid_argument("StabilizerCode: logical has wrong qubit count");
  }
  logicals_ = std::move(l);
}

bool StabilizerCode::in_stabilizer_group(const PauliString& p) const {
  if (p.num_qubits() != n_) throw std::invalid_argument("in_stabilizer_group: qubit count mismatch");
  return stabilizers_.contains(p.symplectic());
}

GF2Matrix x_block(const StabilizerCode& code) {
  GF2Matrix m(0, code.num_qubits());
  for (const auto& g : code.generators()) m.append_row(g.x());
  return m;
}

GF2Matrix z_block(const StabilizerCode& code) {
  GF2Matrix m(0, code.num_qubits());
  for (const auto& g : code.generators()) m.append_row(g.z());
  return m;
}

bool check_abelian(const StabilizerCode& code) {
  const GF2Matrix hx = x_block(code);
  const GF2Matrix hz = z_block(code);
  return (hx * hz.transposed() + hz * hx.transposed()).is_zero();
}

std::size_t num_logical_qubits(const StabilizerCode& code) { return code.num_qubits() - code.independent_rank(); }

bool commutes_with_all(const StabilizerCode& code, const PauliString& p) {
  for (const auto& g : code.generators()) {
    if (symplectic_product(g, p)) return false;
  }
  return true;
}

bool is_logical(const StabilizerCode& code, const PauliString& p) {
  if (p.num_qubits() != code.num_qubits()) throw std::invalid_argument("is_logical: qubit count mismatch");
  return commutes_with_all(code, p) && !code.in_stabilizer_group(p);
}

PauliString product_of_generators(const StabilizerCode& code, const BitVec& selection) {
  if (selection.size() != code.generators().size()) {
    throw std::invalid_argument("product_of_generators: selection length must equal generator count");
  }
  PauliString out(code.num_qubits());
  for (std::size_t i = selection.find_next(0); i < selection.size(); i = selection.find_next(i + 1)) {
    out *= code.generators()[i];
  }
  return out;
}

GF2Matrix symplectic_check_matrix(const std::vector<PauliString>& rows) {
  if (rows.empty()) return {};
  GF2Matrix m(0, 2 * rows.front().num_qubits());
  for (const auto& r : rows) m.append_row(r.z().concat(r.x()));
  return m;
}

}  // namespace xyz
