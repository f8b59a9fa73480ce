#pragma once

#include <cstddef>
#include <string>

#include "xyzcyclic/gf2.h"
#include "xyzcyclic/pauli.h"

namespace xyz {

/// Parameters of the XYZ cyclic code C(a, b); the seed generator is
/// X I^b Z I^a Y I Y I^a Z I^b X on n = 2(a+b)+7 qubits.
struct XYZParams {
  std::size_t a = 0;
  std::size_t b = 0;

  std::size_t n() const { return 2 * (a + b) + 7; }
  bool operator==(const XYZParams&) const = default;
};

/// Generators of the three circulant blocks: A for H_x, B for H_z and
/// C = A + B for the Y-part.
struct FamilyPolys {
  GF2Poly A;
  GF2Poly B;
  GF2Poly C;
};

FamilyPolys family_polys(const XYZParams& p);
/// The circulant generator whose kernel governs pure-sigma noise
/// (A for Z, B for X, C for Y).
GF2Poly pure_noise_poly(const XYZParams& p, PauliType sigma);

std::string seed_generator_label(const XYZParams& p);

/// All n cyclic shifts of the seed generator. Logicals (all-X, all-Z,
/// all-Y) are attached when the code encodes one qubit.
StabilizerCode build_code(const XYZParams& p);

/// Closed-form dimension: 1 or 3 depending on b mod 3 and a.
std::size_t code_dimension(const XYZParams& p);

/// gcd predicate for repetition structure under pure sigma noise.
/// Throws PreconditionError if the code does not encode exactly one qubit.
bool has_repetition_structure(const XYZParams& p, PauliType sigma);
/// Rank form of the same predicate: circulant rank of the sigma
/// polynomial equals n - 1. Defined for every (a, b).
bool repetition_by_rank(const XYZParams& p, PauliType sigma);

/// a = 2l(b+2) + l - 1 for the minimum-weight logical-X family.
XYZParams x_witness_params(std::size_t b, std::size_t l);
/// [I^{b+2} X I^{b+2}] repeated 2l+1 times, without the k = 1 check.
PauliString x_witness_pattern(std::size_t b, std::size_t l);
/// Same pattern, after checking that C(a, b) encodes a single qubit.
PauliString x_logical_witness(std::size_t b, std::size_t l);

/// 2b+5 when b mod 3 is 0 or 1, 2b+3 when b mod 3 is 2.
std::size_t y_weight_upper_bound(std::size_t b);

/// Low-weight Y-class logical built from a stabilizer row selection times
/// the all-Y logical. Throws WitnessNotFound if no candidate reaches the
/// bound, PreconditionError if k != 1.
PauliString y_logical_witness(const XYZParams& p);

/// Rotated-lattice XZZX surface code qubit count at distance d.
std::size_t xzzx_qubit_count(std::size_t d);

}  // namespace xyz
