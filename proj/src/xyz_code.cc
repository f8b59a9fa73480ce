#include "xyzcyclic/xyz_code.h"

#include <numeric>
#include <optional>
#include <vector>

#include "xyzcyclic/errors.h"

namespace xyz {

FamilyPolys family_polys(const XYZParams& p) {
  const std::size_t s = p.a + p.b;
  FamilyPolys f;
  f.A = GF2Poly::from_exponents({0, s + 2, s + 4, 2 * s + 6});
  f.B = GF2Poly::from_exponents({p.b + 1, s + 2, s + 4, 2 * p.a + p.b + 5});
  f.C = f.A + f.B;
  return f;
}

GF2Poly pure_noise_poly(const XYZParams& p, PauliType sigma) {
  FamilyPolys f = family_polys(p);
  switch (sigma) {
    case PauliType::Z:
      return f.A;
    case PauliType::X:
      return f.B;
    case PauliType::Y:
      break;
  }
  return f.C;
}

std::string seed_generator_label(const XYZParams& p) {
  const std::string ib(p.b, 'I');
  const std::string ia(p.a, 'I');
  return "X" + ib + "Z" + ia + "YIY" + ia + "Z" + ib + "X";
}

StabilizerCode build_code(const XYZParams& p) {
  const PauliString seed = PauliString::from_label(seed_generator_label(p));
  const std::size_t n = p.n();
  std::vector<PauliString> rows;
  rows.reserve(n);
  for (std::size_t r = 0; r < n; ++r) rows.push_back(seed.rotated(r));
  StabilizerCode code(std::move(rows));
  if (num_logical_qubits(code) == 1) {
    code.set_logicals({PauliString::uniform(n, PauliType::X), PauliString::uniform(n, PauliType::Z),
                       PauliString::uniform(n, PauliType::Y)});
  }
  return code;
}

std::size_t code_dimension(const XYZParams& p) {
  switch (p.b % 3) {
    case 0:
      return 1;
    case 2:
      return (p.a + 1) % 3 == 0 ? 3 : 1;
    default:
      return p.a % 3 == 0 ? 3 : 1;
  }
}

bool has_repetition_structure(const XYZParams& p, PauliType sigma) {
  if (code_dimension(p) != 1) {
    throw PreconditionError("repetition structure is only defined for codes encoding one logical qubit");
  }
  const std::size_t n = p.n();
  auto coprime = [n](std::size_t m) { return std::gcd(m, n) == 1; };
  switch (sigma) {
    case PauliType::Z:
      return coprime(p.a + p.b + 2) && coprime(p.a + p.b + 4);
    case PauliType::X:
      return coprime(p.a + 1) && coprime(p.a + 3);
    case PauliType::Y:
      break;
  }
  return coprime(p.b + 1) && coprime(2 * p.a + p.b + 5);
}

bool repetition_by_rank(const XYZParams& p, PauliType sigma) {
  return circulant_rank(pure_noise_poly(p, sigma), p.n()) == p.n() - 1;
}

XYZParams x_witness_params(std::size_t b, std::size_t l) {
  if (l == 0) throw std::invalid_argument("x witness requires l >= 1");
  return {2 * l * (b + 2) + l - 1, b};
}

PauliString x_witness_pattern(std::size_t b, std::size_t l) {
  const std::string pad(b + 2, 'I');
  const std::string block = pad + "X" + pad;
  const XYZParams p = x_witness_params(b, l);
  std::string label;
  label.reserve(p.n());
  for (std::size_t i = 0; i < 2 * l + 1; ++i) label += block;
  return PauliString::from_label(label);
}

PauliString x_logical_witness(std::size_t b, std::size_t l) {
  const XYZParams p = x_witness_params(b, l);
  if (code_dimension(p) != 1) {
    throw PreconditionError("x_logical_witness: C(" + std::to_string(p.a) + "," + std::to_string(b) +
                            ") encodes three logical qubits");
  }
  return x_witness_pattern(b, l);
}

std::size_t y_weight_upper_bound(std::size_t b) { return b % 3 == 2 ? 2 * b + 3 : 2 * b + 5; }

namespace {

// Selection over the n-1 rows 1..n-1 (the first cyclic row is dropped),
// following `pattern` from the given phase. When mirrored, the first half is
// patterned and the second half is its reverse.
BitVec row_selection(std::size_t n, const std::vector<bool>& pattern, std::size_t phase, bool mirrored) {
  const std::size_t rows = n - 1;
  const std::size_t period = pattern.size();
  BitVec sel(n);
  const std::size_t span = mirrored ? rows / 2 : rows;
  for (std::size_t i = 0; i < span; ++i) {
    if (!pattern[(i + phase) % period]) continue;
    sel.set(i + 1, true);
    if (mirrored) sel.set(rows - i, true);
  }
  return sel;
}

}  // namespace

PauliString y_logical_witness(const XYZParams& p) {
  if (code_dimension(p) != 1) throw PreconditionError("y_logical_witness: code must encode one logical qubit");
  const std::size_t n = p.n();
  const StabilizerCode code = build_code(p);
  const std::size_t target = y_weight_upper_bound(p.b);

  if (p.b % 3 == 0) {
    const std::string zs(p.b + 1, 'Z');
    const std::string label =
        zs + std::string(p.a + 1, 'I') + "YY" + std::string(p.a + 1, 'I') + zs + "Y";
    PauliString w = PauliString::from_label(label);
    if (is_logical(code, w)) return w;
  }

  const PauliString all_y = PauliString::uniform(n, PauliType::Y);
  const std::vector<std::vector<bool>> patterns = {{true, false}, {true, true, true, false, false, false}};
  std::optional<PauliString> best;
  for (const auto& pattern : patterns) {
    for (std::size_t phase = 0; phase < pattern.size(); ++phase) {
      for (bool mirrored : {false, true}) {
        PauliString cand = multiply(product_of_generators(code, row_selection(n, pattern, phase, mirrored)), all_y);
        if (best && weight(cand) >= weight(*best)) continue;
        if (is_logical(code, cand)) best = std::move(cand);
      }
    }
  }
  if (!best || weight(*best) > target) {
    throw WitnessNotFound("y_logical_witness: no row selection reaches weight " + std::to_string(target) + " for C(" +
                          std::to_string(p.a) + "," + std::to_string(p.b) + ")");
  }
  return *best;
}

std::size_t xzzx_qubit_count(std::size_t d) { return d * d; }

}  // namespace xyz
