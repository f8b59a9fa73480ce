#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "xyzcyclic/bitvec.h"

namespace xyz {

/// Polynomial over GF(2); coefficient of x^i is bit i. Stored trimmed so that
/// equal polynomials compare equal.
class GF2Poly {
 public:
  GF2Poly() = default;

  static GF2Poly zero() { return {}; }
  static GF2Poly one() { return monomial(0); }
  static GF2Poly monomial(std::size_t exponent);
  /// Sum of x^e over the given exponents; repeated exponents cancel.
  static GF2Poly from_exponents(const std::vector<std::size_t>& exponents);
  /// x^l + 1.
  static GF2Poly cyclic_modulus(std::size_t l);
  /// Parses "1+x+x^3" style text (terms separated by '+', spaces ignored).
  static GF2Poly parse(const std::string& text);

  bool is_zero() const { return words_.empty(); }
  /// Degree, or nullopt for the zero polynomial.
  std::optional<std::size_t> degree() const;
  bool coeff(std::size_t i) const;
  void set_coeff(std::size_t i, bool v);
  std::vector<std::size_t> exponents() const;
  std::size_t term_count() const;

  GF2Poly& operator+=(const GF2Poly& o);
  friend GF2Poly operator+(GF2Poly a, const GF2Poly& b) { return a += b; }
  friend GF2Poly operator*(const GF2Poly& a, const GF2Poly& b);
  bool operator==(const GF2Poly& o) const = default;

  /// Folds exponents modulo l, i.e. reduction modulo x^l + 1.
  GF2Poly reduced_mod_cyclic(std::size_t l) const;

  /// Coefficients 0..l-1 as a bit sequence (the first row of the circulant).
  BitVec to_bits(std::size_t l) const;
  static GF2Poly from_bits(const BitVec& bits);

  std::string to_string() const;

 private:
  void trim();
  std::vector<std::uint64_t> words_;
};

struct PolyDivision {
  GF2Poly quotient;
  GF2Poly remainder;
};

/// Long division; throws std::domain_error on a zero divisor.
PolyDivision poly_divmod(const GF2Poly& a, const GF2Poly& b);

/// a * b reduced modulo x^l + 1. Throws std::invalid_argument when l == 0.
GF2Poly poly_mul_mod(const GF2Poly& a, const GF2Poly& b, std::size_t l);

/// Monic gcd. Throws std::invalid_argument when both inputs are zero.
GF2Poly poly_gcd(const GF2Poly& a, const GF2Poly& b);

/// Rank of the l x l circulant generated by `gen`: l - deg gcd(gen, x^l + 1).
std::size_t circulant_rank(const GF2Poly& gen, std::size_t l);

/// Dense GF(2) matrix, one bit-packed BitVec per row.
class GF2Matrix {
 public:
  GF2Matrix() = default;
  GF2Matrix(std::size_t rows, std::size_t cols);
  static GF2Matrix from_rows(std::vector<BitVec> rows, std::size_t cols);
  static GF2Matrix identity(std::size_t n);
  /// Row r is the generator's coefficient row cyclically shifted right by r.
  static GF2Matrix circulant(const GF2Poly& gen, std::size_t l);

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }
  bool get(std::size_t r, std::size_t c) const { return rows_[r].get(c); }
  void set(std::size_t r, std::size_t c, bool v) { rows_[r].set(c, v); }
  const BitVec& row(std::size_t r) const { return rows_[r]; }
  BitVec& row(std::size_t r) { return rows_[r]; }
  const std::vector<BitVec>& row_vectors() const { return rows_; }

  void append_row(BitVec row);
  GF2Matrix transposed() const;
  /// this * v over GF(2); v.size() must equal cols().
  BitVec mul_vec(const BitVec& v) const;
  friend GF2Matrix operator*(const GF2Matrix& a, const GF2Matrix& b);
  friend GF2Matrix operator+(const GF2Matrix& a, const GF2Matrix& b);
  bool operator==(const GF2Matrix& o) const = default;
  bool is_zero() const;

 private:
  std::size_t cols_ = 0;
  std::vector<BitVec> rows_;
};

std::size_t gf2_rank(const GF2Matrix& m);

/// True iff v is a GF(2) combination of rows of m. Throws on length mismatch.
bool in_rowspace(const GF2Matrix& m, const BitVec& v);

/// Reduced echelon basis of a row space, built once and queried many times.
class RowSpaceBasis {
 public:
  RowSpaceBasis() = default;
  explicit RowSpaceBasis(const GF2Matrix& m);

  std::size_t rank() const { return basis_.size(); }
  std::size_t cols() const { return cols_; }
  /// Reduces v against the basis; the result is zero iff v is in the span.
  BitVec reduce(BitVec v) const;
  bool contains(const BitVec& v) const;

 private:
  std::size_t cols_ = 0;
  std::vector<BitVec> basis_;
  std::vector<std::size_t> pivots_;
};

}  // namespace xyz
