#include "xyzcyclic/gf2.h"

#include <algorithm>
#include <bit>
#include <cctype>
#include <stdexcept>

namespace xyz {

namespace {
constexpr std::size_t kBits = 64;
}

GF2Poly GF2Poly::monomial(std::size_t exponent) {
  GF2Poly p;
  p.set_coeff(exponent, true);
  return p;
}

GF2Poly GF2Poly::from_exponents(const std::vector<std::size_t>& exponents) {
  GF2Poly p;
  for (std::size_t e : exponents) p.set_coeff(e, !p.coeff(e));
  return p;
}

GF2Poly GF2Poly::cyclic_modulus(std::size_t l) { return from_exponents({0, l}); }

GF2Poly GF2Poly::parse(const std::string& text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  if (s.empty()) throw std::invalid_argument("GF2Poly::parse: empty input");
  if (s == "0") return {};
  std::vector<std::size_t> exps;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    const std::size_t end = std::min(s.find('+', pos), s.size());
    const std::string term = s.substr(pos, end - pos);
    if (term == "1") {
      exps.push_back(0);
    } else if (term == "x") {
      exps.push_back(1);
    } else if (term.size() > 2 && term.compare(0, 2, "x^") == 0 &&
               std::all_of(term.begin() + 2, term.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
      exps.push_back(std::stoul(term.substr(2)));
    } else {
      throw std::invalid_argument("GF2Poly::parse: bad term '" + term + "'");
    }
    pos = end + 1;
  }
  return from_exponents(exps);
}

std::optional<std::size_t> GF2Poly::degree() const {
  if (words_.empty()) return std::nullopt;
  const auto top = words_.back();
  return (words_.size() - 1) * kBits + (kBits - 1 - static_cast<std::size_t>(std::countl_zero(top)));
}

bool GF2Poly::coeff(std::size_t i) const {
  const std::size_t w = i / kBits;
  if (w >= words_.size()) return false;
  return (words_[w] >> (i % kBits)) & 1u;
}

void GF2Poly::set_coeff(std::size_t i, bool v) {
  const std::size_t w = i / kBits;
  if (w >= words_.size()) {
    if (!v) return;
    words_.resize(w + 1, 0);
  }
  const std::uint64_t mask = std::uint64_t{1} << (i % kBits);
  if (v) {
    words_[w] |= mask;
  } else {
    words_[w] &= ~mask;
    trim();
  }
}

std::vector<std::size_t> GF2Poly::exponents() const {
  std::vector<std::size_t> out;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    auto bits = words_[w];
    while (bits) {
      out.push_back(w * kBits + static_cast<std::size_t>(std::countr_zero(bits)));
      bits &= bits - 1;
    }
  }
  return out;
}

std::size_t GF2Poly::term_count() const {
  std::size_t c = 0;
  for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

GF2Poly& GF2Poly::operator+=(const GF2Poly& o) {
  if (o.words_.size() > words_.size()) words_.resize(o.words_.size(), 0);
  for (std::size_t i = 0; i < o.words_.size(); ++i) words_[i] ^= o.words_[i];
  trim();
  return *this;
}

GF2Poly operator*(const GF2Poly& a, const GF2Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  GF2Poly r;
  r.words_.assign(a.words_.size() + b.words_.size(), 0);
  for (std::size_t e : a.exponents()) {
    const std::size_t ws = e / kBits;
    const std::size_t bs = e % kBits;
    for (std::size_t i = 0; i < b.words_.size(); ++i) {
      r.words_[i + ws] ^= b.words_[i] << bs;
      if (bs != 0) r.words_[i + ws + 1] ^= b.words_[i] >> (kBits - bs);
    }
  }
  r.trim();
  return r;
}

GF2Poly GF2Poly::reduced_mod_cyclic(std::size_t l) const {
  if (l == 0) throw std::invalid_argument("reduction modulo x^l+1 requires l >= 1");
  GF2Poly r;
  for (std::size_t e : exponents()) {
    const std::size_t k = e % l;
    r.set_coeff(k, !r.coeff(k));
  }
  return r;
}

BitVec GF2Poly::to_bits(std::size_t l) const {
  BitVec v(l);
  for (std::size_t e : reduced_mod_cyclic(l).exponents()) v.set(e, true);
  return v;
}

GF2Poly GF2Poly::from_bits(const BitVec& bits) {
  GF2Poly p;
  for (std::size_t i = bits.find_next(0); i < bits.size(); i = bits.find_next(i + 1)) p.set_coeff(i, true);
  return p;
}

std::string GF2Poly::to_string() const {
  if (is_zero()) return "0";
  std::string s;
  for (std::size_t e : exponents()) {
    if (!s.empty()) s += "+";
    if (e == 0) {
      s += "1";
    } else if (e == 1) {
      s += "x";
    } else {
      s += "x^" + std::to_string(e);
    }
  }
  return s;
}

void GF2Poly::trim() {
  while (!words_.empty() && words_.back() == 0) words_.pop_back();
}

PolyDivision poly_divmod(const GF2Poly& a, const GF2Poly& b) {
  const auto db = b.degree();
  if (!db) throw std::domain_error("polynomial division by zero");
  PolyDivision out{GF2Poly{}, a};
  while (true) {
    const auto dr = out.remainder.degree();
    if (!dr || *dr < *db) break;
    const std::size_t shift = *dr - *db;
    out.quotient.set_coeff(shift, true);
    out.remainder += b * GF2Poly::monomial(shift);
  }
  return out;
}

GF2Poly poly_mul_mod(const GF2Poly& a, const GF2Poly& b, std::size_t l) {
  if (l == 0) throw std::invalid_argument("poly_mul_mod: l must be positive");
  return (a.reduced_mod_cyclic(l) * b.reduced_mod_cyclic(l)).reduced_mod_cyclic(l);
}

GF2Poly poly_gcd(const GF2Poly& a, const GF2Poly& b) {
  if (a.is_zero() && b.is_zero()) throw std::invalid_argument("poly_gcd: both inputs are zero");
  GF2Poly x = a;
  GF2Poly y = b;
  while (!y.is_zero()) {
    GF2Poly r = poly_divmod(x, y).remainder;
    x = std::move(y);
    y = std::move(r);
  }
  return x;
}

std::size_t circulant_rank(const GF2Poly& gen, std::size_t l) {
  if (l == 0) throw std::invalid_argument("circulant_rank: l must be positive");
  const GF2Poly g = gen.reduced_mod_cyclic(l);
  if (g.is_zero()) return 0;
  return l - *poly_gcd(g, GF2Poly::cyclic_modulus(l)).degree();
}

GF2Matrix::GF2Matrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows, BitVec(cols)) {}

GF2Matrix GF2Matrix::from_rows(std::vector<BitVec> rows, std::size_t cols) {
  GF2Matrix m;
  m.cols_ = cols;
  for (auto& r : rows) {
    if (r.size() != cols) throw std::invalid_argument("GF2Matrix::from_rows: row length mismatch");
  }
  m.rows_ = std::move(rows);
  return m;
}

GF2Matrix GF2Matrix::identity(std::size_t n) {
  GF2Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
  return m;
}

GF2Matrix GF2Matrix::circulant(const GF2Poly& gen, std::size_t l) {
  const BitVec first = gen.to_bits(l);
  GF2Matrix m;
  m.cols_ = l;
  m.rows_.reserve(l);
  for (std::size_t r = 0; r < l; ++r) m.rows_.push_back(first.rotated(r));
  return m;
}

void GF2Matrix::append_row(BitVec row) {
  if (row.size() != cols_) throw std::invalid_argument("GF2Matrix::append_row: length mismatch");
  rows_.push_back(std::move(row));
}

GF2Matrix GF2Matrix::transposed() const {
  GF2Matrix t(cols_, rows());
  for (std::size_t r = 0; r < rows(); ++r) {
    const BitVec& row = rows_[r];
    for (std::size_t c = row.find_next(0); c < cols_; c = row.find_next(c + 1)) t.set(c, r, true);
  }
  return t;
}

BitVec GF2Matrix::mul_vec(const BitVec& v) const {
  if (v.size() != cols_) throw std::invalid_argument("GF2Matrix::mul_vec: length mismatch");
  BitVec out(rows());
  for (std::size_t r = 0; r < rows(); ++r) {
    if (rows_[r].dot(v)) out.set(r, true);
  }
  return out;
}

GF2Matrix operator*(const GF2Matrix& a, const GF2Matrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("GF2Matrix product: inner dimension mismatch");
  GF2Matrix out(a.rows(), b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    const BitVec& ar = a.row(r);
    for (std::size_t k = ar.find_next(0); k < a.cols(); k = ar.find_next(k + 1)) out.row(r) ^= b.row(k);
  }
  return out;
}

GF2Matrix operator+(const GF2Matrix& a, const GF2Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("GF2Matrix sum: shape mismatch");
  GF2Matrix out = a;
  for (std::size_t r = 0; r < a.rows(); ++r) out.row(r) ^= b.row(r);
  return out;
}

bool GF2Matrix::is_zero() const {
  return std::all_of(rows_.begin(), rows_.end(), [](const BitVec& r) { return r.none(); });
}

std::size_t gf2_rank(const GF2Matrix& m) { return RowSpaceBasis(m).rank(); }

bool in_rowspace(const GF2Matrix& m, const BitVec& v) {
  if (v.size() != m.cols()) throw std::invalid_argument("in_rowspace: vector length does not match matrix columns");
  return RowSpaceBasis(m).contains(v);
}

RowSpaceBasis::RowSpaceBasis(const GF2Matrix& m) : cols_(m.cols()) {
  for (const BitVec& row : m.row_vectors()) {
    BitVec r = reduce(row);
    const std::size_t p = r.find_next(0);
    if (p == cols_) continue;
    // Keep the basis fully reduced: clear the new pivot from older rows.
    for (auto& b : basis_) {
      if (b.get(p)) b ^= r;
    }
    basis_.push_back(std::move(r));
    pivots_.push_back(p);
  }
}

BitVec RowSpaceBasis::reduce(BitVec v) const {
  if (v.size() != cols_) throw std::invalid_argument("RowSpaceBasis::reduce: length mismatch");
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    if (v.get(pivots_[i])) v ^= basis_[i];
  }
  return v;
}

bool RowSpaceBasis::contains(const BitVec& v) const { return reduce(v).none(); }

}  // namespace xyz
