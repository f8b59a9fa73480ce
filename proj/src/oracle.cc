#include "xyzcyclic/oracle.h"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <stdexcept>

#include "xyzcyclic/errors.h"

namespace xyz::oracle {

namespace {

constexpr std::size_t kMaxMlQubits = 10;
constexpr std::size_t kMaxCosetQubits = 7;
constexpr std::size_t kMaxBinaryBits = 20;
constexpr double kNegInf = -std::numeric_limits<double>::infinity();

double log_or_neg_inf(double p) { return p > 0 ? std::log(p) : kNegInf; }

double log_add(double a, double b) {
  if (a == kNegInf) return b;
  if (b == kNegInf) return a;
  const double hi = std::max(a, b);
  return hi + std::log1p(std::exp(std::min(a, b) - hi));
}

std::uint32_t to_mask(const BitVec& v) {
  std::uint32_t m = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v.get(i)) m |= std::uint32_t{1} << i;
  }
  return m;
}

bool parity(std::uint32_t v) { return std::popcount(v) & 1; }

// Small independent echelon form over packed (x | z << n) words.
class MaskBasis {
 public:
  void add(std::uint32_t v) {
    v = reduce(v);
    if (!v) return;
    const std::uint32_t pivot = v & (~v + 1);
    for (auto& b : rows_) {
      if (b & pivot) b ^= v;
    }
    rows_.push_back(v);
    pivots_.push_back(pivot);
  }
  std::uint32_t reduce(std::uint32_t v) const {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (v & pivots_[i]) v ^= rows_[i];
    }
    return v;
  }
  const std::vector<std::uint32_t>& rows() const { return rows_; }

 private:
  std::vector<std::uint32_t> rows_;
  std::vector<std::uint32_t> pivots_;
};

struct SmallCode {
  std::size_t n = 0;
  std::vector<std::uint32_t> gx;
  std::vector<std::uint32_t> gz;
  std::vector<std::array<double, 4>> logs;  // I, X, Z, Y

  SmallCode(const StabilizerCode& code, const ChannelPriors& priors) : n(code.num_qubits()) {
    if (priors.num_qubits() != n) throw std::invalid_argument("oracle: prior count does not match qubit count");
    for (const auto& g : code.generators()) {
      gx.push_back(to_mask(g.x()));
      gz.push_back(to_mask(g.z()));
    }
    for (const auto& q : priors.qubits) {
      logs.push_back({log_or_neg_inf(q.p_i), log_or_neg_inf(q.p_x), log_or_neg_inf(q.p_z), log_or_neg_inf(q.p_y)});
    }
  }

  bool matches(std::uint32_t ex, std::uint32_t ez, const BitVec& s) const {
    for (std::size_t r = 0; r < gx.size(); ++r) {
      if (parity((gx[r] & ez) ^ (gz[r] & ex)) != s.get(r)) return false;
    }
    return true;
  }

  double log_prob(std::uint32_t ex, std::uint32_t ez) const {
    double lp = 0.0;
    for (std::size_t q = 0; q < n; ++q) {
      lp += logs[q][((ex >> q) & 1u) | (((ez >> q) & 1u) << 1)];
    }
    return lp;
  }

  MaskBasis stabilizers() const {
    MaskBasis b;
    for (std::size_t r = 0; r < gx.size(); ++r) b.add(gx[r] | (gz[r] << n));
    return b;
  }

  PauliString to_pauli(std::uint32_t ex, std::uint32_t ez) const {
    PauliString p(n);
    for (std::size_t q = 0; q < n; ++q) {
      p.x().set(q, (ex >> q) & 1u);
      p.z().set(q, (ez >> q) & 1u);
    }
    return p;
  }
};

double binomial(std::size_t n, std::size_t k) {
  double c = 1.0;
  for (std::size_t i = 0; i < k; ++i) c = c * static_cast<double>(n - i) / static_cast<double>(i + 1);
  return c;
}

// Depth-first enumeration of Paulis with a fixed support size; `visit`
// receives the Pauli once its syndrome (against every generator) is zero.
class LogicalSearch {
 public:
  explicit LogicalSearch(const StabilizerCode& code) : code_(code), n_(code.num_qubits()) {
    const std::size_t rows = code.generators().size();
    words_ = BitVec::word_count(rows);
    // Column (q, t): which generators anticommute with Pauli t on qubit q.
    cols_.assign(n_ * 3 * words_, 0);
    static constexpr char kTypes[3] = {'X', 'Y', 'Z'};
    for (std::size_t q = 0; q < n_; ++q) {
      for (std::size_t t = 0; t < 3; ++t) {
        PauliString single(n_);
        single.set(q, kTypes[t]);
        for (std::size_t r = 0; r < rows; ++r) {
          if (symplectic_product(code.generators()[r], single)) {
            cols_[(q * 3 + t) * words_ + r / 64] |= std::uint64_t{1} << (r % 64);
          }
        }
      }
    }
  }

  template <typename Visit>
  bool run(std::size_t w, Visit&& visit) {
    stack_.assign((w + 1) * words_, 0);
    current_ = PauliString(n_);
    return dfs(0, 0, w, visit);
  }

 private:
  template <typename Visit>
  bool dfs(std::size_t start, std::size_t depth, std::size_t w, Visit& visit) {
    const std::uint64_t* acc = &stack_[depth * words_];
    if (depth == w) {
      for (std::size_t i = 0; i < words_; ++i) {
        if (acc[i]) return false;
      }
      if (code_.in_stabilizer_group(current_)) return false;
      return visit(current_);
    }
    static constexpr char kTypes[3] = {'X', 'Y', 'Z'};
    for (std::size_t q = start; q + (w - depth) <= n_; ++q) {
      for (std::size_t t = 0; t < 3; ++t) {
        std::uint64_t* next = &stack_[(depth + 1) * words_];
        const std::uint64_t* col = &cols_[(q * 3 + t) * words_];
        for (std::size_t i = 0; i < words_; ++i) next[i] = acc[i] ^ col[i];
        current_.set(q, kTypes[t]);
        if (dfs(q + 1, depth + 1, w, visit)) return true;
      }
      current_.set(q, 'I');
    }
    return false;
  }

  const StabilizerCode& code_;
  std::size_t n_;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> cols_;
  std::vector<std::uint64_t> stack_;
  PauliString current_;
};

void check_budget(std::size_t n, std::size_t w_max, const EnumerationBudget& budget) {
  if (w_max > budget.max_weight) {
    throw BudgetExceeded("enumeration weight " + std::to_string(w_max) + " exceeds the budget's max_weight",
                         pauli_candidates(n, w_max));
  }
  const double cost = pauli_candidates(n, w_max);
  if (cost > budget.max_candidates) {
    throw BudgetExceeded("enumeration over " + std::to_string(cost) + " candidates exceeds the budget", cost);
  }
}

}  // namespace

double pauli_candidates(std::size_t n, std::size_t w_max) {
  double total = 0.0;
  for (std::size_t w = 1; w <= std::min(w_max, n); ++w) total += binomial(n, w) * std::pow(3.0, static_cast<double>(w));
  return total;
}

std::string to_string(MlMode m) { return m == MlMode::CosetAware ? "coset_aware" : "most_probable_error"; }

MlResult ml_decode(const StabilizerCode& code, const BitVec& syndrome, const ChannelPriors& priors,
                   const EnumerationBudget& budget) {
  const std::size_t n = code.num_qubits();
  const double cost = std::pow(4.0, static_cast<double>(n));
  if (n > kMaxMlQubits || cost > budget.max_candidates) {
    throw BudgetExceeded("ml_decode: exhaustive search over 4^" + std::to_string(n) + " Paulis refused", cost);
  }
  if (syndrome.size() != code.generators().size()) {
    throw std::invalid_argument("ml_decode: syndrome length must equal the generator count");
  }
  const SmallCode sc(code, priors);
  const std::uint32_t limit = std::uint32_t{1} << n;
  MlResult out;

  if (n <= kMaxCosetQubits) {
    out.mode = MlMode::CosetAware;
    const MaskBasis stab = sc.stabilizers();
    struct Entry {
      double total = kNegInf;
      double best = kNegInf;
      std::uint32_t best_x = 0, best_z = 0;
      std::size_t order = 0;
    };
    std::map<std::uint32_t, Entry> cosets;
    for (std::uint32_t ex = 0; ex < limit; ++ex) {
      for (std::uint32_t ez = 0; ez < limit; ++ez) {
        if (!sc.matches(ex, ez, syndrome)) continue;
        const double lp = sc.log_prob(ex, ez);
        const std::uint32_t key = stab.reduce(ex | (ez << n));
        auto [it, inserted] = cosets.try_emplace(key);
        if (inserted) it->second.order = cosets.size();
        Entry& e = it->second;
        e.total = log_add(e.total, lp);
        if (lp > e.best) {
          e.best = lp;
          e.best_x = ex;
          e.best_z = ez;
        }
      }
    }
    if (cosets.empty()) throw InfeasibleSyndrome("ml_decode: no Pauli has the requested syndrome");
    const Entry* top = nullptr;
    for (const auto& [key, e] : cosets) {
      if (!top || e.total > top->total || (e.total == top->total && e.order < top->order)) top = &e;
    }
    out.correction = sc.to_pauli(top->best_x, top->best_z);
    out.log_prob = top->total;
    return out;
  }

  out.mode = MlMode::MostProbableError;
  bool found = false;
  std::uint32_t bx = 0, bz = 0;
  double best = kNegInf;
  for (std::uint32_t ex = 0; ex < limit; ++ex) {
    for (std::uint32_t ez = 0; ez < limit; ++ez) {
      if (!sc.matches(ex, ez, syndrome)) continue;
      const double lp = sc.log_prob(ex, ez);
      if (!found || lp > best) {
        found = true;
        best = lp;
        bx = ex;
        bz = ez;
      }
    }
  }
  if (!found) throw InfeasibleSyndrome("ml_decode: no Pauli has the requested syndrome");
  out.correction = sc.to_pauli(bx, bz);
  out.log_prob = best;
  return out;
}

double coset_log_probability(const StabilizerCode& code, const PauliString& error, const ChannelPriors& priors) {
  const std::size_t n = code.num_qubits();
  if (n > kMaxCosetQubits) {
    throw BudgetExceeded("coset_log_probability: n > 7 refused", std::pow(2.0, static_cast<double>(n)));
  }
  const SmallCode sc(code, priors);
  const MaskBasis stab = sc.stabilizers();
  const std::uint32_t e = to_mask(error.x()) | (to_mask(error.z()) << n);
  const auto& basis = stab.rows();
  const std::uint32_t mask = (std::uint32_t{1} << n) - 1;
  double total = kNegInf;
  for (std::uint32_t sel = 0; sel < (std::uint32_t{1} << basis.size()); ++sel) {
    std::uint32_t v = e;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      if ((sel >> i) & 1u) v ^= basis[i];
    }
    total = log_add(total, sc.log_prob(v & mask, v >> n));
  }
  return total;
}

BitVec ml_decode_binary(const GF2Matrix& h, const BitVec& syndrome, const std::vector<double>& bit_probs,
                        const EnumerationBudget& budget) {
  const std::size_t n = h.cols();
  const double cost = std::pow(2.0, static_cast<double>(n));
  if (n > kMaxBinaryBits || cost > budget.max_candidates) {
    throw BudgetExceeded("ml_decode_binary: exhaustive search over 2^" + std::to_string(n) + " patterns refused", cost);
  }
  if (syndrome.size() != h.rows() || bit_probs.size() != n) {
    throw std::invalid_argument("ml_decode_binary: dimension mismatch");
  }
  std::vector<std::uint32_t> rows;
  for (const auto& r : h.row_vectors()) rows.push_back(to_mask(r));
  std::vector<double> l1, l0;
  for (double p : bit_probs) {
    l1.push_back(log_or_neg_inf(p));
    l0.push_back(log_or_neg_inf(1.0 - p));
  }
  bool found = false;
  std::uint32_t best_e = 0;
  double best = kNegInf;
  for (std::uint32_t e = 0; e < (std::uint32_t{1} << n); ++e) {
    bool ok = true;
    for (std::size_t r = 0; r < rows.size() && ok; ++r) ok = parity(rows[r] & e) == syndrome.get(r);
    if (!ok) continue;
    double lp = 0.0;
    for (std::size_t i = 0; i < n; ++i) lp += ((e >> i) & 1u) ? l1[i] : l0[i];
    if (!found || lp > best) {
      found = true;
      best = lp;
      best_e = e;
    }
  }
  if (!found) throw InfeasibleSyndrome("ml_decode_binary: no pattern has the requested syndrome");
  BitVec out(n);
  for (std::size_t i = 0; i < n; ++i) out.set(i, (best_e >> i) & 1u);
  return out;
}

std::vector<EnumeratedLogical> enumerate_logicals(const StabilizerCode& code, std::size_t w_max,
                                                  const EnumerationBudget& budget) {
  check_budget(code.num_qubits(), w_max, budget);
  LogicalSearch search(code);
  std::vector<EnumeratedLogical> out;
  const auto& logicals = code.logicals();
  for (std::size_t w = 1; w <= std::min(w_max, code.num_qubits()); ++w) {
    search.run(w, [&](const PauliString& p) {
      EnumeratedLogical e{p, LogicalClass::Other};
      if (logicals) {
        const bool ax = symplectic_product(p, logicals->x_rep);
        const bool az = symplectic_product(p, logicals->z_rep);
        if (ax && az) {
          e.cls = LogicalClass::Y;
        } else if (az) {
          e.cls = LogicalClass::X;
        } else if (ax) {
          e.cls = LogicalClass::Z;
        }
      }
      out.push_back(std::move(e));
      return false;
    });
  }
  std::stable_sort(out.begin(), out.end(), [](const EnumeratedLogical& a, const EnumeratedLogical& b) {
    const std::size_t wa = weight(a.op), wb = weight(b.op);
    if (wa != wb) return wa < wb;
    return a.op.label() < b.op.label();
  });
  return out;
}

std::optional<PauliString> find_min_weight_logical(const StabilizerCode& code, std::size_t w_max,
                                                   const EnumerationBudget& budget) {
  check_budget(code.num_qubits(), w_max, budget);
  LogicalSearch search(code);
  std::optional<PauliString> hit;
  for (std::size_t w = 1; w <= std::min(w_max, code.num_qubits()); ++w) {
    search.run(w, [&](const PauliString& p) {
      hit = p;
      return true;
    });
    if (hit) break;
  }
  return hit;
}

}  // namespace xyz::oracle
