#include "xyzcyclic/decoder.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <stdexcept>
#include <variant>

#include "xyzcyclic/errors.h"

namespace xyz {

namespace {

constexpr double kLlrClip = 40.0;
constexpr double kMinMagnitude = 1e-12;
constexpr double kMaxOsdCandidates = 1 << 22;
constexpr double kInf = std::numeric_limits<double>::infinity();

double clip(double v) { return std::clamp(v, -kLlrClip, kLlrClip); }

// log(e^a + e^b), tolerant of -inf arguments.
double log_add(double a, double b) {
  if (a == -kInf) return b;
  if (b == -kInf) return a;
  const double hi = std::max(a, b);
  return hi + std::log1p(std::exp(std::min(a, b) - hi));
}

double safe_log(double p) { return p > 0 ? std::log(p) : -kInf; }

// phi(x) = -log tanh(x/2); self-inverse on (0, inf).
double phi(double x) {
  x = std::max(x, kMinMagnitude);
  return std::log1p(2.0 / std::expm1(x));
}

// Joint log-probabilities per qubit, indexed by (x bit) | (z bit) << 1.
using JointLogs = std::array<double, 4>;

JointLogs joint_logs(const QubitPrior& q) {
  return {safe_log(q.p_i), safe_log(q.p_x), safe_log(q.p_z), safe_log(q.p_y)};
}

struct IndependentEvidence {
  std::vector<double> llr;       // log P(0)/P(1), clipped
  std::vector<double> cost_one;  // -log P(1)
  std::vector<double> cost_zero; // -log P(0)
};

struct PairedEvidence {
  std::size_t n = 0;
  std::vector<JointLogs> logs;
};

using Evidence = std::variant<IndependentEvidence, PairedEvidence>;

}  // namespace

namespace detail {

struct TannerGraph {
  std::size_t num_vars = 0;
  std::size_t num_checks = 0;
  std::vector<std::size_t> check_start;  // CSR offsets into edge_var
  std::vector<std::size_t> edge_var;
  std::vector<std::vector<std::size_t>> var_edges;

  explicit TannerGraph(const GF2Matrix& h) : num_vars(h.cols()), num_checks(h.rows()), var_edges(h.cols()) {
    check_start.reserve(num_checks + 1);
    check_start.push_back(0);
    for (std::size_t c = 0; c < num_checks; ++c) {
      const BitVec& row = h.row(c);
      for (std::size_t v = row.find_next(0); v < num_vars; v = row.find_next(v + 1)) {
        var_edges[v].push_back(edge_var.size());
        edge_var.push_back(v);
      }
      check_start.push_back(edge_var.size());
    }
  }
};

}  // namespace detail

namespace {

struct BpOutput {
  BitVec hard;
  std::vector<double> posterior;
  bool converged = false;
  std::size_t iterations = 0;
};

bool syndrome_matches(const GF2Matrix& h, const BitVec& e, const BitVec& target) {
  for (std::size_t r = 0; r < h.rows(); ++r) {
    if (h.row(r).dot(e) != target.get(r)) return false;
  }
  return true;
}

class BeliefPropagation {
 public:
  BeliefPropagation(const detail::TannerGraph& g, const GF2Matrix& h, const Evidence& ev, const DecoderConfig& cfg)
      : g_(g), h_(h), ev_(ev), cfg_(cfg), r_(g.edge_var.size(), 0.0), q_(g.edge_var.size(), 0.0),
        check_sum_(g.num_vars, 0.0), local_(g.num_vars, 0.0) {}

  BpOutput run(const BitVec& target) {
    update_local();
    BpOutput out;
    out.hard = BitVec(g_.num_vars);
    out.posterior.assign(g_.num_vars, 0.0);
    for (std::size_t it = 1; it <= cfg_.max_bp_iterations; ++it) {
      if (cfg_.schedule == BpSchedule::Parallel) {
        for (std::size_t e = 0; e < q_.size(); ++e) {
          const std::size_t v = g_.edge_var[e];
          q_[e] = clip(local_[v] + check_sum_[v] - r_[e]);
        }
        for (std::size_t c = 0; c < g_.num_checks; ++c) update_check(c, target.get(c));
        std::fill(check_sum_.begin(), check_sum_.end(), 0.0);
        for (std::size_t e = 0; e < r_.size(); ++e) check_sum_[g_.edge_var[e]] += r_[e];
      } else {
        for (std::size_t c = 0; c < g_.num_checks; ++c) {
          const std::size_t lo = g_.check_start[c];
          const std::size_t hi = g_.check_start[c + 1];
          for (std::size_t e = lo; e < hi; ++e) {
            const std::size_t v = g_.edge_var[e];
            q_[e] = clip(local_[v] + check_sum_[v] - r_[e]);
          }
          old_.assign(r_.begin() + static_cast<std::ptrdiff_t>(lo), r_.begin() + static_cast<std::ptrdiff_t>(hi));
          update_check(c, target.get(c));
          for (std::size_t e = lo; e < hi; ++e) check_sum_[g_.edge_var[e]] += r_[e] - old_[e - lo];
        }
      }
      update_local();
      for (std::size_t v = 0; v < g_.num_vars; ++v) {
        out.posterior[v] = local_[v] + check_sum_[v];
        out.hard.set(v, out.posterior[v] < 0);
      }
      out.iterations = it;
      if (syndrome_matches(h_, out.hard, target)) {
        out.converged = true;
        break;
      }
    }
    return out;
  }

 private:
  void update_check(std::size_t c, bool syndrome_bit) {
    const std::size_t lo = g_.check_start[c];
    const std::size_t hi = g_.check_start[c + 1];
    if (lo == hi) return;
    bool negative = syndrome_bit;
    for (std::size_t e = lo; e < hi; ++e) negative ^= q_[e] < 0;
    if (cfg_.bp_variant == BpVariant::MinSum) {
      double min1 = kInf;
      double min2 = kInf;
      std::size_t arg = lo;
      for (std::size_t e = lo; e < hi; ++e) {
        const double m = std::abs(q_[e]);
        if (m < min1) {
          min2 = min1;
          min1 = m;
          arg = e;
        } else if (m < min2) {
          min2 = m;
        }
      }
      for (std::size_t e = lo; e < hi; ++e) {
        const double mag = e == arg ? min2 : min1;
        const bool neg = negative ^ (q_[e] < 0);
        r_[e] = clip(cfg_.min_sum_scale * (neg ? -mag : mag));
      }
      return;
    }
    double total = 0.0;
    for (std::size_t e = lo; e < hi; ++e) total += phi(std::abs(q_[e]));
    for (std::size_t e = lo; e < hi; ++e) {
      const double rest = std::max(total - phi(std::abs(q_[e])), 0.0);
      const double mag = hi - lo == 1 ? kLlrClip : phi(rest);
      const bool neg = negative ^ (q_[e] < 0);
      r_[e] = clip(neg ? -mag : mag);
    }
  }

  // Local messages into every variable: fixed priors for independent bits,
  // or the qubit factor's marginalization over its partner bit.
  void update_local() {
    if (const auto* ind = std::get_if<IndependentEvidence>(&ev_)) {
      local_ = ind->llr;
      return;
    }
    const auto& pe = std::get<PairedEvidence>(ev_);
    for (std::size_t i = 0; i < pe.n; ++i) {
      const JointLogs& l = pe.logs[i];  // I, X, Z, Y
      const double lx = check_sum_[i];
      const double lz = check_sum_[pe.n + i];
      // Partner message in log form: log mu(0) = 0, log mu(1) = -L.
      local_[i] = clip(log_add(l[0], l[2] - lz) - log_add(l[1], l[3] - lz));
      local_[pe.n + i] = clip(log_add(l[0], l[1] - lx) - log_add(l[2], l[3] - lx));
    }
  }

  const detail::TannerGraph& g_;
  const GF2Matrix& h_;
  const Evidence& ev_;
  const DecoderConfig& cfg_;
  std::vector<double> r_;
  std::vector<double> q_;
  std::vector<double> check_sum_;
  std::vector<double> local_;
  std::vector<double> old_;
};

double error_cost(const Evidence& ev, const BitVec& e) {
  double cost = 0.0;
  if (const auto* ind = std::get_if<IndependentEvidence>(&ev)) {
    for (std::size_t v = 0; v < e.size(); ++v) cost += e.get(v) ? ind->cost_one[v] : ind->cost_zero[v];
    return cost;
  }
  const auto& pe = std::get<PairedEvidence>(ev);
  for (std::size_t i = 0; i < pe.n; ++i) {
    const int idx = (e.get(i) ? 1 : 0) | (e.get(pe.n + i) ? 2 : 0);
    cost -= pe.logs[i][static_cast<std::size_t>(idx)];
  }
  return cost;
}

double combinations(std::size_t n, std::size_t k) {
  double c = 1.0;
  for (std::size_t i = 0; i < k; ++i) c = c * static_cast<double>(n - i) / static_cast<double>(i + 1);
  return c;
}

// Ordered statistics decoding. Columns are sorted by descending posterior
// error probability (ascending LLR, lowest index first on ties); the first
// independent columns form the information set.
BitVec osd(const GF2Matrix& h, const BitVec& target, const std::vector<double>& posterior, const Evidence& ev,
           const DecoderConfig& cfg, const RowSpaceBasis* cosets) {
  const std::size_t m = h.rows();
  const std::size_t nv = h.cols();
  std::vector<std::size_t> order(nv);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return posterior[a] < posterior[b]; });

  std::vector<BitVec> rows = h.row_vectors();
  std::vector<char> sb(m);
  for (std::size_t r = 0; r < m; ++r) sb[r] = target.get(r);

  std::vector<std::size_t> pivot_col;
  std::vector<char> is_pivot(nv, 0);
  std::size_t rank = 0;
  for (std::size_t col : order) {
    if (rank == m) break;
    std::size_t piv = rank;
    while (piv < m && !rows[piv].get(col)) ++piv;
    if (piv == m) continue;
    std::swap(rows[piv], rows[rank]);
    std::swap(sb[piv], sb[rank]);
    for (std::size_t r = 0; r < m; ++r) {
      if (r != rank && rows[r].get(col)) {
        rows[r] ^= rows[rank];
        sb[r] ^= sb[rank];
      }
    }
    pivot_col.push_back(col);
    is_pivot[col] = 1;
    ++rank;
  }
  for (std::size_t r = rank; r < m; ++r) {
    if (sb[r]) throw InfeasibleSyndrome("syndrome is not in the column space of the check matrix");
  }

  BitVec base_pivots(rank);
  for (std::size_t r = 0; r < rank; ++r) base_pivots.set(r, sb[r]);
  auto assemble = [&](const BitVec& pivots, const std::vector<std::size_t>& flipped) {
    BitVec e(nv);
    for (std::size_t r = 0; r < rank; ++r) {
      if (pivots.get(r)) e.set(pivot_col[r], true);
    }
    for (std::size_t j : flipped) e.set(j, true);
    return e;
  };
  if (cfg.osd_order == 0) return assemble(base_pivots, {});

  std::vector<std::size_t> free_cols;
  for (std::size_t col : order) {
    if (!is_pivot[col]) free_cols.push_back(col);
  }
  const std::size_t f = free_cols.size();
  const std::size_t w = std::min(cfg.osd_order, f);
  const bool exhaustive = cfg.osd_order >= f;
  double count = 0;
  for (std::size_t k = 0; k <= w; ++k) count += combinations(f, k);
  if (count > kMaxOsdCandidates) {
    throw BudgetExceeded("OSD order " + std::to_string(cfg.osd_order) + " over " + std::to_string(f) +
                             " free columns exceeds the candidate budget",
                         count);
  }
  std::vector<BitVec> free_effect;
  free_effect.reserve(f);
  for (std::size_t j : free_cols) {
    BitVec col(rank);
    for (std::size_t r = 0; r < rank; ++r) col.set(r, rows[r].get(j));
    free_effect.push_back(std::move(col));
  }

  const bool by_coset = exhaustive && cosets != nullptr && cfg.coset_aware_exhaustive;
  struct CosetStats {
    double log_prob;
    double best_cost;
    BitVec best;
    std::size_t first_seen;
  };
  std::map<std::vector<BitVec::Word>, CosetStats> coset_table;

  BitVec best = assemble(base_pivots, {});
  double best_cost = error_cost(ev, best);
  std::vector<std::size_t> flipped;
  std::size_t seen = 0;
  auto consider = [&](const BitVec& pivots) {
    BitVec e = assemble(pivots, flipped);
    const double cost = error_cost(ev, e);
    if (by_coset) {
      const BitVec key = cosets->reduce(e);
      std::vector<BitVec::Word> words(key.words().begin(), key.words().end());
      auto it = coset_table.find(words);
      if (it == coset_table.end()) {
        coset_table.emplace(std::move(words), CosetStats{-cost, cost, e, seen++});
      } else {
        it->second.log_prob = log_add(it->second.log_prob, -cost);
        if (cost < it->second.best_cost) {
          it->second.best_cost = cost;
          it->second.best = e;
        }
      }
    } else if (cost < best_cost) {
      best_cost = cost;
      best = std::move(e);
    }
  };
  // Depth-first enumeration of flip sets of size <= w in free-column order.
  auto dfs = [&](auto&& self, std::size_t start, const BitVec& pivots) -> void {
    consider(pivots);
    if (flipped.size() == w) return;
    for (std::size_t i = start; i < f; ++i) {
      flipped.push_back(free_cols[i]);
      self(self, i + 1, pivots ^ free_effect[i]);
      flipped.pop_back();
    }
  };
  dfs(dfs, 0, base_pivots);

  if (by_coset) {
    const CosetStats* top = nullptr;
    for (const auto& [key, stats] : coset_table) {
      if (!top || stats.log_prob > top->log_prob ||
          (stats.log_prob == top->log_prob && stats.first_seen < top->first_seen)) {
        top = &stats;
      }
    }
    return top->best;
  }
  return best;
}

void check_target(const GF2Matrix& h, const BitVec& target) {
  if (target.size() != h.rows()) throw std::invalid_argument("decode: syndrome length does not match check rows");
}

}  // namespace

void QubitPrior::validate() const {
  for (double p : {p_i, p_x, p_y, p_z}) {
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("QubitPrior: probabilities must lie in [0, 1]");
  }
  if (std::abs(p_i + p_x + p_y + p_z - 1.0) > 1e-12) throw std::invalid_argument("QubitPrior: probabilities must sum to 1");
}

void ChannelPriors::validate() const {
  for (const auto& q : qubits) q.validate();
}

std::string to_string(BpVariant v) { return v == BpVariant::MinSum ? "min_sum" : "product_sum"; }
std::string to_string(BpSchedule s) { return s == BpSchedule::Serial ? "serial" : "parallel"; }

BpVariant parse_bp_variant(const std::string& s) {
  if (s == "product_sum" || s == "product") return BpVariant::ProductSum;
  if (s == "min_sum") return BpVariant::MinSum;
  throw std::invalid_argument("unknown bp_variant '" + s + "' (expected product_sum or min_sum)");
}

BpSchedule parse_bp_schedule(const std::string& s) {
  if (s == "parallel") return BpSchedule::Parallel;
  if (s == "serial") return BpSchedule::Serial;
  throw std::invalid_argument("unknown schedule '" + s + "' (expected parallel or serial)");
}

void DecoderConfig::validate() const {
  if (max_bp_iterations == 0) throw std::invalid_argument("DecoderConfig: max_bp_iterations must be positive");
  if (bp_variant == BpVariant::MinSum && !(min_sum_scale > 0.0 && min_sum_scale <= 1.0)) {
    throw std::invalid_argument("DecoderConfig: min_sum_scale must lie in (0, 1]");
  }
}

BitVec syndrome(const GF2Matrix& check_matrix, const PauliString& error) {
  if (check_matrix.cols() != 2 * error.num_qubits()) {
    throw std::invalid_argument("syndrome: check matrix width must be twice the qubit count");
  }
  return check_matrix.mul_vec(error.symplectic());
}

SymplecticDecoder::SymplecticDecoder(GF2Matrix check_matrix, DecoderConfig cfg)
    : check_(std::move(check_matrix)), cfg_(cfg), n_(check_.cols() / 2) {
  cfg_.validate();
  if (check_.cols() % 2 != 0) throw std::invalid_argument("SymplecticDecoder: check matrix must have 2n columns");
  graph_ = std::make_shared<detail::TannerGraph>(check_);
  // Rows (h_z | h_x) correspond to stabilizers (h_x | h_z) in error
  // coordinates. Coset grouping is only meaningful if those commute.
  GF2Matrix stab(0, check_.cols());
  for (const BitVec& row : check_.row_vectors()) stab.append_row(row.slice(n_, n_).concat(row.slice(0, n_)));
  bool self_orthogonal = true;
  for (const BitVec& s : stab.row_vectors()) {
    if (check_.mul_vec(s).any()) {
      self_orthogonal = false;
      break;
    }
  }
  if (self_orthogonal) stabilizers_.emplace(stab);
}

DecodeResult SymplecticDecoder::decode(const BitVec& target, const ChannelPriors& priors) const {
  check_target(check_, target);
  if (priors.num_qubits() != n_) throw std::invalid_argument("decode: prior count does not match qubit count");
  PairedEvidence pe;
  pe.n = n_;
  pe.logs.reserve(n_);
  for (const auto& q : priors.qubits) pe.logs.push_back(joint_logs(q));
  const Evidence ev = std::move(pe);

  BeliefPropagation bp(*graph_, check_, ev, cfg_);
  BpOutput out = bp.run(target);
  DecodeResult res;
  res.converged = out.converged;
  res.iterations = out.iterations;
  BitVec e;
  if (out.converged && cfg_.stop_on_bp_convergence) {
    e = std::move(out.hard);
  } else {
    e = osd(check_, target, out.posterior, ev, cfg_, stabilizers_ ? &*stabilizers_ : nullptr);
    res.used_osd = true;
  }
  res.correction = PauliString::from_symplectic(e);
  return res;
}

BinaryDecoder::BinaryDecoder(GF2Matrix check_matrix, DecoderConfig cfg) : check_(std::move(check_matrix)), cfg_(cfg) {
  cfg_.validate();
  graph_ = std::make_shared<detail::TannerGraph>(check_);
}

BinaryDecodeResult BinaryDecoder::decode(const BitVec& target, const std::vector<double>& bit_probs) const {
  check_target(check_, target);
  if (bit_probs.size() != check_.cols()) throw std::invalid_argument("decode: prior count does not match bit count");
  IndependentEvidence ind;
  for (double p : bit_probs) {
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("decode: bit probabilities must lie in [0, 1]");
    ind.llr.push_back(clip(safe_log(1.0 - p) - safe_log(p)));
    ind.cost_one.push_back(-safe_log(p));
    ind.cost_zero.push_back(-safe_log(1.0 - p));
  }
  const Evidence ev = std::move(ind);
  BeliefPropagation bp(*graph_, check_, ev, cfg_);
  BpOutput out = bp.run(target);
  BinaryDecodeResult res;
  res.converged = out.converged;
  res.iterations = out.iterations;
  if (out.converged && cfg_.stop_on_bp_convergence) {
    res.error = std::move(out.hard);
  } else {
    res.error = osd(check_, target, out.posterior, ev, cfg_, nullptr);
    res.used_osd = true;
  }
  return res;
}

DecodeResult decode(const GF2Matrix& check_matrix, const BitVec& target, const ChannelPriors& priors,
                    const DecoderConfig& cfg) {
  return SymplecticDecoder(check_matrix, cfg).decode(target, priors);
}

BitVec decode_pure(PauliType /*sigma*/, const GF2Poly& circulant, std::size_t l, const BitVec& target, double p,
                   const DecoderConfig& cfg) {
  BinaryDecoder dec(GF2Matrix::circulant(circulant, l), cfg);
  return dec.decode(target, std::vector<double>(l, p)).error;
}

}  // namespace xyz
