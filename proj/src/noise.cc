#include "xyzcyclic/noise.h"

#include <charconv>
#include <cmath>
#include <limits>
#include <ostream>
#include <stdexcept>

#include "xyzcyclic/errors.h"
#include "xyzcyclic/parallel.h"

namespace xyz {

namespace {

constexpr std::uint64_t kNoiseStream = 0x6e6f697365;  // "noise"

void validate(const NoiseModel& noise) {
  if (!(noise.p >= 0.0 && noise.p <= 1.0)) throw std::invalid_argument("noise: p must lie in [0, 1]");
  if (noise.kind == NoiseKind::ZBiased && !(noise.eta > 0.0)) {
    throw std::invalid_argument("noise: bias eta must be positive");
  }
}

}  // namespace

std::string NoiseModel::kind_name() const {
  switch (kind) {
    case NoiseKind::Depolarizing:
      return "depolarizing";
    case NoiseKind::ZBiased:
      return "z_biased";
    case NoiseKind::Pure:
      return std::string("pure_") + pauli_char(sigma);
  }
  return "";
}

double NoiseModel::eta_value() const {
  switch (kind) {
    case NoiseKind::Depolarizing:
      return 0.5;
    case NoiseKind::ZBiased:
      return eta;
    case NoiseKind::Pure:
      return sigma == PauliType::Z ? std::numeric_limits<double>::infinity() : 0.0;
  }
  return 0.0;
}

NoiseModel parse_noise(const std::string& kind, double p, double eta) {
  NoiseModel m;
  if (kind == "depolarizing") {
    m = NoiseModel::depolarizing(p);
  } else if (kind == "z_biased") {
    m = NoiseModel::z_biased(p, eta);
  } else if (kind.size() == 6 && kind.rfind("pure_", 0) == 0) {
    m = NoiseModel::pure(parse_pauli_type(kind.substr(5)), p);
  } else {
    throw std::invalid_argument("unknown noise kind '" + kind + "'");
  }
  validate(m);
  return m;
}

ChannelRates channel_rates(const NoiseModel& noise) {
  validate(noise);
  const double p = noise.p;
  switch (noise.kind) {
    case NoiseKind::Depolarizing:
      return {p / 3, p / 3, p / 3};
    case NoiseKind::ZBiased: {
      const double side = p / (2 * (noise.eta + 1));
      return {side, side, p - 2 * side};
    }
    case NoiseKind::Pure:
      return {noise.sigma == PauliType::X ? p : 0.0, noise.sigma == PauliType::Y ? p : 0.0,
              noise.sigma == PauliType::Z ? p : 0.0};
  }
  return {};
}

DecoderConfig default_simulation_decoder() {
  DecoderConfig cfg;
  cfg.max_bp_iterations = 50;
  cfg.bp_variant = BpVariant::MinSum;
  cfg.min_sum_scale = 0.625;
  cfg.schedule = BpSchedule::Serial;
  cfg.osd_order = 2;
  return cfg;
}

ChannelPriors priors_for(const NoiseModel& noise, std::size_t n) {
  const ChannelRates r = channel_rates(noise);
  return ChannelPriors::uniform(n, QubitPrior::from_rates(r.p_x, r.p_y, r.p_z));
}

PauliString sample_error(std::size_t n, const ChannelRates& rates, std::mt19937_64& rng) {
  PauliString e(n);
  const double cx = rates.p_x;
  const double cy = cx + rates.p_y;
  const double cz = cy + rates.p_z;
  for (std::size_t i = 0; i < n; ++i) {
    const double u = uniform_unit(rng);
    if (u < cx) {
      e.set(i, 'X');
    } else if (u < cy) {
      e.set(i, 'Y');
    } else if (u < cz) {
      e.set(i, 'Z');
    }
  }
  return e;
}

TrialRunner::TrialRunner(const XYZParams& params, const NoiseModel& noise, const DecoderConfig& cfg,
                         const SimulationOptions& opts)
    : params_(params), code_(build_code(params)), noise_(noise), rates_(channel_rates(noise)), cfg_(cfg) {
  if (!code_.logicals()) throw PreconditionError("simulation needs a code that encodes one qubit");
  pure_path_ = noise.kind == NoiseKind::Pure && opts.pure_on_circulant;
  if (pure_path_) {
    // A sigma error flips generator r iff the generator's letter differs
    // from sigma on that qubit; that pattern is a single circulant block.
    GF2Matrix block = noise.sigma == PauliType::Z   ? x_block(code_)
                      : noise.sigma == PauliType::X ? z_block(code_)
                                                    : x_block(code_) + z_block(code_);
    binary_.emplace(std::move(block), cfg);
    bit_probs_.assign(code_.num_qubits(), noise.p);
  } else {
    full_.emplace(symplectic_check_matrix(code_.generators()), cfg);
    priors_ = priors_for(noise, code_.num_qubits());
  }
}

TrialRecord TrialRunner::run(std::mt19937_64& rng) const {
  return run_with_error(sample_error(code_.num_qubits(), rates_, rng));
}

TrialRecord TrialRunner::run_with_error(const PauliString& error) const {
  const std::size_t n = code_.num_qubits();
  TrialRecord rec;
  rec.error = error;
  try {
    if (pure_path_) {
      const char letter = pauli_char(noise_.sigma);
      BitVec bits(n);
      for (std::size_t i = 0; i < n; ++i) {
        const char c = error.at(i);
        if (c != 'I' && c != letter) throw std::invalid_argument("pure-noise trial given an error of another type");
        bits.set(i, c == letter);
      }
      const BitVec target = binary_->check_matrix().mul_vec(bits);
      const BitVec fix = binary_->decode(target, bit_probs_).error;
      rec.correction = PauliString(n);
      for (std::size_t i = 0; i < n; ++i) {
        if (fix.get(i)) rec.correction.set(i, letter);
      }
    } else {
      const BitVec target = syndrome(full_->check_matrix(), error);
      rec.correction = full_->decode(target, priors_).correction;
    }
  } catch (const InfeasibleSyndrome&) {
    rec.outcome = TrialOutcome::Infeasible;
    return rec;
  }
  rec.residual = multiply(error, rec.correction);
  const LogicalSet& l = *code_.logicals();
  if (symplectic_product(rec.residual, l.x_rep) || symplectic_product(rec.residual, l.z_rep)) {
    rec.outcome = TrialOutcome::LogicalFailure;
  }
  return rec;
}

TrialRecord run_trial(const XYZParams& params, const NoiseModel& noise, const DecoderConfig& cfg,
                      std::mt19937_64& rng, const SimulationOptions& opts) {
  return TrialRunner(params, noise, cfg, opts).run(rng);
}

std::pair<double, double> wilson_interval(std::size_t failures, std::size_t trials, double z) {
  if (trials == 0) return {0.0, 1.0};
  const double n = static_cast<double>(trials);
  const double ph = static_cast<double>(failures) / n;
  const double z2 = z * z;
  const double denom = 1.0 + z2 / n;
  const double centre = (ph + z2 / (2 * n)) / denom;
  const double half = z * std::sqrt(ph * (1 - ph) / n + z2 / (4 * n * n)) / denom;
  return {std::max(0.0, centre - half), std::min(1.0, centre + half)};
}

std::pair<double, double> RateEstimate::wilson(double z) const { return wilson_interval(failures, trials, z); }

RateEstimate logical_error_rate(const XYZParams& params, const NoiseModel& noise, std::size_t trials,
                                const DecoderConfig& cfg, std::uint64_t seed, const SimulationOptions& opts) {
  if (trials == 0) throw std::invalid_argument("logical_error_rate: trials must be at least 1");
  const TrialRunner runner(params, noise, cfg, opts);
  std::vector<TrialOutcome> outcomes(trials);
  parallel_for(trials, opts.threads, [&](std::size_t i) {
    std::mt19937_64 rng = trial_rng(seed, kNoiseStream, i);
    outcomes[i] = runner.run(rng).outcome;
  });
  RateEstimate est;
  est.params = params;
  est.noise = noise;
  est.trials = trials;
  est.seed = seed;
  for (TrialOutcome o : outcomes) {
    if (o == TrialOutcome::LogicalFailure) ++est.failures;
    if (o == TrialOutcome::Infeasible) ++est.infeasible;
  }
  est.p_logical = static_cast<double>(est.failures) / static_cast<double>(trials);
  est.stderr_ = std::sqrt(est.p_logical * (1 - est.p_logical) / static_cast<double>(trials));
  return est;
}

std::vector<RateEstimate> threshold_sweep(const std::vector<XYZParams>& codes, const NoiseModel& noise_kind,
                                          const std::vector<double>& p_grid, std::size_t trials,
                                          const DecoderConfig& cfg, std::uint64_t seed,
                                          const SimulationOptions& opts) {
  if (codes.empty() || p_grid.empty()) throw std::invalid_argument("threshold_sweep: empty code list or p grid");
  std::vector<RateEstimate> out;
  for (const auto& c : codes) {
    for (double p : p_grid) {
      NoiseModel m = noise_kind;
      m.p = p;
      out.push_back(logical_error_rate(c, m, trials, cfg, seed, opts));
    }
  }
  return out;
}

std::string format_double(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

void write_sweep_csv(std::ostream& os, const std::vector<RateEstimate>& rows) {
  os << kSweepCsvSchema << '\n' << kSweepCsvHeader << '\n';
  for (const auto& r : rows) {
    os << r.params.a << ',' << r.params.b << ',' << r.params.n() << ',' << r.noise.kind_name() << ','
       << format_double(r.noise.eta_value()) << ',' << format_double(r.noise.p) << ',' << r.trials << ','
       << r.failures << ',' << format_double(r.p_logical) << ',' << format_double(r.stderr_) << ',' << r.seed
       << '\n';
  }
}

}  // namespace xyz
