#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "xyzcyclic/decoder.h"
#include "xyzcyclic/errors.h"
#include "xyzcyclic/noise.h"
#include "xyzcyclic/oracle.h"
#include "xyzcyclic/parallel.h"
#include "xyzcyclic/xyz_code.h"

using namespace xyz;

namespace {

GF2Matrix repetition3() { return GF2Matrix::from_rows({BitVec::from_string("110"), BitVec::from_string("011")}, 3); }

StabilizerCode five_qubit_code() {
  return StabilizerCode::from_labels({"IXZZX", "XIXZZ", "ZXIXZ", "ZZXIX", "XZZXI"});
}

}  // namespace

TEST(DecoderConfig, Validation) {
  DecoderConfig cfg;
  cfg.max_bp_iterations = 0;
  EXPECT_THROW(cfg.validate(), std::invalid_argument);
  cfg = {};
  cfg.bp_variant = BpVariant::MinSum;
  cfg.min_sum_scale = 0.0;
  EXPECT_THROW(cfg.validate(), std::invalid_argument);
  EXPECT_EQ(parse_bp_variant("min_sum"), BpVariant::MinSum);
  EXPECT_EQ(parse_bp_schedule("serial"), BpSchedule::Serial);
  EXPECT_THROW(parse_bp_variant("bogus"), std::invalid_argument);
  QubitPrior bad{0.5, 0.5, 0.5, 0.0};
  EXPECT_THROW(bad.validate(), std::invalid_argument);
}

TEST(BinaryDecoder, RepetitionCode) {
  BinaryDecoder dec(repetition3(), DecoderConfig{});
  const std::vector<double> probs(3, 0.1);
  EXPECT_EQ(dec.decode(BitVec::from_string("10"), probs).error.to_string(), "100");
  EXPECT_EQ(dec.decode(BitVec::from_string("11"), probs).error.to_string(), "010");
  EXPECT_EQ(dec.decode(BitVec::from_string("00"), probs).error.to_string(), "000");
  EXPECT_EQ(oracle::ml_decode_binary(repetition3(), BitVec::from_string("11"), probs).to_string(), "010");
}

TEST(BinaryDecoder, InfeasibleSyndromeIsReported) {
  const GF2Matrix h = GF2Matrix::from_rows({BitVec::from_string("11"), BitVec::from_string("11")}, 2);
  DecoderConfig cfg;
  cfg.max_bp_iterations = 5;
  BinaryDecoder dec(h, cfg);
  EXPECT_THROW(dec.decode(BitVec::from_string("10"), {0.1, 0.1}), InfeasibleSyndrome);
}

TEST(BinaryDecoder, ExhaustiveOsdMatchesBruteForce) {
  std::mt19937_64 rng(21);
  DecoderConfig cfg;
  cfg.osd_order = 64;
  cfg.stop_on_bp_convergence = false;
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 6 + rng() % 8, m = 3 + rng() % 4;
    GF2Matrix h(m, n);
    for (std::size_t r = 0; r < m; ++r) {
      for (std::size_t c = 0; c < n; ++c) h.set(r, c, rng() % 3 == 0);
    }
    std::vector<double> probs(n);
    for (auto& p : probs) p = 0.02 + 0.3 * uniform_unit(rng);
    BitVec e(n);
    for (std::size_t c = 0; c < n; ++c) e.set(c, uniform_unit(rng) < probs[c]);
    const BitVec s = h.mul_vec(e);
    const BitVec got = BinaryDecoder(h, cfg).decode(s, probs).error;
    const BitVec want = oracle::ml_decode_binary(h, s, probs);
    EXPECT_EQ(h.mul_vec(got), s);
    auto logp = [&](const BitVec& v) {
      double lp = 0;
      for (std::size_t c = 0; c < n; ++c) lp += std::log(v.get(c) ? probs[c] : 1 - probs[c]);
      return lp;
    };
    EXPECT_NEAR(logp(got), logp(want), 1e-9);
  }
}

TEST(SymplecticDecoder, ReproducesSyndromesOnXYZCodes) {
  std::mt19937_64 rng(8);
  for (XYZParams p : {XYZParams{5, 0}, XYZParams{8, 1}, XYZParams{2, 2}}) {
    const StabilizerCode code = build_code(p);
    const GF2Matrix check = symplectic_check_matrix(code.generators());
    for (BpVariant v : {BpVariant::ProductSum, BpVariant::MinSum}) {
      for (BpSchedule s : {BpSchedule::Parallel, BpSchedule::Serial}) {
        DecoderConfig cfg;
        cfg.bp_variant = v;
        cfg.schedule = s;
        cfg.min_sum_scale = 0.8;
        cfg.osd_order = 1;
        const SymplecticDecoder dec(check, cfg);
        const ChannelPriors priors = ChannelPriors::depolarizing(p.n(), 0.1);
        for (int t = 0; t < 40; ++t) {
          const PauliString e = sample_error(p.n(), {0.05, 0.05, 0.05}, rng);
          const BitVec target = syndrome(check, e);
          const DecodeResult r = dec.decode(target, priors);
          EXPECT_EQ(syndrome(check, r.correction), target);
        }
      }
    }
  }
}

TEST(SymplecticDecoder, SingleQubitErrorsOnC50) {
  const StabilizerCode code = build_code({5, 0});
  const GF2Matrix check = symplectic_check_matrix(code.generators());
  const SymplecticDecoder dec(check, default_simulation_decoder());
  const ChannelPriors priors = ChannelPriors::depolarizing(17, 0.05);
  for (std::size_t q = 0; q < 17; ++q) {
    for (char c : {'X', 'Y', 'Z'}) {
      PauliString e(17);
      e.set(q, c);
      const DecodeResult r = dec.decode(syndrome(check, e), priors);
      EXPECT_TRUE(code.in_stabilizer_group(multiply(e, r.correction))) << c << q;
    }
  }
  EXPECT_EQ(weight(dec.decode(BitVec(17), priors).correction), 0u);
}

TEST(SymplecticDecoder, ExhaustiveOsdPicksMostLikelyCoset) {
  const StabilizerCode code = five_qubit_code();
  const GF2Matrix check = symplectic_check_matrix(code.generators());
  DecoderConfig cfg;
  cfg.osd_order = 10;
  cfg.stop_on_bp_convergence = false;
  const SymplecticDecoder dec(check, cfg);
  std::mt19937_64 rng(4);
  for (int t = 0; t < 300; ++t) {
    ChannelPriors priors;
    for (int q = 0; q < 5; ++q) {
      const double px = 0.15 * uniform_unit(rng), py = 0.15 * uniform_unit(rng), pz = 0.15 * uniform_unit(rng);
      priors.qubits.push_back(QubitPrior::from_rates(px, py, pz));
    }
    const PauliString e = sample_error(5, {0.1, 0.1, 0.1}, rng);
    const BitVec s = syndrome(check, e);
    const DecodeResult r = dec.decode(s, priors);
    const oracle::MlResult ml = oracle::ml_decode(code, s, priors);
    EXPECT_EQ(ml.mode, oracle::MlMode::CosetAware);
    EXPECT_NEAR(oracle::coset_log_probability(code, r.correction, priors), ml.log_prob, 1e-9);
  }
}

TEST(DecodePure, CirculantBlock) {
  const XYZParams p{5, 0};
  const GF2Poly a = family_polys(p).A;
  DecoderConfig cfg;
  cfg.osd_order = 1;
  BitVec e(17);
  e.set(0, true);
  const BitVec target = GF2Matrix::circulant(a, 17).mul_vec(e);
  EXPECT_EQ(decode_pure(PauliType::Z, a, 17, target, 0.05, cfg), e);
  // The all-ones pattern has zero syndrome; the decoder returns the
  // lighter representative of the coset {0, 1...1}.
  EXPECT_EQ(decode_pure(PauliType::Z, a, 17, BitVec(17), 0.05, cfg).popcount(), 0u);
}
