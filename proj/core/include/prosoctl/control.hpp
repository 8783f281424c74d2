#pragma once

#include <set>
#include <vector>

#include "prosoctl/corpus.hpp"
#include "prosoctl/features.hpp"
#include "prosoctl/predictor.hpp"

namespace prosoctl {

// Additive offsets in normalized PC space. (alpha, beta) apply sentence-wide
// to columns 1-2; (gamma, delta) apply to columns 3-4 of focal words only.
// Distinct from the loss target weights, which also go by alpha in places.
struct BoostSpec {
  double alpha = 0.0;
  double beta = 0.0;
  double gamma = 0.0;
  double delta = 0.0;
  std::set<int> focal_words;
};

struct ProsodyRealization {
  std::vector<double> per_phone_duration;  // seconds, length T
  std::vector<double> word_f0_spread;      // nats, one per word
  double sentence_f0_spread = 0.0;         // nats
};

// Mean pooling to piecewise-constant trajectories: columns 1-2 over the
// sentence, columns 3-4 within each word. Idempotent.
Matrix rectify(const Matrix& pred, const Utterance& u);

// pc must be rectified. Zero offsets leave values bit-identical; non-focal
// words are never touched by (gamma, delta).
Matrix apply_boost(const Matrix& pc, const BoostSpec& spec, const Utterance& u);

// Maps rectified (optionally boosted) normalized PC back to physical prosody:
// per-phone durations via exp(denorm(col1) + denorm(col3)) and f0 spreads via
// the column 2/4 sums, with the stored corpus means added back.
ProsodyRealization realize(const Matrix& pc, const Utterance& u, const NormStats& stats);

// predict -> rectify -> apply_boost -> realize, in that order.
ProsodyRealization focus_pipeline(const PredictorModel& m, const Utterance& u,
                                  const BoostSpec& spec, const NormStats& stats);

}  // namespace prosoctl
