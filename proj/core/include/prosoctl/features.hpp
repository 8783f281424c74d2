#pragma once

#include <array>
#include <string>
#include <vector>

#include "prosoctl/corpus.hpp"
#include "prosoctl/matrix.hpp"

namespace prosoctl {

using PcVec = std::array<double, 4>;

// Raw prosodic statistics of one utterance: sentence-level log per-phone
// duration and log-f0 spread, and the same pair per word.
struct RawPC {
  double s_dur = 0.0;          // log seconds per phone, whole sentence
  double s_f0 = 0.0;           // log-f0 spread in nats, whole sentence
  std::vector<double> w_dur;   // one per word
  std::vector<double> w_f0;    // one per word
};

enum class NormMode { Variance, StdDev };

// Corpus-wide normalization constants. `mean` is subtracted during target
// extraction and added back during realization; the normalization map itself
// divides by 3*variance (or 3*stddev in StdDev mode).
struct NormStats {
  std::array<double, 4> mean{};
  std::array<double, 4> variance{};
  NormMode mode = NormMode::Variance;

  double scale(int component) const;  // 3*variance or 3*stddev
};

// Phone-level piecewise-constant target trajectories with per-observation
// replication weights (per target column, weights inside each constituent
// sum to 1).
struct PhoneTargets {
  Matrix targets;               // T x 4
  Matrix weights;               // T x 4
  std::vector<int> word_index;  // T, phone -> word
};

// Sentence/word statistics. Percentiles are computed over voiced frames that
// fall inside word spans (half-open [start, end)).
double sentence_dur_stat(const Utterance& u);
double sentence_f0_spread(const Utterance& u);
void word_stats(const Utterance& u, std::vector<double>& w_dur, std::vector<double>& w_f0);
RawPC raw_pc(const Utterance& u);

// Sorted-order linear interpolation at rank p*(n-1). Requires n >= 1.
double percentile(std::vector<double> values, double p);

// The four un-normalized PC components: [S_dur, S_f0, W_dur-S_dur, W_f0-S_f0].
// The duration delta is computed as a single log of the duration-ratio
// quotient, which keeps it bit-stable under exact global tempo scalings.
struct PcDeltas {
  double s_dur = 0.0;
  double s_f0 = 0.0;
  std::vector<double> w_dur_delta;
  std::vector<double> w_f0_delta;
};
PcDeltas pc_deltas(const Utterance& u);

NormStats compute_norm_stats(const Corpus& c, NormMode mode = NormMode::Variance);

// Eq.-style linear maps x -> x / scale_i and back; no mean handling here.
double normalize_component(double x, const NormStats& stats, int component);
double denormalize_component(double y, const NormStats& stats, int component);

// Per-word normalized PC vectors from raw statistics (differences then the
// linear map). Exact inverses of each other.
std::vector<PcVec> normalize(const RawPC& raw, const NormStats& stats);
PcVec denormalize(const PcVec& pc_norm, const NormStats& stats);

// Replicates per-word PC vectors down to phones and attaches the
// replication-factor observation weights.
PhoneTargets expand_to_phones(const Utterance& u, const std::vector<PcVec>& pc);

// stats -> centered deltas -> normalize -> expand.
PhoneTargets extract_pc_targets(const Utterance& u, const NormStats& stats);

NormStats load_norm_stats(const std::string& path);
void save_norm_stats(const NormStats& stats, const std::string& path);

}  // namespace prosoctl
