#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "prosoctl/corpus.hpp"
#include "prosoctl/features.hpp"
#include "prosoctl/nnet.hpp"

namespace prosoctl {

struct PredictorConfig {
  int n_blocks = 2;
  int hidden_units = 32;
  int speaker_emb_dim = 4;
  int phone_emb_dim = 8;
  int emphasis_emb_dim = 0;  // 0 turns the emphasis input feature off
  double dropout_rate = 0.1;
  double learning_rate = 0.003;
  std::array<double, 4> target_weights{1.0, 1.0, 1.5, 3.5};
  int epochs = 50;
  int batch_size = 8;
  uint64_t rng_seed = 0;

  bool emphasis_on() const { return emphasis_emb_dim > 0; }
};

// Named presets: "pc-unsup" (5 blocks x 175), "hybrid" (4 x 200, emphasis
// dim 8), "base-sup" (emphasis dim 16), and the desk-scale "desk" /
// "desk-hybrid" configurations used by the fast test paths.
PredictorConfig preset_config(const std::string& name);
std::vector<std::string> preset_names();

// Per-phone input features: phone embedding, word position in sentence,
// phone position in word, word-initial flag, optional emphasis embedding.
struct PhoneFeatures {
  Matrix x;  // T x feature_dim
  std::vector<int> phone_symbol;
  std::vector<int> word_index;
  std::vector<int> emphasis_flag;
};

struct PredictorBlock {
  LstmParams lstm;
  LayerNormParams norm;
};

struct PredictorModel {
  PredictorConfig config;
  int phone_vocab = 0;
  int n_speakers = 0;
  EmbeddingTable phone_emb;
  EmbeddingTable speaker_emb;
  EmbeddingTable emphasis_emb;          // present only when emphasis is on
  std::vector<PredictorBlock> blocks;   // block i input = prev output + speaker emb
  Tensor proj_w;                        // 4 x 2*hidden
  Tensor proj_b;                        // 1 x 4

  int feature_dim() const;
  std::vector<Tensor*> parameters();
  std::vector<const Tensor*> parameters() const;
  size_t parameter_count() const;
};

PredictorModel build_model(const PredictorConfig& cfg, int phone_vocab, int n_speakers);

PhoneFeatures featurize(const Utterance& u, const PredictorModel& m);

// Inference-mode forward pass (dropout is the identity). Deterministic.
Matrix predict(const PredictorModel& m, const Utterance& u);

struct BlockForwardCache {
  BiLstmCache lstm;
  LayerNormCache norm;
  Matrix drop_mask;
};

struct PredictorForwardCache {
  PhoneFeatures feats;
  int speaker = 0;
  std::vector<BlockForwardCache> blocks;
  Matrix block_out;  // final block output, input to the projection
};

Matrix predictor_forward(const PredictorModel& m, const Utterance& u, bool training,
                         uint64_t dropout_seed, PredictorForwardCache& cache);
// Accumulates gradients for every model parameter, including the embeddings.
void predictor_backward(PredictorModel& m, const PredictorForwardCache& cache,
                        const Matrix& d_pred);

// sum_{t,k} alpha_k * w_{t,k} * |pred - target|. Not normalized further.
double weighted_l1_loss(const Matrix& pred, const PhoneTargets& targets,
                        const std::array<double, 4>& alpha);
Matrix weighted_l1_grad(const Matrix& pred, const PhoneTargets& targets,
                        const std::array<double, 4>& alpha);

struct TrainReport {
  std::vector<double> train_losses;  // one per epoch, mean per-utterance loss
  std::vector<double> dev_losses;    // one per epoch, dropout off
  int best_epoch = 0;                // 1-based; 0 when no epochs ran
  double wall_clock_seconds = 0.0;
  PredictorModel model;              // parameters from the best dev epoch

  double final_dev_loss() const;     // dev loss of the returned model
};

// ADAM on mini-batched weighted L1. Deterministic given cfg.rng_seed; the
// returned model carries the best-dev-loss parameters.
TrainReport train(const PredictorConfig& cfg, const Corpus& train_corpus,
                  const Corpus& dev_corpus, const NormStats& stats);

struct GridResult {
  int best_index = -1;
  std::vector<PredictorConfig> configs;
  std::vector<TrainReport> reports;
};

// Trains every config, picks the minimum final dev loss; ties broken by
// fewer parameters, then grid order. max_threads <= 0 means one worker.
GridResult grid_search(const std::vector<PredictorConfig>& grid, const Corpus& train_corpus,
                       const Corpus& dev_corpus, const NormStats& stats, int max_threads = 0);

// Versioned JSON serialization of config + all parameter tensors; doubles
// round-trip bit-exactly.
void save_model(const PredictorModel& m, const std::string& path);
PredictorModel load_model(const std::string& path);

}  // namespace prosoctl
