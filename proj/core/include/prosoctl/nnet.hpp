#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "prosoctl/matrix.hpp"
#include "prosoctl/rng.hpp"

namespace prosoctl {

// Parameter tensor paired with its gradient accumulator. Vectors are stored
// as 1 x n matrices.
struct Tensor {
  std::string name;
  Matrix value;
  Matrix grad;

  Tensor() = default;
  Tensor(std::string n, int rows, int cols)
      : name(std::move(n)), value(rows, cols), grad(rows, cols) {}
};

void zero_grads(std::span<Tensor* const> params);
size_t param_count(std::span<Tensor* const> params);

// Initialization: uniform in [-1/sqrt(fan_in), +1/sqrt(fan_in)].
void uniform_init(Tensor& t, int fan_in, Rng& rng);

// ---------------------------------------------------------------------------
// Bi-LSTM

// Packed gate layout: rows [0,H) input gate, [H,2H) forget, [2H,3H) cell
// candidate, [3H,4H) output gate.
struct LstmDirection {
  Tensor wx;    // 4H x D
  Tensor wh;    // 4H x H
  Tensor bias;  // 1 x 4H
};

struct LstmParams {
  int input_dim = 0;
  int hidden_dim = 0;
  LstmDirection fwd;
  LstmDirection bwd;

  LstmParams() = default;
  LstmParams(const std::string& prefix, int input_dim, int hidden_dim);
  void collect(std::vector<Tensor*>& out);
};

// No peepholes; forget-gate bias initialized to 1.
void init_lstm(LstmParams& p, Rng& rng);

struct LstmDirectionCache {
  Matrix i, f, g, o;  // post-activation gate values, T x H
  Matrix c, tanh_c;   // cell state and its tanh, T x H
  Matrix h;           // hidden state, T x H
};

struct BiLstmCache {
  Matrix x;                 // T x D input
  LstmDirectionCache fwd;   // in input time order
  LstmDirectionCache bwd;   // in reversed time order
};

// Output is T x 2H: forward hidden states concatenated with backward hidden
// states, both aligned to input time.
Matrix bilstm_forward(const LstmParams& p, const Matrix& x);
Matrix bilstm_forward(const LstmParams& p, const Matrix& x, BiLstmCache& cache);

// Accumulates parameter gradients into p, returns d(loss)/d(x).
Matrix bilstm_backward(LstmParams& p, const BiLstmCache& cache, const Matrix& d_out);

// ---------------------------------------------------------------------------
// Layer normalization

struct LayerNormParams {
  Tensor gain;  // 1 x dim
  Tensor bias;  // 1 x dim
  double epsilon = 1e-5;

  LayerNormParams() = default;
  LayerNormParams(const std::string& prefix, int dim);
  int dim() const { return gain.value.cols; }
  void collect(std::vector<Tensor*>& out);
};

void init_layer_norm(LayerNormParams& p);  // gain 1, bias 0

struct LayerNormCache {
  Matrix x_hat;                 // normalized rows before gain/bias
  std::vector<double> inv_std;  // per row
};

Matrix layer_norm_forward(const LayerNormParams& p, const Matrix& x);
Matrix layer_norm_forward(const LayerNormParams& p, const Matrix& x, LayerNormCache& cache);
Matrix layer_norm_backward(LayerNormParams& p, const LayerNormCache& cache, const Matrix& d_out);

// ---------------------------------------------------------------------------
// Dropout (inverted: survivors scaled by 1/(1-rate) during training)

Matrix dropout_forward(const Matrix& x, double rate, bool training, uint64_t seed);
Matrix dropout_forward(const Matrix& x, double rate, bool training, uint64_t seed,
                       Matrix& mask_out);
Matrix dropout_backward(const Matrix& mask, const Matrix& d_out);

// ---------------------------------------------------------------------------
// Embeddings

struct EmbeddingTable {
  Tensor vectors;  // vocab x dim

  EmbeddingTable() = default;
  EmbeddingTable(const std::string& name, int vocab, int dim)
      : vectors(name, vocab, dim) {}
  int vocab_size() const { return vectors.value.rows; }
  int emb_dim() const { return vectors.value.cols; }
};

// ---------------------------------------------------------------------------
// Adam

struct AdamState {
  double learning_rate = 1e-3;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double epsilon = 1e-8;
  long step = 0;
  std::vector<Matrix> m;  // first moments, shapes mirror params
  std::vector<Matrix> v;  // second moments

  void init(std::span<Tensor* const> params);
  // Bias-corrected update from the gradients stored in each tensor.
  void update(std::span<Tensor* const> params);
};

// ---------------------------------------------------------------------------
// Gradient checking

// Central differences per coordinate against the analytic gradients already
// stored in params[i]->grad. loss_fn must be pure in the parameter values.
// Returns the max relative error over coordinates with non-negligible
// gradient magnitude.
double finite_diff_check(const std::function<double()>& loss_fn,
                         std::span<Tensor* const> params, double h = 1e-5);

}  // namespace prosoctl
