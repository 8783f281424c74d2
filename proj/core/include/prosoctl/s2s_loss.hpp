#pragma once

#include "prosoctl/matrix.hpp"

namespace prosoctl {

inline constexpr int kMelDim = 80;
inline constexpr int kLpcDim = 22;

// Targets and predictions for the decoder's multi-task loss. All five share
// the same T; mel matrices are T x 80, LPC matrices T x 22.
struct LossInputs {
  Matrix mel_pred;    // final mel prediction
  Matrix mel_target;
  Matrix lpc_pre;     // intermediate LPC prediction, before the post-net
  Matrix lpc_post;    // final LPC prediction
  Matrix lpc_target;
};

// First difference in time: row t = seq[t+1] - seq[t]. Requires T >= 2.
Matrix first_difference(const Matrix& seq);

// Mean over all elements of squared differences.
double mean_squared_error(const Matrix& a, const Matrix& b);

// MSE(mel_pred, mel_target) + 0.8*MSE(lpc_pre, lpc_target)
//   + 0.4*MSE(lpc_post, lpc_target) + 0.4*MSE(d(lpc_post), d(lpc_target)).
double multitask_loss(const LossInputs& in);

}  // namespace prosoctl
