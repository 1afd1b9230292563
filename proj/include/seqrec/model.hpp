#ifndef SEQREC_MODEL_HPP_
#define SEQREC_MODEL_HPP_

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "seqrec/common.hpp"
#include "seqrec/config.hpp"
#include "seqrec/types.hpp"

namespace seqrec {

// All learnable tensors. Row 0 of item_emb and ctx_emb is frozen at zero so
// padding embeds to the exact zero vector. item_emb doubles as the
// unembedding: scores are (x W_out) . item_emb[j].
struct Parameters {
  Mat item_emb;  // vocab_items x D
  Mat ctx_emb;   // vocab_contexts x D
  Mat pos_emb;   // N x D, indexed by the item's ordinal within the real suffix
  Mat w_out;     // D x D, final output projection

  struct Layer {
    Mat w_q, w_k, w_v;  // D x D; head k uses the column block [k*dh, (k+1)*dh)
    Mat w_proj;         // D x D, attention output projection
    Mat w_ff1, b_ff1;   // D x d_ff, 1 x d_ff
    Mat w_ff2, b_ff2;   // d_ff x D, 1 x D
    Mat ln1_gain, ln1_bias;  // 1 x D
    Mat ln2_gain, ln2_bias;  // 1 x D
  };
  std::vector<Layer> layers;

  std::vector<std::pair<std::string, Mat*>> tensors();
  std::vector<std::pair<std::string, const Mat*>> tensors() const;

  static Parameters init(const ModelConfig& cfg, std::uint64_t seed, double emb_std = 0.02);
  static Parameters zeros_like(const Parameters& other);
  void enforce_frozen_rows();  // zero row 0 of item_emb and ctx_emb
};

// Gradients mirror Parameters tensor-for-tensor; frozen rows are forced to
// zero after accumulation.
using GradStore = Parameters;

struct LayerTrace {
  Mat x_in;  // N x D, X^(h)
  Mat q, k, v;
  std::vector<Mat> attn_probs;  // per head, N x N, pre-dropout; masked entries exactly 0
  std::vector<Mat> attn_keep;   // per head 0/1 dropout keep mask (empty if unused)
  Mat heads_concat;             // N x D, dropped probs applied to values
  Mat r1;                       // residual 1, pre-norm
  Vec ln1_mean, ln1_rstd;
  Mat y1;
  Mat ffn_pre;    // N x d_ff, pre-activation
  Mat ffn_out;    // N x D, pre-dropout
  Mat ffn_keep;   // 0/1 dropout keep mask (empty if unused)
  Mat r2;
  Vec ln2_mean, ln2_rstd;
  Mat x_out;  // N x D, X^(h+1)
};

struct ForwardTrace {
  Mat x0;  // X^(1)
  std::vector<LayerTrace> layers;
  std::vector<std::int32_t> ctx_effective;  // contexts actually fused (after visibility)
  std::vector<bool> real;                   // items[i] != 0
  bool training = false;

  const Mat& x_layer(int h) const {  // X^(h+1), h in [0, H]
    return h == 0 ? x0 : layers[static_cast<std::size_t>(h) - 1].x_out;
  }
  const Mat& x_final() const { return layers.empty() ? x0 : layers.back().x_out; }
};

// output[i] = contexts[i+1]; index-level application of the N x (N+1) shift
// matrix L.
std::vector<std::int32_t> shift_contexts(const std::vector<std::int32_t>& contexts);

// Replaces each nonzero entry by 0 with probability p. Returns the masked
// copy; masked/nonzero counters are optional.
std::vector<std::int32_t> mask_contexts(const std::vector<std::int32_t>& contexts, double p,
                                        Rng& rng, std::int64_t* masked = nullptr,
                                        std::int64_t* nonzero = nullptr);

Mat embed_input(const Window& window, const Parameters& params, const ModelConfig& cfg,
                const std::vector<std::int32_t>& ctx_effective);

// One residual block: multi-head causal attention (queries fused with context
// in the last layer under LastLayerC), projection, residual + layer norm,
// position-wise FFN, residual + layer norm. Padding queries pass through with
// zero attention output.
Mat attention_layer_forward(const Mat& x, int layer, const Parameters& params,
                            const ModelConfig& cfg,
                            const std::vector<std::int32_t>& ctx_effective,
                            const std::vector<bool>& real, bool training, Rng* rng,
                            LayerTrace* trace);

ForwardTrace model_forward(const Window& window, const Parameters& params,
                           const ModelConfig& cfg, bool training, Rng* rng = nullptr);

// Full-catalog scores at one position: (X^(H+1)_i W_out [+ ctx term for
// OutsideA/LastLayerC]) . item_emb[j]. Padding and BOS entries are -inf.
Vec score_position(const ForwardTrace& trace, const Parameters& params, const ModelConfig& cfg,
                   int position);

std::vector<std::pair<int, Vec>> score_positions(const ForwardTrace& trace,
                                                 const Parameters& params,
                                                 const ModelConfig& cfg,
                                                 const std::vector<int>& positions);

// Scores restricted to a candidate list (used by the sampled-softmax path).
Vec score_candidates(const ForwardTrace& trace, const Parameters& params,
                     const ModelConfig& cfg, int position,
                     const std::vector<std::int32_t>& candidates);

// Indices of the k largest scores; ties break toward the smaller index.
// Entries listed in exclude are never returned.
std::vector<std::int32_t> rank_items(const Vec& scores, int k,
                                     const std::vector<std::int32_t>& exclude = {});

// 1-based rank of target: items scoring strictly higher count ahead; equal
// scores break by smaller index. Entries that are -inf are not counted.
int rank_of_target(const Vec& scores, std::int32_t target);

}  // namespace seqrec

#endif  // SEQREC_MODEL_HPP_
