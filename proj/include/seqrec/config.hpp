#ifndef SEQREC_CONFIG_HPP_
#define SEQREC_CONFIG_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "seqrec/types.hpp"

namespace seqrec {

struct ModelConfig {
  int window_length = 8;  // N
  int embedding_dim = 16; // D
  int layers = 2;         // H
  int heads = 2;
  int ffn_dim = 0;  // 0 -> 4 * embedding_dim
  int vocab_items = 0;     // catalog + padding + BOS
  int vocab_contexts = 0;  // contexts + padding
  std::int32_t bos_index = 0;  // 0 = BOS disabled
  ContextVariant variant = ContextVariant::None;
  Visibility visibility = Visibility::CurrentOnly;
  double dropout = 0.0;
  bool positional = true;
  double context_mask_prob = 0.0;  // p, used when variant == InputB during training

  int d_ff() const { return ffn_dim > 0 ? ffn_dim : 4 * embedding_dim; }
  int head_dim() const { return embedding_dim / heads; }
  // catalog items are dense indices [1, n_real_items]; padding and BOS are
  // never candidates
  std::int32_t n_real_items() const {
    return static_cast<std::int32_t>(vocab_items) - 1 - (bos_index != 0 ? 1 : 0);
  }
  void validate() const;
};

struct TrainConfig {
  double learning_rate = 1e-3;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double epsilon = 1e-8;
  int batch_size = 64;
  int max_epochs = 10;
  std::uint64_t seed = 42;
  double neg_sample_ratio = 0.0;  // 0 = full softmax, 1 = full candidate set
  double grad_clip = 0.0;         // 0 = off

  void validate() const;
};

nlohmann::json model_config_to_json(const ModelConfig& c);
ModelConfig model_config_from_json(const nlohmann::json& j);
nlohmann::json train_config_to_json(const TrainConfig& c);
TrainConfig train_config_from_json(const nlohmann::json& j);

}  // namespace seqrec

#endif  // SEQREC_CONFIG_HPP_
