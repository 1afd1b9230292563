#ifndef SEQREC_TYPES_HPP_
#define SEQREC_TYPES_HPP_

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "seqrec/common.hpp"

namespace seqrec {

// Dense index 0 is reserved for padding in both the item and context
// vocabularies. The BOS token, when enabled, gets a dedicated item index
// (n_items + 1) so that padding can embed to exact zeros.

struct Interaction {
  std::int64_t user = 0;
  std::int32_t item = 0;     // dense, >= 1
  std::int32_t context = 0;  // dense, >= 1 (query context: category of this interaction)
  std::int64_t timestamp = 0;
  std::int16_t event_type = 0;
};

struct EventLog {
  std::vector<Interaction> interactions;  // file order
  // dense -> raw, slot 0 is the padding sentinel
  std::vector<std::int64_t> item_ids{0};
  std::vector<std::int64_t> context_ids{0};
  std::unordered_map<std::int64_t, std::int32_t> item_to_dense;
  std::unordered_map<std::int64_t, std::int32_t> context_to_dense;
  std::vector<std::string> event_types;
  std::uint64_t skipped_rows = 0;

  std::int32_t n_items() const { return static_cast<std::int32_t>(item_ids.size()) - 1; }
  std::int32_t n_contexts() const { return static_cast<std::int32_t>(context_ids.size()) - 1; }
};

struct UserSequence {
  std::int64_t user = 0;
  std::vector<std::int32_t> items;       // chronological
  std::vector<std::int32_t> contexts;    // contexts[i] = query context of items[i]
  std::vector<std::int64_t> timestamps;  // non-decreasing
};

// Fixed-length training window. Position i predicts targets[i] under the query
// context contexts[i] (already shifted: contexts[i] = context of targets[i]).
// Loss is taken exactly where targets[i] != 0.
struct Window {
  std::vector<std::int32_t> items;     // length N, non-padding a contiguous suffix
  std::vector<std::int32_t> contexts;  // length N, shifted contexts, 0 = absent
  std::vector<std::int32_t> targets;   // length N, 0 = no loss at this position

  int n() const { return static_cast<int>(items.size()); }
  bool loss_at(int i) const { return targets[static_cast<std::size_t>(i)] != 0; }
  std::vector<bool> loss_mask() const {
    std::vector<bool> m(items.size());
    for (std::size_t i = 0; i < items.size(); ++i) m[i] = targets[i] != 0;
    return m;
  }
  int first_real() const {
    for (std::size_t i = 0; i < items.size(); ++i)
      if (items[i] != 0) return static_cast<int>(i);
    return n();
  }
};

struct EvalInstance {
  std::int64_t user = 0;
  std::vector<std::int32_t> history_items;     // all interactions strictly before the target
  std::vector<std::int32_t> history_contexts;  // aligned with history_items
  std::int32_t current_context = 0;            // query context of the target interaction
  std::int32_t target_item = 0;
};

enum class ContextVariant { None, OutsideA, InputB, LastLayerC };
enum class Visibility { FullHistory, CurrentOnly };

std::string to_string(ContextVariant v);
std::string to_string(Visibility v);
ContextVariant context_variant_from_string(const std::string& s);
Visibility visibility_from_string(const std::string& s);

}  // namespace seqrec

#endif  // SEQREC_TYPES_HPP_
