#ifndef SEQREC_SEQDATA_HPP_
#define SEQREC_SEQDATA_HPP_

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "seqrec/types.hpp"

namespace seqrec {

enum class EventFormat { TaobaoCsv, RetailrocketCsv };

EventFormat event_format_from_string(const std::string& s);

// Taobao rows: user_id,item_id,category_id,behavior_type,timestamp (no header).
// Retailrocket events: timestamp(ms),visitorid,event,itemid[,transactionid]
// (header); the query context is the item's categoryid from the properties
// files, taking the most recent property value at interaction time.
// Unparseable rows are counted in EventLog::skipped_rows.
EventLog parse_events(const std::string& path, EventFormat format,
                      const std::vector<std::string>& property_paths = {});

// Iteratively removes interactions whose item or context occurs fewer than
// min_count times until a fixed point, then rebuilds dense vocabularies.
EventLog filter_min_support(const EventLog& log, int min_count);

// One sequence per user, stably sorted by timestamp (ties keep file order);
// output ordered by user id.
std::vector<UserSequence> build_user_sequences(const EventLog& log);

struct SplitResult {
  std::vector<UserSequence> train;
  std::vector<EvalInstance> test;
};

// Training keeps interactions with timestamp < t_split. Every interaction at
// timestamp >= t_split becomes one EvalInstance whose history is everything
// strictly before it in the user's sequence (pre-split events included).
SplitResult temporal_split(const std::vector<UserSequence>& sequences, std::int64_t t_split);

// Segments the sequence into chunks of at most N+1 items with stride N;
// each chunk becomes one left-padded Window with next-item targets and
// shifted contexts. With bos != 0 a BOS token is prepended so the first item
// is itself a target, predicted from its own query context alone.
std::vector<Window> make_training_windows(const UserSequence& seq, int window_length,
                                          std::int32_t bos_index);

std::vector<Window> make_all_training_windows(const std::vector<UserSequence>& seqs,
                                              int window_length, std::int32_t bos_index);

}  // namespace seqrec

#endif  // SEQREC_SEQDATA_HPP_
