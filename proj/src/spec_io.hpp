#pragma once

#include <string>

#include "channel.hpp"
#include "tolerance.hpp"

namespace biso {

// Channel spec files are single JSON objects:
//   {"type": "bsc", "p": 0.11, "label": "..."}
//   {"type": "bec", "e": 0.3}
//   {"type": "rows", "row0": [...], "row1": [...]}
//   {"type": "pairs", "pairs": [[p_pos, p_neg], ...]}
// label is optional everywhere; parse failures throw Error(Parse) with the
// offending field named, validation failures propagate from the channel
// constructors.
BisoChannel parse_channel_spec(const std::string& text,
                               const Tolerance& tol = {});
BisoChannel load_channel_spec(const std::string& path,
                              const Tolerance& tol = {});

// Serializes the canonical paired form as a pairs-type spec (full precision).
std::string channel_spec_text(const BisoChannel& ch);

}  // namespace biso
