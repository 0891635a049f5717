#pragma once

#include <optional>
#include <string>

#include "pitri/chaincover.hpp"
#include "pitri/orders.hpp"

namespace pitri {

enum class Verdict { Yes, No };

enum class RejectReason { None, ComplementNotComparability, NoLinearIntervalCover };

const char* to_string(RejectReason reason);

struct RecognitionResult {
  Verdict verdict = Verdict::No;
  RejectReason reason = RejectReason::None;
  /// On Yes: transitive orientation P of the complement, and a linear-interval
  /// cover of Ĉ(P).
  std::optional<PartialOrder> orientation;
  std::optional<ChainCover> cover;
};

/// Decides whether g is a simple-triangle (PI) graph: orient the complement
/// transitively, then look for a linear-interval cover of Ĉ(P).
RecognitionResult recognize_simple_triangle(const SimpleGraph& g);

/// Certificate check for a Yes answer: `orientation` is a transitive
/// orientation of the complement of g and `cover` verifies against (Ĉ(P), E0).
/// Returns an empty string on success, otherwise a description of the failure.
std::string check_simple_triangle_certificate(const SimpleGraph& g, std::span<const VertexPair> orientation,
                                              const ChainCover& cover);

}  // namespace pitri
