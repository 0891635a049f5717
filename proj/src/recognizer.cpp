#include "pitri/recognizer.hpp"

namespace pitri {

const char* to_string(RejectReason reason) {
  switch (reason) {
    case RejectReason::None: return "none";
    case RejectReason::ComplementNotComparability: return "ComplementNotComparability";
    case RejectReason::NoLinearIntervalCover: return "NoLinearIntervalCover";
  }
  return "?";
}

RecognitionResult recognize_simple_triangle(const SimpleGraph& g) {
  RecognitionResult out;
  auto order = transitive_orientation(complement(g));
  if (!order) {
    out.reason = RejectReason::ComplementNotComparability;
    return out;
  }
  auto cover = recognize_linear_interval_order(*order);
  if (!cover) {
    out.reason = RejectReason::NoLinearIntervalCover;
    return out;
  }
  out.verdict = Verdict::Yes;
  out.orientation = std::move(order);
  out.cover = std::move(cover);
  return out;
}

std::string check_simple_triangle_certificate(const SimpleGraph& g, std::span<const VertexPair> orientation,
                                              const ChainCover& cover) {
  const SimpleGraph co = complement(g);
  if (!is_orientation_of(co, orientation)) return "orientation does not orient the complement";
  if (!is_strict_order(g.vertex_count(), orientation)) return "orientation is not transitive";
  const PartialOrder order = PartialOrder::from_pairs(g.vertex_count(), orientation);
  try {
    const CoverVerdict v = verify_cover(linear_interval_cover_problem(order), cover);
    if (!v.valid) return "cover fails " + v.violation + ": " + v.witness;
  } catch (const InputError& e) {
    return e.what();
  }
  return {};
}

}  // namespace pitri
