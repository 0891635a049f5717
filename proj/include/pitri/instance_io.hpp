#pragma once

// Plain-text instance files.
//
//   graph n m          then m lines  "e a b"   (0-based, undirected)
//   order n k          then k lines  "r a b"   (a ≺ b)
//   bigraph nu nv m    then m lines  "e u v"   plus any number of "f u v"
//                                               lines naming edges of F
//
// Everything from '#' to the end of a line is a comment; blank lines are
// ignored.

#include <iosfwd>
#include <string>
#include <variant>

#include "pitri/chaincover.hpp"
#include "pitri/orders.hpp"

namespace pitri {

using Instance = std::variant<SimpleGraph, PartialOrder, CoverProblem>;

/// Throws InputError naming the offending line.
Instance parse_instance(std::istream& in);
Instance parse_instance_text(const std::string& text);

std::string format_instance(const SimpleGraph& g);
std::string format_instance(const PartialOrder& p);
std::string format_instance(const CoverProblem& p);

}  // namespace pitri
