#pragma once

// Subcommands of the `pitri` tool. Each writes its report to `out`, diagnostics
// to `err`, and returns the process exit code.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "pitri/chaincover.hpp"
#include "pitri/instance_io.hpp"
#include "pitri/recognizer.hpp"

namespace pitri::cli {

enum ExitCode : int { kExitYes = 0, kExitNo = 1, kExitError = 2 };

/// Certificate JSON: {"verdict": "yes"|"no", "reason"?, "orientation"?: [[i,j],...],
/// "cover"?: {"g1": [[u,v],...], "g2": [[u,v],...]}}, arrays sorted.
nlohmann::json recognition_json(const RecognitionResult& r);
nlohmann::json order_json(const std::optional<ChainCover>& cover);
nlohmann::json cover_json(const CoverResult& r);

/// Runs the recognizer matching the instance: `kind` is "pst" (graph file) or
/// "lio" (order file). Throws InputError when the instance kind does not match.
nlohmann::json recognize_instance(const Instance& inst, const std::string& kind);

/// Checks a certificate against an instance. Returns an empty string when it
/// is valid, otherwise the reason it is not. Throws InputError when the
/// certificate is structurally malformed.
std::string check_certificate(const Instance& inst, const nlohmann::json& cert);

int cmd_recognize(const std::string& path, const std::string& kind, std::ostream& out, std::ostream& err);
int cmd_cover(const std::string& path, std::ostream& out, std::ostream& err);
int cmd_verify(const std::string& instance_path, const std::string& certificate_path, std::ostream& out,
               std::ostream& err);

/// Families: "triangle n", "triangle-order n", "permutation n", "interval n",
/// "bipartite nu nv density [f_density]".
int cmd_gen(const std::string& family, const std::vector<std::string>& params, std::uint64_t seed,
            std::ostream& out, std::ostream& err);

}  // namespace pitri::cli
