// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "finapp/approach.hpp"
#include "finapp/expcheck.hpp"
#include "finapp/exponential.hpp"

namespace finapp {

inline constexpr std::string_view kToolVersion = "0.1.0";

/// A malformed input file. `position()` is a byte offset when known.
class FormatError : public std::invalid_argument {
 public:
  FormatError(const std::string& what, std::size_t position = 0)
      : std::invalid_argument(what), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

std::string read_file(const std::filesystem::path& path);
/// Parses JSON text; syntax errors become FormatError with the byte offset.
nlohmann::json parse_json(std::string_view text);

/// "fnv1a64:<16 hex digits>" over the raw bytes.
std::string digest(std::string_view bytes);

/// {"rows": [...], "cols": [...], "entries": [[cost, ...], ...]}
NumRel matrix_from_json(const nlohmann::json& j);
nlohmann::json matrix_to_json(const NumRel& r);

/// The matrix of a space file, without checking any axiom.
NumRel space_matrix_from_json(const nlohmann::json& j);

/// {"points": [...], "conv": [[cost, ...], ...]}, row = z, column = x.
/// Throws InvalidSpace when the axioms fail (reflexivity only if `pseudo`).
ApproachSpace space_from_json(const nlohmann::json& j, bool pseudo = false);
nlohmann::json space_to_json(const ApproachSpace& s);

/// {"values": {"label": cost, ...}} with exactly the space's labels.
std::vector<Cost> function_from_json(const nlohmann::json& j, const PointSet& points);
nlohmann::json function_to_json(const PointSet& points, const std::vector<Cost>& values);

struct InputFile {
  std::string name;
  std::string bytes;
};

/// The common report object: tool, version, command, inputs with digests,
/// and the command's result.
nlohmann::json envelope(std::string_view command, const std::vector<InputFile>& inputs,
                        nlohmann::json result);

nlohmann::json to_json(const AxiomReport& r, const PointSet& points);
nlohmann::json to_json(const ExpReport& r, const PointSet& points);
nlohmann::json to_json(const ReplayReport& r, const PointSet& points);

}  // namespace finapp
