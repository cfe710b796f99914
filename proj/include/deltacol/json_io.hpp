#pragma once

// Instance JSON ("colouring/v1") and the witness fragments embedded in
// certificates. Serialization is canonical: compact, keys sorted, integers
// only, so equal instances always produce identical bytes.

#include <filesystem>
#include <string>
#include <string_view>

#include "json.hpp"

#include "deltacol/canonical.hpp"
#include "deltacol/colouring.hpp"
#include "deltacol/detect.hpp"
#include "deltacol/maximality.hpp"

namespace deltacol {

using Json = nlohmann::json;

inline constexpr std::string_view kInstanceFormat = "colouring/v1";

Json instance_to_json(const PairColouring& c);
/// MalformedInput on any schema violation (including invalid instances).
PairColouring instance_from_json(const Json& j);

std::string serialize_instance(const PairColouring& c);
PairColouring parse_instance(std::string_view text);

/// Lowercase hex SHA-256 of the bytes.
std::string sha256_hex(std::string_view bytes);
/// "sha256:" + hash of serialize_instance(c).
std::string instance_hash(const PairColouring& c);

PairColouring load_instance(const std::filesystem::path& path);
void save_instance(const std::filesystem::path& path, const PairColouring& c);

std::string read_text(const std::filesystem::path& path);
void write_text(const std::filesystem::path& path, std::string_view text);

Json cycle_to_json(const CycleWitness& w);
CycleWitness cycle_from_json(const Json& j);
Json violation_to_json(const Violation& v);
Json vertex_colouring_to_json(const VertexColouring& d);
VertexColouring vertex_colouring_from_json(const Json& j);
Json embedding_to_json(const Embedding& e);
Embedding embedding_from_json(const Json& j);

}  // namespace deltacol
