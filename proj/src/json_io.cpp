#include "deltacol/json_io.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>

#include <openssl/evp.h>

#include "deltacol/error.hpp"

namespace deltacol {

namespace {

[[noreturn]] void malformed(const std::string& what)
{
    throw Error(ErrorCode::MalformedInput, what);
}

std::vector<BinaryWord> words_from_json(const Json& j, const char* what)
{
    if (!j.is_array())
        malformed(std::string(what) + " must be an array of bit-strings");
    std::vector<BinaryWord> words;
    words.reserve(j.size());
    for (const auto& w : j) {
        if (!w.is_string())
            malformed(std::string(what) + " entries must be strings");
        try {
            words.push_back(BinaryWord::parse(w.get<std::string>()));
        } catch (const Error& e) {
            malformed(e.what());
        }
    }
    return words;
}

bool non_negative_integer(const Json& x)
{
    return x.is_number_unsigned() || (x.is_number_integer() && x.get<std::int64_t>() >= 0);
}

std::uint64_t unsigned_field(const Json& j, const char* key)
{
    if (!j.contains(key) || !non_negative_integer(j[key]))
        malformed(std::string("field '") + key + "' must be a non-negative integer");
    return j[key].get<std::uint64_t>();
}

}  // namespace

Json instance_to_json(const PairColouring& c)
{
    Json j;
    j["format"] = kInstanceFormat;
    j["n_vertices"] = c.size();
    j["palette"] = c.palette();
    j["pairs"] = std::vector<Colour>(c.pairs().begin(), c.pairs().end());
    if (c.has_labels()) {
        Json labels = Json::array();
        for (const auto& w : c.labels())
            labels.push_back(w.str());
        j["labels"] = std::move(labels);
    }
    if (c.mu())
        j["mu"] = *c.mu();
    return j;
}

PairColouring instance_from_json(const Json& j)
{
    if (!j.is_object())
        malformed("instance must be a JSON object");
    if (!j.contains("format") || j["format"] != kInstanceFormat)
        malformed("format must be \"colouring/v1\"");
    const auto n = unsigned_field(j, "n_vertices");
    const auto palette = unsigned_field(j, "palette");
    if (!j.contains("pairs") || !j["pairs"].is_array())
        malformed("field 'pairs' must be an array");
    if (n < 1 || n > (std::uint64_t{1} << 20))
        malformed("n_vertices out of range");
    if (palette > UINT32_MAX)
        malformed("palette out of range");
    std::vector<Colour> pairs;
    pairs.reserve(j["pairs"].size());
    for (const auto& x : j["pairs"]) {
        if (!non_negative_integer(x) || x.get<std::uint64_t>() > UINT32_MAX)
            malformed("pair colours must be non-negative integers");
        pairs.push_back(x.get<Colour>());
    }
    std::vector<BinaryWord> labels;
    if (j.contains("labels"))
        labels = words_from_json(j["labels"], "labels");
    std::optional<Level> mu;
    if (j.contains("mu"))
        mu = static_cast<Level>(unsigned_field(j, "mu"));
    try {
        return PairColouring(n, static_cast<Colour>(palette), std::move(pairs), std::move(labels), mu);
    } catch (const Error& e) {
        malformed(e.what());
    }
}

std::string serialize_instance(const PairColouring& c)
{
    return instance_to_json(c).dump();
}

PairColouring parse_instance(std::string_view text)
{
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::parse_error& e) {
        malformed(std::string("invalid JSON: ") + e.what());
    }
    return instance_from_json(j);
}

std::string sha256_hex(std::string_view bytes)
{
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int length = 0;
    if (EVP_Digest(bytes.data(), bytes.size(), digest, &length, EVP_sha256(), nullptr) != 1)
        throw Error(ErrorCode::IoError, "SHA-256 computation failed");
    std::ostringstream out;
    for (unsigned int i = 0; i < length; ++i)
        out << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(digest[i]);
    return out.str();
}

std::string instance_hash(const PairColouring& c)
{
    return "sha256:" + sha256_hex(serialize_instance(c));
}

std::string read_text(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error(ErrorCode::IoError, "cannot open " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_text(const std::filesystem::path& path, std::string_view text)
{
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw Error(ErrorCode::IoError, "cannot write " + path.string());
    out << text;
    if (!out)
        throw Error(ErrorCode::IoError, "write failed for " + path.string());
}

PairColouring load_instance(const std::filesystem::path& path)
{
    return parse_instance(read_text(path));
}

void save_instance(const std::filesystem::path& path, const PairColouring& c)
{
    write_text(path, serialize_instance(c) + "\n");
}

Json cycle_to_json(const CycleWitness& w)
{
    return Json{{"colour", w.colour}, {"vertices", w.vertices}};
}

CycleWitness cycle_from_json(const Json& j)
{
    if (!j.is_object() || !j.contains("colour") || !j.contains("vertices"))
        malformed("cycle witness needs 'colour' and 'vertices'");
    try {
        return CycleWitness{j["vertices"].get<std::vector<Vertex>>(), j["colour"].get<Colour>()};
    } catch (const Json::exception& e) {
        malformed(e.what());
    }
}

Json violation_to_json(const Violation& v)
{
    return Json{{"x", v.x}, {"y", v.y}, {"colour", v.colour}};
}

Json vertex_colouring_to_json(const VertexColouring& d)
{
    return Json{{"d", d.d}};
}

VertexColouring vertex_colouring_from_json(const Json& j)
{
    if (!j.is_object() || !j.contains("d"))
        malformed("vertex colouring needs 'd'");
    try {
        return VertexColouring{j["d"].get<std::vector<Colour>>()};
    } catch (const Json::exception& e) {
        malformed(e.what());
    }
}

Json embedding_to_json(const Embedding& e)
{
    Json out = Json::array();
    for (const auto& w : e.words)
        out.push_back(w.str());
    return out;
}

Embedding embedding_from_json(const Json& j)
{
    return Embedding{words_from_json(j, "embedding")};
}

}  // namespace deltacol
