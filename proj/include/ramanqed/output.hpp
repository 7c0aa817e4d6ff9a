#pragma once

#include <memory>
#include <string>
#include <vector>

namespace ramanqed {

// 17-significant-digit formatting: round-trip exact and byte-stable, so
// identical runs diff clean.
std::string format_double(double v);

// Minimal insertion-ordered JSON document builder. Output key order is
// exactly insertion order, which keeps sidecars byte-stable; the usual
// hash/tree-map serializers do not guarantee that.
class JsonNode {
  public:
    static JsonNode object();
    static JsonNode array();
    static JsonNode number(double v);
    static JsonNode integer(long long v);
    static JsonNode boolean(bool v);
    static JsonNode string(const std::string& v);

    JsonNode& add(const std::string& key, JsonNode value);  // objects
    JsonNode& push(JsonNode value);                         // arrays

    std::string dump(int indent = 2) const;

  private:
    JsonNode() = default;
    enum class Type { object, array, number, integer, boolean, string };
    Type type_ = Type::object;
    double number_ = 0.0;
    long long integer_ = 0;
    bool boolean_ = false;
    std::string string_;
    std::vector<std::pair<std::string, JsonNode>> members_;
    std::vector<JsonNode> elements_;

    void write(std::string& out, int indent, int depth) const;
};

// Writes content to path via a temp file + rename, so readers never see a
// half-written file and failed runs leave no partial output.
void atomic_write(const std::string& path, const std::string& content);

std::string read_file(const std::string& path);

}  // namespace ramanqed
