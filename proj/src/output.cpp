#include "ramanqed/output.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace ramanqed {

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

JsonNode JsonNode::object() {
    JsonNode n;
    n.type_ = Type::object;
    return n;
}

JsonNode JsonNode::array() {
    JsonNode n;
    n.type_ = Type::array;
    return n;
}

JsonNode JsonNode::number(double v) {
    JsonNode n;
    n.type_ = Type::number;
    n.number_ = v;
    return n;
}

JsonNode JsonNode::integer(long long v) {
    JsonNode n;
    n.type_ = Type::integer;
    n.integer_ = v;
    return n;
}

JsonNode JsonNode::boolean(bool v) {
    JsonNode n;
    n.type_ = Type::boolean;
    n.boolean_ = v;
    return n;
}

JsonNode JsonNode::string(const std::string& v) {
    JsonNode n;
    n.type_ = Type::string;
    n.string_ = v;
    return n;
}

JsonNode& JsonNode::add(const std::string& key, JsonNode value) {
    if (type_ != Type::object) {
        throw std::logic_error("add() is only valid on JSON objects");
    }
    members_.emplace_back(key, std::move(value));
    return *this;
}

JsonNode& JsonNode::push(JsonNode value) {
    if (type_ != Type::array) {
        throw std::logic_error("push() is only valid on JSON arrays");
    }
    elements_.push_back(std::move(value));
    return *this;
}

namespace {

void write_escaped(std::string& out, const std::string& s) {
    out += '"';
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\r': out += "\\r"; break;
            case '\t': out += "\\t"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof(buf), "\\u%04x",
                                  static_cast<unsigned>(c));
                    out += buf;
                } else {
                    out += c;
                }
        }
    }
    out += '"';
}

void newline_indent(std::string& out, int indent, int depth) {
    out += '\n';
    out.append(static_cast<std::size_t>(indent) * depth, ' ');
}

}  // namespace

void JsonNode::write(std::string& out, int indent, int depth) const {
    switch (type_) {
        case Type::number:
            out += format_double(number_);
            return;
        case Type::integer:
            out += std::to_string(integer_);
            return;
        case Type::boolean:
            out += boolean_ ? "true" : "false";
            return;
        case Type::string:
            write_escaped(out, string_);
            return;
        case Type::object: {
            if (members_.empty()) {
                out += "{}";
                return;
            }
            out += '{';
            for (std::size_t i = 0; i < members_.size(); ++i) {
                newline_indent(out, indent, depth + 1);
                write_escaped(out, members_[i].first);
                out += ": ";
                members_[i].second.write(out, indent, depth + 1);
                if (i + 1 < members_.size()) out += ',';
            }
            newline_indent(out, indent, depth);
            out += '}';
            return;
        }
        case Type::array: {
            if (elements_.empty()) {
                out += "[]";
                return;
            }
            out += '[';
            for (std::size_t i = 0; i < elements_.size(); ++i) {
                newline_indent(out, indent, depth + 1);
                elements_[i].write(out, indent, depth + 1);
                if (i + 1 < elements_.size()) out += ',';
            }
            newline_indent(out, indent, depth);
            out += ']';
            return;
        }
    }
}

std::string JsonNode::dump(int indent) const {
    std::string out;
    write(out, indent, 0);
    out += '\n';
    return out;
}

void atomic_write(const std::string& path, const std::string& content) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) {
            throw std::runtime_error("cannot open for writing: " + tmp);
        }
        out.write(content.data(),
                  static_cast<std::streamsize>(content.size()));
        if (!out) {
            throw std::runtime_error("short write to " + tmp);
        }
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0) {
        std::remove(tmp.c_str());
        throw std::runtime_error("cannot move output into place: " + path);
    }
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open file: " + path);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace ramanqed
