#include "cvx/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <utility>

#include <json.hpp>

namespace cvx {

namespace {

[[noreturn]] void parse_fail(const std::string& origin, std::size_t line, std::size_t col,
                             const std::string& msg) {
    throw ParseError(origin + ":" + std::to_string(line) + ":" + std::to_string(col) + ": " + msg);
}

struct CsvRow {
    std::size_t line;                         // 1-based
    std::vector<std::pair<std::size_t, std::string>> fields;  // (1-based column, text)
};

std::vector<CsvRow> split_csv(std::string_view text) {
    std::vector<CsvRow> rows;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t eol = std::min(text.find('\n', pos), text.size());
        std::string_view line = text.substr(pos, eol - pos);
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

        bool blank = true;
        for (char c : line) {
            if (!std::isspace(static_cast<unsigned char>(c))) blank = false;
        }
        if (!blank) {
            CsvRow row;
            row.line = line_no;
            std::size_t field_start = 0;
            while (true) {
                const std::size_t comma = line.find(',', field_start);
                const std::size_t end = comma == std::string_view::npos ? line.size() : comma;
                row.fields.emplace_back(field_start + 1,
                                        std::string(line.substr(field_start, end - field_start)));
                if (comma == std::string_view::npos) break;
                field_start = comma + 1;
            }
            rows.push_back(std::move(row));
        }
        if (eol == text.size()) break;
        pos = eol + 1;
    }
    return rows;
}

Scalar parse_field(const std::string& origin, std::size_t line, std::size_t col,
                   const std::string& text) {
    try {
        return parse_scalar(text);
    } catch (const Error& e) {
        parse_fail(origin, line, col, e.what());
    }
}

// Minimal DOM that keeps numeric source tokens verbatim, so bare JSON
// decimals can be converted to exact rationals.
struct JsonNode {
    enum class Type { Null, Bool, Text, Array, Object };
    Type type = Type::Null;
    bool boolean = false;
    std::string text;  // number token or string contents
    std::vector<JsonNode> items;
    std::vector<std::pair<std::string, JsonNode>> fields;
};

class ExactSax : public nlohmann::json_sax<nlohmann::json> {
public:
    explicit ExactSax(std::string origin, std::string_view source)
        : origin_(std::move(origin)), source_(source) {}

    JsonNode take_root() { return std::move(root_); }

    bool null() override { return add(JsonNode{}); }
    bool boolean(bool val) override {
        JsonNode n;
        n.type = JsonNode::Type::Bool;
        n.boolean = val;
        return add(std::move(n));
    }
    bool number_integer(number_integer_t val) override { return add(text_node(std::to_string(val))); }
    bool number_unsigned(number_unsigned_t val) override { return add(text_node(std::to_string(val))); }
    bool number_float(number_float_t, const string_t& raw) override { return add(text_node(raw)); }
    bool string(string_t& val) override { return add(text_node(val)); }
    bool binary(binary_t&) override { return false; }

    bool start_object(std::size_t) override {
        JsonNode n;
        n.type = JsonNode::Type::Object;
        stack_.push_back(std::move(n));
        return true;
    }
    bool key(string_t& val) override {
        pending_key_ = val;
        return true;
    }
    bool end_object() override { return pop(); }
    bool start_array(std::size_t) override {
        JsonNode n;
        n.type = JsonNode::Type::Array;
        stack_.push_back(std::move(n));
        return true;
    }
    bool end_array() override { return pop(); }

    bool parse_error(std::size_t position, const std::string&,
                     const nlohmann::detail::exception& ex) override {
        std::size_t line = 1;
        std::size_t col = 1;
        for (std::size_t i = 0; i < position && i < source_.size(); ++i) {
            if (source_[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        parse_fail(origin_, line, col, ex.what());
    }

private:
    static JsonNode text_node(std::string text) {
        JsonNode n;
        n.type = JsonNode::Type::Text;
        n.text = std::move(text);
        return n;
    }

    bool add(JsonNode node) {
        if (stack_.empty()) {
            root_ = std::move(node);
            return true;
        }
        JsonNode& top = stack_.back();
        if (top.type == JsonNode::Type::Object) {
            top.fields.emplace_back(std::move(pending_key_), std::move(node));
        } else {
            top.items.push_back(std::move(node));
        }
        return true;
    }

    bool pop() {
        JsonNode done = std::move(stack_.back());
        stack_.pop_back();
        return add(std::move(done));
    }

    std::string origin_;
    std::string_view source_;
    std::string pending_key_;
    JsonNode root_;
    std::vector<JsonNode> stack_;
};

JsonNode parse_json_exact(std::string_view text, const std::string& origin) {
    ExactSax sax(origin, text);
    nlohmann::json::sax_parse(text, &sax);
    return sax.take_root();
}

const JsonNode* find_field(const JsonNode& object, std::string_view name) {
    for (const auto& [key, value] : object.fields) {
        if (key == name) return &value;
    }
    return nullptr;
}

Scalar node_scalar(const JsonNode& node, const std::string& origin, const std::string& where) {
    if (node.type != JsonNode::Type::Text) {
        throw ParseError(origin + ": " + where + " must be a number or a string");
    }
    try {
        return parse_scalar(node.text);
    } catch (const Error& e) {
        throw ParseError(origin + ": " + where + ": " + e.what());
    }
}

}  // namespace

PointsFile parse_points_csv(std::string_view text, const std::string& origin) {
    PointsFile out;
    for (const CsvRow& row : split_csv(text)) {
        if (row.fields.size() != 2) {
            parse_fail(origin, row.line, 1,
                       "expected 'x,y', got " + std::to_string(row.fields.size()) + " field(s)");
        }
        Point p;
        p.x = parse_field(origin, row.line, row.fields[0].first, row.fields[0].second);
        p.y = parse_field(origin, row.line, row.fields[1].first, row.fields[1].second);
        out.points.push_back(std::move(p));
    }
    return out;
}

RealSeq parse_sequence_csv(std::string_view text, const std::string& origin) {
    RealSeq out;
    for (const CsvRow& row : split_csv(text)) {
        if (row.fields.size() != 1) {
            parse_fail(origin, row.line, 1, "expected one value per line");
        }
        out.push_back(parse_field(origin, row.line, row.fields[0].first, row.fields[0].second));
    }
    return out;
}

PointsFile parse_points_json(std::string_view text, const std::string& origin) {
    const JsonNode root = parse_json_exact(text, origin);
    if (root.type != JsonNode::Type::Object) {
        throw ParseError(origin + ": top level must be an object with a \"points\" array");
    }
    const JsonNode* points = find_field(root, "points");
    if (!points || points->type != JsonNode::Type::Array) {
        throw ParseError(origin + ": missing \"points\" array");
    }
    PointsFile out;
    std::size_t idx = 0;
    for (const JsonNode& entry : points->items) {
        ++idx;
        const std::string where = "points[" + std::to_string(idx) + "]";
        if (entry.type != JsonNode::Type::Array || entry.items.size() != 2) {
            throw ParseError(origin + ": " + where + " must be an [x, y] pair");
        }
        Point p;
        p.x = node_scalar(entry.items[0], origin, where + ".x");
        p.y = node_scalar(entry.items[1], origin, where + ".y");
        out.points.push_back(std::move(p));
    }
    if (const JsonNode* relax = find_field(root, "relax_endpoints")) {
        if (relax->type != JsonNode::Type::Bool) {
            throw ParseError(origin + ": \"relax_endpoints\" must be a boolean");
        }
        out.relax_endpoints = relax->boolean;
    }
    return out;
}

RealSeq parse_sequence_json(std::string_view text, const std::string& origin) {
    const JsonNode root = parse_json_exact(text, origin);
    if (root.type != JsonNode::Type::Object) {
        throw ParseError(origin + ": top level must be an object with a \"values\" array");
    }
    const JsonNode* values = find_field(root, "values");
    if (!values || values->type != JsonNode::Type::Array) {
        throw ParseError(origin + ": missing \"values\" array");
    }
    RealSeq out;
    std::size_t idx = 0;
    for (const JsonNode& entry : values->items) {
        ++idx;
        out.push_back(node_scalar(entry, origin, "values[" + std::to_string(idx) + "]"));
    }
    return out;
}

FileFormat resolve_format(const std::string& path, FileFormat format) {
    if (format != FileFormat::Infer) return format;
    const auto dot = path.rfind('.');
    const std::string ext = dot == std::string::npos ? "" : path.substr(dot);
    if (ext == ".json") return FileFormat::Json;
    if (ext == ".csv") return FileFormat::Csv;
    throw ParseError(path + ": cannot infer format from extension; pass --format csv|json");
}

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ParseError(path + ": cannot open file");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace

PointsFile read_points_file(const std::string& path, FileFormat format) {
    const std::string text = slurp(path);
    return resolve_format(path, format) == FileFormat::Json ? parse_points_json(text, path)
                                                            : parse_points_csv(text, path);
}

RealSeq read_sequence_file(const std::string& path, FileFormat format) {
    const std::string text = slurp(path);
    return resolve_format(path, format) == FileFormat::Json ? parse_sequence_json(text, path)
                                                            : parse_sequence_csv(text, path);
}

namespace {

using ojson = nlohmann::ordered_json;

std::string dump_line(const ojson& j) {
    return j.dump() + "\n";
}

}  // namespace

std::string verdict_json(const PolygonVerdict& verdict, const SlopeProfile& profile) {
    ojson j;
    j["kind"] = to_string(verdict.kind);
    j["strict"] = verdict.strict;
    j["witness"] = verdict.witness ? ojson(*verdict.witness) : ojson(nullptr);
    ojson slopes = ojson::array();
    for (const auto& s : profile.slopes) {
        slopes.push_back(s ? ojson(s->str()) : ojson(nullptr));
    }
    j["slopes"] = std::move(slopes);
    return dump_line(j);
}

std::string sequence_report_json(const SeqReport& report, std::optional<std::size_t> pivot) {
    ojson j;
    j["is_convex"] = report.is_convex;
    j["is_concave"] = report.is_concave;
    j["is_increasing"] = report.is_increasing;
    j["is_strictly_increasing"] = report.is_strictly_increasing;
    j["is_decreasing"] = report.is_decreasing;
    j["first_violation_index"] =
        report.first_violation_index ? ojson(*report.first_violation_index) : ojson(nullptr);
    if (pivot) {
        j["pivot"] = *pivot;
    }
    return dump_line(j);
}

std::string verify_report_json(const VerifyReport& report) {
    ojson j;
    j["instances"] = report.instances;
    j["agreements"] = report.agreements;
    j["disagreements"] = report.disagreements;
    j["seed"] = report.seed;
    return dump_line(j);
}

std::string instance_json(const std::vector<Point>& points, bool relax_endpoints) {
    ojson j;
    ojson pts = ojson::array();
    for (const Point& p : points) {
        pts.push_back(ojson::array({p.x.str(), p.y.str()}));
    }
    j["points"] = std::move(pts);
    j["relax_endpoints"] = relax_endpoints;
    return dump_line(j);
}

}  // namespace cvx
