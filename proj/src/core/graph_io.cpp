#include <json.hpp>

#include <sstream>

#include "core/errors.hpp"
#include "core/graph.hpp"

namespace stratifold {

using nlohmann::json;

namespace {

[[noreturn]] void schema_error(const std::string& where, const std::string& what) {
    fail(ErrorKind::Parse, "schema error at " + where + ": " + what);
}

const json& require_field(const json& object, const char* key, const std::string& where) {
    auto it = object.find(key);
    if (it == object.end()) schema_error(where, std::string("missing field \"") + key + "\"");
    return *it;
}

std::string read_string(const json& object, const char* key, const std::string& where) {
    const auto& v = require_field(object, key, where);
    if (!v.is_string()) schema_error(where + "." + key, "expected a string");
    return v.get<std::string>();
}

std::int64_t read_integer(const json& object, const char* key, const std::string& where) {
    const auto& v = require_field(object, key, where);
    if (!v.is_number_integer()) schema_error(where + "." + key, "expected an integer");
    if (v.is_number_unsigned() && v.get<std::uint64_t>() > static_cast<std::uint64_t>(INT64_MAX))
        schema_error(where + "." + key, "integer out of range");
    return v.get<std::int64_t>();
}

void reject_unknown_keys(const json& object, std::initializer_list<const char*> allowed, const std::string& where) {
    for (const auto& [key, _] : object.items()) {
        bool known = false;
        for (const char* a : allowed) known = known || key == a;
        if (!known) schema_error(where, "unknown field \"" + key + "\"");
    }
}

const json* optional_array(const json& doc, const char* key) {
    auto it = doc.find(key);
    if (it == doc.end()) return nullptr;
    if (!it->is_array()) schema_error(key, "expected a list");
    return &*it;
}

EdgeSign read_sign(const json& object, const std::string& where) {
    auto it = object.find("sign");
    if (it == object.end()) return EdgeSign::Plus;
    if (!it->is_string()) schema_error(where + ".sign", "expected \"+\" or \"-\"");
    const auto s = it->get<std::string>();
    if (s == "+") return EdgeSign::Plus;
    if (s == "-" || s == "−") return EdgeSign::Minus;
    schema_error(where + ".sign", "expected \"+\" or \"-\", got \"" + s + "\"");
}

std::string dot_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out;
}

std::string dot_quote(const std::string& s) { return "\"" + dot_escape(s) + "\""; }

}  // namespace

StratifoldGraph parse_graph(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        fail(ErrorKind::Parse, "syntax error at byte " + std::to_string(e.byte) + ": " + e.what());
    }
    if (!doc.is_object()) schema_error("document", "expected an object");
    reject_unknown_keys(doc, {"white", "black", "edges"}, "document");

    std::vector<WhiteVertex> whites;
    std::vector<BlackVertex> blacks;
    std::vector<Edge> edges;

    const auto& white_list = require_field(doc, "white", "document");
    if (!white_list.is_array()) schema_error("white", "expected a list");
    for (std::size_t i = 0; i < white_list.size(); ++i) {
        const auto& item = white_list[i];
        const auto where = "white[" + std::to_string(i) + "]";
        if (!item.is_object()) schema_error(where, "expected an object");
        reject_unknown_keys(item, {"id", "genus"}, where);
        whites.push_back({read_string(item, "id", where), read_integer(item, "genus", where)});
    }
    if (const auto* list = optional_array(doc, "black")) {
        for (std::size_t i = 0; i < list->size(); ++i) {
            const auto& item = (*list)[i];
            const auto where = "black[" + std::to_string(i) + "]";
            if (!item.is_object()) schema_error(where, "expected an object");
            reject_unknown_keys(item, {"id"}, where);
            blacks.push_back({read_string(item, "id", where)});
        }
    }
    if (const auto* list = optional_array(doc, "edges")) {
        for (std::size_t i = 0; i < list->size(); ++i) {
            const auto& item = (*list)[i];
            const auto where = "edges[" + std::to_string(i) + "]";
            if (!item.is_object()) schema_error(where, "expected an object");
            reject_unknown_keys(item, {"white", "black", "label", "sign"}, where);
            Edge edge;
            edge.white = read_string(item, "white", where);
            edge.black = read_string(item, "black", where);
            edge.label = read_integer(item, "label", where);
            edge.sign = read_sign(item, where);
            edges.push_back(std::move(edge));
        }
    }
    return StratifoldGraph(std::move(whites), std::move(blacks), std::move(edges));
}

std::string canonical_serialize(const StratifoldGraph& g) {
    const auto s = sorted_copy(g);
    json doc;
    doc["white"] = json::array();
    doc["black"] = json::array();
    doc["edges"] = json::array();
    for (const auto& w : s.whites()) doc["white"].push_back({{"id", w.id}, {"genus", w.genus}});
    for (const auto& b : s.blacks()) doc["black"].push_back({{"id", b.id}});
    for (const auto& e : s.edges()) {
        json item{{"white", e.white}, {"black", e.black}, {"label", e.label}};
        if (e.sign == EdgeSign::Minus) item["sign"] = "-";
        doc["edges"].push_back(std::move(item));
    }
    return doc.dump(2) + "\n";
}

std::string export_dot(const StratifoldGraph& g) {
    const auto s = sorted_copy(g);
    std::ostringstream out;
    out << "graph stratifold {\n";
    for (const auto& w : s.whites())
        out << "  " << dot_quote(w.id) << " [shape=circle, label=\"" << dot_escape(w.id) << "\\ng=" << w.genus << "\"];\n";
    for (const auto& b : s.blacks())
        out << "  " << dot_quote(b.id) << " [shape=circle, style=filled, fillcolor=black, fontcolor=white, label="
            << dot_quote(b.id) << "];\n";
    for (const auto& e : s.edges()) {
        out << "  " << dot_quote(e.white) << " -- " << dot_quote(e.black) << " [label=\"" << e.label << "\"";
        if (e.sign == EdgeSign::Minus) out << ", style=dashed";
        out << "];\n";
    }
    out << "}\n";
    return out.str();
}

}  // namespace stratifold
