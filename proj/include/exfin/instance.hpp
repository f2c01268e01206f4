#pragma once

// Instance documents: finite sets, maps, relations, and dependent-product
// pairs, read from JSON text.  Validation errors carry the line and column
// of the offending token, which stock DOM parsers discard, so the reader
// here is a small hand-written one that tags every value with its position.
//
// Top-level keys: "sets" (name -> array of labels), "maps" (name ->
// {dom, cod, table}), "relations" (name -> {feet, rows}), "pairs" (name ->
// {f, g}).  Tables must be total and well-typed; relation rows may repeat —
// a relation is a span, and multiplicities are meaningful.

#include <cstdio>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "exfin/formula.hpp"
#include "exfin/weaklim.hpp"

namespace exfin {

namespace detail {

struct JNode {
    enum class Kind { Null, Bool, Number, String, Array, Object };
    Kind kind = Kind::Null;
    bool boolean = false;
    double number = 0;
    std::string str;
    std::vector<JNode> array;
    std::vector<std::pair<std::string, JNode>> object; // insertion order kept
    std::vector<std::pair<int, int>> key_pos;          // parallel to `object`
    int line = 1, col = 1;

    const JNode* find(const std::string& key) const {
        for (const auto& [k, v] : object)
            if (k == key) return &v;
        return nullptr;
    }
};

class JsonReader {
public:
    explicit JsonReader(const std::string& src) : src_(src) {}

    JNode parse() {
        JNode v = value();
        skip_ws();
        if (pos_ < src_.size()) fail("trailing characters after the document");
        return v;
    }

private:
    const std::string& src_;
    std::size_t pos_ = 0;
    int line_ = 1, col_ = 1;

    [[noreturn]] void fail(const std::string& msg) const { throw parse_error(line_, col_, msg); }

    char peek() const { return pos_ < src_.size() ? src_[pos_] : '\0'; }

    char take() {
        if (pos_ >= src_.size()) fail("unexpected end of input");
        char c = src_[pos_++];
        if (c == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        return c;
    }

    void skip_ws() {
        while (pos_ < src_.size()) {
            char c = src_[pos_];
            if (c == ' ' || c == '\t' || c == '\n' || c == '\r')
                take();
            else
                break;
        }
    }

    void expect(char c) {
        if (peek() != c) fail(std::string("expected '") + c + "'");
        take();
    }

    JNode value() {
        skip_ws();
        JNode v;
        v.line = line_;
        v.col = col_;
        char c = peek();
        if (c == '{') return object(v);
        if (c == '[') return array(v);
        if (c == '"') {
            v.kind = JNode::Kind::String;
            v.str = string();
            return v;
        }
        if (c == 't' || c == 'f') {
            v.kind = JNode::Kind::Bool;
            v.boolean = c == 't';
            literal(c == 't' ? "true" : "false");
            return v;
        }
        if (c == 'n') {
            literal("null");
            return v;
        }
        if (c == '-' || (c >= '0' && c <= '9')) {
            v.kind = JNode::Kind::Number;
            v.number = number();
            return v;
        }
        fail("expected a JSON value");
    }

    void literal(const char* word) {
        for (const char* p = word; *p; ++p)
            if (take() != *p) fail(std::string("expected \"") + word + "\"");
    }

    std::string string() {
        expect('"');
        std::string out;
        while (true) {
            char c = take();
            if (c == '"') return out;
            if (c == '\\') {
                char e = take();
                switch (e) {
                case '"': out += '"'; break;
                case '\\': out += '\\'; break;
                case '/': out += '/'; break;
                case 'b': out += '\b'; break;
                case 'f': out += '\f'; break;
                case 'n': out += '\n'; break;
                case 'r': out += '\r'; break;
                case 't': out += '\t'; break;
                case 'u': {
                    int code = 0;
                    for (int k = 0; k < 4; ++k) {
                        char h = take();
                        int d = h >= '0' && h <= '9'   ? h - '0'
                                : h >= 'a' && h <= 'f' ? h - 'a' + 10
                                : h >= 'A' && h <= 'F' ? h - 'A' + 10
                                                       : -1;
                        if (d < 0) fail("bad \\u escape");
                        code = code * 16 + d;
                    }
                    // Encode as UTF-8 (surrogate pairs are not needed for
                    // instance labels; a lone surrogate is an error).
                    if (code >= 0xD800 && code <= 0xDFFF) fail("unsupported surrogate escape");
                    if (code < 0x80) {
                        out += static_cast<char>(code);
                    } else if (code < 0x800) {
                        out += static_cast<char>(0xC0 | (code >> 6));
                        out += static_cast<char>(0x80 | (code & 0x3F));
                    } else {
                        out += static_cast<char>(0xE0 | (code >> 12));
                        out += static_cast<char>(0x80 | ((code >> 6) & 0x3F));
                        out += static_cast<char>(0x80 | (code & 0x3F));
                    }
                    break;
                }
                default: fail("bad escape character");
                }
            } else if (static_cast<unsigned char>(c) < 0x20) {
                fail("control character inside a string");
            } else {
                out += c;
            }
        }
    }

    double number() {
        std::string buf;
        if (peek() == '-') buf += take();
        while (peek() >= '0' && peek() <= '9') buf += take();
        if (peek() == '.') {
            buf += take();
            while (peek() >= '0' && peek() <= '9') buf += take();
        }
        if (peek() == 'e' || peek() == 'E') {
            buf += take();
            if (peek() == '+' || peek() == '-') buf += take();
            while (peek() >= '0' && peek() <= '9') buf += take();
        }
        if (buf.empty() || buf == "-") fail("malformed number");
        return std::stod(buf);
    }

    JNode object(JNode v) {
        v.kind = JNode::Kind::Object;
        expect('{');
        skip_ws();
        if (peek() == '}') {
            take();
            return v;
        }
        while (true) {
            skip_ws();
            int kl = line_, kc = col_;
            std::string key = string();
            for (const auto& [k, u] : v.object)
                if (k == key)
                    throw parse_error(kl, kc, "duplicate key \"" + key + "\"");
            skip_ws();
            expect(':');
            v.object.emplace_back(std::move(key), value());
            v.key_pos.emplace_back(kl, kc);
            skip_ws();
            char c = take();
            if (c == '}') return v;
            if (c != ',') fail("expected ',' or '}' in object");
        }
    }

    JNode array(JNode v) {
        v.kind = JNode::Kind::Array;
        expect('[');
        skip_ws();
        if (peek() == ']') {
            take();
            return v;
        }
        while (true) {
            v.array.push_back(value());
            skip_ws();
            char c = take();
            if (c == ']') return v;
            if (c != ',') fail("expected ',' or ']' in array");
        }
    }
};

[[noreturn]] inline void fail_at(const JNode& n, const std::string& msg) {
    throw parse_error(n.line, n.col, msg);
}

inline const JNode& want(const JNode& n, JNode::Kind kind, const std::string& what) {
    if (n.kind != kind) fail_at(n, what);
    return n;
}

} // namespace detail

struct InstanceDocument {
    struct MapEntry {
        std::string dom, cod;
        FiniteMap map;
        bool operator==(const MapEntry& o) const {
            return dom == o.dom && cod == o.cod && map == o.map;
        }
    };
    struct RelationEntry {
        std::vector<std::string> feet;
        NamedRelation rel;
        bool operator==(const RelationEntry& o) const {
            return feet == o.feet && rel.psub.rep == o.rel.psub.rep;
        }
    };
    struct PairEntry {
        std::string f, g;
        bool operator==(const PairEntry& o) const = default;
    };

    std::map<std::string, FiniteSet> sets;
    std::map<std::string, MapEntry> maps;
    std::map<std::string, RelationEntry> relations;
    std::map<std::string, PairEntry> pairs;

    bool operator==(const InstanceDocument& o) const {
        return sets == o.sets && maps == o.maps && relations == o.relations && pairs == o.pairs;
    }

    // Projection for the formula parser: every named set, map, and relation
    // is usable in formulas against this document.
    SymbolTable symbols() const {
        SymbolTable syms;
        for (const auto& [n, s] : sets) syms.sets.emplace(n, s);
        for (const auto& [n, m] : maps) syms.maps.emplace(n, m.map);
        for (const auto& [n, r] : relations) syms.relations.emplace(n, r.rel);
        return syms;
    }
};

inline InstanceDocument parse_instance(const std::string& text) {
    using detail::JNode;
    JNode root = detail::JsonReader(text).parse();
    detail::want(root, JNode::Kind::Object, "instance document must be a JSON object");

    for (std::size_t i = 0; i < root.object.size(); ++i) {
        const std::string& key = root.object[i].first;
        if (key != "sets" && key != "maps" && key != "relations" && key != "pairs")
            throw parse_error(root.key_pos[i].first, root.key_pos[i].second,
                              "unknown top-level key \"" + key +
                                  "\" (expected sets, maps, relations, or pairs)");
    }

    InstanceDocument doc;

    if (const JNode* sets = root.find("sets")) {
        detail::want(*sets, JNode::Kind::Object, "\"sets\" must be an object");
        for (const auto& [name, val] : sets->object) {
            detail::want(val, JNode::Kind::Array,
                         "set \"" + name + "\" must be an array of labels");
            std::vector<std::string> labels;
            for (const JNode& item : val.array) {
                detail::want(item, JNode::Kind::String,
                             "labels in set \"" + name + "\" must be strings");
                for (const std::string& seen : labels)
                    if (seen == item.str)
                        detail::fail_at(item, "duplicate label \"" + item.str + "\" in set \"" +
                                                  name + "\"");
                labels.push_back(item.str);
            }
            doc.sets.emplace(name, FiniteSet(std::move(labels)));
        }
    }

    auto resolve_set = [&doc](const JNode& n, const std::string& what) -> const FiniteSet& {
        detail::want(n, detail::JNode::Kind::String, what + " must be a set name");
        auto it = doc.sets.find(n.str);
        if (it == doc.sets.end())
            detail::fail_at(n, what + " names unknown set \"" + n.str + "\"");
        return it->second;
    };

    if (const JNode* maps = root.find("maps")) {
        detail::want(*maps, JNode::Kind::Object, "\"maps\" must be an object");
        for (const auto& [name, val] : maps->object) {
            detail::want(val, JNode::Kind::Object,
                         "map \"" + name + "\" must be an object with dom, cod, table");
            for (std::size_t i = 0; i < val.object.size(); ++i)
                if (val.object[i].first != "dom" && val.object[i].first != "cod" &&
                    val.object[i].first != "table")
                    throw parse_error(val.key_pos[i].first, val.key_pos[i].second,
                                      "unknown key \"" + val.object[i].first + "\" in map \"" +
                                          name + "\"");
            const JNode *dn = val.find("dom"), *cn = val.find("cod"), *tn = val.find("table");
            if (!dn || !cn || !tn)
                detail::fail_at(val, "map \"" + name + "\" needs dom, cod, and table");
            const FiniteSet& dom = resolve_set(*dn, "dom of map \"" + name + "\"");
            const FiniteSet& cod = resolve_set(*cn, "cod of map \"" + name + "\"");
            detail::want(*tn, JNode::Kind::Object, "table of map \"" + name + "\" must be an object");

            std::vector<int> table(static_cast<std::size_t>(dom.size()), -1);
            for (std::size_t i = 0; i < tn->object.size(); ++i) {
                const auto& [from, ton] = tn->object[i];
                std::optional<int> a = dom.find(from);
                if (!a)
                    throw parse_error(tn->key_pos[i].first, tn->key_pos[i].second,
                                      "table of map \"" + name + "\" mentions \"" + from +
                                          "\", which is not in its domain \"" + dn->str + "\"");
                detail::want(ton, JNode::Kind::String,
                             "table values of map \"" + name + "\" must be labels");
                std::optional<int> b = cod.find(ton.str);
                if (!b)
                    detail::fail_at(ton, "table of map \"" + name + "\" sends \"" + from +
                                             "\" to \"" + ton.str +
                                             "\", which is not in its codomain \"" + cn->str +
                                             "\"");
                table[static_cast<std::size_t>(*a)] = *b;
            }
            for (int a = 0; a < dom.size(); ++a)
                if (table[static_cast<std::size_t>(a)] < 0)
                    detail::fail_at(*tn, "table of map \"" + name + "\" is not total: element \"" +
                                             dom.label(a) + "\" of \"" + dn->str +
                                             "\" has no value");
            doc.maps.emplace(name,
                             InstanceDocument::MapEntry{dn->str, cn->str,
                                                        FiniteMap(dom, cod, std::move(table))});
        }
    }

    if (const JNode* rels = root.find("relations")) {
        detail::want(*rels, JNode::Kind::Object, "\"relations\" must be an object");
        for (const auto& [name, val] : rels->object) {
            detail::want(val, JNode::Kind::Object,
                         "relation \"" + name + "\" must be an object with feet and rows");
            const JNode *fn = val.find("feet"), *rn = val.find("rows");
            if (!fn || !rn)
                detail::fail_at(val, "relation \"" + name + "\" needs feet and rows");
            detail::want(*fn, JNode::Kind::Array,
                         "feet of relation \"" + name + "\" must be an array of set names");
            std::vector<std::string> feet_names;
            std::vector<FiniteSet> feet;
            for (const JNode& fi : fn->array) {
                feet.push_back(resolve_set(fi, "foot of relation \"" + name + "\""));
                feet_names.push_back(fi.str);
            }
            if (feet.empty())
                detail::fail_at(*fn, "relation \"" + name + "\" needs at least one foot");
            detail::want(*rn, JNode::Kind::Array,
                         "rows of relation \"" + name + "\" must be an array");

            TupleProduct tp = tuple_product(feet);
            std::vector<int> into;
            std::vector<std::string> row_labels;
            for (const JNode& row : rn->array) {
                detail::want(row, JNode::Kind::Array,
                             "each row of relation \"" + name + "\" must be an array");
                if (row.array.size() != feet.size())
                    detail::fail_at(row, "row of relation \"" + name + "\" has " +
                                             std::to_string(row.array.size()) +
                                             " entries, expected " + std::to_string(feet.size()));
                std::vector<int> coords;
                std::vector<std::string> parts;
                for (std::size_t k = 0; k < row.array.size(); ++k) {
                    const JNode& cell = row.array[k];
                    detail::want(cell, JNode::Kind::String,
                                 "entries of relation \"" + name + "\" must be labels");
                    std::optional<int> idx = feet[k].find(cell.str);
                    if (!idx)
                        detail::fail_at(cell, "relation \"" + name + "\" mentions \"" + cell.str +
                                                  "\", which is not in \"" + feet_names[k] + "\"");
                    coords.push_back(*idx);
                    parts.push_back(cell.str);
                }
                into.push_back(tp.encode(coords));
                row_labels.push_back(tuple_label(parts));
            }
            FiniteSet apex(make_distinct_labels(std::move(row_labels)));
            doc.relations.emplace(
                name, InstanceDocument::RelationEntry{
                          std::move(feet_names),
                          NamedRelation(name, feet,
                                        Presubobject(tp.object,
                                                     FiniteMap(apex, tp.object, std::move(into))))});
        }
    }

    if (const JNode* pairs = root.find("pairs")) {
        detail::want(*pairs, JNode::Kind::Object, "\"pairs\" must be an object");
        for (const auto& [name, val] : pairs->object) {
            detail::want(val, JNode::Kind::Object,
                         "pair \"" + name + "\" must be an object with f and g");
            const JNode *fn = val.find("f"), *gn = val.find("g");
            if (!fn || !gn) detail::fail_at(val, "pair \"" + name + "\" needs f and g");
            detail::want(*fn, JNode::Kind::String, "f of pair \"" + name + "\" must be a map name");
            detail::want(*gn, JNode::Kind::String, "g of pair \"" + name + "\" must be a map name");
            auto fit = doc.maps.find(fn->str);
            if (fit == doc.maps.end())
                detail::fail_at(*fn, "pair \"" + name + "\" names unknown map \"" + fn->str + "\"");
            auto git = doc.maps.find(gn->str);
            if (git == doc.maps.end())
                detail::fail_at(*gn, "pair \"" + name + "\" names unknown map \"" + gn->str + "\"");
            if (git->second.cod != fit->second.dom)
                detail::fail_at(*gn, "pair \"" + name + "\": map \"" + gn->str +
                                         "\" lands in \"" + git->second.cod +
                                         "\" but must land in the domain \"" + fit->second.dom +
                                         "\" of \"" + fn->str + "\"");
            doc.pairs.emplace(name, InstanceDocument::PairEntry{fn->str, gn->str});
        }
    }

    return doc;
}

namespace detail {

inline void json_escape(std::string& out, const std::string& s) {
    out += '"';
    for (char c : s) {
        switch (c) {
        case '"': out += "\\\""; break;
        case '\\': out += "\\\\"; break;
        case '\n': out += "\\n"; break;
        case '\t': out += "\\t"; break;
        case '\r': out += "\\r"; break;
        default:
            if (static_cast<unsigned char>(c) < 0x20) {
                char buf[8];
                std::snprintf(buf, sizeof buf, "\\u%04x", c);
                out += buf;
            } else {
                out += c;
            }
        }
    }
    out += '"';
}

} // namespace detail

// Canonical text for a document: fixed section order, names sorted, tables
// in domain order, rows in stored span order.  Parsing the output yields an
// equal document, and serializing is byte-stable.
inline std::string serialize_instance(const InstanceDocument& doc) {
    std::string out = "{\n";
    bool first_section = true;
    auto section = [&](const char* name) {
        if (!first_section) out += ",\n";
        first_section = false;
        out += "  ";
        detail::json_escape(out, name);
        out += ": {\n";
    };

    if (!doc.sets.empty()) {
        section("sets");
        bool first = true;
        for (const auto& [name, s] : doc.sets) {
            if (!first) out += ",\n";
            first = false;
            out += "    ";
            detail::json_escape(out, name);
            out += ": [";
            for (int i = 0; i < s.size(); ++i) {
                if (i) out += ", ";
                detail::json_escape(out, s.label(i));
            }
            out += "]";
        }
        out += "\n  }";
    }

    if (!doc.maps.empty()) {
        section("maps");
        bool first = true;
        for (const auto& [name, m] : doc.maps) {
            if (!first) out += ",\n";
            first = false;
            out += "    ";
            detail::json_escape(out, name);
            out += ": {\"dom\": ";
            detail::json_escape(out, m.dom);
            out += ", \"cod\": ";
            detail::json_escape(out, m.cod);
            out += ", \"table\": {";
            for (int a = 0; a < m.map.dom().size(); ++a) {
                if (a) out += ", ";
                detail::json_escape(out, m.map.dom().label(a));
                out += ": ";
                detail::json_escape(out, m.map.cod().label(m.map(a)));
            }
            out += "}}";
        }
        out += "\n  }";
    }

    if (!doc.relations.empty()) {
        section("relations");
        bool first = true;
        for (const auto& [name, r] : doc.relations) {
            if (!first) out += ",\n";
            first = false;
            out += "    ";
            detail::json_escape(out, name);
            out += ": {\"feet\": [";
            for (std::size_t k = 0; k < r.feet.size(); ++k) {
                if (k) out += ", ";
                detail::json_escape(out, r.feet[k]);
            }
            out += "], \"rows\": [";
            const FiniteMap& rep = r.rel.psub.rep;
            TupleProduct tp = tuple_product(r.rel.feet);
            for (int w = 0; w < rep.dom().size(); ++w) {
                if (w) out += ", ";
                out += "[";
                std::vector<int> coords = tp.decode(rep(w));
                for (std::size_t k = 0; k < coords.size(); ++k) {
                    if (k) out += ", ";
                    detail::json_escape(out, r.rel.feet[k].label(coords[k]));
                }
                out += "]";
            }
            out += "]}";
        }
        out += "\n  }";
    }

    if (!doc.pairs.empty()) {
        section("pairs");
        bool first = true;
        for (const auto& [name, p] : doc.pairs) {
            if (!first) out += ",\n";
            first = false;
            out += "    ";
            detail::json_escape(out, name);
            out += ": {\"f\": ";
            detail::json_escape(out, p.f);
            out += ", \"g\": ";
            detail::json_escape(out, p.g);
            out += "}";
        }
        out += "\n  }";
    }

    out += "\n}\n";
    return out;
}

} // namespace exfin
