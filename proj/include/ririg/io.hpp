#pragma once

// Text formats: algebra files (JSON), function files (JSON) and plain file
// helpers. Malformed input raises ParseError with the line of the offending
// field where it can be located.

#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "ririg/compatible.hpp"
#include "ririg/modal.hpp"

namespace ririg {

using ojson = nlohmann::ordered_json;

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write '" + path + "'");
    out << text;
    if (!out) throw Error("write to '" + path + "' failed");
}

namespace detail {

/// 1-based line of the first `"key"` in the text, 0 if absent.
inline std::size_t line_of_key(std::string_view text, std::string_view key) {
    const std::string quoted = "\"" + std::string(key) + "\"";
    const auto pos = text.find(quoted);
    if (pos == std::string_view::npos) return 0;
    return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(pos), '\n'));
}

inline ojson parse_json(std::string_view text, std::size_t line_offset = 0) {
    try {
        return ojson::parse(text.begin(), text.end());
    } catch (const nlohmann::json::parse_error& e) {
        std::size_t line = 1, col = 1;
        for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        std::string what = e.what();
        if (auto p = what.find("parse error"); p != std::string::npos) what = what.substr(p);
        throw ParseError("malformed JSON: " + what, line + line_offset, col);
    }
}

class FieldReader {
public:
    FieldReader(const ojson& doc, std::string_view text, std::size_t line_offset)
        : doc_(doc), text_(text), offset_(line_offset) {}

    [[noreturn]] void fail(std::string_view field, const std::string& what) const {
        const auto line = line_of_key(text_, field);
        throw ParseError("field '" + std::string(field) + "': " + what, line == 0 ? 0 : line + offset_);
    }

    const ojson& require(const char* field) const {
        if (!doc_.is_object()) throw ParseError("expected a JSON object", 1 + offset_);
        auto it = doc_.find(field);
        if (it == doc_.end()) throw ParseError(std::string("missing field '") + field + "'", 1 + offset_);
        return *it;
    }

    const ojson* optional(const char* field) const {
        auto it = doc_.find(field);
        return it == doc_.end() ? nullptr : &*it;
    }

    std::size_t integer(const ojson& v, std::string_view field, const std::string& where, std::size_t limit) const {
        if (!v.is_number_integer() && !v.is_number_unsigned()) fail(field, where + " must be an integer");
        if (v.is_number_integer() && v.get<long long>() < 0) fail(field, where + " is negative");
        const auto x = v.get<unsigned long long>();
        if (x >= limit) fail(field, where + " = " + std::to_string(x) + " is out of range (size " + std::to_string(limit) + ")");
        return static_cast<std::size_t>(x);
    }

    BinaryTable table(const char* field, std::size_t n) const {
        const auto& v = require(field);
        if (!v.is_array() || v.size() != n) fail(field, "expected " + std::to_string(n) + " rows");
        std::vector<Elem> data;
        data.reserve(n * n);
        for (std::size_t r = 0; r < n; ++r) {
            if (!v[r].is_array() || v[r].size() != n)
                fail(field, "row " + std::to_string(r) + " must have " + std::to_string(n) + " entries");
            for (std::size_t c = 0; c < n; ++c)
                data.push_back(static_cast<Elem>(integer(v[r][c], field, "entry [" + std::to_string(r) + "][" + std::to_string(c) + "]", n)));
        }
        return BinaryTable(n, std::move(data));
    }

private:
    const ojson& doc_;
    std::string_view text_;
    std::size_t offset_;
};

}  // namespace detail

/// Builds an algebra from a parsed JSON object. `text` is the source used for
/// line diagnostics; `line_offset` shifts reported lines (catalog records).
inline ModalRirig algebra_from_json(const ojson& doc, std::string_view text = {}, std::size_t line_offset = 0) {
    detail::FieldReader rd(doc, text, line_offset);
    const auto& size_v = rd.require("size");
    const std::size_t n = rd.integer(size_v, "size", "size", max_universe + 1);
    if (n == 0) rd.fail("size", "must be positive");
    Ririg r;
    r.n = n;
    r.zero = static_cast<Elem>(rd.integer(rd.require("zero"), "zero", "zero", n));
    r.one = static_cast<Elem>(rd.integer(rd.require("one"), "one", "one", n));
    r.join = rd.table("join", n);
    r.prod = rd.table("prod", n);
    if (rd.optional("imp")) {
        r.imp = rd.table("imp", n);
    } else {
        try {
            r.imp = synthesize_imp(r.join, r.prod);
        } catch (const PreconditionFailed& e) {
            rd.fail("prod", std::string("no 'imp' given and it cannot be synthesized: ") + e.what());
        }
    }
    if (const auto* labels = rd.optional("labels")) {
        if (!labels->is_array() || labels->size() != n) rd.fail("labels", "expected " + std::to_string(n) + " strings");
        for (const auto& l : *labels) {
            if (!l.is_string()) rd.fail("labels", "labels must be strings");
            r.labels.push_back(l.get<std::string>());
        }
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (r.labels[i] == r.labels[j]) rd.fail("labels", "duplicate label '" + r.labels[i] + "'");
    }
    std::vector<std::string> names;
    std::vector<UnaryTable> tables;
    if (const auto* modals = rd.optional("modals")) {
        if (!modals->is_object()) rd.fail("modals", "expected an object mapping names to tables");
        for (auto it = modals->begin(); it != modals->end(); ++it) {
            const std::string& name = it.key();
            if (!ModalSignature::valid_name(name)) rd.fail("modals", "invalid modal symbol '" + name + "'");
            if (!it->is_array() || it->size() != n) rd.fail(name, "modal table must have " + std::to_string(n) + " entries");
            UnaryTable t;
            for (std::size_t i = 0; i < n; ++i)
                t.push_back(static_cast<Elem>(rd.integer((*it)[i], name, "entry [" + std::to_string(i) + "]", n)));
            names.push_back(name);
            tables.push_back(std::move(t));
        }
    }
    try {
        return ModalRirig(std::move(r), ModalSignature(std::move(names)), std::move(tables));
    } catch (const Error& e) {
        throw ParseError(e.what(), 1 + line_offset);
    }
}

inline ModalRirig parse_algebra(std::string_view text) { return algebra_from_json(detail::parse_json(text), text); }

inline ModalRirig load_algebra(const std::string& path) {
    const std::string text = read_file(path);
    try {
        return parse_algebra(text);
    } catch (const ParseError& e) {
        throw ParseError(path + ": " + e.what(), 0);
    }
}

inline ojson algebra_to_json(const ModalRirig& a) {
    auto rows = [&](const BinaryTable& t) {
        ojson out = ojson::array();
        for (Elem x = 0; x < a.size(); ++x) {
            ojson row = ojson::array();
            for (Elem y = 0; y < a.size(); ++y) row.push_back(t(x, y));
            out.push_back(std::move(row));
        }
        return out;
    };
    ojson doc;
    doc["size"] = a.size();
    doc["zero"] = a.zero();
    doc["one"] = a.one();
    if (!a.base.labels.empty()) doc["labels"] = a.base.labels;
    doc["join"] = rows(a.base.join);
    doc["prod"] = rows(a.base.prod);
    doc["imp"] = rows(a.base.imp);
    ojson modals = ojson::object();
    for (std::size_t m = 0; m < a.modals.size(); ++m) modals[a.sig[m]] = a.modals[m];
    doc["modals"] = std::move(modals);
    return doc;
}

/// Human-friendly multi-line rendering with one table row per line.
namespace detail {

/// A flat array on one line with ", " separators; other values compact.
inline std::string inline_json(const ojson& v) {
    if (!v.is_array()) return v.dump();
    std::string out = "[";
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + v[i].dump();
    return out + "]";
}

}  // namespace detail

inline std::string format_algebra(const ModalRirig& a) {
    const ojson doc = algebra_to_json(a);
    std::string out = "{\n";
    bool first = true;
    for (auto it = doc.begin(); it != doc.end(); ++it) {
        if (!first) out += ",\n";
        first = false;
        out += "  \"" + it.key() + "\": ";
        const bool matrix = it->is_array() && !it->empty() && (*it)[0].is_array();
        if (matrix) {
            out += "[\n";
            for (std::size_t r = 0; r < it->size(); ++r) out += "    " + detail::inline_json((*it)[r]) + (r + 1 < it->size() ? ",\n" : "\n");
            out += "  ]";
        } else if (it->is_object() && !it->empty()) {
            out += "{\n";
            std::size_t i = 0;
            for (auto jt = it->begin(); jt != it->end(); ++jt, ++i)
                out += "    \"" + jt.key() + "\": " + detail::inline_json(*jt) + (i + 1 < it->size() ? ",\n" : "\n");
            out += "  }";
        } else {
            out += detail::inline_json(*it);
        }
    }
    return out + "\n}\n";
}

// ---------------------------------------------------------------------------
// Function files: {"arity": k, "table": [...]} with n^k entries in row-major order.

inline FiniteFunction parse_function(std::string_view text, std::size_t n) {
    const ojson doc = detail::parse_json(text);
    detail::FieldReader rd(doc, text, 0);
    const std::size_t k = rd.integer(rd.require("arity"), "arity", "arity", 9);
    if (k == 0) rd.fail("arity", "must be at least 1");
    const auto& t = rd.require("table");
    if (!t.is_array()) rd.fail("table", "expected an array");
    std::size_t expected = 1;
    for (std::size_t i = 0; i < k; ++i) expected *= n;
    if (t.size() != expected)
        rd.fail("table", "expected " + std::to_string(expected) + " entries for arity " + std::to_string(k) +
                             " over " + std::to_string(n) + " elements, got " + std::to_string(t.size()));
    std::vector<Elem> values;
    for (std::size_t i = 0; i < t.size(); ++i)
        values.push_back(static_cast<Elem>(rd.integer(t[i], "table", "entry [" + std::to_string(i) + "]", n)));
    return FiniteFunction(n, k, std::move(values));
}

inline FiniteFunction load_function(const std::string& path, std::size_t n) {
    const std::string text = read_file(path);
    try {
        return parse_function(text, n);
    } catch (const ParseError& e) {
        throw ParseError(path + ": " + e.what(), 0);
    }
}

inline std::string format_function(const FiniteFunction& f) {
    ojson doc;
    doc["arity"] = f.arity;
    doc["table"] = f.table;
    return doc.dump() + "\n";
}

}  // namespace ririg
