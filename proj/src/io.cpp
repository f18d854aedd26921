#include "scld/io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace scld::io {

using json = nlohmann::ordered_json;

namespace {

json parse(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        // nlohmann reports a byte offset; turn it into line:column.
        std::size_t line = 1, col = 1;
        for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        throw ParseError("parse error at line " + std::to_string(line) + ", column " + std::to_string(col) +
                         ": " + e.what());
    }
}

std::size_t require_size(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw ValidationError(std::string("missing field \"") + key + "\"");
    const auto& v = j.at(key);
    if (!v.is_number_unsigned()) throw ValidationError(std::string("field \"") + key + "\" must be a nonnegative integer");
    return v.get<std::size_t>();
}

std::vector<std::vector<Symbol>> require_rows(const json& j, const char* key, std::size_t n) {
    if (!j.contains(key) || !j.at(key).is_array()) {
        throw ValidationError(std::string("field \"") + key + "\" must be an array");
    }
    std::vector<std::vector<Symbol>> rows;
    for (const auto& row : j.at(key)) {
        if (!row.is_array()) throw ValidationError(std::string("entries of \"") + key + "\" must be arrays");
        std::vector<Symbol> r;
        for (const auto& s : row) {
            if (!s.is_number_unsigned()) throw ValidationError("symbols must be nonnegative integers");
            r.push_back(s.get<Symbol>());
        }
        rows.push_back(std::move(r));
    }
    for (const auto& r : rows) {
        if (std::string(key) == "codewords" && r.size() != n) throw ValidationError("codeword length mismatch");
    }
    return rows;
}

}  // namespace

std::string to_json(const Code& code) {
    json j;
    j["q"] = code.alphabet();
    j["n"] = code.length();
    json rows = json::array();
    for (std::size_t i = 0; i < code.size(); ++i) {
        auto w = code.codeword(i);
        rows.push_back(json(std::vector<Symbol>(w.begin(), w.end())));
    }
    j["codewords"] = std::move(rows);
    if (!code.provenance().empty()) j["provenance"] = code.provenance();
    return j.dump() + "\n";
}

std::string to_json(const EvidenceVector& d) {
    json j;
    j["q"] = d.alphabet();
    j["n"] = d.length();
    j["sets"] = d.sets();
    return j.dump() + "\n";
}

Code code_from_json(const std::string& text) {
    const json j = parse(text);
    const std::size_t q = require_size(j, "q");
    const std::size_t n = require_size(j, "n");
    auto rows = require_rows(j, "codewords", n);
    std::string provenance;
    if (j.contains("provenance")) {
        if (!j.at("provenance").is_string()) throw ValidationError("field \"provenance\" must be a string");
        provenance = j.at("provenance").get<std::string>();
    }
    try {
        return Code::from_rows(q, rows, std::move(provenance));
    } catch (const ShapeError& e) {
        throw ValidationError(e.what());
    }
}

EvidenceVector evidence_from_json(const std::string& text) {
    const json j = parse(text);
    const std::size_t q = require_size(j, "q");
    const std::size_t n = require_size(j, "n");
    auto sets = require_rows(j, "sets", n);
    if (sets.size() != n) throw ValidationError("evidence length mismatch");
    try {
        return EvidenceVector::from_sets(q, sets);
    } catch (const ShapeError& e) {
        throw ValidationError(e.what());
    }
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << text;
}

void save(const std::filesystem::path& path, const Code& code) { write_file(path, to_json(code)); }
void save(const std::filesystem::path& path, const EvidenceVector& d) { write_file(path, to_json(d)); }
Code load_code(const std::filesystem::path& path) { return code_from_json(read_file(path)); }
EvidenceVector load_evidence(const std::filesystem::path& path) { return evidence_from_json(read_file(path)); }

}  // namespace scld::io
