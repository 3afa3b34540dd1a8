#include "engellab/files.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace engellab {

namespace {

using nlohmann::json;
using ordered_json = nlohmann::ordered_json;

json parse_json(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw ParseError("not valid JSON");
    return j;
}

FieldSpec field_from_json(const json& j) {
    if (j.is_string()) {
        if (j.get<std::string>() == "Q") return FieldSpec::rationals();
        throw ParseError("unknown field '" + j.get<std::string>() + "'; expected \"Q\" or {\"Fp\": p}");
    }
    if (j.is_object() && j.contains("Fp") && j["Fp"].is_number_integer())
        return FieldSpec::prime(j["Fp"].get<long>());
    throw ParseError("field must be \"Q\" or {\"Fp\": p}");
}

ordered_json field_to_json(const FieldSpec& f) {
    if (f.is_rationals()) return ordered_json("Q");
    return ordered_json{{"Fp", f.characteristic()}};
}

std::size_t index_from_json(const json& j, std::size_t dim, const char* what) {
    if (!j.is_number_integer() || j.get<long long>() < 0)
        throw ParseError(std::string(what) + " index must be a non-negative integer");
    auto v = j.get<unsigned long long>();
    if (v >= dim)
        throw ParseError(std::string(what) + " index " + std::to_string(v) +
                         " out of range for dimension " + std::to_string(dim));
    return static_cast<std::size_t>(v);
}

Matrix matrix_from_json(const json& j, const FieldSpec& f, std::size_t m, const char* what) {
    if (!j.is_array() || j.size() != m)
        throw ParseError(std::string(what) + " must be an array of " + std::to_string(m) + " rows");
    Matrix out(f, m, m);
    for (std::size_t r = 0; r < m; ++r) {
        if (!j[r].is_array() || j[r].size() != m)
            throw ParseError(std::string(what) + " row " + std::to_string(r) + " must have " +
                             std::to_string(m) + " entries");
        for (std::size_t c = 0; c < m; ++c) {
            if (!j[r][c].is_string())
                throw ParseError(std::string(what) + " entries must be scalar strings");
            out.set(r, c, Scalar::parse(f, j[r][c].get<std::string>()));
        }
    }
    return out;
}

ordered_json matrix_to_json(const Matrix& m) {
    ordered_json rows = ordered_json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        ordered_json row = ordered_json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m.at(r, c).str());
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace

AlgebraFile parse_algebra_file(const std::string& text) {
    json j = parse_json(text);
    if (!j.is_object()) throw ParseError("algebra file must be a JSON object");
    if (!j.contains("dim") || !j["dim"].is_number_integer() || j["dim"].get<long long>() < 0)
        throw ParseError("missing or bad 'dim'");
    const auto dim = static_cast<std::size_t>(j["dim"].get<unsigned long long>());
    if (!j.contains("field")) throw ParseError("missing 'field'");
    FieldSpec field = field_from_json(j["field"]);
    StructureConstants c(field, dim);
    if (!j.contains("products") || !j["products"].is_array())
        throw ParseError("missing or bad 'products'");
    std::set<std::tuple<std::size_t, std::size_t, std::size_t>> seen;
    for (const json& entry : j["products"]) {
        if (!entry.is_array() || entry.size() != 4)
            throw ParseError("each product must be [i, j, k, \"coeff\"]");
        std::size_t i = index_from_json(entry[0], dim, "product");
        std::size_t jj = index_from_json(entry[1], dim, "product");
        std::size_t k = index_from_json(entry[2], dim, "product");
        if (!entry[3].is_string()) throw ParseError("product coefficient must be a string");
        if (!seen.insert({i, jj, k}).second)
            throw ParseError("duplicate product entry for (" + std::to_string(i) + ", " +
                             std::to_string(jj) + ", " + std::to_string(k) + ")");
        c.set(i, jj, k, Scalar::parse(field, entry[3].get<std::string>()));
    }
    return AlgebraFile{field, std::move(c)};
}

std::string serialize_constants_file(const FieldSpec& field, const StructureConstants& c) {
    // Hand-rolled layout: one product per line, so fixtures stay diffable.
    std::ostringstream out;
    out << "{\n  \"dim\": " << c.dim() << ",\n  \"field\": " << field_to_json(field).dump()
        << ",\n  \"products\": [";
    bool first = true;
    for (std::size_t i = 0; i < c.dim(); ++i)
        for (std::size_t jj = 0; jj < c.dim(); ++jj)
            for (std::size_t k = 0; k < c.dim(); ++k) {
                const Scalar& v = c.at(i, jj, k);
                if (v.is_zero()) continue;
                out << (first ? "\n" : ",\n") << "    [" << i << ", " << jj << ", " << k << ", \""
                    << v.str() << "\"]";
                first = false;
            }
    out << (first ? "]" : "\n  ]") << "\n}\n";
    return out.str();
}

std::string serialize_algebra_file(const LeibnizAlgebra& alg) {
    return serialize_constants_file(alg.field(), alg.constants());
}

RepFile parse_rep_file(const std::string& text, const FieldSpec& field, std::size_t alg_dim) {
    json j = parse_json(text);
    if (!j.is_object()) throw ParseError("representation file must be a JSON object");
    if (!j.contains("dim") || !j["dim"].is_number_integer() || j["dim"].get<long long>() < 0)
        throw ParseError("missing or bad 'dim'");
    const auto m = static_cast<std::size_t>(j["dim"].get<unsigned long long>());
    RepFile out{m, {}, {}};
    for (const char* key : {"T", "S"}) {
        if (!j.contains(key) || !j[key].is_array() || j[key].size() != alg_dim)
            throw ParseError(std::string("'") + key + "' must be an array of " +
                             std::to_string(alg_dim) + " matrices");
        auto& target = (key[0] == 'T') ? out.t : out.s;
        for (std::size_t i = 0; i < alg_dim; ++i)
            target.push_back(matrix_from_json(j[key][i], field, m,
                                              (std::string(key) + "[" + std::to_string(i) + "]").c_str()));
    }
    return out;
}

std::string serialize_rep_file(const Representation& rep) {
    // One matrix per line for the same diffability reason.
    std::ostringstream out;
    out << "{\n  \"dim\": " << rep.mod_dim() << ",\n";
    for (const char* key : {"T", "S"}) {
        out << "  \"" << key << "\": [";
        for (std::size_t i = 0; i < rep.alg_dim(); ++i) {
            const Matrix& mat = (key[0] == 'T') ? rep.t(i) : rep.s(i);
            out << (i ? ",\n    " : "\n    ") << matrix_to_json(mat).dump();
        }
        out << (rep.alg_dim() ? "\n  ]" : "]") << (key[0] == 'T' ? ",\n" : "\n");
    }
    out << "}\n";
    return out.str();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open '" + path + "' for reading");
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) throw IoError("error while reading '" + path + "'");
    return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open '" + path + "' for writing");
    out << content;
    out.flush();
    if (!out) throw IoError("error while writing '" + path + "'");
}

} // namespace engellab
