#include "deltader/io.hpp"

#include <cstdint>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "deltader/errors.hpp"

namespace deltader::io {

namespace {

Scalar scalar_from_json(const Json& j, const FieldConfig& field) {
    if (j.is_string()) return Scalar::parse(field, j.get<std::string>());
    if (j.is_number_integer()) return Scalar(field, j.get<long>());
    throw ParseError("scalar must be a string or an integer, got " + j.dump());
}

std::size_t size_from_json(const Json& j, const char* what) {
    if (!j.is_number_integer() || j.get<long long>() < 0)
        throw ParseError(std::string(what) + " must be a non-negative integer");
    return j.get<std::size_t>();
}

StructureTensor tensor_from_json(const Json& j, std::size_t n, const FieldConfig& field, const char* what) {
    auto shape_error = [&](const std::string& where) {
        return ShapeError(std::string(what) + ": expected a " + std::to_string(n) + "x" + std::to_string(n) + "x" +
                          std::to_string(n) + " array" + where);
    };
    if (!j.is_array() || j.size() != n) throw shape_error("");
    StructureTensor t(field, n);
    for (std::size_t i = 0; i < n; ++i) {
        const Json& slice = j[i];
        if (!slice.is_array() || slice.size() != n) throw shape_error(" (row " + std::to_string(i) + ")");
        for (std::size_t k = 0; k < n; ++k) {
            const Json& fiber = slice[k];
            if (!fiber.is_array() || fiber.size() != n)
                throw shape_error(" (entry " + std::to_string(i) + "," + std::to_string(k) + ")");
            for (std::size_t l = 0; l < n; ++l) t(i, k, l) = scalar_from_json(fiber[l], field);
        }
    }
    return t;
}

void emit_tensor(std::ostringstream& os, const StructureTensor& t) {
    const std::size_t n = t.dim();
    if (n == 0) {
        os << "[]";
        return;
    }
    os << "[\n";
    for (std::size_t i = 0; i < n; ++i) {
        os << "    [";
        for (std::size_t j = 0; j < n; ++j) {
            os << (j == 0 ? "[" : ", [");
            for (std::size_t k = 0; k < n; ++k) os << (k == 0 ? "" : ", ") << '"' << t(i, j, k).to_string() << '"';
            os << ']';
        }
        os << (i + 1 == n ? "]\n" : "],\n");
    }
    os << "  ]";
}

} // namespace

Json field_to_json(const FieldConfig& field) {
    Json j;
    if (field.is_rational()) {
        j["type"] = "rational";
    } else {
        j["type"] = "prime";
        j["p"] = field.characteristic();
    }
    return j;
}

FieldConfig field_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("type") || !j["type"].is_string())
        throw ParseError("field must be an object with a \"type\"");
    const auto type = j["type"].get<std::string>();
    if (type == "rational") return FieldConfig::rational();
    if (type == "prime") {
        if (!j.contains("p") || !j["p"].is_number_unsigned()) throw ParseError("prime field needs a positive \"p\"");
        return FieldConfig::prime(j["p"].get<std::uint64_t>());
    }
    throw ParseError("unknown field type '" + type + "'");
}

AlgebraFile load_algebra(std::string_view text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object()) throw ParseError("algebra file must be a JSON object");
    if (!j.contains("version") || j["version"] != 1) throw ParseError("unsupported or missing version (expected 1)");
    for (const char* key : {"field", "dim", "table"})
        if (!j.contains(key)) throw ParseError(std::string("missing \"") + key + "\"");

    const FieldConfig field = field_from_json(j["field"]);
    const std::size_t n = size_from_json(j["dim"], "dim");

    std::vector<std::string> names;
    if (j.contains("names")) {
        if (!j["names"].is_array()) throw ParseError("names must be an array of strings");
        for (const auto& name : j["names"]) {
            if (!name.is_string()) throw ParseError("names must be an array of strings");
            names.push_back(name.get<std::string>());
        }
        if (names.size() != n) throw ShapeError("names has " + std::to_string(names.size()) + " entries, dim is " + std::to_string(n));
    }

    std::optional<Grading> grading;
    if (j.contains("grading") && !j["grading"].is_null()) {
        if (!j["grading"].is_array()) throw ParseError("grading must be an array of 0/1");
        grading.emplace();
        for (const auto& g : j["grading"]) {
            if (!g.is_number_integer()) throw ParseError("grading must be an array of 0/1");
            grading->push_back(g.get<int>());
        }
    }

    StructureTensor table = tensor_from_json(j["table"], n, field, "table");
    std::optional<StructureTensor> table2;
    if (j.contains("table2") && !j["table2"].is_null()) table2 = tensor_from_json(j["table2"], n, field, "table2");

    AlgebraFile file{Algebra(field, std::move(table), std::move(names), std::move(grading), std::move(table2)),
                     std::nullopt};
    if (j.contains("provenance")) file.provenance = j["provenance"];
    return file;
}

AlgebraFile load_algebra_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return load_algebra(buffer.str());
}

std::string emit_algebra(const AlgebraFile& file) {
    const Algebra& a = file.algebra;
    std::ostringstream os;
    os << "{\n";
    os << "  \"version\": 1,\n";
    os << "  \"field\": " << field_to_json(a.field()).dump() << ",\n";
    os << "  \"dim\": " << a.dim() << ",\n";
    os << "  \"names\": " << Json(a.names()).dump() << ",\n";
    if (a.grading()) os << "  \"grading\": " << Json(*a.grading()).dump() << ",\n";
    os << "  \"table\": ";
    emit_tensor(os, a.table());
    if (a.table2()) {
        os << ",\n  \"table2\": ";
        emit_tensor(os, *a.table2());
    }
    if (file.provenance) os << ",\n  \"provenance\": " << file.provenance->dump();
    os << "\n}\n";
    return os.str();
}

std::string emit_algebra(const Algebra& algebra) { return emit_algebra(AlgebraFile{algebra, std::nullopt}); }

AlgebraFile double_file(const DoubleSpec& d) {
    Json prov;
    prov["construction"] = d.construction;
    prov["bracket"] = d.bracket == Product::Primary ? "primary" : "second";
    prov["base_dim"] = d.base.dim();
    prov["base_names"] = d.base.names();
    prov["base_digest"] = digest(emit_algebra(d.base));
    return {d.double_algebra, std::move(prov)};
}

Json matrix_to_json(const Matrix& m) {
    Json rows = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).to_string());
        rows.push_back(std::move(row));
    }
    return rows;
}

Matrix matrix_from_json(const Json& j, const FieldConfig& field) {
    if (!j.is_array()) throw ParseError("matrix must be a nested array");
    const std::size_t rows = j.size();
    const std::size_t cols = rows == 0 ? 0 : j[0].size();
    std::vector<Scalar> entries;
    for (const auto& row : j) {
        if (!row.is_array() || row.size() != cols) throw ShapeError("ragged matrix");
        for (const auto& s : row) entries.push_back(scalar_from_json(s, field));
    }
    return {field, rows, cols, std::move(entries)};
}

Json solution_space_to_json(const SolutionSpace& space, const std::vector<Classification>& classes) {
    Json j;
    j["kind"] = std::string(to_string(space.kind));
    if (space.parity) j["parity"] = std::string(to_string(*space.parity));
    j["product"] = space.product == Product::Primary ? "primary" : "second";
    j["delta"] = space.delta.to_string();
    j["dim"] = space.dim();
    Json basis = Json::array();
    if (space.kind == SpaceKind::GeneralizedPairs) {
        for (const auto& p : space.pairs) basis.push_back({{"chi", matrix_to_json(p.chi)}, {"phi", matrix_to_json(p.phi)}});
    } else {
        for (const auto& m : space.maps) basis.push_back(matrix_to_json(m));
    }
    j["basis"] = std::move(basis);
    Json cls = Json::array();
    for (const auto& c : classes)
        cls.push_back({{"verdict", std::string(to_string(c.verdict))}, {"reason", std::string(to_string(c.reason))}});
    j["classification"] = std::move(cls);
    return j;
}

std::vector<LinearMap> maps_from_json(const Json& space, const FieldConfig& field) {
    std::vector<LinearMap> maps;
    for (const auto& m : space.at("basis")) maps.push_back(matrix_from_json(m, field));
    return maps;
}

std::vector<MapPair> pairs_from_json(const Json& space, const FieldConfig& field) {
    std::vector<MapPair> pairs;
    for (const auto& p : space.at("basis"))
        pairs.push_back({matrix_from_json(p.at("chi"), field), matrix_from_json(p.at("phi"), field)});
    return pairs;
}

std::string digest(std::string_view bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    std::ostringstream os;
    os << std::hex << std::setw(16) << std::setfill('0') << h;
    return os.str();
}

} // namespace deltader::io
