#include "djp/module_json.hpp"

#include "json.hpp"

#include <fstream>
#include <sstream>

namespace djp {

namespace {

using nlohmann::json;

json matrix_to_json(const Matrix& m) {
    json rows = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).str());
        rows.push_back(std::move(row));
    }
    return rows;
}

Matrix matrix_from_json(const json& j, const std::string& field, int dim) {
    if (!j.is_array() || int(j.size()) != dim)
        throw SchemaError(field, "expected an array of " + std::to_string(dim) + " rows");
    Matrix m(dim, dim);
    for (int i = 0; i < dim; ++i) {
        const json& row = j[i];
        if (!row.is_array() || int(row.size()) != dim)
            throw SchemaError(field + "[" + std::to_string(i) + "]",
                              "expected a row of " + std::to_string(dim) + " entries");
        for (int c = 0; c < dim; ++c) {
            const json& e = row[c];
            if (!e.is_string())
                throw SchemaError(field + "[" + std::to_string(i) + "][" +
                                      std::to_string(c) + "]",
                                  "expected a rational string");
            try {
                m.at(i, c) = Rational::parse(e.get<std::string>());
            } catch (const std::invalid_argument& err) {
                throw SchemaError(field + "[" + std::to_string(i) + "][" +
                                      std::to_string(c) + "]",
                                  err.what());
            }
        }
    }
    return m;
}

} // namespace

std::string module_to_json(const FdModule& m) {
    json j;
    j["dim"] = m.dim;
    j["labels"] = m.labels;
    j["generators"] = {{"x", matrix_to_json(m.x)},  {"y", matrix_to_json(m.y)},
                       {"g", matrix_to_json(m.g)},  {"xi", matrix_to_json(m.xi)},
                       {"u", matrix_to_json(m.u)},  {"v", matrix_to_json(m.v)}};
    j["provenance"] = m.provenance;
    if (m.partial_xy) {
        j["partial"] = true;
        j["depth"] = m.depth;
        j["window_degree"] = m.window_degree;
    }
    return j.dump(1);
}

FdModule module_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw SchemaError("(document)", e.what());
    }
    if (!j.is_object()) throw SchemaError("(document)", "expected a JSON object");

    FdModule m;
    if (!j.contains("dim") || !j["dim"].is_number_integer())
        throw SchemaError("dim", "expected an integer");
    m.dim = j["dim"].get<int>();
    if (m.dim < 0) throw SchemaError("dim", "must be nonnegative");

    if (!j.contains("generators") || !j["generators"].is_object())
        throw SchemaError("generators", "expected an object with x,y,g,xi,u,v");
    const json& gens = j["generators"];
    for (const char* name : {"x", "y", "g", "xi", "u", "v"})
        if (!gens.contains(name))
            throw SchemaError(std::string("generators.") + name, "missing");
    m.x = matrix_from_json(gens["x"], "generators.x", m.dim);
    m.y = matrix_from_json(gens["y"], "generators.y", m.dim);
    m.g = matrix_from_json(gens["g"], "generators.g", m.dim);
    m.xi = matrix_from_json(gens["xi"], "generators.xi", m.dim);
    m.u = matrix_from_json(gens["u"], "generators.u", m.dim);
    m.v = matrix_from_json(gens["v"], "generators.v", m.dim);

    if (j.contains("labels")) {
        if (!j["labels"].is_array() || int(j["labels"].size()) != m.dim)
            throw SchemaError("labels", "expected " + std::to_string(m.dim) + " strings");
        for (const auto& l : j["labels"]) {
            if (!l.is_string()) throw SchemaError("labels", "expected strings");
            m.labels.push_back(l.get<std::string>());
        }
    } else {
        for (int i = 0; i < m.dim; ++i) m.labels.push_back("e" + std::to_string(i));
    }
    if (j.contains("provenance")) {
        if (!j["provenance"].is_string()) throw SchemaError("provenance", "expected a string");
        m.provenance = j["provenance"].get<std::string>();
    }

    if (j.contains("partial") && j["partial"].get<bool>()) {
        m.partial_xy = true;
        if (!j.contains("depth") || !j["depth"].is_number_integer())
            throw SchemaError("depth", "required for partial modules");
        m.depth = j["depth"].get<int>();
        if (!j.contains("window_degree") || !j["window_degree"].is_array() ||
            int(j["window_degree"].size()) != m.dim)
            throw SchemaError("window_degree",
                              "expected " + std::to_string(m.dim) + " integers");
        for (const auto& d : j["window_degree"]) {
            if (!d.is_number_integer())
                throw SchemaError("window_degree", "expected integers");
            m.window_degree.push_back(d.get<int>());
        }
    }
    return m;
}

void save_module(const FdModule& m, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << module_to_json(m) << '\n';
    if (!out) throw std::runtime_error("write failed: " + path);
}

FdModule load_module(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return module_from_json(buf.str());
}

} // namespace djp
