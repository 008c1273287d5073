#include "qnogo/serialization.hpp"

#include <cmath>
#include <fstream>

#include <nlohmann/json.hpp>

namespace qnogo {

using nlohmann::json;

namespace {

double finite_number(const json& j, const char* what) {
    if (!j.is_number()) throw ParseError(std::string(what) + ": expected a number");
    const double x = j.get<double>();
    if (!std::isfinite(x)) throw ParseError(std::string(what) + ": non-finite number");
    return x;
}

Complex complex_entry(const json& j, const char* what) {
    if (!j.is_array() || j.size() != 2)
        throw ParseError(std::string(what) + ": expected a [re, im] pair");
    return {finite_number(j[0], what), finite_number(j[1], what)};
}

int read_dim(const json& j, const char* what) {
    if (!j.contains("dim") || !j["dim"].is_number_integer())
        throw ParseError(std::string(what) + ": missing integer \"dim\"");
    const int dim = j["dim"].get<int>();
    if (dim < 1) throw ParseError(std::string(what) + ": dim must be positive");
    return dim;
}

json complex_to_json(Complex z) { return json::array({z.real(), z.imag()}); }

}  // namespace

Matrix matrix_from_json(const json& j) {
    const int dim = read_dim(j, "matrix");
    if (!j.contains("entries") || !j["entries"].is_array())
        throw ParseError("matrix: missing \"entries\" array");
    const json& rows = j["entries"];
    if (static_cast<int>(rows.size()) != dim)
        throw ParseError("matrix: entries grid is not dim x dim");
    Matrix m(dim, dim);
    for (int r = 0; r < dim; ++r) {
        if (!rows[r].is_array() || static_cast<int>(rows[r].size()) != dim)
            throw ParseError("matrix: entries grid is not square");
        for (int c = 0; c < dim; ++c) m(r, c) = complex_entry(rows[r][c], "matrix entry");
    }
    return m;
}

json matrix_to_json(const Matrix& m) {
    json rows = json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(complex_to_json(m(r, c)));
        rows.push_back(std::move(row));
    }
    return json{{"dim", m.rows()}, {"entries", std::move(rows)}};
}

StateVector state_from_json(const json& j) {
    const int dim = read_dim(j, "state");
    if (!j.contains("amplitudes") || !j["amplitudes"].is_array())
        throw ParseError("state: missing \"amplitudes\" array");
    const json& amps = j["amplitudes"];
    if (static_cast<int>(amps.size()) != dim)
        throw ParseError("state: amplitude count does not match dim");
    Vector v(dim);
    for (int k = 0; k < dim; ++k) v(k) = complex_entry(amps[k], "state amplitude");
    try {
        return StateVector(std::move(v));
    } catch (const Error& e) {
        throw ParseError(std::string("state: ") + e.what());
    }
}

json state_to_json(const StateVector& psi) {
    json amps = json::array();
    for (int k = 0; k < psi.dim(); ++k) amps.push_back(complex_to_json(psi.amplitude(k)));
    return json{{"dim", psi.dim()}, {"amplitudes", std::move(amps)}};
}

VectorSet vector_set_from_json(const json& j) {
    const int dim = read_dim(j, "vector set");
    if (!j.contains("vectors") || !j["vectors"].is_array())
        throw ParseError("vector set: missing \"vectors\" array");
    std::vector<Vector> vectors;
    for (const json& row : j["vectors"]) {
        if (!row.is_array() || static_cast<int>(row.size()) != dim)
            throw ParseError("vector set: vector length does not match dim");
        Vector v(dim);
        for (int k = 0; k < dim; ++k) {
            // entries may be plain reals or [re, im] pairs
            if (row[k].is_number())
                v(k) = finite_number(row[k], "vector entry");
            else
                v(k) = complex_entry(row[k], "vector entry");
        }
        vectors.push_back(std::move(v));
    }
    std::vector<std::string> labels;
    if (j.contains("labels")) {
        if (!j["labels"].is_array()) throw ParseError("vector set: \"labels\" must be an array");
        for (const json& l : j["labels"]) {
            if (!l.is_string()) throw ParseError("vector set: labels must be strings");
            labels.push_back(l.get<std::string>());
        }
    }
    try {
        return VectorSet::make(dim, std::move(vectors), std::move(labels));
    } catch (const Error& e) {
        throw ParseError(std::string("vector set: ") + e.what());
    }
}

json vector_set_to_json(const VectorSet& set) {
    json vectors = json::array();
    for (const auto& v : set.vectors) {
        json row = json::array();
        for (int k = 0; k < set.dim; ++k) row.push_back(complex_to_json(v(k)));
        vectors.push_back(std::move(row));
    }
    return json{{"dim", set.dim}, {"vectors", std::move(vectors)}, {"labels", set.labels}};
}

LabelledObservables observables_from_json(const json& j) {
    const int dim = read_dim(j, "observables");
    if (!j.contains("observables") || !j["observables"].is_array() || j["observables"].empty())
        throw ParseError("observables: missing non-empty \"observables\" array");
    LabelledObservables out;
    int index = 0;
    for (const json& item : j["observables"]) {
        if (!item.is_object() || !item.contains("entries"))
            throw ParseError("observables: each item needs an \"entries\" grid");
        json wrapped{{"dim", dim}, {"entries", item["entries"]}};
        Matrix m = matrix_from_json(wrapped);
        try {
            out.observables.emplace_back(std::move(m));
        } catch (const Error& e) {
            throw ParseError("observables[" + std::to_string(index) + "]: " + e.what());
        }
        if (item.contains("label")) {
            if (!item["label"].is_string())
                throw ParseError("observables: labels must be strings");
            out.labels.push_back(item["label"].get<std::string>());
        } else {
            out.labels.push_back("O" + std::to_string(index));
        }
        ++index;
    }
    return out;
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file: " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw ParseError(path + ": " + e.what());
    }
}

Matrix load_matrix_file(const std::string& path) { return matrix_from_json(load_json_file(path)); }

StateVector load_state_file(const std::string& path) {
    return state_from_json(load_json_file(path));
}

VectorSet load_vector_set_file(const std::string& path) {
    return vector_set_from_json(load_json_file(path));
}

LabelledObservables load_observables_file(const std::string& path) {
    return observables_from_json(load_json_file(path));
}

}  // namespace qnogo
