#include "ybalg/io.hpp"

#include "ybalg/ansatz.hpp"
#include "ybalg/error.hpp"

#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>

namespace ybalg {

Json scalar_to_json(const Scalar& s) {
    if (s.is_exact()) return s.str();
    return s.to_double();
}

Scalar scalar_from_json(const Json& j, Field field) {
    if (j.is_string()) return Scalar::parse(j.get<std::string>(), Field::rational).in(field);
    if (j.is_number_integer()) return Scalar(j.get<long long>()).in(field);
    if (j.is_number()) return Scalar(j.get<double>()).in(field);
    throw InvalidInput("expected a scalar, got " + j.dump());
}

namespace {

Field field_from(const Json& j) {
    return j.contains("field") ? parse_field(j.at("field").get<std::string>()) : Field::rational;
}

Field field_of(const std::vector<Scalar>& xs) {
    for (const auto& x : xs)
        if (!x.is_exact()) return Field::float64;
    return Field::rational;
}

Json cube(std::size_t n, const std::vector<Scalar>& flat) {
    Json out = Json::array();
    for (std::size_t i = 0; i < n; ++i) {
        Json plane = Json::array();
        for (std::size_t j = 0; j < n; ++j) {
            Json row = Json::array();
            for (std::size_t k = 0; k < n; ++k) row.push_back(scalar_to_json(flat[(i * n + j) * n + k]));
            plane.push_back(std::move(row));
        }
        out.push_back(std::move(plane));
    }
    return out;
}

std::vector<Scalar> flatten_cube(const Json& j, std::size_t n, Field f) {
    if (!j.is_array() || j.size() != n) throw InvalidInput("structure constants must be an n x n x n array");
    std::vector<Scalar> out;
    out.reserve(n * n * n);
    for (const auto& plane : j) {
        if (!plane.is_array() || plane.size() != n) throw InvalidInput("structure constants must be n x n x n");
        for (const auto& row : plane) {
            if (!row.is_array() || row.size() != n) throw InvalidInput("structure constants must be n x n x n");
            for (const auto& x : row) out.push_back(scalar_from_json(x, f));
        }
    }
    return out;
}

Vector read_vector(const Json& j, std::size_t n, Field f) {
    if (!j.is_array() || j.size() != n) throw InvalidInput("vector must have length dim");
    Vector out;
    for (const auto& x : j) out.push_back(scalar_from_json(x, f));
    return out;
}

Json write_vector(const Vector& v) {
    Json out = Json::array();
    for (const auto& x : v) out.push_back(scalar_to_json(x));
    return out;
}

std::size_t read_dim(const Json& j) {
    const auto n = j.at("dim").get<long long>();
    if (n < 1) throw InvalidInput("dim must be positive");
    return static_cast<std::size_t>(n);
}

std::vector<std::string> read_labels(const Json& j) {
    if (!j.contains("labels")) return {};
    return j.at("labels").get<std::vector<std::string>>();
}

}  // namespace

Json to_json(const Algebra& a) {
    Json j;
    j["kind"] = "algebra";
    j["dim"] = a.dim();
    j["structconst"] = cube(a.dim(), a.structconst());
    j["unit"] = write_vector(a.unit());
    j["labels"] = a.labels();
    Vector all = a.structconst();
    all.insert(all.end(), a.unit().begin(), a.unit().end());
    j["field"] = to_string(field_of(all));
    return j;
}

Json to_json(const Coalgebra& c) {
    Json j;
    j["kind"] = "coalgebra";
    j["dim"] = c.dim();
    j["comult"] = cube(c.dim(), c.comult());
    j["counit"] = write_vector(c.counit());
    j["labels"] = c.labels();
    Vector all = c.comult();
    all.insert(all.end(), c.counit().begin(), c.counit().end());
    j["field"] = to_string(field_of(all));
    return j;
}

Algebra algebra_from_json(const Json& j) {
    try {
        if (j.contains("kind") && j.at("kind") != "algebra") throw InvalidInput("not an algebra");
        const std::size_t n = read_dim(j);
        const Field f = field_from(j);
        return Algebra(n, flatten_cube(j.at("structconst"), n, f), read_vector(j.at("unit"), n, f), read_labels(j));
    } catch (const Json::exception& e) {
        throw InvalidInput(std::string("bad algebra json: ") + e.what());
    }
}

Coalgebra coalgebra_from_json(const Json& j) {
    try {
        if (j.contains("kind") && j.at("kind") != "coalgebra") throw InvalidInput("not a coalgebra");
        const std::size_t n = read_dim(j);
        const Field f = field_from(j);
        return Coalgebra(n, flatten_cube(j.at("comult"), n, f), read_vector(j.at("counit"), n, f), read_labels(j));
    } catch (const Json::exception& e) {
        throw InvalidInput(std::string("bad coalgebra json: ") + e.what());
    }
}

Field field_of(const Matrix& m) {
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t k = 0; k < m.cols(); ++k)
            if (!m(i, k).is_exact()) return Field::float64;
    return Field::rational;
}

Json to_json(const LabelledMatrix& m) {
    Json j;
    j["n"] = m.n;
    j["basis"] = m.basis;
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.entries.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t k = 0; k < m.entries.cols(); ++k) row.push_back(scalar_to_json(m.entries(i, k)));
        rows.push_back(std::move(row));
    }
    j["entries"] = std::move(rows);
    j["field"] = to_string(field_of(m.entries));
    return j;
}

LabelledMatrix matrix_from_json(const Json& j) {
    try {
        LabelledMatrix out;
        out.n = j.at("n").get<std::size_t>();
        if (j.contains("basis")) out.basis = j.at("basis").get<std::vector<std::string>>();
        const Field f = field_from(j);
        const Json& rows = j.at("entries");
        const std::size_t r = rows.size();
        const std::size_t c = r ? rows[0].size() : 0;
        out.entries = Matrix(r, c);
        for (std::size_t i = 0; i < r; ++i) {
            if (rows[i].size() != c) throw InvalidInput("ragged matrix rows");
            for (std::size_t k = 0; k < c; ++k) out.entries(i, k) = scalar_from_json(rows[i][k], f);
        }
        if (!out.basis.empty() && out.basis.size() != r) throw InvalidInput("basis length does not match matrix");
        return out;
    } catch (const Json::exception& e) {
        throw InvalidInput(std::string("bad matrix json: ") + e.what());
    }
}

LabelledMatrix labelled(const Op2& op, const std::vector<std::string>& labels) {
    return {op.n(), tensor_labels(labels), op.mat()};
}

void write_csv(std::ostream& os, const Matrix& m) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t k = 0; k < m.cols(); ++k) {
            std::string cell = m(i, k).str();
            // Keep integral floats distinguishable from exact integers.
            if (!m(i, k).is_exact() && cell.find_first_of(".eEni") == std::string::npos) cell += ".0";
            os << (k ? "," : "") << cell;
        }
        os << '\n';
    }
}

Matrix read_csv(std::istream& is) {
    std::vector<std::vector<Scalar>> rows;
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::vector<Scalar> row;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) {
            // Exact unless the cell looks like a float written by str().
            const bool is_float = cell.find_first_of(".eEni") != std::string::npos;
            row.push_back(Scalar::parse(cell, is_float ? Field::float64 : Field::rational));
        }
        if (!rows.empty() && row.size() != rows.front().size()) throw InvalidInput("ragged csv");
        rows.push_back(std::move(row));
    }
    Matrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t k = 0; k < rows[i].size(); ++k) m(i, k) = rows[i][k];
    return m;
}

std::string latex_scalar(const Scalar& s) {
    if (!s.is_exact()) return s.str();
    const Rational& r = s.rational();
    if (r.get_den() == 1) return r.get_num().get_str();
    std::string out = r < 0 ? "-" : "";
    Rational a = abs(r);
    return out + "\\frac{" + a.get_num().get_str() + "}{" + a.get_den().get_str() + "}";
}

std::string to_latex(const Matrix& m) {
    std::ostringstream os;
    os << "\\begin{pmatrix}\n";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t k = 0; k < m.cols(); ++k) os << (k ? " & " : "") << latex_scalar(m(i, k));
        os << (i + 1 < m.rows() ? " \\\\\n" : "\n");
    }
    os << "\\end{pmatrix}\n";
    return os.str();
}

}  // namespace ybalg
