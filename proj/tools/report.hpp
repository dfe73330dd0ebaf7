#pragma once

// JSON layout of reports: complex numbers as [re, im], exact scalars as
// strings in their textual form, matrices row-major.

#include <string>

#include <json.hpp>

#include "cubicdet/lineconfig.hpp"
#include "cubicdet/pencil.hpp"

namespace cubicdet::report {

using json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "1.0";
inline constexpr int kSchemaMajor = 1;

class SchemaError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

template <FieldType K>
json scalar_to_json(const K& x) {
    if constexpr (K::exact) {
        return x.str();
    } else {
        return json::array({x.value().real(), x.value().imag()});
    }
}

/// Strings are parsed in the field's textual form; numbers and [re, im]
/// pairs are accepted for ComplexFloat.
template <FieldType K>
K scalar_from_json(const json& j) {
    if constexpr (K::exact) {
        if (j.is_string()) return K::parse(j.get<std::string>());
        if (j.is_number_integer()) return K(j.get<long>());
        throw SchemaError("exact scalar must be a string or an integer");
    } else {
        if (j.is_number()) return K(j.get<double>(), 0.0);
        if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
            return K(j[0].get<double>(), j[1].get<double>());
        if (j.is_string()) return K::parse(j.get<std::string>());
        throw SchemaError("complex scalar must be a number, [re, im] or a string");
    }
}

template <FieldType K>
json vec_to_json(const Vec<K>& v) {
    json out = json::array();
    for (const auto& x : v) out.push_back(scalar_to_json(x));
    return out;
}

template <FieldType K>
Vec<K> vec_from_json(const json& j, std::size_t size) {
    if (!j.is_array() || j.size() != size) throw SchemaError("expected an array of " + std::to_string(size) + " scalars");
    Vec<K> out;
    for (const auto& x : j) out.push_back(scalar_from_json<K>(x));
    return out;
}

template <FieldType K>
json matrix_to_json(const Matrix<K>& m) {
    json out = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(vec_to_json(m.row(i)));
    return out;
}

template <FieldType K>
Matrix<K> matrix_from_json(const json& j, std::size_t rows, std::size_t cols) {
    if (!j.is_array() || j.size() != rows) throw SchemaError("expected " + std::to_string(rows) + " matrix rows");
    std::vector<Vec<K>> r;
    for (const auto& row : j) r.push_back(vec_from_json<K>(row, cols));
    return Matrix<K>::from_rows(r);
}

/// Coefficient matrices of z0..z3.
template <FieldType K>
json pencil_to_json(const LinearPencil<K>& m) {
    json out = json::array();
    for (std::size_t j = 0; j < 4; ++j) out.push_back(matrix_to_json(m.coeff(j)));
    return out;
}

template <FieldType K>
LinearPencil<K> pencil_from_json(const json& j) {
    if (!j.is_array() || j.size() != 4) throw SchemaError("a pencil has four coefficient matrices");
    std::array<Matrix<K>, 4> c;
    for (std::size_t k = 0; k < 4; ++k) c[k] = matrix_from_json<K>(j[k], 3, 3);
    return LinearPencil<K>(c);
}

template <FieldType K>
json form_to_json(const Form<K>& f) {
    return vec_to_json(f.coeffs());
}

/// Cubic in z0..z3 from its 20 coefficients in graded lexicographic order.
template <FieldType K>
Form<K> cubic_from_json(const json& j) {
    return Form<K>(4, 3, vec_from_json<K>(j, 20));
}

template <FieldType K>
json line_to_json(const LineH<K>& l) {
    return matrix_to_json(l.forms());
}

template <FieldType K>
LineH<K> line_from_json(const json& j) {
    return LineH<K>::from_form_matrix(matrix_from_json<K>(j, 2, 4));
}

json labels(const std::vector<std::size_t>& indices);

template <std::size_t N>
json labels(const std::array<std::size_t, N>& indices) {
    return labels(std::vector<std::size_t>(indices.begin(), indices.end()));
}

/// Envelope with the schema version and command name.
json make_report(const std::string& command);

std::string dump(const json& report);

/// Parses a report and checks its schema version; SchemaError on an unknown
/// major version or a missing version.
json parse_report(const std::string& text);

}  // namespace cubicdet::report
