#pragma once

// Serialization. Exact scalars are written as "num/den" strings (plain
// "num" for integers), floats as JSON numbers.
//
//   algebra:   {"kind":"algebra","dim":n,"structconst":[[[..]]],"unit":[..],"field":..}
//   coalgebra: {"kind":"coalgebra","dim":n,"comult":[[[..]]],"counit":[..],"field":..}
//   matrix:    {"n":n,"basis":[..],"entries":[[..]],"field":..}

#include "ybalg/algebra.hpp"
#include "ybalg/matrix.hpp"
#include "ybalg/tensorop.hpp"

#include <json.hpp>

#include <iosfwd>
#include <string>
#include <vector>

namespace ybalg {

using Json = nlohmann::ordered_json;

Json scalar_to_json(const Scalar& s);
/// Strings parse as exact rationals (or decimals), numbers as floats unless
/// integral. The result is converted to `field`.
Scalar scalar_from_json(const Json& j, Field field = Field::rational);

Json to_json(const Algebra& a);
Json to_json(const Coalgebra& c);
Algebra algebra_from_json(const Json& j);
Coalgebra coalgebra_from_json(const Json& j);

/// Field of a matrix: float64 if any entry is a float.
Field field_of(const Matrix& m);

struct LabelledMatrix {
    std::size_t n = 0;  // dimension of V; the matrix is n^2 x n^2 (or n x n for plain matrices)
    std::vector<std::string> basis;
    Matrix entries;
};

Json to_json(const LabelledMatrix& m);
LabelledMatrix matrix_from_json(const Json& j);

/// Basis labels e.g. "1⊗x" from the algebra labels.
LabelledMatrix labelled(const Op2& op, const std::vector<std::string>& labels);

/// One row per line, comma separated, entries as in JSON strings.
void write_csv(std::ostream& os, const Matrix& m);
Matrix read_csv(std::istream& is);

/// \begin{pmatrix} ... \end{pmatrix} with \frac for non-integers.
std::string to_latex(const Matrix& m);
std::string latex_scalar(const Scalar& s);

}  // namespace ybalg
