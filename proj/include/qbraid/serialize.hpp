#pragma once

#include <json.hpp>

#include "qbraid/braidgen.hpp"
#include "qbraid/links.hpp"
#include "qbraid/ncspace.hpp"

namespace qbraid {

using Json = nlohmann::ordered_json;

// numerator/denominator as integers when they fit a long, decimal strings otherwise
Json to_json(const Rational& r);
// {"<exponent of s>": [num, den], ...}
Json to_json(const LaurentPoly& p);
// {"a": ..., "b": ...}
Json to_json(const LambdaExt& x);
// [re, im]
Json to_json(Complex z);

LaurentPoly laurent_from_json(const Json& j);
Complex complex_from_json(const Json& j);

// {"dim": n, "backend": ..., "entries": [[...]]}
Json matrix_json(const Matrix<LaurentPoly>& m);
Json matrix_json(const Matrix<LambdaExt>& m);
Json matrix_json(const Matrix<Complex>& m);
Matrix<Complex> complex_matrix_from_json(const Json& j);

Json to_json(const AlgebraSpec& spec);
Json to_json(const BraidWord& w);
Json to_json(const RelationTable& t);

} // namespace qbraid
