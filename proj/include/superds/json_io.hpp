#pragma once

#include <json.hpp>

#include "superds/blocks.hpp"
#include "superds/dsmatrix.hpp"
#include "superds/qtype.hpp"
#include "superds/registry.hpp"

namespace superds {

using Json = nlohmann::json;

Json to_json(const Rational& q);  // "p/q" string
Rational rational_from_json(const Json& j);

Json to_json(const Weight& w);
Weight weight_from_json(const Json& j);

Json to_json(const Root& r);
Root root_from_json(const Json& j);

Json to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j, size_t n);

Json to_json(const MatrixSuperModule& m);
MatrixSuperModule module_from_json(const Json& j);

Json to_json(const BlockResult& r);
Json to_json(const SuperDim& d);
Json to_json(const CoreMultiset& c);
Json to_json(const Stratum& s);
Json to_json(const TamePrediction& p);

}  // namespace superds
