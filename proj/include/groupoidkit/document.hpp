#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "groupoidkit/abelian.hpp"
#include "groupoidkit/algebra.hpp"
#include "groupoidkit/groupoid.hpp"
#include "groupoidkit/quotients.hpp"

namespace gk {

using json = nlohmann::json;

inline constexpr const char* kSchemaVersion = "groupoidkit/groupoid-v1";

/// Input that cannot be decoded: bad JSON, wrong schema, unknown fields or
/// labels. Distinct from a decoded groupoid that violates the axioms.
class DocumentError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// GroupoidDocument:
///   { "schema_version": "groupoidkit/groupoid-v1",
///     "elements": [label, ...], "units": [label, ...],
///     "src": {label: label}, "rng": {label: label}, "inv": {label: label},
///     "comp": [[a, b, a*b], ...] }
/// Field order is irrelevant; unknown fields are rejected.
json encode(const FiniteGroupoid& g);
FiniteGroupoid decode(const json& doc);
FiniteGroupoid parse_document(const std::string& text);
FiniteGroupoid read_document(const std::string& path);

/// Label list -> sorted arrow set; throws DocumentError for unknown labels.
ArrowSet arrows_from_labels(const FiniteGroupoid& g, const std::vector<std::string>& labels);
json labels_of(const FiniteGroupoid& g, const ArrowSet& s);

json encode_scalar(const GaussianRational& z);  // [re_num, re_den, im_num, im_den]
GaussianRational decode_scalar(const json& j);
/// Sparse {label: scalar} map; zero coefficients are omitted.
json encode(const AlgebraElement& f);
AlgebraElement decode_element(const HostPtr& host, const json& j);
json encode(const Matrix& m);

json encode(const QuotientResult& q, const FiniteGroupoid& host);
json encode(const DualBundle& d, const FiniteGroupoid& host);
json encode(const CharacterFunctional& phi);
json encode(const GelfandMatrix& m, const FiniteGroupoid& host);
json encode(const ValidationReport& r, const FiniteGroupoid& g);

}  // namespace gk
