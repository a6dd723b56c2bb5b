#ifndef MSYM_IO_HPP
#define MSYM_IO_HPP

#include <json.hpp>
#include <string>

#include "msym/charges.hpp"
#include "msym/complexes.hpp"
#include "msym/duality.hpp"
#include "msym/errors.hpp"
#include "msym/homotopy.hpp"
#include "msym/linalg.hpp"
#include "msym/multiform.hpp"

namespace msym {

/// Objects are std::map backed, so keys are always emitted sorted.
using Json = nlohmann::json;

Json rational_to_json(const Rational& q);
/// Accepts "n", "n/d" or a JSON integer. Throws ValidationError otherwise.
Rational rational_from_json(const Json& j);

Json shape_to_json(const Shape& s);
/// {"D": int, "signature": [int...]}
Shape shape_from_json(const Json& j);

Json domain_to_json(const CoefficientDomain& d);
CoefficientDomain domain_from_json(const Json& j, int D);

Json coefficient_to_json(const Coefficient& c, CoefficientKind kind);
Coefficient coefficient_from_json(const Json& j, const CoefficientDomain& d);

/// {"D", "signature", "coefficient_domain": {"kind", "degree_cap" | "freq_cap"},
///  "terms": [{"blocks": [[...], ...], "coeff": ...}]}
Json multiform_to_json(const MultiForm& t);
MultiForm multiform_from_json(const Json& j);

Json matrix_to_json(const DenseMatrix& m);
Json complex_to_json(const ComplexSpec& spec);
Json truncation_to_json(const Truncation& t);
Json cohomology_to_json(const CohomologyReport& r);
Json as_report_to_json(const ASReport& r);
Json homotopy_to_json(const HomotopyWitness& w);
Json duality_to_json(const DualityReport& r);
Json memory_to_json(const MemoryReport& r);
Json fracton_to_json(const FractonReport& r);

/// Typed field access; a missing key yields `fallback`, a wrong type a
/// ValidationError naming the key.
template <class T>
T field(const Json& j, const char* key, const T& fallback) {
  if (!j.is_object()) throw ValidationError("request must be a JSON object");
  const auto it = j.find(key);
  if (it == j.end() || it->is_null()) return fallback;
  try {
    return it->template get<T>();
  } catch (const nlohmann::json::exception&) {
    throw ValidationError(std::string("field '") + key + "' has the wrong type");
  }
}

template <class T>
T required(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ValidationError(std::string("missing field '") + key + "'");
  return field<T>(j, key, T{});
}

/// Parses text; malformed JSON becomes a ValidationError.
Json parse_json(const std::string& text);

/// Version string of the library.
const char* library_version();

}  // namespace msym

#endif  // MSYM_IO_HPP
