#pragma once

#include <json.hpp>

#include <string>

#include "qwhitney/identities.hpp"
#include "qwhitney/params.hpp"
#include "qwhitney/triangle.hpp"
#include "qwhitney/whitney_second.hpp"

namespace qwhitney {

// All emitters use ordered_json so output bytes are deterministic.
using Json = nlohmann::ordered_json;

/// {"-1":"1","2":"-3"} for q^-1 - 3q^2: exponent keys in ascending order,
/// coefficients as decimal strings (never JSON numbers, which would truncate
/// past 53 bits).
Json poly_to_json(const QLaurentPoly& p);
QLaurentPoly poly_from_json(const Json& j);

/// {"m": int, "alpha": {"preset": ..., "r"/"beta"/"values": ...}, "n": int}
Json params_to_json(const ParameterSet& p);
ParameterSet params_from_json(const Json& j, Mode mode);

/// {"kind":..., "params":..., "rows":[[entry,...],...]}; polynomial entries
/// use the poly object form, integer entries decimal strings.
Json triangle_to_json(const std::string& kind, const ParameterSet& p,
                      const Triangle<QLaurentPoly>& t);
Json triangle_to_json(const std::string& kind, const ParameterSet& p, const IntTriangle& t);
Triangle<QLaurentPoly> poly_triangle_from_json(const Json& j);
IntTriangle int_triangle_from_json(const Json& j);

/// CSV with header "n,k,value", one line per triangle entry, canonical
/// polynomial rendering.
std::string triangle_to_csv(const Triangle<QLaurentPoly>& t);
std::string triangle_to_csv(const IntTriangle& t);

/// LaTeX pmatrix in the shape of the n x n lower-triangular matrix displays.
std::string triangle_to_latex(const Triangle<QLaurentPoly>& t);
std::string triangle_to_latex(const IntTriangle& t);

/// {"kind":"ogf","k":...,"order":...,"coeffs":[poly,...]}
Json series_to_json(int k, const whitney_second::SeriesT& s);

/// {"check":..., "params":..., "dim":..., "ok":..., "first_failure":...|null}
Json check_report_to_json(const std::string& check, const ParameterSet& p, int dim,
                          const CheckResult& result);

}  // namespace qwhitney
