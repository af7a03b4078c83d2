#pragma once

#include <json.hpp>

#include "noderel/constructor.hpp"
#include "noderel/polynomial.hpp"
#include "noderel/reliability.hpp"
#include "noderel/shape.hpp"

namespace noderel {

using Json = nlohmann::ordered_json;

// Coefficients are ascending decimal strings; rationals are "num/den" strings.

Json coeffs_to_json(const Polynomial& a);
Polynomial coeffs_from_json(const Json& j);

/// { "order": n, "connected": bool, "coeffs": ["0", "5", ...] }
Json to_json(const ReliabilityPolynomial& r);
ReliabilityPolynomial reliability_from_json(const Json& j);

Json to_json(const IsolatingInterval& i);
Json to_json(const ShapeReport& report);

/// Per-step records. Wall-clock times are included only on request so that
/// the default output is reproducible byte for byte.
Json to_json(const ConstructionTrace& trace, bool with_timings = false);

}  // namespace noderel
