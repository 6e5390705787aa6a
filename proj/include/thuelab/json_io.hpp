#pragma once

#include "thuelab/forms.hpp"

#include <json.hpp>

namespace thuelab {

using Json = nlohmann::ordered_json;

/// Number when |v| <= 2^53, decimal string otherwise.
Json to_json(const Integer& v);
/// "r/q" or "r" string.
Json to_json(const Rational& v);
Json to_json(const BinaryForm& F);
Json to_json(const IntMatrix2& M);
/// [lo, hi] as decimal strings with `digits` significant digits, rounded outward.
Json to_json(const Interval& v, int digits = 20);

/// Accepts integer numbers and decimal strings.
Integer integer_from_json(const Json& j);
BinaryForm form_from_json(const Json& j);

}  // namespace thuelab
