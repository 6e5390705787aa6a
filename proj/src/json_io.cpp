#include "thuelab/json_io.hpp"

#include "thuelab/arith.hpp"
#include "thuelab/error.hpp"

#include <mpfr.h>

namespace thuelab {

namespace {

const Integer& json_safe_limit() {
  static const Integer limit = Integer(1) << 53;
  return limit;
}

std::string directed(const Real& v, bool up, int digits) {
  char* buf = nullptr;
  if (up)
    mpfr_asprintf(&buf, "%.*RUe", digits - 1, v.raw());
  else
    mpfr_asprintf(&buf, "%.*RDe", digits - 1, v.raw());
  std::string out(buf);
  mpfr_free_str(buf);
  return out;
}

}  // namespace

Json to_json(const Integer& v) {
  if (abs(v) <= json_safe_limit()) return Json(v.get_si());
  return Json(to_string(v));
}

Json to_json(const Rational& v) { return Json(to_string(v)); }

Json to_json(const BinaryForm& F) {
  Json out = Json::array();
  for (const auto& c : F.coeffs()) out.push_back(to_json(c));
  return out;
}

Json to_json(const IntMatrix2& M) {
  return Json::array({Json::array({to_json(M.s()), to_json(M.u())}), Json::array({to_json(M.t()), to_json(M.v())})});
}

Json to_json(const Interval& v, int digits) {
  return Json::array({directed(v.lo(), false, digits), directed(v.hi(), true, digits)});
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return Integer(std::to_string(j.get<unsigned long long>()));
    return Integer(std::to_string(j.get<long long>()));
  }
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    Integer v;
    std::string body = s;
    if (!body.empty() && body[0] == '+') body = body.substr(1);
    if (body.empty() || v.set_str(body, 10) != 0) throw DomainError("not an integer: \"" + s + "\"");
    return v;
  }
  throw DomainError("expected an integer, got " + j.dump());
}

BinaryForm form_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw DomainError("a form is a non-empty JSON array of integers");
  std::vector<Integer> c;
  c.reserve(j.size());
  for (const auto& e : j) c.push_back(integer_from_json(e));
  return BinaryForm(std::move(c));
}

BinaryForm parse_form_json(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw DomainError(std::string("malformed JSON form: ") + e.what());
  }
  return form_from_json(j);
}

}  // namespace thuelab
