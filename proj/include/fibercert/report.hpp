#ifndef FIBERCERT_REPORT_HPP
#define FIBERCERT_REPORT_HPP

#include <string>

#include <nlohmann/json.hpp>

#include "fibercert/certify.hpp"

namespace fibercert {

inline constexpr const char* kReportSchema = "fibercert-report/1";
inline constexpr const char* kToolName = "fibercert";
inline constexpr const char* kToolVersion = "0.1.0";

using OrderedJson = nlohmann::ordered_json;

// {offset, coeffs[]} form; coefficients in ascending power order.
OrderedJson poly_to_json(const LaurentPoly& f);
LaurentPoly poly_from_json(const OrderedJson& j, Ring ring);

// {group, images[], div, delta0, delta1, delta2, route, ring, pivot}
OrderedJson alex_to_json(const AlexPolys& polys, const Hom& hom);

OrderedJson verdict_entry_to_json(const PropertyMVerdict& v);
OrderedJson report_to_json(const CertReport& report);

// Rebuilds a report from its JSON form (inverse of report_to_json up to
// the derived fields); used by the round-trip checks.
CertReport report_from_json(const OrderedJson& j);

std::string report_to_text(const CertReport& report);
std::string alex_to_text(const AlexPolys& polys, const Hom& hom);

std::string verdict_name(VerdictType t);
int verdict_exit_code(const CertReport& report); // 0 / 3 / 4, see cli docs

} // namespace fibercert

#endif
