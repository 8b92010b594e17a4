#ifndef GENOCCHI_REPORT_IO_HPP
#define GENOCCHI_REPORT_IO_HPP

#include <string>
#include <vector>

#include "json.hpp"

#include "genocchi/bivar_poly.hpp"
#include "genocchi/identities.hpp"

namespace genocchi {

// Record form: [{"degx": dx, "degy": dy, "coeff": "p/q"}, ...] in canonical
// term order (degx descending, then degy descending).
nlohmann::json poly_to_json(const BivarPoly& p);
BivarPoly poly_from_json(const nlohmann::json& j);

// Same term list as a CSV cell: "degx:degy:p/q;..." (empty for zero).
std::string poly_terms_token(const BivarPoly& p);

nlohmann::json report_to_json(const IdentityReport& r);
IdentityReport report_from_json(const nlohmann::json& j);

// Array of reports / one CSV row per report.
nlohmann::json reports_to_json(const std::vector<IdentityReport>& reports);
std::string reports_to_csv(const std::vector<IdentityReport>& reports);

// Table rendering shared by the CLI. Row n holds the family value at n.
nlohmann::json table_to_json(const std::vector<BivarPoly>& rows, bool numbers);
std::string table_to_csv(const std::vector<BivarPoly>& rows, bool numbers);

}  // namespace genocchi

#endif
