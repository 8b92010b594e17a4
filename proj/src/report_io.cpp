#include "genocchi/report_io.hpp"

#include <sstream>
#include <stdexcept>

namespace genocchi {

using nlohmann::json;

json poly_to_json(const BivarPoly& p) {
    json out = json::array();
    for (const auto& term : p.terms()) {
        out.push_back({{"degx", term.degx},
                       {"degy", term.degy},
                       {"coeff", term.coeff.str()}});
    }
    return out;
}

BivarPoly poly_from_json(const json& j) {
    if (!j.is_array()) {
        throw std::invalid_argument("polynomial JSON must be an array of records");
    }
    BivarPoly out;
    for (const auto& rec : j) {
        out += BivarPoly::monomial(rec.at("degx").get<unsigned>(),
                                   rec.at("degy").get<unsigned>(),
                                   Rational::parse(rec.at("coeff").get<std::string>()));
    }
    return out;
}

std::string poly_terms_token(const BivarPoly& p) {
    std::ostringstream out;
    bool first = true;
    for (const auto& term : p.terms()) {
        if (!first) out << ';';
        first = false;
        out << term.degx << ':' << term.degy << ':' << term.coeff.str();
    }
    return out.str();
}

json report_to_json(const IdentityReport& r) {
    json grid = json::array();
    for (const auto& t : r.grid) {
        grid.push_back({t[0], t[1], t[2], t[3]});
    }
    json failures = json::array();
    for (const auto& f : r.failures) {
        failures.push_back({{"params", {f.params[0], f.params[1], f.params[2], f.params[3]}},
                            {"lhs", poly_to_json(f.lhs)},
                            {"rhs", poly_to_json(f.rhs)}});
    }
    return json{{"identity", identity_name(r.identity)},
                {"grid", grid},
                {"status", status_name(r.status)},
                {"failures", failures},
                {"elapsed_ms", r.elapsed_ms},
                {"notes", r.notes}};
}

IdentityReport report_from_json(const json& j) {
    IdentityReport r;
    r.identity = identity_from_name(j.at("identity").get<std::string>());
    for (const auto& t : j.at("grid")) {
        r.grid.push_back({t.at(0).get<unsigned>(), t.at(1).get<unsigned>(),
                          t.at(2).get<unsigned>(), t.at(3).get<unsigned>()});
    }
    const std::string status = j.at("status").get<std::string>();
    if (status == "PASS") {
        r.status = CheckStatus::Pass;
    } else if (status == "FAIL") {
        r.status = CheckStatus::Fail;
    } else if (status == "OBSERVATIONAL") {
        r.status = CheckStatus::Observational;
    } else {
        throw std::invalid_argument("unknown status: " + status);
    }
    for (const auto& f : j.at("failures")) {
        IdentityFailure fail;
        const auto& params = f.at("params");
        for (std::size_t i = 0; i < 4; ++i) fail.params[i] = params.at(i).get<unsigned>();
        fail.lhs = poly_from_json(f.at("lhs"));
        fail.rhs = poly_from_json(f.at("rhs"));
        r.failures.push_back(std::move(fail));
    }
    r.elapsed_ms = j.at("elapsed_ms").get<std::int64_t>();
    if (j.contains("notes")) {
        r.notes = j.at("notes").get<std::vector<std::string>>();
    }
    return r;
}

json reports_to_json(const std::vector<IdentityReport>& reports) {
    json out = json::array();
    for (const auto& r : reports) out.push_back(report_to_json(r));
    return out;
}

std::string reports_to_csv(const std::vector<IdentityReport>& reports) {
    std::ostringstream out;
    out << "identity,status,failures,elapsed_ms\n";
    for (const auto& r : reports) {
        out << identity_name(r.identity) << ',' << status_name(r.status) << ','
            << r.failures.size() << ',' << r.elapsed_ms << '\n';
    }
    return out.str();
}

json table_to_json(const std::vector<BivarPoly>& rows, bool numbers) {
    json out = json::array();
    for (std::size_t n = 0; n < rows.size(); ++n) {
        if (numbers) {
            out.push_back({{"n", n}, {"value", rows[n].constant_value().str()}});
        } else {
            out.push_back({{"n", n}, {"terms", poly_to_json(rows[n])}});
        }
    }
    return out;
}

std::string table_to_csv(const std::vector<BivarPoly>& rows, bool numbers) {
    std::ostringstream out;
    out << (numbers ? "n,value\n" : "n,terms\n");
    for (std::size_t n = 0; n < rows.size(); ++n) {
        if (numbers) {
            out << n << ',' << rows[n].constant_value().str() << '\n';
        } else {
            out << n << ',' << poly_terms_token(rows[n]) << '\n';
        }
    }
    return out.str();
}

}  // namespace genocchi
