#include <exception>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "genocchi/families.hpp"
#include "genocchi/identities.hpp"
#include "genocchi/report_io.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<std::string> split_list(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream stream(text);
    std::string item;
    while (std::getline(stream, item, ',')) {
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

void write_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream file(out_path, std::ios::binary);
    if (!file) throw UsageError("cannot open output file: " + out_path);
    file << text;
    if (!file.good()) throw UsageError("failed writing output file: " + out_path);
}

genocchi::FamilySpec make_spec(const std::string& family_name, unsigned j,
                               bool j_given, unsigned a, bool a_given) {
    genocchi::FamilySpec spec;
    spec.family = genocchi::family_from_name(family_name);
    if (genocchi::family_has_j(spec.family)) {
        if (!j_given) throw UsageError("--j is required for " + family_name);
        spec.j = j;
    } else if (j_given) {
        throw UsageError("--j is not accepted for " + family_name);
    }
    if (genocchi::family_has_a(spec.family)) {
        spec.a = a_given ? a : 1;
    } else if (a_given) {
        throw UsageError("--a is not accepted for " + family_name);
    }
    spec.validate();
    return spec;
}

int run(int argc, char** argv) {
    CLI::App app{"Exact Genocchi / Gould-Hopper polynomial families and identity verification"};
    app.require_subcommand(1);

    // table
    auto* table = app.add_subcommand("table", "Emit values for n = 0..n-max");
    std::string t_family, t_format = "csv", t_out;
    unsigned t_j = 0, t_a = 1, t_n_max = 0;
    bool t_numbers = false;
    table->add_option("--family", t_family)->required();
    auto* t_j_opt = table->add_option("--j", t_j);
    auto* t_a_opt = table->add_option("--a", t_a);
    table->add_option("--n-max", t_n_max)->required();
    table->add_flag("--numbers", t_numbers);
    table->add_option("--format", t_format)->check(CLI::IsMember({"json", "csv"}));
    table->add_option("--out", t_out);

    // eval
    auto* eval = app.add_subcommand("eval", "Evaluate one family member at a rational point");
    std::string e_family, e_x = "0", e_y = "0", e_format = "csv", e_out;
    unsigned e_j = 0, e_a = 1, e_n = 0;
    eval->add_option("--family", e_family)->required();
    auto* e_j_opt = eval->add_option("--j", e_j);
    auto* e_a_opt = eval->add_option("--a", e_a);
    eval->add_option("--n", e_n)->required();
    eval->add_option("--x", e_x);
    eval->add_option("--y", e_y);
    eval->add_option("--format", e_format)->check(CLI::IsMember({"json", "csv"}));
    eval->add_option("--out", e_out);

    // verify
    auto* verify = app.add_subcommand("verify", "Run the identity verification suite");
    std::string v_identity = "all", v_j_set = "2,3", v_format = "json", v_out;
    unsigned v_n_max = 24, v_a_max = 3, v_b_max = 3, v_jobs = 1;
    verify->add_option("--identity", v_identity);
    verify->add_option("--n-max", v_n_max);
    verify->add_option("--a-max", v_a_max);
    verify->add_option("--b-max", v_b_max);
    verify->add_option("--j-set", v_j_set);
    verify->add_option("--jobs", v_jobs);
    verify->add_option("--format", v_format)->check(CLI::IsMember({"json", "csv"}));
    verify->add_option("--out", v_out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        // CLI11's own exit codes are nonstandard; keep 0 for --help and map
        // every parse failure to the usage exit code.
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    if (table->parsed()) {
        genocchi::FamilySpec spec = make_spec(t_family, t_j, t_j_opt->count() > 0,
                                              t_a, t_a_opt->count() > 0);
        if (t_numbers && !genocchi::family_has_numbers(spec.family)) {
            throw UsageError("--numbers is not accepted for " + t_family);
        }
        auto rows = genocchi::family_table(spec, t_n_max, t_numbers);
        std::string text = t_format == "json"
                               ? genocchi::table_to_json(rows, t_numbers).dump(2) + "\n"
                               : genocchi::table_to_csv(rows, t_numbers);
        write_output(text, t_out);
        return kExitOk;
    }

    if (eval->parsed()) {
        genocchi::FamilySpec spec = make_spec(e_family, e_j, e_j_opt->count() > 0,
                                              e_a, e_a_opt->count() > 0);
        genocchi::Rational x_val = genocchi::Rational::parse(e_x);
        genocchi::Rational y_val = genocchi::Rational::parse(e_y);
        genocchi::FamilyValue value = genocchi::family_value(spec, e_n, false);
        genocchi::Rational result = genocchi::evaluate(value, x_val, y_val);
        std::string text =
            e_format == "json"
                ? nlohmann::json{{"n", e_n}, {"value", result.str()}}.dump(2) + "\n"
                : result.str() + "\n";
        write_output(text, e_out);
        return kExitOk;
    }

    // verify
    genocchi::VerifierConfig cfg;
    cfg.n_max = v_n_max;
    cfg.a_max = v_a_max;
    cfg.b_max = v_b_max;
    cfg.jobs = v_jobs;
    cfg.j_set.clear();
    for (const std::string& item : split_list(v_j_set)) {
        unsigned j = 0;
        try {
            j = static_cast<unsigned>(std::stoul(item));
        } catch (const std::exception&) {
            throw UsageError("bad --j-set entry: " + item);
        }
        if (j < 2 || j > 4) throw UsageError("--j-set entries must be in {2,3,4}");
        cfg.j_set.push_back(j);
    }
    if (cfg.j_set.empty()) throw UsageError("--j-set must not be empty");
    if (v_identity != "all") {
        for (const std::string& name : split_list(v_identity)) {
            cfg.selection.push_back(genocchi::identity_from_name(name));
        }
        if (cfg.selection.empty()) throw UsageError("--identity must not be empty");
    }
    auto reports = genocchi::run_all(cfg);
    std::string text = v_format == "csv"
                           ? genocchi::reports_to_csv(reports)
                           : genocchi::reports_to_json(reports).dump(2) + "\n";
    write_output(text, v_out);
    return genocchi::all_passed(reports) ? kExitOk : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
