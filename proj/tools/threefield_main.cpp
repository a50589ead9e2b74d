// Command-line front end; talks to the library exclusively through the
// C API in threefield.h.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>

#include <CLI11.hpp>

#include "threefield.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitError = 2;

struct StringOut {
    char* ptr = nullptr;
    ~StringOut() { tf_string_free(ptr); }
};

struct SeriesOut {
    tf_series* ptr = nullptr;
    ~SeriesOut() { tf_series_free(ptr); }
};

int emit(const std::string& text, const std::string& output_path) {
    if (output_path.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << '\n';
        return kExitOk;
    }
    std::ofstream f(output_path);
    if (!f) {
        std::cerr << "error: cannot open " << output_path << " for writing\n";
        return kExitError;
    }
    f << text;
    if (!f) {
        std::cerr << "error: write to " << output_path << " failed\n";
        return kExitError;
    }
    return kExitOk;
}

int report_failure() {
    std::cerr << "error: " << tf_last_error() << "\n";
    return kExitError;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"threefield theta series: compute and cross-verify the five routes"};
    app.require_subcommand(1);

    std::string series = "rho", route = "eta", lhs = "eta", rhs = "k1";
    std::string format = "json", output_path, field = "all", quotient, convention = "triangular";
    std::int64_t terms = 100, level = 2304, n = 7;
    bool long_sturm = false;

    auto* compute = app.add_subcommand("compute", "compute one series by one route");
    compute->add_option("--series", series, "theta|rho|rhostar|sigma|sigmastar")->required();
    compute->add_option("--route", route, "k1|k2|k3|eta|partitions|bqf|hyper")->required();
    compute->add_option("--terms", terms, "number of terms (exponent bound)")->required();
    compute->add_option("--format", format, "json|csv")->check(CLI::IsMember({"json", "csv"}));
    compute->add_option("--output", output_path, "write to file instead of stdout");
    compute->add_option("--sigma-convention", convention,
                        "exponent convention for the hyper route: triangular|binomial");

    auto* verify = app.add_subcommand("verify", "compare two routes coefficient-wise");
    verify->add_option("--series", series, "theta|rho|rhostar|sigma|sigmastar");
    verify->add_option("--lhs", lhs, "left route");
    verify->add_option("--rhs", rhs, "right route");
    verify->add_option("--terms", terms, "comparison depth");
    verify->add_flag("--long-sturm", long_sturm,
                     "run the full 294912-term eta vs k1 check at the Theta scale");
    verify->add_option("--output", output_path, "write the report to a file");

    auto* tables = app.add_subcommand("tables", "dump the embedded ray-class tables");
    tables->add_option("--field", field, "k1|k2|k3|all");
    tables->add_option("--output", output_path, "write to file instead of stdout");

    auto* sturm = app.add_subcommand("sturm", "Sturm bound for a level");
    sturm->add_option("--level", level, "congruence subgroup level")->required();

    auto* eta_check = app.add_subcommand("eta-check", "eta quotient modularity conditions");
    eta_check->add_option("--quotient", quotient, "e.g. \"24:-3,48:8,96:-3\"")->required();
    eta_check->add_option("--level", level, "level whose divisors index the cusps")->required();

    auto* partitions = app.add_subcommand("partitions", "signed colored-partition counts");
    partitions->add_option("--n", n, "the integer to partition")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitError;
    }

    if (compute->parsed()) {
        if (terms < 0) {
            std::cerr << "error: terms must be >= 0\n";
            return kExitError;
        }
        SeriesOut s;
        tf_status st;
        if (series == "sigma" && route == "hyper" && convention != "triangular")
            st = tf_sigma_hypergeometric(terms, convention.c_str(), &s.ptr);
        else
            st = tf_series_compute(series.c_str(), route.c_str(), terms, &s.ptr);
        if (st != TF_OK) return report_failure();
        StringOut text;
        std::string name = series + ":" + route;
        st = format == "json" ? tf_series_to_json(s.ptr, name.c_str(), &text.ptr)
                              : tf_series_to_csv(s.ptr, series == "theta" ? 1 : 0, &text.ptr);
        if (st != TF_OK) return report_failure();
        return emit(text.ptr, output_path);
    }

    if (verify->parsed()) {
        int equal = 0;
        StringOut report;
        tf_status st;
        if (long_sturm) {
            std::int64_t depth = verify->count("--terms") ? terms : 294912;
            st = tf_sturm_scale_check(depth, &equal, &report.ptr);
        } else {
            st = tf_verify(series.c_str(), lhs.c_str(), rhs.c_str(), terms, &equal, &report.ptr);
        }
        if (st != TF_OK) return report_failure();
        int code = emit(report.ptr, output_path);
        if (code != kExitOk) return code;
        return equal ? kExitOk : kExitMismatch;
    }

    if (tables->parsed()) {
        StringOut text;
        tf_status st = tf_tables(field.c_str(), &text.ptr);
        if (st != TF_OK) return report_failure();
        return emit(text.ptr, output_path);
    }

    if (sturm->parsed()) {
        StringOut text;
        tf_status st = tf_sturm_bound(level, &text.ptr);
        if (st != TF_OK) return report_failure();
        return emit(text.ptr, output_path);
    }

    if (eta_check->parsed()) {
        StringOut text;
        tf_status st = tf_eta_check(quotient.c_str(), level, &text.ptr);
        if (st != TF_OK) return report_failure();
        return emit(text.ptr, output_path);
    }

    if (partitions->parsed()) {
        StringOut text;
        tf_status st = tf_partition_counts(n, &text.ptr);
        if (st != TF_OK) return report_failure();
        return emit(text.ptr, output_path);
    }

    return kExitError;
}
