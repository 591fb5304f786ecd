#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "twistlab/emit.hpp"
#include "twistlab/suites.hpp"

int main(int argc, char** argv) {
    CLI::App app{"exact verification engine for cochain-deformed sphere geometry"};
    app.require_subcommand(1);

    std::string suite;
    std::string verify_format = "text";
    auto* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("--suite", suite, "suite to run")
        ->required()
        ->check(CLI::IsMember(twistlab::suite_names()));
    verify->add_option("--format", verify_format, "report format")
        ->check(CLI::IsMember({"json", "text"}));

    std::string algebra = "octonion";
    std::string table_format = "text";
    auto* table = app.add_subcommand("table", "print a deformed multiplication table");
    table->add_option("--algebra", algebra, "which twisted group algebra")
        ->check(CLI::IsMember({"octonion", "quaternion", "complex"}));
    table->add_option("--format", table_format, "table format")
        ->check(CLI::IsMember({"json", "text"}));

    std::string out_path;
    auto* constants =
        app.add_subcommand("structure-constants", "emit the seven-sphere structure constants");
    constants->add_option("--out", out_path, "write the table to this file instead of stdout");

    int max_degree = 3;
    bool find_nonassoc = false;
    auto* podles = app.add_subcommand("podles", "check the derivation-twisted two-sphere");
    podles->add_option("--max-degree", max_degree, "total-degree bound for the associator scan")
        ->check(CLI::Range(3, 16));
    podles->add_flag("--find-nonassoc", find_nonassoc,
                     "search for a nonassociativity witness and print it");

    CLI11_PARSE(app, argc, argv);

    if (verify->parsed()) {
        auto report = twistlab::run_suite(suite);
        if (verify_format == "json")
            std::cout << twistlab::report_json(report).dump(2) << "\n";
        else
            std::cout << twistlab::report_text(report);
        return report.passed() ? 0 : 1;
    }

    if (table->parsed()) {
        std::cout << twistlab::mult_table(algebra, table_format);
        return 0;
    }

    if (constants->parsed()) {
        std::string doc = twistlab::structure_constants_document();
        if (out_path.empty()) {
            std::cout << doc;
        } else {
            std::ofstream out(out_path, std::ios::binary | std::ios::trunc);
            if (!out) {
                std::cerr << "cannot write " << out_path << "\n";
                return 1;
            }
            out << doc;
        }
        return 0;
    }

    twistlab::PodlesAlgebra A;
    twistlab::SeriesCochain Fc;
    if (find_nonassoc) {
        auto w = twistlab::associator_scan(A, Fc, max_degree);
        if (!w.has_value()) {
            nlohmann::json j;
            j["witness"] = nullptr;
            j["max_total_degree"] = max_degree;
            std::cout << j.dump(2) << "\n";
            return 1;
        }
        std::cout << twistlab::witness_json(A, *w).dump(2) << "\n";
        return 0;
    }
    auto report = twistlab::run_suite("podles");
    std::cout << twistlab::report_text(report);
    return report.passed() ? 0 : 1;
}
