// bgt: verification suites, worked-model reports and tangle identity checks.
//
// Exit status: 0 success, 1 a check failed, 2 bad input. The report and any
// input error go to stdout (or --out); stderr carries usage errors only.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "bgt/reports.hpp"
#include "bundled_model.hpp"

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw bgt::InputError("cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

const bgt::Algebra& coefficient_algebra(const bgt::ModelFile& m) {
    if (m.algebras.count("N")) return m.algebra("N");
    if (m.algebra_order.size() == 1) return m.algebra(m.algebra_order.front());
    throw bgt::InputError("the model must define an algebra named N");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Braided group gauge theory over Z_n-graded spaces"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string model_path, params, suite_name = "all", out_path, file;
    app.add_option("--out", out_path, "Write the report to FILE instead of stdout");

    auto* verify = app.add_subcommand("verify", "Check the structures of a model file");
    verify->add_option("file", file, "Model file");
    verify->add_option("--model", model_path, "Model file (alternative to the positional argument)");
    verify->add_option("--suite", suite_name, "algebra, hopf, comodule, principal, connection or all");

    auto* report = app.add_subcommand("report", "Reports on the worked models");
    report->require_subcommand(1);
    report->fallthrough();
    auto* anyonic = report->add_subcommand("anyonic", "The anyonic line bundle");
    anyonic->add_option("--params", params, "a1,a2,b1,b2,c1,c2,s0,s1,s2 as name=value")->required();
    auto* composite = report->add_subcommand("composite", "The composite base N (x) k[theta]/theta^3");
    composite->add_option("--model", model_path, "Model file defining N")->required();
    composite->add_option("--params", params,
                          "A1,A2,a1,a2,b1,b2 on N (x) N and c1,c2,s0,s1,s2,a,b on N, coordinates joined by ':'")
        ->required();

    auto* tangle = app.add_subcommand("tangle", "Check the identities of a tangle file");
    tangle->add_option("file", file, "Identity file")->required();
    tangle->add_option("--model,--env", model_path, "Model file providing objects and morphisms");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    bgt::ReportOutput result;
    try {
        if (*verify) {
            const std::string path = !file.empty() ? file : model_path;
            if (path.empty()) throw bgt::InputError("verify needs a model file");
            const bgt::Suite suite = bgt::parse_suite(suite_name);
            result = bgt::verify_model(bgt::load_model(path), suite);
        } else if (*anyonic) {
            result = bgt::anyonic_report(bgt::parse_params(params, bgt::anyonic_param_names()));
        } else if (*composite) {
            const bgt::ModelFile m = bgt::load_model(model_path);
            result = bgt::composite_report(coefficient_algebra(m), bgt::parse_params(params, bgt::composite_param_names()));
        } else if (*tangle) {
            const bgt::ModelFile m = model_path.empty() ? bgt::parse_model(bundled_anyonic_model) : bgt::load_model(model_path);
            result = bgt::check_tangle_file(read_file(file), bgt::tangle_env(m));
        }
    } catch (const bgt::ModelError& e) {
        result = {std::string("error: ") + e.what() + "\n", 2};
    } catch (const bgt::InputError& e) {
        result = {std::string("error: ") + e.what() + "\n", 2};
    } catch (const bgt::tangle::ParseError& e) {
        result = {std::string("error: ") + e.what() + "\n", 2};
    } catch (const bgt::tangle::TypeError& e) {
        result = {std::string("error: ") + e.what() + "\n", 2};
    } catch (const std::exception& e) {
        result = {std::string("check failed: ") + e.what() + "\n", 1};
    }

    if (out_path.empty()) {
        std::cout << result.text;
    } else {
        std::ofstream out(out_path);
        if (!out) {
            std::cerr << "cannot write '" << out_path << "'\n";
            return 2;
        }
        out << result.text;
    }
    return result.exit_code;
}
