#pragma once

// Text reports behind the command-line driver. Every report is a pure
// function of its inputs, so two runs print the same bytes.

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "bgt/modelfile.hpp"

namespace bgt {

/// Bad parameters or model data; the driver exits with status 2.
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ReportOutput {
    std::string text;
    int exit_code = 0;  // 0, or 1 when a verification or cross-check failed
};

/// Splits "k=v,k=v". Every name in `required` must appear exactly once and
/// no other name may appear.
std::map<std::string, std::string> parse_params(const std::string& text, const std::vector<std::string>& required);

/// A vector parameter: scalar literals separated by ':'.
Vec parse_coordinates(const std::string& text, std::size_t dim, int modulus);

const std::vector<std::string>& anyonic_param_names();
const std::vector<std::string>& composite_param_names();

/// The anyonic line bundle at the given field A = (a1, a2, b1, b2), gauge
/// transformation (c1, c2) and section (s0, s1, s2).
ReportOutput anyonic_report(const std::map<std::string, std::string>& params);

/// The composite base N (x) k[theta]/theta^3. One-form parameters A1, A2 and
/// the components a1, a2, b1, b2 are coordinates on N (x) N; c1, c2, s0, s1,
/// s2 and the flat-family inputs a, b are coordinates on N.
ReportOutput composite_report(const Algebra& n, const std::map<std::string, std::string>& params);

enum class Suite { Algebra, Hopf, Comodule, Principal, Connection, All };

/// Throws InputError on an unknown name.
Suite parse_suite(const std::string& name);

/// Runs the named checks over every matching structure in the model. A
/// thrown check counts as a failure carrying the exception text.
ReportOutput verify_model(const ModelFile& m, Suite suite);

/// Checks every identity in a tangle file. Parse and type errors throw.
ReportOutput check_tangle_file(const std::string& text, const tangle::Env& env);

}  // namespace bgt
