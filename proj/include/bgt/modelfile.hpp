#pragma once

// Plain-text model files.
//
//   # comment
//   algebra M
//     modulus 3
//     basis 1:0 theta:1 theta2:2
//     unit 1
//     mul theta theta -> theta2
//   algebra B
//     ...
//   coalgebra B                       Hopf structure on the algebra B
//     comul xi -> xi.1 + 1.xi
//     comul xi2 -> xi2.1 + (1+q) xi.xi + 1.xi2
//     counit 1 -> 1
//     antipode xi -> -xi
//     antipode_inverse xi -> -xi      optional, computed when absent
//   algebra P = M * B                 braided tensor product algebra
//   coaction rho on P by B
//     send theta.xi -> theta.xi.1 + theta.1.xi
//   map phi : B -> P
//     send xi -> 1.xi
//
// Right-hand sides are linear combinations of basis names; tensor basis names
// join factors with '.', and coefficients precede names ("(1+q) xi.xi",
// "-xi", "1/2 theta"). A coefficient that is a sum must be parenthesised.
// Structure constants not given are zero, except that products with the unit
// follow from the unit line. Every line is checked for degree.

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "bgt/algebra.hpp"
#include "bgt/tangle.hpp"

namespace bgt {

struct ModelError : std::runtime_error {
    ModelError(int line, const std::string& what);
    int line;  // 0 when no line applies
};

struct NamedMap {
    tangle::Object domain;
    tangle::Object codomain;
    GradedMap map;
};

struct NamedCoaction {
    std::string algebra;
    std::string hopf;
    Coaction coaction;
};

struct ModelFile {
    int modulus = 0;
    std::vector<std::string> algebra_order;
    std::map<std::string, Algebra> algebras;
    std::vector<std::string> hopf_order;
    std::map<std::string, Hopf> hopfs;
    std::vector<std::string> coaction_order;
    std::map<std::string, NamedCoaction> coactions;
    std::vector<std::string> map_order;
    std::map<std::string, NamedMap> maps;

    const Algebra& algebra(const std::string& name) const;
    const Hopf& hopf(const std::string& name) const;
};

/// Throws ModelError with the offending line.
ModelFile parse_model(std::string_view text);
/// Throws ModelError (line 0) when the file cannot be read.
ModelFile load_model(const std::string& path);

/// A linear combination of basis names, e.g. "xi.1 + (1+q) xi.xi". Throws
/// std::invalid_argument on unknown names or malformed coefficients.
Vec parse_combination(std::string_view text, const GradedSpace& space);

/// A scalar literal, optionally in parentheses.
Scalar parse_literal(std::string_view text, int modulus);

/// Objects for every algebra and morphisms mul_A, eta_A, comul_H, eps_H,
/// S_H, Sinv_H, one per coaction and one per map. When the file has exactly
/// one coalgebra H the short names mul, eta, comul, eps, S and Sinv refer to
/// it, unless a map of the same name exists.
tangle::Env tangle_env(const ModelFile& m);

}  // namespace bgt
