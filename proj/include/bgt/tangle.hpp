#pragma once

// A one-line syntax for morphisms of the braided category of graded spaces.
//
//   expr := seq
//   seq  := ten ('.' ten)*          composition, the rightmost stage applies first
//   ten  := atom ('*' atom)*        tensor product, left factor first
//   atom := NAME | id[obj] | psi[obj,obj] | psinv[obj,obj] | '(' expr ')'
//   obj  := NAME ('*' NAME)*        the name I is the unit object
//
// Reading a diagram top to bottom corresponds to reading an expression right
// to left: "mul . (S * id[B]) . comul" is the antipode axiom's left side.
// psi[V,W] : V*W -> W*V is the braiding and psinv[V,W] : W*V -> V*W its inverse.

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "bgt/graded.hpp"

namespace bgt::tangle {

/// A tensor product of named objects; the empty list is the unit object.
using Object = std::vector<std::string>;

std::string format_object(const Object& o);

struct Expr {
    enum class Kind { Id, Gen, Psi, PsiInv, Tensor, Compose };

    Kind kind = Kind::Gen;
    std::string name;         // Gen
    Object left, right;       // Id uses left; Psi and PsiInv use both
    std::vector<Expr> parts;  // Tensor and Compose, in written order
    int line = 1;
    int column = 1;
};

/// Canonical text. parse(print(e)) reproduces e up to source positions.
std::string print(const Expr& e);
bool same_shape(const Expr& a, const Expr& b);

struct ParseError : std::runtime_error {
    ParseError(int line, int column, const std::string& what);
    int line;
    int column;
};

/// Parses one expression. `line` and `column` give the position of text[0]
/// for error messages.
Expr parse(std::string_view text, int line = 1, int column = 1);

struct Identity {
    Expr lhs;
    Expr rhs;
    int line = 0;
    std::string source;
};

/// Lines of the form "check: <expr> == <expr>"; '#' starts a comment and
/// blank lines are skipped.
std::vector<Identity> parse_identities(std::string_view text);

struct TypeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Morphism {
    Object domain;
    Object codomain;
    GradedMap map;
};

/// Named objects and named degree-preserving morphisms.
class Env {
public:
    explicit Env(int modulus) : modulus_(modulus) {}

    int modulus() const noexcept { return modulus_; }

    /// Throws std::invalid_argument on a duplicate name, on I, or on a modulus mismatch.
    void add_object(const std::string& name, GradedSpace space);
    /// Throws std::invalid_argument on a duplicate name, a nonzero shift or
    /// dimensions that disagree with the declared objects.
    void add_morphism(const std::string& name, Object domain, Object codomain, GradedMap map);

    bool has_object(const std::string& name) const { return objects_.count(name) != 0; }
    bool has_morphism(const std::string& name) const { return morphisms_.count(name) != 0; }
    const GradedSpace& object(const std::string& name) const;
    const Morphism& morphism(const std::string& name) const;
    /// The tensor product of the named spaces, the unit space for I.
    GradedSpace space(const Object& o) const;

    std::vector<std::string> object_names() const;
    std::vector<std::string> morphism_names() const;

private:
    int modulus_;
    std::map<std::string, GradedSpace> objects_;
    std::map<std::string, Morphism> morphisms_;
};

struct Signature {
    Object domain;
    Object codomain;
};

/// Wire types of an expression. Throws TypeError naming the unbound name or
/// the mismatched composition stage.
Signature typecheck(const Expr& e, const Env& env);

/// The morphism an expression denotes. Throws TypeError when it does not typecheck.
GradedMap evaluate(const Expr& e, const Env& env);

struct IdentityResult {
    bool holds = false;
    std::string counterexample;  // empty when the identity holds
};

/// Compares both sides on every basis vector of the domain. The
/// counterexample names the first basis vector where they differ.
IdentityResult check_identity(const Expr& lhs, const Expr& rhs, const Env& env);

}  // namespace bgt::tangle
