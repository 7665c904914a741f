#pragma once

// Algebras, braided Hopf algebras and comodules given by structure
// constants in the category of Z_n-graded spaces, together with axiom
// checkers and convolution of morphisms.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "bgt/graded.hpp"

namespace bgt {

struct CheckResult {
    std::string name;
    bool passed = true;
    std::string witness;  // empty when passed
};

/// An ordered list of named checks. Order is the order of insertion.
class Report {
public:
    Report() = default;
    explicit Report(std::string title) : title_(std::move(title)) {}

    void add(std::string name, bool passed, std::string witness = {});
    void add(CheckResult r) { checks_.push_back(std::move(r)); }
    void append(const Report& other);
    void note(std::string line) { notes_.push_back(std::move(line)); }

    const std::string& title() const noexcept { return title_; }
    const std::vector<CheckResult>& checks() const noexcept { return checks_; }
    const std::vector<std::string>& notes() const noexcept { return notes_; }
    bool passed() const;
    const CheckResult* find(const std::string& name) const;
    std::string str() const;

private:
    std::string title_;
    std::vector<CheckResult> checks_;
    std::vector<std::string> notes_;
};

/// An associative unital algebra. The product is stored as a map A (x) A -> A.
struct Algebra {
    GradedSpace space;
    Vec unit;
    GradedMap mult;

    Algebra() = default;
    Algebra(GradedSpace space, Vec unit, GradedMap mult);

    int modulus() const { return space.modulus(); }
    std::size_t dim() const { return space.dim(); }
    Vec multiply(const Vec& a, const Vec& b) const;
    /// Product of basis vectors i and j (a column of the product matrix).
    const Vec& basis_product(std::size_t i, std::size_t j) const { return table_[i * dim() + j]; }
    /// eta : k -> A
    GradedMap unit_map() const;
    Vec element(const std::string& basis_name) const { return space.basis_vector(space.index_of(basis_name)); }

private:
    std::vector<Vec> table_;
};

/// The ground field as an algebra (and, below, as a braided group).
Algebra ground_algebra(int modulus);

/// Braided tensor product algebra: (a (x) c)(a' (x) c') = a Psi(c (x) a') c'.
Algebra braided_tensor_algebra(const Algebra& a, const Algebra& c);

/// A braided Hopf algebra (braided group). The counit maps to the unit object.
struct Hopf {
    Algebra algebra;
    GradedMap comul;
    GradedMap counit;
    GradedMap antipode;
    std::optional<GradedMap> antipode_inverse;

    const GradedSpace& space() const { return algebra.space; }
    int modulus() const { return algebra.modulus(); }
    std::size_t dim() const { return algebra.dim(); }
    Scalar epsilon(const Vec& b) const { return counit(b)[0]; }
};

Hopf ground_hopf(int modulus);

/// A right coaction rho : carrier -> carrier (x) B.
struct Coaction {
    GradedSpace carrier;
    Hopf hopf;
    GradedMap rho;
};

Report check_algebra(const Algebra& a, const std::string& label = "algebra");
Report check_coalgebra(const Hopf& h, const std::string& label = "coalgebra");
/// Algebra, coalgebra, bialgebra and antipode axioms in that order.
Report check_hopf(const Hopf& h, const std::string& label = "braided group");
Report check_coaction(const Coaction& c, const std::string& label = "comodule");
/// Comodule axioms plus multiplicativity of rho into the braided tensor product A (x) B.
Report check_comodule_algebra(const Algebra& a, const Coaction& c, const std::string& label = "comodule algebra");

/// A bilinear operation used to combine the two halves of a convolution.
using Bilinear = std::function<Vec(const Vec&, const Vec&)>;

/// combine o (f (x) g) o split, evaluated without forming f (x) g.
GradedMap convolve(const GradedMap& f, const GradedMap& g, const GradedMap& split, const Bilinear& combine,
                   const GradedSpace& target);

/// f * g = mult_A o (f (x) g) o Delta_B for maps B -> A.
GradedMap convolution(const GradedMap& f, const GradedMap& g, const Algebra& a, const Hopf& b);
/// eta_A o epsilon_B, the unit of the convolution algebra.
GradedMap convolution_unit(const Algebra& a, const Hopf& b);

struct NoInverse : std::runtime_error {
    using std::runtime_error::runtime_error;
};
/// The two-sided convolution inverse, found by an exact linear solve.
/// Throws NoInverse, naming f(1), when none exists.
GradedMap convolution_inverse(const GradedMap& f, const Algebra& a, const Hopf& b);

/// Ad = (id (x) mult)(id (x) S (x) id)(Psi_{B,B} (x) id)(Delta (x) id)Delta.
Coaction adjoint_coaction(const Hopf& h);
/// B as a right comodule over itself through Delta.
Coaction regular_coaction(const Hopf& h);
/// id (x) eta.
Coaction trivial_coaction(const GradedSpace& v, const Hopf& h);

/// rho(v) = v (x) 1 + beta(v) (x) xi + beta^2(v)/(1+q) (x) xi^2 for the
/// anyonic line B = k[xi]/xi^3 at n = 3. beta must have shift -1 and cube to zero.
Coaction anyonic_comodule(const GradedSpace& v, const GradedMap& beta, const Hopf& line);

/// Coaction of a tensor product of comodules over the same B:
/// (id..id (x) mult...)(braidings)(rho_1 (x) ... (x) rho_k), evaluated sparsely.
Vec coact_tensor(const std::vector<const Coaction*>& factors, const Vec& x);
/// The same as a map; intended for small carriers.
Coaction tensor_coaction(const std::vector<const Coaction*>& factors);

/// First domain basis vector on which two parallel maps differ, rendered
/// as a witness string; nullopt when the maps agree.
std::optional<std::string> first_difference(const GradedMap& lhs, const GradedMap& rhs);

}  // namespace bgt
