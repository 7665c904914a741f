#pragma once

// Associated bundles E = (P (x) V)^B for a fiber comodule V, pseudotensorial
// and strongly tensorial forms, cross sections, local sections and the two
// covariant derivatives D (global) and nabla (local).
//
// Fiber-indexed maps are convolved through the coaction of V: for
// f : V -> X and g : B -> Y, f * g = combine o (f (x) g) o rho_V.

#include <optional>
#include <stdexcept>

#include "bgt/gauge.hpp"

namespace bgt {

struct FiberComodule {
    Coaction rho;                   // V -> V (x) B
    Vec unit_point;                 // eta_V(1), fixed by rho
    std::optional<Algebra> algebra; // present when V is a comodule algebra

    const GradedSpace& V() const { return rho.carrier; }
    const Hopf& B() const { return rho.hopf; }
};

/// k with the trivial coaction.
FiberComodule trivial_fiber(const Hopf& b);
/// B_R: B coacting on itself through Delta, a comodule algebra.
FiberComodule coregular_fiber(const Hopf& b);
/// B_Ad: B under the braided adjoint coaction. No product is attached: the
/// product of B is not Ad-covariant unless B is braided commutative.
FiberComodule adjoint_fiber(const Hopf& b);
/// v |-> v (x) 1 + beta(v) (x) xi + beta^2(v)/(1+q) (x) xi^2 on the anyonic line.
FiberComodule fiber_from_beta(const GradedSpace& v, const GradedMap& beta, const Hopf& line, Vec unit_point,
                              std::optional<Algebra> algebra = std::nullopt);

/// Comodule axioms, rho_V(eta_V) = eta_V (x) 1, and the comodule-algebra
/// axioms when V carries an algebra.
Report check_fiber(const FiberComodule& f);

/// The two candidate operators for B_R on k[xi]/xi^3: beta(xi) = 0, which
/// gives a comodule different from Delta and is flagged, and beta(xi) = 1,
/// which reproduces Delta and is the one used.
Report coregular_beta_report(const Hopf& line);

struct AssociatedBundle {
    const PrincipalBundle* bundle = nullptr;  // not owned
    FiberComodule fiber;
    GradedSpace PV;   // P (x) V
    Subspace E;       // kernel of (tensor coaction - id (x) eta) in P (x) V
    Vec unit;         // 1 (x) eta_V
    GradedMap base;   // M -> E-ambient, m |-> m (x) eta_V

    /// p (x) v |-> p0 (x) v0 (x) p1 v1 with the braiding of p1 past v0.
    Vec coact(const Vec& x) const;
    /// Left multiplication by m in M on the P factor.
    Vec act(const Vec& m, const Vec& x) const;
};

AssociatedBundle associated_bundle(const PrincipalBundle& bundle, FiberComodule fiber);
/// Unit in E and E closed under left multiplication by M.
Report check_associated(const AssociatedBundle& e);
/// Comodule-algebra axioms for the braided tensor product algebra P (x) V
/// under the tensor coaction. They hold when B is braided commutative with
/// respect to V and can fail otherwise (B_R over the anyonic line fails).
Report check_tensor_comodule_algebra(const AssociatedBundle& e);

// ---------------------------------------------------------------- B_R

struct CoregularIso {
    GradedMap to_E;    // P -> P (x) B, (id (x) S) o rho
    GradedMap from_E;  // P (x) B -> P, id (x) eps
};
CoregularIso coregular_iso(const AssociatedBundle& e);
/// Image in E, both round trips, unit to unit, and
/// (id (x) eps)(to_E(p) to_E(p')) = p p' in the braided tensor product P (x) B.
/// A note records whether E is closed under that product.
Report check_coregular_iso(const AssociatedBundle& e, const CoregularIso& iso);

// ---------------------------------------------------------------- forms

struct NotStronglyTensorial : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Sigma = sigma * Phi : V -> Omega^n P for sigma : V -> Omega^n M.
GradedMap local_to_global_form(const PrincipalBundle& bundle, const Trivialization& t, const FiberComodule& f,
                               const GradedMap& sigma, int n);
/// sigma = Sigma * Phi^{-1}, pulled back to M. Throws NotStronglyTensorial
/// when Sigma does not factor through (Omega^n M)P.
GradedMap global_to_local_form(const PrincipalBundle& bundle, const Trivialization& t, const FiberComodule& f,
                               const GradedMap& big_sigma, int n);
/// Equivariance of Sigma : V -> Omega^n P.
Report check_pseudotensorial(const PrincipalBundle& bundle, const FiberComodule& f, const GradedMap& big_sigma, int n);
bool is_strongly_tensorial(const PrincipalBundle& bundle, const GradedMap& big_sigma, int n);

/// D Sigma = (id - Pi) o d Sigma.
GradedMap covariant_D(const PrincipalBundle& bundle, const GradedMap& pi, const GradedMap& big_sigma, int n);

// ---------------------------------------------------------------- local sections

/// nabla sigma = d sigma + (-1)^{n+1} sigma * A.
GradedMap nabla(const Calculus& m, const FiberComodule& f, const GradedMap& sigma, int n, const GradedMap& a);
/// sigma^gamma = sigma * gamma.
GradedMap transform_section(const Calculus& m, const FiberComodule& f, const GradedMap& sigma, int n,
                            const GradedMap& gamma);
/// sigma * F for a map F : B -> Omega^k M.
GradedMap section_times(const Calculus& m, const FiberComodule& f, const GradedMap& sigma, int n,
                        const GradedMap& form, int k);

// ---------------------------------------------------------------- trivial associated bundles

struct AssociatedTrivialization {
    GradedMap phi_E;      // V -> P (x) V
    GradedMap theta;      // M (x) V -> P (x) V, m (x) v |-> m phi_E(v)
    GradedMap theta_inv;  // P (x) V -> M (x) V, p (x) v |-> p0 phi^{-1}(p1) (x) v
};
/// phi_E(v) = Phi(S^{-1} v1) (x) v0 with the inverse braiding of v0 past v1.
/// Throws AssertionFailure when phi_E leaves E or theta fails to invert.
AssociatedTrivialization trivialize_associated(const AssociatedBundle& e, const Trivialization& t);
Report check_associated_trivialization(const AssociatedBundle& e, const AssociatedTrivialization& at);
/// theta^{-1}(theta(x) theta(y)) on M (x) V, the product of E carried over;
/// requires V to be an algebra.
Algebra transported_fiber_product(const AssociatedBundle& e, const AssociatedTrivialization& at);

// ---------------------------------------------------------------- cross sections

/// A cross section is a left M-module map s : E -> Omega^n M, stored on the
/// canonical basis of E (the domain is E.as_space()).

/// s(p (x) v) = p Sigma(v) for a pseudotensorial 0-form with Sigma(eta_V) = 1.
/// Throws AssertionFailure when the image is not in M.
GradedMap cross_section_from_form(const AssociatedBundle& e, const GradedMap& big_sigma);
/// Sigma(v) = tau(S^{-1} v1)' s(tau(S^{-1} v1)'' (x) v0) with tau(b) = chi^{-1}(1 (x) b),
/// reading the middle through P (x)_M E.
GradedMap form_from_cross_section(const AssociatedBundle& e, const GradedMap& s);

/// s = mult o (id (x) sigma) o theta^{-1} for sigma : V -> Omega^n M.
GradedMap section_from_local(const AssociatedBundle& e, const AssociatedTrivialization& at, const GradedMap& sigma,
                             int n);
/// sigma = s o phi_E.
GradedMap local_from_section(const AssociatedBundle& e, const AssociatedTrivialization& at, const GradedMap& s);
/// s(m x) = m s(x) on all basis pairs.
bool is_module_map(const AssociatedBundle& e, const GradedMap& s, int n);

}  // namespace bgt
