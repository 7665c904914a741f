#pragma once

// Braided principal bundles, trivialisations, connections and their
// projections, local and global gauge transformations, curvature and
// cocycle cross products.
//
// Conventions. Forms on P live in the ambient tensor powers of P (a
// connection is a map B -> P (x) P), forms on the base M in tensor powers of
// M. Gauge fields are maps B -> M (x) M with image in Omega^1 M.

#include <memory>
#include <optional>
#include <stdexcept>
#include <utility>

#include "bgt/algebra.hpp"
#include "bgt/calculus.hpp"

namespace bgt {

/// An injective map M -> P together with a left inverse, used to move
/// tensors between M^{(x)k} and P^{(x)k}.
class Embedding {
public:
    Embedding() = default;
    explicit Embedding(GradedMap incl);

    const GradedMap& map() const noexcept { return incl_; }
    Vec push(const Vec& v, int factors) const;
    /// Preimage under incl^{(x)k}, or nullopt when v is not in the image.
    std::optional<Vec> pull(const Vec& v, int factors) const;
    /// Pulls back only the middle factor of v in L (x) P (x) R.
    std::optional<Vec> pull_factor(const Vec& v, std::size_t left, std::size_t right) const;
    const GradedMap& retraction() const noexcept { return retract_; }

private:
    GradedMap incl_;
    GradedMap retract_;
};

struct PrincipalBundle {
    Algebra P;
    Coaction rho;                 // P -> P (x) B
    Subspace invariants;          // P^B inside P
    Algebra M;                    // the invariant subalgebra on its own basis
    Embedding base;               // M -> P
    Subspace relations;           // span{ pm (x) p' - p (x) mp' }
    Quotient tensor_over_base;    // P (x)_M P = (P (x) P) / relations
    GradedMap chi_tilde;          // P (x) P -> P (x) B
    GradedMap chi;                // P (x)_M P -> P (x) B
    std::optional<GradedMap> chi_inverse;
    std::shared_ptr<const Calculus> calc_P;
    std::shared_ptr<const Calculus> calc_M;
    std::shared_ptr<const Horizontal> horizontal;
    Coaction ad;                  // adjoint coaction of B on itself

    const Hopf& B() const { return rho.hopf; }
    /// Coaction on P (x) P (the tensor product comodule).
    Vec coact_pp(const Vec& x) const;
};

Subspace invariant_subalgebra(const Algebra& p, const Coaction& rho);

/// Builds all bundle data. When `base` is given (an algebra and its
/// inclusion) it must span exactly the invariants; otherwise the invariant
/// subalgebra is used on the basis of its canonical rows.
PrincipalBundle make_bundle(Algebra p, Coaction rho, std::optional<std::pair<Algebra, GradedMap>> base = std::nullopt);

/// Comodule-algebra axioms, invariant subalgebra, well-definedness of chi on
/// P (x)_M P, and bijectivity of chi.
Report verify_principal(const PrincipalBundle& bundle);

struct Trivialization {
    GradedMap phi;       // B -> P
    GradedMap phi_inv;   // B -> P, convolution inverse of phi
    GradedMap iso;       // M (x) B -> P, m (x) b |-> m phi(b)
    GradedMap iso_inv;   // P -> M (x) B
};

struct AssertionFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Checks that phi is unital, equivariant and convolution invertible, builds
/// iso and its inverse (id (x) phi^{-1})-twisted through rho, and checks
/// all round trips. The chi inverse of the bundle is replaced by
/// p (x) b |-> p phi^{-1}(b1) (x) phi(b2). Throws AssertionFailure naming
/// the violated identity.
Trivialization make_trivialization(PrincipalBundle& bundle, const GradedMap& phi,
                                   std::optional<GradedMap> phi_inv = std::nullopt);
Report check_trivialization(const PrincipalBundle& bundle, const Trivialization& t);

/// P = M (x) B with rho = id (x) Delta, phi = eta_M (x) id, phi^{-1} = eta_M (x) S.
std::pair<PrincipalBundle, Trivialization> trivial_bundle(const Algebra& m, const Hopf& b);

// ---------------------------------------------------------------- connections

/// phi^{-1} * d phi.
GradedMap trivial_connection(const PrincipalBundle& bundle, const Trivialization& t);
/// phi^{-1} * d phi + phi^{-1} * A * phi.
GradedMap connection_from_field(const PrincipalBundle& bundle, const Trivialization& t, const GradedMap& a);

struct NotStrong : std::runtime_error {
    using std::runtime_error::runtime_error;
};
/// A = phi * (omega - omega_0) * phi^{-1}. Throws NotStrong when the result
/// does not lie in Omega^1 M.
GradedMap field_from_connection(const PrincipalBundle& bundle, const Trivialization& t, const GradedMap& omega);

/// Vertical normalisation, Ad-equivariance and strongness, in that order.
Report check_connection(const PrincipalBundle& bundle, const GradedMap& omega);

/// Pi = (mult (x) id)(id (x) omega) chi_tilde as a map on P (x) P.
GradedMap projection_from_connection(const PrincipalBundle& bundle, const GradedMap& omega);
/// omega(b) = Pi(chi^{-1}(1 (x) (b - eps(b) 1))).
GradedMap connection_from_projection(const PrincipalBundle& bundle, const GradedMap& pi);
/// Idempotence, vanishing on P(Omega^1 M)P, chi_tilde o Pi = chi_tilde,
/// left module property, covariance, and ker Pi = P(Omega^1 M)P.
Report check_projection(const PrincipalBundle& bundle, const GradedMap& pi);

/// The extension of id - Pi to Omega^n P as a left P-module map.
Vec horizontal_part(const PrincipalBundle& bundle, const GradedMap& pi, const Vec& u, int n);

// ---------------------------------------------------------------- local theory on M

/// Dimension of the space of degree-preserving A : B -> Omega^1 M with A(1) = 0.
std::size_t gauge_field_dimension(const Calculus& m, const Hopf& b);
/// Dimension of the affine space of degree-preserving gamma : B -> M with gamma(1) = 1.
std::size_t gauge_group_dimension(const Algebra& m, const Hopf& b);

/// F = dA + A * A : B -> M^{(x)3}.
GradedMap curvature(const Calculus& m, const Hopf& b, const GradedMap& a);
/// dF + A * F - F * A : B -> M^{(x)4}.
GradedMap bianchi_residual(const Calculus& m, const Hopf& b, const GradedMap& a);

GradedMap gauge_compose(const Algebra& m, const Hopf& b, const GradedMap& g1, const GradedMap& g2);
GradedMap gauge_inverse(const Algebra& m, const Hopf& b, const GradedMap& g);
/// A^gamma = gamma^{-1} * A * gamma + gamma^{-1} * d gamma.
GradedMap transform_field(const Calculus& m, const Hopf& b, const GradedMap& a, const GradedMap& gamma);

/// A gauge transformation taking A to the zero field: the solution of
/// d gamma + A * gamma = 0 with gamma(1) = 1, or nullopt when there is none.
std::optional<GradedMap> gauge_to_zero(const Calculus& m, const Hopf& b, const GradedMap& a);

// ---------------------------------------------------------------- global gauge

struct GlobalGauge {
    GradedMap gamma_global;  // Gamma : B -> P
    GradedMap theta;         // Theta : P -> P
};
/// Gamma = phi^{-1} * gamma * phi and Theta = mult o (id (x) Gamma) o rho.
GlobalGauge global_gauge(const PrincipalBundle& bundle, const Trivialization& t, const GradedMap& gamma);
Report check_global(const PrincipalBundle& bundle, const GlobalGauge& g);
/// Theta for an arbitrary Gamma : B -> P.
GradedMap theta_of(const PrincipalBundle& bundle, const GradedMap& gamma_global);

/// P^Gamma: the product Theta o mult o (Theta^{-1} (x) Theta^{-1}) with the same coaction.
PrincipalBundle transformed_bundle(const PrincipalBundle& bundle, const GradedMap& theta);
/// (Theta (x) Theta) o omega.
GradedMap transport_connection(const PrincipalBundle& bundle, const GradedMap& omega, const GradedMap& theta);

// ---------------------------------------------------------------- cocycles

/// iso^{-1} o mult_P o (iso (x) iso) on M (x) B.
Algebra transport_product(const PrincipalBundle& bundle, const Trivialization& t);

struct Cocycle {
    GradedMap action;  // B (x) M -> M
    GradedMap cocycle; // B (x) B -> M
};
Cocycle extract_cocycle(const Algebra& transported, const Algebra& m, const Hopf& b);
/// (m (x) b)(m' (x) c) = m (b1 |> m') sigma(b2 (x) c1) (x) b3 c2 with the
/// braidings needed to bring the factors together.
Algebra cocycle_cross_product(const Algebra& m, const Hopf& b, const Cocycle& c);

}  // namespace bgt
