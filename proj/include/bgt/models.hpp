#pragma once

// The two worked models: the anyonic line bundle over the anyonic line, and
// the composite base M = N (x) k[theta]/theta^3 with N commutative in degree 0.
// Both use the structure group B = k[xi]/xi^3, xi primitive of degree 1.

#include <array>
#include <string>
#include <vector>

#include "bgt/gauge.hpp"

namespace bgt {

/// k[x]/x^length with x in the given degree; basis "1", "x", "x2", ...
Algebra line_algebra(const std::string& gen, int modulus, int degree, int length);

/// k[x]/x^n for n the modulus, x primitive of degree 1. The antipode is the
/// convolution inverse of the identity and its inverse is recorded as well.
Hopf primitive_line(const std::string& gen, int modulus);

/// The anyonic model at n = 3: M = k[theta]/theta^3, B = k[xi]/xi^3,
/// P = M (x) B the braided tensor product bundle.
class AnyonicModel {
public:
    AnyonicModel();

    const Algebra& M() const { return bundle_.M; }
    const Hopf& B() const { return bundle_.B(); }
    const PrincipalBundle& bundle() const { return bundle_; }
    PrincipalBundle& bundle() { return bundle_; }
    const Trivialization& trivialization() const { return triv_; }
    const Calculus& calc() const { return *bundle_.calc_M; }

    Vec m(const std::string& name) const { return M().element(name); }
    /// m0 dm1 ... dmk on M for basis names.
    Vec form(const std::vector<std::string>& names) const;

    /// A(xi) = a1 dtheta + a2 theta2 dtheta2, A(xi2) = b1 dtheta2 + b2 theta dtheta.
    GradedMap field(const Scalar& a1, const Scalar& a2, const Scalar& b1, const Scalar& b2) const;
    /// Inverse of field(); throws std::invalid_argument off the family.
    std::array<Scalar, 4> field_components(const GradedMap& a) const;

    /// gamma(1) = 1, gamma(xi) = c1 theta, gamma(xi2) = c2 theta2.
    GradedMap gauge(const Scalar& c1, const Scalar& c2) const;
    std::array<Scalar, 2> gauge_components(const GradedMap& g) const;

    /// sigma(1) = s0, sigma(xi) = s1 theta, sigma(xi2) = s2 theta2.
    GradedMap section(const Scalar& s0, const Scalar& s1, const Scalar& s2) const;
    std::array<Scalar, 3> section_components(const GradedMap& s) const;

    /// The flat family: a2 = 0, b2 = -(1+q) a1^2.
    GradedMap flat_field(const Scalar& a1, const Scalar& b1) const;

    struct Canonical {
        GradedMap representative;  // components (0, a2, 0, b2')
        GradedMap gamma;           // taking A to the representative
    };
    /// gamma = (-a1, -b1 + (1+q) a1^2) and the representative A^gamma.
    Canonical canonical_form(const GradedMap& a) const;

private:
    std::array<Scalar, 2> coords(const Vec& v, const Vec& e1, const Vec& e2) const;

    PrincipalBundle bundle_;
    Trivialization triv_;
};

/// The composite model for a commutative degree-0 algebra N.
class CompositeModel {
public:
    explicit CompositeModel(const Algebra& n);

    const Algebra& N() const { return n_; }
    const Algebra& K() const { return k_; }
    const Algebra& M() const { return calc_->algebra(); }
    const Hopf& B() const { return b_; }
    const Calculus& calc() const { return *calc_; }
    const Calculus& calc_N() const { return *calc_n_; }

    /// (N (x) N) (x) (K (x) K) -> M (x) M, (n (x) n') (x) (k (x) k') |-> (n (x) k) (x) (n' (x) k').
    Vec interleave(const Vec& nn, const Vec& kk) const;
    /// n (x) k in M.
    Vec element(const Vec& n, const Vec& k) const;

    struct Field {
        Vec A1, A2;          // in Omega^1 N
        Vec a1, a2, b1, b2;  // in N (x) N
    };
    GradedMap field(const Field& f) const;
    /// Decomposition along Omega^1 M = Omega^1 N (x) C + (N (x) N) (x) Omega^1 K.
    Field components(const GradedMap& a) const;

    GradedMap gauge(const Vec& c1, const Vec& c2) const;
    std::array<Vec, 2> gauge_components(const GradedMap& g) const;
    GradedMap section(const Vec& s0, const Vec& s1, const Vec& s2) const;

    /// A1 = da, A2 = db + (1+q)(da^2 - a da), a1 = a (x) 1, a2 = 0,
    /// b1 = b (x) 1 + (1+q) a (x) a, b2 = -(1+q) a (x) a.
    Field flat_family(const Vec& a, const Vec& b) const;

private:
    Algebra n_;
    Algebra k_;
    Hopf b_;
    std::shared_ptr<const Calculus> calc_;
    std::shared_ptr<const Calculus> calc_n_;
    std::shared_ptr<const Calculus> calc_k_;
};

}  // namespace bgt
