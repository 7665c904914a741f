#pragma once

// The universal differential calculus of an algebra P. Omega^n P is the
// joint kernel of the n adjacent multiplications P^{(x)(n+1)} -> P^{(x)n}.
// Forms are handled as vectors in the ambient tensor power; FormSpace and
// Form add carrier coordinates on top of that.

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "bgt/algebra.hpp"

namespace bgt {

class Calculus;

struct FormSpace {
    const Calculus* calculus = nullptr;
    int degree = 0;
    Subspace carrier;  // inside P^{(x)(degree+1)}

    std::size_t dim() const { return carrier.dim(); }
    /// Number of basis forms of a given grading degree.
    std::size_t dim_in_degree(int d) const;
};

/// A form stored by its coordinates on the carrier's canonical basis.
struct Form {
    const FormSpace* space = nullptr;
    Vec coords;

    Vec ambient() const { return space->carrier.from_coordinates(coords); }
    friend bool operator==(const Form& a, const Form& b) { return a.space == b.space && a.coords == b.coords; }
};

class Calculus {
public:
    explicit Calculus(Algebra p);
    Calculus(const Calculus&) = delete;
    Calculus& operator=(const Calculus&) = delete;

    const Algebra& algebra() const noexcept { return p_; }
    std::size_t dim() const noexcept { return p_.dim(); }

    /// P^{(x)k} for k >= 1.
    const GradedSpace& power(int k) const;

    /// Sum over i = 0..n+1 of (-1)^i times the unit inserted at slot i.
    Vec d(const Vec& u, int n) const;
    /// Multiplies the last factor of u with the first factor of v.
    Vec wedge(const Vec& u, int n, const Vec& v, int m) const;
    Vec left(const Vec& p, const Vec& u, int n) const;
    Vec right(const Vec& u, int n, const Vec& p) const;

    /// Adjacent multiplication at slot i (0 <= i < n) on P^{(x)(n+1)}.
    GradedMap adjacent_product(int n, int i) const;
    /// d as a map P^{(x)(n+1)} -> P^{(x)(n+2)}.
    GradedMap d_map(int n) const;

    /// Omega^n P, computed once and cached.
    const FormSpace& omega(int n) const;
    Form form(const Vec& ambient, int n) const;  // throws std::logic_error off the carrier

    /// p0 dp1 ... dpn for elements of P.
    Vec exact_monomial(const std::vector<Vec>& factors) const;

    /// Left P-module extension to Omega^n of a map h : P -> Omega^1 P:
    /// x0 (x) x1 (x) ... (x) xn |-> x0 h(x1) ... h(xn). With h = d this is the
    /// identity on Omega^n P.
    Vec extend(const std::function<Vec(std::size_t)>& h_on_basis, const Vec& u, int n) const;

    /// span{ m0 dm1 ... dmn p } and span{ p m0 dm1 ... dmn p' } for a
    /// subspace M of P (given by an inclusion map M -> P).
    Subspace base_forms_right(const GradedMap& incl, int n) const;
    Subspace base_forms_both(const GradedMap& incl, int n) const;

private:
    Algebra p_;
    mutable std::mutex mutex_;
    mutable std::map<int, std::unique_ptr<GradedSpace>> powers_;
    mutable std::map<int, std::unique_ptr<FormSpace>> forms_;
};

/// A form written in the basis m0 dm1 ... dmn, with m0 a basis element and
/// m1..mn non-unit basis elements, e.g. "(1+q) theta2 dtheta dtheta2".
/// Requires the unit to be a basis element; otherwise falls back to the
/// tensor notation of format_vector.
std::string format_form(const Calculus& c, const Vec& u, int n);

/// The two horizontal subspaces of Omega^1 P for a subalgebra M.
struct Horizontal {
    Subspace both;   // P (Omega^1 M) P
    Subspace right;  // (Omega^1 M) P
};
Horizontal horizontal_subspaces(const Calculus& p, const GradedMap& incl);

}  // namespace bgt
