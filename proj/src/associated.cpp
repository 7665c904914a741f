#include "bgt/associated.hpp"

#include "detail.hpp"

namespace bgt {

namespace {

using namespace detail;

[[noreturn]] void fail(const std::string& what) { throw AssertionFailure(what); }

GradedMap antipode_inverse(const Hopf& h) {
    if (h.antipode_inverse) return *h.antipode_inverse;
    auto inv = inverse(h.antipode);
    if (!inv) throw std::invalid_argument("the antipode is not invertible");
    return *inv;
}

/// Sparse terms (v0 index, b index, coefficient) of rho_V(e_j).
struct CoTerm {
    std::size_t v, b;
    Scalar c;
};
std::vector<CoTerm> coterms(const Coaction& rho, std::size_t j) {
    const std::size_t nb = rho.hopf.dim();
    std::vector<CoTerm> out;
    const Vec col = rho.rho.column(j);
    for (std::size_t k = 0; k < col.size(); ++k)
        if (!col[k].is_zero()) out.push_back({k / nb, k % nb, col[k]});
    return out;
}

/// Left multiplication by p on P as a matrix.
Matrix left_mult(const Algebra& a, const Vec& p) {
    std::vector<Vec> cols;
    for (std::size_t j = 0; j < a.dim(); ++j) cols.push_back(a.multiply(p, a.space.basis_vector(j)));
    return Matrix::from_columns(a.dim(), cols);
}

GradedMap pushed(const PrincipalBundle& b, const GradedMap& sigma, int factors, const GradedSpace& target) {
    std::vector<Vec> cols;
    for (std::size_t j = 0; j < sigma.domain().dim(); ++j) cols.push_back(b.base.push(sigma.column(j), factors));
    return GradedMap::from_columns(sigma.domain(), target, cols);
}

std::string report_witness(const Report& r) {
    for (const auto& c : r.checks())
        if (!c.passed) return c.name + (c.witness.empty() ? "" : ": " + c.witness);
    return {};
}

}  // namespace

// ---------------------------------------------------------------- fibers

FiberComodule trivial_fiber(const Hopf& b) {
    const GradedSpace k = GradedSpace::unit(b.modulus());
    return FiberComodule{trivial_coaction(k, b), k.basis_vector(0), ground_algebra(b.modulus())};
}

FiberComodule coregular_fiber(const Hopf& b) { return FiberComodule{regular_coaction(b), b.algebra.unit, b.algebra}; }

FiberComodule adjoint_fiber(const Hopf& b) { return FiberComodule{adjoint_coaction(b), b.algebra.unit, std::nullopt}; }

FiberComodule fiber_from_beta(const GradedSpace& v, const GradedMap& beta, const Hopf& line, Vec unit_point,
                              std::optional<Algebra> algebra) {
    return FiberComodule{anyonic_comodule(v, beta, line), std::move(unit_point), std::move(algebra)};
}

Report check_fiber(const FiberComodule& f) {
    Report r("fiber comodule");
    {
        const Report sub = check_coaction(f.rho, "");
        for (const auto& c : sub.checks()) r.add(c);
    }
    const Vec lhs = f.rho.rho(f.unit_point);
    const Vec rhs = kron(f.unit_point, f.B().algebra.unit);
    r.add("the unit point is invariant", lhs == rhs, format_vector(f.rho.rho.codomain(), lhs));
    if (f.algebra) {
        const Report sub = check_comodule_algebra(*f.algebra, f.rho, "");
        r.add("the fiber is a comodule algebra", sub.passed(), report_witness(sub));
    }
    return r;
}

Report coregular_beta_report(const Hopf& line) {
    Report r("coregular comodule B_R");
    const GradedSpace& bs = line.space();
    const std::size_t one = bs.index_of("1");
    std::optional<std::size_t> gen, gen2;
    for (std::size_t i = 0; i < bs.dim(); ++i) {
        if (bs.degree(i) == 1) gen = i;
        if (bs.degree(i) == 2) gen2 = i;
    }
    if (!gen || !gen2 || bs.dim() != 3) throw std::invalid_argument("expected the anyonic line k[xi]/xi^3");
    const Scalar one_q = Scalar(1) + Scalar::q(3);
    auto beta_with = [&](const Scalar& on_gen) {
        Matrix m(3, 3);
        m(one, *gen) = on_gen;
        m(*gen, *gen2) = one_q;
        return GradedMap(bs, bs, m, -1);
    };
    const Coaction zero_variant = anyonic_comodule(bs, beta_with(0), line);
    const Coaction one_variant = anyonic_comodule(bs, beta_with(1), line);
    const std::string xi = bs[*gen].name;

    const auto diff0 = first_difference(zero_variant.rho, line.comul);
    r.add("beta(" + xi + ") = 0 is rejected as a description of Delta", diff0.has_value(),
          "beta(" + xi + ") = 0 reproduces Delta");
    if (diff0) r.note("inconsistent: beta(" + xi + ") = 0 gives rho != Delta, first difference " + *diff0);
    const auto diff1 = first_difference(one_variant.rho, line.comul);
    r.add("beta(" + xi + ") = 1 reproduces Delta", !diff1.has_value(), diff1.value_or(""));
    r.note("B_R is built from Delta, equivalently beta(" + xi + ") = 1");
    return r;
}

// ---------------------------------------------------------------- associated bundle

Vec AssociatedBundle::coact(const Vec& x) const { return coact_tensor({&bundle->rho, &fiber.rho}, x); }

Vec AssociatedBundle::act(const Vec& m, const Vec& x) const {
    const Algebra& p = bundle->P;
    return apply_to_factor(left_mult(p, bundle->base.push(m, 1)), x, 1, fiber.V().dim());
}

AssociatedBundle associated_bundle(const PrincipalBundle& bundle, FiberComodule fiber) {
    AssociatedBundle e;
    e.bundle = &bundle;
    e.fiber = std::move(fiber);
    e.PV = tensor(bundle.P.space, e.fiber.V());
    const Vec one_b = bundle.B().algebra.unit;
    std::vector<Vec> cols;
    for (std::size_t j = 0; j < e.PV.dim(); ++j) {
        const Vec x = e.PV.basis_vector(j);
        cols.push_back(sub(e.coact(x), kron(x, one_b)));
    }
    e.E = kernel(GradedMap::from_columns(e.PV, tensor(e.PV, bundle.B().space()), cols));
    e.unit = kron(bundle.P.unit, e.fiber.unit_point);
    std::vector<Vec> base_cols;
    for (std::size_t k = 0; k < bundle.M.dim(); ++k)
        base_cols.push_back(kron(bundle.base.map().column(k), e.fiber.unit_point));
    e.base = GradedMap::from_columns(bundle.M.space, e.PV, base_cols);
    return e;
}

Report check_associated(const AssociatedBundle& e) {
    Report r("associated bundle");
    const PrincipalBundle& b = *e.bundle;
    r.add("E contains the unit", e.E.contains(e.unit), format_vector(e.PV, e.unit));
    {
        std::string w;
        for (std::size_t k = 0; k < b.M.dim() && w.empty(); ++k)
            for (std::size_t i = 0; i < e.E.dim(); ++i)
                if (!e.E.contains(e.act(b.M.space.basis_vector(k), e.E.basis()[i]))) {
                    w = b.M.space[k].name + " times " + format_vector(e.PV, e.E.basis()[i]);
                    break;
                }
        r.add("E is closed under left multiplication by M", w.empty(), w);
    }
    return r;
}

Report check_tensor_comodule_algebra(const AssociatedBundle& e) {
    Report r("braided tensor product comodule algebra");
    if (!e.fiber.algebra) throw std::invalid_argument("the fiber has no product");
    const PrincipalBundle& b = *e.bundle;
    const Algebra pv = braided_tensor_algebra(b.P, *e.fiber.algebra);
    const Report sub = check_comodule_algebra(pv, tensor_coaction({&b.rho, &e.fiber.rho}), "");
    for (const auto& c : sub.checks()) r.add(c);
    return r;
}

// ---------------------------------------------------------------- B_R

CoregularIso coregular_iso(const AssociatedBundle& e) {
    const PrincipalBundle& b = *e.bundle;
    const Hopf& h = b.B();
    if (e.fiber.V() != h.space()) throw std::invalid_argument("coregular_iso needs the fiber B_R");
    CoregularIso iso;
    std::vector<Vec> cols;
    for (std::size_t j = 0; j < b.P.dim(); ++j)
        cols.push_back(apply_to_factor(h.antipode.matrix(), b.rho.rho.column(j), b.P.dim(), 1));
    iso.to_E = GradedMap::from_columns(b.P.space, e.PV, cols);
    iso.from_E = tensor_map(id(b.P.space), h.counit);
    return iso;
}

Report check_coregular_iso(const AssociatedBundle& e, const CoregularIso& iso) {
    Report r("coregular isomorphism");
    const PrincipalBundle& b = *e.bundle;
    {
        std::string w;
        for (std::size_t j = 0; j < b.P.dim(); ++j)
            if (!e.E.contains(iso.to_E.column(j))) {
                w = "on " + b.P.space[j].name;
                break;
            }
        r.add("(id (x) S) o rho lands in E", w.empty(), w);
    }
    add_equality(r, "(id (x) eps) o (id (x) S) o rho = id", compose(iso.from_E, iso.to_E), id(b.P.space));
    {
        std::string w;
        for (const auto& x : e.E.basis())
            if (iso.to_E(iso.from_E(x)) != x) {
                w = "on " + format_vector(e.PV, x);
                break;
            }
        r.add("(id (x) S) o rho o (id (x) eps) = id on E", w.empty(), w);
    }
    r.add("the unit maps to the unit", iso.to_E(b.P.unit) == e.unit, format_vector(e.PV, iso.to_E(b.P.unit)));
    {
        const Algebra pb = braided_tensor_algebra(b.P, b.B().algebra);
        const auto to = columns(iso.to_E);
        std::string w;
        bool closed = true;
        for (std::size_t i = 0; i < b.P.dim() && w.empty(); ++i)
            for (std::size_t j = 0; j < b.P.dim(); ++j) {
                const Vec prod = pb.multiply(to[i], to[j]);
                closed = closed && e.E.contains(prod);
                if (iso.from_E(prod) != b.P.basis_product(i, j)) {
                    w = b.P.space[i].name + " times " + b.P.space[j].name;
                    break;
                }
            }
        r.add("the product of P (x) B carried back through the isomorphism is the product of P", w.empty(), w);
        r.note(closed ? "E is closed under the braided tensor product of P (x) B"
                      : "E is not closed under the braided tensor product of P (x) B");
    }
    return r;
}

// ---------------------------------------------------------------- forms

GradedMap local_to_global_form(const PrincipalBundle& b, const Trivialization& t, const FiberComodule& f,
                               const GradedMap& sigma, int n) {
    const Calculus& c = *b.calc_P;
    const GradedMap sp = pushed(b, sigma, n + 1, c.power(n + 1));
    return convolve(sp, t.phi, f.rho.rho, wedge_op(c, n, 0), c.power(n + 1));
}

GradedMap global_to_local_form(const PrincipalBundle& b, const Trivialization& t, const FiberComodule& f,
                               const GradedMap& big_sigma, int n) {
    const Calculus& c = *b.calc_P;
    const GradedMap x = convolve(big_sigma, t.phi_inv, f.rho.rho, wedge_op(c, n, 0), c.power(n + 1));
    std::vector<Vec> cols;
    for (std::size_t j = 0; j < x.domain().dim(); ++j) {
        auto pulled = b.base.pull(x.column(j), n + 1);
        if (!pulled)
            throw NotStronglyTensorial("image not in (Omega^" + std::to_string(n) + " M)P on " + f.V()[j].name);
        cols.push_back(std::move(*pulled));
    }
    return GradedMap::from_columns(f.V(), b.calc_M->power(n + 1), cols);
}

Report check_pseudotensorial(const PrincipalBundle& b, const FiberComodule& f, const GradedMap& big_sigma, int n) {
    Report r("pseudotensorial form");
    std::vector<const Coaction*> factors(static_cast<std::size_t>(n + 1), &b.rho);
    const std::size_t nb = b.B().dim();
    std::string w;
    for (std::size_t j = 0; j < f.V().dim(); ++j) {
        const Vec lhs = coact_tensor(factors, big_sigma.column(j));
        const Vec rhs = apply_to_factor(big_sigma.matrix(), f.rho.rho.column(j), 1, nb);
        if (lhs != rhs) {
            w = "on " + f.V()[j].name;
            break;
        }
    }
    r.add("Sigma is equivariant", w.empty(), w);
    return r;
}

bool is_strongly_tensorial(const PrincipalBundle& b, const GradedMap& big_sigma, int n) {
    if (n == 0) return true;
    const Subspace right = b.calc_P->base_forms_right(b.base.map(), n);
    for (std::size_t j = 0; j < big_sigma.domain().dim(); ++j)
        if (!right.contains(big_sigma.column(j))) return false;
    return true;
}

GradedMap covariant_D(const PrincipalBundle& b, const GradedMap& pi, const GradedMap& big_sigma, int n) {
    const Calculus& c = *b.calc_P;
    std::vector<Vec> cols;
    for (std::size_t j = 0; j < big_sigma.domain().dim(); ++j)
        cols.push_back(horizontal_part(b, pi, c.d(big_sigma.column(j), n), n + 1));
    return GradedMap::from_columns(big_sigma.domain(), c.power(n + 2), cols);
}

// ---------------------------------------------------------------- local sections

GradedMap nabla(const Calculus& m, const FiberComodule& f, const GradedMap& sigma, int n, const GradedMap& a) {
    const GradedMap sa = convolve(sigma, a, f.rho.rho, wedge_op(m, n, 1), m.power(n + 2));
    const Scalar sign = n % 2 == 0 ? Scalar(-1) : Scalar(1);
    return d_after(m, sigma, n) + sign * sa;
}

GradedMap transform_section(const Calculus& m, const FiberComodule& f, const GradedMap& sigma, int n,
                            const GradedMap& gamma) {
    return convolve(sigma, gamma, f.rho.rho, wedge_op(m, n, 0), m.power(n + 1));
}

GradedMap section_times(const Calculus& m, const FiberComodule& f, const GradedMap& sigma, int n,
                        const GradedMap& form, int k) {
    return convolve(sigma, form, f.rho.rho, wedge_op(m, n, k), m.power(n + k + 1));
}

// ---------------------------------------------------------------- trivial associated bundles

AssociatedTrivialization trivialize_associated(const AssociatedBundle& e, const Trivialization& t) {
    const PrincipalBundle& b = *e.bundle;
    const Hopf& h = b.B();
    const GradedSpace& v = e.fiber.V();
    const int n = h.modulus();
    const GradedMap s_inv = antipode_inverse(h);
    AssociatedTrivialization at;

    std::vector<Vec> phi_cols;
    for (std::size_t j = 0; j < v.dim(); ++j) {
        Vec out(e.PV.dim());
        for (const auto& term : coterms(e.fiber.rho, j)) {
            const long deg = static_cast<long>(v.degree(term.v)) * h.space().degree(term.b);
            const Vec p = t.phi(s_inv.column(term.b));
            axpy(out, term.c * Scalar::q_power(n, -deg), kron(p, v.basis_vector(term.v)));
        }
        phi_cols.push_back(std::move(out));
    }
    at.phi_E = GradedMap::from_columns(v, e.PV, phi_cols);
    for (std::size_t j = 0; j < v.dim(); ++j)
        if (!e.E.contains(phi_cols[j])) fail("phi_E does not land in E on " + v[j].name);

    const GradedSpace mv = tensor(b.M.space, v);
    std::vector<Vec> theta_cols;
    for (std::size_t i = 0; i < b.M.dim(); ++i)
        for (std::size_t j = 0; j < v.dim(); ++j) theta_cols.push_back(e.act(b.M.space.basis_vector(i), phi_cols[j]));
    at.theta = GradedMap::from_columns(mv, e.PV, theta_cols);

    const GradedMap to_m = compose(tensor_map(id(b.M.space), h.counit), t.iso_inv);
    at.theta_inv = tensor_map(to_m, id(v));

    if (compose(at.theta_inv, at.theta) != id(mv)) fail("theta_E^{-1} o theta_E != id");
    for (const auto& x : e.E.basis())
        if (at.theta(at.theta_inv(x)) != x) fail("theta_E o theta_E^{-1} != id on E");
    return at;
}

Report check_associated_trivialization(const AssociatedBundle& e, const AssociatedTrivialization& at) {
    Report r("associated trivialization");
    {
        std::string w;
        for (std::size_t j = 0; j < at.phi_E.domain().dim(); ++j)
            if (!e.E.contains(at.phi_E.column(j))) {
                w = "on " + at.phi_E.domain()[j].name;
                break;
            }
        r.add("phi_E lands in E", w.empty(), w);
    }
    r.add("phi_E is unital", at.phi_E(e.fiber.unit_point) == e.unit, format_vector(e.PV, at.phi_E(e.fiber.unit_point)));
    add_equality(r, "theta_E^{-1} o theta_E = id", compose(at.theta_inv, at.theta), id(at.theta.domain()));
    {
        std::string w;
        for (const auto& x : e.E.basis())
            if (at.theta(at.theta_inv(x)) != x) {
                w = "on " + format_vector(e.PV, x);
                break;
            }
        r.add("theta_E o theta_E^{-1} = id on E", w.empty(), w);
    }
    const std::size_t rk = rank(at.theta.matrix());
    r.add("theta_E is a bijection onto E", rk == e.E.dim() && image(at.theta) == e.E,
          "rank " + std::to_string(rk) + ", dim E " + std::to_string(e.E.dim()));
    return r;
}

Algebra transported_fiber_product(const AssociatedBundle& e, const AssociatedTrivialization& at) {
    if (!e.fiber.algebra) throw std::invalid_argument("the fiber has no product");
    const Algebra pv = braided_tensor_algebra(e.bundle->P, *e.fiber.algebra);
    const GradedSpace& mv = at.theta.domain();
    const auto th = columns(at.theta);
    std::vector<Vec> cols;
    for (std::size_t x = 0; x < mv.dim(); ++x)
        for (std::size_t y = 0; y < mv.dim(); ++y) cols.push_back(at.theta_inv(pv.multiply(th[x], th[y])));
    return Algebra(mv, at.theta_inv(e.unit), GradedMap::from_columns(tensor(mv, mv), mv, cols));
}

// ---------------------------------------------------------------- cross sections

GradedMap cross_section_from_form(const AssociatedBundle& e, const GradedMap& big_sigma) {
    const PrincipalBundle& b = *e.bundle;
    const std::size_t dv = e.fiber.V().dim();
    if (big_sigma(e.fiber.unit_point) != b.P.unit) throw std::invalid_argument("Sigma(eta_V) must be 1");
    const auto sig = columns(big_sigma);
    std::vector<Vec> cols;
    for (const auto& x : e.E.basis()) {
        Vec out(b.P.dim());
        for (std::size_t k = 0; k < x.size(); ++k)
            if (!x[k].is_zero()) axpy(out, x[k], b.P.multiply(b.P.space.basis_vector(k / dv), sig[k % dv]));
        auto m = b.base.pull(out, 1);
        if (!m) fail("cross section does not land in M on " + format_vector(e.PV, x));
        cols.push_back(std::move(*m));
    }
    return GradedMap::from_columns(e.E.as_space(), b.M.space, cols);
}

GradedMap form_from_cross_section(const AssociatedBundle& e, const GradedMap& s) {
    const PrincipalBundle& b = *e.bundle;
    const Hopf& h = b.B();
    const GradedSpace& v = e.fiber.V();
    const std::size_t dp = b.P.dim(), dv = v.dim();
    const int n = h.modulus();
    const GradedMap s_inv = antipode_inverse(h);
    GradedMap chi_inv;
    if (b.chi_inverse) {
        chi_inv = *b.chi_inverse;
    } else {
        auto inv = inverse(b.chi);
        if (!inv) throw std::invalid_argument("chi is not invertible");
        chi_inv = *inv;
    }
    const Quotient& qt = b.tensor_over_base;
    auto tau = [&](const Vec& y) { return qt.section(chi_inv(kron(b.P.unit, y))); };
    auto to_quotient = [&](const Vec& ppv) { return apply_to_factor(qt.projection.matrix(), ppv, 1, dv); };

    // P (x) E inside P (x) P (x) V, read in (P (x)_M P) (x) V.
    std::vector<Vec> gen;
    for (std::size_t a = 0; a < dp; ++a)
        for (const auto& x : e.E.basis()) gen.push_back(to_quotient(kron(b.P.space.basis_vector(a), x)));
    const Matrix lift = Matrix::from_columns(qt.space.dim() * dv, gen);
    const auto s_cols = columns(s);

    std::vector<Vec> cols;
    for (std::size_t j = 0; j < dv; ++j) {
        Vec x(dp * dp * dv);
        for (const auto& term : coterms(e.fiber.rho, j)) {
            const long deg = static_cast<long>(v.degree(term.v)) * h.space().degree(term.b);
            axpy(x, term.c * Scalar::q_power(n, -deg), kron(tau(s_inv.column(term.b)), v.basis_vector(term.v)));
        }
        const auto y = solve(lift, to_quotient(x));
        if (!y) fail("tau(S^{-1} v1) (x) v0 is not in P (x)_M E for " + v[j].name);
        Vec out(dp);
        const std::size_t de = e.E.dim();
        for (std::size_t a = 0; a < dp; ++a)
            for (std::size_t k = 0; k < de; ++k) {
                const Scalar& c = (*y)[a * de + k];
                if (!c.is_zero())
                    axpy(out, c, b.P.multiply(b.P.space.basis_vector(a), b.base.push(s_cols[k], 1)));
            }
        cols.push_back(std::move(out));
    }
    return GradedMap::from_columns(v, b.P.space, cols);
}

GradedMap section_from_local(const AssociatedBundle& e, const AssociatedTrivialization& at, const GradedMap& sigma,
                             int n) {
    const Calculus& m = *e.bundle->calc_M;
    const std::size_t dv = e.fiber.V().dim();
    const auto sig = columns(sigma);
    std::vector<Vec> cols;
    for (const auto& x : e.E.basis()) {
        const Vec mv = at.theta_inv(x);
        Vec out(m.power(n + 1).dim());
        for (std::size_t k = 0; k < mv.size(); ++k)
            if (!mv[k].is_zero()) axpy(out, mv[k], m.left(m.algebra().space.basis_vector(k / dv), sig[k % dv], n));
        cols.push_back(std::move(out));
    }
    return GradedMap::from_columns(e.E.as_space(), m.power(n + 1), cols);
}

GradedMap local_from_section(const AssociatedBundle& e, const AssociatedTrivialization& at, const GradedMap& s) {
    std::vector<Vec> cols;
    for (std::size_t j = 0; j < at.phi_E.domain().dim(); ++j) cols.push_back(s(*e.E.coordinates(at.phi_E.column(j))));
    return GradedMap::from_columns(at.phi_E.domain(), s.codomain(), cols);
}

bool is_module_map(const AssociatedBundle& e, const GradedMap& s, int n) {
    const PrincipalBundle& b = *e.bundle;
    const Calculus& m = *b.calc_M;
    for (std::size_t k = 0; k < b.M.dim(); ++k) {
        const Vec mk = b.M.space.basis_vector(k);
        for (std::size_t i = 0; i < e.E.dim(); ++i) {
            const auto c = e.E.coordinates(e.act(mk, e.E.basis()[i]));
            if (!c) return false;
            if (s(*c) != m.left(mk, s.column(i), n)) return false;
        }
    }
    return true;
}

}  // namespace bgt
