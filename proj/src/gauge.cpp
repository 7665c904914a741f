#include "bgt/gauge.hpp"

#include "detail.hpp"

namespace bgt {

namespace {

using namespace detail;

[[noreturn]] void fail(const std::string& what) { throw AssertionFailure(what); }

}  // namespace

// ---------------------------------------------------------------- Embedding

Embedding::Embedding(GradedMap incl) : incl_(std::move(incl)) {
    const GradedSpace& m = incl_.domain();
    const GradedSpace& p = incl_.codomain();
    const Subspace s = Subspace::span(p, columns(incl_));
    if (s.dim() != m.dim()) throw std::invalid_argument("embedding is not injective");
    Matrix r(m.dim(), p.dim());
    for (std::size_t k = 0; k < s.dim(); ++k) {
        const auto c = solve(incl_, s.basis()[k]);
        for (std::size_t i = 0; i < m.dim(); ++i) r(i, s.pivots()[k]) = (*c)[i];
    }
    retract_ = GradedMap(p, m, std::move(r));
}

Vec Embedding::push(const Vec& v, int factors) const {
    const std::size_t dm = incl_.domain().dim(), dp = incl_.codomain().dim();
    Vec x = v;
    for (int t = 0; t < factors; ++t) x = apply_to_factor(incl_.matrix(), x, ipow(dp, t), ipow(dm, factors - 1 - t));
    return x;
}

std::optional<Vec> Embedding::pull_factor(const Vec& v, std::size_t left, std::size_t right) const {
    Vec x = apply_to_factor(retract_.matrix(), v, left, right);
    if (apply_to_factor(incl_.matrix(), x, left, right) != v) return std::nullopt;
    return x;
}

std::optional<Vec> Embedding::pull(const Vec& v, int factors) const {
    const std::size_t dm = incl_.domain().dim(), dp = incl_.codomain().dim();
    Vec x = v;
    for (int t = 0; t < factors; ++t) {
        auto y = pull_factor(x, ipow(dm, t), ipow(dp, factors - 1 - t));
        if (!y) return std::nullopt;
        x = std::move(*y);
    }
    return x;
}

// ---------------------------------------------------------------- bundles

Vec PrincipalBundle::coact_pp(const Vec& x) const { return coact_tensor({&rho, &rho}, x); }

Subspace invariant_subalgebra(const Algebra& p, const Coaction& rho) {
    return kernel(rho.rho - tensor_map(id(p.space), rho.hopf.algebra.unit_map()));
}

PrincipalBundle make_bundle(Algebra p, Coaction rho, std::optional<std::pair<Algebra, GradedMap>> base) {
    PrincipalBundle b;
    b.P = std::move(p);
    b.rho = std::move(rho);
    b.invariants = invariant_subalgebra(b.P, b.rho);
    if (base) {
        if (image(base->second) != b.invariants)
            throw std::invalid_argument("the given base algebra does not span the invariants");
        b.M = base->first;
        b.base = Embedding(base->second);
    } else {
        const GradedSpace ms = b.invariants.as_space();
        const auto& rows = b.invariants.basis();
        const std::size_t dm = ms.dim();
        std::vector<Vec> cols(dm * dm);
        for (std::size_t i = 0; i < dm; ++i)
            for (std::size_t j = 0; j < dm; ++j) {
                auto c = b.invariants.coordinates(b.P.multiply(rows[i], rows[j]));
                if (!c) throw std::logic_error("invariants are not closed under the product");
                cols[i * dm + j] = std::move(*c);
            }
        auto unit = b.invariants.coordinates(b.P.unit);
        if (!unit) throw std::logic_error("invariants do not contain the unit");
        b.M = Algebra(ms, *unit, GradedMap::from_columns(tensor(ms, ms), ms, cols));
        b.base = Embedding(b.invariants.inclusion());
    }

    const GradedSpace& ps = b.P.space;
    const std::size_t dp = ps.dim(), dm = b.M.dim();
    const GradedSpace pp = tensor(ps, ps);
    std::vector<Vec> rels;
    for (std::size_t k = 0; k < dm; ++k) {
        const Vec m = b.base.map().column(k);
        for (std::size_t i = 0; i < dp; ++i) {
            const Vec pm = b.P.multiply(ps.basis_vector(i), m);
            for (std::size_t j = 0; j < dp; ++j) {
                const Vec mp = b.P.multiply(m, ps.basis_vector(j));
                Vec r = kron(pm, ps.basis_vector(j));
                axpy(r, Scalar(-1), kron(ps.basis_vector(i), mp));
                if (!is_zero(r)) rels.push_back(std::move(r));
            }
        }
    }
    b.relations = Subspace::span(pp, std::move(rels));
    b.tensor_over_base = quotient(b.relations);

    const Hopf& h = b.B();
    const std::size_t nb = h.dim();
    const GradedSpace pb = tensor(ps, h.space());
    std::vector<Vec> chi_cols;
    for (std::size_t i = 0; i < dp; ++i)
        for (std::size_t j = 0; j < dp; ++j) {
            Vec out(pb.dim());
            const Vec r = b.rho.rho.column(j);
            for (std::size_t k = 0; k < r.size(); ++k) {
                if (r[k].is_zero()) continue;
                const std::size_t a = k / nb, c = k % nb;
                const Vec& prod = b.P.basis_product(i, a);
                for (std::size_t x = 0; x < dp; ++x)
                    if (!prod[x].is_zero()) out[x * nb + c] += r[k] * prod[x];
            }
            chi_cols.push_back(std::move(out));
        }
    b.chi_tilde = GradedMap::from_columns(pp, pb, chi_cols);
    b.chi = compose(b.chi_tilde, b.tensor_over_base.section);
    b.chi_inverse = inverse(b.chi);

    b.calc_P = std::make_shared<const Calculus>(b.P);
    b.calc_M = std::make_shared<const Calculus>(b.M);
    b.horizontal = std::make_shared<const Horizontal>(horizontal_subspaces(*b.calc_P, b.base.map()));
    b.ad = adjoint_coaction(h);
    return b;
}

Report verify_principal(const PrincipalBundle& b) {
    Report r("principal bundle");
    {
        const Report sub = check_comodule_algebra(b.P, b.rho, "");
        for (const auto& c : sub.checks()) r.add(c);
    }
    r.add("invariants contain the unit", b.invariants.contains(b.P.unit), "1 is not invariant");
    {
        std::string witness;
        for (const auto& x : b.invariants.basis()) {
            for (const auto& y : b.invariants.basis())
                if (!b.invariants.contains(b.P.multiply(x, y))) {
                    witness = format_vector(b.P.space, x) + " times " + format_vector(b.P.space, y);
                    break;
                }
            if (!witness.empty()) break;
        }
        r.add("invariants are closed under the product", witness.empty(), witness);
    }
    {
        std::string witness;
        for (const auto& v : b.relations.basis())
            if (!is_zero(b.chi_tilde(v))) {
                witness = "chi_tilde does not vanish on " + format_vector(b.relations.ambient(), v);
                break;
            }
        r.add("chi is well defined on P (x)_M P", witness.empty(), witness);
    }
    const std::size_t rk = rank(b.chi.matrix());
    const std::size_t want = b.chi.codomain().dim();
    const bool bij = rk == want && rk == b.chi.domain().dim();
    r.add("chi is bijective", bij,
          "not a principal bundle: chi has rank " + std::to_string(rk) + " on a " +
              std::to_string(b.chi.domain().dim()) + "-dimensional space, target dimension " + std::to_string(want));
    return r;
}

// ---------------------------------------------------------------- trivialisations

Trivialization make_trivialization(PrincipalBundle& b, const GradedMap& phi, std::optional<GradedMap> phi_inv) {
    const Hopf& h = b.B();
    const Algebra& p = b.P;
    if (phi.domain() != h.space() || phi.codomain() != p.space) fail("trivialization must map B to P");
    if (phi(h.algebra.unit) != p.unit) fail("trivialization is not unital: phi(1) != 1");
    if (compose(b.rho.rho, phi) != compose(tensor_map(phi, id(h.space())), h.comul))
        fail("trivialization is not equivariant: rho o phi != (phi (x) id) o Delta");
    if (!phi_inv) {
        try {
            phi_inv = convolution_inverse(phi, p, h);
        } catch (const NoInverse&) {
            fail("trivialization is not convolution invertible");
        }
    }
    const GradedMap e = convolution_unit(p, h);
    if (convolution(phi, *phi_inv, p, h) != e) fail("phi * phi^{-1} != eta eps");
    if (convolution(*phi_inv, phi, p, h) != e) fail("phi^{-1} * phi != eta eps");

    Trivialization t;
    t.phi = phi;
    t.phi_inv = *phi_inv;
    const GradedSpace& ms = b.M.space;
    const std::size_t dm = ms.dim(), nb = h.dim(), dp = p.dim();
    const GradedSpace mb = tensor(ms, h.space());
    const auto phi_cols = columns(phi);
    const auto phi_inv_cols = columns(*phi_inv);

    std::vector<Vec> iso_cols;
    for (std::size_t i = 0; i < dm; ++i)
        for (std::size_t j = 0; j < nb; ++j) iso_cols.push_back(p.multiply(b.base.map().column(i), phi_cols[j]));
    t.iso = GradedMap::from_columns(mb, p.space, iso_cols);

    std::vector<Vec> inv_cols;
    for (std::size_t x = 0; x < dp; ++x) {
        Vec out(dp * nb);
        const Vec r = b.rho.rho.column(x);
        for (std::size_t k = 0; k < r.size(); ++k) {
            if (r[k].is_zero()) continue;
            const std::size_t a = k / nb, c = k % nb;
            const Vec dc = h.comul.column(c);
            for (std::size_t l = 0; l < dc.size(); ++l) {
                if (dc[l].is_zero()) continue;
                const Vec left = p.multiply(p.space.basis_vector(a), phi_inv_cols[l / nb]);
                axpy(out, r[k] * dc[l], kron(left, h.space().basis_vector(l % nb)));
            }
        }
        auto pulled = b.base.pull_factor(out, 1, nb);
        if (!pulled) fail("iso^{-1} does not land in M (x) B on " + p.space[x].name);
        inv_cols.push_back(std::move(*pulled));
    }
    t.iso_inv = GradedMap::from_columns(p.space, mb, inv_cols);
    if (compose(t.iso, t.iso_inv) != id(p.space)) fail("iso o iso^{-1} != id");
    if (compose(t.iso_inv, t.iso) != id(mb)) fail("iso^{-1} o iso != id");

    const GradedSpace pb = tensor(p.space, h.space());
    const Quotient& qt = b.tensor_over_base;
    std::vector<Vec> ci_cols;
    for (std::size_t i = 0; i < dp; ++i)
        for (std::size_t j = 0; j < nb; ++j) {
            Vec rep(dp * dp);
            const Vec dj = h.comul.column(j);
            for (std::size_t l = 0; l < dj.size(); ++l) {
                if (dj[l].is_zero()) continue;
                const Vec left = p.multiply(p.space.basis_vector(i), phi_inv_cols[l / nb]);
                axpy(rep, dj[l], kron(left, phi_cols[l % nb]));
            }
            ci_cols.push_back(qt.projection(rep));
        }
    const GradedMap chi_inv = GradedMap::from_columns(pb, qt.space, ci_cols);
    if (compose(b.chi, chi_inv) != id(pb)) fail("chi o chi^{-1} != id");
    if (compose(chi_inv, b.chi) != id(qt.space)) fail("chi^{-1} o chi != id");
    b.chi_inverse = chi_inv;
    return t;
}

Report check_trivialization(const PrincipalBundle& b, const Trivialization& t) {
    Report r("trivialization");
    const Hopf& h = b.B();
    r.add("phi is unital", t.phi(h.algebra.unit) == b.P.unit, format_vector(b.P.space, t.phi(h.algebra.unit)));
    add_equality(r, "phi is equivariant", compose(b.rho.rho, t.phi), compose(tensor_map(t.phi, id(h.space())), h.comul));
    const GradedMap e = convolution_unit(b.P, h);
    add_equality(r, "phi * phi^{-1} = eta eps", convolution(t.phi, t.phi_inv, b.P, h), e);
    add_equality(r, "phi^{-1} * phi = eta eps", convolution(t.phi_inv, t.phi, b.P, h), e);
    add_equality(r, "iso o iso^{-1} = id", compose(t.iso, t.iso_inv), id(b.P.space));
    add_equality(r, "iso^{-1} o iso = id", compose(t.iso_inv, t.iso), id(t.iso.domain()));
    if (b.chi_inverse) {
        add_equality(r, "chi o chi^{-1} = id", compose(b.chi, *b.chi_inverse), id(b.chi.codomain()));
        add_equality(r, "chi^{-1} o chi = id", compose(*b.chi_inverse, b.chi), id(b.chi.domain()));
    } else {
        r.add("chi o chi^{-1} = id", false, "chi is not invertible");
    }
    return r;
}

std::pair<PrincipalBundle, Trivialization> trivial_bundle(const Algebra& m, const Hopf& b) {
    Algebra p = braided_tensor_algebra(m, b.algebra);
    Coaction rho{p.space, b, tensor_map(id(m.space), b.comul)};
    GradedMap incl = tensor_map(id(m.space), b.algebra.unit_map());
    PrincipalBundle bundle = make_bundle(std::move(p), std::move(rho), std::make_pair(m, incl));
    const GradedMap phi = tensor_map(m.unit_map(), id(b.space()));
    const GradedMap phi_inv = tensor_map(m.unit_map(), b.antipode);
    Trivialization t = make_trivialization(bundle, phi, phi_inv);
    return {std::move(bundle), std::move(t)};
}

// ---------------------------------------------------------------- connections

GradedMap trivial_connection(const PrincipalBundle& b, const Trivialization& t) {
    const Calculus& c = *b.calc_P;
    return convolve(t.phi_inv, d_after(c, t.phi, 0), b.B().comul, wedge_op(c, 0, 1), c.power(2));
}

GradedMap connection_from_field(const PrincipalBundle& b, const Trivialization& t, const GradedMap& a) {
    const Calculus& c = *b.calc_P;
    const Hopf& h = b.B();
    if (!is_zero(a(h.algebra.unit))) throw std::invalid_argument("gauge field must vanish on 1");
    std::vector<Vec> cols;
    for (std::size_t j = 0; j < a.domain().dim(); ++j) cols.push_back(b.base.push(a.column(j), 2));
    const GradedMap ap = GradedMap::from_columns(h.space(), c.power(2), cols);
    const GradedMap x = convolve(t.phi_inv, ap, h.comul, wedge_op(c, 0, 1), c.power(2));
    return trivial_connection(b, t) + convolve(x, t.phi, h.comul, wedge_op(c, 1, 0), c.power(2));
}

GradedMap field_from_connection(const PrincipalBundle& b, const Trivialization& t, const GradedMap& omega) {
    const Calculus& c = *b.calc_P;
    const Hopf& h = b.B();
    const GradedMap alpha = omega - trivial_connection(b, t);
    const GradedMap x = convolve(t.phi, alpha, h.comul, wedge_op(c, 0, 1), c.power(2));
    const GradedMap ap = convolve(x, t.phi_inv, h.comul, wedge_op(c, 1, 0), c.power(2));
    std::vector<Vec> cols;
    for (std::size_t j = 0; j < ap.domain().dim(); ++j) {
        auto pulled = b.base.pull(ap.column(j), 2);
        if (!pulled) throw NotStrong("image not in Omega^1 M (on " + h.space()[j].name + ")");
        cols.push_back(std::move(*pulled));
    }
    return GradedMap::from_columns(h.space(), b.calc_M->power(2), cols);
}

GradedMap projection_from_connection(const PrincipalBundle& b, const GradedMap& omega) {
    const Calculus& c = *b.calc_P;
    const std::size_t nb = b.B().dim();
    const auto om = columns(omega);
    const GradedSpace& pp = c.power(2);
    std::vector<Vec> cols;
    for (std::size_t j = 0; j < pp.dim(); ++j) {
        Vec out(pp.dim());
        const Vec x = b.chi_tilde.column(j);
        for (std::size_t k = 0; k < x.size(); ++k) {
            if (x[k].is_zero() || is_zero(om[k % nb])) continue;
            axpy(out, x[k], c.left(b.P.space.basis_vector(k / nb), om[k % nb], 1));
        }
        cols.push_back(std::move(out));
    }
    return GradedMap::from_columns(pp, pp, cols);
}

GradedMap connection_from_projection(const PrincipalBundle& b, const GradedMap& pi) {
    if (!b.chi_inverse) throw std::logic_error("chi is not invertible");
    const Hopf& h = b.B();
    std::vector<Vec> cols;
    for (std::size_t j = 0; j < h.dim(); ++j) {
        Vec v = h.space().basis_vector(j);
        axpy(v, -h.epsilon(v), h.algebra.unit);
        const Vec rep = b.tensor_over_base.section((*b.chi_inverse)(kron(b.P.unit, v)));
        cols.push_back(pi(rep));
    }
    return GradedMap::from_columns(h.space(), b.calc_P->power(2), cols);
}

Report check_connection(const PrincipalBundle& b, const GradedMap& omega) {
    Report r("connection");
    const Hopf& h = b.B();
    const Calculus& c = *b.calc_P;
    {
        std::vector<Vec> cols;
        for (std::size_t j = 0; j < h.dim(); ++j) {
            Vec v = h.space().basis_vector(j);
            axpy(v, -h.epsilon(v), h.algebra.unit);
            cols.push_back(kron(b.P.unit, v));
        }
        add_equality(r, "chi_tilde o omega = 1 (x) (id - eta eps)", compose(b.chi_tilde, omega),
                     GradedMap::from_columns(h.space(), b.chi_tilde.codomain(), cols));
    }
    {
        std::vector<Vec> cols;
        for (std::size_t j = 0; j < h.dim(); ++j) cols.push_back(b.coact_pp(omega.column(j)));
        const GradedSpace ppb = tensor(c.power(2), h.space());
        add_equality(r, "omega is Ad-equivariant", GradedMap::from_columns(h.space(), ppb, cols),
                     compose(tensor_map(omega, id(h.space())), b.ad.rho));
    }
    {
        const GradedMap pi = projection_from_connection(b, omega);
        std::string witness;
        for (std::size_t j = 0; j < b.P.dim(); ++j) {
            const Vec dp = c.d(b.P.space.basis_vector(j), 0);
            const Vec hor = sub(dp, pi(dp));
            if (!b.horizontal->right.contains(hor)) {
                witness = "(id - Pi) d" + b.P.space[j].name + " = " + format_vector(c.power(2), hor) +
                          " is not in (Omega^1 M)P";
                break;
            }
        }
        r.add("omega is strong", witness.empty(), witness);
    }
    return r;
}

Report check_projection(const PrincipalBundle& b, const GradedMap& pi) {
    Report r("projection");
    const Calculus& c = *b.calc_P;
    const FormSpace& o1 = c.omega(1);
    const GradedSpace& pp = c.power(2);
    const auto& basis = o1.carrier.basis();
    auto first_bad = [&](const std::function<std::optional<std::string>(const Vec&)>& test) {
        for (const auto& u : basis)
            if (auto w = test(u)) return *w;
        return std::string();
    };
    auto report = [&](const std::string& name, const std::function<std::optional<std::string>(const Vec&)>& test) {
        const std::string w = first_bad(test);
        r.add(name, w.empty(), w);
    };
    auto show = [&](const Vec& v) { return format_vector(pp, v); };

    report("projection maps Omega^1 P to itself", [&](const Vec& u) -> std::optional<std::string> {
        if (o1.carrier.contains(pi(u))) return std::nullopt;
        return "Pi(" + show(u) + ") is not a 1-form";
    });
    report("projection is idempotent", [&](const Vec& u) -> std::optional<std::string> {
        const Vec x = pi(u);
        if (pi(x) == x) return std::nullopt;
        return "on " + show(u);
    });
    {
        std::string w;
        for (const auto& u : b.horizontal->both.basis())
            if (!is_zero(pi(u))) {
                w = "Pi(" + show(u) + ") = " + show(pi(u));
                break;
            }
        r.add("projection vanishes on P(Omega^1 M)P", w.empty(), w);
    }
    report("chi_tilde o Pi = chi_tilde", [&](const Vec& u) -> std::optional<std::string> {
        if (b.chi_tilde(pi(u)) == b.chi_tilde(u)) return std::nullopt;
        return "on " + show(u);
    });
    report("projection is a left P-module map", [&](const Vec& u) -> std::optional<std::string> {
        for (std::size_t j = 0; j < b.P.dim(); ++j) {
            const Vec e = b.P.space.basis_vector(j);
            if (pi(c.left(e, u, 1)) != c.left(e, pi(u), 1)) return b.P.space[j].name + " times " + show(u);
        }
        return std::nullopt;
    });
    report("projection is a comodule map", [&](const Vec& u) -> std::optional<std::string> {
        const Vec lhs = b.coact_pp(pi(u));
        const Vec rhs = apply_to_factor(pi.matrix(), b.coact_pp(u), 1, b.B().dim());
        if (lhs == rhs) return std::nullopt;
        return "on " + show(u);
    });
    {
        const GradedMap restricted = compose(pi, o1.carrier.inclusion());
        std::vector<Vec> ker;
        const Subspace kr = kernel(restricted);
        for (const auto& k : kr.basis()) ker.push_back(o1.carrier.from_coordinates(k));
        const Subspace kp = Subspace::span(pp, std::move(ker));
        r.add("kernel of the projection is P(Omega^1 M)P", kp == b.horizontal->both,
              "dim ker = " + std::to_string(kp.dim()) + ", dim P(Omega^1 M)P = " +
                  std::to_string(b.horizontal->both.dim()));
    }
    return r;
}

Vec horizontal_part(const PrincipalBundle& b, const GradedMap& pi, const Vec& u, int n) {
    const Calculus& c = *b.calc_P;
    return c.extend(
        [&](std::size_t x) {
            const Vec dx = c.d(b.P.space.basis_vector(x), 0);
            return sub(dx, pi(dx));
        },
        u, n);
}

// ---------------------------------------------------------------- local theory

std::size_t gauge_field_dimension(const Calculus& m, const Hopf& b) {
    const FormSpace& o1 = m.omega(1);
    const int n = b.modulus();
    std::size_t total = 0;
    for (int d = 0; d < n; ++d) total += b.space().dim_in_degree(d) * o1.dim_in_degree(d);
    return total - o1.dim_in_degree(0);
}

std::size_t gauge_group_dimension(const Algebra& m, const Hopf& b) {
    const int n = b.modulus();
    std::size_t total = 0;
    for (int d = 0; d < n; ++d) total += b.space().dim_in_degree(d) * m.space.dim_in_degree(d);
    return total - m.space.dim_in_degree(0);
}

GradedMap curvature(const Calculus& m, const Hopf& b, const GradedMap& a) {
    return d_after(m, a, 1) + convolve(a, a, b.comul, wedge_op(m, 1, 1), m.power(3));
}

GradedMap bianchi_residual(const Calculus& m, const Hopf& b, const GradedMap& a) {
    const GradedMap f = curvature(m, b, a);
    return d_after(m, f, 2) + convolve(a, f, b.comul, wedge_op(m, 1, 2), m.power(4)) -
           convolve(f, a, b.comul, wedge_op(m, 2, 1), m.power(4));
}

GradedMap gauge_compose(const Algebra& m, const Hopf& b, const GradedMap& g1, const GradedMap& g2) {
    return convolution(g1, g2, m, b);
}

GradedMap gauge_inverse(const Algebra& m, const Hopf& b, const GradedMap& g) { return convolution_inverse(g, m, b); }

GradedMap transform_field(const Calculus& m, const Hopf& b, const GradedMap& a, const GradedMap& gamma) {
    const GradedMap gi = gauge_inverse(m.algebra(), b, gamma);
    const GradedMap x = convolve(gi, a, b.comul, wedge_op(m, 0, 1), m.power(2));
    const GradedMap y = convolve(x, gamma, b.comul, wedge_op(m, 1, 0), m.power(2));
    return y + convolve(gi, d_after(m, gamma, 0), b.comul, wedge_op(m, 0, 1), m.power(2));
}

std::optional<GradedMap> gauge_to_zero(const Calculus& m, const Hopf& b, const GradedMap& a) {
    const Algebra& alg = m.algebra();
    const GradedSpace& bs = b.space();
    std::optional<std::size_t> unit;
    for (std::size_t j = 0; j < bs.dim(); ++j)
        if (b.algebra.unit == bs.basis_vector(j)) unit = j;
    if (!unit) throw std::invalid_argument("gauge_to_zero needs the unit of B to be a basis vector");

    // A^gamma = gamma^{-1} * (dgamma + A * gamma), so A^gamma = 0 is linear in gamma.
    auto residual = [&](const GradedMap& g) {
        return flatten(d_after(m, g, 0) + convolve(a, g, b.comul, wedge_op(m, 1, 0), m.power(2)));
    };
    Matrix g0(alg.dim(), bs.dim());
    for (std::size_t i = 0; i < alg.dim(); ++i) g0(i, *unit) = alg.unit[i];
    const Vec rhs = scale(Scalar(-1), residual(GradedMap(bs, alg.space, g0)));
    std::vector<std::pair<std::size_t, std::size_t>> unknowns;
    std::vector<Vec> cols;
    for (std::size_t j = 0; j < bs.dim(); ++j) {
        if (j == *unit) continue;
        for (std::size_t i = 0; i < alg.dim(); ++i) {
            if (alg.space.degree(i) != bs.degree(j)) continue;
            Matrix e(alg.dim(), bs.dim());
            e(i, j) = 1;
            unknowns.emplace_back(i, j);
            cols.push_back(residual(GradedMap(bs, alg.space, e)));
        }
    }
    std::optional<Vec> sol;
    if (cols.empty())
        sol = is_zero(rhs) ? std::optional<Vec>(Vec()) : std::nullopt;
    else
        sol = solve(Matrix::from_columns(rhs.size(), cols), rhs);
    if (!sol) return std::nullopt;
    for (std::size_t k = 0; k < unknowns.size(); ++k) g0(unknowns[k].first, unknowns[k].second) = (*sol)[k];
    GradedMap gamma(bs, alg.space, g0);
    try {
        const GradedMap t = transform_field(m, b, a, gamma);
        if (!is_zero(flatten(t))) return std::nullopt;
    } catch (const NoInverse&) {
        return std::nullopt;
    }
    return gamma;
}

// ---------------------------------------------------------------- global gauge

GradedMap theta_of(const PrincipalBundle& b, const GradedMap& gamma_global) {
    const std::size_t nb = b.B().dim();
    const auto g = columns(gamma_global);
    std::vector<Vec> cols;
    for (std::size_t x = 0; x < b.P.dim(); ++x) {
        Vec out(b.P.dim());
        const Vec r = b.rho.rho.column(x);
        for (std::size_t k = 0; k < r.size(); ++k)
            if (!r[k].is_zero()) axpy(out, r[k], b.P.multiply(b.P.space.basis_vector(k / nb), g[k % nb]));
        cols.push_back(std::move(out));
    }
    return GradedMap::from_columns(b.P.space, b.P.space, cols);
}

GlobalGauge global_gauge(const PrincipalBundle& b, const Trivialization& t, const GradedMap& gamma) {
    const Hopf& h = b.B();
    std::vector<Vec> cols;
    for (std::size_t j = 0; j < h.dim(); ++j) cols.push_back(b.base.push(gamma.column(j), 1));
    const GradedMap gp = GradedMap::from_columns(h.space(), b.P.space, cols);
    GlobalGauge g;
    g.gamma_global = convolution(convolution(t.phi_inv, gp, b.P, h), t.phi, b.P, h);
    g.theta = theta_of(b, g.gamma_global);
    return g;
}

Report check_global(const PrincipalBundle& b, const GlobalGauge& g) {
    Report r("global gauge transformation");
    const Hopf& h = b.B();
    const Vec g1 = g.gamma_global(h.algebra.unit);
    r.add("Gamma is unital", g1 == b.P.unit, "Gamma(1) = " + format_vector(b.P.space, g1));
    bool invertible = true;
    try {
        convolution_inverse(g.gamma_global, b.P, h);
    } catch (const NoInverse&) {
        invertible = false;
    }
    r.add("Gamma is convolution invertible", invertible, "no convolution inverse");
    add_equality(r, "Gamma is Ad-equivariant", compose(b.rho.rho, g.gamma_global),
                 compose(tensor_map(g.gamma_global, id(h.space())), b.ad.rho));
    r.add("Theta is invertible", inverse(g.theta).has_value(), "Theta is singular");
    r.add("Theta is unital", g.theta(b.P.unit) == b.P.unit, "Theta(1) = " + format_vector(b.P.space, g.theta(b.P.unit)));
    {
        std::string w;
        for (std::size_t k = 0; k < b.M.dim() && w.empty(); ++k) {
            const Vec m = b.base.map().column(k);
            for (std::size_t j = 0; j < b.P.dim(); ++j) {
                const Vec p = b.P.space.basis_vector(j);
                if (g.theta(b.P.multiply(m, p)) != b.P.multiply(m, g.theta(p))) {
                    w = b.M.space[k].name + " times " + b.P.space[j].name;
                    break;
                }
            }
        }
        r.add("Theta is a left M-module map", w.empty(), w);
    }
    add_equality(r, "Theta intertwines the coaction", compose(b.rho.rho, g.theta),
                 compose(tensor_map(g.theta, id(h.space())), b.rho.rho));
    return r;
}

PrincipalBundle transformed_bundle(const PrincipalBundle& b, const GradedMap& theta) {
    const auto inv = inverse(theta);
    if (!inv) throw std::invalid_argument("Theta is not invertible");
    const GradedMap mult = compose(theta, compose(b.P.mult, tensor_map(*inv, *inv)));
    Algebra pg(b.P.space, theta(b.P.unit), mult);
    return make_bundle(std::move(pg), b.rho, std::make_pair(b.M, b.base.map()));
}

GradedMap transport_connection(const PrincipalBundle& b, const GradedMap& omega, const GradedMap& theta) {
    const std::size_t dp = b.P.dim();
    std::vector<Vec> cols;
    for (std::size_t j = 0; j < omega.domain().dim(); ++j) {
        Vec v = apply_to_factor(theta.matrix(), omega.column(j), 1, dp);
        cols.push_back(apply_to_factor(theta.matrix(), v, dp, 1));
    }
    return GradedMap::from_columns(omega.domain(), omega.codomain(), cols);
}

// ---------------------------------------------------------------- cocycles

Algebra transport_product(const PrincipalBundle& b, const Trivialization& t) {
    const GradedSpace& mb = t.iso.domain();
    const auto iso = columns(t.iso);
    std::vector<Vec> cols;
    for (std::size_t x = 0; x < mb.dim(); ++x)
        for (std::size_t y = 0; y < mb.dim(); ++y) cols.push_back(t.iso_inv(b.P.multiply(iso[x], iso[y])));
    return Algebra(mb, t.iso_inv(b.P.unit), GradedMap::from_columns(tensor(mb, mb), mb, cols));
}

Cocycle extract_cocycle(const Algebra& tp, const Algebra& m, const Hopf& b) {
    const GradedSpace& bs = b.space();
    const std::size_t nb = bs.dim();
    auto project = [&](const Vec& v) { return apply_to_factor(b.counit.matrix(), v, m.dim(), 1); };
    std::vector<Vec> act, coc;
    for (std::size_t i = 0; i < nb; ++i) {
        const Vec one_b = kron(m.unit, bs.basis_vector(i));
        for (std::size_t k = 0; k < m.dim(); ++k)
            act.push_back(project(tp.multiply(one_b, kron(m.space.basis_vector(k), b.algebra.unit))));
        for (std::size_t j = 0; j < nb; ++j)
            coc.push_back(project(tp.multiply(one_b, kron(m.unit, bs.basis_vector(j)))));
    }
    return Cocycle{GradedMap::from_columns(tensor(bs, m.space), m.space, act),
                   GradedMap::from_columns(tensor(bs, bs), m.space, coc)};
}

Algebra cocycle_cross_product(const Algebra& m, const Hopf& b, const Cocycle& c) {
    const GradedSpace& bs = b.space();
    const GradedSpace& ms = m.space;
    const std::size_t nb = bs.dim(), dm = ms.dim();
    const int n = m.modulus();
    const GradedSpace mb = tensor(ms, bs);
    const GradedMap delta2 = compose(tensor_map(b.comul, id(bs)), b.comul);
    const auto act = columns(c.action);
    const auto coc = columns(c.cocycle);
    std::vector<Vec> cols;
    for (std::size_t i = 0; i < dm; ++i)
        for (std::size_t j = 0; j < nb; ++j)
            for (std::size_t k = 0; k < dm; ++k)
                for (std::size_t l = 0; l < nb; ++l) {
                    // (m_i (x) b_j)(m_k (x) b_l)
                    Vec out(mb.dim());
                    const Vec d2 = delta2.column(j);
                    const Vec d1 = b.comul.column(l);
                    for (std::size_t s = 0; s < d2.size(); ++s) {
                        if (d2[s].is_zero()) continue;
                        const std::size_t j1 = s / (nb * nb), j2 = (s / nb) % nb, j3 = s % nb;
                        const long cross = static_cast<long>(bs.degree(j2) + bs.degree(j3)) * ms.degree(k);
                        const Vec acted = m.multiply(ms.basis_vector(i), act[j1 * dm + k]);
                        if (is_zero(acted)) continue;
                        for (std::size_t u = 0; u < d1.size(); ++u) {
                            if (d1[u].is_zero()) continue;
                            const std::size_t l1 = u / nb, l2 = u % nb;
                            const Scalar coef = d2[s] * d1[u] *
                                                Scalar::q_power(n, cross + static_cast<long>(bs.degree(j3)) * bs.degree(l1));
                            const Vec left = m.multiply(acted, coc[j2 * nb + l1]);
                            const Vec& right = b.algebra.basis_product(j3, l2);
                            axpy(out, coef, kron(left, right));
                        }
                    }
                    cols.push_back(std::move(out));
                }
    return Algebra(mb, kron(m.unit, b.algebra.unit), GradedMap::from_columns(tensor(mb, mb), mb, cols));
}

}  // namespace bgt
