#include "bgt/models.hpp"

#include <stdexcept>

namespace bgt {

namespace {

Vec kron(const Vec& a, const Vec& b) {
    Vec r(a.size() * b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            if (!b[j].is_zero()) r[i * b.size() + j] = a[i] * b[j];
    }
    return r;
}

Vec lin(const Scalar& x, const Vec& u, const Scalar& y, const Vec& v) {
    Vec r = scale(x, u);
    axpy(r, y, v);
    return r;
}

Scalar one_plus_q() { return Scalar(1) + Scalar::q(3); }

}  // namespace

Algebra line_algebra(const std::string& gen, int modulus, int degree, int length) {
    if (length < 1) throw std::invalid_argument("line algebra needs length >= 1");
    std::vector<BasisElement> basis;
    for (int k = 0; k < length; ++k) {
        std::string name = k == 0 ? "1" : (k == 1 ? gen : gen + std::to_string(k));
        basis.push_back({name, ((k * degree) % modulus + modulus) % modulus});
    }
    const GradedSpace s(modulus, basis);
    std::vector<Vec> cols;
    for (int i = 0; i < length; ++i)
        for (int j = 0; j < length; ++j) cols.push_back(i + j < length ? s.basis_vector(i + j) : s.zero());
    return Algebra(s, s.basis_vector(0), GradedMap::from_columns(tensor(s, s), s, cols));
}

Hopf primitive_line(const std::string& gen, int modulus) {
    Hopf h;
    h.algebra = line_algebra(gen, modulus, 1, modulus);
    const GradedSpace& s = h.algebra.space;
    const Algebra bb = braided_tensor_algebra(h.algebra, h.algebra);
    const Vec one = h.algebra.unit, x = s.basis_vector(1);
    const Vec dx = add(kron(x, one), kron(one, x));
    std::vector<Vec> cols{kron(one, one)};
    for (int k = 1; k < modulus; ++k) cols.push_back(bb.multiply(cols.back(), dx));
    h.comul = GradedMap::from_columns(s, tensor(s, s), cols);
    Matrix e(1, s.dim());
    e(0, 0) = 1;
    h.counit = GradedMap(s, GradedSpace::unit(modulus), e);
    h.antipode = GradedMap::identity(s);
    h.antipode = convolution_inverse(GradedMap::identity(s), h.algebra, h);
    h.antipode_inverse = inverse(h.antipode);
    return h;
}

// ---------------------------------------------------------------- anyonic

AnyonicModel::AnyonicModel() {
    auto [b, t] = trivial_bundle(line_algebra("theta", 3, 1, 3), primitive_line("xi", 3));
    bundle_ = std::move(b);
    triv_ = std::move(t);
}

Vec AnyonicModel::form(const std::vector<std::string>& names) const {
    std::vector<Vec> factors;
    for (const auto& n : names) factors.push_back(m(n));
    return calc().exact_monomial(factors);
}

GradedMap AnyonicModel::field(const Scalar& a1, const Scalar& a2, const Scalar& b1, const Scalar& b2) const {
    const GradedSpace& mm = calc().power(2);
    std::vector<Vec> cols{mm.zero(), lin(a1, form({"1", "theta"}), a2, form({"theta2", "theta2"})),
                          lin(b1, form({"1", "theta2"}), b2, form({"theta", "theta"}))};
    return GradedMap::from_columns(B().space(), mm, cols);
}

std::array<Scalar, 2> AnyonicModel::coords(const Vec& v, const Vec& e1, const Vec& e2) const {
    const auto c = solve(Matrix::from_columns(v.size(), {e1, e2}), v);
    if (!c) throw std::invalid_argument("value lies outside the two-parameter family");
    return {(*c)[0], (*c)[1]};
}

std::array<Scalar, 4> AnyonicModel::field_components(const GradedMap& a) const {
    if (!is_zero(a(B().algebra.unit))) throw std::invalid_argument("gauge field must vanish on 1");
    const auto x = coords(a.image_of("xi"), form({"1", "theta"}), form({"theta2", "theta2"}));
    const auto y = coords(a.image_of("xi2"), form({"1", "theta2"}), form({"theta", "theta"}));
    return {x[0], x[1], y[0], y[1]};
}

GradedMap AnyonicModel::gauge(const Scalar& c1, const Scalar& c2) const {
    return GradedMap::from_columns(B().space(), M().space, {M().unit, scale(c1, m("theta")), scale(c2, m("theta2"))});
}

std::array<Scalar, 2> AnyonicModel::gauge_components(const GradedMap& g) const {
    if (g.image_of("1") != M().unit) throw std::invalid_argument("gauge transformation must send 1 to 1");
    return {g.image_of("xi")[M().space.index_of("theta")], g.image_of("xi2")[M().space.index_of("theta2")]};
}

GradedMap AnyonicModel::section(const Scalar& s0, const Scalar& s1, const Scalar& s2) const {
    return GradedMap::from_columns(B().space(), M().space,
                                   {scale(s0, M().unit), scale(s1, m("theta")), scale(s2, m("theta2"))});
}

std::array<Scalar, 3> AnyonicModel::section_components(const GradedMap& s) const {
    return {s.image_of("1")[0], s.image_of("xi")[M().space.index_of("theta")],
            s.image_of("xi2")[M().space.index_of("theta2")]};
}

GradedMap AnyonicModel::flat_field(const Scalar& a1, const Scalar& b1) const {
    return field(a1, Scalar(0), b1, -(one_plus_q() * a1 * a1));
}

AnyonicModel::Canonical AnyonicModel::canonical_form(const GradedMap& a) const {
    const auto c = field_components(a);
    const GradedMap g = gauge(-c[0], -c[2] + one_plus_q() * c[0] * c[0]);
    GradedMap rep = transform_field(calc(), B(), a, g);
    const auto r = field_components(rep);
    if (!r[0].is_zero() || !r[2].is_zero()) throw std::logic_error("canonical form did not clear a1 and b1");
    return {std::move(rep), g};
}

// ---------------------------------------------------------------- composite

CompositeModel::CompositeModel(const Algebra& n) : n_(n), k_(line_algebra("theta", 3, 1, 3)), b_(primitive_line("xi", 3)) {
    if (n.modulus() != 3) throw std::invalid_argument("N must be graded modulo 3");
    for (std::size_t i = 0; i < n.dim(); ++i)
        if (n.space.degree(i) != 0) throw std::invalid_argument("N must be concentrated in degree 0");
    for (std::size_t i = 0; i < n.dim(); ++i)
        for (std::size_t j = 0; j < n.dim(); ++j)
            if (n.basis_product(i, j) != n.basis_product(j, i)) throw std::invalid_argument("N must be commutative");
    calc_ = std::make_shared<const Calculus>(braided_tensor_algebra(n_, k_));
    calc_n_ = std::make_shared<const Calculus>(n_);
    calc_k_ = std::make_shared<const Calculus>(k_);
}

Vec CompositeModel::interleave(const Vec& nn, const Vec& kk) const {
    const std::size_t dn = n_.dim(), dk = k_.dim(), dm = dn * dk;
    Vec out(dm * dm);
    for (std::size_t x = 0; x < nn.size(); ++x) {
        if (nn[x].is_zero()) continue;
        const std::size_t a = x / dn, a2 = x % dn;
        for (std::size_t y = 0; y < kk.size(); ++y) {
            if (kk[y].is_zero()) continue;
            const std::size_t c = y / dk, c2 = y % dk;
            out[(a * dk + c) * dm + (a2 * dk + c2)] += nn[x] * kk[y];
        }
    }
    return out;
}

Vec CompositeModel::element(const Vec& n, const Vec& k) const { return kron(n, k); }

GradedMap CompositeModel::field(const Field& f) const {
    const FormSpace& o1n = calc_n_->omega(1);
    if (!o1n.carrier.contains(f.A1) || !o1n.carrier.contains(f.A2))
        throw std::invalid_argument("A1 and A2 must be 1-forms on N");
    const Calculus& ck = *calc_k_;
    const Vec one = k_.unit, th = k_.element("theta"), th2 = k_.element("theta2");
    Vec x = interleave(f.A1, kron(one, th));
    axpy(x, Scalar(1), interleave(f.a1, ck.exact_monomial({one, th})));
    axpy(x, Scalar(1), interleave(f.a2, ck.exact_monomial({th2, th2})));
    Vec y = interleave(f.A2, kron(one, th2));
    axpy(y, Scalar(1), interleave(f.b1, ck.exact_monomial({one, th2})));
    axpy(y, Scalar(1), interleave(f.b2, ck.exact_monomial({th, th})));
    return GradedMap::from_columns(b_.space(), calc_->power(2), {calc_->power(2).zero(), x, y});
}

CompositeModel::Field CompositeModel::components(const GradedMap& a) const {
    if (!is_zero(a(b_.algebra.unit))) throw std::invalid_argument("gauge field must vanish on 1");
    const Calculus& ck = *calc_k_;
    const auto& o1n = calc_n_->omega(1).carrier.basis();
    const std::size_t nn = n_.dim() * n_.dim();
    const Vec one = k_.unit, th = k_.element("theta"), th2 = k_.element("theta2");
    // returns (Omega^1 N part, first N (x) N part, second N (x) N part)
    auto split = [&](const Vec& u, const Vec& c, const Vec& k1, const Vec& k2) {
        std::vector<Vec> cols;
        for (const auto& w : o1n) cols.push_back(interleave(w, c));
        for (std::size_t e = 0; e < nn; ++e) {
            Vec ev(nn);
            ev[e] = 1;
            cols.push_back(interleave(ev, k1));
        }
        for (std::size_t e = 0; e < nn; ++e) {
            Vec ev(nn);
            ev[e] = 1;
            cols.push_back(interleave(ev, k2));
        }
        const auto sol = solve(Matrix::from_columns(u.size(), cols), u);
        if (!sol) throw std::invalid_argument("value is not a 1-form of the expected shape");
        Vec w(nn), x(nn), y(nn);
        for (std::size_t i = 0; i < o1n.size(); ++i) axpy(w, (*sol)[i], o1n[i]);
        for (std::size_t e = 0; e < nn; ++e) {
            x[e] = (*sol)[o1n.size() + e];
            y[e] = (*sol)[o1n.size() + nn + e];
        }
        return std::array<Vec, 3>{w, x, y};
    };
    const auto p = split(a.image_of("xi"), kron(one, th), ck.exact_monomial({one, th}), ck.exact_monomial({th2, th2}));
    const auto r = split(a.image_of("xi2"), kron(one, th2), ck.exact_monomial({one, th2}), ck.exact_monomial({th, th}));
    return Field{p[0], r[0], p[1], p[2], r[1], r[2]};
}

GradedMap CompositeModel::gauge(const Vec& c1, const Vec& c2) const {
    return GradedMap::from_columns(b_.space(), M().space,
                                   {M().unit, element(c1, k_.element("theta")), element(c2, k_.element("theta2"))});
}

std::array<Vec, 2> CompositeModel::gauge_components(const GradedMap& g) const {
    const std::size_t dn = n_.dim(), dk = k_.dim();
    auto take = [&](const Vec& v, std::size_t k) {
        Vec c(dn);
        for (std::size_t i = 0; i < dn; ++i) c[i] = v[i * dk + k];
        if (element(c, k_.space.basis_vector(k)) != v) throw std::invalid_argument("not a gauge transformation of the expected shape");
        return c;
    };
    if (g.image_of("1") != M().unit) throw std::invalid_argument("gauge transformation must send 1 to 1");
    return {take(g.image_of("xi"), 1), take(g.image_of("xi2"), 2)};
}

GradedMap CompositeModel::section(const Vec& s0, const Vec& s1, const Vec& s2) const {
    return GradedMap::from_columns(b_.space(), M().space,
                                   {element(s0, k_.unit), element(s1, k_.element("theta")),
                                    element(s2, k_.element("theta2"))});
}

CompositeModel::Field CompositeModel::flat_family(const Vec& a, const Vec& b) const {
    const Calculus& cn = *calc_n_;
    const Scalar c = one_plus_q();
    const Vec da = cn.d(a, 0);
    Field f;
    f.A1 = da;
    f.A2 = cn.d(b, 0);
    axpy(f.A2, c, cn.d(n_.multiply(a, a), 0));
    axpy(f.A2, -c, cn.left(a, da, 1));
    f.a1 = kron(a, n_.unit);
    f.a2 = Vec(a.size() * a.size());
    f.b1 = kron(b, n_.unit);
    axpy(f.b1, c, kron(a, a));
    f.b2 = scale(-c, kron(a, a));
    return f;
}

}  // namespace bgt
