#include <catch_amalgamated.hpp>

#include "bgt/gauge.hpp"
#include "bgt/models.hpp"
#include "fixtures.hpp"

using namespace bgt;
using fx::operator+;
using fx::operator-;
using fx::operator*;

namespace {

const AnyonicModel& model() {
    static const AnyonicModel m;
    return m;
}

struct FieldDraw {
    Scalar a1, a2, b1, b2;
};

FieldDraw draw_field(fx::Draw& draw) { return {draw.scalar(), draw.scalar(), draw.scalar(), draw.scalar()}; }

GradedMap field(const FieldDraw& f) { return model().field(f.a1, f.a2, f.b1, f.b2); }

// F(xi) = a2 dtheta2 dtheta2,
// F(xi2) = (b2 + (1+q) a1^2) dtheta dtheta + (1+q) a1 a2 (theta2 dtheta2 dtheta + (dtheta) theta2 dtheta2).
Vec curvature_xi(const FieldDraw& f) { return fx::to_vec(f.a2 * fx::wedge(fx::d(2), fx::d(2)), 3); }
Vec curvature_xi2(const FieldDraw& f) {
    using fx::d;
    using fx::t;
    using fx::wedge;
    const Scalar c = fx::one_q();
    const fx::Tensor x = (f.b2 + c * f.a1 * f.a1) * wedge(d(1), d(1)) +
                         (c * f.a1 * f.a2) * (wedge(t(2), d(2), d(1)) + wedge(d(1), t(2), d(2)));
    return fx::to_vec(x, 3);
}
// The same with (dtheta) theta2 rewritten as -theta2 dtheta, which does not hold in the universal calculus.
Vec curvature_xi2_rewritten(const FieldDraw& f) {
    using fx::d;
    using fx::t;
    using fx::wedge;
    const Scalar c = fx::one_q();
    const fx::Tensor x = (f.b2 + c * f.a1 * f.a1) * wedge(d(1), d(1)) +
                         (c * f.a1 * f.a2) * (wedge(t(2), d(2), d(1)) - wedge(t(2), d(1), d(2)));
    return fx::to_vec(x, 3);
}

bool has_failure(const Report& r, const std::string& name) {
    const CheckResult* c = r.find(name);
    return c != nullptr && !c->passed;
}

}  // namespace

TEST_CASE("the anyonic bundle is a trivial braided principal bundle", "[gauge]") {
    const AnyonicModel& m = model();
    const Report r = verify_principal(m.bundle());
    INFO(r.str());
    CHECK(r.passed());
    const Report t = check_trivialization(m.bundle(), m.trivialization());
    INFO(t.str());
    CHECK(t.passed());
    CHECK(m.bundle().M.dim() == 3);
    CHECK(m.bundle().tensor_over_base.space.dim() == 27);
}

TEST_CASE("a coaction without a free part is not principal", "[gauge]") {
    const Algebra m = line_algebra("theta", 3, 1, 3);
    const Hopf b = primitive_line("xi", 3);
    const Algebra p = braided_tensor_algebra(m, b.algebra);
    const PrincipalBundle bad = make_bundle(p, trivial_coaction(p.space, b));
    const Report r = verify_principal(bad);
    CHECK(has_failure(r, "chi is bijective"));
}

TEST_CASE("the trivial connection matches the hand expansion", "[gauge]") {
    const AnyonicModel& m = model();
    const GradedMap w0 = trivial_connection(m.bundle(), m.trivialization());
    CHECK(is_zero(w0.column(0)));
    CHECK(w0.column(1) == fx::trivial_connection(1));
    CHECK(w0.column(2) == fx::trivial_connection(2));
    const Report r = check_connection(m.bundle(), w0);
    INFO(r.str());
    CHECK(r.passed());
}

TEST_CASE("gauge fields of the anyonic bundle", "[gauge]") {
    const AnyonicModel& m = model();
    CHECK(gauge_field_dimension(m.calc(), m.B()) == 4);
    CHECK(gauge_group_dimension(m.M(), m.B()) == 2);
    fx::Draw draw(21);
    for (int trial = 0; trial < 5; ++trial) {
        const FieldDraw f = draw_field(draw);
        const GradedMap a = field(f);
        using fx::d;
        using fx::t;
        CHECK(a.column(1) == fx::to_vec(f.a1 * d(1) + f.a2 * fx::wedge(t(2), d(2)), 2));
        CHECK(a.column(2) == fx::to_vec(f.b1 * d(2) + f.b2 * fx::wedge(t(1), d(1)), 2));
        const auto c = m.field_components(a);
        CHECK(c == std::array<Scalar, 4>{f.a1, f.a2, f.b1, f.b2});
    }
}

TEST_CASE("connections, projections and gauge fields correspond", "[gauge]") {
    const AnyonicModel& m = model();
    fx::Draw draw(3);
    for (int trial = 0; trial < 3; ++trial) {
        const GradedMap a = field(draw_field(draw));
        const GradedMap w = connection_from_field(m.bundle(), m.trivialization(), a);
        const Report rc = check_connection(m.bundle(), w);
        INFO(rc.str());
        CHECK(rc.passed());
        const GradedMap pi = projection_from_connection(m.bundle(), w);
        const Report rp = check_projection(m.bundle(), pi);
        INFO(rp.str());
        CHECK(rp.passed());
        CHECK(compose(pi, pi) == pi);
        for (const Vec& u : m.bundle().calc_P->omega(1).carrier.basis())
            CHECK(m.bundle().chi_tilde(pi(u)) == m.bundle().chi_tilde(u));
        CHECK(connection_from_projection(m.bundle(), pi) == w);
        CHECK(field_from_connection(m.bundle(), m.trivialization(), w) == a);
    }
}

TEST_CASE("a connection off the strong family is rejected", "[gauge]") {
    const AnyonicModel& m = model();
    const GradedMap w0 = trivial_connection(m.bundle(), m.trivialization());
    const GradedMap doubled = Scalar(2) * w0;
    CHECK_FALSE(check_connection(m.bundle(), doubled).passed());
    CHECK_THROWS_AS(field_from_connection(m.bundle(), m.trivialization(), doubled), NotStrong);
}

TEST_CASE("curvature of the anyonic gauge fields", "[gauge]") {
    const AnyonicModel& m = model();
    fx::Draw draw(17);
    for (int trial = 0; trial < 20; ++trial) {
        const FieldDraw f = draw_field(draw);
        const GradedMap fc = curvature(m.calc(), m.B(), field(f));
        CHECK(is_zero(fc.column(0)));
        CHECK(fc.column(1) == curvature_xi(f));
        CHECK(fc.column(2) == curvature_xi2(f));
        CHECK(fc.column(2) != curvature_xi2_rewritten(f));
    }
}

TEST_CASE("(dtheta) theta2 is -theta dtheta2, not -theta2 dtheta", "[gauge]") {
    using fx::d;
    using fx::t;
    using fx::wedge;
    const Vec lhs = fx::to_vec(wedge(d(1), t(2)), 2);
    CHECK(lhs == fx::to_vec(Scalar(-1) * wedge(t(1), d(2)), 2));
    CHECK(lhs != fx::to_vec(Scalar(-1) * wedge(t(2), d(1)), 2));
    const Calculus& c = model().calc();
    const Vec th = model().m("theta"), th2 = model().m("theta2");
    CHECK(c.right(c.d(th, 0), 1, th2) == fx::to_vec(wedge(d(1), t(2)), 2));
}

TEST_CASE("Bianchi identity on random fields", "[gauge]") {
    const AnyonicModel& m = model();
    fx::Draw draw(50);
    for (int trial = 0; trial < 50; ++trial) {
        const GradedMap res = bianchi_residual(m.calc(), m.B(), field(draw_field(draw)));
        CHECK(is_zero(res.matrix().column(0)));
        CHECK(is_zero(res.matrix().column(1)));
        CHECK(is_zero(res.matrix().column(2)));
    }
}

TEST_CASE("flat locus", "[gauge]") {
    const AnyonicModel& m = model();
    fx::Draw draw(8);
    for (int trial = 0; trial < 10; ++trial) {
        const Scalar a1 = draw.scalar(), b1 = draw.scalar();
        const GradedMap flat = m.flat_field(a1, b1);
        CHECK(m.field_components(flat) == std::array<Scalar, 4>{a1, Scalar(0), b1, Scalar(0) - fx::one_q() * a1 * a1});
        CHECK(is_zero(curvature(m.calc(), m.B(), flat).matrix().column(1)));
        CHECK(is_zero(curvature(m.calc(), m.B(), flat).matrix().column(2)));

        // Leaving the locus in either coordinate gives nonzero curvature.
        const Scalar e = draw.nonzero();
        const GradedMap off_a2 = m.field(a1, e, b1, Scalar(0) - fx::one_q() * a1 * a1);
        const GradedMap off_b2 = m.field(a1, Scalar(0), b1, e - fx::one_q() * a1 * a1);
        const GradedMap f1 = curvature(m.calc(), m.B(), off_a2);
        const GradedMap f2 = curvature(m.calc(), m.B(), off_b2);
        CHECK_FALSE(is_zero(f1.column(1)));
        CHECK(is_zero(f2.column(1)));
        CHECK_FALSE(is_zero(f2.column(2)));
    }
}

TEST_CASE("gauge group law and inverse", "[gauge]") {
    const AnyonicModel& m = model();
    fx::Draw draw(12);
    for (int trial = 0; trial < 10; ++trial) {
        const Scalar c1 = draw.scalar(), c2 = draw.scalar(), e1 = draw.scalar(), e2 = draw.scalar();
        const GradedMap g = gauge_compose(m.M(), m.B(), m.gauge(c1, c2), m.gauge(e1, e2));
        CHECK(m.gauge_components(g) == std::array<Scalar, 2>{c1 + e1, c2 + e2 + fx::one_q() * c1 * e1});
        const GradedMap inv = gauge_inverse(m.M(), m.B(), m.gauge(c1, c2));
        CHECK(gauge_compose(m.M(), m.B(), m.gauge(c1, c2), inv) == m.gauge(Scalar(0), Scalar(0)));
    }
}

TEST_CASE("gauge transformation of the anyonic fields", "[gauge]") {
    const AnyonicModel& m = model();
    const Scalar q1 = fx::one_q();
    fx::Draw draw(13);
    for (int trial = 0; trial < 10; ++trial) {
        const FieldDraw f = draw_field(draw);
        const Scalar c1 = draw.scalar(), c2 = draw.scalar();
        const GradedMap ag = transform_field(m.calc(), m.B(), field(f), m.gauge(c1, c2));
        const std::array<Scalar, 4> expect{f.a1 + c1, f.a2, f.b1 + c2 + q1 * f.a1 * c1,
                                           f.b2 - q1 * (c1 * c1 + Scalar(2) * c1 * f.a1)};
        CHECK(m.field_components(ag) == expect);

        // Composing two transformations agrees with transforming by the product.
        const Scalar e1 = draw.scalar(), e2 = draw.scalar();
        const GradedMap twice = transform_field(m.calc(), m.B(), ag, m.gauge(e1, e2));
        const GradedMap once = transform_field(m.calc(), m.B(), field(f),
                                               gauge_compose(m.M(), m.B(), m.gauge(c1, c2), m.gauge(e1, e2)));
        CHECK(twice == once);
    }
}

TEST_CASE("canonical form of a gauge field", "[gauge]") {
    const AnyonicModel& m = model();
    fx::Draw draw(14);
    for (int trial = 0; trial < 10; ++trial) {
        const FieldDraw f = draw_field(draw);
        const auto can = m.canonical_form(field(f));
        const std::array<Scalar, 4> expect{Scalar(0), f.a2, Scalar(0), f.b2 + fx::one_q() * f.a1 * f.a1};
        CHECK(m.field_components(can.representative) == expect);
        CHECK(transform_field(m.calc(), m.B(), field(f), can.gamma) == can.representative);
        CHECK(m.gauge_components(can.gamma) ==
              std::array<Scalar, 2>{Scalar(0) - f.a1, Scalar(0) - f.b1 + fx::one_q() * f.a1 * f.a1});
    }
}

TEST_CASE("flat fields are gauge equivalent to zero", "[gauge]") {
    const AnyonicModel& m = model();
    const GradedMap zero = m.field(0, 0, 0, 0);
    fx::Draw draw(15);
    for (int trial = 0; trial < 10; ++trial) {
        const Scalar a1 = draw.scalar(), b1 = draw.scalar();
        const GradedMap flat = m.flat_field(a1, b1);
        const auto g = gauge_to_zero(m.calc(), m.B(), flat);
        REQUIRE(g.has_value());
        CHECK(transform_field(m.calc(), m.B(), flat, *g) == zero);
        CHECK(m.gauge_components(*g) == std::array<Scalar, 2>{Scalar(0) - a1, Scalar(0) - b1 + fx::one_q() * a1 * a1});

        const FieldDraw f{a1, draw.nonzero(), b1, draw.scalar()};
        CHECK_FALSE(gauge_to_zero(m.calc(), m.B(), field(f)).has_value());
    }
}

TEST_CASE("global gauge transformations", "[gauge]") {
    const AnyonicModel& m = model();
    const PrincipalBundle& b = m.bundle();
    const Trivialization& t = m.trivialization();

    SECTION("the identity gauge gives Theta = id") {
        const GlobalGauge g = global_gauge(b, t, m.gauge(0, 0));
        CHECK(g.gamma_global == compose(b.P.unit_map(), b.B().counit));
        CHECK(g.theta == GradedMap::identity(b.P.space));
    }

    fx::Draw draw(16);
    for (int trial = 0; trial < 3; ++trial) {
        const GradedMap gamma = m.gauge(draw.scalar(), draw.scalar());
        const GradedMap gamma2 = m.gauge(draw.scalar(), draw.scalar());
        const GlobalGauge g = global_gauge(b, t, gamma);
        const GlobalGauge g2 = global_gauge(b, t, gamma2);
        const Report r = check_global(b, g);
        INFO(r.str());
        CHECK(r.passed());

        // Theta o Phi = gamma * Phi
        CHECK(compose(g.theta, t.phi) == convolution(compose(b.base.map(), gamma), t.phi, b.P, b.B()));

        // Theta_{Gamma * Gamma'} = Theta_{Gamma'} o Theta_Gamma
        const GradedMap prod = convolution(g.gamma_global, g2.gamma_global, b.P, b.B());
        CHECK(theta_of(b, prod) == compose(g2.theta, g.theta));

        // (Theta (x) Theta) o Pi = Pi^Gamma o (Theta (x) Theta)
        const GradedMap w = connection_from_field(b, t, field(draw_field(draw)));
        const GradedMap pi = projection_from_connection(b, w);
        const PrincipalBundle pg = transformed_bundle(b, g.theta);
        CHECK(verify_principal(pg).passed());
        const GradedMap wg = transport_connection(b, w, g.theta);
        CHECK(check_connection(pg, wg).passed());
        const GradedMap pig = projection_from_connection(pg, wg);
        const GradedMap tt = tensor_map(g.theta, g.theta);
        CHECK(compose(tt, pi) == compose(pig, tt));
    }
}

TEST_CASE("cocycle cross products reproduce the bundle", "[gauge]") {
    const AnyonicModel& m = model();
    const Algebra tp = transport_product(m.bundle(), m.trivialization());
    const Cocycle c = extract_cocycle(tp, m.M(), m.B());
    CHECK(cocycle_cross_product(m.M(), m.B(), c).mult == tp.mult);
    // The tensor product trivialization has a trivial cocycle.
    for (std::size_t j = 0; j < c.cocycle.domain().dim(); ++j)
        CHECK(c.cocycle.column(j) == (j == 0 ? m.M().unit : m.M().space.zero()));

    fx::Draw draw(18);
    const Scalar c1 = draw.nonzero(), c2 = draw.scalar();
    const GlobalGauge g = global_gauge(m.bundle(), m.trivialization(), gauge_inverse(m.M(), m.B(), m.gauge(c1, c2)));
    PrincipalBundle pg = transformed_bundle(m.bundle(), g.theta);
    const Trivialization tg = make_trivialization(pg, m.trivialization().phi);
    const Algebra tpg = transport_product(pg, tg);
    const Cocycle cg = extract_cocycle(tpg, m.M(), m.B());
    CHECK(cocycle_cross_product(m.M(), m.B(), cg).mult == tpg.mult);
    CHECK_FALSE(is_zero(cg.cocycle.image_of("xi.xi")));
}
