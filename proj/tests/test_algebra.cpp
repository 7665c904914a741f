#include <catch_amalgamated.hpp>

#include "bgt/algebra.hpp"
#include "bgt/models.hpp"
#include "fixtures.hpp"

using namespace bgt;

namespace {

const Hopf& line() {
    static const Hopf h = primitive_line("xi", 3);
    return h;
}

bool report_has_failure(const Report& r, const std::string& name) {
    const CheckResult* c = r.find(name);
    return c != nullptr && !c->passed;
}

}  // namespace

TEST_CASE("coproduct of the anyonic line matches the hand expansion", "[algebra]") {
    const Hopf& b = line();
    for (int k = 0; k < 3; ++k) CHECK(b.comul.column(static_cast<std::size_t>(k)) == fx::delta(k));
    for (int k = 0; k < 3; ++k) CHECK(b.antipode.column(static_cast<std::size_t>(k)) == fx::antipode(k));
    CHECK(b.epsilon(b.algebra.element("xi")).is_zero());
    CHECK(b.epsilon(b.algebra.unit) == Scalar(1));
}

TEST_CASE("the anyonic line passes every braided group axiom", "[algebra]") {
    const Report r = check_hopf(line());
    INFO(r.str());
    CHECK(r.passed());
    CHECK(r.checks().size() >= 12);
}

TEST_CASE("check_hopf names the broken axiom", "[algebra]") {
    Hopf broken = line();
    // The unbraided coproduct xi2 |-> xi2 (x) 1 + 2 xi (x) xi + 1 (x) xi2 is not multiplicative.
    Matrix m = broken.comul.matrix();
    m(4, 2) = 2;
    broken.comul = GradedMap(broken.space(), broken.comul.codomain(), m);
    const Report r = check_hopf(broken);
    CHECK_FALSE(r.passed());
    CHECK(report_has_failure(r, "comultiplication is multiplicative"));
    const CheckResult* c = r.find("comultiplication is multiplicative");
    REQUIRE(c != nullptr);
    CHECK_FALSE(c->witness.empty());
}

TEST_CASE("braided tensor product P = M (x) B has the expected relations", "[algebra]") {
    const Algebra m = line_algebra("theta", 3, 1, 3);
    const Algebra p = braided_tensor_algebra(m, line().algebra);
    REQUIRE(p.dim() == 9);
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
            for (int c = 0; c < 3; ++c)
                for (int e = 0; e < 3; ++e)
                    CHECK(p.basis_product(static_cast<std::size_t>(3 * a + b), static_cast<std::size_t>(3 * c + e)) ==
                          fx::p_product(a, b, c, e));
    const Vec theta = p.element("theta.1"), xi = p.element("1.xi");
    CHECK(is_zero(p.multiply(theta, p.multiply(theta, theta))));
    CHECK(is_zero(p.multiply(xi, p.multiply(xi, xi))));
    CHECK(p.multiply(xi, theta) == scale(fx::q(), p.multiply(theta, xi)));
    CHECK(check_algebra(p).passed());
}

TEST_CASE("P is a comodule algebra under id (x) Delta", "[algebra]") {
    const Algebra m = line_algebra("theta", 3, 1, 3);
    const Algebra p = braided_tensor_algebra(m, line().algebra);
    const Coaction rho{p.space, line(), tensor_map(GradedMap::identity(m.space), line().comul)};
    const Report r = check_comodule_algebra(p, rho);
    INFO(r.str());
    CHECK(r.passed());
    // theta |-> theta (x) 1, xi |-> xi (x) 1 + 1 (x) xi
    const GradedSpace pb = tensor(p.space, line().space());
    Vec expect(pb.dim());
    expect[pb.index_of("1.xi.1")] = 1;
    expect[pb.index_of("1.1.xi")] = 1;
    CHECK(rho.rho.image_of("1.xi") == expect);
}

TEST_CASE("an unbraided coaction on P is rejected", "[algebra]") {
    // rho = id (x) Delta on the ordinary (commutative) tensor product is not multiplicative.
    const Algebra m = line_algebra("theta", 3, 1, 3);
    const Algebra b = line().algebra;
    Matrix mult(9, 81);
    for (int a = 0; a < 3; ++a)
        for (int c = 0; c < 3; ++c)
            for (int x = 0; x < 3; ++x)
                for (int y = 0; y < 3; ++y)
                    if (a + x < 3 && c + y < 3) mult(3 * (a + x) + c + y, (3 * a + c) * 9 + 3 * x + y) = 1;
    const GradedSpace ps = tensor(m.space, b.space);
    Vec unit(9);
    unit[0] = 1;
    const Algebra p(ps, unit, GradedMap(tensor(ps, ps), ps, mult));
    const Coaction rho{p.space, line(), tensor_map(GradedMap::identity(m.space), line().comul)};
    const Report r = check_comodule_algebra(p, rho);
    CHECK(report_has_failure(r, "coaction is multiplicative"));
}

TEST_CASE("convolution inverses and the gauge group law", "[algebra]") {
    const Algebra m = line_algebra("theta", 3, 1, 3);
    fx::Draw draw(11);
    for (int trial = 0; trial < 10; ++trial) {
        const Scalar c1 = draw.scalar(), c2 = draw.scalar(), d1 = draw.scalar(), d2 = draw.scalar();
        auto gamma = [&](const Scalar& x, const Scalar& y) {
            Matrix g(3, 3);
            g(0, 0) = 1;
            g(1, 1) = x;
            g(2, 2) = y;
            return GradedMap(line().space(), m.space, g);
        };
        const GradedMap prod = convolution(gamma(c1, c2), gamma(d1, d2), m, line());
        CHECK(prod == gamma(c1 + d1, c2 + d2 + fx::one_q() * c1 * d1));
        const GradedMap inv = convolution_inverse(gamma(c1, c2), m, line());
        CHECK(convolution(inv, gamma(c1, c2), m, line()) == convolution_unit(m, line()));
        CHECK(inv == gamma(Scalar(0) - c1, fx::one_q() * c1 * c1 - c2));
    }
}

TEST_CASE("convolution inverse fails on a non-invertible map", "[algebra]") {
    const Algebra m = line_algebra("theta", 3, 1, 3);
    const GradedMap zero = GradedMap::zero(line().space(), m.space);
    CHECK_THROWS_AS(convolution_inverse(zero, m, line()), NoInverse);
}

TEST_CASE("anyonic comodules from beta", "[algebra]") {
    fx::Draw draw(5);
    const GradedSpace v(3, {{"e0", 0}, {"e1", 1}, {"e2", 2}, {"f0", 0}});
    for (int trial = 0; trial < 10; ++trial) {
        // beta lowers degree: e2 -> e1 -> e0, f0 -> e2 (degree 0 -> 2), nilpotent of order 3 on the e-chain.
        Matrix m(4, 4);
        m(1, 2) = draw.scalar();  // e2 -> e1
        m(0, 1) = draw.scalar();  // e1 -> e0
        const GradedMap beta(v, v, m, -1);
        const Coaction c = anyonic_comodule(v, beta, line());
        const Report r = check_coaction(c);
        INFO(r.str());
        CHECK(r.passed());
    }
    Matrix cyc(4, 4);
    cyc(1, 2) = 1;
    cyc(0, 1) = 1;
    cyc(2, 0) = 1;  // e0 -> e2 closes a cycle, beta^3 != 0
    CHECK_THROWS_AS(anyonic_comodule(v, GradedMap(v, v, cyc, -1), line()), std::invalid_argument);
    CHECK_THROWS_AS(anyonic_comodule(v, GradedMap::identity(v), line()), std::invalid_argument);
}

TEST_CASE("beta with beta(xi) = 1 reproduces the coregular coaction", "[algebra]") {
    const GradedSpace& bs = line().space();
    Matrix m(3, 3);
    m(0, 1) = 1;
    m(1, 2) = fx::one_q();
    CHECK(anyonic_comodule(bs, GradedMap(bs, bs, m, -1), line()).rho == line().comul);
    m(0, 1) = 0;
    CHECK(anyonic_comodule(bs, GradedMap(bs, bs, m, -1), line()).rho != line().comul);
}

TEST_CASE("beta = 0 gives the trivial coaction", "[algebra]") {
    const GradedSpace v(3, {{"a", 0}, {"b", 1}});
    const Coaction c = anyonic_comodule(v, GradedMap::zero(v, v, -1), line());
    CHECK(c.rho == trivial_coaction(v, line()).rho);
}

TEST_CASE("adjoint and tensor coactions are comodules", "[algebra]") {
    const Coaction ad = adjoint_coaction(line());
    CHECK(check_coaction(ad).passed());
    const Coaction reg = regular_coaction(line());
    const Coaction both = tensor_coaction({&reg, &ad});
    const Report r = check_coaction(both);
    INFO(r.str());
    CHECK(r.passed());
    fx::Draw draw(2);
    const Vec x = draw.vec(9);
    CHECK(coact_tensor({&reg, &ad}, x) == both.rho(x));
}
