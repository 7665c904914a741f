#include <catch_amalgamated.hpp>

#include "bgt/calculus.hpp"
#include "bgt/models.hpp"
#include "fixtures.hpp"

using namespace bgt;
using fx::operator+;
using fx::operator-;
using fx::operator*;

namespace {

const Calculus& calc_m() {
    static const Calculus c(line_algebra("theta", 3, 1, 3));
    return c;
}

const Calculus& calc_p() {
    static const Calculus c(braided_tensor_algebra(line_algebra("theta", 3, 1, 3), primitive_line("xi", 3).algebra));
    return c;
}

}  // namespace

TEST_CASE("Omega^1 of the anyonic line is the listed six-dimensional space", "[calculus]") {
    using fx::mono;
    const FormSpace& o1 = calc_m().omega(1);
    REQUIRE(o1.dim() == 6);
    const std::vector<fx::Tensor> listed = {
        mono({1, 2}), mono({2, 1}),                //
        mono({0, 1}) - mono({1, 0}), mono({2, 2}),  //
        mono({0, 2}) - mono({2, 0}), mono({1, 1}) - mono({2, 0}),
    };
    std::vector<Vec> vs;
    for (const auto& t : listed) vs.push_back(fx::to_vec(t, 2));
    CHECK(Subspace::span(calc_m().power(2), vs) == o1.carrier);
    CHECK(o1.dim_in_degree(0) == 2);
    CHECK(o1.dim_in_degree(1) == 2);
    CHECK(o1.dim_in_degree(2) == 2);

    // The second form of the list: theta d theta2, theta2 d theta | d theta, theta2 d theta2 | d theta2, theta d theta.
    const std::vector<fx::Tensor> exact = {
        fx::wedge(fx::t(1), fx::d(2)), fx::wedge(fx::t(2), fx::d(1)), fx::d(1),
        fx::wedge(fx::t(2), fx::d(2)), fx::d(2),                      fx::wedge(fx::t(1), fx::d(1)),
    };
    std::vector<Vec> es;
    for (const auto& t : exact) es.push_back(fx::to_vec(t, 2));
    CHECK(Subspace::span(calc_m().power(2), es) == o1.carrier);
}

TEST_CASE("dimensions of universal forms", "[calculus]") {
    // Omega^n A = A (x) (A/k)^{(x)n} for the universal calculus.
    CHECK(calc_m().omega(2).dim() == 3 * 2 * 2);
    CHECK(calc_p().omega(1).dim() == 9 * 8);
    CHECK(calc_p().omega(2).dim() == 9 * 8 * 8);
}

TEST_CASE("exact monomials agree with the hand-built forms", "[calculus]") {
    const Calculus& c = calc_m();
    const Algebra& m = c.algebra();
    const Vec one = m.unit, th = m.element("theta"), th2 = m.element("theta2");
    CHECK(c.exact_monomial({one, th}) == fx::to_vec(fx::d(1), 2));
    CHECK(c.exact_monomial({th2, th2}) == fx::to_vec(fx::wedge(fx::t(2), fx::d(2)), 2));
    CHECK(c.exact_monomial({one, th2, th}) == fx::to_vec(fx::wedge(fx::d(2), fx::d(1)), 3));
    CHECK(c.exact_monomial({th2, th2, th}) == fx::to_vec(fx::wedge(fx::t(2), fx::d(2), fx::d(1)), 3));
}

TEST_CASE("d squares to zero and lands in forms", "[calculus]") {
    fx::Draw draw(7);
    for (const Calculus* c : {&calc_m(), &calc_p()}) {
        for (int trial = 0; trial < 5; ++trial) {
            const Vec p = draw.vec(c->dim());
            const Vec dp = c->d(p, 0);
            CHECK(c->omega(1).carrier.contains(dp));
            CHECK(is_zero(c->d(dp, 1)));

            const FormSpace& o1 = c->omega(1);
            const Vec u = o1.carrier.from_coordinates(draw.vec(o1.dim()));
            const Vec du = c->d(u, 1);
            CHECK(c->omega(2).carrier.contains(du));
            CHECK(is_zero(c->d(du, 2)));
        }
    }
}

TEST_CASE("graded Leibniz rule", "[calculus]") {
    fx::Draw draw(9);
    const Calculus& c = calc_m();
    const FormSpace& o1 = c.omega(1);
    for (int trial = 0; trial < 10; ++trial) {
        const Vec p = draw.vec(3);
        const Vec u = o1.carrier.from_coordinates(draw.vec(o1.dim()));
        // d(p u) = dp u + p du
        const Vec lhs = c.d(c.left(p, u, 1), 1);
        const Vec rhs = add(c.wedge(c.d(p, 0), 1, u, 1), c.left(p, c.d(u, 1), 2));
        CHECK(lhs == rhs);
        // d(u v) = du v - u dv for 1-forms u, v
        const Vec v = o1.carrier.from_coordinates(draw.vec(o1.dim()));
        const Vec l2 = c.d(c.wedge(u, 1, v, 1), 2);
        const Vec r2 = sub(c.wedge(c.d(u, 1), 2, v, 1), c.wedge(u, 1, c.d(v, 1), 2));
        CHECK(l2 == r2);
    }
}

TEST_CASE("extending d as a module map is the identity on forms", "[calculus]") {
    fx::Draw draw(4);
    const Calculus& c = calc_p();
    auto h = [&](std::size_t x) { return c.d(c.algebra().space.basis_vector(x), 0); };
    for (int n = 1; n <= 2; ++n) {
        const FormSpace& on = c.omega(n);
        const Vec u = on.carrier.from_coordinates(draw.vec(on.dim()));
        CHECK(c.extend(h, u, n) == u);
    }
}

TEST_CASE("form coordinates reject non-forms", "[calculus]") {
    const Calculus& c = calc_m();
    Vec one_one(9);
    one_one[0] = 1;  // 1 (x) 1 is not in the kernel of the product
    CHECK_THROWS_AS(c.form(one_one, 1), std::logic_error);
    const Vec dth = fx::to_vec(fx::d(1), 2);
    const Form f = c.form(dth, 1);
    CHECK(f.ambient() == dth);
}

TEST_CASE("horizontal forms of the trivial bundle", "[calculus]") {
    const Calculus& c = calc_p();
    const Algebra m = line_algebra("theta", 3, 1, 3);
    const Hopf b = primitive_line("xi", 3);
    const GradedMap incl = tensor_map(GradedMap::identity(m.space), b.algebra.unit_map());
    const Horizontal h = horizontal_subspaces(c, incl);
    // (Omega^1 M) P = Omega^1 M (x) B and Omega^1 P / P(Omega^1 M)P = P (x) ker eps.
    CHECK(h.right.dim() == 6 * 3);
    CHECK(h.both.dim() == 72 - 9 * 2);
    CHECK(is_subspace_of(h.right, h.both));
    CHECK(is_subspace_of(h.both, c.omega(1).carrier));
    CHECK(h.right == c.base_forms_right(incl, 1));
}

TEST_CASE("forms print as m0 dm1 ... dmn", "[calculus]") {
    const Calculus& c = calc_m();
    using fx::operator+;
    using fx::operator-;
    using fx::operator*;
    CHECK(format_form(c, fx::to_vec(fx::d(1), 2), 1) == "dtheta");
    CHECK(format_form(c, fx::to_vec(fx::wedge(fx::t(2), fx::d(2)), 2), 1) == "theta2 dtheta2");
    CHECK(format_form(c, fx::to_vec(fx::one_q() * fx::wedge(fx::d(1), fx::d(1)), 3), 2) == "(1+q) dtheta dtheta");
    CHECK(format_form(c, fx::to_vec(Scalar(-2) * fx::wedge(fx::t(1), fx::d(2)) - fx::d(1), 2), 1) ==
          "-dtheta - 2 theta dtheta2");
    CHECK(format_form(c, fx::to_vec(fx::t(0) - fx::q() * fx::t(2), 1), 0) == "1 - q theta2");
    CHECK(format_form(c, Vec(9), 1) == "0");
    CHECK(format_form(calc_p(), calc_p().d(calc_p().algebra().element("theta.xi"), 0), 1) == "d(theta.xi)");
}
