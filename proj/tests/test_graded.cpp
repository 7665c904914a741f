#include <catch_amalgamated.hpp>

#include <random>

#include "bgt/graded.hpp"

using namespace bgt;

namespace {

GradedSpace line(const std::string& g) { return GradedSpace(3, {{"1", 0}, {g, 1}, {g + "2", 2}}); }

// Multiplication of k[t]/t^3 written out by hand.
GradedMap truncated_mult(const GradedSpace& m) {
    Matrix a(3, 9);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (i + j < 3) a(i + j, i * 3 + j) = 1;
    return GradedMap(tensor(m, m), m, a);
}

GradedMap random_graded_map(std::mt19937& rng, const GradedSpace& dom, const GradedSpace& cod, int density) {
    std::uniform_int_distribution<int> coin(0, 9), val(-3, 3);
    Matrix a(cod.dim(), dom.dim());
    for (std::size_t i = 0; i < cod.dim(); ++i)
        for (std::size_t j = 0; j < dom.dim(); ++j)
            if (cod.degree(i) == dom.degree(j) && coin(rng) < density)
                a(i, j) = Scalar(val(rng)) + Scalar(val(rng)) * Scalar::q(3);
    return GradedMap(dom, cod, a);
}

}  // namespace

TEST_CASE("tensor products of graded spaces", "[graded]") {
    const GradedSpace m = line("theta"), b = line("xi");
    const GradedSpace mb = tensor(m, b);
    CHECK(mb.dim() == 9);
    CHECK(mb[mb.index_of("theta.xi")].degree == 2);
    CHECK(mb[mb.index_of("theta2.xi2")].degree == 1);
    CHECK(mb[3].name == "theta.1");  // left factor major
    CHECK(tensor(GradedSpace::unit(3), m) == m);
    CHECK(tensor(m, GradedSpace::unit(3)) == m);
    CHECK_THROWS_AS(tensor(m, GradedSpace(4, {{"x", 1}})), std::invalid_argument);
}

TEST_CASE("degree homogeneity is enforced", "[graded]") {
    const GradedSpace m = line("theta");
    Matrix a(3, 3);
    a(1, 1) = 1;
    CHECK_NOTHROW(GradedMap(m, m, a));
    a(1, 2) = 1;
    CHECK_THROWS_AS(GradedMap(m, m, a), std::logic_error);
    Matrix lower(3, 3);
    lower(0, 1) = 1;
    lower(1, 2) = 1;
    CHECK_NOTHROW(GradedMap(m, m, lower, -1));
}

TEST_CASE("interchange law for tensor maps", "[graded]") {
    std::mt19937 rng(3);
    const GradedSpace m = line("theta"), b = line("xi");
    for (int trial = 0; trial < 10; ++trial) {
        const auto f = random_graded_map(rng, m, m, 6), g = random_graded_map(rng, b, b, 6);
        const auto f2 = random_graded_map(rng, m, m, 6), g2 = random_graded_map(rng, b, b, 6);
        CHECK(compose(tensor_map(GradedMap::identity(m), g), tensor_map(f, GradedMap::identity(b))) == tensor_map(f, g));
        CHECK(compose(tensor_map(f, g), tensor_map(f2, g2)) == tensor_map(compose(f, f2), compose(g, g2)));
    }
}

TEST_CASE("anyonic braiding", "[graded][braiding]") {
    const GradedSpace m = line("theta"), b = line("xi");
    const Scalar q = Scalar::q(3);
    const auto psi = braiding(b, m);
    const Vec out = psi(tensor(b, m).basis_vector(tensor(b, m).index_of("xi.theta")));
    Vec expected = tensor(m, b).zero();
    expected[tensor(m, b).index_of("theta.xi")] = q;
    CHECK(out == expected);

    CHECK(compose(braiding_inverse(b, m), psi) == GradedMap::identity(tensor(b, m)));
    CHECK(compose(psi, braiding_inverse(b, m)) == GradedMap::identity(tensor(m, b)));

    // A degree-zero factor braids by the plain flip.
    const GradedSpace w(3, {{"u", 0}, {"v", 0}});
    const auto flip = braiding(m, w);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 2; ++j) CHECK(flip.matrix()(j * 3 + i, i * 2 + j) == Scalar(1));

    // Hexagon: Psi_{U(x)V,W} = (Psi_{U,W} (x) id)(id (x) Psi_{V,W}).
    const GradedSpace u = line("a"), v = line("b"), x = line("c");
    const auto lhs = braiding(tensor(u, v), x);
    const auto rhs = compose(tensor_map(braiding(u, x), GradedMap::identity(v)),
                             tensor_map(GradedMap::identity(u), braiding(v, x)));
    CHECK(lhs == rhs);
    const auto lhs2 = braiding(u, tensor(v, x));
    const auto rhs2 = compose(tensor_map(GradedMap::identity(v), braiding(u, x)),
                              tensor_map(braiding(u, v), GradedMap::identity(x)));
    CHECK(lhs2 == rhs2);
}

TEST_CASE("kernels of truncated multiplication", "[graded][elimination]") {
    const GradedSpace m = line("theta");
    const auto mult = truncated_mult(m);
    const Subspace k = kernel(mult);
    CHECK(k.dim() == 6);
    // hand-built span list
    const GradedSpace mm = tensor(m, m);
    auto e = [&](const std::string& n) { return mm.basis_vector(mm.index_of(n)); };
    const Subspace expected = Subspace::span(
        mm, {e("theta.theta2"), e("theta2.theta"), sub(e("1.theta"), e("theta.1")), e("theta2.theta2"),
             sub(e("1.theta2"), e("theta2.1")), sub(e("theta.theta"), e("theta2.1"))});
    CHECK(k == expected);
    for (const auto& row : k.basis()) CHECK(mm.homogeneous_degree(row).has_value());

    CHECK(kernel(GradedMap::identity(m)).dim() == 0);
    CHECK(kernel(tensor_map(mult, GradedMap::identity(m))).dim() == 18);
}

TEST_CASE("rank-nullity on random graded maps", "[graded][elimination][property]") {
    std::mt19937 rng(11);
    const GradedSpace dom = tensor(line("a"), line("b"));
    const GradedSpace cod = line("c");
    for (int trial = 0; trial < 30; ++trial) {
        const auto f = random_graded_map(rng, dom, tensor(cod, cod), 2);
        const Subspace k = kernel(f);
        const Subspace im = image(f);
        CHECK(k.dim() + im.dim() == dom.dim());
        for (const auto& v : k.basis()) CHECK(is_zero(f(v)));
        CHECK(rank(f.matrix()) == im.dim());
    }
}

TEST_CASE("canonical form makes equal spans syntactically equal", "[graded][elimination]") {
    std::mt19937 rng(5);
    const GradedSpace v = tensor(line("a"), line("b"));
    const auto f = random_graded_map(rng, v, v, 3);
    const Subspace im = image(f);
    std::vector<Vec> mixed;
    for (std::size_t i = 0; i < im.dim(); ++i) {
        Vec w = im.basis()[i];
        for (std::size_t j = 0; j < i; ++j) axpy(w, Scalar(static_cast<long>(j) + 2) + Scalar::q(3), im.basis()[j]);
        mixed.push_back(w);
    }
    CHECK(Subspace::span(v, mixed) == im);
}

TEST_CASE("intersections, sums, quotients and solves", "[graded][elimination]") {
    const GradedSpace v(3, {{"a", 0}, {"b", 0}, {"c", 0}, {"d", 1}});
    auto e = [&](std::size_t i) { return v.basis_vector(i); };
    const Subspace s = Subspace::span(v, {e(0), e(1)});
    const Subspace t = Subspace::span(v, {add(e(1), e(2)), e(3)});
    CHECK(intersect(s, t).dim() == 0);
    CHECK(sum(s, t).dim() == 4);
    const Subspace u = Subspace::span(v, {add(e(0), e(1)), e(2)});
    const Subspace su = intersect(s, u);
    CHECK(su.dim() == 1);
    CHECK(su.contains(add(e(0), e(1))));
    CHECK(is_subspace_of(su, s));
    CHECK(is_subspace_of(su, u));

    const Quotient qt = quotient(s);
    CHECK(qt.space.dim() == 2);
    for (const auto& row : s.basis()) CHECK(is_zero(qt.projection(row)));
    CHECK(compose(qt.projection, qt.section) == GradedMap::identity(qt.space));
    CHECK(image(qt.projection).dim() == qt.space.dim());

    const GradedSpace m = line("theta");
    const auto mult = truncated_mult(m);
    const auto x = solve(mult, m.basis_vector(2));
    REQUIRE(x.has_value());
    CHECK(mult(*x) == m.basis_vector(2));
    Matrix singular(2, 2);
    singular(0, 0) = 1;
    CHECK_FALSE(solve(singular, Vec{Scalar(0), Scalar(1)}).has_value());

    Matrix inv_test(3, 3);
    inv_test(0, 0) = 1;
    inv_test(1, 1) = Scalar::q(3);
    inv_test(2, 2) = Scalar(1) + Scalar::q(3);
    const auto f = GradedMap(m, m, inv_test);
    const auto finv = inverse(f);
    REQUIRE(finv.has_value());
    CHECK(compose(*finv, f) == GradedMap::identity(m));
    CHECK_FALSE(inverse(GradedMap::zero(m, m)).has_value());
}

TEST_CASE("vector formatting", "[graded]") {
    const GradedSpace m = line("theta");
    Vec v = m.zero();
    CHECK(format_vector(m, v) == "0");
    v[0] = 1;
    v[1] = Scalar(1) + Scalar::q(3);
    v[2] = Scalar(-2);
    CHECK(format_vector(m, v) == "1 + (1+q) theta - 2 theta2");
}
