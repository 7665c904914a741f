#include <catch_amalgamated.hpp>

#include "bgt/modelfile.hpp"
#include "bgt/models.hpp"
#include "fixtures.hpp"

using namespace bgt;

namespace {

const std::string data_dir = BGT_DATA_DIR;

const ModelFile& anyonic() {
    static const ModelFile m = load_model(data_dir + "/models/anyonic.model");
    return m;
}

int error_line(std::string_view text) {
    try {
        parse_model(text);
    } catch (const ModelError& e) {
        return e.line;
    }
    return -1;
}

std::string error_text(std::string_view text) {
    try {
        parse_model(text);
    } catch (const ModelError& e) {
        return e.what();
    }
    return {};
}

const char* small_algebra = R"(modulus 3
algebra M
  basis 1:0 theta:1 theta2:2
  unit 1
  mul theta theta -> theta2
)";

}  // namespace

TEST_CASE("literals accept parenthesised and negated sums") {
    CHECK(parse_literal("(1+q)", 3) == fx::one_q());
    CHECK(parse_literal("-(1+q)", 3) == -fx::one_q());
    CHECK(parse_literal(" 1/2 ", 3) == Scalar(Rational(1, 2)));
    CHECK(parse_literal("((q))", 3) == fx::q());
}

TEST_CASE("linear combinations over tensor bases") {
    const GradedSpace b = primitive_line("xi", 3).space();
    const GradedSpace bb = tensor(b, b);
    CHECK(parse_combination("0", bb) == bb.zero());
    CHECK(parse_combination("xi2.1 + (1+q) xi.xi + 1.xi2", bb) == fx::delta(2));
    CHECK(parse_combination("-xi", b) == fx::antipode(1));
    CHECK(parse_combination("q xi2", b) == fx::antipode(2));
    Vec v = b.zero();
    v[1] = Scalar(Rational(-3, 4));
    v[2] = Scalar(2) - fx::q();
    CHECK(parse_combination("-3/4 xi + (2-q) xi2", b) == v);
    CHECK(parse_combination("xi - xi", b) == b.zero());
    CHECK_THROWS_AS(parse_combination("zeta", b), std::invalid_argument);
    CHECK_THROWS_AS(parse_combination("xi +", b), std::invalid_argument);
    CHECK_THROWS_AS(parse_combination("(1+q xi", b), std::invalid_argument);
    CHECK(parse_combination("1", GradedSpace::unit(3)) == Vec{Scalar(1)});
    CHECK(parse_combination("1/3", GradedSpace::unit(3)) == Vec{Scalar(Rational(1, 3))});
}

TEST_CASE("the bundled anyonic model matches the built-in one") {
    const ModelFile& m = anyonic();
    const AnyonicModel ref;
    CHECK(m.modulus == 3);
    CHECK(m.algebra_order == std::vector<std::string>{"M", "B", "P"});
    CHECK(m.algebra("M").mult == ref.M().mult);
    CHECK(m.algebra("M").unit == ref.M().unit);

    const Hopf& b = m.hopf("B");
    const Hopf line = primitive_line("xi", 3);
    CHECK(b.comul == line.comul);
    CHECK(b.counit == line.counit);
    CHECK(b.antipode == line.antipode);
    REQUIRE(b.antipode_inverse);
    CHECK(*b.antipode_inverse == *line.antipode_inverse);
    CHECK(check_hopf(b).passed());

    CHECK(m.algebra("P").mult == ref.bundle().P.mult);
    const NamedCoaction& rho = m.coactions.at("rho");
    CHECK(rho.coaction.rho == ref.bundle().rho.rho);
    CHECK(check_comodule_algebra(m.algebra("P"), rho.coaction).passed());

    const NamedMap& phi = m.maps.at("phi");
    CHECK(phi.domain == tangle::Object{"B"});
    CHECK(phi.codomain == tangle::Object{"P"});
    for (int k = 0; k < 3; ++k) CHECK(phi.map.column(k) == ref.bundle().P.space.basis_vector(static_cast<std::size_t>(k)));
}

TEST_CASE("products with the unit are implied and others default to zero") {
    const ModelFile m = parse_model(small_algebra);
    const Algebra& a = m.algebra("M");
    CHECK(check_algebra(a).passed());
    CHECK(a.multiply(a.element("theta"), a.element("1")) == a.element("theta"));
    CHECK(a.multiply(a.element("1"), a.element("theta2")) == a.element("theta2"));
    CHECK(is_zero(a.multiply(a.element("theta"), a.element("theta2"))));
}

TEST_CASE("a degree violation is reported with its line") {
    const std::string text = "modulus 3\nalgebra M\n  basis 1:0 theta:1 theta2:2\n  unit 1\n  mul theta theta -> theta\n";
    CHECK(error_line(text) == 5);
    CHECK_THAT(error_text(text), Catch::Matchers::ContainsSubstring("degree violation: theta.theta has degree 2 but theta has degree 1"));
    CHECK_THAT(error_text(text), Catch::Matchers::StartsWith("line 5: "));
}

TEST_CASE("malformed model files name the offending line") {
    CHECK(error_line("modulus 3\nalgebra M\n  basis 1:0 x:0\n  unit 1\n  mul x y -> x\n") == 5);
    CHECK(error_line("modulus 3\nalgebra M\n  basis 1:0\n") == 2);                  // no unit
    CHECK(error_line("modulus 3\nalgebra M\n  unit 1\n") == 3);                      // unit before basis
    CHECK(error_line("modulus 3\nfrobnicate X\n") == 2);
    CHECK(error_line("modulus 3\n  basis 1:0\n") == 2);                             // outside a block
    CHECK(error_line("modulus 3\ncoalgebra Q\n") == 2);                             // unknown algebra
    CHECK(error_line("modulus 3\nalgebra M\n  basis 1:0\n  unit 1\nalgebra M\n") == 5);
    CHECK(error_line("modulus 3\nalgebra M\n  modulus 4\n") == 3);
    CHECK(error_line("modulus 3\nalgebra M\n  basis 1:0 a.b:0\n") == 3);
    CHECK(error_line(std::string(small_algebra) + "map f : M -> Q\n") == 6);
    CHECK(error_line(std::string(small_algebra) + "map f : M -> M\n  send theta -> theta2\n") == 7);
    CHECK(error_line(std::string(small_algebra) + "  mul theta theta -> theta2\n") == 6);  // given twice
}

TEST_CASE("comments and blank lines are ignored") {
    const ModelFile m = parse_model("# header\n\nmodulus 3   # trailing\nalgebra K\n  # inside\n  basis 1:0\n\n  unit 1\n");
    CHECK(m.algebra("K").dim() == 1);
}

TEST_CASE("a missing antipode inverse is computed and a supplied one is kept") {
    const ModelFile& m = anyonic();
    CHECK(compose(m.hopf("B").antipode, *m.hopf("B").antipode_inverse) == GradedMap::identity(m.algebra("B").space));
}

TEST_CASE("the tangle environment of a model") {
    const tangle::Env env = tangle_env(anyonic());
    CHECK(env.object_names() == std::vector<std::string>{"B", "M", "P"});
    for (const char* name : {"mul_M", "eta_M", "mul_B", "comul_B", "eps_B", "S_B", "Sinv_B", "mul_P", "rho", "phi",
                             "mul", "eta", "comul", "eps", "S", "Sinv"})
        CHECK(env.has_morphism(name));
    CHECK(env.morphism("mul").map == anyonic().algebra("B").mult);
    CHECK(env.morphism("rho").codomain == tangle::Object{"P", "B"});
    CHECK(env.morphism("eps").codomain.empty());
}

TEST_CASE("the coefficient algebra of the composite model") {
    const ModelFile m = load_model(data_dir + "/models/k_x_x2.model");
    const Algebra& n = m.algebra("N");
    CHECK(n.mult == line_algebra("x", 3, 0, 2).mult);
    CHECK_THROWS_AS(load_model(data_dir + "/models/no_such.model"), ModelError);
}
