#include <catch_amalgamated.hpp>

#include <fstream>
#include <sstream>

#include "bgt/modelfile.hpp"
#include "bgt/models.hpp"
#include "bgt/tangle.hpp"
#include "fixtures.hpp"

using namespace bgt;
using namespace bgt::tangle;

namespace {

const std::string data_dir = BGT_DATA_DIR;

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

const Env& env() {
    static const Env e = tangle_env(load_model(data_dir + "/models/anyonic.model"));
    return e;
}

bool holds(const std::string& lhs, const std::string& rhs) {
    return check_identity(parse(lhs), parse(rhs), env()).holds;
}

std::pair<int, int> error_position(const std::string& text) {
    try {
        parse(text);
    } catch (const ParseError& e) {
        return {e.line, e.column};
    }
    return {0, 0};
}

std::string type_error(const std::string& text) {
    try {
        typecheck(parse(text), env());
    } catch (const TypeError& e) {
        return e.what();
    }
    return {};
}

}  // namespace

TEST_CASE("parse builds the expected tree") {
    const Expr e = parse("mul . (id[B] * mul)");
    REQUIRE(e.kind == Expr::Kind::Compose);
    REQUIRE(e.parts.size() == 2);
    CHECK(e.parts[0].kind == Expr::Kind::Gen);
    CHECK(e.parts[0].name == "mul");
    REQUIRE(e.parts[1].kind == Expr::Kind::Tensor);
    CHECK(e.parts[1].parts[0].kind == Expr::Kind::Id);
    CHECK(e.parts[1].parts[0].left == Object{"B"});
    CHECK(e.parts[1].parts[1].name == "mul");

    const Expr p = parse("psi[B,B]");
    CHECK(p.kind == Expr::Kind::Psi);
    CHECK(p.left == Object{"B"});
    CHECK(p.right == Object{"B"});
    CHECK(parse("psinv[M*B, P]").left == Object{"M", "B"});
    CHECK(parse("id[I]").left.empty());
}

TEST_CASE("print then parse reproduces the tree") {
    for (const char* text : {"mul . (id[B] * mul)", "psi[B,B]", "(psi[B,B] * id[B]) . (id[B] * psi[B,B])",
                             "mul . (S * id[B]) . comul", "psinv[M*B,P] . psi[M*B,P]", "eta * eta", "id[I]",
                             "((mul))", "(a . b) . c", "a * (b * c)"}) {
        const Expr e = parse(text);
        const std::string printed = print(e);
        CHECK(same_shape(parse(printed), e));
        CHECK(print(parse(printed)) == printed);
    }
}

TEST_CASE("syntax errors carry line and column") {
    CHECK(error_position("mul . (id[B] * mul") == std::pair{1, 19});
    CHECK_THROWS_WITH(parse("mul . (id[B] * mul"), Catch::Matchers::ContainsSubstring("'(' at 1:7"));
    CHECK(error_position("mul . ") == std::pair{1, 7});
    CHECK(error_position("psi[B B]") == std::pair{1, 7});
    CHECK(error_position("mul $ comul") == std::pair{1, 5});
    CHECK(error_position("mul)") == std::pair{1, 4});
    CHECK_THAT(std::string(parse("x", 1, 1).name), Catch::Matchers::Equals("x"));

    try {
        parse_identities("# header\ncheck: mul == mul\ncheck: mul . (comul\n");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line == 3);
        CHECK(e.column == 20);
        CHECK_THAT(std::string(e.what()), Catch::Matchers::ContainsSubstring("expected '=='"));
    }
    CHECK_THROWS_AS(parse_identities("mul == mul\n"), ParseError);
    CHECK_THROWS_AS(parse_identities("check: mul\n"), ParseError);
}

TEST_CASE("typecheck derives wire types and names the failing stage") {
    const Signature s = typecheck(parse("mul . comul"), env());
    CHECK(s.domain == Object{"B"});
    CHECK(s.codomain == Object{"B"});
    const Signature h = typecheck(parse("(psi[M,P] * id[B]) . (id[M] * psi[B,P])"), env());
    CHECK(h.domain == (Object{"M", "B", "P"}));
    CHECK(h.codomain == (Object{"P", "M", "B"}));
    CHECK(typecheck(parse("eps * eps"), env()).codomain.empty());

    CHECK_THAT(type_error("mul . (comul * id[B])"), Catch::Matchers::ContainsSubstring("expects B*B"));
    CHECK_THAT(type_error("mul . (comul * id[B])"), Catch::Matchers::ContainsSubstring("B*B*B"));
    CHECK_THAT(type_error("frob . mul"), Catch::Matchers::ContainsSubstring("frob"));
    CHECK_THAT(type_error("id[Q]"), Catch::Matchers::ContainsSubstring("Q"));
    CHECK_THROWS_AS(check_identity(parse("mul"), parse("comul"), env()), TypeError);
}

TEST_CASE("evaluation is compositional") {
    const Hopf b = primitive_line("xi", 3);
    CHECK(evaluate(parse("mul . comul"), env()) == compose(b.algebra.mult, b.comul));
    CHECK(evaluate(parse("psi[B,M]"), env()) == braiding(b.space(), env().object("M")));
    CHECK(evaluate(parse("psinv[B,M]"), env()) == braiding_inverse(b.space(), env().object("M")));
    const GradedMap whole = evaluate(parse("mul . (S * id[B]) . comul"), env());
    const GradedMap left = evaluate(parse("mul . (S * id[B])"), env());
    const GradedMap right = evaluate(parse("comul"), env());
    CHECK(whole == compose(left, right));
    CHECK(evaluate(parse("(mul . comul) . S"), env()) == evaluate(parse("mul . (comul . S)"), env()));
    CHECK(evaluate(parse("S * S"), env()) == tensor_map(b.antipode, b.antipode));
}

TEST_CASE("braided group identities on the anyonic line") {
    CHECK(holds("mul . (S * id[B]) . comul", "eta . eps"));
    CHECK(holds("id[B] . id[B]", "id[B]"));
    CHECK(holds("(psi[B,B] * id[B]) . (id[B] * psi[B,B]) . (psi[B,B] * id[B])",
                "(id[B] * psi[B,B]) . (psi[B,B] * id[B]) . (id[B] * psi[B,B])"));
    CHECK(holds("psi[B,M] . (mul * id[M])", "(id[M] * mul) . psi[B*B,M]"));
    CHECK_FALSE(holds("mul", "mul . psi[B,B]"));
}

TEST_CASE("the square of the braiding is refuted on xi.xi") {
    const IdentityResult r = check_identity(parse("psi[B,B] . psi[B,B]"), parse("id[B*B]"), env());
    CHECK_FALSE(r.holds);
    CHECK_THAT(r.counterexample, Catch::Matchers::StartsWith("on xi.xi:"));
}

TEST_CASE("bundled identity files hold on the reference model") {
    for (const char* file : {"hopf.tgl", "comodule.tgl", "yangbaxter.tgl"}) {
        const auto ids = parse_identities(slurp(data_dir + "/tangles/" + file));
        CHECK(ids.size() >= 5);
        for (const auto& id : ids) {
            INFO(file << ":" << id.line << " " << id.source);
            CHECK(check_identity(id.lhs, id.rhs, env()).holds);
        }
    }
    const auto refuted = parse_identities(slurp(data_dir + "/tangles/braiding_square.tgl"));
    REQUIRE(refuted.size() == 1);
    CHECK_FALSE(check_identity(refuted[0].lhs, refuted[0].rhs, env()).holds);
    CHECK(parse_identities("").empty());
    CHECK(parse_identities("# nothing\n\n").empty());
}

TEST_CASE("a mutated antipode breaks the antipode axiom") {
    Env e(3);
    const Hopf b = primitive_line("xi", 3);
    e.add_object("B", b.space());
    e.add_morphism("mul", {"B", "B"}, {"B"}, b.algebra.mult);
    e.add_morphism("eta", {}, {"B"}, b.algebra.unit_map());
    e.add_morphism("comul", {"B"}, {"B", "B"}, b.comul);
    e.add_morphism("eps", {"B"}, {}, b.counit);
    e.add_morphism("S", {"B"}, {"B"}, GradedMap::identity(b.space()));
    const IdentityResult r = check_identity(parse("mul . (S * id[B]) . comul"), parse("eta . eps"), e);
    CHECK_FALSE(r.holds);
    CHECK_THAT(r.counterexample, Catch::Matchers::StartsWith("on xi:"));
}

TEST_CASE("environment rejects reserved names and bad shapes") {
    Env e(3);
    const GradedSpace b = primitive_line("xi", 3).space();
    e.add_object("B", b);
    CHECK_THROWS_AS(e.add_object("B", b), std::invalid_argument);
    CHECK_THROWS_AS(e.add_object("I", b), std::invalid_argument);
    CHECK_THROWS_AS(e.add_object("K", GradedSpace::unit(4)), std::invalid_argument);
    CHECK_THROWS_AS(e.add_morphism("psi", {"B"}, {"B"}, GradedMap::identity(b)), std::invalid_argument);
    CHECK_THROWS_AS(e.add_morphism("f", {"B", "B"}, {"B"}, GradedMap::identity(b)), std::invalid_argument);
    Matrix shift(3, 3);
    shift(1, 0) = 1;
    shift(2, 1) = 1;
    shift(0, 2) = 1;
    CHECK_THROWS_AS(e.add_morphism("beta", {"B"}, {"B"}, GradedMap(b, b, shift, 1)), std::invalid_argument);
}
