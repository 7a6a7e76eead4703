#include "doctest.h"
#include "support.hpp"
#include "torext/parser.hpp"
#include "torext/ringmap.hpp"

using namespace torext;
using namespace torext::testsupport;

namespace {

// binomial-expansion oracle for (a+b)^p over F_p
MultiPoly binomial_pow(const MultiPoly& a, const MultiPoly& b, int p) {
    // exact binomial coefficients reduced into the field
    std::vector<std::vector<long>> c(p + 1, std::vector<long>(p + 1, 0));
    for (int n = 0; n <= p; ++n) {
        c[n][0] = 1;
        for (int k = 1; k <= n; ++k)
            c[n][k] = (k == n) ? 1 : c[n - 1][k - 1] + c[n - 1][k];
    }
    MultiPoly acc = MultiPoly::zero(a.registry(), a.field());
    for (int k = 0; k <= p; ++k) {
        Scalar coeff(a.field(), c[p][k]);
        acc = acc + coeff * (a.pow(k) * b.pow(p - k));
    }
    return acc;
}

}  // namespace

TEST_CASE("parse examples") {
    RegistryPtr reg = xy_registry();
    Field f2 = Field::prime(2);

    MultiPoly f = poly_parse("y^2 - y - pi*x", reg, f2);
    CHECK(f.n_terms() == 3);

    CHECK(poly_parse("0", reg, f2).is_zero());
    CHECK(poly_parse("0", reg, f2).terms().empty());

    // expand-and-collect oracle
    Field q = Field::rationals();
    MultiPoly g = poly_parse("pi^2*(x+1) - pi^2*x", reg, q);
    MultiPoly pi2 = MultiPoly::variable(reg, q, reg->uniformizer(), 2);
    CHECK(g == pi2);
}

TEST_CASE("parse-print-parse is the identity") {
    std::mt19937 rng(7);
    RegistryPtr reg = xy_registry();
    for (Field field : {Field::prime(3), Field::prime(2), Field::rationals()}) {
        for (int i = 0; i < 200; ++i) {
            MultiPoly f = random_poly(rng, reg, field);
            CHECK(poly_parse(f.to_string(), reg, field) == f);
        }
    }
}

TEST_CASE("parse errors carry positions") {
    RegistryPtr reg = xy_registry();
    Field q = Field::rationals();
    CHECK_THROWS_AS(poly_parse("y +", reg, q), SyntaxError);
    CHECK_THROWS_AS(poly_parse("(y", reg, q), SyntaxError);
    CHECK_THROWS_AS(poly_parse("y^", reg, q), SyntaxError);
    CHECK_THROWS_AS(poly_parse("z + 1", reg, q), UnknownVariable);
    CHECK_THROWS_AS(poly_parse("y^70000", reg, q), SyntaxError);  // exponent bound
    CHECK_THROWS_AS(poly_parse("1/2", reg, Field::prime(3)), SyntaxError);
    try {
        poly_parse("x * z", reg, q);
        CHECK(false);
    } catch (const UnknownVariable& e) {
        CHECK(e.name == "z");
        CHECK(e.position == 4);
    }
    // whitespace is insignificant
    CHECK(poly_parse(" y ^ 2 \t+ x ", reg, q) == poly_parse("y^2+x", reg, q));
}

TEST_CASE("arithmetic examples") {
    RegistryPtr reg = xy_registry();
    Field q = Field::rationals();
    MultiPoly y = poly_parse("y", reg, q);
    CHECK((y - y).is_zero());
    CHECK(poly_parse("(y+1)*(y-1)", reg, q) == poly_parse("y^2 - 1", reg, q));

    // freshman's dream over F_3 against the binomial oracle
    Field f3 = Field::prime(3);
    std::mt19937 rng(11);
    for (int i = 0; i < 25; ++i) {
        MultiPoly a = random_poly(rng, reg, f3, 3, 2);
        MultiPoly b = random_poly(rng, reg, f3, 3, 2);
        MultiPoly lhs = (a + b).pow(3);
        CHECK(lhs == binomial_pow(a, b, 3));
        CHECK(lhs == a.pow(3) + b.pow(3));
    }
}

TEST_CASE("ring axioms on randomized polynomials") {
    std::mt19937 rng(23);
    RegistryPtr reg = xy_registry();
    for (Field field : {Field::prime(5), Field::rationals()}) {
        for (int i = 0; i < 250; ++i) {
            MultiPoly a = random_poly(rng, reg, field, 4, 3);
            MultiPoly b = random_poly(rng, reg, field, 4, 3);
            MultiPoly c = random_poly(rng, reg, field, 4, 3);
            CHECK((a + b) * c == a * c + b * c);
            CHECK(a * (b * c) == (a * b) * c);
            CHECK(a + b == b + a);
            CHECK(a * b == b * a);
        }
    }
}

TEST_CASE("apply_map examples") {
    RegistryPtr reg = xy_registry();
    Field f2 = Field::prime(2);
    MultiPoly f = poly_parse("y^2 - y - pi*x", reg, f2);

    RingMap rescale = RingMap::identity(reg, f2);
    rescale.set_image(reg->index_of("x"), poly_parse("pi*x", reg, f2));
    CHECK(rescale.apply(f) == poly_parse("y^2 - y - pi^2*x", reg, f2));

    CHECK(RingMap::identity(reg, f2).apply(f) == f);

    // composed rescalings equal the combined rescaling on random input
    std::mt19937 rng(37);
    RingMap twice = RingMap::identity(reg, f2);
    twice.set_image(reg->index_of("x"), poly_parse("pi^2*x", reg, f2));
    for (int i = 0; i < 50; ++i) {
        MultiPoly g = random_poly(rng, reg, f2);
        CHECK(rescale.apply(rescale.apply(g)) == twice.apply(g));
    }
    CHECK(rescale.compose_after(rescale) == twice);
}

TEST_CASE("specialize_origin") {
    RegistryPtr reg = xy_registry();
    Field f3 = Field::prime(3);
    CHECK(poly_parse("y^3 - y - pi*x", reg, f3).specialize_origin() ==
          poly_parse("y^3 - y", reg, f3));
    CHECK(poly_parse("5", reg, Field::rationals()).specialize_origin() ==
          poly_parse("5", reg, Field::rationals()));

    // substitution oracle: specialize_origin = apply_map(base coords -> 0)
    std::mt19937 rng(41);
    RingMap zero_x = RingMap::identity(reg, f3);
    zero_x.set_image(reg->index_of("x"), MultiPoly::zero(reg, f3));
    for (int i = 0; i < 100; ++i) {
        MultiPoly f = random_poly(rng, reg, f3);
        CHECK(f.specialize_origin() == zero_x.apply(f));
    }
}

TEST_CASE("t_content and primitivize") {
    RegistryPtr reg = xy_registry();
    Field q = Field::rationals();
    CHECK(poly_parse("pi^2*x + pi^3*y", reg, q).t_content() == 2);
    CHECK(poly_parse("y^2 - y - pi*x", reg, Field::prime(2)).t_content() == 0);

    auto [g, m] = poly_parse("pi^2*x + pi^3*y", reg, q).primitivize();
    CHECK(g == poly_parse("x + pi*y", reg, q));
    CHECK(m == 2);

    Field f3 = Field::prime(3);
    auto [g3, m3] = poly_parse("pi^3*y^3 - pi*y", reg, f3).primitivize();
    CHECK(g3 == poly_parse("pi^2*y^3 - y", reg, f3));
    CHECK(m3 == 1);

    CHECK_THROWS_AS(MultiPoly::zero(reg, q).t_content(), ZeroPolynomial);

    std::mt19937 rng(43);
    for (int i = 0; i < 100; ++i) {
        MultiPoly f = nonzero_random_poly(rng, reg, q);
        std::uint32_t k = static_cast<std::uint32_t>(i % 4);
        CHECK(f.times_t_power(k).t_content() == f.t_content() + k);
        auto [prim, content] = f.primitivize();
        CHECK(prim.times_t_power(content) == f);
        CHECK(prim.t_content() == 0);
    }
}

TEST_CASE("reduce_mod_t") {
    RegistryPtr reg = xy_registry();
    Field f3 = Field::prime(3);
    CHECK(poly_parse("y^3 - y - pi*x", reg, f3).reduce_mod_t() == poly_parse("y^3 - y", reg, f3));
    CHECK(poly_parse("pi", reg, f3).reduce_mod_t().is_zero());

    std::mt19937 rng(47);
    for (int i = 0; i < 100; ++i) {
        MultiPoly f = nonzero_random_poly(rng, reg, f3);
        CHECK_FALSE(f.primitivize().first.reduce_mod_t().is_zero());
        // specialize_origin and reduce_mod_t commute
        CHECK(f.specialize_origin().reduce_mod_t() == f.reduce_mod_t().specialize_origin());
    }
}

TEST_CASE("t-content is multiplicative (Gauss at the t-level)") {
    std::mt19937 rng(53);
    RegistryPtr reg = xy_registry();
    for (Field field : {Field::prime(3), Field::rationals()}) {
        for (int i = 0; i < 100; ++i) {
            MultiPoly f = nonzero_random_poly(rng, reg, field);
            MultiPoly g = nonzero_random_poly(rng, reg, field);
            CHECK((f * g).t_content() == f.t_content() + g.t_content());
        }
    }
}

TEST_CASE("exponent overflow detection") {
    RegistryPtr reg = xy_registry();
    Field q = Field::rationals();
    MultiPoly big = MultiPoly::variable(reg, q, reg->index_of("y"), 60000);
    CHECK_THROWS_AS(big * big, ExponentOverflow);
}

TEST_CASE("registry invariants") {
    CHECK_THROWS_AS(VariableRegistry({{"x", VarRole::BaseCoord, 0, 0, 0}}), Error);  // no pi
    CHECK_THROWS_AS(VariableRegistry({{"pi", VarRole::Uniformizer, 0, 0, 0},
                                      {"pi", VarRole::BaseCoord, 0, 0, 0}}),
                    Error);  // duplicate
    CHECK_THROWS_AS(VariableRegistry({{"pi", VarRole::Uniformizer, 0, 0, 0},
                                      {"x_11", VarRole::GroupEntry, 1, 1, 0},
                                      {"x_12", VarRole::GroupEntry, 1, 2, 0}}),
                    Error);  // incomplete block
    CHECK_THROWS_AS(VariableRegistry({{"pi", VarRole::Uniformizer, 0, 0, 0},
                                      {"1bad", VarRole::BaseCoord, 0, 0, 0}}),
                    Error);  // invalid name
}

TEST_CASE("mixed registries and fields are rejected") {
    RegistryPtr reg = xy_registry();
    RegistryPtr other = std::make_shared<VariableRegistry>(std::vector<VarInfo>{
        {"pi", VarRole::Uniformizer, 0, 0, 0}, {"z", VarRole::BaseCoord, 0, 0, 0}});
    Field q = Field::rationals();
    MultiPoly a = poly_parse("x", reg, q);
    MultiPoly b = poly_parse("z", other, q);
    CHECK_THROWS_AS(a + b, RegistryMismatch);
    CHECK_THROWS_AS(a + poly_parse("x", reg, Field::prime(3)), FieldMismatch);
}
