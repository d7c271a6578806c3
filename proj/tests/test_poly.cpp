#include "jacres/calculus.hpp"
#include "jacres/errors.hpp"
#include "jacres/parser.hpp"

#include <doctest.h>

#include "helpers.hpp"

using namespace jacres;
using jacres::test::PolyGen;
using jacres::test::mono;
using jacres::test::permutation_determinant;

TEST_CASE("parser reads rational systems exactly as written") {
    auto sys = parse_system("ring: Q[x,y]\nf: x^2 - 2*x*y\n");
    CHECK(sys.ring.nvars() == 2);
    REQUIRE(sys.generators.size() == 1);
    const auto& p = sys.generators[0];
    CHECK(p.term_count() == 2);
    CHECK(p.coeff(mono({2, 0})) == Q(1));
    CHECK(p.coeff(mono({1, 1})) == Q(-2));
    CHECK(p.to_string() == "x^2 - 2*x*y");
}

TEST_CASE("parser reduces prime-field coefficients") {
    auto sys = parse_system("ring: F7[x]\nf: 9*x\n");
    CHECK(sys.generators[0].coeff(mono({1})) == Q(2));
    CHECK(sys.generators[0].to_string() == "2*x");
}

TEST_CASE("grammar forbids negative exponents") {
    CHECK_THROWS_AS(parse_system("ring: Q[x]\nf: x^(-1)\n"), parse_error);
    try {
        parse_system("ring: Q[x]\nf: x^(-1)\n");
    } catch (const parse_error& e) {
        CHECK(e.line == 2);
        CHECK(e.col > 0);
    }
}

TEST_CASE("parser rejects unknown variables and bad moduli") {
    CHECK_THROWS_AS(parse_system("ring: Q[x]\nf: x + w\n"), parse_error);
    CHECK_THROWS_AS(parse_system("ring: F6[x]\nf: x\n"), parse_error);
    CHECK_THROWS_AS(parse_system("ring: Q[x,x]\nf: x\n"), parse_error);
    CHECK_THROWS_AS(parse_system("ring: Q[x]\n"), parse_error);
}

TEST_CASE("rational literals, fractions and comments") {
    auto sys = parse_system("# header\nring: Q[x]\nf: 1/2*x - 3 # trailing\n");
    CHECK(sys.generators[0].coeff(mono({1})) == Q(1, 2));
    CHECK(sys.generators[0].constant_coeff() == Q(-3));
    auto fp = parse_system("ring: F7[x]\nf: 1/2*x\n");
    CHECK(fp.generators[0].coeff(mono({1})) == Q(4)); // 2^{-1} = 4 mod 7
}

TEST_CASE("jacobian_data on diagonal powers") {
    auto sys = parse_system("ring: Q[x,y]\nf: x^2\nf: y^3\n");
    auto jd = jacobian_data(sys.generators);
    CHECK(jd.matrix[0][0].to_string() == "2*x");
    CHECK(jd.matrix[0][1].is_zero());
    CHECK(jd.matrix[1][1].to_string() == "3*y^2");
    CHECK(jd.det.to_string() == "6*x*y^2");
    CHECK(jd.rank0 == 0);
}

TEST_CASE("jacobian_data rank at the origin") {
    auto sys = parse_system("ring: Q[x,y]\nf: x\nf: x*y\n");
    auto jd = jacobian_data(sys.generators);
    CHECK(jd.det.to_string() == "x");
    CHECK(jd.rank0 == 1);
}

TEST_CASE("jacobian over F2 against the permutation-expansion oracle") {
    auto sys = parse_system("ring: F2[x,y]\nf: x^2 + y\nf: y^2\n");
    auto jd = jacobian_data(sys.generators);
    // Oracle: independent symbolic differentiation + permutation expansion.
    std::vector<std::vector<Polynomial>> m(2, std::vector<Polynomial>(2, Polynomial(sys.ring)));
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) m[i][j] = sys.generators[i].derivative(j);
    Polynomial oracle = permutation_determinant(m, sys.ring);
    CHECK(jd.det == oracle);
    CHECK(jd.det.is_zero()); // 4xy = 0 mod 2
}

TEST_CASE("jacobian_data arity mismatch") {
    auto sys = parse_system("ring: Q[x,y]\nf: x\n");
    CHECK_THROWS_AS(jacobian_data(sys.generators), invalid_input);
}

TEST_CASE("hessian determinants") {
    Ring r3({"x", "y", "z"}, Field::rationals());
    Polynomial f = parse_polynomial("x^2 + y^2 + z^3", r3);
    // Oracle: cofactor expansion of diag(2, 2, 6z).
    CHECK(hessian_det(f).to_string() == "24*z");

    Ring r2({"x", "y"}, Field::rationals());
    CHECK(hessian_det(parse_polynomial("x^2 + y^2", r2)).to_string() == "4");
    // Oracle: det [[2,2],[2,2]] = 0.
    CHECK(hessian_det(parse_polynomial("(x + y)^2", r2)).is_zero());
}

TEST_CASE("compose_arc on the spec examples") {
    Ring r({"x", "y"}, Field::rationals());
    Ring t({"t"}, Field::rationals());
    Arc phi = make_arc({parse_polynomial("t^2", t), parse_polynomial("t^3", t)});

    auto im = compose_arc(parse_polynomial("x^2", r), phi);
    CHECK(im.value.to_string() == "t^4");
    CHECK(im.ord == 4);

    im = compose_arc(parse_polynomial("6*x*y^2", r), phi);
    CHECK(im.value.to_string() == "6*t^8");
    CHECK(im.ord == 8);

    Arc diag = make_arc({parse_polynomial("t", t), parse_polynomial("t", t)});
    im = compose_arc(parse_polynomial("x - y", r), diag);
    CHECK(im.value.is_zero());
    CHECK(!im.ord.has_value()); // order +infinity
}

TEST_CASE("arcs require zero constant terms and a nonzero component") {
    Ring t({"t"}, Field::rationals());
    CHECK_THROWS_AS(make_arc({parse_polynomial("t + 1", t)}), invalid_input);
    CHECK_THROWS_AS(make_arc({Polynomial(t), Polynomial(t)}), invalid_input);
    CHECK_THROWS_AS(parse_arcs("arc: t, 1 + t\n", Field::rationals()), parse_error);
}

TEST_CASE("ring axioms on random polynomials") {
    for (unsigned seed : {1u, 2u}) {
        Ring r({"x", "y", "z"}, seed == 1 ? Field::rationals() : Field::prime_field(5));
        PolyGen gen(r, 100 + seed);
        for (int i = 0; i < 25; ++i) {
            Polynomial a = gen.next(), b = gen.next(), c = gen.next();
            CHECK((a + b) + c == a + (b + c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a * b == b * a);
            CHECK(a - a == Polynomial(r));
        }
    }
}

TEST_CASE("product rule for partial derivatives") {
    Ring r({"x", "y"}, Field::rationals());
    PolyGen gen(r, 7);
    for (int i = 0; i < 20; ++i) {
        Polynomial f = gen.next(), g = gen.next();
        for (int v = 0; v < 2; ++v)
            CHECK((f * g).derivative(v) == f * g.derivative(v) + g * f.derivative(v));
    }
}

TEST_CASE("arc composition is a ring homomorphism") {
    Ring r({"x", "y"}, Field::rationals());
    PolyGen gen(r, 11);
    for (int i = 0; i < 15; ++i) {
        Polynomial p = gen.next(), q = gen.next();
        Arc phi = gen.next_arc(2);
        CHECK(compose_arc(p * q, phi).value ==
              compose_arc(p, phi).value * compose_arc(q, phi).value);
        CHECK(compose_arc(p + q, phi).value ==
              compose_arc(p, phi).value + compose_arc(q, phi).value);
    }
}

TEST_CASE("t-order drops by one under d/dt in characteristic zero") {
    Ring r({"x", "y"}, Field::rationals());
    PolyGen gen(r, 13);
    int checked = 0;
    for (int i = 0; i < 30; ++i) {
        Polynomial p = gen.next(3, 3, true);
        Arc phi = gen.next_arc(2);
        Polynomial comp = compose_arc(p, phi).value;
        Polynomial nonconst = comp - Polynomial::constant(comp.ring(), comp.constant_coeff());
        if (nonconst.is_zero()) continue;
        CHECK(nonconst.derivative(0).order().value() == nonconst.order().value() - 1);
        ++checked;
    }
    CHECK(checked >= 10);
}
