#include "jacres/artin.hpp"
#include "jacres/closure.hpp"
#include "jacres/errors.hpp"

#include <doctest.h>

#include "helpers.hpp"

using namespace jacres;
using jacres::test::PolyGen;
using jacres::test::load_arcs;
using jacres::test::load_system;
using jacres::test::mono;

namespace {

std::vector<Polynomial> gens(const Ring& r, std::initializer_list<const char*> exprs) {
    std::vector<Polynomial> out;
    for (const char* e : exprs) out.push_back(parse_polynomial(e, r));
    return out;
}

Arc plane_arc(const Field& f, const char* a, const char* b) {
    Ring t({"t"}, f);
    return make_arc({parse_polynomial(a, t), parse_polynomial(b, t)});
}

// Brute-force Samuel approximant: ord_I(u^m)/m via power membership.
Q samuel_by_powers(const std::vector<Polynomial>& F, const Polynomial& u, int m) {
    IdealOrder ord = ideal_order(u.pow(m), F, 24);
    REQUIRE(!ord.infinite);
    return Q(ord.ord) / Q(m);
}

} // namespace

TEST_CASE("newton polyhedron facets and samuel values") {
    Ring r({"x", "y"}, Field::rationals());

    auto np23 = newton_polyhedron(gens(r, {"x^2", "y^3"}));
    bool found = false;
    for (const auto& f : np23.facets())
        if (f.normal == std::vector<mpz_class>{3, 2} && f.offset == 6) found = true;
    CHECK(found); // the slanted facet 3a + 2b >= 6
    CHECK(np23.samuel_value(mono({1, 2})) == Q(7, 6));

    CHECK(samuel_monomial(gens(r, {"x^2", "y^2"}), parse_polynomial("4*x*y", r)) == Q(1));
    CHECK(samuel_monomial(gens(r, {"x^3", "y^3"}), parse_polynomial("x^2*y^2", r)) == Q(4, 3));
    // Oracle: ord_I((x^2 y^2)^3)/3 = 4/3 by brute-force power membership.
    CHECK(samuel_by_powers(gens(r, {"x^3", "y^3"}), parse_polynomial("x^2*y^2", r), 3) == Q(4, 3));

    CHECK_THROWS_AS(samuel_monomial(gens(r, {"x^2 + y", "y^2"}), parse_polynomial("x", r)),
                    invalid_input);
    CHECK_THROWS_AS(samuel_monomial(gens(r, {"x^2", "y^2"}), parse_polynomial("x + y", r)),
                    invalid_input);
}

TEST_CASE("newton polyhedron soundness invariants") {
    Ring r2({"x", "y"}, Field::rationals());
    Ring r3({"x", "y", "z"}, Field::rationals());
    std::vector<std::vector<Polynomial>> ideals = {
        gens(r2, {"x^2", "y^3"}), gens(r2, {"x^3", "y^3"}), gens(r2, {"x", "y^4"}),
        gens(r2, {"x^2*y", "x*y^3", "y^5"}), gens(r3, {"x^2", "y^2", "z^2"}),
        gens(r3, {"x", "y^2", "z^3"})};
    for (const auto& F : ideals) {
        auto np = newton_polyhedron(F);
        for (const auto& e : np.exponents()) {
            CHECK(np.contains(e));
            CHECK(np.samuel_value(e) >= 1);
            for (const auto& f : np.facets()) {
                Q val(0);
                for (int i = 0; i < np.nvars(); ++i) val += Q(f.normal[i]) * Q(e[i]);
                CHECK(val >= Q(f.offset));
            }
        }
        // Every facet is tight on at least one generator exponent.
        for (const auto& f : np.facets()) {
            bool tight = false;
            for (const auto& e : np.exponents()) {
                Q val(0);
                for (int i = 0; i < np.nvars(); ++i) val += Q(f.normal[i]) * Q(e[i]);
                if (val == Q(f.offset)) tight = true;
            }
            CHECK(tight);
        }
    }
}

TEST_CASE("monomial integral closure generators") {
    Ring r({"x", "y"}, Field::rationals());
    auto np = newton_polyhedron(gens(r, {"x^2", "y^2"}));
    auto cg = np.closure_generators();
    REQUIRE(cg.size() == 3);
    CHECK(cg[0] == mono({1, 1}));
    CHECK(cg[1] == mono({0, 2}));
    CHECK(cg[2] == mono({2, 0}));
    CHECK(!np.integrally_closed());

    auto np2 = newton_polyhedron(gens(r, {"x^2", "x*y", "y^2"}));
    CHECK(np2.integrally_closed());
}

TEST_CASE("arc reports on the spec examples") {
    Ring r({"x", "y"}, Field::rationals());
    auto F23 = gens(r, {"x^2", "y^3"});
    Polynomial jac = jacobian_data(F23).det; // 6xy^2

    auto rep = arc_report(F23, plane_arc(r.field(), "t^2", "t^3"), jac);
    CHECK(rep.generator_orders[0] == 4);
    CHECK(rep.generator_orders[1] == 9);
    CHECK(rep.min_order == 4);
    CHECK(rep.probe_order == 8); // J o phi = 6 t^8
    CHECK(rep.ratio == Q(2));
    CHECK(rep.cramer_ok);
    // Hand-expanded identity at j = 1: 2t * 6t^8 = 3t^6 * 4t^3.
    Ring t({"t"}, r.field());
    Polynomial lhs = parse_polynomial("t^2", t).derivative(0) * parse_polynomial("6*t^8", t);
    CHECK(lhs == parse_polynomial("12*t^9", t));

    auto rep2 = arc_report(F23, plane_arc(r.field(), "t^3", "t^2"), jac);
    CHECK(rep2.min_order == 6);
    CHECK(rep2.probe_order == 7);
    CHECK(rep2.ratio == Q(7, 6));
    CHECK(rep2.cramer_ok);
    // Matches the exact monomial Samuel value.
    CHECK(samuel_monomial(F23, jac) == Q(7, 6));

    auto unit = arc_report(gens(r, {"x", "y"}), plane_arc(r.field(), "t", "t^2"),
                           Polynomial::constant(r, Q(1)));
    CHECK(unit.ratio == Q(0));

    // Arc inside the zero set: orders are infinite, ratio undefined.
    Ring tq({"t"}, r.field());
    Arc inside = make_arc({Polynomial(tq), parse_polynomial("t", tq)});
    auto rep3 = arc_report(gens(r, {"x^2", "x*y"}), inside, jac);
    CHECK(!rep3.min_order.has_value());
    CHECK(!rep3.ratio_defined);
    CHECK(rep3.cramer_ok);
}

TEST_CASE("samuel bounds sandwiches") {
    Ring r({"x", "y"}, Field::rationals());
    auto F33 = gens(r, {"x^3", "y^3"});
    Polynomial j33 = jacobian_data(F33).det; // 9 x^2 y^2
    auto b = samuel_bounds(F33, j33, {plane_arc(r.field(), "t", "t")}, 3);
    CHECK(b.lower == Q(4, 3)); // ord_I(J^3) = 4
    CHECK(b.upper == Q(4, 3));

    auto F22 = gens(r, {"x^2", "y^2"});
    auto b2 = samuel_bounds(F22, parse_polynomial("4*x*y", r), {plane_arc(r.field(), "t", "t")}, 2);
    CHECK(b2.lower == Q(1)); // (4xy)^2 = 16 x^2 y^2 lies in I^2
    CHECK(b2.upper == Q(1));

    auto b3 = samuel_bounds(F22, parse_polynomial("x^2 + y^2", r), {}, 2);
    CHECK(b3.lower >= Q(1)); // the probe lies in I
    CHECK(!b3.upper.has_value());
}

TEST_CASE("lojasiewicz certificates") {
    Ring r2({"x", "y"}, Field::rationals());
    Ring r3({"x", "y", "z"}, Field::rationals());

    auto c33 = loja_certificate(gens(r2, {"x^3", "y^3"}),
                                {plane_arc(Field::rationals(), "t", "t")}, 3);
    CHECK(c33.rank0 == 0);
    CHECK(c33.codim == 2);
    CHECK(c33.containment_index == 5);
    CHECK(c33.strict_order);
    CHECK(c33.theta_lb == Q(6, 5));
    CHECK(c33.vbar_exact == Q(4, 3));
    CHECK(c33.closure_certified);
    CHECK(c33.vbar_lower == Q(4, 3));
    CHECK(c33.vbar_upper == Q(4, 3));

    auto c222 = loja_certificate(gens(r3, {"x^2", "y^2", "z^2"}), {}, 3);
    CHECK(c222.codim == 3);
    CHECK(c222.containment_index == 4);
    CHECK(c222.theta_lb == Q(5, 4));
    CHECK(c222.vbar_exact == Q(3, 2)); // facet a+b+c >= 2 at (1,1,1)
    CHECK(*c222.vbar_exact >= c222.theta_lb);

    auto trivial = loja_certificate(gens(r2, {"x", "y^2"}), {}, 3);
    CHECK(trivial.rank0 == 1);
    CHECK(trivial.codim == 1);
    CHECK(trivial.no_statement);

    // Sharp non-strict case: theta_lb stays 1 and the diagonal arc pins the
    // Samuel value of the jacobian at exactly 1.
    auto c22 = loja_certificate(gens(r2, {"x^2", "y^2"}),
                                {plane_arc(Field::rationals(), "t", "t")}, 2);
    CHECK(c22.codim == 2);
    CHECK(!c22.strict_order);
    CHECK(c22.theta_lb == Q(1));
    CHECK(c22.vbar_upper == Q(1));
    CHECK(c22.closure_certified);

    // Pre-reduced positive-rank input: certificate runs on the subsystem.
    auto cred = loja_certificate(gens(r3, {"y", "x^2", "z^2"}), {}, 2);
    CHECK(cred.rank0 == 1);
    CHECK(cred.codim == 2);
    CHECK(cred.containment_index == 3);
    CHECK(cred.theta_lb == Q(1));

    // Positive rank without the explicit structure is rejected.
    CHECK_THROWS_AS(loja_certificate(gens(r3, {"x + z^2", "y^2", "z*y"}), {}, 2), invalid_input);
}

TEST_CASE("cramer identity holds for random polynomial arcs") {
    for (const char* sysfile : {"x2y3.sys", "x2y2.sys", "x3y3.sys", "cusp.sys", "x2plusy_y2.sys",
                                "x2y2z2.sys", "linear2.sys"}) {
        auto sys = load_system(sysfile);
        PolyGen gen(sys.ring, 113);
        for (int i = 0; i < 25; ++i) {
            Arc phi = gen.next_arc(sys.ring.nvars());
            auto rep = arc_report(sys.generators, phi, std::nullopt);
            CHECK(rep.cramer_ok);
        }
    }
}

TEST_CASE("certified exponent bounds hold along random arcs") {
    for (const char* sysfile : {"x2y3.sys", "x2y2.sys", "x3y3.sys", "cusp.sys", "x2y2z2.sys"}) {
        auto sys = load_system(sysfile);
        auto cert = loja_certificate(sys.generators, {}, 2);
        REQUIRE(cert.rank0 == 0);
        Polynomial jac = jacobian_data(sys.generators).det;
        PolyGen gen(sys.ring, 127);
        for (int i = 0; i < 12; ++i) {
            Arc phi = gen.next_arc(sys.ring.nvars());
            auto rep = arc_report(sys.generators, phi, jac);
            if (!rep.min_order || !rep.probe_order) continue;
            CHECK(Q(*rep.probe_order) >= cert.theta_lb * Q(*rep.min_order));
        }
    }
}

TEST_CASE("hessian criterion") {
    Ring r3({"x", "y", "z"}, Field::rationals());
    for (int k : {2, 3, 4, 5}) {
        Polynomial f = parse_polynomial("x^2 + y^2", r3) + Polynomial::variable(r3, 2, k);
        auto v = hessian_criterion(f);
        CHECK(v.isolated);
        CHECK(!v.hessian_in_jacobian_ideal);
        CHECK(v.jacobian_ideal_closed == ClosedVerdict::yes);
    }

    Ring r2({"x", "y"}, Field::rationals());
    auto flat = hessian_criterion(parse_polynomial("(x + y)^2", r2));
    CHECK(!flat.isolated);
    CHECK(flat.hessian_in_jacobian_ideal);
    CHECK(flat.hessian.is_zero());

    auto morse = hessian_criterion(parse_polynomial("x^2 + y^2", r2));
    CHECK(morse.isolated);
    CHECK(morse.hessian.to_string() == "4");
    CHECK(!morse.hessian_in_jacobian_ideal);
    CHECK(morse.jacobian_ideal_closed == ClosedVerdict::yes);

    // Non-monomial jacobian ideal: closedness is not computed.
    auto cuspish = hessian_criterion(parse_polynomial("x^2 + y^3 + x*y^2", r2));
    CHECK(cuspish.isolated);
    CHECK(cuspish.jacobian_ideal_closed == ClosedVerdict::not_computed);
}
