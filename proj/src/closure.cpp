#include "jacres/closure.hpp"

#include "jacres/artin.hpp"
#include "jacres/errors.hpp"

#include <algorithm>

namespace jacres {

ArcReportResult arc_report(const std::vector<Polynomial>& gens, const Arc& arc,
                           const std::optional<Polynomial>& probe, const Caps& caps) {
    (void)caps;
    if (gens.empty()) throw invalid_input("empty generator list");
    const Ring& ring = gens.front().ring();
    JacobianData jd = jacobian_data(gens);
    const int n = ring.nvars();

    ArcReportResult out;
    std::vector<Polynomial> fo;
    for (const auto& g : gens) {
        ArcImage im = compose_arc(g, arc);
        out.generator_orders.push_back(im.ord);
        fo.push_back(im.value);
    }
    for (const auto& o : out.generator_orders)
        if (o && (!out.min_order || *o < *out.min_order)) out.min_order = o;

    if (probe) {
        ArcImage im = compose_arc(*probe, arc);
        out.probe_order = im.ord;
        if (out.min_order && out.probe_order) {
            out.ratio = Q(*out.probe_order) / Q(*out.min_order);
            out.ratio_defined = true;
        } else if (out.min_order && !out.probe_order) {
            out.ratio_defined = false; // probe vanishes identically along the arc
        }
    }

    // phi_j'(t) * J(phi(t)) = sum_i (-1)^{i+j} M_ij(phi(t)) * (f_i o phi)'(t)
    Polynomial jphi = compose_arc(jd.det, arc).value;
    out.cramer_ok = true;
    for (int j = 0; j < n && out.cramer_ok; ++j) {
        Polynomial lhs = arc.components[j].derivative(0) * jphi;
        Polynomial rhs(arc.tring);
        for (int i = 0; i < n; ++i) {
            Polynomial term = compose_arc(jd.minors[i][j], arc).value * fo[i].derivative(0);
            rhs = ((i + j) % 2 == 0) ? rhs + term : rhs - term;
        }
        if (!(lhs == rhs)) out.cramer_ok = false;
    }
    return out;
}

SamuelBounds samuel_bounds(const std::vector<Polynomial>& gens, const Polynomial& u,
                           const std::vector<Arc>& arcs, int mcap, const Caps& caps) {
    if (u.is_zero()) throw invalid_input("samuel bounds of the zero element");
    SamuelBounds out;
    out.lower = Q(0);
    for (int m = 1; m <= mcap; ++m) {
        IdealOrder ord = ideal_order(u.pow(m), gens, caps.order_cap, caps);
        if (ord.infinite) continue;
        Q v = Q(ord.ord) / Q(m);
        if (v > out.lower) out.lower = v;
    }
    for (const auto& arc : arcs) {
        ArcReportResult rep = arc_report(gens, arc, u, caps);
        if (!rep.ratio_defined) continue;
        if (!out.upper || *rep.ratio < *out.upper) out.upper = rep.ratio;
    }
    if (out.upper && out.lower > *out.upper)
        throw invariant_violation("samuel sandwich inverted: lower bound above an arc ratio");
    return out;
}

namespace {

bool all_monomial(const std::vector<Polynomial>& gens) {
    for (const auto& g : gens)
        if (!g.is_single_term()) return false;
    return true;
}

// Checks the explicit rank structure and extracts the reduced subsystem in
// the unused variables.  Coordinate generators are unit multiples of single
// variables; every other generator must have order >= 2 and avoid the
// coordinate variables.
std::optional<std::vector<Polynomial>> reduced_subsystem(const std::vector<Polynomial>& gens,
                                                         int rank0) {
    const Ring& ring = gens.front().ring();
    const int n = ring.nvars();
    std::vector<bool> coord_var(n, false);
    std::vector<const Polynomial*> rest;
    int ncoord = 0;
    for (const auto& g : gens) {
        if (g.is_single_term() && g.terms().front().mono.degree() == 1) {
            int v = -1;
            for (int i = 0; i < n; ++i)
                if (g.terms().front().mono[i] == 1) v = i;
            if (coord_var[v]) return std::nullopt; // same variable twice
            coord_var[v] = true;
            ++ncoord;
        } else {
            rest.push_back(&g);
        }
    }
    if (ncoord != rank0) return std::nullopt;
    for (const auto* g : rest) {
        if (!g->order() || *g->order() < 2) return std::nullopt;
        for (const auto& t : g->terms())
            for (int i = 0; i < n; ++i)
                if (coord_var[i] && t.mono[i] > 0) return std::nullopt;
    }
    std::vector<std::string> subvars;
    std::vector<int> submap(n, -1);
    for (int i = 0; i < n; ++i)
        if (!coord_var[i]) {
            submap[i] = static_cast<int>(subvars.size());
            subvars.push_back(ring.var_name(i));
        }
    Ring subring(subvars, ring.field());
    std::vector<Polynomial> sub;
    for (const auto* g : rest) {
        Polynomial p(subring);
        for (const auto& t : (*g).terms()) {
            std::vector<int> e(subvars.size(), 0);
            for (int i = 0; i < n; ++i)
                if (t.mono[i] > 0) e[submap[i]] = t.mono[i];
            p = p + Polynomial::from_term(subring, Monomial(std::move(e)), t.coeff);
        }
        sub.push_back(std::move(p));
    }
    return sub;
}

} // namespace

LojaCertificateResult loja_certificate(const std::vector<Polynomial>& gens,
                                       const std::vector<Arc>& arcs, int mcap, const Caps& caps) {
    if (gens.empty()) throw invalid_input("empty generator list");
    const Ring& ring = gens.front().ring();
    for (const auto& g : gens)
        if (!Field::is_zero(g.constant_coeff()))
            throw invalid_input("generators must vanish at the origin");
    JacobianData jd = jacobian_data(gens);
    DimensionResult dr = quotient_dimension(gens, caps);
    if (!dr.finite) throw invalid_input("certificate needs an m-primary ideal");

    LojaCertificateResult out;
    out.rank0 = jd.rank0;
    out.codim = ring.nvars() - jd.rank0;
    out.jacobian = jd.det;
    out.theta_lb = Q(0);

    if (out.codim <= 1) {
        out.no_statement = true;
        return out;
    }

    // Work on the reduced system: the whole system when rank0 = 0, otherwise
    // the explicitly presented subsystem in the remaining variables.
    std::vector<Polynomial> sys = gens;
    if (jd.rank0 > 0) {
        auto sub = reduced_subsystem(gens, jd.rank0);
        if (!sub)
            throw invalid_input("reduction required: positive rank at 0 without explicit "
                                "coordinate structure");
        sys = *sub;
    }
    Polynomial jac = jacobian_data(sys).det;

    StandardBasis sb = StandardBasis::compute(sys, caps);
    out.containment_index = containment_index(sb);
    int min_ord = -1;
    for (const auto& g : sys) {
        int o = g.order().value();
        if (min_ord < 0 || o < min_ord) min_ord = o;
    }
    out.strict_order = min_ord >= 3;
    bool strict_bound = out.codim >= 3 || out.strict_order;
    out.theta_lb = strict_bound ? Q(1) + Q(1) / Q(out.containment_index) : Q(1);

    if (all_monomial(sys) && jac.is_single_term()) {
        NewtonPolyhedron np = newton_polyhedron(sys);
        out.vbar_exact = np.samuel_value(jac.terms().front().mono);
    }
    SamuelBounds sbnd = samuel_bounds(sys, jac, arcs, mcap, caps);
    out.vbar_lower = sbnd.lower;
    out.vbar_upper = sbnd.upper;

    // The certificate bound must sit below the Samuel value wherever we can
    // see that value exactly or bracket it.
    if (out.vbar_exact) {
        if (*out.vbar_exact < out.theta_lb)
            throw invariant_violation("certified exponent exceeds the exact Samuel value");
        out.closure_certified = *out.vbar_exact >= 1;
    }
    if (out.vbar_upper && *out.vbar_upper < out.theta_lb)
        throw invariant_violation("certified exponent exceeds an arc upper bound");
    if (!out.closure_certified && *out.vbar_lower >= 1) out.closure_certified = true;
    return out;
}

HessianVerdict hessian_criterion(const Polynomial& f, const Caps& caps) {
    const Ring& ring = f.ring();
    if (ring.field().characteristic() != 0)
        throw invalid_input("hessian criterion needs characteristic zero");
    if (!Field::is_zero(f.constant_coeff()))
        throw invalid_input("hessian criterion needs f(0) = 0");
    std::vector<Polynomial> jac_ideal;
    for (int i = 0; i < ring.nvars(); ++i) jac_ideal.push_back(f.derivative(i));
    bool all_zero = true;
    for (const auto& d : jac_ideal)
        if (!d.is_zero()) all_zero = false;
    HessianVerdict out;
    out.hessian = hessian_det(f);
    if (all_zero) {
        out.isolated = false;
        out.hessian_in_jacobian_ideal = out.hessian.is_zero();
        return out;
    }
    DimensionResult dr = quotient_dimension(jac_ideal, caps);
    out.isolated = dr.finite;
    out.hessian_in_jacobian_ideal = ideal_member(out.hessian, jac_ideal, caps).first;
    if (out.isolated == out.hessian_in_jacobian_ideal)
        throw invariant_violation("isolatedness disagrees with the Hessian membership test");
    if (all_monomial(jac_ideal)) {
        NewtonPolyhedron np = newton_polyhedron(jac_ideal);
        out.jacobian_ideal_closed = np.integrally_closed() ? ClosedVerdict::yes : ClosedVerdict::no;
    }
    return out;
}

} // namespace jacres
