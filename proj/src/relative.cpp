#include "jacres/relative.hpp"

#include "jacres/calculus.hpp"
#include "jacres/errors.hpp"

#include <algorithm>

namespace jacres {

namespace {

Ring uring_of(const ParsedSystem& sys) {
    return Ring(sys.uvars, sys.ring.field());
}

// Project an ambient polynomial supported on u-monomials into the u-ring.
Polynomial to_uring(const ParsedSystem& sys, const Polynomial& g, const Ring& uring) {
    const int nu = static_cast<int>(sys.uvars.size());
    Polynomial out(uring);
    for (const auto& t : g.terms()) {
        std::vector<int> e(nu, 0);
        for (int i = 0; i < g.ring().nvars(); ++i) {
            if (t.mono[i] == 0) continue;
            if (i >= nu) throw invalid_input("polynomial is not supported on the u-variables");
            e[i] = t.mono[i];
        }
        out = out + Polynomial::from_term(uring, Monomial(std::move(e)), t.coeff);
    }
    return out;
}

Polynomial lift_from_uring(const ParsedSystem& sys, const Polynomial& g) {
    std::vector<Polynomial> images;
    for (int i = 0; i < static_cast<int>(sys.uvars.size()); ++i)
        images.push_back(Polynomial::variable(sys.ring, i));
    return g.substitute(images, sys.ring);
}

// Monomial in the ambient ring from a u-part and an X-part.
Monomial ambient_monomial(const ParsedSystem& sys, const Monomial& upart, const Monomial& xpart) {
    const int nu = static_cast<int>(sys.uvars.size());
    const int nx = static_cast<int>(sys.xvars.size());
    std::vector<int> e(nu + nx, 0);
    for (int i = 0; i < nu; ++i) e[i] = upart[i];
    for (int i = 0; i < nx; ++i) e[nu + i] = xpart[i];
    return Monomial(std::move(e));
}

struct FreePresentation {
    std::vector<Monomial> a_basis; // X-monomials
    std::vector<Monomial> u_basis; // u-monomials
    QuotientAlgebra flattened;
    Matrix change; // columns: classes of u^gamma * b_k in the flattened basis
};

// Presents the flattened quotient on the product basis {u^gamma b_k} where
// b_k runs over the standard monomials of the u = 0 specialization.
FreePresentation free_presentation(const ParsedSystem& sys,
                                   const std::vector<Polynomial>& relations, const Caps& caps) {
    std::vector<Polynomial> flat = sys.generators;
    flat.insert(flat.end(), relations.begin(), relations.end());
    FreePresentation out{.a_basis = {}, .u_basis = {}, .flattened = QuotientAlgebra::build(flat, caps), .change = Matrix()};

    // u-basis: standard monomials of the relations inside the u-ring.
    Ring uring = uring_of(sys);
    std::vector<Polynomial> urels;
    for (const auto& r : relations) urels.push_back(to_uring(sys, r, uring));
    DimensionResult udim = quotient_dimension(urels, caps);
    if (!udim.finite) throw invalid_input("coefficient relations are not primary to the u-variables");
    out.u_basis = udim.std_monomials;

    // Candidate A-basis: standard monomials of the u = 0 specialization.
    Ring xr = sys.xring();
    std::vector<Polynomial> specialized;
    for (const auto& g : sys.generators) {
        Polynomial s = specialize_u_zero(sys, g);
        if (!s.is_zero()) specialized.push_back(s);
    }
    if (specialized.empty()) throw invalid_input("not free: specialized system is zero");
    DimensionResult xdim = quotient_dimension(specialized, caps);
    if (!xdim.finite)
        throw invalid_input("not free: the u = 0 specialization has an infinite quotient");
    out.a_basis = xdim.std_monomials;

    const int dim = out.flattened.dim();
    const int prod = static_cast<int>(out.u_basis.size() * out.a_basis.size());
    if (dim != prod)
        throw invalid_input("not free: flattened dimension " + std::to_string(dim) +
                            " differs from rank * dim A = " + std::to_string(prod));
    Matrix change(dim, prod, sys.ring.field());
    int col = 0;
    for (const auto& gamma : out.u_basis)
        for (const auto& b : out.a_basis) {
            std::vector<Q> cls =
                out.flattened.reduce_monomial(ambient_monomial(sys, gamma, b));
            for (int i = 0; i < dim; ++i) change.at(i, col) = cls[i];
            ++col;
        }
    if (rank(change) != dim) throw invalid_input("not free: lifted basis does not generate");
    out.change = std::move(change);
    return out;
}

// Multiplication-by-g matrix over A on the lifted basis; entries are
// polynomials in the u-variables (reduced representatives).
std::vector<std::vector<Polynomial>> mult_over_A(const ParsedSystem& sys,
                                                 const FreePresentation& pres,
                                                 const Polynomial& g, const Caps& caps) {
    (void)caps;
    const Ring& ring = sys.ring;
    const Field& field = ring.field();
    const int nb = static_cast<int>(pres.a_basis.size());
    const int nu = static_cast<int>(pres.u_basis.size());
    std::vector<std::vector<Polynomial>> a(
        nb, std::vector<Polynomial>(nb, Polynomial(ring)));
    for (int j = 0; j < nb; ++j) {
        Polynomial prod = g.times_term(ambient_monomial(sys, Monomial(static_cast<int>(sys.uvars.size())), pres.a_basis[j]), field.one());
        std::vector<Q> cls = pres.flattened.reduce(prod);
        auto sol = solve(pres.change, cls);
        if (!sol) throw invalid_input("not free: product escapes the lifted basis");
        int col = 0;
        for (int gi = 0; gi < nu; ++gi)
            for (int k = 0; k < nb; ++k) {
                if (!Field::is_zero((*sol)[col]))
                    a[k][j] = a[k][j] + Polynomial::from_term(
                                            ring,
                                            ambient_monomial(sys, pres.u_basis[gi],
                                                             Monomial(static_cast<int>(sys.xvars.size()))),
                                            (*sol)[col]);
                ++col;
            }
    }
    return a;
}

std::vector<Polynomial> degree_relations(const ParsedSystem& sys, int degree) {
    // All u-monomials of the given degree, as ambient polynomials.
    const int nu = static_cast<int>(sys.uvars.size());
    std::vector<Polynomial> rels;
    std::vector<int> e(nu, 0);
    while (true) {
        int sum = 0;
        for (int v : e) sum += v;
        if (sum == degree) {
            Monomial um{std::vector<int>(e)};
            rels.push_back(Polynomial::from_term(
                sys.ring, ambient_monomial(sys, um, Monomial(static_cast<int>(sys.xvars.size()))),
                Q(1)));
        }
        int carry = nu - 1;
        while (carry >= 0) {
            if (++e[carry] <= degree) break;
            e[carry] = 0;
            --carry;
        }
        if (carry < 0) break;
    }
    return rels;
}

} // namespace

CoeffAnalysis analyze_coeff(const ParsedSystem& sys, const Caps& caps) {
    CoeffAnalysis out;
    if (!sys.relative()) return out;
    out.uvars = sys.uvars;
    out.relations = sys.coeff->relations;
    if (out.relations.empty()) {
        out.kind = CoeffKind::domain_polynomial;
        return out;
    }
    out.kind = CoeffKind::artinian_quotient;
    Ring uring = uring_of(sys);
    std::vector<Polynomial> urels;
    for (const auto& r : out.relations) urels.push_back(to_uring(sys, r, uring));
    QuotientAlgebra ua = QuotientAlgebra::build(urels, caps); // throws when not u-primary
    out.a_dim = ua.dim();
    out.gorenstein = ua.socle().simple;
    return out;
}

std::vector<Polynomial> flattened_ideal(const ParsedSystem& sys) {
    std::vector<Polynomial> flat = sys.generators;
    if (sys.coeff)
        flat.insert(flat.end(), sys.coeff->relations.begin(), sys.coeff->relations.end());
    return flat;
}

std::pair<bool, MembershipCertificate> relative_member(const Polynomial& g,
                                                       const ParsedSystem& sys, const Caps& caps) {
    return ideal_member(g, flattened_ideal(sys), caps);
}

Polynomial relative_jacobian(const ParsedSystem& sys) {
    const int nu = static_cast<int>(sys.uvars.size());
    const int nx = static_cast<int>(sys.xvars.size());
    if (static_cast<int>(sys.generators.size()) != nx)
        throw invalid_input("jacobian needs as many generators as main variables");
    std::vector<std::vector<Polynomial>> m(nx, std::vector<Polynomial>(nx, Polynomial(sys.ring)));
    for (int i = 0; i < nx; ++i)
        for (int j = 0; j < nx; ++j) m[i][j] = sys.generators[i].derivative(nu + j);
    return poly_determinant(m, sys.ring);
}

Polynomial specialize_u_zero(const ParsedSystem& sys, const Polynomial& g) {
    Ring xr = sys.xring();
    std::vector<Polynomial> images;
    for (size_t i = 0; i < sys.uvars.size(); ++i) images.push_back(Polynomial(xr));
    for (size_t i = 0; i < sys.xvars.size(); ++i)
        images.push_back(Polynomial::variable(xr, static_cast<int>(i)));
    return g.substitute(images, xr);
}

TraceResult trace_over_A(const ParsedSystem& sys, const Polynomial& g, const Caps& caps) {
    CoeffAnalysis ca = analyze_coeff(sys, caps);
    const Field& field = sys.ring.field();

    if (ca.kind == CoeffKind::field) {
        QuotientAlgebra alg = QuotientAlgebra::build(sys.generators, caps);
        TraceResult out;
        out.trace = Polynomial::constant(sys.ring, alg.trace_residue(g));
        out.rank = alg.dim();
        out.a_basis = alg.basis();
        return out;
    }

    if (ca.kind == CoeffKind::artinian_quotient) {
        FreePresentation pres = free_presentation(sys, ca.relations, caps);
        auto a = mult_over_A(sys, pres, g, caps);
        TraceResult out;
        out.trace = Polynomial(sys.ring);
        for (size_t k = 0; k < pres.a_basis.size(); ++k) out.trace = out.trace + a[k][k];
        out.rank = static_cast<int>(pres.a_basis.size());
        out.a_basis = pres.a_basis;
        return out;
    }

    // Polynomial coefficient ring: work modulo rising powers of the
    // u-variables until the matrix stabilizes, then verify the entries
    // exactly against the untruncated flattened ideal.
    StandardBasis flat_sb = StandardBasis::compute(flattened_ideal(sys), caps);
    std::vector<std::vector<Polynomial>> prev;
    for (int depth = 2; depth <= caps.order_cap + 2; ++depth) {
        std::vector<Polynomial> rels = degree_relations(sys, depth);
        FreePresentation pres = free_presentation(sys, rels, caps);
        auto a = mult_over_A(sys, pres, g, caps);
        if (!prev.empty() && a == prev) {
            // Exact verification: g * b_j - sum_k a_kj b_k lies in (F).
            const int nb = static_cast<int>(pres.a_basis.size());
            for (int j = 0; j < nb; ++j) {
                Polynomial lhs = g.times_term(
                    ambient_monomial(sys, Monomial(static_cast<int>(sys.uvars.size())),
                                     pres.a_basis[j]),
                    field.one());
                for (int k = 0; k < nb; ++k)
                    lhs = lhs -
                          a[k][j] * Polynomial::from_term(
                                        sys.ring,
                                        ambient_monomial(sys, Monomial(static_cast<int>(sys.uvars.size())),
                                                         pres.a_basis[k]),
                                        field.one());
                if (!lhs.is_zero() && !flat_sb.weak_normal_form(lhs).first.is_zero())
                    throw invalid_input("not free: multiplication matrix failed verification");
            }
            TraceResult out;
            out.trace = Polynomial(sys.ring);
            for (int k = 0; k < nb; ++k) out.trace = out.trace + a[k][k];
            out.rank = nb;
            out.a_basis = pres.a_basis;
            return out;
        }
        prev = std::move(a);
    }
    throw inconclusive_error("trace matrix did not stabilize below the degree cap");
}

Th31Report theorem31_check(const ParsedSystem& sys, const std::vector<Polynomial>& witnesses,
                           const Caps& caps) {
    CoeffAnalysis ca = analyze_coeff(sys, caps);
    std::vector<Polynomial> flat = flattened_ideal(sys);
    StandardBasis sb = StandardBasis::compute(flat, caps);
    Polynomial jac = relative_jacobian(sys);

    Th31Report out;
    out.kind = ca.kind;
    out.asserted = ca.kind != CoeffKind::artinian_quotient;
    out.conclusion1_observed = true;
    for (const auto& w : witnesses) {
        WitnessReport wr;
        wr.witness = w;
        int power = -1;
        Polynomial wk = Polynomial::constant(sys.ring, Q(1));
        for (int k = 1; k <= caps.radical_cap; ++k) {
            wk = wk * w;
            if (ideal_member(wk, sb).first) {
                power = k;
                break;
            }
        }
        if (power < 0)
            throw invalid_input("witness '" + w.to_string() +
                                "' not verified in the radical within the cap");
        wr.radical_power = power;
        wr.jw_in_ideal = ideal_member(jac * w, sb).first;
        if (!wr.jw_in_ideal) out.conclusion1_observed = false;
        out.witnesses.push_back(std::move(wr));
    }
    out.jacobian_in_ideal = ideal_member(jac, sb).first;
    out.conclusion2_observed = !out.jacobian_in_ideal;

    if (out.asserted) {
        if (!out.conclusion1_observed)
            throw invariant_violation("J * witness escaped the ideal over a domain");
        bool char_zero = sys.ring.field().characteristic() == 0;
        if (char_zero && !out.conclusion2_observed)
            throw invariant_violation("jacobian fell into the ideal over a domain");
    }
    return out;
}

Th33Report theorem33_probe(const ParsedSystem& sys, const Caps& caps) {
    CoeffAnalysis ca = analyze_coeff(sys, caps);
    if (sys.ring.field().characteristic() != 0)
        throw invalid_input("probe needs characteristic zero");
    if (ca.kind == CoeffKind::domain_polynomial)
        throw invalid_input("probe needs an artinian coefficient ring (or a field)");
    if (ca.kind == CoeffKind::artinian_quotient && !ca.gorenstein)
        throw invalid_input("coefficient ring is not Gorenstein (socle not simple)");

    std::vector<Polynomial> flat = flattened_ideal(sys);
    DimensionResult dr = quotient_dimension(flat, caps);
    Th33Report out;
    out.quotient_artinian = dr.finite;
    out.witness_var = dr.witness_var;
    Polynomial jac = relative_jacobian(sys);
    out.jacobian_in_ideal = ideal_member(jac, flat, caps).first;
    out.observed = dr.finite || out.jacobian_in_ideal;
    return out;
}

} // namespace jacres
