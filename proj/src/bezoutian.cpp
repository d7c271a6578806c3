#include "jacres/bezoutian.hpp"

#include "jacres/calculus.hpp"
#include "jacres/errors.hpp"

namespace jacres {

namespace {

// Divided difference of f in slot j under the telescoping substitution:
// forward order feeds Y into slots 1..j, reversed order into slots j..n.
// Computed term by term through the geometric-sum identity, so no division
// is performed.
Polynomial divided_difference(const Polynomial& f, int j, const Ring& doubled, bool reversed) {
    const Ring& ring = f.ring();
    const int n = ring.nvars();
    Polynomial out(doubled);
    for (const auto& t : f.terms()) {
        int d = t.mono[j];
        if (d == 0) continue;
        std::vector<int> base(2 * n, 0);
        for (int k = 0; k < n; ++k) {
            if (k == j) continue;
            bool y_side = reversed ? k > j : k < j;
            base[y_side ? n + k : k] = t.mono[k];
        }
        for (int split = 0; split < d; ++split) {
            std::vector<int> e = base;
            e[n + j] = split;          // Y_j^split
            e[j] = d - 1 - split;      // X_j^{d-1-split}
            out = out + Polynomial::from_term(doubled, Monomial(std::move(e)), t.coeff);
        }
    }
    return out;
}

} // namespace

ResidueFunctional ResidueFunctional::build(const QuotientAlgebra& alg, bool reversed) {
    const Ring& ring = alg.ring();
    const Field& field = ring.field();
    const int n = ring.nvars();
    const auto& gens = alg.standard_basis().generators();
    if (static_cast<int>(gens.size()) != n)
        throw invalid_input("residue functional needs as many generators as variables");

    std::vector<std::string> doubled_vars = ring.vars();
    for (const auto& v : ring.vars()) doubled_vars.push_back(v + "'");
    Ring doubled(doubled_vars, field);

    std::vector<std::vector<Polynomial>> dd(n, std::vector<Polynomial>(n, Polynomial(doubled)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) dd[i][j] = divided_difference(gens[i], j, doubled, reversed);
    Polynomial bez = poly_determinant(dd, doubled);

    ResidueFunctional out;
    out.alg_ = std::make_shared<QuotientAlgebra>(alg);
    const int dim = alg.dim();
    out.bez_ = Matrix(dim, dim, field);
    for (const auto& t : bez.terms()) {
        std::vector<int> xe(n), ye(n);
        for (int k = 0; k < n; ++k) {
            xe[k] = t.mono[k];
            ye[k] = t.mono[n + k];
        }
        std::vector<Q> cx = alg.reduce_monomial(Monomial(std::move(xe)));
        std::vector<Q> cy = alg.reduce_monomial(Monomial(std::move(ye)));
        for (int mu = 0; mu < dim; ++mu) {
            if (Field::is_zero(cx[mu])) continue;
            Q w = field.mul(t.coeff, cx[mu]);
            for (int nu = 0; nu < dim; ++nu)
                if (!Field::is_zero(cy[nu]))
                    out.bez_.at(mu, nu) = field.add(out.bez_.at(mu, nu), field.mul(w, cy[nu]));
        }
    }

    // Solve sum_mu ell(b_mu) * bez(mu, .) = coordinates of 1.
    Matrix transposed(dim, dim, field);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) transposed.at(i, j) = out.bez_.at(j, i);
    std::vector<Q> one_coords = alg.reduce(Polynomial::constant(ring, Q(1)));
    auto sol = solve(transposed, one_coords);
    if (!sol) {
        if (field.characteristic() == 0)
            throw invariant_violation("degenerate Bezoutian over characteristic zero");
        throw inconclusive_error("degenerate Bezoutian in positive characteristic");
    }
    out.values_ = *sol;

    out.pairing_ = Matrix(dim, dim, field);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) {
            std::vector<Q> prod = alg.reduce_monomial(alg.basis()[i] * alg.basis()[j]);
            Q v(0);
            for (int mu = 0; mu < dim; ++mu) v = field.add(v, field.mul(prod[mu], out.values_[mu]));
            out.pairing_.at(i, j) = v;
        }
    out.pairing_invertible_ = rank(out.pairing_) == dim;
    return out;
}

Q ResidueFunctional::ell(const Polynomial& g) const {
    const Field& field = alg_->ring().field();
    std::vector<Q> coords = alg_->reduce(g);
    Q v(0);
    for (int mu = 0; mu < alg_->dim(); ++mu) v = field.add(v, field.mul(coords[mu], values_[mu]));
    return v;
}

NondegeneracyVerdict nondegeneracy_check(const std::vector<Polynomial>& gens,
                                         const std::vector<Polynomial>& probes, const Caps& caps) {
    if (gens.empty()) throw invalid_input("empty generator list");
    const Ring& ring = gens.front().ring();
    if (ring.field().characteristic() != 0)
        throw invalid_input("non-degeneracy is only asserted over characteristic zero");
    QuotientAlgebra alg = QuotientAlgebra::build(gens, caps);
    ResidueFunctional rf = ResidueFunctional::build(alg);
    StandardBasis sb = StandardBasis::compute(gens, caps);

    NondegeneracyVerdict v;
    v.pairing_invertible = rf.pairing_invertible();
    if (!v.pairing_invertible)
        throw invariant_violation("residue pairing is singular over characteristic zero");
    const Field& field = ring.field();
    for (const auto& r : probes) {
        bool all_zero = true;
        for (int j = 0; j < alg.dim(); ++j) {
            Polynomial rb = r.times_term(alg.basis()[j], field.one());
            if (!Field::is_zero(rf.ell(rb))) {
                all_zero = false;
                break;
            }
        }
        bool member = ideal_member(r, sb).first;
        ++v.probes;
        if (all_zero != member) {
            ++v.mismatches;
            throw invariant_violation("residue pairing kernel disagrees with ideal membership");
        }
    }
    return v;
}

} // namespace jacres
