#include "jacres/artin.hpp"

#include "jacres/calculus.hpp"
#include "jacres/errors.hpp"

#include <algorithm>

namespace jacres {

QuotientAlgebra QuotientAlgebra::build(std::vector<Polynomial> gens, const Caps& caps) {
    QuotientAlgebra a;
    a.sb_ = StandardBasis::compute(std::move(gens), caps);
    a.ring_ = a.sb_.ring();
    DimensionResult dr = quotient_dimension(a.sb_);
    if (!dr.finite)
        throw invalid_input("quotient is infinite dimensional (no pure power of '" +
                            a.ring_.var_name(dr.witness_var) + "' in the leading-term ideal)");
    a.basis_ = dr.std_monomials;
    a.maxstd_ = 0;
    for (const auto& m : a.basis_) a.maxstd_ = std::max(a.maxstd_, m.degree());
    a.s_ = jacres::containment_index(a.sb_);

    // Linear reducer: echelonize the truncations of all monomial multiples of
    // the standard basis inside the span of monomials of degree <= maxstd.
    // Everything of higher degree lies in m^s and hence in the ideal.
    a.space_ = monomials_below(a.ring_.nvars(), a.maxstd_ + 1);
    auto col_of = [&](const Monomial& m) {
        auto it = std::lower_bound(
            a.space_.begin(), a.space_.end(), m,
            [](const Monomial& x, const Monomial& y) { return Monomial::cmp_local(x, y) > 0; });
        return static_cast<int>(it - a.space_.begin());
    };
    a.reducer_ = std::make_shared<RowEchelon>(static_cast<int>(a.space_.size()), a.ring_.field());
    for (const auto& b : a.sb_.basis()) {
        int ord = b.order().value();
        for (const auto& mult : monomials_below(a.ring_.nvars(), a.maxstd_ + 1 - ord)) {
            Polynomial shifted = b.times_term(mult, a.ring_.field().one());
            std::vector<Q> row(a.space_.size(), Q(0));
            for (const auto& t : shifted.terms())
                if (t.mono.degree() <= a.maxstd_) row[col_of(t.mono)] = t.coeff;
            a.reducer_->add_row(std::move(row));
        }
    }
    // Pivot columns must be exactly the non-standard monomials of the space.
    if (a.reducer_->nrows() + static_cast<int>(a.basis_.size()) !=
        static_cast<int>(a.space_.size()))
        throw invariant_violation("reducer rank disagrees with the standard monomial count");
    for (const auto& m : a.basis_)
        if (a.reducer_->is_pivot_col(col_of(m)))
            throw invariant_violation("standard monomial became a reducer pivot");
    a.basis_col_.clear();
    for (const auto& m : a.basis_) a.basis_col_.push_back(col_of(m));
    return a;
}

std::vector<Q> QuotientAlgebra::reduce(const Polynomial& g) const {
    if (!(g.ring() == ring_)) throw invalid_input("polynomial lives in a different ring");
    std::vector<Q> v(space_.size(), Q(0));
    const Field& f = ring_.field();
    for (const auto& t : g.terms()) {
        if (t.mono.degree() > maxstd_) continue; // in m^s, hence in the ideal
        auto it = std::lower_bound(
            space_.begin(), space_.end(), t.mono,
            [](const Monomial& x, const Monomial& y) { return Monomial::cmp_local(x, y) > 0; });
        size_t idx = static_cast<size_t>(it - space_.begin());
        v[idx] = f.add(v[idx], t.coeff);
    }
    std::vector<Q> residual = reducer_->reduce(std::move(v));
    std::vector<Q> coords;
    coords.reserve(basis_.size());
    for (int c : basis_col_) coords.push_back(residual[c]);
    return coords;
}

std::vector<Q> QuotientAlgebra::reduce_monomial(const Monomial& m) const {
    auto it = mono_cache_.find(m.exponents());
    if (it != mono_cache_.end()) return it->second;
    std::vector<Q> coords = reduce(Polynomial::from_term(ring_, m, Q(1)));
    mono_cache_.emplace(m.exponents(), coords);
    return coords;
}

Polynomial QuotientAlgebra::lift(const std::vector<Q>& coords) const {
    if (coords.size() != basis_.size()) throw invalid_input("coordinate size mismatch");
    Polynomial p(ring_);
    for (size_t i = 0; i < basis_.size(); ++i)
        if (!Field::is_zero(coords[i]))
            p = p + Polynomial::from_term(ring_, basis_[i], coords[i]);
    return p;
}

Matrix QuotientAlgebra::mult_matrix(const Polynomial& g) const {
    Matrix m(dim(), dim(), ring_.field());
    for (int j = 0; j < dim(); ++j) {
        Polynomial prod = g.times_term(basis_[j], ring_.field().one());
        std::vector<Q> col = reduce(prod);
        for (int i = 0; i < dim(); ++i) m.at(i, j) = col[i];
    }
    return m;
}

bool QuotientAlgebra::is_nilpotent(const Matrix& op) {
    return op.power(op.rows()).is_zero();
}

Q QuotientAlgebra::trace_residue(const Polynomial& r) const {
    const Field& f = ring_.field();
    Q t(0);
    for (int j = 0; j < dim(); ++j) {
        Polynomial prod = r.times_term(basis_[j], f.one());
        t = f.add(t, reduce(prod)[j]);
    }
    return t;
}

QuotientAlgebra::Socle QuotientAlgebra::socle() const {
    // Stack the multiplication matrices of all variables; the socle is the
    // common kernel.
    Matrix stacked(dim() * ring_.nvars(), dim(), ring_.field());
    for (int v = 0; v < ring_.nvars(); ++v) {
        Matrix mv = mult_matrix(Polynomial::variable(ring_, v));
        for (int i = 0; i < dim(); ++i)
            for (int j = 0; j < dim(); ++j) stacked.at(v * dim() + i, j) = mv.at(i, j);
    }
    Socle out;
    for (const auto& vec : kernel_basis(stacked)) out.basis.push_back(lift(vec));
    out.simple = out.basis.size() == 1;
    return out;
}

JacobianVerdict jacobian_test(const std::vector<Polynomial>& gens, const Caps& caps) {
    if (gens.empty()) throw invalid_input("empty generator list");
    const Ring& ring = gens.front().ring();
    for (const auto& g : gens)
        if (!Field::is_zero(g.constant_coeff()))
            throw invalid_input("a generator is a unit at the origin; the ideal is the whole ring");

    JacobianVerdict v;
    v.jacobian = jacobian_data(gens).det;
    StandardBasis sb = StandardBasis::compute(gens, caps);
    DimensionResult dr = quotient_dimension(sb);
    v.dim_finite = dr.finite;
    v.dim = dr.dim;
    v.witness_var = dr.witness_var;
    v.dim_positive = !dr.finite;
    auto [in, cert] = ideal_member(v.jacobian, sb);
    v.jacobian_in_ideal = in;
    v.membership = cert;

    unsigned long p = ring.field().characteristic();
    bool assert_full = p == 0;
    bool assert_not_in = p == 0 || (dr.finite && dr.dim % static_cast<int>(p) != 0);
    if (p != 0 && !(dr.finite && dr.dim % static_cast<int>(p) != 0)) v.char_caveat = true;

    if (dr.finite) {
        QuotientAlgebra alg = QuotientAlgebra::build(gens, caps);
        bool socle_ok = true;
        // J * X_i must fall into the ideal for every variable.
        for (int var = 0; var < ring.nvars() && socle_ok; ++var) {
            Polynomial jx = v.jacobian * Polynomial::variable(ring, var);
            if (!ideal_member(jx, sb).first) socle_ok = false;
        }
        auto soc = alg.socle();
        std::vector<Q> jbar = alg.reduce(v.jacobian);
        bool jbar_zero = true;
        for (const auto& c : jbar)
            if (!Field::is_zero(c)) jbar_zero = false;
        if (!soc.simple || jbar_zero) socle_ok = false;
        if (socle_ok) {
            // jbar must span the 1-dimensional socle.
            std::vector<Q> sole = alg.reduce(soc.basis.front());
            Matrix m(2, alg.dim(), ring.field());
            for (int j = 0; j < alg.dim(); ++j) {
                m.at(0, j) = sole[j];
                m.at(1, j) = jbar[j];
            }
            if (rank(m) != 1) socle_ok = false;
        }
        v.socle_generated = socle_ok;
        if (assert_not_in && in)
            throw invariant_violation("jacobian fell in the ideal of a finite quotient");
        if ((assert_full || assert_not_in) && !socle_ok)
            throw invariant_violation("jacobian does not generate the socle");
    } else if (assert_full && !in) {
        throw invariant_violation(
            "positive-dimensional quotient but the jacobian is not in the ideal");
    }
    return v;
}

} // namespace jacres
