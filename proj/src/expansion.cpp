#include "jacres/expansion.hpp"

#include "jacres/errors.hpp"

#include <algorithm>

namespace jacres {

namespace {

void require_complete_intersection(const QuotientAlgebra& alg) {
    if (static_cast<int>(alg.standard_basis().generators().size()) != alg.ring().nvars())
        throw invalid_input("f-adic expansion needs as many generators as variables");
}

struct Expander {
    const QuotientAlgebra& alg;
    MacaulayModel model;

    void expand(const Polynomial& g, const MultiIndex& bound, const MultiIndex& offset,
                std::map<MultiIndex, std::vector<Q>>& acc) const {
        const Field& f = alg.ring().field();
        std::vector<Q> cls = alg.reduce(g);
        auto& slot = acc[offset];
        if (slot.empty()) slot.assign(alg.dim(), Q(0));
        for (int i = 0; i < alg.dim(); ++i) slot[i] = f.add(slot[i], cls[i]);

        bool deeper = false;
        for (int b : bound)
            if (b > 0) deeper = true;
        if (!deeper) return;

        Polynomial h = g - alg.lift(cls);
        if (h.is_zero()) return;
        auto cof = model.cofactors(h);
        if (!cof)
            throw invariant_violation("division failed for an element known to lie in the ideal");
        for (int i = 0; i < alg.ring().nvars(); ++i) {
            if (bound[i] == 0 || (*cof)[i].is_zero()) continue;
            MultiIndex sub_bound = bound;
            sub_bound[i] -= 1;
            MultiIndex sub_offset = offset;
            sub_offset[i] += 1;
            expand((*cof)[i], sub_bound, sub_offset, acc);
        }
    }
};

int cutoff_for(const QuotientAlgebra& alg, const Polynomial& r, const MultiIndex& bound,
               const Caps& caps) {
    int total = 0;
    for (int b : bound) total += b;
    int maxgen = 0;
    for (const auto& g : alg.standard_basis().generators())
        maxgen = std::max(maxgen, g.total_degree());
    int cutoff = alg.containment_index() * (total + 2) + std::max(r.total_degree(), 0) + maxgen + 2;
    if (cutoff > caps.max_degree)
        throw inconclusive_error("f-adic expansion cutoff exceeds the degree cap");
    return cutoff;
}

} // namespace

FAdicExpansion f_adic_expand(const QuotientAlgebra& alg, const Polynomial& r,
                             const MultiIndex& bound, const Caps& caps, unsigned shuffle_seed) {
    require_complete_intersection(alg);
    if (static_cast<int>(bound.size()) != alg.ring().nvars())
        throw invalid_input("bound arity differs from ring dimension");
    for (int b : bound)
        if (b < 0) throw invalid_input("negative expansion bound");
    int cutoff = cutoff_for(alg, r, bound, caps);
    auto gens = alg.standard_basis().generators();
    Expander ex{alg, shuffle_seed == 0 ? MacaulayModel(gens, cutoff)
                                       : MacaulayModel::shuffled(gens, cutoff, shuffle_seed)};
    FAdicExpansion out;
    out.bound = bound;
    ex.expand(r, bound, MultiIndex(bound.size(), 0), out.coeffs);
    // Drop stored zeros so equality of expansions is structural.
    for (auto it = out.coeffs.begin(); it != out.coeffs.end();) {
        bool zero = true;
        for (const auto& c : it->second)
            if (!Field::is_zero(c)) zero = false;
        it = zero ? out.coeffs.erase(it) : std::next(it);
    }
    return out;
}

bool expansion_tail_in_ideal(const QuotientAlgebra& alg, const Polynomial& r,
                             const FAdicExpansion& expansion, const Caps& caps) {
    const Ring& ring = alg.ring();
    const auto& gens = alg.standard_basis().generators();
    Polynomial tail = r;
    for (const auto& [alpha, coords] : expansion.coeffs) {
        Polynomial fpow = Polynomial::constant(ring, Q(1));
        for (size_t i = 0; i < alpha.size(); ++i)
            if (alpha[i] > 0) fpow = fpow * gens[i].pow(alpha[i]);
        tail = tail - alg.lift(coords) * fpow;
    }
    if (tail.is_zero()) return true;
    std::vector<Polynomial> beyond;
    for (size_t i = 0; i < gens.size(); ++i) beyond.push_back(gens[i].pow(expansion.bound[i] + 1));
    return ideal_member(tail, beyond, caps).first;
}

EndoSeries endo_series(const QuotientAlgebra& alg, const Polynomial& r, const MultiIndex& bound,
                       const Caps& caps) {
    require_complete_intersection(alg);
    EndoSeries out;
    out.bound = bound;
    const Field& f = alg.ring().field();
    for (int j = 0; j < alg.dim(); ++j) {
        Polynomial rbj = r.times_term(alg.basis()[j], f.one());
        FAdicExpansion e = f_adic_expand(alg, rbj, bound, caps);
        for (const auto& [alpha, coords] : e.coeffs) {
            auto it = out.gamma.find(alpha);
            if (it == out.gamma.end())
                it = out.gamma.emplace(alpha, Matrix(alg.dim(), alg.dim(), f)).first;
            for (int i = 0; i < alg.dim(); ++i) it->second.at(i, j) = coords[i];
        }
    }
    return out;
}

Q residue_power(const QuotientAlgebra& alg, const Polynomial& r, const MultiIndex& powers,
                const Caps& caps) {
    require_complete_intersection(alg);
    if (static_cast<int>(powers.size()) != alg.ring().nvars())
        throw invalid_input("power arity differs from ring dimension");
    MultiIndex bound;
    for (int m : powers) {
        if (m < 1) throw invalid_input("residue powers must be positive");
        bound.push_back(m - 1);
    }
    const Field& f = alg.ring().field();
    Q tr(0);
    for (int j = 0; j < alg.dim(); ++j) {
        Polynomial rbj = r.times_term(alg.basis()[j], f.one());
        FAdicExpansion e = f_adic_expand(alg, rbj, bound, caps);
        tr = f.add(tr, e.at(bound, alg.dim())[j]);
    }
    return tr;
}

Q residue_power(const std::vector<Polynomial>& gens, const Polynomial& r, const MultiIndex& powers,
                const Caps& caps) {
    QuotientAlgebra alg = QuotientAlgebra::build(gens, caps);
    return residue_power(alg, r, powers, caps);
}

} // namespace jacres
