#ifndef JACRES_EXPANSION_HPP
#define JACRES_EXPANSION_HPP

#include "jacres/artin.hpp"

#include <map>
#include <vector>

namespace jacres {

using MultiIndex = std::vector<int>;

// Finite block of the f-adic expansion r = sum sigma(r_alpha) f^alpha of a
// ring element along a regular sequence: one class in P per multi-index
// alpha below the bound (missing entries are zero).
struct FAdicExpansion {
    MultiIndex bound;
    std::map<MultiIndex, std::vector<Q>> coeffs;

    std::vector<Q> at(const MultiIndex& alpha, int dim) const {
        auto it = coeffs.find(alpha);
        if (it != coeffs.end()) return it->second;
        return std::vector<Q>(dim, Q(0));
    }
};

// Expands r by recursive division: split off the reduced representative,
// divide the rest exactly through a truncated Macaulay model, recurse on the
// cofactors.  Requires an m-primary complete intersection (|gens| = nvars).
FAdicExpansion f_adic_expand(const QuotientAlgebra& alg, const Polynomial& r,
                             const MultiIndex& bound, const Caps& caps = Caps(),
                             unsigned shuffle_seed = 0);

// Exact check that r minus the expanded block lies in the ideal generated by
// f_i^{bound_i + 1}; this is what "the tail is beyond the bound" means.
bool expansion_tail_in_ideal(const QuotientAlgebra& alg, const Polynomial& r,
                             const FAdicExpansion& expansion, const Caps& caps = Caps());

// Endomorphism coefficients gamma_alpha of multiplication by r: column j of
// gamma_alpha holds the alpha-coefficient of the expansion of r * b_j.
struct EndoSeries {
    MultiIndex bound;
    std::map<MultiIndex, Matrix> gamma;

    Matrix at(const MultiIndex& alpha, int dim, const Field& f) const {
        auto it = gamma.find(alpha);
        if (it != gamma.end()) return it->second;
        return Matrix(dim, dim, f);
    }
};

EndoSeries endo_series(const QuotientAlgebra& alg, const Polynomial& r, const MultiIndex& bound,
                       const Caps& caps = Caps());

// Residue of r dr_1^...^dr_n over (f_1^{m_1},...,f_n^{m_n}) with r_j = f_j:
// the trace of gamma_{m-1}.  All m_i must be >= 1.
Q residue_power(const std::vector<Polynomial>& gens, const Polynomial& r, const MultiIndex& powers,
                const Caps& caps = Caps());
Q residue_power(const QuotientAlgebra& alg, const Polynomial& r, const MultiIndex& powers,
                const Caps& caps = Caps());

} // namespace jacres

#endif
