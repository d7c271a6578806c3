#ifndef JACRES_BEZOUTIAN_HPP
#define JACRES_BEZOUTIAN_HPP

#include "jacres/artin.hpp"

#include <vector>

namespace jacres {

// The residue functional on P = R/(f_1,...,f_n), realized through the
// Scheja-Storch construction: the Bezoutian of the sequence is reduced in
// P (x) P and the functional is solved from  sum ell(b_mu) c_mu = 1.
// It generates Hom(P, k) as a P-module and pairs non-degenerately in
// characteristic zero.
class ResidueFunctional {
public:
    // `reversed` flips the variable-by-variable telescoping direction of the
    // divided differences; the resulting functional is identical.
    static ResidueFunctional build(const QuotientAlgebra& alg, bool reversed = false);

    const QuotientAlgebra& algebra() const { return *alg_; }

    // Value on a basis monomial.
    const std::vector<Q>& basis_values() const { return values_; }
    // ell(g) = ell of the reduced representative of g.
    Q ell(const Polynomial& g) const;

    // Reduced Bezoutian coefficients: bez(mu, nu) is the coefficient of
    // b_mu (x) b_nu.
    const Matrix& bezout_coefficients() const { return bez_; }
    // Pairing matrix T with T_ij = ell(b_i * b_j).
    const Matrix& pairing() const { return pairing_; }
    bool pairing_invertible() const { return pairing_invertible_; }

private:
    std::shared_ptr<const QuotientAlgebra> alg_;
    std::vector<Q> values_;
    Matrix bez_;
    Matrix pairing_;
    bool pairing_invertible_ = false;
};

struct NondegeneracyVerdict {
    bool pairing_invertible = false;
    int probes = 0;
    int mismatches = 0; // probes where (all pairings zero) != (membership)
};

// Checks the duality: the pairing matrix is invertible and, per probe, all
// ell(r * b_j) vanish exactly when r lies in the ideal.  Characteristic zero
// failures raise invariant_violation.
NondegeneracyVerdict nondegeneracy_check(const std::vector<Polynomial>& gens,
                                         const std::vector<Polynomial>& probes,
                                         const Caps& caps = Caps());

} // namespace jacres

#endif
