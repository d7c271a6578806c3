#ifndef JACRES_ARTIN_HPP
#define JACRES_ARTIN_HPP

#include "jacres/linalg.hpp"
#include "jacres/macaulay.hpp"
#include "jacres/standard_basis.hpp"

#include <map>
#include <memory>
#include <optional>

namespace jacres {

// Finite-dimensional quotient algebra P = R/I presented on its standard
// monomial basis, with the canonical linear section (reduced representative
// supported on standard monomials) as reducer.
class QuotientAlgebra {
public:
    static QuotientAlgebra build(std::vector<Polynomial> gens, const Caps& caps = Caps());

    const Ring& ring() const { return ring_; }
    const StandardBasis& standard_basis() const { return sb_; }
    const std::vector<Monomial>& basis() const { return basis_; }
    int dim() const { return static_cast<int>(basis_.size()); }
    int containment_index() const { return s_; }

    // Coordinates of the class of g on the standard monomial basis.
    std::vector<Q> reduce(const Polynomial& g) const;
    std::vector<Q> reduce_monomial(const Monomial& m) const; // memoized
    // The linear section: reduced representative of a coordinate vector.
    Polynomial lift(const std::vector<Q>& coords) const;
    Polynomial reduced_representative(const Polynomial& g) const { return lift(reduce(g)); }

    // Matrix of multiplication by g on the basis.
    Matrix mult_matrix(const Polynomial& g) const;
    static bool is_nilpotent(const Matrix& op);

    // Trace of multiplication by r; equals the residue of r df_1^...^df_n
    // over (f_1,...,f_n).
    Q trace_residue(const Polynomial& r) const;

    struct Socle {
        std::vector<Polynomial> basis;
        bool simple = false;
    };
    // Intersection of the kernels of multiplication by each variable.
    Socle socle() const;

private:
    QuotientAlgebra() = default;

    Ring ring_;
    StandardBasis sb_;
    std::vector<Monomial> basis_;
    int s_ = 0;
    int maxstd_ = 0;
    std::vector<Monomial> space_;             // all monomials of degree <= maxstd
    std::shared_ptr<RowEchelon> reducer_;     // echelon of the ideal inside that space
    std::vector<int> basis_col_;              // column index of each basis monomial
    mutable std::map<std::vector<int>, std::vector<Q>> mono_cache_;
};

struct JacobianVerdict {
    bool dim_finite = false;
    int dim = 0;
    int witness_var = -1;
    bool dim_positive = false;
    bool jacobian_in_ideal = false;
    std::optional<bool> socle_generated; // finite case only
    bool char_caveat = false;            // positive characteristic, no assertion made
    Polynomial jacobian;
    MembershipCertificate membership; // over the generators; remainder 0 iff in ideal
};

// Full verdict: dimension, Jacobian membership with certificate, socle
// generation.  In characteristic zero the dimension/membership biconditional
// and the socle statements are asserted (invariant_violation on failure); in
// characteristic p only the direction valid for gcd(dim, p) = 1 is asserted.
JacobianVerdict jacobian_test(const std::vector<Polynomial>& gens, const Caps& caps = Caps());

} // namespace jacres

#endif
