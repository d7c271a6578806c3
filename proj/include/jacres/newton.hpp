#ifndef JACRES_NEWTON_HPP
#define JACRES_NEWTON_HPP

#include "jacres/polynomial.hpp"

#include <vector>

namespace jacres {

// A face inequality <l, v> >= c of the Newton polyhedron, with l a primitive
// nonnegative integer vector.
struct Facet {
    std::vector<mpz_class> normal;
    mpz_class offset;
};

// Newton polyhedron of a monomial ideal: the convex hull of the generator
// exponents plus the positive orthant.  Facets are enumerated exactly by
// Fourier-Motzkin elimination of the hull multipliers.
class NewtonPolyhedron {
public:
    static NewtonPolyhedron build(std::vector<Monomial> exponents);

    int nvars() const { return n_; }
    const std::vector<Monomial>& exponents() const { return exps_; }
    const std::vector<Facet>& facets() const { return facets_; }

    bool contains(const Monomial& a) const;
    bool contains(const std::vector<Q>& point) const;

    // Samuel asymptotic value of a monomial: the largest theta with the
    // exponent inside theta times the polyhedron, i.e. the minimum of
    // <l,a>/c over the facets with positive offset.
    Q samuel_value(const Monomial& a) const;

    // Minimal monomial generators of the integral closure: the minimal
    // lattice points of the polyhedron (componentwise bounded by the
    // generator maxima).
    std::vector<Monomial> closure_generators() const;

    // Closure equals the ideal itself (every closure generator divisible by
    // an ideal generator).
    bool integrally_closed() const;

private:
    int n_ = 0;
    std::vector<Monomial> exps_;
    std::vector<Facet> facets_;
};

// The generators must all be single terms vanishing at the origin.
NewtonPolyhedron newton_polyhedron(const std::vector<Polynomial>& monomial_gens);

// Samuel value of a single-term polynomial over a monomial ideal.
Q samuel_monomial(const std::vector<Polynomial>& monomial_gens, const Polynomial& a);

} // namespace jacres

#endif
