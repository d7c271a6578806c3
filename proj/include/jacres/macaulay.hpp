#ifndef JACRES_MACAULAY_HPP
#define JACRES_MACAULAY_HPP

#include "jacres/caps.hpp"
#include "jacres/linalg.hpp"
#include "jacres/polynomial.hpp"

#include <optional>
#include <vector>

namespace jacres {

// Truncated linear model of an ideal: the span of all monomial multiples of
// the generators inside the space of polynomials of degree < cutoff.  For an
// m-primary ideal with containment index s, a cutoff of at least
// s + deg(g) + 1 makes span membership of g equivalent to ideal membership;
// the tail beyond the cutoff is absorbed by m^cutoff, which lies in I.
//
// Independent of the Mora reduction path on purpose: this is the oracle the
// test suite plays the two implementations against each other with.
class MacaulayModel {
public:
    MacaulayModel(std::vector<Polynomial> gens, int cutoff, bool track = true);

    const Ring& ring() const { return ring_; }
    int cutoff() const { return cutoff_; }
    int monomial_count() const { return static_cast<int>(monomials_.size()); }
    // Dimension of the complement of the truncated span.
    int corank() const;

    // Is the truncation of g in the span?  (Equivalent to membership when
    // cutoff >= s + deg g + 1 and g has degree < cutoff.)
    bool contains(const Polynomial& g) const;

    // Exact polynomial cofactors a_i with  g - sum a_i gens_i  supported in
    // degrees >= cutoff; nullopt when g is not in the span.  Row order may be
    // permuted (seed) to exercise independence from division choices.
    std::optional<std::vector<Polynomial>> cofactors(const Polynomial& g) const;

    // Rebuild with rows fed in a seeded shuffle (alternative division order).
    static MacaulayModel shuffled(std::vector<Polynomial> gens, int cutoff, unsigned seed);

private:
    MacaulayModel() = default;
    void build(std::vector<std::pair<int, Monomial>> rows, bool track);
    std::vector<Q> vectorize(const Polynomial& g) const;

    Ring ring_;
    int cutoff_ = 0;
    std::vector<Polynomial> gens_;
    std::vector<Monomial> monomials_; // degree < cutoff, descending local order
    std::vector<int> index_of_;       // dense lookup via position map
    RowEchelon ech_{0, Field()};
    std::vector<std::pair<int, Monomial>> row_tags_; // original row -> (gen, multiplier)
};

// Independent membership oracle for m-primary ideals.  With a known
// containment index s the cutoff is the certified s + deg(g) + 1; without
// one it falls back to corank stabilization, capped by caps.max_degree.
bool macaulay_member(const Polynomial& g, const std::vector<Polynomial>& gens,
                     const Caps& caps = Caps(), int containment_index = -1);

// Corank of the truncated model at the given cutoff.
int macaulay_corank(const std::vector<Polynomial>& gens, int cutoff);

// All monomials of degree < cutoff, descending local order.
std::vector<Monomial> monomials_below(int nvars, int cutoff);

} // namespace jacres

#endif
