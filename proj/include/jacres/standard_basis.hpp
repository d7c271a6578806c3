#ifndef JACRES_STANDARD_BASIS_HPP
#define JACRES_STANDARD_BASIS_HPP

#include "jacres/caps.hpp"
#include "jacres/polynomial.hpp"

#include <optional>
#include <vector>

namespace jacres {

// Division identity  unit * g = sum cofactors[i] * reference[i] + remainder
// with unit(0) != 0.  The reference list is whichever generating set the
// producing call documents (a standard basis or the user's generators).
struct MembershipCertificate {
    Polynomial unit;
    std::vector<Polynomial> cofactors;
    Polynomial remainder;

    // Exact re-multiplication check of the identity above.
    bool verifies(const Polynomial& g, const std::vector<Polynomial>& reference) const;
};

// Standard basis of an ideal under the local (anti-graded revlex) order,
// with a certificate writing every basis element over the input generators.
class StandardBasis {
public:
    StandardBasis() = default;
    static StandardBasis compute(std::vector<Polynomial> gens, const Caps& caps = Caps());

    const Ring& ring() const { return ring_; }
    const std::vector<Polynomial>& generators() const { return gens_; }
    const std::vector<Polynomial>& basis() const { return basis_; }
    const std::vector<MembershipCertificate>& basis_certificates() const { return certs_; }

    // Minimal generators of the leading-term ideal.
    const std::vector<Monomial>& lead_ideal() const { return lead_min_; }

    // Mora weak normal form: remainder zero or with non-divisible leading
    // term.  Certificate cofactors are over basis().
    std::pair<Polynomial, MembershipCertificate> weak_normal_form(const Polynomial& g) const;

    // Fully reduced normal form: no term of the remainder is divisible by a
    // leading term of the basis.  Certificate cofactors are over basis().
    std::pair<Polynomial, MembershipCertificate> normal_form(const Polynomial& g) const;

    // Rewrites a certificate over basis() into one over generators().
    MembershipCertificate over_generators(const Polynomial& g,
                                          const MembershipCertificate& c) const;

    const Caps& caps() const { return caps_; }

private:
    Ring ring_;
    Caps caps_;
    std::vector<Polynomial> gens_;
    std::vector<Polynomial> basis_;
    std::vector<MembershipCertificate> certs_; // unit*basis[i] = sum cof*gens
    std::vector<Monomial> lead_min_;
};

struct DimensionResult {
    bool finite = false;
    int dim = 0;
    std::vector<Monomial> std_monomials; // sorted descending in the local order (1 first)
    int witness_var = -1;                // variable with no pure power in the lead ideal
};

DimensionResult quotient_dimension(const StandardBasis& sb);
DimensionResult quotient_dimension(const std::vector<Polynomial>& gens, const Caps& caps = Caps());

// Membership in the ideal generated in the formal power series ring.
// Certificate cofactors are over the passed generators; remainder is zero
// exactly when the answer is true.
std::pair<bool, MembershipCertificate> ideal_member(const Polynomial& g, const StandardBasis& sb);
std::pair<bool, MembershipCertificate> ideal_member(const Polynomial& g,
                                                    const std::vector<Polynomial>& gens,
                                                    const Caps& caps = Caps());

// Generators of I^k (k-fold products; k = 0 gives {1}).
std::vector<Polynomial> power_products(const std::vector<Polynomial>& gens, int k);

// Least s with m^s contained in the ideal, certified degree-by-degree via
// the Nakayama shortcut (m^s in I + m^{s+1}).  Requires a finite quotient.
int containment_index(const StandardBasis& sb);

// Largest k <= cap with g in I^k; nullopt means "at least cap + 1" is not
// claimed: g == 0 maps to nullopt-as-infinity via the bool flag.
struct IdealOrder {
    bool infinite = false; // g == 0
    int ord = 0;
};
IdealOrder ideal_order(const Polynomial& g, const std::vector<Polynomial>& gens, int cap,
                       const Caps& caps = Caps());

} // namespace jacres

#endif
