#ifndef JACRES_RELATIVE_HPP
#define JACRES_RELATIVE_HPP

#include "jacres/artin.hpp"
#include "jacres/parser.hpp"

#include <optional>

namespace jacres {

enum class CoeffKind { field, domain_polynomial, artinian_quotient };

struct CoeffAnalysis {
    CoeffKind kind = CoeffKind::field;
    std::vector<std::string> uvars;
    std::vector<Polynomial> relations; // in the ambient ring
    int a_dim = 1;                     // dim_k A (1 for a field; artinian case otherwise)
    bool gorenstein = true;            // socle of the u-quotient is simple
};

// Classifies the coefficient ring of a parsed system and, for artinian
// quotients, verifies that the relations are primary to the u-variables.
CoeffAnalysis analyze_coeff(const ParsedSystem& sys, const Caps& caps = Caps());

// Generators of the flattened ideal (F) + (H) in the ambient ring.
std::vector<Polynomial> flattened_ideal(const ParsedSystem& sys);

// Membership of g in (F) * A[[X]] via the flattened ideal.
std::pair<bool, MembershipCertificate> relative_member(const Polynomial& g,
                                                       const ParsedSystem& sys,
                                                       const Caps& caps = Caps());

// Jacobian determinant with respect to the main variables only.
Polynomial relative_jacobian(const ParsedSystem& sys);

// Substitute 0 for every auxiliary variable; result lives in sys.xring().
Polynomial specialize_u_zero(const ParsedSystem& sys, const Polynomial& g);

struct TraceResult {
    Polynomial trace;  // element of A, reduced representative on u-monomials
    int rank = 0;      // A-rank of P
    std::vector<Monomial> a_basis; // lifted basis (X-monomials)
};

// Trace over A of multiplication by g on P = A[[X]]/(F).  Throws
// invalid_input("not free...") when the lifted basis fails to present P as a
// free A-module.
TraceResult trace_over_A(const ParsedSystem& sys, const Polynomial& g, const Caps& caps = Caps());

struct WitnessReport {
    Polynomial witness;
    int radical_power = 0; // least k with w^k in I
    bool jw_in_ideal = false;
};

struct Th31Report {
    CoeffKind kind = CoeffKind::field;
    bool asserted = false; // integral-domain coefficients: conclusions asserted
    std::vector<WitnessReport> witnesses;
    bool jacobian_in_ideal = false;
    bool conclusion1_observed = false; // J * w in I for every witness
    bool conclusion2_observed = false; // J not in I
};

// Jacobian-times-radical containment: asserted over integral-domain
// coefficients, probe-only (report mode) over artinian quotients.  Each
// witness must verify w^k in I within the radical cap.
Th31Report theorem31_check(const ParsedSystem& sys, const std::vector<Polynomial>& witnesses,
                           const Caps& caps = Caps());

struct Th33Report {
    bool quotient_artinian = false; // flattened quotient Artinian?
    bool jacobian_in_ideal = false;
    bool observed = false; // non-Artinian quotient implies J in I
    int witness_var = -1;  // variable with no pure power when non-Artinian
};

// Probe of the non-Artinian branch over a Gorenstein artinian coefficient
// ring (or a field): reports whether its conclusion is observed, never
// asserting it.
Th33Report theorem33_probe(const ParsedSystem& sys, const Caps& caps = Caps());

} // namespace jacres

#endif
