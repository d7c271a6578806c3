#ifndef JACRES_CLOSURE_HPP
#define JACRES_CLOSURE_HPP

#include "jacres/calculus.hpp"
#include "jacres/newton.hpp"
#include "jacres/standard_basis.hpp"

#include <optional>

namespace jacres {

struct ArcReportResult {
    std::vector<std::optional<int>> generator_orders; // ord_t(f_i o phi)
    std::optional<int> min_order;                     // nullopt: arc inside the zero set
    std::optional<int> probe_order;                   // ord_t(u o phi), when u given
    std::optional<Q> ratio;                           // probe_order / min_order
    bool ratio_defined = false;
    bool cramer_ok = false; // phi_j' * (J o phi) = sum_i (-1)^{i+j} (M_ij o phi)(f_i o phi)'
};

// Exact orders along an arc plus the Cramer identity check (square systems).
ArcReportResult arc_report(const std::vector<Polynomial>& gens, const Arc& arc,
                           const std::optional<Polynomial>& probe, const Caps& caps = Caps());

struct SamuelBounds {
    Q lower;                // max over m <= mcap of ord_I(u^m)/m
    std::optional<Q> upper; // min arc ratio; nullopt for an empty arc list
};

// Sandwich for the Samuel asymptotic value of u: power-membership orders
// from below, arc ratios from above.
SamuelBounds samuel_bounds(const std::vector<Polynomial>& gens, const Polynomial& u,
                           const std::vector<Arc>& arcs, int mcap, const Caps& caps = Caps());

struct LojaCertificateResult {
    int rank0 = 0;
    int codim = 0;             // n - rank0
    bool no_statement = false; // codim <= 1
    int containment_index = 0; // s of the (reduced) system
    Q theta_lb;                // certified exponent lower bound
    bool strict_order = false; // min generator order >= 3 (strict case when codim = 2)
    bool closure_certified = false; // J in the integral closure was certified
    std::optional<Q> vbar_exact;    // exact Samuel value of J (monomial case)
    std::optional<Q> vbar_lower, vbar_upper;
    Polynomial jacobian;
};

// Lojasiewicz-exponent certificate for an m-primary square system.  Inputs
// with positive Jacobian rank at 0 must present the rank structure
// explicitly (coordinate generators plus higher-order generators in the
// remaining variables); anything else is rejected as "reduction required".
LojaCertificateResult loja_certificate(const std::vector<Polynomial>& gens,
                                       const std::vector<Arc>& arcs = {}, int mcap = 3,
                                       const Caps& caps = Caps());

enum class ClosedVerdict { yes, no, not_computed };

struct HessianVerdict {
    bool isolated = false;
    bool hessian_in_jacobian_ideal = false;
    ClosedVerdict jacobian_ideal_closed = ClosedVerdict::not_computed;
    Polynomial hessian;
};

// Isolated-singularity test via the Hessian: isolated iff the Hessian
// determinant avoids the jacobian ideal (characteristic zero); integral
// closedness is decided only for monomial jacobian ideals.
HessianVerdict hessian_criterion(const Polynomial& f, const Caps& caps = Caps());

} // namespace jacres

#endif
