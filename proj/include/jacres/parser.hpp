#ifndef JACRES_PARSER_HPP
#define JACRES_PARSER_HPP

#include "jacres/polynomial.hpp"

#include <optional>
#include <string>
#include <vector>

namespace jacres {

// Optional coefficient-ring clause of a system file: auxiliary variables
// with (possibly empty) relation polynomials, both over the same field as
// the main ring.  Relations only involve the auxiliary variables.
struct CoeffRingSpec {
    std::vector<std::string> uvars;
    std::vector<Polynomial> relations; // in the ambient ring
};

struct ParsedSystem {
    Ring ring;                      // ambient ring: (uvars + xvars), or xvars alone
    std::vector<std::string> xvars; // main variables, file order
    std::vector<std::string> uvars; // auxiliary variables (empty without coeff:)
    std::vector<Polynomial> generators; // in the ambient ring, file order
    std::optional<CoeffRingSpec> coeff;

    bool relative() const { return coeff.has_value(); }
    // Ring in the main variables only (equals `ring` when not relative).
    Ring xring() const;
};

// Parses a system document:
//   ring: Q[x,y]            (or F<p>[...])
//   f: x^2 - 2*x*y          (one or more)
//   coeff: Q[u]/(u^2)       (optional; relation list optional)
// '#' starts a comment; blank lines are ignored.
ParsedSystem parse_system(const std::string& text);

// Parses one polynomial expression against a fixed ring.
Polynomial parse_polynomial(const std::string& expr, const Ring& ring);

// Parametrized curves through the origin: components are univariate
// polynomials in t with zero constant term, at least one nonzero.
struct Arc {
    Ring tring;
    std::vector<Polynomial> components;
};

// Parses an arc document: lines of the form `arc: <expr_t>, <expr_t>, ...`.
std::vector<Arc> parse_arcs(const std::string& text, const Field& field);

Arc make_arc(std::vector<Polynomial> components);

} // namespace jacres

#endif
