#ifndef JACRES_CALCULUS_HPP
#define JACRES_CALCULUS_HPP

#include "jacres/linalg.hpp"
#include "jacres/parser.hpp"
#include "jacres/polynomial.hpp"

#include <optional>
#include <vector>

namespace jacres {

struct JacobianData {
    std::vector<std::vector<Polynomial>> matrix; // entry (i,j) = d f_i / d X_j
    Polynomial det;
    std::vector<std::vector<Polynomial>> minors; // (i,j) minor (row i, col j removed)
    int rank0 = 0;                               // rank of the matrix at the origin
};

// Jacobian matrix, determinant, full minor table and rank at 0 for a
// square system (as many generators as variables).
JacobianData jacobian_data(const std::vector<Polynomial>& gens);

// Determinant of an arbitrary square polynomial matrix (Laplace expansion).
Polynomial poly_determinant(const std::vector<std::vector<Polynomial>>& m, const Ring& ring);

// Determinant of the matrix of second partials.
Polynomial hessian_det(const Polynomial& f);

struct ArcImage {
    Polynomial value;       // p(phi(t)), univariate in t
    std::optional<int> ord; // t-adic order; nullopt encodes +infinity (value == 0)
};

// Exact substitution of an arc into a polynomial.
ArcImage compose_arc(const Polynomial& p, const Arc& arc);

} // namespace jacres

#endif
