#include "jacres/calculus.hpp"

#include "jacres/errors.hpp"

namespace jacres {

Polynomial poly_determinant(const std::vector<std::vector<Polynomial>>& m, const Ring& ring) {
    int n = static_cast<int>(m.size());
    if (n == 0) return Polynomial::constant(ring, Q(1));
    if (n == 1) return m[0][0];
    // Laplace expansion along the first row; fine at the scales handled here.
    Polynomial acc(ring);
    for (int j = 0; j < n; ++j) {
        if (m[0][j].is_zero()) continue;
        std::vector<std::vector<Polynomial>> sub;
        sub.reserve(n - 1);
        for (int i = 1; i < n; ++i) {
            std::vector<Polynomial> row;
            row.reserve(n - 1);
            for (int k = 0; k < n; ++k)
                if (k != j) row.push_back(m[i][k]);
            sub.push_back(std::move(row));
        }
        Polynomial c = m[0][j] * poly_determinant(sub, ring);
        acc = (j % 2 == 0) ? acc + c : acc - c;
    }
    return acc;
}

JacobianData jacobian_data(const std::vector<Polynomial>& gens) {
    if (gens.empty()) throw invalid_input("empty generator list");
    const Ring& ring = gens.front().ring();
    int n = ring.nvars();
    if (static_cast<int>(gens.size()) != n)
        throw invalid_input("jacobian needs as many generators as variables (" +
                            std::to_string(gens.size()) + " generators, " + std::to_string(n) +
                            " variables)");
    JacobianData out;
    out.matrix.assign(n, std::vector<Polynomial>(n, Polynomial(ring)));
    for (int i = 0; i < n; ++i) {
        if (!(gens[i].ring() == ring)) throw invalid_input("generators live in different rings");
        for (int j = 0; j < n; ++j) out.matrix[i][j] = gens[i].derivative(j);
    }
    out.det = poly_determinant(out.matrix, ring);
    out.minors.assign(n, std::vector<Polynomial>(n, Polynomial(ring)));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            std::vector<std::vector<Polynomial>> sub;
            for (int r = 0; r < n; ++r) {
                if (r == i) continue;
                std::vector<Polynomial> row;
                for (int c = 0; c < n; ++c)
                    if (c != j) row.push_back(out.matrix[r][c]);
                sub.push_back(std::move(row));
            }
            out.minors[i][j] = poly_determinant(sub, ring);
        }
    }
    Matrix at0(n, n, ring.field());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) at0.at(i, j) = out.matrix[i][j].constant_coeff();
    out.rank0 = rank(at0);
    return out;
}

Polynomial hessian_det(const Polynomial& f) {
    const Ring& ring = f.ring();
    int n = ring.nvars();
    std::vector<std::vector<Polynomial>> h(n, std::vector<Polynomial>(n, Polynomial(ring)));
    for (int i = 0; i < n; ++i) {
        Polynomial di = f.derivative(i);
        for (int j = 0; j < n; ++j) h[i][j] = di.derivative(j);
    }
    return poly_determinant(h, ring);
}

ArcImage compose_arc(const Polynomial& p, const Arc& arc) {
    if (static_cast<int>(arc.components.size()) != p.ring().nvars())
        throw invalid_input("arc arity differs from ring dimension");
    if (!(arc.tring.field() == p.ring().field()))
        throw invalid_input("arc and polynomial fields differ");
    ArcImage out;
    out.value = p.substitute(arc.components, arc.tring);
    out.ord = out.value.order();
    return out;
}

} // namespace jacres
