#ifndef JACRES_TEST_HELPERS_HPP
#define JACRES_TEST_HELPERS_HPP

#include "jacres/parser.hpp"

#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace jacres::test {

inline Monomial mono(std::vector<int> exps) { return Monomial(std::move(exps)); }

inline std::string ex_path(const std::string& name) {
    return std::string(JACRES_EX_DIR) + "/" + name;
}

inline std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline ParsedSystem load_system(const std::string& name) {
    return parse_system(slurp(ex_path(name)));
}

inline std::vector<Arc> load_arcs(const std::string& name, const Field& field) {
    return parse_arcs(slurp(ex_path(name)), field);
}

// Small random polynomials with a fixed seed per call site.
class PolyGen {
public:
    PolyGen(Ring ring, unsigned seed) : ring_(std::move(ring)), rng_(seed) {}

    Polynomial next(int max_exp = 3, int max_terms = 4, bool nonzero = false) {
        std::uniform_int_distribution<int> expd(0, max_exp), coeffd(-5, 5), termsd(1, max_terms);
        Polynomial p(ring_);
        int terms = termsd(rng_);
        for (int t = 0; t < terms; ++t) {
            std::vector<int> e(ring_.nvars());
            for (auto& x : e) x = expd(rng_);
            p = p + Polynomial::from_term(ring_, Monomial(std::move(e)), Q(coeffd(rng_)));
        }
        if (nonzero && p.is_zero()) return next(max_exp, max_terms, true);
        return p;
    }

    // Arc with polynomial components t^(>=1) * unit-ish content.
    Arc next_arc(int nvars, int max_lead = 3, int max_extra = 2) {
        std::uniform_int_distribution<int> leadd(1, max_lead), coeffd(1, 3), extrad(0, max_extra);
        std::vector<Polynomial> comps;
        Ring tring({"t"}, ring_.field());
        for (int i = 0; i < nvars; ++i) {
            int lead = leadd(rng_);
            Polynomial c = Polynomial::variable(tring, 0, lead).scaled(Q(coeffd(rng_)));
            int extra = extrad(rng_);
            for (int k = 1; k <= extra; ++k) {
                int cf = coeffd(rng_) - 2; // may vanish
                if (cf != 0)
                    c = c + Polynomial::variable(tring, 0, lead + k).scaled(Q(cf));
            }
            comps.push_back(std::move(c));
        }
        return make_arc(std::move(comps));
    }

private:
    Ring ring_;
    std::mt19937 rng_;
};

// Determinant by permutation expansion: an implementation-independent
// oracle for the determinant routines.
inline Polynomial permutation_determinant(const std::vector<std::vector<Polynomial>>& m,
                                          const Ring& ring) {
    int n = static_cast<int>(m.size());
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    Polynomial acc(ring);
    do {
        int inversions = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (perm[i] > perm[j]) ++inversions;
        Polynomial prod = Polynomial::constant(ring, Q(1));
        for (int i = 0; i < n; ++i) prod = prod * m[i][perm[i]];
        acc = (inversions % 2 == 0) ? acc + prod : acc - prod;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return acc;
}

} // namespace jacres::test

#endif
