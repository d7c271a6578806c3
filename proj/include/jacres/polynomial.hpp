#ifndef JACRES_POLYNOMIAL_HPP
#define JACRES_POLYNOMIAL_HPP

#include "jacres/monomial.hpp"
#include "jacres/ring.hpp"

#include <optional>
#include <string>
#include <vector>

namespace jacres {

struct Term {
    Monomial mono;
    Q coeff;
};

// Sparse multivariate polynomial with exact coefficients.  Terms are kept
// in descending graded-lexicographic order with no stored zeros, so two
// polynomials are equal iff their representations are identical.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(Ring ring) : ring_(std::move(ring)) {}

    static Polynomial zero(const Ring& r) { return Polynomial(r); }
    static Polynomial constant(const Ring& r, const Q& c);
    static Polynomial variable(const Ring& r, int i, int exp = 1);
    static Polynomial from_term(const Ring& r, const Monomial& m, const Q& c);

    const Ring& ring() const { return ring_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int term_count() const { return static_cast<int>(terms_.size()); }

    // Max total degree of a term (-1 for the zero polynomial).
    int total_degree() const;
    // Min total degree of a term; nullopt for the zero polynomial.
    std::optional<int> order() const;

    Q coeff(const Monomial& m) const;
    Q constant_coeff() const; // coefficient of 1
    bool is_single_term() const { return terms_.size() == 1; }

    // Largest term under the local (anti-graded revlex) order.
    const Term& leading_term_local() const;

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator-() const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial scaled(const Q& c) const;
    // this * (c * m), the inner loop of reduction algorithms
    Polynomial times_term(const Monomial& m, const Q& c) const;
    Polynomial pow(int e) const;

    Polynomial derivative(int var) const;

    // Substitute images[i] for variable i; images live in target.
    Polynomial substitute(const std::vector<Polynomial>& images, const Ring& target) const;

    // Drop every term of total degree >= bound.
    Polynomial truncated_below_degree(int bound) const;

    bool operator==(const Polynomial& o) const {
        return ring_ == o.ring_ && terms_same(o);
    }

    std::string to_string() const;

    // Build from already-normalized descending-grlex term list (internal).
    static Polynomial from_sorted_terms(const Ring& r, std::vector<Term> terms);

private:
    bool terms_same(const Polynomial& o) const;

    Ring ring_;
    std::vector<Term> terms_;
};

} // namespace jacres

#endif
