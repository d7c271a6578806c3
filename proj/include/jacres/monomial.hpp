#ifndef JACRES_MONOMIAL_HPP
#define JACRES_MONOMIAL_HPP

#include <vector>

namespace jacres {

// Exponent vector with cached total degree.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(int nvars) : e_(nvars, 0) {}
    explicit Monomial(std::vector<int> exps);

    static Monomial one(int nvars) { return Monomial(nvars); }
    static Monomial var(int nvars, int i, int exp = 1);

    int nvars() const { return static_cast<int>(e_.size()); }
    int degree() const { return deg_; }
    int operator[](int i) const { return e_[i]; }
    const std::vector<int>& exponents() const { return e_; }
    bool is_one() const { return deg_ == 0; }

    Monomial operator*(const Monomial& o) const;
    bool divides(const Monomial& o) const;
    Monomial divide_by(const Monomial& o) const; // requires o.divides(*this)
    Monomial lcm(const Monomial& o) const;

    bool operator==(const Monomial& o) const { return e_ == o.e_; }

    // Graded-lexicographic comparison (storage/display order):
    // higher total degree first, ties by lexicographic exponent compare.
    // Returns <0, 0, >0 as a is smaller, equal, greater than b.
    static int cmp_grlex(const Monomial& a, const Monomial& b);

    // Anti-graded reverse-lexicographic comparison (the local order):
    // 1 is the unique maximal monomial, lower total degree is larger,
    // degree ties broken by reverse lexicographic order.
    static int cmp_local(const Monomial& a, const Monomial& b);

private:
    std::vector<int> e_;
    int deg_ = 0;
};

struct GrlexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const {
        return Monomial::cmp_grlex(a, b) > 0;
    }
};

struct LocalGreater {
    bool operator()(const Monomial& a, const Monomial& b) const {
        return Monomial::cmp_local(a, b) > 0;
    }
};

} // namespace jacres

#endif
