#include "jacres/monomial.hpp"

#include "jacres/errors.hpp"

#include <numeric>

namespace jacres {

Monomial::Monomial(std::vector<int> exps) : e_(std::move(exps)) {
    for (int x : e_) {
        if (x < 0) throw invalid_input("negative exponent in monomial");
        deg_ += x;
    }
}

Monomial Monomial::var(int nvars, int i, int exp) {
    Monomial m(nvars);
    m.e_[i] = exp;
    m.deg_ = exp;
    return m;
}

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial r(*this);
    for (int i = 0; i < nvars(); ++i) r.e_[i] += o.e_[i];
    r.deg_ += o.deg_;
    return r;
}

bool Monomial::divides(const Monomial& o) const {
    if (deg_ > o.deg_) return false;
    for (int i = 0; i < nvars(); ++i)
        if (e_[i] > o.e_[i]) return false;
    return true;
}

Monomial Monomial::divide_by(const Monomial& o) const {
    Monomial r(*this);
    for (int i = 0; i < nvars(); ++i) r.e_[i] -= o.e_[i];
    r.deg_ -= o.deg_;
    return r;
}

Monomial Monomial::lcm(const Monomial& o) const {
    Monomial r(*this);
    r.deg_ = 0;
    for (int i = 0; i < nvars(); ++i) {
        if (o.e_[i] > r.e_[i]) r.e_[i] = o.e_[i];
        r.deg_ += r.e_[i];
    }
    return r;
}

int Monomial::cmp_grlex(const Monomial& a, const Monomial& b) {
    if (a.deg_ != b.deg_) return a.deg_ < b.deg_ ? -1 : 1;
    for (int i = 0; i < a.nvars(); ++i)
        if (a.e_[i] != b.e_[i]) return a.e_[i] < b.e_[i] ? -1 : 1;
    return 0;
}

int Monomial::cmp_local(const Monomial& a, const Monomial& b) {
    if (a.deg_ != b.deg_) return a.deg_ < b.deg_ ? 1 : -1;
    // Equal degree: reverse lexicographic, a > b iff the last nonzero
    // entry of a - b is negative.
    for (int i = a.nvars() - 1; i >= 0; --i) {
        int d = a.e_[i] - b.e_[i];
        if (d != 0) return d < 0 ? 1 : -1;
    }
    return 0;
}

} // namespace jacres
