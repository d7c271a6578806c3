#include "jacres/polynomial.hpp"

#include "jacres/errors.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace jacres {

namespace {

void check_same_ring(const Ring& a, const Ring& b) {
    if (!(a == b)) throw invalid_input("polynomial operands live in different rings");
}

} // namespace

Polynomial Polynomial::constant(const Ring& r, const Q& c) {
    Polynomial p(r);
    Q v = r.field().reduce(c);
    if (!Field::is_zero(v)) p.terms_.push_back({Monomial::one(r.nvars()), v});
    return p;
}

Polynomial Polynomial::variable(const Ring& r, int i, int exp) {
    if (i < 0 || i >= r.nvars()) throw invalid_input("variable index out of range");
    if (exp < 0) throw invalid_input("negative exponent");
    Polynomial p(r);
    if (exp == 0) return constant(r, Q(1));
    p.terms_.push_back({Monomial::var(r.nvars(), i, exp), r.field().one()});
    return p;
}

Polynomial Polynomial::from_term(const Ring& r, const Monomial& m, const Q& c) {
    Polynomial p(r);
    Q v = r.field().reduce(c);
    if (!Field::is_zero(v)) p.terms_.push_back({m, v});
    return p;
}

Polynomial Polynomial::from_sorted_terms(const Ring& r, std::vector<Term> terms) {
    Polynomial p(r);
    p.terms_ = std::move(terms);
    return p;
}

int Polynomial::total_degree() const {
    if (terms_.empty()) return -1;
    return terms_.front().mono.degree(); // grlex-descending: first term is max degree
}

std::optional<int> Polynomial::order() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.back().mono.degree();
}

Q Polynomial::coeff(const Monomial& m) const {
    for (const auto& t : terms_)
        if (t.mono == m) return t.coeff;
    return Q(0);
}

Q Polynomial::constant_coeff() const {
    if (!terms_.empty() && terms_.back().mono.is_one()) return terms_.back().coeff;
    return Q(0);
}

const Term& Polynomial::leading_term_local() const {
    if (terms_.empty()) throw invalid_input("zero polynomial has no leading term");
    const Term* best = &terms_.front();
    for (const auto& t : terms_)
        if (Monomial::cmp_local(t.mono, best->mono) > 0) best = &t;
    return *best;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    check_same_ring(ring_, o.ring_);
    const Field& f = ring_.field();
    std::vector<Term> out;
    out.reserve(terms_.size() + o.terms_.size());
    size_t i = 0, j = 0;
    while (i < terms_.size() && j < o.terms_.size()) {
        int c = Monomial::cmp_grlex(terms_[i].mono, o.terms_[j].mono);
        if (c > 0) {
            out.push_back(terms_[i++]);
        } else if (c < 0) {
            out.push_back(o.terms_[j++]);
        } else {
            Q s = f.add(terms_[i].coeff, o.terms_[j].coeff);
            if (!Field::is_zero(s)) out.push_back({terms_[i].mono, s});
            ++i;
            ++j;
        }
    }
    for (; i < terms_.size(); ++i) out.push_back(terms_[i]);
    for (; j < o.terms_.size(); ++j) out.push_back(o.terms_[j]);
    return from_sorted_terms(ring_, std::move(out));
}

Polynomial Polynomial::operator-() const {
    const Field& f = ring_.field();
    Polynomial p(ring_);
    p.terms_.reserve(terms_.size());
    for (const auto& t : terms_) p.terms_.push_back({t.mono, f.neg(t.coeff)});
    return p;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    return *this + (-o);
}

Polynomial Polynomial::scaled(const Q& c) const {
    const Field& f = ring_.field();
    Q v = f.reduce(c);
    if (Field::is_zero(v)) return Polynomial(ring_);
    Polynomial p(ring_);
    p.terms_.reserve(terms_.size());
    for (const auto& t : terms_) p.terms_.push_back({t.mono, f.mul(t.coeff, v)});
    return p;
}

Polynomial Polynomial::times_term(const Monomial& m, const Q& c) const {
    const Field& f = ring_.field();
    Q v = f.reduce(c);
    if (Field::is_zero(v)) return Polynomial(ring_);
    Polynomial p(ring_);
    p.terms_.reserve(terms_.size());
    for (const auto& t : terms_) p.terms_.push_back({t.mono * m, f.mul(t.coeff, v)});
    return p;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    check_same_ring(ring_, o.ring_);
    const Field& f = ring_.field();
    std::map<Monomial, Q, GrlexGreater> acc;
    for (const auto& a : terms_) {
        for (const auto& b : o.terms_) {
            Monomial m = a.mono * b.mono;
            Q v = f.mul(a.coeff, b.coeff);
            auto it = acc.find(m);
            if (it == acc.end()) {
                acc.emplace(std::move(m), std::move(v));
            } else {
                it->second = f.add(it->second, v);
            }
        }
    }
    std::vector<Term> out;
    out.reserve(acc.size());
    for (auto& [m, v] : acc)
        if (!Field::is_zero(v)) out.push_back({m, v});
    return from_sorted_terms(ring_, std::move(out));
}

Polynomial Polynomial::pow(int e) const {
    if (e < 0) throw invalid_input("negative exponent");
    Polynomial r = constant(ring_, Q(1));
    Polynomial base = *this;
    while (e > 0) {
        if (e & 1) r = r * base;
        base = (e >>= 1) ? base * base : base;
    }
    return r;
}

Polynomial Polynomial::derivative(int var) const {
    const Field& f = ring_.field();
    std::vector<Term> out;
    for (const auto& t : terms_) {
        int e = t.mono[var];
        if (e == 0) continue;
        Q c = f.mul(t.coeff, f.from_long(e));
        if (Field::is_zero(c)) continue; // characteristic p kills p*X^p terms
        std::vector<int> exps = t.mono.exponents();
        exps[var] -= 1;
        out.push_back({Monomial(std::move(exps)), c});
    }
    std::sort(out.begin(), out.end(), [](const Term& a, const Term& b) {
        return Monomial::cmp_grlex(a.mono, b.mono) > 0;
    });
    return from_sorted_terms(ring_, std::move(out));
}

Polynomial Polynomial::substitute(const std::vector<Polynomial>& images, const Ring& target) const {
    if (static_cast<int>(images.size()) != ring_.nvars())
        throw invalid_input("substitution image count differs from variable count");
    // Per-variable power cache.
    std::vector<std::vector<Polynomial>> powers(images.size());
    auto power = [&](int var, int e) -> const Polynomial& {
        auto& cache = powers[var];
        if (cache.empty()) cache.push_back(Polynomial::constant(target, Q(1)));
        while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * images[var]);
        return cache[e];
    };
    Polynomial acc(target);
    for (const auto& t : terms_) {
        Polynomial prod = Polynomial::constant(target, t.coeff);
        for (int v = 0; v < ring_.nvars(); ++v) {
            int e = t.mono[v];
            if (e > 0) prod = prod * power(v, e);
        }
        acc = acc + prod;
    }
    return acc;
}

Polynomial Polynomial::truncated_below_degree(int bound) const {
    std::vector<Term> out;
    for (const auto& t : terms_)
        if (t.mono.degree() < bound) out.push_back(t);
    return from_sorted_terms(ring_, std::move(out));
}

bool Polynomial::terms_same(const Polynomial& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    for (size_t i = 0; i < terms_.size(); ++i)
        if (!(terms_[i].mono == o.terms_[i].mono) || terms_[i].coeff != o.terms_[i].coeff)
            return false;
    return true;
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    const bool rational = ring_.field().is_rationals();
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
        Q c = t.coeff;
        bool negative = rational && sgn(c) < 0;
        if (first) {
            if (negative) os << "-";
            first = false;
        } else {
            os << (negative ? " - " : " + ");
        }
        if (negative) c = -c;
        std::string monostr;
        for (int v = 0; v < ring_.nvars(); ++v) {
            int e = t.mono[v];
            if (e == 0) continue;
            if (!monostr.empty()) monostr += "*";
            monostr += ring_.var_name(v);
            if (e > 1) monostr += "^" + std::to_string(e);
        }
        if (monostr.empty()) {
            os << c.get_str();
        } else if (c == 1) {
            os << monostr;
        } else {
            os << c.get_str() << "*" << monostr;
        }
    }
    return os.str();
}

} // namespace jacres
