#include "jacres/newton.hpp"

#include "jacres/errors.hpp"
#include "jacres/linalg.hpp"

#include <algorithm>
#include <set>

namespace jacres {

namespace {

// A row encodes sum coeff[i] * var_i >= rhs over (v_1..v_n, lambda_1..lambda_{k-1}).
struct FMRow {
    std::vector<Q> coeff;
    Q rhs;
};

std::vector<Q> normalize_primitive(const std::vector<Q>& coeff, const Q& rhs,
                                   mpz_class* out_rhs) {
    // Scale to integers and divide by the gcd.
    mpz_class scale(1);
    auto fold_den = [&](const mpz_class& den) { scale = scale * den / gcd(scale, den); };
    for (const auto& c : coeff) fold_den(c.get_den());
    fold_den(rhs.get_den());
    std::vector<mpz_class> ints;
    mpz_class g(0);
    for (const auto& c : coeff) {
        mpz_class v = c.get_num() * (scale / c.get_den());
        g = gcd(g, v);
        ints.push_back(std::move(v));
    }
    mpz_class r = rhs.get_num() * (scale / rhs.get_den());
    g = gcd(g, r);
    if (g == 0) g = 1;
    std::vector<Q> out;
    for (auto& v : ints) out.emplace_back(v / g);
    *out_rhs = r / g;
    return out;
}

} // namespace

NewtonPolyhedron NewtonPolyhedron::build(std::vector<Monomial> exponents) {
    if (exponents.empty()) throw invalid_input("no exponents for the Newton polyhedron");
    NewtonPolyhedron np;
    np.n_ = exponents.front().nvars();
    for (const auto& e : exponents) {
        if (e.nvars() != np.n_) throw invalid_input("exponent arity mismatch");
        if (e.degree() == 0) throw invalid_input("generator exponent 0 makes the ideal trivial");
    }
    std::sort(exponents.begin(), exponents.end(), [](const Monomial& a, const Monomial& b) {
        return Monomial::cmp_grlex(a, b) < 0;
    });
    exponents.erase(std::unique(exponents.begin(), exponents.end()), exponents.end());
    np.exps_ = exponents;
    const int n = np.n_;
    const int k = static_cast<int>(exponents.size());

    // v in NP iff there are lambda_e >= 0 with sum lambda = 1 and
    // v >= sum lambda_e e (componentwise).  Substitute
    // lambda_k = 1 - sum_{e<k} lambda_e and eliminate the rest.
    const int vars = n + (k - 1);
    std::vector<FMRow> rows;
    const auto& last = exponents.back();
    for (int i = 0; i < n; ++i) {
        FMRow r;
        r.coeff.assign(vars, Q(0));
        r.coeff[i] = 1;
        for (int e = 0; e < k - 1; ++e) r.coeff[n + e] = Q(last[i]) - Q(exponents[e][i]);
        r.rhs = Q(last[i]);
        rows.push_back(std::move(r));
    }
    for (int e = 0; e < k - 1; ++e) {
        FMRow r;
        r.coeff.assign(vars, Q(0));
        r.coeff[n + e] = 1;
        r.rhs = 0;
        rows.push_back(std::move(r));
    }
    {
        FMRow r; // lambda_k >= 0
        r.coeff.assign(vars, Q(0));
        for (int e = 0; e < k - 1; ++e) r.coeff[n + e] = -1;
        r.rhs = -1;
        rows.push_back(std::move(r));
    }

    for (int drop = vars - 1; drop >= n; --drop) {
        std::vector<FMRow> pos, neg, zero;
        for (auto& r : rows) {
            int s = sgn(r.coeff[drop]);
            if (s > 0)
                pos.push_back(std::move(r));
            else if (s < 0)
                neg.push_back(std::move(r));
            else
                zero.push_back(std::move(r));
        }
        std::vector<FMRow> next = std::move(zero);
        std::set<std::pair<std::vector<mpz_class>, mpz_class>> seen;
        auto push_unique = [&](FMRow r) {
            bool nonzero = false;
            for (int i = 0; i < drop; ++i)
                if (!Field::is_zero(r.coeff[i])) nonzero = true;
            if (!nonzero) {
                if (sgn(r.rhs) > 0) throw invariant_violation("infeasible hull system");
                return; // trivially true
            }
            mpz_class rz;
            std::vector<Q> cq(r.coeff.begin(), r.coeff.begin() + drop);
            std::vector<Q> prim = normalize_primitive(cq, r.rhs, &rz);
            std::vector<mpz_class> key;
            for (const auto& q : prim) key.emplace_back(q.get_num());
            if (!seen.insert({key, rz}).second) return;
            FMRow out;
            out.coeff.assign(vars, Q(0));
            for (int i = 0; i < drop; ++i) out.coeff[i] = prim[i];
            out.rhs = Q(rz);
            next.push_back(std::move(out));
        };
        for (const auto& p : pos)
            for (const auto& m : neg) {
                FMRow r;
                r.coeff.assign(vars, Q(0));
                Q a = p.coeff[drop];
                Q b = -m.coeff[drop];
                for (int i = 0; i < drop; ++i) r.coeff[i] = b * p.coeff[i] + a * m.coeff[i];
                r.rhs = b * p.rhs + a * m.rhs;
                push_unique(std::move(r));
            }
        rows = std::move(next);
        if (rows.size() > 20000)
            throw inconclusive_error("facet elimination exceeded the row cap");
    }

    // Keep the genuine facets: tight on at least one generator and with a
    // tight set of affine dimension n-1 (generator differences plus the
    // coordinate rays the normal ignores).
    std::set<std::pair<std::vector<mpz_class>, mpz_class>> emitted;
    for (const auto& r : rows) {
        mpz_class rz;
        std::vector<Q> cq(r.coeff.begin(), r.coeff.begin() + n);
        std::vector<Q> prim = normalize_primitive(cq, r.rhs, &rz);
        bool nonneg = true;
        for (const auto& c : prim)
            if (sgn(c) < 0) nonneg = false;
        if (!nonneg) continue; // cannot be valid for the orthant recession cone
        std::vector<Monomial> tight;
        for (const auto& e : np.exps_) {
            Q val(0);
            for (int i = 0; i < n; ++i) val += prim[i] * e[i];
            if (val < Q(rz)) {
                tight.clear();
                break; // not even valid
            }
            if (val == Q(rz)) tight.push_back(e);
        }
        if (tight.empty()) continue;
        std::vector<std::vector<Q>> dirs;
        for (size_t i = 1; i < tight.size(); ++i) {
            std::vector<Q> d(n);
            for (int j = 0; j < n; ++j) d[j] = Q(tight[i][j]) - Q(tight[0][j]);
            dirs.push_back(std::move(d));
        }
        for (int i = 0; i < n; ++i)
            if (Field::is_zero(prim[i])) {
                std::vector<Q> d(n, Q(0));
                d[i] = 1;
                dirs.push_back(std::move(d));
            }
        Matrix m(static_cast<int>(dirs.size()), n, Field::rationals());
        for (size_t i = 0; i < dirs.size(); ++i)
            for (int j = 0; j < n; ++j) m.at(static_cast<int>(i), j) = dirs[i][j];
        if (rank(m) != n - 1) continue;
        std::vector<mpz_class> key;
        for (const auto& q : prim) key.emplace_back(q.get_num());
        if (!emitted.insert({key, rz}).second) continue;
        Facet f;
        f.normal = key;
        f.offset = rz;
        np.facets_.push_back(std::move(f));
    }
    if (np.facets_.empty()) throw invariant_violation("no facets found");
    return np;
}

bool NewtonPolyhedron::contains(const Monomial& a) const {
    std::vector<Q> pt;
    for (int i = 0; i < n_; ++i) pt.emplace_back(a[i]);
    return contains(pt);
}

bool NewtonPolyhedron::contains(const std::vector<Q>& point) const {
    for (const auto& f : facets_) {
        Q val(0);
        for (int i = 0; i < n_; ++i) val += Q(f.normal[i]) * point[i];
        if (val < Q(f.offset)) return false;
    }
    return true;
}

Q NewtonPolyhedron::samuel_value(const Monomial& a) const {
    bool have = false;
    Q best(0);
    for (const auto& f : facets_) {
        if (sgn(f.offset) <= 0) continue;
        Q val(0);
        for (int i = 0; i < n_; ++i) val += Q(f.normal[i]) * Q(a[i]);
        Q ratio = val / Q(f.offset);
        if (!have || ratio < best) {
            best = ratio;
            have = true;
        }
    }
    if (!have) throw invariant_violation("polyhedron has no facet with positive offset");
    return best;
}

std::vector<Monomial> NewtonPolyhedron::closure_generators() const {
    // A minimal lattice point is componentwise bounded by the generator
    // maxima: a coordinate above every generator forces positive slack in
    // the hull decomposition, so the point stays inside after dropping one.
    std::vector<int> cap(n_, 0);
    for (const auto& e : exps_)
        for (int i = 0; i < n_; ++i) cap[i] = std::max(cap[i], e[i]);
    std::vector<Monomial> inside;
    std::vector<int> e(n_, 0);
    while (true) {
        Monomial m{std::vector<int>(e)};
        if (contains(m)) inside.push_back(m);
        int carry = n_ - 1;
        while (carry >= 0) {
            if (++e[carry] <= cap[carry]) break;
            e[carry] = 0;
            --carry;
        }
        if (carry < 0) break;
    }
    std::sort(inside.begin(), inside.end(), [](const Monomial& a, const Monomial& b) {
        return Monomial::cmp_grlex(a, b) < 0;
    });
    std::vector<Monomial> minimal;
    for (const auto& m : inside) {
        bool dominated = false;
        for (const auto& kept : minimal)
            if (kept.divides(m)) {
                dominated = true;
                break;
            }
        if (!dominated) minimal.push_back(m);
    }
    return minimal;
}

bool NewtonPolyhedron::integrally_closed() const {
    for (const auto& g : closure_generators()) {
        bool in_ideal = false;
        for (const auto& e : exps_)
            if (e.divides(g)) {
                in_ideal = true;
                break;
            }
        if (!in_ideal) return false;
    }
    return true;
}

NewtonPolyhedron newton_polyhedron(const std::vector<Polynomial>& monomial_gens) {
    std::vector<Monomial> exps;
    for (const auto& g : monomial_gens) {
        if (!g.is_single_term())
            throw invalid_input("generator '" + g.to_string() + "' is not a monomial");
        exps.push_back(g.terms().front().mono);
    }
    return NewtonPolyhedron::build(std::move(exps));
}

Q samuel_monomial(const std::vector<Polynomial>& monomial_gens, const Polynomial& a) {
    if (!a.is_single_term()) throw invalid_input("samuel value probe must be a single term");
    NewtonPolyhedron np = newton_polyhedron(monomial_gens);
    return np.samuel_value(a.terms().front().mono);
}

} // namespace jacres
