#include "jacres/standard_basis.hpp"

#include "jacres/errors.hpp"

#include <algorithm>
#include <map>
#include <tuple>

namespace jacres {

namespace {

struct Tracked {
    Polynomial p;
    Polynomial on_input;               // coefficient of the polynomial being reduced
    std::vector<Polynomial> on_basis;  // coefficients of the reducer list
};

struct NFOutcome {
    Polynomial remainder;
    Polynomial unit;
    std::vector<Polynomial> cofactors;
};

int ecart(const Polynomial& p) {
    return p.total_degree() - p.leading_term_local().mono.degree();
}

// Mora's weak normal form over the local order.  Returns unit, cofactors
// and remainder with  unit * g = sum cofactors[i] * reducers[i] + remainder,
// unit(0) = 1, and the remainder's leading monomial not divisible by any
// reducer leading monomial.
NFOutcome weak_nf(const Polynomial& g, const std::vector<Polynomial>& reducers, const Caps& caps) {
    const Ring& ring = g.ring();
    const Field& field = ring.field();
    const int k = static_cast<int>(reducers.size());

    Tracked h;
    h.p = g;
    h.on_input = Polynomial::constant(ring, Q(1));
    h.on_basis.assign(k, Polynomial(ring));

    if (g.is_zero())
        return {Polynomial(ring), h.on_input, std::vector<Polynomial>(k, Polynomial(ring))};

    struct Reducer {
        Tracked t;
        Monomial lm;
        Q lc;
        int ec;
    };
    std::vector<Reducer> pool;
    pool.reserve(k);
    for (int i = 0; i < k; ++i) {
        if (reducers[i].is_zero()) continue;
        Tracked t;
        t.p = reducers[i];
        t.on_input = Polynomial(ring);
        t.on_basis.assign(k, Polynomial(ring));
        t.on_basis[i] = Polynomial::constant(ring, Q(1));
        const Term& lt = t.p.leading_term_local();
        pool.push_back({std::move(t), lt.mono, lt.coeff, ecart(reducers[i])});
    }

    long steps = 0;
    while (!h.p.is_zero()) {
        const Term& lt = h.p.leading_term_local();
        int best = -1;
        for (int i = 0; i < static_cast<int>(pool.size()); ++i) {
            if (!pool[i].lm.divides(lt.mono)) continue;
            if (best < 0 || pool[i].ec < pool[best].ec) best = i;
        }
        if (best < 0) break;
        int ec_h = h.p.total_degree() - lt.mono.degree();
        if (pool[best].ec > ec_h) {
            Reducer copy{h, lt.mono, lt.coeff, ec_h};
            pool.push_back(std::move(copy));
        }
        const Reducer& red = pool[best];
        Monomial qm = lt.mono.divide_by(red.lm);
        Q qc = field.div(lt.coeff, red.lc);
        h.p = h.p - red.t.p.times_term(qm, qc);
        if (!red.t.on_input.is_zero()) h.on_input = h.on_input - red.t.on_input.times_term(qm, qc);
        for (int i = 0; i < k; ++i)
            if (!red.t.on_basis[i].is_zero())
                h.on_basis[i] = h.on_basis[i] - red.t.on_basis[i].times_term(qm, qc);
        if (++steps > caps.max_steps)
            throw inconclusive_error("normal form exceeded the reduction step cap");
    }

    // h.p = on_input * g + sum on_basis[i] * reducers[i]
    NFOutcome out;
    out.remainder = h.p;
    out.unit = h.on_input;
    out.cofactors.reserve(k);
    for (int i = 0; i < k; ++i) out.cofactors.push_back(-h.on_basis[i]);
    if (Field::is_zero(out.unit.constant_coeff()))
        throw invariant_violation("weak normal form produced a non-unit multiplier");
    return out;
}

// Tail-reduces the weak normal form.  Terms set aside as reduced get
// re-polluted when a later unit multiplies the invariant, so the loop
// reprocesses the pollution until it dies out (it climbs in degree and
// eventually lands in the ideal).
NFOutcome red_nf(const Polynomial& g, const std::vector<Polynomial>& reducers, const Caps& caps) {
    const Ring& ring = g.ring();
    const int k = static_cast<int>(reducers.size());
    Polynomial unit = Polynomial::constant(ring, Q(1));
    Polynomial one = unit;
    std::vector<Polynomial> cof(k, Polynomial(ring));
    Polynomial reduced(ring);
    Polynomial pending = g;
    long rounds = 0;
    while (!pending.is_zero()) {
        NFOutcome step = weak_nf(pending, reducers, caps);
        unit = step.unit * unit;
        for (int i = 0; i < k; ++i) cof[i] = step.unit * cof[i] + step.cofactors[i];
        Polynomial pollution = (step.unit - one) * reduced;
        if (step.remainder.is_zero()) {
            pending = pollution;
        } else {
            const Term& lt = step.remainder.leading_term_local();
            Polynomial tpoly = Polynomial::from_term(ring, lt.mono, lt.coeff);
            reduced = reduced + tpoly;
            pending = pollution + (step.remainder - tpoly);
        }
        if (++rounds > caps.max_steps)
            throw inconclusive_error("tail reduction exceeded the step cap");
    }
    return {reduced, unit, cof};
}

std::vector<Monomial> minimal_generators(std::vector<Monomial> monos) {
    std::sort(monos.begin(), monos.end(),
              [](const Monomial& a, const Monomial& b) { return Monomial::cmp_grlex(a, b) < 0; });
    monos.erase(std::unique(monos.begin(), monos.end()), monos.end());
    std::vector<Monomial> out;
    for (const auto& m : monos) {
        bool dominated = false;
        for (const auto& kept : out)
            if (kept.divides(m)) {
                dominated = true;
                break;
            }
        if (!dominated) out.push_back(m);
    }
    return out;
}

} // namespace

bool MembershipCertificate::verifies(const Polynomial& g,
                                     const std::vector<Polynomial>& reference) const {
    if (Field::is_zero(unit.constant_coeff())) return false;
    if (cofactors.size() != reference.size()) return false;
    Polynomial lhs = unit * g;
    Polynomial rhs = remainder;
    for (size_t i = 0; i < reference.size(); ++i) rhs = rhs + cofactors[i] * reference[i];
    return lhs == rhs;
}

StandardBasis StandardBasis::compute(std::vector<Polynomial> gens, const Caps& caps) {
    if (gens.empty()) throw invalid_input("standard basis of an empty generator list");
    const Ring ring = gens.front().ring();
    for (const auto& g : gens)
        if (!(g.ring() == ring)) throw invalid_input("generators live in different rings");
    bool any = false;
    for (const auto& g : gens)
        if (!g.is_zero()) any = true;
    if (!any) throw invalid_input("all generators are zero");

    StandardBasis sb;
    sb.ring_ = ring;
    sb.caps_ = caps;
    sb.gens_ = gens;
    const Field& field = ring.field();
    const int ngens = static_cast<int>(gens.size());

    // Seed the basis with the monic-scaled nonzero generators.
    for (int i = 0; i < ngens; ++i) {
        if (gens[i].is_zero()) continue;
        Q lc = gens[i].leading_term_local().coeff;
        sb.basis_.push_back(gens[i].scaled(field.inv(lc)));
        MembershipCertificate c;
        c.unit = Polynomial::constant(ring, Q(1));
        c.cofactors.assign(ngens, Polynomial(ring));
        c.cofactors[i] = Polynomial::constant(ring, field.inv(lc));
        c.remainder = Polynomial(ring);
        sb.certs_.push_back(std::move(c));
    }

    // Deterministic pair queue: (lcm degree, i, j) ascending.
    using Pair = std::tuple<int, int, int>;
    std::vector<Pair> pairs;
    auto push_pairs = [&](int j) {
        for (int i = 0; i < j; ++i) {
            Monomial l = sb.basis_[i].leading_term_local().mono.lcm(
                sb.basis_[j].leading_term_local().mono);
            pairs.emplace_back(l.degree(), i, j);
        }
        std::sort(pairs.begin(), pairs.end());
    };
    for (int j = 1; j < static_cast<int>(sb.basis_.size()); ++j) push_pairs(j);

    long processed = 0;
    while (!pairs.empty()) {
        auto [deg, i, j] = pairs.front();
        pairs.erase(pairs.begin());
        const Monomial lmi = sb.basis_[i].leading_term_local().mono;
        const Monomial lmj = sb.basis_[j].leading_term_local().mono;
        Monomial l = lmi.lcm(lmj);
        Polynomial sp = sb.basis_[i].times_term(l.divide_by(lmi), field.one()) -
                        sb.basis_[j].times_term(l.divide_by(lmj), field.one());
        NFOutcome nf = weak_nf(sp, sb.basis_, caps);
        if (++processed > caps.max_steps)
            throw inconclusive_error("standard basis exceeded the pair cap");
        if (nf.remainder.is_zero()) continue;

        // remainder = unit*(m_i b_i - m_j b_j) - sum a_l b_l; rewrite over the
        // input generators through the stored basis certificates.
        std::vector<Polynomial> on_basis(sb.basis_.size(), Polynomial(ring));
        on_basis[i] = nf.unit.times_term(l.divide_by(lmi), field.one());
        on_basis[j] = on_basis[j] - nf.unit.times_term(l.divide_by(lmj), field.one());
        for (size_t t = 0; t < sb.basis_.size(); ++t)
            on_basis[t] = on_basis[t] - nf.cofactors[t];

        std::vector<int> used;
        for (size_t t = 0; t < on_basis.size(); ++t)
            if (!on_basis[t].is_zero()) used.push_back(static_cast<int>(t));
        Polynomial big_unit = Polynomial::constant(ring, Q(1));
        for (int t : used) big_unit = big_unit * sb.certs_[t].unit;
        MembershipCertificate cert;
        cert.unit = big_unit;
        cert.cofactors.assign(ngens, Polynomial(ring));
        cert.remainder = Polynomial(ring);
        for (int t : used) {
            Polynomial others = Polynomial::constant(ring, Q(1));
            for (int s : used)
                if (s != t) others = others * sb.certs_[s].unit;
            Polynomial scale = on_basis[t] * others;
            for (int m = 0; m < ngens; ++m)
                if (!sb.certs_[t].cofactors[m].is_zero())
                    cert.cofactors[m] = cert.cofactors[m] + scale * sb.certs_[t].cofactors[m];
        }

        Q lc = nf.remainder.leading_term_local().coeff;
        Polynomial newg = nf.remainder.scaled(field.inv(lc));
        for (auto& c : cert.cofactors) c = c.scaled(field.inv(lc));
        sb.basis_.push_back(std::move(newg));
        sb.certs_.push_back(std::move(cert));
        push_pairs(static_cast<int>(sb.basis_.size()) - 1);
    }

    std::vector<Monomial> lms;
    for (const auto& b : sb.basis_) lms.push_back(b.leading_term_local().mono);
    sb.lead_min_ = minimal_generators(std::move(lms));
    return sb;
}

std::pair<Polynomial, MembershipCertificate> StandardBasis::weak_normal_form(
    const Polynomial& g) const {
    if (!(g.ring() == ring_)) throw invalid_input("polynomial lives in a different ring");
    NFOutcome nf = weak_nf(g, basis_, caps_);
    return {nf.remainder, {nf.unit, nf.cofactors, nf.remainder}};
}

std::pair<Polynomial, MembershipCertificate> StandardBasis::normal_form(
    const Polynomial& g) const {
    if (!(g.ring() == ring_)) throw invalid_input("polynomial lives in a different ring");
    NFOutcome nf = red_nf(g, basis_, caps_);
    return {nf.remainder, {nf.unit, nf.cofactors, nf.remainder}};
}

MembershipCertificate StandardBasis::over_generators(const Polynomial& g,
                                                     const MembershipCertificate& c) const {
    (void)g;
    const Field& field = ring_.field();
    const int ngens = static_cast<int>(gens_.size());
    std::vector<int> used;
    for (size_t t = 0; t < c.cofactors.size(); ++t)
        if (!c.cofactors[t].is_zero()) used.push_back(static_cast<int>(t));
    Polynomial big_unit = Polynomial::constant(ring_, Q(1));
    for (int t : used) big_unit = big_unit * certs_[t].unit;
    MembershipCertificate out;
    out.unit = big_unit * c.unit;
    out.cofactors.assign(ngens, Polynomial(ring_));
    out.remainder = big_unit * c.remainder;
    for (int t : used) {
        Polynomial others = Polynomial::constant(ring_, Q(1));
        for (int s : used)
            if (s != t) others = others * certs_[s].unit;
        Polynomial scale = c.cofactors[t] * others;
        for (int m = 0; m < ngens; ++m)
            if (!certs_[t].cofactors[m].is_zero())
                out.cofactors[m] = out.cofactors[m] + scale * certs_[t].cofactors[m];
    }
    (void)field;
    return out;
}

DimensionResult quotient_dimension(const StandardBasis& sb) {
    const Ring& ring = sb.ring();
    const int n = ring.nvars();
    DimensionResult out;
    std::vector<int> bound(n, -1);
    for (int v = 0; v < n; ++v) {
        for (const auto& m : sb.lead_ideal()) {
            if (m.degree() == m[v]) { // pure power of variable v
                if (bound[v] < 0 || m[v] < bound[v]) bound[v] = m[v];
            }
        }
        if (bound[v] < 0) {
            out.finite = false;
            out.witness_var = v;
            return out;
        }
    }
    // Enumerate the box below the pure-power bounds and keep the monomials
    // not divisible by any leading term.
    std::vector<Monomial> std_monos;
    std::vector<int> e(n, 0);
    while (true) {
        Monomial m{std::vector<int>(e)};
        bool divisible = false;
        for (const auto& lt : sb.lead_ideal())
            if (lt.divides(m)) {
                divisible = true;
                break;
            }
        if (!divisible) std_monos.push_back(m);
        int pos = n - 1;
        while (pos >= 0) {
            if (++e[pos] < bound[pos]) break;
            e[pos] = 0;
            --pos;
        }
        if (pos < 0) break;
    }
    std::sort(std_monos.begin(), std_monos.end(),
              [](const Monomial& a, const Monomial& b) { return Monomial::cmp_local(a, b) > 0; });
    out.finite = true;
    out.dim = static_cast<int>(std_monos.size());
    out.std_monomials = std::move(std_monos);
    return out;
}

DimensionResult quotient_dimension(const std::vector<Polynomial>& gens, const Caps& caps) {
    return quotient_dimension(StandardBasis::compute(gens, caps));
}

std::pair<bool, MembershipCertificate> ideal_member(const Polynomial& g, const StandardBasis& sb) {
    auto [rem, cert] = sb.weak_normal_form(g);
    return {rem.is_zero(), sb.over_generators(g, cert)};
}

std::pair<bool, MembershipCertificate> ideal_member(const Polynomial& g,
                                                    const std::vector<Polynomial>& gens,
                                                    const Caps& caps) {
    return ideal_member(g, StandardBasis::compute(gens, caps));
}

std::vector<Polynomial> power_products(const std::vector<Polynomial>& gens, int k) {
    if (gens.empty()) throw invalid_input("empty generator list");
    const Ring& ring = gens.front().ring();
    if (k < 0) throw invalid_input("negative ideal power");
    std::vector<Polynomial> out;
    std::vector<int> idx;
    auto rec = [&](auto&& self, int start, int remaining) -> void {
        if (remaining == 0) {
            Polynomial p = Polynomial::constant(ring, Q(1));
            for (int i : idx) p = p * gens[i];
            out.push_back(std::move(p));
            return;
        }
        for (int i = start; i < static_cast<int>(gens.size()); ++i) {
            idx.push_back(i);
            self(self, i, remaining - 1);
            idx.pop_back();
        }
    };
    rec(rec, 0, k);
    return out;
}

int containment_index(const StandardBasis& sb) {
    DimensionResult dr = quotient_dimension(sb);
    if (!dr.finite) throw invalid_input("containment index needs a finite quotient");
    int maxstd = 0;
    for (const auto& m : dr.std_monomials) maxstd = std::max(maxstd, m.degree());
    const Ring& ring = sb.ring();
    const int n = ring.nvars();
    // Nakayama shortcut, degree by degree: m^s lies in I once every degree-s
    // monomial reduces into strictly higher order.
    for (int s = 1; s <= maxstd + 1; ++s) {
        bool all_in = true;
        std::vector<int> e(n, 0);
        while (all_in) {
            int sum = 0;
            for (int v : e) sum += v;
            if (sum == s) {
                Monomial m{std::vector<int>(e)};
                auto [rem, cert] = sb.normal_form(Polynomial::from_term(ring, m, Q(1)));
                (void)cert;
                if (!rem.is_zero() && rem.order().value() <= s) all_in = false;
            }
            int carry = n - 1;
            while (carry >= 0) {
                if (++e[carry] <= s) break;
                e[carry] = 0;
                --carry;
            }
            if (carry < 0) break;
        }
        if (all_in) return s;
    }
    throw invariant_violation("containment index exceeded the standard-monomial bound");
}

IdealOrder ideal_order(const Polynomial& g, const std::vector<Polynomial>& gens, int cap,
                       const Caps& caps) {
    IdealOrder out;
    if (g.is_zero()) {
        out.infinite = true;
        return out;
    }
    for (int k = 1; k <= cap; ++k) {
        auto [in, cert] = ideal_member(g, power_products(gens, k), caps);
        (void)cert;
        if (!in) {
            out.ord = k - 1;
            return out;
        }
    }
    out.ord = cap;
    return out;
}

} // namespace jacres
