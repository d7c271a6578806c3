#include "jacres/macaulay.hpp"

#include "jacres/errors.hpp"

#include <algorithm>
#include <map>
#include <random>

namespace jacres {

std::vector<Monomial> monomials_below(int nvars, int cutoff) {
    std::vector<Monomial> out;
    std::vector<int> e(nvars, 0);
    while (true) {
        int sum = 0;
        for (int v : e) sum += v;
        if (sum < cutoff) out.emplace_back(std::vector<int>(e));
        int carry = nvars - 1;
        while (carry >= 0) {
            if (++e[carry] < cutoff) break;
            e[carry] = 0;
            --carry;
        }
        if (carry < 0) break;
    }
    std::sort(out.begin(), out.end(),
              [](const Monomial& a, const Monomial& b) { return Monomial::cmp_local(a, b) > 0; });
    return out;
}

MacaulayModel::MacaulayModel(std::vector<Polynomial> gens, int cutoff, bool track) {
    if (gens.empty()) throw invalid_input("empty generator list");
    ring_ = gens.front().ring();
    for (const auto& g : gens)
        if (!(g.ring() == ring_)) throw invalid_input("generators live in different rings");
    cutoff_ = cutoff;
    gens_ = std::move(gens);
    std::vector<std::pair<int, Monomial>> rows;
    for (int i = 0; i < static_cast<int>(gens_.size()); ++i) {
        if (gens_[i].is_zero()) continue;
        int ord = gens_[i].order().value();
        for (const auto& m : monomials_below(ring_.nvars(), std::max(cutoff_ - ord, 0)))
            rows.emplace_back(i, m);
    }
    build(std::move(rows), track);
}

MacaulayModel MacaulayModel::shuffled(std::vector<Polynomial> gens, int cutoff, unsigned seed) {
    MacaulayModel m(std::move(gens), cutoff, /*track=*/false);
    std::mt19937 rng(seed);
    std::shuffle(m.row_tags_.begin(), m.row_tags_.end(), rng);
    MacaulayModel out;
    out.ring_ = m.ring_;
    out.cutoff_ = m.cutoff_;
    out.gens_ = m.gens_;
    out.monomials_ = m.monomials_;
    out.build(std::move(m.row_tags_), /*track=*/true);
    return out;
}

void MacaulayModel::build(std::vector<std::pair<int, Monomial>> rows, bool track) {
    monomials_ = monomials_below(ring_.nvars(), cutoff_);
    ech_ = RowEchelon(static_cast<int>(monomials_.size()), ring_.field(), track);
    row_tags_.clear();
    for (auto& [gi, mult] : rows) {
        Polynomial shifted = gens_[gi].times_term(mult, ring_.field().one());
        ech_.add_row(vectorize(shifted));
        row_tags_.emplace_back(gi, mult);
    }
}

std::vector<Q> MacaulayModel::vectorize(const Polynomial& g) const {
    std::vector<Q> v(monomials_.size(), Q(0));
    for (const auto& t : g.terms()) {
        if (t.mono.degree() >= cutoff_) continue; // truncated away
        auto it = std::lower_bound(
            monomials_.begin(), monomials_.end(), t.mono,
            [](const Monomial& a, const Monomial& b) { return Monomial::cmp_local(a, b) > 0; });
        v[static_cast<size_t>(it - monomials_.begin())] = t.coeff;
    }
    return v;
}

int MacaulayModel::corank() const {
    return static_cast<int>(monomials_.size()) - ech_.nrows();
}

bool MacaulayModel::contains(const Polynomial& g) const {
    if (g.total_degree() >= cutoff_)
        throw invalid_input("probe degree reaches the truncation cutoff");
    std::vector<Q> residual = ech_.reduce(vectorize(g));
    for (const auto& v : residual)
        if (!Field::is_zero(v)) return false;
    return true;
}

std::optional<std::vector<Polynomial>> MacaulayModel::cofactors(const Polynomial& g) const {
    if (g.total_degree() >= cutoff_)
        throw invalid_input("probe degree reaches the truncation cutoff");
    std::vector<Q> lambda;
    std::vector<Q> residual = ech_.reduce(vectorize(g), &lambda);
    for (const auto& v : residual)
        if (!Field::is_zero(v)) return std::nullopt;
    const Field& f = ring_.field();
    std::vector<Polynomial> cof(gens_.size(), Polynomial(ring_));
    for (int r = 0; r < ech_.nrows(); ++r) {
        if (Field::is_zero(lambda[r])) continue;
        const auto& combo = ech_.combination(r);
        for (size_t k = 0; k < combo.size(); ++k) {
            if (Field::is_zero(combo[k])) continue;
            const auto& [gi, mult] = row_tags_[k];
            Q c = f.mul(lambda[r], combo[k]);
            cof[gi] = cof[gi] + Polynomial::from_term(ring_, mult, c);
        }
    }
    return cof;
}

bool macaulay_member(const Polynomial& g, const std::vector<Polynomial>& gens, const Caps& caps,
                     int containment_index) {
    int s = containment_index;
    if (s <= 0) {
        // Fallback: corank stabilization over two consecutive cutoffs.
        int prev = -1, prev2 = -2;
        s = -1;
        for (int cutoff = 2; cutoff <= caps.max_degree; ++cutoff) {
            int c = macaulay_corank(gens, cutoff);
            if (c == prev && c == prev2) {
                s = cutoff;
                break;
            }
            prev2 = prev;
            prev = c;
        }
        if (s < 0)
            throw inconclusive_error("macaulay corank did not stabilize below the degree cap");
    }
    int need = s + std::max(g.total_degree(), 0) + 1;
    if (need > caps.max_degree) throw inconclusive_error("macaulay cutoff exceeds the degree cap");
    MacaulayModel model(gens, need, /*track=*/false);
    return model.contains(g);
}

int macaulay_corank(const std::vector<Polynomial>& gens, int cutoff) {
    MacaulayModel model(gens, cutoff, /*track=*/false);
    return model.corank();
}

} // namespace jacres
