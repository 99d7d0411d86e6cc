#include "ffdef/tower.hpp"

#include <numeric>
#include <sstream>

namespace ffdef {

std::string TowerSpec::str() const {
    std::ostringstream os;
    os << "K";
    for (auto& s : steps) {
        if (s.kind == TowerStep::Kind::Kummer)
            os << "(root[" << s.degree << "](" << s.gen.str() << "))";
        else
            os << "(AS[" << s.degree << "](" << s.gen.str() << "))";
    }
    return os.str();
}

namespace {

RatFunc one_plus_inv(const RatFunc& x) { return RatFunc::one(x.field()) + x.inv(); }

} // namespace

TowerSpec build_l3(const RatFunc& x, const RatFunc& b, const RatFunc& c, int q) {
    if (x.is_zero() || c.is_zero()) fail(errc::degenerate_input, "x and c must be nonzero");
    RatFunc rhs = b * x.pow(q) + b.pow(q);
    if (rhs.is_zero()) fail(errc::degenerate_input, "bx^q + b^q must be nonzero");
    TowerSpec T;
    T.field = x.field();
    T.steps.push_back({TowerStep::Kind::Kummer, q, one_plus_inv(x)});
    T.steps.push_back({TowerStep::Kind::Kummer, q, one_plus_inv(rhs)});
    T.steps.push_back({TowerStep::Kind::Kummer, q, RatFunc::one(x.field()) + (c + c.inv()) * x.inv()});
    return T;
}

TowerSpec build_l4(const RatFunc& x, const RatFunc& c, int q) {
    if (x.is_zero() || c.is_zero()) fail(errc::degenerate_input, "x and c must be nonzero");
    TowerSpec T;
    T.field = x.field();
    T.steps.push_back({TowerStep::Kind::Kummer, q, one_plus_inv(x)});
    T.steps.push_back({TowerStep::Kind::Kummer, q, RatFunc::one(x.field()) + (c + c.inv()) * x.inv()});
    return T;
}

PlaceTransport::PlaceTransport(const Place& P, const TowerSpec& tower) : P_(P) {
    tower_ = TowerField::leaf(P);
    unif_.kpart = uniformizer(P);

    for (auto& step : tower.steps) {
        StepDecomposition dec;
        int d = step.degree;
        dec.e = dec.f = dec.g = 1;

        if (step.gen.is_zero()) fail(errc::indeterminate_generator, "tower step generator vanishes");

        if (step.kind == TowerStep::Kind::Kummer) {
            if (is_qth_power_in_k(step.gen, d)) {
                // degree-1 step: nothing decomposes
                dec.trivial = true;
                dec.type = SplittingType::Split;
                steps_.push_back(dec);
                continue;
            }
            long long v = valuation(step.gen);
            if (v % d != 0) {
                dec.type = SplittingType::Ramified;
                dec.e = d;
                // new uniformizer rho = r^alpha * unif^beta with
                // alpha * v_new(r) + beta * v_new(unif) = 1, where in the new
                // normalization v_new(r) = v and v_new(unif) = d
                long long vm = ((v % d) + d) % d;
                long long alpha = 1;
                while ((alpha * vm) % d != 1) ++alpha; // d is a small prime
                long long beta = (1 - alpha * v) / d;
                if (alpha * v + beta * d != 1) fail(errc::internal, "uniformizer exponent arithmetic");
                if (unit_parts_valid_) {
                    Monomial nu;
                    nu.kpart = unif_.kpart.pow(beta);
                    nu.rad_exp.assign(radicals_.size(), 0);
                    for (size_t i = 0; i < radicals_.size(); ++i) nu.rad_exp[i] = unif_.rad_exp[i] * beta;
                    radicals_.push_back({step.gen, d, v});
                    nu.rad_exp.push_back(alpha);
                    unif_ = std::move(nu);
                } else {
                    radicals_.push_back({step.gen, d, v});
                    unif_.rad_exp.push_back(0);
                }
                e_ *= d;
            } else {
                // unramified: split vs inert by the unit-part residue
                auto u = unit_residue(step.gen);
                if (!u) {
                    dec.determinate = false;
                    dec.type = SplittingType::Split; // placeholder, not meaningful
                    residues_valid_ = false;
                } else if (tower_->is_qth_power(*u, d)) {
                    dec.type = SplittingType::Split;
                    dec.g = d;
                } else {
                    dec.type = SplittingType::Inert;
                    dec.f = d;
                    f_ *= d;
                    // extend the residue tower by x^d - u
                    std::vector<TElem> mp(d + 1, tower_->zero());
                    mp[0] = tower_->neg(*u);
                    mp[d] = tower_->one();
                    tower_ = tower_->extend(mp);
                }
            }
        } else {
            // Artin-Schreier step, parameter a = step.gen, degree p
            long long v = valuation(step.gen);
            if (v < 0) {
                dec.type = SplittingType::Split;
                dec.g = d;
            } else if (v > 0 && v % d != 0) {
                dec.type = SplittingType::Ramified;
                dec.e = d;
                e_ *= d;
                // wild ramification: the uniformizer is not a radical monomial
                unit_parts_valid_ = false;
            } else {
                // v == 0, or v > 0 divisible by p (residue 0, T^p - 1 splits)
                auto u = v == 0 ? unit_residue(step.gen) : std::optional<TElem>(tower_->zero());
                if (!u) {
                    dec.determinate = false;
                    residues_valid_ = false;
                } else if (tower_->artin_schreier_has_root(*u)) {
                    dec.type = SplittingType::Split;
                    dec.g = d;
                } else {
                    dec.type = SplittingType::Inert;
                    dec.f = d;
                    f_ *= d;
                    // minpoly T^p - u^(p-1) T - 1 over the tower
                    std::vector<TElem> mp(d + 1, tower_->zero());
                    mp[0] = tower_->from_int(-1);
                    mp[1] = tower_->neg(tower_->pow(*u, d - 1));
                    mp[d] = tower_->one();
                    tower_ = tower_->extend(mp);
                }
            }
        }
        steps_.push_back(dec);
    }
}

long long PlaceTransport::valuation(const RatFunc& z) const {
    long long v = ord_at(z, P_);
    if (v == ORD_INFINITY) return ORD_INFINITY;
    return v * e_;
}

std::optional<TElem> PlaceTransport::unit_residue(const RatFunc& z) const {
    return unit_residue_at(z, tower_, e_, unif_, radicals_.size());
}

std::optional<TElem> PlaceTransport::unit_residue_at(const RatFunc& z, const TowerPtr& tw, int e_now,
                                                     const Monomial& unif, size_t nradicals) const {
    if (z.is_zero()) fail(errc::zero_input, "unit residue of zero");
    long long vb = ord_at(z, P_);
    if (vb == 0) {
        // plain residue, valid at any level
        return tw->embed_leaf(residue_at(z, P_));
    }
    if (!unit_parts_valid_) return std::nullopt;
    long long v = vb * e_now;
    // U = z * unif^(-v) as a formal monomial; reduce radicals newest-first
    // (their exponents come out divisible by the radical degree exactly when
    // the total valuation vanishes), leaving K-element factors only
    std::vector<std::pair<RatFunc, long long>> factors;
    factors.emplace_back(z, 1);
    if (v != 0 && !unif.kpart.is_one()) factors.emplace_back(unif.kpart, -v);
    std::vector<long long> rexp(nradicals, 0);
    for (size_t i = 0; i < nradicals && i < unif.rad_exp.size(); ++i) rexp[i] = -v * unif.rad_exp[i];
    for (size_t i = nradicals; i-- > 0;) {
        long long ei = rexp[i];
        if (ei == 0) continue;
        if (ei % radicals_[i].deg != 0) return std::nullopt;
        factors.emplace_back(radicals_[i].g, ei / radicals_[i].deg);
    }
    // the product of the factors is a base unit: residues multiply
    long long total = 0;
    for (auto& [f, e] : factors) total += ord_at(f, P_) * e;
    if (total != 0) fail(errc::internal, "unit-part reduction left nonzero order");
    ResidueField rf(P_);
    Poly res = rf.from_constant(P_.field()->one());
    for (auto& [f, e] : factors) res = rf.mul(res, rf.pow(::ffdef::unit_residue_at(f, P_), e));
    return tw->embed_leaf(res);
}

PlaceDecomposition transport_place(const Place& P, const TowerSpec& tower,
                                   const std::vector<RatFunc>& tracked, int residue_query_q) {
    PlaceTransport T(P, tower);
    PlaceDecomposition out(P);
    out.steps = T.steps();
    out.e_total = T.e_total();
    out.f_total = T.f_total();
    out.residue_degree_over_constants = T.residue_tower()->absolute_degree() / P.field()->s();
    out.residues_valid = T.residues_valid();
    for (auto& z : tracked) {
        TrackedElement t;
        t.value = z;
        t.ord_base = ord_at(z, P);
        t.ord_top = t.ord_base == ORD_INFINITY ? ORD_INFINITY : t.ord_base * T.e_total();
        if (!z.is_zero()) {
            auto u = T.unit_residue(z);
            if (u) {
                t.residue_known = true;
                if (residue_query_q > 1) t.residue_is_qth_power = T.residue_tower()->is_qth_power(*u, residue_query_q);
            }
        }
        out.tracked.push_back(t);
    }
    return out;
}

} // namespace ffdef
