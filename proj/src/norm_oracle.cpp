#include "ffdef/norm_oracle.hpp"

#include <set>

namespace ffdef {

const char* norm_verdict_name(NormVerdict v) {
    switch (v) {
        case NormVerdict::Solvable: return "solvable";
        case NormVerdict::Unsolvable: return "unsolvable";
        case NormVerdict::OutsideProvenRegion: return "outside-proven-region";
    }
    return "?";
}

LocalSolvability local_norm_solvable(const TowerSpec& tower, const Place& P, const RatFunc& rhs,
                                     const RatFunc& c, int q) {
    PlaceTransport T(P, tower);
    long long vc = T.valuation(c);
    long long vr = T.valuation(rhs);
    // tame symbol (rhs, c) = class of (-1)^(vr vc) * u_rhs^vc * u_c^(-vr);
    // powers with exponent divisible by q never obstruct
    bool need_uc = (vr % q) != 0;
    bool need_ur = (vc % q) != 0;
    if (!need_uc && !need_ur) return LocalSolvability::Yes;
    auto TW = T.residue_tower();
    TElem w = TW->one();
    if (need_ur) {
        auto ur = T.unit_residue(rhs);
        if (!ur) return LocalSolvability::Unknown;
        w = TW->mul(w, TW->pow(*ur, bigint(vc)));
    }
    if (need_uc) {
        auto uc = T.unit_residue(c);
        if (!uc) return LocalSolvability::Unknown;
        w = TW->mul(w, TW->pow(*uc, bigint(-vr)));
    }
    if ((vr * vc) % 2 != 0) w = TW->mul(w, TW->from_int(-1));
    return TW->is_qth_power(w, q) ? LocalSolvability::Yes : LocalSolvability::No;
}

namespace {

std::vector<Place> support_union(std::initializer_list<RatFunc> elems) {
    std::set<Place> acc;
    for (auto& e : elems) {
        if (e.is_zero()) continue;
        Divisor D = divisor_of(e);
        for (auto& [P, m] : D.support()) acc.insert(P);
    }
    return {acc.begin(), acc.end()};
}

struct HasseOutcome {
    NormVerdict verdict;
    std::optional<Place> witness;
};

HasseOutcome hasse_scan(const TowerSpec& tower, const RatFunc& rhs, const RatFunc& c, int q) {
    bool unknown = false;
    std::optional<Place> bad;
    for (auto& P : support_union({rhs, c})) {
        LocalSolvability ls = local_norm_solvable(tower, P, rhs, c, q);
        if (ls == LocalSolvability::No) return {NormVerdict::Unsolvable, P};
        if (ls == LocalSolvability::Unknown) {
            unknown = true;
            if (!bad) bad = P;
        }
    }
    if (unknown) return {NormVerdict::OutsideProvenRegion, bad};
    return {NormVerdict::Solvable, std::nullopt};
}

} // namespace

NormDecision decide_norm_over_tower(const TowerSpec& tower, const RatFunc& rhs, const RatFunc& c, int q) {
    if (rhs.is_zero() || c.is_zero()) fail(errc::degenerate_input, "rhs and c must be nonzero");
    if (is_qth_power_in_k(c, q))
        return {NormVerdict::Solvable, std::nullopt, "degree collapse: c is a q-th power in K", 0};
    HasseOutcome H = hasse_scan(tower, rhs, c, q);
    return {H.verdict, H.witness, "place-wise evaluation", 0};
}

NormDecision decide_norm_q(const RatFunc& x, const RatFunc& b, const RatFunc& c, int q,
                           const std::vector<Place>& S) {
    const FieldPtr& F = x.field();
    if ((F->size() - 1) % q != 0) fail(errc::missing_root_of_unity, "q-th roots of unity missing");
    if (x.is_zero() || c.is_zero()) fail(errc::degenerate_input, "x and c must be nonzero");
    RatFunc rhs = b * x.pow(q) + b.pow(q);
    if (rhs.is_zero()) fail(errc::degenerate_input, "bx^q + b^q = 0");
    if (!is_in_phi(c, S)) fail(errc::phi_violation, "c outside Phi(K, S)");

    if (is_qth_power_in_k(c, q))
        return {NormVerdict::Solvable, std::nullopt, "degree collapse: c is a q-th power in K", 0};

    TowerSpec L3 = build_l3(x, b, c, q);

    // forward direction: a pole of x where all four conditions fail kills
    // the norm equation
    if (!b.is_zero()) {
        for (auto& P : pole_places(x)) {
            long long vx = ord_at(x, P), vb = ord_at(b, P), vcp = ord_at(c, P);
            bool c_nonres = vcp == 0 && !ResidueField(P).is_qth_power(residue_at(c, P), q);
            if (c_nonres && vx < 0 && q * vx < (q - 1) * vb && vb % q != 0) {
                // the theorem certifies this witness; the local symbol agrees
                // on every proof-shaped instance, and is authoritative if not
                if (local_norm_solvable(L3, P, rhs, c, q) != LocalSolvability::Yes)
                    return {NormVerdict::Unsolvable, P, "pole of x violating all four conditions", 0};
            }
        }
    }

    // converse direction: S-integers are always representable
    bool in_ring = true;
    for (auto& P : pole_places(x))
        if (std::find(S.begin(), S.end(), P) == S.end()) in_ring = false;
    if (in_ring) return {NormVerdict::Solvable, std::nullopt, "x is an S-integer", 0};

    HasseOutcome H = hasse_scan(L3, rhs, c, q);
    return {H.verdict, H.witness, "place-wise evaluation", 0};
}

NormDecision decide_norm_q_variant(const RatFunc& x, const RatFunc& c, int q, const std::vector<Place>& S) {
    const FieldPtr& F = x.field();
    if ((F->size() - 1) % q != 0) fail(errc::missing_root_of_unity, "q-th roots of unity missing");
    if (x.is_zero() || c.is_zero()) fail(errc::degenerate_input, "x and c must be nonzero");
    if (!is_in_phi(c, S)) fail(errc::phi_violation, "c outside Phi(K, S)");

    if (is_qth_power_in_k(c, q))
        return {NormVerdict::Solvable, std::nullopt, "degree collapse: c is a q-th power in K", 0};

    TowerSpec L4 = build_l4(x, c, q);

    for (auto& P : pole_places(x)) {
        long long vx = ord_at(x, P), vcp = ord_at(c, P);
        bool c_nonres = vcp == 0 && !ResidueField(P).is_qth_power(residue_at(c, P), q);
        if (c_nonres && vx < 0 && vx % q != 0) {
            if (local_norm_solvable(L4, P, x, c, q) != LocalSolvability::Yes)
                return {NormVerdict::Unsolvable, P, "pole of x of order not divisible by q", 0};
        }
    }

    bool in_ring = true;
    for (auto& P : pole_places(x))
        if (std::find(S.begin(), S.end(), P) == S.end()) in_ring = false;
    if (in_ring) return {NormVerdict::Solvable, std::nullopt, "x is an S-integer", 0};

    HasseOutcome H = hasse_scan(L4, x, c, q);
    return {H.verdict, H.witness, "place-wise evaluation", 0};
}

namespace {

// least ell <= ell_max making ord(a^ell * rhs) exceed the Hensel bound at
// every zero of a, with 1 + a^ell rhs nonzero
std::optional<int> pick_ell(const RatFunc& a, const RatFunc& rhs, int p, int ell_max) {
    for (int ell = 1; ell <= ell_max; ++ell) {
        if ((RatFunc::one(a.field()) + a.pow(ell) * rhs).is_zero()) continue;
        bool ok = true;
        for (auto& P : zero_places(a)) {
            long long va = ord_at(a, P);
            long long vr = rhs.is_zero() ? ORD_INFINITY : ord_at(rhs, P);
            if (vr == ORD_INFINITY) continue;
            if (!(ell * va + vr > 2 * (p - 1) * va)) ok = false;
        }
        if (ok) return ell;
    }
    return std::nullopt;
}

} // namespace

NormDecision decide_norm_p(const RatFunc& a, const RatFunc& b, const RatFunc& x, int ell_max) {
    int p = a.field()->p();
    if (a.is_zero()) fail(errc::zero_input, "a = 0");
    if (!artin_schreier_irreducible_over_k(a))
        fail(errc::reducible_extension, "T^p - a^(p-1)T - 1 splits over K");
    RatFunc rhs = b * x.pow(p) + b.pow(p);
    if (b.is_zero()) return {NormVerdict::Solvable, std::nullopt, "b = 0: trivial right side", 1};

    auto ell = pick_ell(a, rhs, p, ell_max);
    if (!ell) fail(errc::ell_budget_exceeded, "no sufficient ell within budget");

    Divisor da = divisor_of(a);
    for (auto& P : pole_places(b)) {
        if (da.mult(P) != 0) continue;
        bool option1 = classify_artin_schreier(a, P) == SplittingType::Split;
        long long vb = ord_at(b, P);
        long long vbx = x.is_zero() ? ORD_INFINITY : ord_at(b * x.pow(p), P);
        bool option2 = (vb % p == 0) || (vbx > p * vb);
        if (!option1 && !option2)
            return {NormVerdict::Unsolvable, P, "pole of b fails both alternatives", *ell};
    }
    return {NormVerdict::Solvable, std::nullopt, "all poles of b pass", *ell};
}

NormDecision decide_norm_p_variant(const RatFunc& a, const RatFunc& Y, int ell_max) {
    int p = a.field()->p();
    if (a.is_zero()) fail(errc::zero_input, "a = 0");
    if (!artin_schreier_irreducible_over_k(a))
        fail(errc::reducible_extension, "T^p - a^(p-1)T - 1 splits over K");
    if (Y.is_zero() || Y.is_constant())
        return {NormVerdict::Solvable, std::nullopt, "constant right-side factor", 1};

    auto ell = pick_ell(a, Y, p, ell_max);
    if (!ell) fail(errc::ell_budget_exceeded, "no sufficient ell within budget");

    Divisor da = divisor_of(a);
    for (auto& P : pole_places(Y)) {
        if (da.mult(P) != 0) continue;
        long long vy = ord_at(Y, P);
        if (vy % p == 0) continue;
        if (classify_artin_schreier(a, P) == SplittingType::Split) continue;
        return {NormVerdict::Unsolvable, P, "pole of Y neither split nor of order divisible by p", *ell};
    }
    return {NormVerdict::Solvable, std::nullopt, "all poles of Y pass", *ell};
}

RatFunc norm_from_coords(const std::vector<RatFunc>& coords, const RatFunc& c, int q) {
    const FieldPtr& F = c.field();
    if (int(coords.size()) != q) fail(errc::degenerate_input, "coordinate tuple must have length q");
    // multiplication matrix of y on the basis 1, gamma, ..., gamma^(q-1)
    std::vector<std::vector<RatFunc>> M(q, std::vector<RatFunc>(q, RatFunc::zero(F)));
    for (int j = 0; j < q; ++j) {
        // y * gamma^j: coefficient of gamma^((i+j) mod q) picks up c^((i+j)/q)
        for (int i = 0; i < q; ++i) {
            int k = (i + j) % q;
            RatFunc v = coords[i];
            if (i + j >= q) v = v * c;
            M[k][j] = M[k][j] + v;
        }
    }
    // determinant by Gaussian elimination over K
    RatFunc det = RatFunc::one(F);
    for (int col = 0; col < q; ++col) {
        int piv = -1;
        for (int r = col; r < q; ++r)
            if (!M[r][col].is_zero()) {
                piv = r;
                break;
            }
        if (piv < 0) return RatFunc::zero(F);
        if (piv != col) {
            std::swap(M[piv], M[col]);
            det = -det;
        }
        det = det * M[col][col];
        RatFunc inv = M[col][col].inv();
        for (int r = col + 1; r < q; ++r) {
            if (M[r][col].is_zero()) continue;
            RatFunc factor = M[r][col] * inv;
            for (int cc = col; cc < q; ++cc) M[r][cc] = M[r][cc] - factor * M[col][cc];
        }
    }
    return det;
}

BruteSearchResult brute_norm_search(const TowerSpec& tower, const RatFunc& c, const RatFunc& rhs,
                                    int height_bound, long long budget) {
    int q = tower.steps.empty() ? 2 : tower.steps.front().degree;
    const FieldPtr& F = c.field();
    std::vector<RatFunc> candidates;
    for_each_ratfunc_of_height(F, height_bound, [&](const RatFunc& u) {
        candidates.push_back(u);
        return true;
    });
    long long n = candidates.size();
    if (n * n > budget) fail(errc::budget_exceeded, "candidate space exceeds the search budget");
    BruteSearchResult R;
    for (auto& u0 : candidates) {
        for (auto& u1 : candidates) {
            ++R.tried;
            std::vector<RatFunc> coords(q, RatFunc::zero(F));
            coords[0] = u0;
            coords[1] = u1;
            if (norm_from_coords(coords, c, q) == rhs) {
                R.found = true;
                R.coords = coords;
                return R;
            }
        }
    }
    return R;
}

} // namespace ffdef
