#include "ffdef/gadgets.hpp"

#include <numeric>

namespace ffdef {

bool in_one_prime_ring(const RatFunc& x, const Place& P) {
    if (x.is_zero()) return true;
    for (auto& Q : pole_places(x))
        if (Q != P) return false;
    return true;
}

bool is_unit_in_one_prime_ring(const RatFunc& x, const Place& P) {
    if (x.is_zero()) return false;
    Divisor D = divisor_of(x);
    for (auto& [Q, m] : D.support())
        if (Q != P && m != 0) return false;
    return true;
}

void for_each_ring_element(const Place& P, int bound, const std::function<bool(const RatFunc&)>& visit) {
    const FieldPtr& F = P.field();
    if (P.is_infinite()) {
        // the ring is the polynomial ring
        for (int d = 0; d <= bound; ++d) {
            long long count = poly_count(F, d, false);
            for (long long i = 0; i < count; ++i) {
                Poly g = poly_from_index(F, d, i, false);
                if (d > 0 && g.degree() != d) continue;
                if (d == 0 && i == 0) {
                    if (!visit(RatFunc::zero(F))) return;
                    continue;
                }
                if (!visit(RatFunc(g))) return;
            }
        }
        return;
    }
    // elements g / pi^m with deg g <= m deg(pi): no pole at infinity either
    int dpi = P.degree();
    for (int m = 0; m * dpi <= bound; ++m) {
        Poly pim = P.gen().pow(m);
        for (int d = 0; d <= m * dpi; ++d) {
            long long count = poly_count(F, d, false);
            for (long long i = 0; i < count; ++i) {
                Poly g = poly_from_index(F, d, i, false);
                if (d > 0 && g.degree() != d) continue;
                if (m > 0 && (g % P.gen()).is_zero()) continue; // not reduced
                if (m == 0 && d == 0 && i == 0) {
                    if (!visit(RatFunc::zero(F))) return;
                    continue;
                }
                if (m == 0 && d > 0) continue; // nonconstant polynomials have a pole at infinity
                if (!visit(RatFunc(g, pim))) return;
            }
        }
    }
}

std::optional<int> frobenius_power_exponent(const RatFunc& a, const RatFunc& b, int lo, int cap) {
    RatFunc cur = a.frobenius_pow(lo);
    for (int k = lo; k <= cap; ++k) {
        if (cur == b) return k;
        if (!a.is_constant() && cur.height() > b.height()) return std::nullopt;
        cur = cur.frobenius_pow(1);
    }
    return std::nullopt;
}

namespace {

void ppe_check_inputs(const RatFunc& f, const RatFunc& w, const Place& P) {
    if (!in_one_prime_ring(f, P) || !in_one_prime_ring(w, P))
        fail(errc::not_in_ring, "arguments must lie in O_{K,{P}}");
    if (w.is_zero() || is_unit_in_one_prime_ring(w, P))
        fail(errc::non_unit_violation, "w must be a non-unit of O_{K,{P}}");
}

// The two displayed Pell systems are single-variable quadratics in the
// searched unknown: cand^2 * A + cand * B = C.  Precomputing (A, B, C) and
// comparing cross-multiplied keeps the exhaustive scan free of gcd work.
struct QuadCheck {
    RatFunc A, B, C;
    bool matches(const RatFunc& cand) const {
        const Poly &n = cand.num(), &d = cand.den();
        Poly n2 = n * n, d2 = d * d, nd = n * d;
        // (n2 A.n/A.d + nd B.n/B.d) / d2 = C: clear denominators
        Poly lhs = (n2 * A.num() * B.den() + nd * B.num() * A.den()) * C.den();
        Poly rhs = C.num() * A.den() * B.den() * d2;
        return lhs == rhs;
    }
};

QuadCheck ppe_eq1_coeffs(const RatFunc& f, const RatFunc& w) {
    const FieldPtr& F = f.field();
    RatFunc one = RatFunc::one(F);
    if (F->p() == 2) {
        // h^2 w^2 + h f w^2 = w^2 + f^2
        return {w * w, f * w * w, w * w + f * f};
    }
    RatFunc two = RatFunc::constant(F->from_int(2));
    // h^2 w(w+2) + 0 = (f+1)^2 - 1
    return {w * (w + two), RatFunc::zero(F), (f + one).pow(2) - one};
}

QuadCheck ppe_eq2_coeffs(const RatFunc& f, const RatFunc& w) {
    const FieldPtr& F = f.field();
    RatFunc one = RatFunc::one(F);
    if (F->p() == 2) {
        RatFunc A = f * f + f;
        RatFunc B = w * w * (w + one) * (w + one);
        // g^2 B + g A B = B - A^2
        return {B, A * B, B - A * A};
    }
    RatFunc two = RatFunc::constant(F->from_int(2));
    RatFunc four = RatFunc::constant(F->from_int(4));
    // companion Pell base 2w+1: coefficient (2w+1)^2 - 1 = 4w(w+1)
    RatFunc D2 = four * w * (w + one);
    return {D2, RatFunc::zero(F), (two * f + one).pow(2) - one};
}

// Exhaustive scan of polynomial candidates of degree <= budget against
// A h^2 + B h = C, by evaluation at every point of an extension field large
// enough to separate polynomials of the identity's degree.  Candidates are
// enumerated by an odometer over coefficient vectors; values at all points
// are maintained incrementally, so a candidate costs a handful of table
// lookups.
bool quad_poly_search(const QuadCheck& q, int budget) {
    if (!q.A.is_polynomial() || !q.B.is_polynomial() || !q.C.is_polynomial())
        fail(errc::internal, "point search expects polynomial data");
    const FieldPtr& F = q.A.field();
    int ident_deg = std::max({q.A.num().degree() + 2 * budget, q.B.num().degree() + budget, q.C.num().degree()});
    int k = 1;
    long long sz = F->size();
    while (sz <= ident_deg) {
        ++k;
        sz *= F->size();
    }
    auto E = k == 1 ? F : Field::make(F->p(), F->s() * k);
    Embedding emb(F, E);
    int npts = E->size();
    auto eval_embedded = [&](const Poly& g) {
        std::vector<FElem> v(npts, E->zero());
        Poly ge = embed_coeffs(g, emb);
        for (int i = 0; i < npts; ++i) v[i] = ge.eval(E->elem(i));
        return v;
    };
    std::vector<FElem> Av = eval_embedded(q.A.num());
    std::vector<FElem> Bv = eval_embedded(q.B.num());
    std::vector<FElem> Cv = eval_embedded(q.C.num());
    // powers of each point
    std::vector<std::vector<FElem>> powv(budget + 1, std::vector<FElem>(npts));
    for (int i = 0; i < npts; ++i) {
        FElem a = E->elem(i), cur = E->one();
        for (int j = 0; j <= budget; ++j) {
            powv[j][i] = cur;
            cur = cur * a;
        }
    }
    std::vector<FElem> hv(npts, E->zero());
    std::vector<int> digits(budget + 1, 0);
    long long total = 1;
    for (int j = 0; j <= budget; ++j) total *= F->size();
    // digit d of the odometer adds emb(elem(1)) * t^j each unit step; the
    // constant-field step pattern is elem index increments, realized by
    // adding the embedded difference
    for (long long it = 0;; ++it) {
        bool ok = true;
        for (int i = 0; i < npts; ++i) {
            FElem h = hv[i];
            if (Av[i] * h * h + Bv[i] * h != Cv[i]) {
                ok = false;
                break;
            }
        }
        if (ok) return true;
        if (it + 1 >= total) break;
        // increment with carries; rolling a digit from size-1 to 0 nets out
        // because adding the step size times is adding zero
        int j = 0;
        while (true) {
            int old = digits[j];
            int next = (old + 1) % F->size();
            digits[j] = next;
            FElem delta = emb(F->elem(next)) - emb(F->elem(old));
            for (int i = 0; i < npts; ++i) hv[i] = hv[i] + delta * powv[j][i];
            if (next != 0) break;
            ++j;
        }
    }
    return false;
}

} // namespace

PpeDecision ppe_decide(const RatFunc& f, const RatFunc& w, const Place& P, int search_budget) {
    ppe_check_inputs(f, w, P);
    PpeDecision out;
    auto k = frobenius_power_exponent(w, f, 1);
    out.semantic = k.has_value();
    out.k = k;
    if (search_budget > 0) {
        // the two Pell equations admit the trivial twist f = w; the ring
        // divisibility w^2 | f is what pins the exponent to be positive
        bool div_ok = !f.is_zero() && in_one_prime_ring(f / (w * w), P);
        QuadCheck e1 = ppe_eq1_coeffs(f, w);
        QuadCheck e2 = ppe_eq2_coeffs(f, w);
        if (!div_ok) {
            out.search = false;
        } else if (P.is_infinite()) {
            // the ring is the polynomial ring: point-evaluation scan
            out.search = quad_poly_search(e1, search_budget) && quad_poly_search(e2, search_budget);
        } else {
            bool h_found = false, g_found = false;
            for_each_ring_element(P, search_budget, [&](const RatFunc& cand) {
                if (!h_found && e1.matches(cand)) h_found = true;
                if (!g_found && e2.matches(cand)) g_found = true;
                return !(h_found && g_found);
            });
            out.search = h_found && g_found;
        }
    }
    return out;
}

std::optional<SppeResult> sppe_decide(const RatFunc& w, const RatFunc& x, const Place& P) {
    const FieldPtr& F = w.field();
    RatFunc y = w * (x + RatFunc::one(F)) * x + RatFunc::one(F);
    if (w.is_constant() || x.is_constant() || y.is_constant())
        fail(errc::constant_input, "w, x and y = wx(x+1)+1 must be nonconstant");
    if (!in_one_prime_ring(w, P) || !in_one_prime_ring(x, P) || !in_one_prime_ring(y, P))
        fail(errc::not_in_ring, "arguments must lie in O_{K,{P}}");
    int s = 1;
    RatFunc f1 = y.frobenius_pow(s);
    RatFunc f2 = (y * x).frobenius_pow(s);
    RatFunc f3 = (y * (x + RatFunc::one(F))).frobenius_pow(s);
    if (f2.is_zero() || (f2 + f1).is_zero()) return std::nullopt;
    if (f3 != f2 + f1) fail(errc::internal, "synchronization identity violated");
    RatFunc h = (f1 - RatFunc::one(F)) * f1.pow(2) / (f2 * (f2 + f1));
    if (h != w.frobenius_pow(s)) fail(errc::internal, "synchronized value is not the Frobenius power");
    return SppeResult{h, x.frobenius_pow(s), s};
}

bool expdiv_decide(const RatFunc& g, int z, int s) {
    if (!g.is_polynomial() || g.is_constant()) fail(errc::constant_input, "g must be a nonconstant polynomial");
    if (z < 1 || s < 1) fail(errc::degenerate_input, "exponents must be positive");
    int p = g.field()->p();
    long long pz = 1, ps = 1;
    for (int i = 0; i < z; ++i) pz *= p;
    for (int i = 0; i < s; ++i) ps *= p;
    Poly one = Poly::one(g.field());
    Poly A = g.num().pow(pz - 1) - one;
    Poly B = g.num().pow(ps - 1) - one;
    bool by_poly = A.divides(B);
    bool by_int = (ps - 1) % (pz - 1) == 0;
    bool by_rule = s % z == 0;
    if (by_poly != by_int || by_int != by_rule) fail(errc::internal, "divisibility paths disagree");
    return by_poly;
}

std::optional<int> sppef_decide(const RatFunc& x, const RatFunc& X, const RatFunc& f, const RatFunc& Y) {
    if (x.is_zero()) fail(errc::zero_input, "x must be nonzero");
    RatFunc cx = x, cf = f;
    for (int s = 0; s <= 64; ++s) {
        if (cx == X && cf == Y) return s;
        bool past_x = !x.is_constant() && cx.height() > X.height();
        bool past_f = !f.is_constant() && cf.height() > Y.height();
        if (past_x || past_f) return std::nullopt;
        cx = cx.frobenius_pow(1);
        cf = cf.frobenius_pow(1);
    }
    return std::nullopt;
}

SppefWitness build_sppef_witness(const RatFunc& x, const RatFunc& f, const RatFunc& t, int s) {
    // need n >= 2 h_K(t) distinct nonzero shift constants
    int n = std::max(1, 2 * t.height());
    FieldPtr F = x.field();
    SppefWitness W;
    if (F->size() - 1 < n) {
        int grow = F->s();
        while (true) {
            ++grow;
            long long sz = 1;
            for (int i = 0; i < grow; ++i) sz *= F->p();
            if (sz - 1 >= n) break;
        }
        auto big = Field::make(F->p(), grow);
        Embedding e(F, big);
        W.constants = big;
        W.x = embed_coeffs(x, e);
        W.f = embed_coeffs(f, e);
        W.t = embed_coeffs(t, e);
    } else {
        W.constants = F;
        W.x = x;
        W.f = f;
        W.t = t;
    }
    W.s = s;
    W.shifts.push_back(W.constants->zero());
    for (int i = 1; int(W.shifts.size()) < n + 1 && i < W.constants->size(); ++i)
        W.shifts.push_back(W.constants->elem(i));
    for (auto& ci : W.shifts) {
        RatFunc cc = RatFunc::constant(ci);
        W.Y.push_back((W.f + cc).frobenius_pow(s));
        W.X.push_back((W.x + cc).frobenius_pow(s));
        W.C.push_back(cc.frobenius_pow(s));
    }
    W.T = W.t.frobenius_pow(s);
    return W;
}

bool check_sppef_witness(const SppefWitness& W) {
    size_t n1 = W.shifts.size();
    if (W.Y.size() != n1 || W.X.size() != n1 || W.C.size() != n1) return false;
    // each Y_i, X_i, C_i is a Frobenius power of the shifted element
    for (size_t i = 0; i < n1; ++i) {
        RatFunc cc = RatFunc::constant(W.shifts[i]);
        if (!frobenius_power_exponent(W.f + cc, W.Y[i])) return false;
        if (!frobenius_power_exponent(W.x + cc, W.X[i])) return false;
        if (!frobenius_power_exponent(cc, W.C[i])) return false;
    }
    if (!frobenius_power_exponent(W.t, W.T)) return false;
    // the shift equations tie the exponents together
    for (size_t i = 1; i < n1; ++i) {
        if (W.Y[i] != W.Y[0] + W.C[i]) return false;
        if (W.X[i] != W.X[0] + W.C[i]) return false;
    }
    // synchronization against t
    for (size_t i = 0; i < n1; ++i) {
        RatFunc cc = RatFunc::constant(W.shifts[i]);
        if (!frobenius_power_exponent(W.t * (W.f + cc), W.Y[i] * W.T)) return false;
        if (!frobenius_power_exponent(W.t * (W.x + cc), W.X[i] * W.T)) return false;
    }
    return true;
}

FrobeniusRatio frobenius_ratio(const RatFunc& f, int s, int q_power) {
    if (s < 1) fail(errc::degenerate_input, "s must be >= 1");
    const FieldPtr& F = f.field();
    RatFunc fq = q_power == 1 ? f : f.pow(q_power);
    RatFunc num = fq.frobenius_pow(s) - fq;
    RatFunc den = RatFunc(Poly::x(F)).frobenius_pow(s) - RatFunc(Poly::x(F));
    FrobeniusRatio R{num / den, {}};
    if (!R.value.is_zero() && R.value.den().degree() > 0) {
        // the reduced denominator divides den(f)^(q p^s) (t^(p^s) - t), so
        // its prime factors are factors of den(f) or irreducibles of degree
        // at most s; no general factorization is needed
        std::vector<Poly> candidates;
        for (auto& [g, m] : f.den().factor()) candidates.push_back(g);
        for_each_monic_irreducible(F, s, [&](const Poly& g) {
            candidates.push_back(g);
            return true;
        });
        Poly rem = R.value.den();
        for (auto& g : candidates) {
            int mult = 0;
            while (rem.degree() >= g.degree() && (rem % g).is_zero()) {
                rem = rem / g;
                ++mult;
            }
            if (mult) R.finite_poles.emplace_back(Place::finite(g), mult);
        }
        if (rem.degree() != 0) fail(errc::internal, "unexpected factor in the ratio's denominator");
    }
    return R;
}

int min_period_at(const Place& P) {
    if (P.is_infinite()) fail(errc::infinite_place, "the pole of t has no period");
    const FieldPtr& F = P.field();
    Poly t = Poly::x(F) % P.gen();
    Poly r = t;
    int bound = F->s() * P.degree();
    for (int s = 1; s <= bound; ++s) {
        r = r.powmod(F->p(), P.gen());
        if (r == t) return s;
    }
    fail(errc::internal, "no Frobenius period below the residue degree");
}

bool rational_subfield_decide(const RatFunc& g, int s, int C) {
    FrobeniusRatio R = frobenius_ratio(g, s, 1);
    auto poles = static_cast<long long>(R.finite_poles.size());
    if (!R.value.is_zero() && ord_at(R.value, Place::infinity(g.field())) < 0) ++poles;
    long long ps = 1;
    for (int i = 0; i < s; ++i) ps *= g.field()->p();
    if (!(poles < C) || !(g.height() < ps - C)) fail(errc::hypothesis_failed, "lemma hypotheses not met");
    auto fixed = [&](const Poly& h) {
        for (int i = 0; i <= h.degree(); ++i)
            if (h.coeff(i).frobenius(s) != h.coeff(i)) return false;
        return true;
    };
    return fixed(g.num()) && fixed(g.den());
}

ZerosBelow zeros_below(const RatFunc& f, int s, const Place& P) {
    if (P.is_infinite()) fail(errc::infinite_place, "zeros_below wants a finite place");
    const FieldPtr& F = f.field();
    RatFunc diff = f.frobenius_pow(s) - f;
    if (diff.is_zero() || ord_at(diff, P) <= 0) fail(errc::hypothesis_failed, "ord_P(f^(p^s) - f) must be positive");
    int ext = std::lcm(s, F->s());
    ZerosBelow Z;
    Z.extended_constants = ext == F->s() ? F : Field::make(F->p(), ext);
    RatFunc fe = f;
    Poly gen = P.gen();
    if (ext != F->s()) {
        Embedding e(F, Z.extended_constants);
        fe = embed_coeffs(f, e);
        gen = embed_coeffs(P.gen(), e);
    }
    for (auto& [g, m] : gen.factor()) {
        Place Pi = Place::finite(g);
        Poly r = residue_at(fe, Pi);
        if (r.degree() > 0) fail(errc::internal, "fixed residue fell outside the constant subfield");
        FElem b = r.is_zero() ? Z.extended_constants->zero() : r.coeff(0);
        if (b.frobenius(s) != b) fail(errc::internal, "residue not fixed by the claimed Frobenius power");
        // uniqueness: f - b has a zero, f - b' cannot for b' != b
        Z.hits.emplace_back(Pi, b);
    }
    return Z;
}

} // namespace ffdef
