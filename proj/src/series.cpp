#include "ffdef/series.hpp"

#include <sstream>

namespace ffdef {

LaurentSeries Completion::normalized(LaurentSeries a) const {
    while (!a.c.empty() && a.c.front().is_zero() && a.val < a.prec) {
        a.c.erase(a.c.begin());
        ++a.val;
    }
    if (int(a.c.size()) > a.prec - a.val) a.c.resize(std::max(a.prec - a.val, 0));
    if (a.c.empty()) a.val = a.prec;
    return a;
}

LaurentSeries Completion::zero(int prec) const {
    LaurentSeries s;
    s.val = prec;
    s.prec = prec;
    return s;
}

LaurentSeries Completion::from_residue(const Poly& r, int prec) const {
    LaurentSeries s;
    s.val = 0;
    s.prec = prec;
    s.c.assign(std::max(prec, 0), Poly::zero(P_.field()));
    if (prec > 0) s.c[0] = rf_.reduce(r);
    return normalized(s);
}

int Completion::ord(const LaurentSeries& a) const {
    for (size_t i = 0; i < a.c.size(); ++i)
        if (!a.c[i].is_zero()) return a.val + int(i);
    return a.prec;
}

LaurentSeries Completion::add(const LaurentSeries& a, const LaurentSeries& b) const {
    LaurentSeries s;
    s.val = std::min(a.val, b.val);
    s.prec = std::min(a.prec, b.prec);
    if (s.val > s.prec) s.val = s.prec;
    s.c.assign(std::max(s.prec - s.val, 0), Poly::zero(P_.field()));
    for (size_t i = 0; i < a.c.size(); ++i) {
        int e = a.val + int(i);
        if (e >= s.val && e < s.prec) s.c[e - s.val] = rf_.add(s.c[e - s.val], a.c[i]);
    }
    for (size_t i = 0; i < b.c.size(); ++i) {
        int e = b.val + int(i);
        if (e >= s.val && e < s.prec) s.c[e - s.val] = rf_.add(s.c[e - s.val], b.c[i]);
    }
    return normalized(s);
}

LaurentSeries Completion::neg(const LaurentSeries& a) const {
    LaurentSeries s = a;
    for (auto& x : s.c) x = rf_.sub(Poly::zero(P_.field()), x);
    return s;
}

LaurentSeries Completion::sub(const LaurentSeries& a, const LaurentSeries& b) const { return add(a, neg(b)); }

LaurentSeries Completion::mul(const LaurentSeries& a, const LaurentSeries& b) const {
    LaurentSeries s;
    s.prec = std::min(a.val + b.prec, b.val + a.prec);
    s.val = a.val + b.val;
    if (s.val > s.prec) s.val = s.prec;
    s.c.assign(std::max(s.prec - s.val, 0), Poly::zero(P_.field()));
    // raw convolution first: digit products can exceed the residue degree at
    // places of degree >= 2 and the excess carries into higher digits
    for (size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i].is_zero()) continue;
        for (size_t j = 0; j < b.c.size(); ++j) {
            int e = a.val + int(i) + b.val + int(j);
            if (e >= s.prec) break;
            if (e < s.val) continue;
            s.c[e - s.val] = s.c[e - s.val] + a.c[i] * b.c[j];
        }
    }
    if (!P_.is_infinite()) {
        for (size_t k = 0; k < s.c.size(); ++k) {
            auto [carry, digit] = s.c[k].divrem(P_.gen());
            s.c[k] = digit;
            if (!carry.is_zero() && k + 1 < s.c.size()) s.c[k + 1] = s.c[k + 1] + carry;
        }
    }
    return normalized(s);
}

LaurentSeries Completion::inv(const LaurentSeries& a0) const {
    LaurentSeries a = normalized(a0);
    if (a.c.empty() || a.c.front().is_zero()) fail(errc::zero_input, "series inverse needs exact leading term");
    int rel = a.prec - a.val;
    LaurentSeries u = a;
    u.val = 0;
    u.prec = rel;
    LaurentSeries one_s = from_residue(rf_.from_constant(P_.field()->one()), rel);
    LaurentSeries y = from_residue(rf_.inv(u.c.front()), rel);
    for (int it = 0; it < 64; ++it) {
        LaurentSeries e = sub(one_s, mul(u, y));
        if (known_zero(e)) break;
        y = add(y, mul(y, e)); // y (2 - u y)
    }
    if (!known_zero(sub(mul(u, y), one_s))) fail(errc::internal, "series inversion did not converge");
    y.val -= a.val;
    y.prec -= a.val;
    return normalized(y);
}

LaurentSeries Completion::pow(const LaurentSeries& a, long long e) const {
    if (e < 0) return pow(inv(a), -e);
    // guard precision: start from a unit-window one
    LaurentSeries r;
    r.val = 0;
    r.prec = a.prec - a.val + std::abs(a.val) * int(e) + 1;
    r.c.assign(r.prec, Poly::zero(P_.field()));
    r.c[0] = rf_.from_constant(P_.field()->one());
    r = normalized(r);
    LaurentSeries b = a;
    while (e) {
        if (e & 1) r = mul(r, b);
        e >>= 1;
        if (e) b = mul(b, b);
    }
    return r;
}

LaurentSeries Completion::expand(const RatFunc& x, int prec) const {
    if (x.is_zero()) return zero(prec);
    const FieldPtr& F = x.field();
    auto poly_digits = [&](const Poly& p0, int val_shift, int want_prec) {
        // finite place: pi-adic digits by repeated division
        LaurentSeries s;
        s.val = val_shift;
        s.prec = want_prec;
        Poly cur = p0;
        while (!cur.is_zero() && s.val + int(s.c.size()) < want_prec) {
            auto [q, r] = cur.divrem(P_.gen());
            s.c.push_back(r);
            cur = q;
        }
        s.c.resize(std::max(want_prec - s.val, 0), Poly::zero(F));
        return normalized(s);
    };

    if (P_.is_infinite()) {
        // substitute u = 1/t: reversed coefficient sequences are series in u
        auto reversed = [&](const Poly& p0) {
            LaurentSeries s;
            s.val = 0;
            s.prec = prec + std::abs(x.num().degree() - x.den().degree()) + 1;
            s.c.assign(s.prec, Poly::zero(F));
            for (int i = 0; i <= p0.degree(); ++i)
                if (p0.degree() - i < int(s.c.size())) s.c[p0.degree() - i] = Poly::constant(p0.coeff(i));
            return normalized(s);
        };
        LaurentSeries n = reversed(x.num());
        LaurentSeries d = reversed(x.den());
        int shift = x.den().degree() - x.num().degree(); // ord at infinity
        LaurentSeries r = mul(n, inv(d));
        r.val += shift - (0); // n/d already carries val 0 each; apply shift
        r.prec += shift;
        LaurentSeries rr = r;
        rr.prec = std::min(rr.prec, prec);
        return normalized(rr);
    }

    // finite place: strip uniformizer powers so the denominator is a unit
    Poly n = x.num(), d = x.den();
    int a = 0, b = 0;
    while ((n % P_.gen()).is_zero()) {
        n = n / P_.gen();
        ++a;
    }
    while ((d % P_.gen()).is_zero()) {
        d = d / P_.gen();
        ++b;
    }
    int v = a - b;
    int rel = prec - v + 1;
    LaurentSeries sn = poly_digits(n, 0, rel);
    LaurentSeries sd = poly_digits(d, 0, rel);
    LaurentSeries r = mul(sn, inv(sd));
    r.val += v;
    r.prec = std::min(r.prec + v, prec);
    return normalized(r);
}

LaurentSeries Completion::qth_root(const LaurentSeries& d, int q, const Poly& initial_root) const {
    if (ord(d) != 0) fail(errc::internal, "qth_root wants a unit series");
    FElem qc = P_.field()->from_int(q);
    if (qc.is_zero()) fail(errc::internal, "qth_root needs q invertible");
    LaurentSeries r = from_residue(initial_root, d.prec);
    for (int it = 0; it < 64; ++it) {
        LaurentSeries err = sub(pow(r, q), d);
        if (known_zero(err)) break;
        // r -= err / (q r^(q-1))
        LaurentSeries deriv = mul(from_residue(rf_.from_constant(qc), d.prec), pow(r, q - 1));
        r = sub(r, mul(err, inv(deriv)));
    }
    LaurentSeries check = sub(pow(r, q), d);
    if (!known_zero(check)) fail(errc::internal, "qth_root did not converge");
    return r;
}

std::string Completion::str(const LaurentSeries& a) const {
    std::ostringstream os;
    os << "O(" << a.prec << ")";
    for (int i = int(a.c.size()) - 1; i >= 0; --i)
        if (!a.c[i].is_zero()) os << " + " << a.c[i].str() << "*pi^" << (a.val + i);
    return os.str();
}

HenselLift hensel_lift_norm_form(const RatFunc& a, const RatFunc& z, const Place& P, int precision) {
    int p = a.field()->p();
    long long da = ord_at(a, P);
    if (da <= 0) fail(errc::hensel_hypothesis_failed, "ord_P a must be positive");
    if (ord_at(z, P) != 0) fail(errc::hensel_hypothesis_failed, "ord_P z must be zero");
    long long dz = ord_at(z - RatFunc::one(z.field()), P);
    if (!(dz > 2 * (p - 1) * da)) fail(errc::hensel_hypothesis_failed, "ord_P(1-z) must exceed 2(p-1) ord_P a");

    int wp = precision + 2 * int(p - 1) * int(da) + 4;
    Completion C(P);
    LaurentSeries sa = C.expand(a, wp);
    LaurentSeries sz = C.expand(z, wp);
    LaurentSeries one = C.from_residue(C.residue_field().from_constant(a.field()->one()), wp);
    LaurentSeries ap1 = C.pow(sa, p - 1);

    auto norm_form = [&](const LaurentSeries& x0) {
        // x1 = 1: x0^p - a^(p-1) x0 + 1 - z
        return C.add(C.sub(C.pow(x0, p), C.mul(ap1, x0)), C.sub(one, sz));
    };

    LaurentSeries x0 = C.zero(wp);
    int steps = 0;
    LaurentSeries g = norm_form(x0);
    while (C.ord(g) < precision && steps < 64) {
        // d/dx0 = -a^(p-1) in characteristic p
        LaurentSeries delta = C.mul(g, C.inv(C.neg(ap1)));
        x0 = C.sub(x0, delta);
        g = norm_form(x0);
        ++steps;
    }
    if (C.ord(g) < precision) fail(errc::hensel_hypothesis_failed, "did not reach requested precision");
    return HenselLift{x0, one, C.ord(g), steps};
}

} // namespace ffdef
