#include "ffdef/mfield.hpp"

#include <set>

namespace ffdef {

MField::MField(RatFunc d, int q) : d_(std::move(d)), q_(q) {
    if (d_.is_zero()) fail(errc::zero_input, "extension generator must be nonzero");
    if (is_qth_power_in_k(d_, q)) fail(errc::qth_power_input, "d is a q-th power: the extension collapses");
    xi_ = d_.field()->primitive_root_of_unity(q);
}

MField::Elem MField::zero() const { return Elem(q_, RatFunc::zero(constants())); }

MField::Elem MField::one() const {
    Elem e = zero();
    e[0] = RatFunc::one(constants());
    return e;
}

MField::Elem MField::from_k(const RatFunc& x) const {
    Elem e = zero();
    e[0] = x;
    return e;
}

MField::Elem MField::root(int power) const {
    Elem e = zero();
    int k = power % q_;
    RatFunc dmul = d_.pow(power / q_);
    e[k] = dmul;
    return e;
}

bool MField::is_zero(const Elem& a) const {
    for (auto& c : a)
        if (!c.is_zero()) return false;
    return true;
}

bool MField::eq(const Elem& a, const Elem& b) const { return is_zero(sub(a, b)); }

bool MField::in_k(const Elem& a) const {
    for (int i = 1; i < q_; ++i)
        if (!a[i].is_zero()) return false;
    return true;
}

MField::Elem MField::add(const Elem& a, const Elem& b) const {
    Elem e = zero();
    for (int i = 0; i < q_; ++i) e[i] = a[i] + b[i];
    return e;
}

MField::Elem MField::neg(const Elem& a) const {
    Elem e = zero();
    for (int i = 0; i < q_; ++i) e[i] = -a[i];
    return e;
}

MField::Elem MField::sub(const Elem& a, const Elem& b) const { return add(a, neg(b)); }

MField::Elem MField::mul(const Elem& a, const Elem& b) const {
    Elem e = zero();
    for (int i = 0; i < q_; ++i) {
        if (a[i].is_zero()) continue;
        for (int j = 0; j < q_; ++j) {
            if (b[j].is_zero()) continue;
            int k = (i + j) % q_;
            RatFunc v = a[i] * b[j];
            if (i + j >= q_) v = v * d_;
            e[k] = e[k] + v;
        }
    }
    return e;
}

MField::Elem MField::mul_k(const Elem& a, const RatFunc& c) const {
    Elem e = zero();
    for (int i = 0; i < q_; ++i) e[i] = a[i] * c;
    return e;
}

MField::Elem MField::conj(const Elem& a, int j) const {
    Elem e = zero();
    FElem x = constants()->one();
    for (int i = 0; i < q_; ++i) {
        e[i] = a[i] * RatFunc::constant(x);
        x = x * xi_.pow(j);
    }
    return e;
}

RatFunc MField::norm(const Elem& a) const {
    Elem prod = a;
    for (int j = 1; j < q_; ++j) prod = mul(prod, conj(a, j));
    if (!in_k(prod)) fail(errc::internal, "norm landed outside K");
    return prod[0];
}

MField::Elem MField::inv(const Elem& a) const {
    if (is_zero(a)) fail(errc::zero_input, "inverse of zero in M");
    Elem prod = one();
    for (int j = 1; j < q_; ++j) prod = mul(prod, conj(a, j));
    RatFunc n = norm(a);
    return mul_k(prod, n.inv());
}

MField::Elem MField::frobenius(const Elem& a, int times) const {
    Elem e = a;
    int p = constants()->p();
    for (int t = 0; t < times; ++t) {
        // (sum c_i root^i)^p = sum c_i^p root^(i p)
        Elem next = zero();
        for (int i = 0; i < q_; ++i) {
            if (e[i].is_zero()) continue;
            RatFunc cp = e[i].frobenius_pow(1);
            int ip = i * p;
            int k = ip % q_;
            next[k] = next[k] + cp * d_.pow(ip / q_);
        }
        e = next;
    }
    return e;
}

SplittingType MField::place_type(const Place& P) const { return classify_kummer(d_, q_, P); }

std::vector<long long> MField::ords_above(const Elem& a, const Place& P) const {
    if (is_zero(a)) fail(errc::zero_input, "ords_above(0)");
    SplittingType st = place_type(P);
    RatFunc n = norm(a);
    if (st != SplittingType::Split) {
        // single place; the valuation is Galois-invariant, so q ord(a) =
        // ord of the norm in the extension
        int e = st == SplittingType::Ramified ? q_ : 1;
        long long vn = e * ord_at(n, P);
        if (vn % q_ != 0) fail(errc::internal, "invariant valuation not divisible by the degree");
        return {vn / q_};
    }
    // split: one place per residue root of X^q - d; orders via series with a
    // lifted root, refined until every factor's order is exact
    ResidueField rf(P);
    Poly dres = residue_at(d_, P);
    std::vector<Poly> roots;
    for (long long i = 1; i < rf.size(); ++i) {
        Poly cand = rf.element(i);
        if (rf.sub(rf.pow(cand, q_), dres).is_zero()) roots.push_back(cand);
    }
    if (int(roots.size()) != q_) fail(errc::internal, "split place without q residue roots");
    long long total = ord_at(n, P);
    int prec = 8;
    for (int attempt = 0; attempt < 8; ++attempt) {
        Completion C(P);
        LaurentSeries ds = C.expand(d_, prec);
        std::vector<long long> ords;
        bool exact = true;
        long long sum = 0;
        for (auto& r0 : roots) {
            LaurentSeries r = C.qth_root(ds, q_, r0);
            LaurentSeries acc = C.zero(prec);
            LaurentSeries rp = C.from_residue(rf.from_constant(constants()->one()), prec);
            for (int i = 0; i < q_; ++i) {
                if (!a[i].is_zero()) acc = C.add(acc, C.mul(C.expand(a[i], prec), rp));
                rp = C.mul(rp, r);
            }
            if (C.known_zero(acc)) {
                exact = false; // cancellation beyond the window
                break;
            }
            ords.push_back(C.ord(acc));
            sum += C.ord(acc);
        }
        if (exact && sum == total) return ords;
        prec *= 2;
    }
    fail(errc::internal, "split-place order refinement did not stabilize");
}

long long MField::height_m(const Elem& a) const {
    if (is_zero(a)) return 0;
    // candidate pole places: coordinate supports and the divisor of d
    std::set<Place> places;
    for (auto& c : a) {
        if (c.is_zero()) continue;
        Divisor D = divisor_of(c);
        for (auto& [P, m] : D.support()) places.insert(P);
    }
    {
        Divisor D = divisor_of(d_);
        for (auto& [P, m] : D.support()) places.insert(P);
    }
    long long h = 0;
    for (auto& P : places) {
        SplittingType st = place_type(P);
        int f = st == SplittingType::Inert ? q_ : 1;
        for (long long o : ords_above(a, P))
            if (o < 0) h += -o * f * P.degree();
    }
    return h;
}

ExtensionData make_extension(const RatFunc& d, int q) {
    MField M(d, q);
    const FieldPtr& F = d.field();
    // det(sigma_j(root^i)) = root^(q(q-1)/2) * Vandermonde(xi^j)
    FElem V = F->one();
    for (int i = 0; i < q; ++i)
        for (int k = i + 1; k < q; ++k) V = V * (M.xi().pow(k) - M.xi().pow(i));
    RatFunc disc = RatFunc::constant(V * V) * d.pow(q - 1);
    std::vector<long long> bh;
    long long maxh = 0;
    for (int i = 0; i < q; ++i) {
        long long h = i == 0 ? 0 : M.height_m(M.root(i));
        bh.push_back(h);
        maxh = std::max(maxh, h);
    }
    std::vector<Place> ram;
    long long em = 0;
    Divisor Dd = divisor_of(d);
    for (auto& [P, m] : Dd.support()) {
        if (m % q != 0) {
            ram.push_back(P);
            em += P.degree(); // ramified places have residue degree 1 over P
        }
    }
    long long c_bound = q * maxh + (disc.is_zero() ? 0 : q * disc.height());
    return ExtensionData{std::move(M), disc, bh, c_bound, ram, em};
}

} // namespace ffdef
