#include "ffdef/place.hpp"

namespace ffdef {

Place Place::infinity(const FieldPtr& f) {
    Place P;
    P.infinite_ = true;
    P.f_ = f;
    P.gen_ = Poly::zero(f);
    return P;
}

Place Place::finite(const Poly& monic_irreducible) {
    if (!monic_irreducible.is_monic() || !monic_irreducible.is_irreducible())
        fail(errc::degenerate_input, "place generator must be monic irreducible: " + monic_irreducible.str());
    Place P;
    P.infinite_ = false;
    P.gen_ = monic_irreducible;
    P.f_ = monic_irreducible.field();
    return P;
}

const Poly& Place::gen() const {
    if (infinite_) fail(errc::infinite_place, "infinite place has no generator");
    return gen_;
}

bool Place::operator==(const Place& o) const {
    if (infinite_ != o.infinite_) return false;
    if (infinite_) return f_->same_field(*o.f_);
    return gen_ == o.gen_;
}

bool Place::operator<(const Place& o) const {
    if (infinite_ != o.infinite_) return infinite_; // infinity sorts first
    if (infinite_) return false;
    if (gen_.degree() != o.gen_.degree()) return gen_.degree() < o.gen_.degree();
    for (int i = gen_.degree(); i >= 0; --i) {
        int a = gen_.coeff(i).index(), b = o.gen_.coeff(i).index();
        if (a != b) return a < b;
    }
    return false;
}

std::string Place::str() const { return infinite_ ? "inf" : gen_.str(); }

long long ord_at(const RatFunc& x, const Place& P) {
    if (x.is_zero()) return ORD_INFINITY;
    if (P.is_infinite()) return x.den().degree() - x.num().degree();
    long long n = 0;
    Poly r = x.num();
    while ((r % P.gen()).is_zero()) {
        r = r / P.gen();
        ++n;
    }
    if (n > 0) return n; // reduced fraction: gen cannot divide both
    Poly d = x.den();
    while ((d % P.gen()).is_zero()) {
        d = d / P.gen();
        --n;
    }
    return n;
}

void Divisor::add(const Place& P, long long mult) {
    if (mult == 0) return;
    auto it = m_.find(P);
    if (it == m_.end()) m_.emplace(P, mult);
    else {
        it->second += mult;
        if (it->second == 0) m_.erase(it);
    }
}

long long Divisor::mult(const Place& P) const {
    auto it = m_.find(P);
    return it == m_.end() ? 0 : it->second;
}

long long Divisor::degree() const {
    long long d = 0;
    for (auto& [P, m] : m_) d += m * P.degree();
    return d;
}

Divisor divisor_of(const RatFunc& x) {
    if (x.is_zero()) fail(errc::zero_input, "divisor of 0");
    Divisor D;
    for (auto& [g, m] : x.num().factor()) D.add(Place::finite(g), m);
    for (auto& [g, m] : x.den().factor()) D.add(Place::finite(g), -m);
    D.add(Place::infinity(x.field()), x.den().degree() - x.num().degree());
    return D;
}

std::vector<Place> pole_places(const RatFunc& x) {
    std::vector<Place> out;
    Divisor D = divisor_of(x);
    for (auto& [P, m] : D.support())
        if (m < 0) out.push_back(P);
    return out;
}

std::vector<Place> zero_places(const RatFunc& x) {
    std::vector<Place> out;
    Divisor D = divisor_of(x);
    for (auto& [P, m] : D.support())
        if (m > 0) out.push_back(P);
    return out;
}

ResidueField::ResidueField(const Place& P) : P_(P) {}

long long ResidueField::size() const {
    long long n = 1;
    int e = constants()->s() * degree();
    for (int i = 0; i < e; ++i) {
        if (n > (1LL << 61) / constants()->p()) fail(errc::internal, "residue field too large for direct arithmetic");
        n *= constants()->p();
    }
    return n;
}

Poly ResidueField::reduce(const Poly& a) const {
    if (P_.is_infinite()) {
        if (a.degree() > 0) fail(errc::internal, "nonconstant element of the infinite residue field");
        return a;
    }
    return a % P_.gen();
}

Poly ResidueField::add(const Poly& a, const Poly& b) const { return reduce(a + b); }
Poly ResidueField::sub(const Poly& a, const Poly& b) const { return reduce(a - b); }
Poly ResidueField::mul(const Poly& a, const Poly& b) const { return reduce(a * b); }

Poly ResidueField::inv(const Poly& a) const {
    if (P_.is_infinite()) {
        if (a.is_zero()) fail(errc::zero_input, "residue inverse of zero");
        return Poly::constant(a.coeff(0).inv());
    }
    Poly u(constants()), v(constants());
    Poly g = reduce(a).xgcd(P_.gen(), u, v);
    if (g.degree() != 0) fail(errc::zero_input, "residue inverse of zero");
    return reduce(u * Poly::constant(g.coeff(0).inv()));
}

Poly ResidueField::pow(const Poly& a, long long e) const {
    if (P_.is_infinite()) {
        if (a.is_zero()) return a;
        return Poly::constant(a.coeff(0).pow(e));
    }
    if (e < 0) return pow(inv(a), -e);
    return reduce(a).powmod(e, P_.gen());
}

Poly ResidueField::from_constant(const FElem& c) const { return Poly::constant(c); }

bool ResidueField::is_qth_power(const Poly& a, int q) const {
    Poly r = reduce(a);
    if (r.is_zero()) fail(errc::zero_input, "is_qth_power(0) in residue field");
    long long n = size();
    if ((n - 1) % q != 0) return true;
    return pow(r, (n - 1) / q).is_one();
}

Poly ResidueField::first_nonresidue(int q) const {
    long long n = size();
    if ((n - 1) % q != 0) fail(errc::no_nonresidue, "q does not divide |residue field| - 1");
    for (long long i = 2; i < n; ++i) {
        Poly a = element(i);
        if (!is_qth_power(a, q)) return a;
    }
    fail(errc::no_nonresidue, "all elements are q-th powers");
}

bool ResidueField::artin_schreier_has_root(const Poly& abar) const {
    Poly a = reduce(abar);
    if (a.is_zero()) return true; // T^p - 1 = (T-1)^p
    // T = a U turns T^p - a^(p-1) T - 1 into U^p - U = a^(-p); solvable iff
    // the absolute trace of a^(-p) vanishes
    int p = constants()->p();
    Poly beta = pow(inv(a), p);
    int m = constants()->s() * degree();
    Poly tr = Poly::zero(constants());
    Poly x = beta;
    for (int i = 0; i < m; ++i) {
        tr = add(tr, x);
        x = pow(x, p);
    }
    if (tr.degree() > 0) fail(errc::internal, "trace not in the prime field");
    return tr.is_zero();
}

Poly ResidueField::first_artin_schreier_nonsplit() const {
    long long n = size();
    for (long long i = 1; i < n; ++i) {
        Poly a = element(i);
        if (!artin_schreier_has_root(a)) return a;
    }
    fail(errc::no_nonresidue, "every class splits the Artin-Schreier polynomial");
}

Poly ResidueField::element(long long idx) const {
    std::vector<FElem> cs;
    for (int i = 0; i < degree(); ++i) {
        cs.push_back(constants()->elem(int(idx % constants()->size())));
        idx /= constants()->size();
    }
    return Poly::from_coeffs(constants(), cs);
}

long long ResidueField::index_of(const Poly& a) const {
    Poly r = reduce(a);
    long long idx = 0;
    for (int i = degree() - 1; i >= 0; --i) idx = idx * constants()->size() + r.coeff(i).index();
    return idx;
}

Poly residue_at(const RatFunc& x, const Place& P) {
    long long v = ord_at(x, P);
    if (v < 0) fail(errc::internal, "residue of an element with a pole");
    if (v > 0 && v != ORD_INFINITY) {
        // positive order: residue is zero
        return Poly::zero(x.field());
    }
    if (x.is_zero()) return Poly::zero(x.field());
    if (P.is_infinite()) {
        if (x.den().degree() > x.num().degree()) return Poly::zero(x.field());
        return Poly::constant(x.num().lead() / x.den().lead());
    }
    ResidueField rf(P);
    Poly n = x.num() % P.gen();
    Poly d = x.den() % P.gen();
    return rf.mul(n, rf.inv(d));
}

RatFunc uniformizer(const Place& P) {
    if (P.is_infinite()) return RatFunc(Poly::one(P.field()), Poly::x(P.field()));
    return RatFunc(P.gen());
}

Poly unit_residue_at(const RatFunc& x, const Place& P) {
    if (x.is_zero()) fail(errc::zero_input, "unit part of zero");
    long long v = ord_at(x, P);
    RatFunc u = x * uniformizer(P).pow(-v);
    return residue_at(u, P);
}

} // namespace ffdef
