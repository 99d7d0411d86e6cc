#include "ffdef/poly.hpp"

#include <random>
#include <sstream>

namespace ffdef {

Poly::Poly(FieldPtr f, std::vector<int32_t> coeff_indices) : f_(std::move(f)), c_(std::move(coeff_indices)) { trim(); }

void Poly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly Poly::constant(const FElem& c) {
    Poly r(c.field());
    if (!c.is_zero()) r.c_ = {int32_t(c.index())};
    return r;
}

Poly Poly::x(const FieldPtr& f) {
    Poly r(f);
    r.c_ = {0, int32_t(f->one().index())};
    return r;
}

Poly Poly::from_coeffs(const FieldPtr& f, const std::vector<FElem>& cs) {
    std::vector<int32_t> v;
    v.reserve(cs.size());
    for (auto& c : cs) v.push_back(int32_t(c.index()));
    return Poly(f, std::move(v));
}

Poly Poly::from_ints(const FieldPtr& f, const std::vector<long long>& cs) {
    std::vector<int32_t> v;
    v.reserve(cs.size());
    for (auto c : cs) v.push_back(int32_t(f->from_int(c).index()));
    return Poly(f, std::move(v));
}

FElem Poly::coeff(int i) const {
    if (i < 0 || i >= int(c_.size())) return f_->zero();
    return f_->elem(c_[i]);
}

FElem Poly::lead() const {
    if (c_.empty()) return f_->zero();
    return f_->elem(c_.back());
}

Poly Poly::operator+(const Poly& o) const {
    Poly r(f_);
    r.c_.resize(std::max(c_.size(), o.c_.size()), 0);
    for (size_t i = 0; i < r.c_.size(); ++i) {
        int a = i < c_.size() ? c_[i] : 0;
        int b = i < o.c_.size() ? o.c_[i] : 0;
        r.c_[i] = int32_t(f_->add_idx(a, b));
    }
    r.trim();
    return r;
}

Poly Poly::operator-() const {
    Poly r(f_);
    r.c_.resize(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = int32_t(f_->neg_idx(c_[i]));
    return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return Poly(f_);
    Poly r(f_);
    r.c_.assign(c_.size() + o.c_.size() - 1, 0);
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (size_t j = 0; j < o.c_.size(); ++j) {
            if (o.c_[j] == 0) continue;
            r.c_[i + j] = int32_t(f_->add_idx(r.c_[i + j], f_->mul_idx(c_[i], o.c_[j])));
        }
    }
    r.trim();
    return r;
}

Poly Poly::operator*(const FElem& c) const {
    Poly r(f_);
    if (c.is_zero()) return r;
    r.c_.resize(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = int32_t(f_->mul_idx(c_[i], c.index()));
    r.trim();
    return r;
}

bool Poly::operator==(const Poly& o) const { return c_ == o.c_ && (c_.empty() || f_->same_field(*o.f_)); }

std::pair<Poly, Poly> Poly::divrem(const Poly& d) const {
    if (d.is_zero()) fail(errc::zero_input, "division by zero polynomial");
    Poly q(f_), r = *this;
    if (degree() < d.degree()) return {q, r};
    q.c_.assign(degree() - d.degree() + 1, 0);
    int dlinv = f_->inv_idx(d.c_.back());
    while (!r.is_zero() && r.degree() >= d.degree()) {
        int k = r.degree() - d.degree();
        int c = f_->mul_idx(r.c_.back(), dlinv);
        q.c_[k] = c;
        for (size_t i = 0; i < d.c_.size(); ++i) {
            int sub = f_->mul_idx(c, d.c_[i]);
            r.c_[k + i] = int32_t(f_->add_idx(r.c_[k + i], f_->neg_idx(sub)));
        }
        r.trim();
    }
    q.trim();
    return {q, r};
}

bool Poly::divides(const Poly& other) const { return other.divrem(*this).second.is_zero(); }

Poly Poly::monic() const {
    if (is_zero()) return *this;
    return *this * lead().inv();
}

Poly Poly::pow(long long e) const {
    if (e < 0) fail(errc::internal, "negative poly power");
    Poly r = Poly::one(f_), b = *this;
    while (e) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

Poly Poly::frobenius_pow(int e) const {
    if (is_zero()) return *this;
    long long step = 1;
    for (int i = 0; i < e; ++i) step *= f_->p();
    Poly r(f_);
    r.c_.assign(size_t(degree()) * step + 1, 0);
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        r.c_[i * step] = int32_t(f_->elem(c_[i]).frobenius(e).index());
    }
    r.trim();
    return r;
}

Poly Poly::derivative() const {
    Poly r(f_);
    if (c_.size() <= 1) return r;
    r.c_.resize(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) {
        FElem v = f_->elem(c_[i]) * f_->from_int(static_cast<long long>(i));
        r.c_[i - 1] = int32_t(v.index());
    }
    r.trim();
    return r;
}

FElem Poly::eval(const FElem& x) const {
    FElem acc = f_->zero();
    for (int i = degree(); i >= 0; --i) acc = acc * x + f_->elem(c_[i]);
    return acc;
}

Poly Poly::shift_mul_x(int k) const {
    if (is_zero()) return *this;
    Poly r(f_);
    r.c_.assign(c_.size() + k, 0);
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i + k] = c_[i];
    return r;
}

Poly Poly::gcd(const Poly& o) const {
    Poly a = *this, b = o;
    while (!b.is_zero()) {
        Poly r = a % b;
        a = b;
        b = r;
    }
    return a.monic();
}

Poly Poly::xgcd(const Poly& other, Poly& a, Poly& b) const {
    Poly r0 = *this, r1 = other;
    Poly a0 = Poly::one(f_), a1 = Poly::zero(f_);
    Poly b0 = Poly::zero(f_), b1 = Poly::one(f_);
    while (!r1.is_zero()) {
        auto [q, r] = r0.divrem(r1);
        r0 = r1; r1 = r;
        Poly a2 = a0 - q * a1; a0 = a1; a1 = a2;
        Poly b2 = b0 - q * b1; b0 = b1; b1 = b2;
    }
    if (r0.is_zero()) fail(errc::zero_input, "xgcd(0,0)");
    FElem l = r0.lead().inv();
    a = a0 * l;
    b = b0 * l;
    return r0 * l;
}

Poly Poly::mulmod(const Poly& o, const Poly& mod) const { return (*this * o) % mod; }

Poly Poly::powmod(long long e, const Poly& mod) const {
    Poly r = Poly::one(f_) % mod, b = *this % mod;
    while (e) {
        if (e & 1) r = r.mulmod(b, mod);
        b = b.mulmod(b, mod);
        e >>= 1;
    }
    return r;
}

bool Poly::is_irreducible() const {
    int deg = degree();
    if (deg < 1) return false;
    if (deg == 1) return true;
    // Rabin: x^(q^deg) = x mod f, and x^(q^(deg/r)) - x coprime to f for
    // every prime r dividing deg
    Poly f = monic();
    int q = f_->size();
    std::vector<Poly> frob{Poly::x(f_) % f}; // frob[i] = x^(q^i) mod f
    for (int i = 1; i <= deg; ++i) frob.push_back(frob.back().powmod(q, f));
    Poly x = Poly::x(f_);
    if (!((frob[deg] - x) % f).is_zero()) return false;
    for (int r = 2; r <= deg; ++r) {
        if (deg % r != 0) continue;
        bool rprime = true;
        for (int d2 = 2; d2 * d2 <= r; ++d2)
            if (r % d2 == 0) rprime = false;
        if (!rprime) continue;
        Poly g = (frob[deg / r] - x) % f;
        if (g.is_zero()) return false;
        if (f.gcd(g).degree() != 0) return false;
    }
    return true;
}

namespace {

Poly pth_root_poly(const Poly& f) {
    // f = h(t^p) over F_{p^s}: h has coefficients a^(p^(s-1))
    const FieldPtr& F = f.field();
    int p = F->p();
    std::vector<FElem> cs;
    for (int i = 0; i <= f.degree(); i += p) cs.push_back(f.coeff(i).frobenius(F->s() > 1 ? F->s() - 1 : 0));
    if (F->s() == 1) {
        cs.clear();
        for (int i = 0; i <= f.degree(); i += p) cs.push_back(f.coeff(i));
    }
    return Poly::from_coeffs(F, cs);
}

void equal_degree_split(const Poly& g, int d, std::vector<Poly>& out, std::mt19937_64& rng) {
    const FieldPtr& F = g.field();
    if (g.degree() == d) {
        out.push_back(g.monic());
        return;
    }
    int q = F->size();
    int p = F->p();
    while (true) {
        std::vector<int32_t> rc(g.degree());
        for (auto& c : rc) c = int32_t(rng() % q);
        Poly r(F, std::move(rc));
        if (r.is_zero()) continue;
        Poly cand(F);
        if (p == 2) {
            // absolute trace splitting
            Poly u = Poly::zero(F), x = r % g;
            int m = d * F->s();
            for (int i = 0; i < m; ++i) {
                u = (u + x) % g;
                x = x.mulmod(x, g);
            }
            cand = g.gcd(u);
        } else {
            // trace to F_q then the (q-1)/2 power
            Poly u = Poly::zero(F), x = r % g;
            for (int i = 0; i < d; ++i) {
                u = (u + x) % g;
                x = x.powmod(q, g);
            }
            if (u.is_zero()) continue;
            Poly w = u.powmod((q - 1) / 2, g);
            cand = g.gcd(w - Poly::one(F));
        }
        if (cand.degree() > 0 && cand.degree() < g.degree()) {
            equal_degree_split(cand, d, out, rng);
            equal_degree_split(g / cand, d, out, rng);
            return;
        }
    }
}

void distinct_prime_factors(const Poly& f0, std::vector<Poly>& primes) {
    const FieldPtr& F = f0.field();
    Poly f = f0.monic();
    if (f.degree() <= 0) return;
    Poly fp = f.derivative();
    if (fp.is_zero()) {
        distinct_prime_factors(pth_root_poly(f), primes);
        return;
    }
    Poly g = f.gcd(fp);
    Poly w = f / g; // squarefree, contains every factor of multiplicity not divisible by p
    // DDF on w; the factors whose multiplicity is divisible by p hide in g
    // and are collected by the recursion at the end
    std::mt19937_64 rng(0x9e3779b97f4a7c15ULL ^ (unsigned long long)(w.degree() * 2654435761u + f0.degree()));
    int q = F->size();
    Poly x = Poly::x(F);
    Poly frob = x % w;
    Poly wrem = w;
    for (int d = 1; wrem.degree() > 0 && 2 * d <= wrem.degree() + 1; ++d) {
        frob = frob.powmod(q, wrem);
        Poly gd = wrem.gcd(frob - (x % wrem));
        if (gd.degree() > 0) {
            equal_degree_split(gd, d, primes, rng);
            wrem = wrem / gd;
            frob = frob % wrem;
        }
        if (wrem.degree() > 0 && wrem.degree() < 2 * (d + 1)) {
            primes.push_back(wrem.monic());
            wrem = Poly::one(F);
        }
    }
    if (wrem.degree() > 0) primes.push_back(wrem.monic());
    // recurse into the part that still hides p-divisible multiplicities
    Poly h = f0.monic();
    for (auto& pi : primes) {
        while (h.degree() >= pi.degree() && (h % pi).is_zero()) h = h / pi;
    }
    if (h.degree() > 0) distinct_prime_factors(h, primes);
}

} // namespace

std::vector<std::pair<Poly, int>> Poly::factor() const {
    if (is_zero()) fail(errc::zero_input, "factor(0)");
    std::vector<std::pair<Poly, int>> out;
    if (degree() <= 0) return out;
    std::vector<Poly> primes;
    distinct_prime_factors(*this, primes);
    // dedupe and count multiplicities by division
    std::sort(primes.begin(), primes.end(), [](const Poly& a, const Poly& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        for (int i = a.degree(); i >= 0; --i) {
            if (a.coeff(i).index() != b.coeff(i).index()) return a.coeff(i).index() < b.coeff(i).index();
        }
        return false;
    });
    primes.erase(std::unique(primes.begin(), primes.end(), [](const Poly& a, const Poly& b) { return a == b; }),
                 primes.end());
    Poly rem = monic();
    for (auto& pi : primes) {
        int mult = 0;
        while (rem.degree() >= pi.degree() && (rem % pi).is_zero()) {
            rem = rem / pi;
            ++mult;
        }
        if (mult) out.emplace_back(pi, mult);
    }
    if (rem.degree() != 0) fail(errc::internal, "factorization left a nontrivial cofactor");
    return out;
}

std::string Poly::str() const {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < c_.size(); ++i) os << (i ? "," : "") << f_->elem(c_[i]).str();
    if (c_.empty()) os << "0";
    os << "]";
    return os.str();
}


Poly embed_coeffs(const Poly& a, const Embedding& e) {
    std::vector<FElem> cs;
    for (int i = 0; i <= a.degree(); ++i) cs.push_back(e(a.coeff(i)));
    return Poly::from_coeffs(e.to(), cs);
}

Poly poly_from_index(const FieldPtr& f, int degree, long long idx, bool monic) {
    std::vector<int32_t> c(degree + 1, 0);
    int n = monic ? degree : degree + 1;
    for (int i = 0; i < n; ++i) {
        c[i] = int32_t(idx % f->size());
        idx /= f->size();
    }
    if (monic) c[degree] = int32_t(f->one().index());
    return Poly(f, std::move(c));
}

long long poly_count(const FieldPtr& f, int degree, bool monic) {
    long long n = 1;
    int e = monic ? degree : degree + 1;
    for (int i = 0; i < e; ++i) n *= f->size();
    return n;
}

void for_each_monic_irreducible(const FieldPtr& f, int max_degree,
                                const std::function<bool(const Poly&)>& visit) {
    for (int d = 1; d <= max_degree; ++d) {
        long long count = poly_count(f, d, true);
        for (long long idx = 0; idx < count; ++idx) {
            Poly g = poly_from_index(f, d, idx, true);
            if (g.is_irreducible())
                if (!visit(g)) return;
        }
    }
}

} // namespace ffdef
