#include "ffdef/galois.hpp"

#include <algorithm>
#include <sstream>

namespace ffdef {

const char* errc_name(errc c) {
    switch (c) {
        case errc::non_prime_characteristic: return "NonPrimeCharacteristic";
        case errc::reducible_modulus: return "ReducibleModulus";
        case errc::zero_input: return "ZeroInput";
        case errc::no_such_root: return "NoSuchRoot";
        case errc::inconsistent_constraints: return "InconsistentConstraints";
        case errc::no_nonresidue: return "NoNonresidue";
        case errc::qth_power_input: return "QthPowerInput";
        case errc::missing_root_of_unity: return "MissingRootOfUnity";
        case errc::reducible_extension: return "ReducibleExtension";
        case errc::degenerate_input: return "DegenerateInput";
        case errc::indeterminate_generator: return "IndeterminateGenerator";
        case errc::phi_violation: return "PhiViolation";
        case errc::hensel_hypothesis_failed: return "HenselHypothesisFailed";
        case errc::ell_budget_exceeded: return "EllBudgetExceeded";
        case errc::budget_exceeded: return "BudgetExceeded";
        case errc::not_in_ring: return "NotInRing";
        case errc::non_unit_violation: return "NonUnitViolation";
        case errc::constant_input: return "ConstantInput";
        case errc::infinite_place: return "InfinitePlace";
        case errc::hypothesis_failed: return "HypothesisFailed";
        case errc::not_a_polynomial: return "NotAPolynomial";
        case errc::discriminant_vanishes: return "DiscriminantVanishes";
        case errc::constant_field_collapse: return "ConstantFieldCollapse";
        case errc::rooted_polynomial: return "RootedPolynomial";
        case errc::non_polynomial_occurrence: return "NonPolynomialOccurrence";
        case errc::parse_error: return "ParseError";
        case errc::unknown_suite: return "UnknownSuite";
        case errc::internal: return "Internal";
    }
    return "Unknown";
}

namespace {

bool is_prime(int n) {
    if (n < 2) return false;
    for (int d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

int ipow(int b, int e) {
    int r = 1;
    while (e--) r *= b;
    return r;
}

// dense ints mod p, ascending; helpers for modulus validation and the
// table-free multiplication path
std::vector<int> fp_trim(std::vector<int> a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

std::vector<int> fp_mul(int p, const std::vector<int>& a, const std::vector<int>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<int> r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    return fp_trim(r);
}

std::vector<int> fp_mod(int p, std::vector<int> a, const std::vector<int>& m) {
    // m monic
    while (a.size() >= m.size()) {
        int c = a.back();
        if (c != 0) {
            size_t off = a.size() - m.size();
            for (size_t i = 0; i < m.size(); ++i) a[off + i] = ((a[off + i] - c * m[i]) % p + p) % p;
        }
        a.pop_back();
    }
    return fp_trim(std::move(a));
}

} // namespace

bool poly_irreducible_over_fp(int p, const std::vector<int>& poly) {
    std::vector<int> f = fp_trim(poly);
    if (f.size() < 2) return false;
    int deg = int(f.size()) - 1;
    if (deg == 1) return true;
    // trial division by every monic polynomial of degree 1..deg/2, in index
    // order; smaller prime factors are caught first so composite divisors
    // never matter
    for (int d = 1; 2 * d <= deg; ++d) {
        int count = ipow(p, d);
        for (int idx = 0; idx < count; ++idx) {
            std::vector<int> g(d + 1, 0);
            int k = idx;
            for (int i = 0; i < d; ++i) { g[i] = k % p; k /= p; }
            g[d] = 1;
            if (fp_mod(p, f, g).empty()) return false;
        }
    }
    return true;
}

Field::Field(int p, int s, std::vector<int> modulus) : p_(p), s_(s), q_(ipow(p, s)), modulus_(std::move(modulus)) {}

FieldPtr Field::make(int p, int s, std::optional<std::vector<int>> modulus) {
    if (!is_prime(p)) fail(errc::non_prime_characteristic, "p = " + std::to_string(p));
    if (s < 1) fail(errc::degenerate_input, "s must be >= 1");
    std::vector<int> m;
    if (s == 1) {
        if (modulus && fp_trim(*modulus).size() > 2)
            fail(errc::reducible_modulus, "prime field takes no modulus of degree > 1");
    } else if (modulus) {
        m = *modulus;
        for (auto& c : m) c = ((c % p) + p) % p;
        m = fp_trim(m);
        if (int(m.size()) != s + 1 || m.back() != 1)
            fail(errc::reducible_modulus, "modulus must be monic of degree s");
        if (!poly_irreducible_over_fp(p, m)) fail(errc::reducible_modulus, "modulus factors over F_p");
    } else {
        // deterministic search in ascending coefficient-vector order
        int count = ipow(p, s);
        for (int idx = 0; idx < count; ++idx) {
            std::vector<int> g(s + 1, 0);
            int k = idx;
            for (int i = 0; i < s; ++i) { g[i] = k % p; k /= p; }
            g[s] = 1;
            if (poly_irreducible_over_fp(p, g)) { m = g; break; }
        }
        if (m.empty()) fail(errc::internal, "no irreducible modulus found");
    }
    auto f = std::shared_ptr<Field>(new Field(p, s, std::move(m)));
    f->build_tables();
    return f;
}

void Field::build_tables() {
    inv_.assign(q_, 0);
    if (q_ <= 4096) {
        tables_ = true;
        mul_.assign(size_t(q_) * q_, 0);
        auto unrank = [&](int idx) {
            std::vector<int> c(std::max(s_, 1), 0);
            for (int i = 0; i < s_; ++i) { c[i] = idx % p_; idx /= p_; }
            return c;
        };
        auto rank = [&](const std::vector<int>& c) {
            int idx = 0;
            for (int i = int(c.size()) - 1; i >= 0; --i) idx = idx * p_ + (i < int(c.size()) ? c[i] : 0);
            return idx;
        };
        for (int a = 0; a < q_; ++a) {
            auto ca = fp_trim(unrank(a));
            for (int b = a; b < q_; ++b) {
                auto prod = fp_mul(p_, ca, fp_trim(unrank(b)));
                if (s_ > 1) prod = fp_mod(p_, prod, modulus_);
                else if (!prod.empty()) prod = {prod[0]};
                prod.resize(s_, 0);
                int r = rank(prod);
                mul_[size_t(a) * q_ + b] = r;
                mul_[size_t(b) * q_ + a] = r;
            }
        }
    }
    // inverses by scanning the multiplication (q is tiny)
    for (int a = 1; a < q_; ++a) {
        if (inv_[a] != 0) continue;
        for (int b = 1; b < q_; ++b)
            if (mul_idx(a, b) == 1) { inv_[a] = b; inv_[b] = a; break; }
        if (inv_[a] == 0) fail(errc::internal, "element without inverse");
    }
}

FElem Field::elem(int idx) const {
    if (idx < 0 || idx >= q_) fail(errc::internal, "element index out of range");
    return FElem(shared_from_this(), idx);
}

FElem Field::from_int(long long k) const { return FElem(shared_from_this(), int(((k % p_) + p_) % p_)); }

FElem Field::from_rep(const std::vector<int>& coeffs) const {
    if (int(coeffs.size()) > s_) fail(errc::internal, "rep too long");
    int idx = 0;
    for (int i = int(coeffs.size()) - 1; i >= 0; --i) idx = idx * p_ + (((coeffs[i] % p_) + p_) % p_);
    return FElem(shared_from_this(), idx);
}

bool Field::same_field(const Field& o) const {
    return this == &o || (p_ == o.p_ && s_ == o.s_ && modulus_ == o.modulus_);
}

int Field::add_idx(int a, int b) const {
    int r = 0, mult = 1;
    for (int i = 0; i < s_; ++i) {
        r += ((a % p_ + b % p_) % p_) * mult;
        a /= p_; b /= p_; mult *= p_;
    }
    return r;
}

int Field::neg_idx(int a) const {
    int r = 0, mult = 1;
    for (int i = 0; i < s_; ++i) {
        r += ((p_ - a % p_) % p_) * mult;
        a /= p_; mult *= p_;
    }
    return r;
}

int Field::mul_idx(int a, int b) const {
    if (tables_) return mul_[size_t(a) * q_ + b];
    std::vector<int> ca, cb;
    int x = a, y = b;
    for (int i = 0; i < s_; ++i) { ca.push_back(x % p_); x /= p_; cb.push_back(y % p_); y /= p_; }
    auto prod = fp_mul(p_, fp_trim(ca), fp_trim(cb));
    if (s_ > 1) prod = fp_mod(p_, prod, modulus_);
    int idx = 0;
    for (int i = int(prod.size()) - 1; i >= 0; --i) idx = idx * p_ + prod[i];
    return idx;
}

int Field::inv_idx(int a) const {
    if (a == 0) fail(errc::zero_input, "inverse of zero");
    return inv_[a];
}

bool Field::is_qth_power(const FElem& a, int q) const {
    if (a.is_zero()) fail(errc::zero_input, "is_qth_power(0)");
    if ((q_ - 1) % q != 0) return true;
    return a.pow((q_ - 1) / q).is_one();
}

FElem Field::primitive_root_of_unity(int q) const {
    if ((q_ - 1) % q != 0) fail(errc::no_such_root, "q does not divide p^s - 1");
    for (int i = 2; i < q_; ++i) {
        FElem x = elem(i);
        if (x.pow(q).is_one() && !x.is_one()) return x;
    }
    fail(errc::no_such_root, "no q-th root of unity found");
}

std::string Field::str() const {
    std::ostringstream os;
    os << "GF(" << p_;
    if (s_ > 1) {
        os << "^" << s_ << "; modulus=[";
        for (int i = 0; i <= s_; ++i) os << (i ? "," : "") << modulus_[i];
        os << "]";
    }
    os << ")";
    return os.str();
}

std::vector<int> FElem::rep() const {
    std::vector<int> c(f_->s(), 0);
    int x = idx_;
    for (int i = 0; i < f_->s(); ++i) { c[i] = x % f_->p(); x /= f_->p(); }
    return c;
}

FElem FElem::operator+(const FElem& o) const { return FElem(f_, f_->add_idx(idx_, o.idx_)); }
FElem FElem::operator-(const FElem& o) const { return FElem(f_, f_->add_idx(idx_, f_->neg_idx(o.idx_))); }
FElem FElem::operator-() const { return FElem(f_, f_->neg_idx(idx_)); }
FElem FElem::operator*(const FElem& o) const { return FElem(f_, f_->mul_idx(idx_, o.idx_)); }
FElem FElem::operator/(const FElem& o) const { return FElem(f_, f_->mul_idx(idx_, f_->inv_idx(o.idx_))); }
FElem FElem::inv() const { return FElem(f_, f_->inv_idx(idx_)); }

FElem FElem::pow(long long e) const {
    if (idx_ == 0) {
        if (e <= 0) fail(errc::zero_input, "0^e with e <= 0");
        return *this;
    }
    long long m = f_->size() - 1;
    e %= m;
    if (e < 0) e += m;
    FElem r = f_->one(), b = *this;
    while (e) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

FElem FElem::frobenius(int times) const {
    FElem r = *this;
    for (int i = 0; i < times; ++i) r = r.pow(f_->p());
    return r;
}

bool FElem::operator==(const FElem& o) const {
    if (!f_ || !o.f_) return !f_ && !o.f_ && idx_ == o.idx_;
    return f_->same_field(*o.f_) && idx_ == o.idx_;
}

std::string FElem::str() const {
    auto c = rep();
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c[i];
    os << "]";
    return os.str();
}

Embedding::Embedding(FieldPtr from, FieldPtr to) : from_(std::move(from)), to_(std::move(to)) {
    if (from_->p() != to_->p() || to_->s() % from_->s() != 0)
        fail(errc::degenerate_input, "no subfield embedding " + from_->str() + " -> " + to_->str());
    map_.assign(from_->size(), 0);
    if (from_->s() == 1) {
        for (int a = 0; a < from_->size(); ++a) map_[a] = to_->from_int(a).index();
        return;
    }
    // lexicographically least root of the small modulus in the big field
    const auto& m = from_->modulus();
    int root = -1;
    for (int i = 0; i < to_->size(); ++i) {
        FElem x = to_->elem(i), acc = to_->zero(), xp = to_->one();
        for (size_t k = 0; k < m.size(); ++k) {
            acc = acc + xp * to_->from_int(m[k]);
            xp = xp * x;
        }
        if (acc.is_zero()) { root = i; break; }
    }
    if (root < 0) fail(errc::internal, "modulus has no root in the extension");
    FElem r = to_->elem(root);
    for (int a = 0; a < from_->size(); ++a) {
        auto c = from_->elem(a).rep();
        FElem acc = to_->zero(), rp = to_->one();
        for (int i = 0; i < from_->s(); ++i) {
            acc = acc + rp * to_->from_int(c[i]);
            rp = rp * r;
        }
        map_[a] = acc.index();
    }
}

FElem Embedding::operator()(const FElem& x) const {
    if (!x.field()->same_field(*from_)) fail(errc::internal, "embedding applied to wrong field");
    return FElem(to_, map_[x.index()]);
}

} // namespace ffdef
