#include "ffdef/ratfunc.hpp"

#include <sstream>

namespace ffdef {

RatFunc::RatFunc(const Poly& num, const Poly& den) : num_(num), den_(den) {
    if (den_.is_zero()) fail(errc::zero_input, "zero denominator");
    reduce();
}

void RatFunc::reduce() {
    if (num_.is_zero()) {
        den_ = Poly::one(num_.field());
        return;
    }
    Poly g = num_.gcd(den_);
    if (g.degree() > 0) {
        num_ = num_ / g;
        den_ = den_ / g;
    }
    FElem l = den_.lead().inv();
    num_ = num_ * l;
    den_ = den_ * l;
}

FElem RatFunc::constant_value() const {
    if (!is_constant()) fail(errc::internal, "constant_value of nonconstant");
    return num_.coeff(0) / den_.coeff(0);
}

RatFunc RatFunc::operator+(const RatFunc& o) const { return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_); }
RatFunc RatFunc::operator-(const RatFunc& o) const { return RatFunc(num_ * o.den_ - o.num_ * den_, den_ * o.den_); }
RatFunc RatFunc::operator-() const { return RatFunc(-num_, den_); }
RatFunc RatFunc::operator*(const RatFunc& o) const { return RatFunc(num_ * o.num_, den_ * o.den_); }

RatFunc RatFunc::operator/(const RatFunc& o) const {
    if (o.is_zero()) fail(errc::zero_input, "division by zero");
    return RatFunc(num_ * o.den_, den_ * o.num_);
}

RatFunc RatFunc::inv() const {
    if (is_zero()) fail(errc::zero_input, "inverse of zero");
    return RatFunc(den_, num_);
}

RatFunc RatFunc::pow(long long e) const {
    if (e < 0) return inv().pow(-e);
    RatFunc r = RatFunc::one(field()), b = *this;
    while (e) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

RatFunc RatFunc::frobenius_pow(int e) const { return RatFunc(num_.frobenius_pow(e), den_.frobenius_pow(e)); }

int RatFunc::height() const {
    if (is_zero()) return 0;
    return std::max(num_.degree(), den_.degree());
}

std::string RatFunc::str() const {
    std::ostringstream os;
    os << num_.str();
    if (!den_.is_one()) os << "/" << den_.str();
    return os.str();
}

RatFunc embed_coeffs(const RatFunc& x, const Embedding& e) {
    return RatFunc(embed_coeffs(x.num(), e), embed_coeffs(x.den(), e));
}

void for_each_ratfunc_of_height(const FieldPtr& f, int h, const std::function<bool(const RatFunc&)>& visit) {
    // all reduced num/den with den monic, max degree <= h
    for (int dd = 0; dd <= h; ++dd) {
        long long dcount = poly_count(f, dd, true);
        for (long long di = 0; di < dcount; ++di) {
            Poly den = poly_from_index(f, dd, di, true);
            for (int nd = -1; nd <= h; ++nd) {
                if (nd < 0) {
                    if (dd == 0)
                        if (!visit(RatFunc::zero(f))) return;
                    continue;
                }
                long long ncount = poly_count(f, nd, false);
                for (long long ni = 0; ni < ncount; ++ni) {
                    Poly num = poly_from_index(f, nd, ni, false);
                    if (num.degree() != nd) continue; // exact degree to avoid repeats
                    if (num.gcd(den).degree() > 0) continue;
                    if (!visit(RatFunc(num, den))) return;
                }
            }
        }
    }
}

} // namespace ffdef
