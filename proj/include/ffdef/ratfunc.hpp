#ifndef FFDEF_RATFUNC_HPP
#define FFDEF_RATFUNC_HPP

#include "ffdef/poly.hpp"

namespace ffdef {

// Element of K = F_{p^s}(t): reduced fraction with monic denominator.
class RatFunc {
  public:
    RatFunc() = default;
    explicit RatFunc(const Poly& num) : num_(num), den_(Poly::one(num.field())) {}
    RatFunc(const Poly& num, const Poly& den);

    static RatFunc zero(const FieldPtr& f) { return RatFunc(Poly::zero(f)); }
    static RatFunc one(const FieldPtr& f) { return RatFunc(Poly::one(f)); }
    static RatFunc t(const FieldPtr& f) { return RatFunc(Poly::x(f)); }
    static RatFunc constant(const FElem& c) { return RatFunc(Poly::constant(c)); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    const FieldPtr& field() const { return num_.field(); }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    bool is_polynomial() const { return den_.is_one(); }
    FElem constant_value() const; // requires is_constant

    RatFunc operator+(const RatFunc& o) const;
    RatFunc operator-(const RatFunc& o) const;
    RatFunc operator-() const;
    RatFunc operator*(const RatFunc& o) const;
    RatFunc operator/(const RatFunc& o) const;
    RatFunc inv() const;
    RatFunc pow(long long e) const; // negative exponents allowed for nonzero
    RatFunc frobenius_pow(int e) const; // x^(p^e)
    bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RatFunc& o) const { return !(*this == o); }

    // max(deg num, deg den); height(0) = 0
    int height() const;

    std::string str() const; // "num/den" dense coefficient lists

  private:
    void reduce();
    Poly num_, den_;
};

// coefficient-wise application of a subfield embedding
RatFunc embed_coeffs(const RatFunc& x, const Embedding& e);

// deterministic enumeration of all x with height(x) <= h, including 0;
// visit returns false to stop early
void for_each_ratfunc_of_height(const FieldPtr& f, int h, const std::function<bool(const RatFunc&)>& visit);

} // namespace ffdef

#endif
