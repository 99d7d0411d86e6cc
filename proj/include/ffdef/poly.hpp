#ifndef FFDEF_POLY_HPP
#define FFDEF_POLY_HPP

#include <functional>
#include <utility>
#include <vector>

#include "ffdef/galois.hpp"

namespace ffdef {

// Dense polynomial over a Field, ascending coefficients, no trailing zeros.
// degree() of the zero polynomial is -1.
class Poly {
  public:
    Poly() = default;
    explicit Poly(FieldPtr f) : f_(std::move(f)) {}
    Poly(FieldPtr f, std::vector<int32_t> coeff_indices);

    static Poly zero(const FieldPtr& f) { return Poly(f); }
    static Poly constant(const FElem& c);
    static Poly one(const FieldPtr& f) { return constant(f->one()); }
    static Poly x(const FieldPtr& f);
    static Poly from_coeffs(const FieldPtr& f, const std::vector<FElem>& cs);
    static Poly from_ints(const FieldPtr& f, const std::vector<long long>& cs);

    const FieldPtr& field() const { return f_; }
    int degree() const { return int(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    bool is_one() const { return c_.size() == 1 && c_[0] == 1 % f_->size(); }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }
    FElem coeff(int i) const;
    FElem lead() const;

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator-() const;
    Poly operator*(const Poly& o) const;
    Poly operator*(const FElem& c) const;
    bool operator==(const Poly& o) const;
    bool operator!=(const Poly& o) const { return !(*this == o); }

    std::pair<Poly, Poly> divrem(const Poly& d) const;
    Poly operator/(const Poly& d) const { return divrem(d).first; }
    Poly operator%(const Poly& d) const { return divrem(d).second; }
    bool divides(const Poly& other) const; // this | other

    Poly monic() const;
    Poly pow(long long e) const;
    // f(t)^(p^e) via coefficient Frobenius and exponent spread
    Poly frobenius_pow(int e) const;
    Poly derivative() const;
    FElem eval(const FElem& x) const;
    Poly shift_mul_x(int k) const; // multiply by t^k

    Poly gcd(const Poly& o) const; // monic
    // g = a*this + b*other, g monic gcd
    Poly xgcd(const Poly& other, Poly& a, Poly& b) const;

    Poly powmod(long long e, const Poly& mod) const;
    Poly mulmod(const Poly& o, const Poly& mod) const;

    bool is_irreducible() const;
    // monic irreducible factors with multiplicity, by trial division in
    // degree order (desk-scale degrees); leading unit returned separately
    std::vector<std::pair<Poly, int>> factor() const;

    std::string str() const; // ascending coefficient list [c0,...]

  private:
    void trim();
    FieldPtr f_;
    std::vector<int32_t> c_;
};

// coefficient-wise application of a subfield embedding
Poly embed_coeffs(const Poly& a, const Embedding& e);

// deterministic enumeration helpers (index order = ascending coefficient
// vectors over the field's element order)
Poly poly_from_index(const FieldPtr& f, int degree, long long idx, bool monic);
long long poly_count(const FieldPtr& f, int degree, bool monic);
void for_each_monic_irreducible(const FieldPtr& f, int max_degree,
                                const std::function<bool(const Poly&)>& visit);

} // namespace ffdef

#endif
