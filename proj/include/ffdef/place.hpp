#ifndef FFDEF_PLACE_HPP
#define FFDEF_PLACE_HPP

#include <map>
#include <optional>

#include "ffdef/ratfunc.hpp"

namespace ffdef {

// Place of K: a monic irreducible polynomial, or the infinite place. The
// infinite place is a separate constructor, never a polynomial in 1/t.
class Place {
  public:
    static Place infinity(const FieldPtr& f);
    static Place finite(const Poly& monic_irreducible);

    bool is_infinite() const { return infinite_; }
    const Poly& gen() const; // finite places only
    const FieldPtr& field() const { return f_; }
    int degree() const { return infinite_ ? 1 : gen_.degree(); }

    bool operator==(const Place& o) const;
    bool operator!=(const Place& o) const { return !(*this == o); }
    bool operator<(const Place& o) const; // infinity first, then degree, then index

    std::string str() const; // "inf" or the coefficient list

  private:
    Place() = default;
    bool infinite_ = false;
    Poly gen_;
    FieldPtr f_;
};

constexpr long long ORD_INFINITY = (1LL << 62);

// the valuation; ORD_INFINITY for x = 0
long long ord_at(const RatFunc& x, const Place& P);

class Divisor {
  public:
    Divisor() = default;
    void add(const Place& P, long long mult);
    long long mult(const Place& P) const;
    const std::map<Place, long long>& support() const { return m_; }
    long long degree() const;
    bool empty() const { return m_.empty(); }

  private:
    std::map<Place, long long> m_;
};

Divisor divisor_of(const RatFunc& x); // errors on x = 0; always degree 0
std::vector<Place> pole_places(const RatFunc& x);
std::vector<Place> zero_places(const RatFunc& x);

// Residue field of a place: F_{p^s}[t]/(gen) for finite places (elements are
// canonical representatives of degree < deg gen), the constant field for the
// infinite place.
class ResidueField {
  public:
    explicit ResidueField(const Place& P);

    const Place& place() const { return P_; }
    const FieldPtr& constants() const { return P_.field(); }
    int degree() const { return P_.is_infinite() ? 1 : P_.gen().degree(); }
    long long size() const; // p^(s*deg), guarded against 63-bit overflow

    Poly reduce(const Poly& a) const;
    Poly add(const Poly& a, const Poly& b) const;
    Poly sub(const Poly& a, const Poly& b) const;
    Poly mul(const Poly& a, const Poly& b) const;
    Poly inv(const Poly& a) const;
    Poly pow(const Poly& a, long long e) const;
    Poly from_constant(const FElem& c) const;
    bool is_zero(const Poly& a) const { return reduce(a).is_zero(); }

    bool is_qth_power(const Poly& a, int q) const;
    // first non-q-th-power in element index order; NoNonresidue if all are
    Poly first_nonresidue(int q) const;
    // first residue class a0 for which T^p - a0^(p-1) T - 1 has no root here
    Poly first_artin_schreier_nonsplit() const;
    bool artin_schreier_has_root(const Poly& abar) const;

    Poly element(long long idx) const;
    long long index_of(const Poly& a) const;

  private:
    Place P_;
};

// residue of x at P (requires ord_at(x, P) >= 0), as a ResidueField element
Poly residue_at(const RatFunc& x, const Place& P);

// x's class modulo P as "unit part" with respect to the canonical
// uniformizer (the monic generator, or 1/t at infinity): residue of
// x * pi^(-ord_P(x)).
Poly unit_residue_at(const RatFunc& x, const Place& P);
RatFunc uniformizer(const Place& P);

} // namespace ffdef

#endif
