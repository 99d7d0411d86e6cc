#ifndef FFDEF_MFIELD_HPP
#define FFDEF_MFIELD_HPP

#include "ffdef/series.hpp"
#include "ffdef/splitting.hpp"

namespace ffdef {

// Arithmetic in M = K(root), root^q = d, with the power basis
// {1, root, ..., root^(q-1)} and conjugations root -> xi^j root.
class MField {
  public:
    using Elem = std::vector<RatFunc>; // length q, ascending root powers

    MField(RatFunc d, int q);

    const RatFunc& d() const { return d_; }
    int q() const { return q_; }
    const FieldPtr& constants() const { return d_.field(); }
    const FElem& xi() const { return xi_; }

    Elem zero() const;
    Elem one() const;
    Elem from_k(const RatFunc& x) const;
    Elem root(int power = 1) const;
    bool is_zero(const Elem& a) const;
    bool eq(const Elem& a, const Elem& b) const;
    bool in_k(const Elem& a) const;

    Elem add(const Elem& a, const Elem& b) const;
    Elem sub(const Elem& a, const Elem& b) const;
    Elem neg(const Elem& a) const;
    Elem mul(const Elem& a, const Elem& b) const;
    Elem mul_k(const Elem& a, const RatFunc& c) const;
    Elem inv(const Elem& a) const;
    Elem conj(const Elem& a, int j) const; // root -> xi^j root
    RatFunc norm(const Elem& a) const;
    Elem frobenius(const Elem& a, int times = 1) const; // a^(p^times)
    Elem pow_p(const Elem& a, int s) const { return frobenius(a, s); }

    // valuation at every place of M above P, via Galois invariance (one
    // value for ramified/inert places, one per root lift when P splits)
    std::vector<long long> ords_above(const Elem& a, const Place& P) const;
    // height in M: degree of the pole divisor
    long long height_m(const Elem& a) const;
    long long height_m_of_k(const RatFunc& x) const { return x.is_zero() ? 0 : q_ * x.height(); }

    SplittingType place_type(const Place& P) const; // decomposition of P in M/K

  private:
    RatFunc d_;
    int q_;
    FElem xi_;
};

struct ExtensionData {
    MField M;
    RatFunc disc;                      // det^2(sigma_j(omega_i)) = V^2 d^(q-1)
    std::vector<long long> basis_heights; // h_M(root^i), i = 0..q-1
    long long c_bound;                 // C_M(Omega) = q max h_M(omega) + h(disc)
    std::vector<Place> ramified;       // places of K ramified in M (E_M downstairs)
    long long e_m;                     // degree of the ramified divisor of M
};

ExtensionData make_extension(const RatFunc& d, int q);

} // namespace ffdef

#endif
