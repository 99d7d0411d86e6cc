#ifndef FFDEF_APPROX_HPP
#define FFDEF_APPROX_HPP

#include "ffdef/place.hpp"

namespace ffdef {

// Strong-approximation style construction: x with x = target mod gen at each
// finite constraint place and ord_inf(x) = infinity_ord exactly.  Polynomial
// CRT plus a degree-adjusting monomial multiple of the product of the
// constraint moduli; a fractional branch (auxiliary denominator at a place
// disjoint from the constraints) covers infinity_ord above the polynomial
// range.  The result is verified against every constraint before returning.
RatFunc crt_element(const FieldPtr& f, const std::vector<std::pair<Place, Poly>>& constraints,
                    long long infinity_ord);

// b with ord_P b = 0, b not a q-th power in the residue field of P, and
// ord_inf b = -n.  Requires n >= deg P + 1.
RatFunc nonresidue_with_pole(const Place& P, int q, int n);

// characteristic-p analog: b with T^p - b^(p-1) T - 1 rootless mod P and
// ord_inf b = -n
RatFunc artin_schreier_nonsplit_with_pole(const Place& P, int n);

// ord_P(c - 1) > 0 for every P in S; S empty accepts everything
bool is_in_phi(const RatFunc& c, const std::vector<Place>& S);

// c that is a q-th non-residue at P and lies in Phi(K, S); P must not be in S
RatFunc nonresidue_in_phi(const Place& P, int q, const std::vector<Place>& S);

} // namespace ffdef

#endif
