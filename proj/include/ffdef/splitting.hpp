#ifndef FFDEF_SPLITTING_HPP
#define FFDEF_SPLITTING_HPP

#include "ffdef/approx.hpp"

namespace ffdef {

enum class SplittingType { Split, Inert, Ramified };

const char* splitting_name(SplittingType t);

// (e, f, g) with e*f*g = extension degree n for a prime-degree step
struct EFG {
    int e = 1, f = 1, g = 1;
};
EFG efg_of(SplittingType t, int n);

// exact global test: b in K^q
bool is_qth_power_in_k(const RatFunc& b, int q);
std::optional<RatFunc> qth_root_in_k(const RatFunc& b, int q);

// Decomposition of P in K(b^(1/q))/K.  Requires xi_q in the constant field
// and b not a q-th power in K.
SplittingType classify_kummer(const RatFunc& b, int q, const Place& P);

// T^p - a^(p-1) T - 1: either it has a root in K or it cuts out a cyclic
// degree-p extension; decided by bounded root search (roots have height at
// most height(a) + 1)
bool artin_schreier_irreducible_over_k(const RatFunc& a);

// Decomposition of P in K(alpha)/K with alpha^p - a^(p-1) alpha - 1 = 0
SplittingType classify_artin_schreier(const RatFunc& a, const Place& P);

// nonzero a in the constant field with T^p - a^(p-1) T - 1 irreducible,
// least in element index order
FElem find_as_generator(const FieldPtr& field);

} // namespace ffdef

#endif
