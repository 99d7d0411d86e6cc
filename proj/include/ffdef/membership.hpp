#ifndef FFDEF_MEMBERSHIP_HPP
#define FFDEF_MEMBERSHIP_HPP

#include "ffdef/clauses.hpp"
#include "ffdef/gadgets.hpp"
#include "ffdef/norm_oracle.hpp"

namespace ffdef {

// Every decider evaluates the theorem-backed strategy (finite witness
// families in place of the universal quantifiers) and carries the direct
// valuation test alongside; the two agreeing is the module's contract.
struct MembershipReport {
    bool verdict = false;
    bool cross_check = false;
    std::string strategy;            // which side fired
    std::vector<std::string> trace;  // witnesses and clauses used
    bool agree() const { return verdict == cross_check; }
};

// ord_P x >= 0, decided through the L4-tower norm equation with the
// strong-approximation witnesses a_P, b_P
MembershipReport integral_at_prime(const RatFunc& x, const Place& P, int q);

// ord_P x < 0, decided by feeding a_P / x back to the integrality test
bool complement_integral(const RatFunc& x, const Place& P, int q);

MembershipReport is_s_integer(const RatFunc& x, const std::vector<Place>& S, int q);

bool is_constant(const RatFunc& x, int q);

// one-universal-quantifier polynomial sentence, clause by clause
MembershipReport is_polynomial_one_forall(const RatFunc& f, int q);

// uniform two-quantifier definition relative to the distinguished prime P
MembershipReport is_polynomial_uniform(const RatFunc& f, int q, const Place& P);

// characteristic-p sentence with Artin-Schreier machinery
MembershipReport is_polynomial_p_case(const RatFunc& f);

// both divisibilities (t^(p^s)-t) | (f^(p^s)-f) and the z-shifted one,
// cross-checked against the coefficient condition a^(p^z) = a
bool subfield_poly_filter(const RatFunc& f, int z);

// the strong-approximation witnesses of the one-prime integrality test
struct IntegralityWitnesses {
    RatFunc a; // order -1 at P, one other pole
    RatFunc b; // non-q-th-power residue at P, congruent to 1 at the other pole
};
IntegralityWitnesses integrality_witnesses(const Place& P, int q);

} // namespace ffdef

#endif
