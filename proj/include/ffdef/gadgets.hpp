#ifndef FFDEF_GADGETS_HPP
#define FFDEF_GADGETS_HPP

#include "ffdef/place.hpp"

namespace ffdef {

// membership in O_{K,{P}}: poles only at P
bool in_one_prime_ring(const RatFunc& x, const Place& P);
// unit of O_{K,{P}}: divisor supported in {P} (nonzero constants included)
bool is_unit_in_one_prime_ring(const RatFunc& x, const Place& P);
// enumeration of ring elements of height <= bound, deterministic order
void for_each_ring_element(const Place& P, int bound, const std::function<bool(const RatFunc&)>& visit);

// b = a^(p^k) for some k >= lo (bounded scan); returns the exponent
std::optional<int> frobenius_power_exponent(const RatFunc& a, const RatFunc& b, int lo = 0, int cap = 64);

struct PpeDecision {
    bool semantic = false;               // exists k > 0 with f = w^(p^k)
    std::optional<bool> search;          // bounded witness search, when requested
    std::optional<int> k;
};

// Pell-style p-th power predicate over O_{K,{P}}.  The search path looks
// for the displayed pair (h, g) among ring elements of height <= budget;
// budget 0 skips it.
PpeDecision ppe_decide(const RatFunc& f, const RatFunc& w, const Place& P, int search_budget = 0);

struct SppeResult {
    RatFunc h, f;
    int s = 0;
};

// synchronized p-th powers: from w, x (and y = w x (x+1) + 1) produce
// h = w^(p^s), f = x^(p^s) together with the witnessed s
std::optional<SppeResult> sppe_decide(const RatFunc& w, const RatFunc& x, const Place& P);

// divisibility gadget: (g^(p^z - 1) - 1) | (g^(p^s - 1) - 1) iff z | s;
// computes the polynomial divisibility and compares with the integer rule
bool expdiv_decide(const RatFunc& g, int z, int s);

// semantic synchronized field-level powers: least s >= 0 with X = x^(p^s)
// and Y = f^(p^s)
std::optional<int> sppef_decide(const RatFunc& x, const RatFunc& X, const RatFunc& f, const RatFunc& Y);

// The constant-shift witness system behind the field-level gadget.  The
// builder may pass to a constant-field extension to find enough shifts; the
// checker verifies every equation of a claimed witness tuple.
struct SppefWitness {
    FieldPtr constants;               // possibly extended
    RatFunc x, f, t;                  // embedded into the extension
    std::vector<FElem> shifts;        // c_0 = 0, c_1, ..., c_n
    std::vector<RatFunc> Y, X, C;     // shifted powers and constant powers
    RatFunc T;                        // t^(p^s)
    int s = 0;
};
SppefWitness build_sppef_witness(const RatFunc& x, const RatFunc& f, const RatFunc& t, int s);
bool check_sppef_witness(const SppefWitness& w);

struct FrobeniusRatio {
    RatFunc value; // (f^(q p^s) - f^q) / (t^(p^s) - t)
    std::vector<std::pair<Place, long long>> finite_poles;
};
FrobeniusRatio frobenius_ratio(const RatFunc& f, int s, int q_power);

// least s >= 1 with ord_P(t^(p^s) - t) > 0
int min_period_at(const Place& P);

// Hypotheses: fewer than C distinct pole primes in the plain Frobenius
// ratio and height(g) < p^s - C.  Conclusion verified: every coefficient a
// of the reduced fraction satisfies a^(p^s) = a.
bool rational_subfield_decide(const RatFunc& g, int s, int C);

struct ZerosBelow {
    FieldPtr extended_constants;
    // factor of P in the constant-field extension, with the unique constant
    // b such that f = b there
    std::vector<std::pair<Place, FElem>> hits;
};
ZerosBelow zeros_below(const RatFunc& f, int s, const Place& P);

} // namespace ffdef

#endif
