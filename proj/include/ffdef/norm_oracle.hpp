#ifndef FFDEF_NORM_ORACLE_HPP
#define FFDEF_NORM_ORACLE_HPP

#include "ffdef/series.hpp"
#include "ffdef/tower.hpp"

namespace ffdef {

enum class NormVerdict { Solvable, Unsolvable, OutsideProvenRegion };

const char* norm_verdict_name(NormVerdict v);

struct NormDecision {
    NormVerdict verdict = NormVerdict::OutsideProvenRegion;
    std::optional<Place> witness; // violating place for Unsolvable
    std::string detail;
    int ell = 0; // chosen exponent in the degree-p cases
};

enum class LocalSolvability { Yes, No, Unknown };

// Local solvability of N(y) = rhs for the degree-q Kummer extension by c of
// the top of `tower`, at the places over P: evaluated through the tame
// norm-residue symbol on (valuation, unit-residue) data.
LocalSolvability local_norm_solvable(const TowerSpec& tower, const Place& P, const RatFunc& rhs,
                                     const RatFunc& c, int q);

// place-wise evaluation of N over an arbitrary Kummer tower topped by
// c^(1/q), right side rhs
NormDecision decide_norm_over_tower(const TowerSpec& tower, const RatFunc& rhs, const RatFunc& c, int q);

// N_{L3(c^(1/q))/L3}(y) = b x^q + b^q with L3 built from (x, b, c)
NormDecision decide_norm_q(const RatFunc& x, const RatFunc& b, const RatFunc& c, int q,
                           const std::vector<Place>& S);

// N_{L4(c^(1/q))/L4}(y) = x with L4 built from (x, c)
NormDecision decide_norm_q_variant(const RatFunc& x, const RatFunc& c, int q, const std::vector<Place>& S);

// N over the Artin-Schreier extension by a, right side 1 + a^ell (b x^p + b^p)
NormDecision decide_norm_p(const RatFunc& a, const RatFunc& b, const RatFunc& x, int ell_max);

// right side 1 + a^ell Y
NormDecision decide_norm_p_variant(const RatFunc& a, const RatFunc& Y, int ell_max);

// norm of sum coords[i] gamma^i from K(gamma)/K with gamma^q = c, as the
// determinant of the multiplication map
RatFunc norm_from_coords(const std::vector<RatFunc>& coords, const RatFunc& c, int q);

struct BruteSearchResult {
    bool found = false;
    std::vector<RatFunc> coords; // length q when found
    long long tried = 0;
};

// Independent bounded oracle: exhaustively searches witnesses of the shape
// u0 + u1 c^(1/q) with both coordinates of height <= height_bound.  A found
// witness certifies solvability (the norm is unchanged from K(c^(1/q)) up
// the tower); exhaustion certifies nothing.
BruteSearchResult brute_norm_search(const TowerSpec& tower, const RatFunc& c, const RatFunc& rhs,
                                    int height_bound, long long budget = 4'000'000);

} // namespace ffdef

#endif
