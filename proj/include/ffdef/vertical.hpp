#ifndef FFDEF_VERTICAL_HPP
#define FFDEF_VERTICAL_HPP

#include "ffdef/mfield.hpp"

namespace ffdef {

struct CramerResult {
    std::vector<RatFunc> coords; // a_i with w = sum a_i root^i
    // qualifying places (w and basis integral, disc a unit) with the
    // verified integrality of every coordinate there
    std::vector<std::pair<Place, bool>> integrality;
};

// Solve sum_i a_i sigma_j(omega_i) = sigma_j(w) by Cramer's rule over M and
// verify the solution is the coordinate vector it came from.
CramerResult cramer_coords(const MField::Elem& w, const ExtensionData& ext);

enum class VerticalOutcome { InK, Inapplicable };

struct VerticalReport {
    VerticalOutcome outcome;
    std::string reason;
    std::vector<RatFunc> coords;
};

// Weak vertical method: congruences w = b(A) mod A at the places of V
// (unramified in M), counting hypothesis |V| > max height of nonconstant
// higher coordinates; concludes and verifies w in K.
VerticalReport weak_vertical(const MField::Elem& w, const ExtensionData& ext,
                             const std::vector<std::pair<Place, FElem>>& V);

struct ChebotarevCount {
    long long count = 0;     // degree-1 inert places t - a
    long long p_to_s = 0;    // p^s
    bool pass = false;       // count > p^(s/2), integer-safe as count^2 > p^s
    FieldPtr extended_constants;
};

// Exhaustive degree-1 non-split place count after extending constants to
// F_{p^s}; errors with ConstantFieldCollapse when the extension degenerates.
ChebotarevCount chebotarev_count(const ExtensionData& ext, int s);

struct PipelineReport {
    bool in_k = false;
    long long places_used = 0;
    long long height_bound = 0;
    long long height_of_f = 0;
};

// Order condition + Chebotarev places + congruences + weak vertical.
PipelineReport use_order_pipeline(const MField::Elem& f, int s, const ExtensionData& ext);

} // namespace ffdef

#endif
