#ifndef FFDEF_CLAUSES_HPP
#define FFDEF_CLAUSES_HPP

namespace ffdef::clause {

// Clause identifiers shared between the sentence builders (formula kit) and
// the clause-by-clause evaluators (membership deciders).
inline constexpr const char* const_or_window = "const-or-window";
inline constexpr const char* sync_power = "sync-power";
inline constexpr const char* pole_window = "pole-window";
inline constexpr const char* hat_power = "hat-power";
inline constexpr const char* compare_powers = "compare-powers";
inline constexpr const char* ramified_integral = "ramified-integral";
inline constexpr const char* zero_of_t_integral = "zero-of-t-integral";
inline constexpr const char* qth_shift = "qth-shift";
inline constexpr const char* ratio_family_1 = "ratio-family-1";
inline constexpr const char* ratio_family_2 = "ratio-family-2";
inline constexpr const char* ramified_integral_x = "ramified-integral-x";
inline constexpr const char* norm_family_1 = "norm-family-1";
inline constexpr const char* norm_family_2 = "norm-family-2";
inline constexpr const char* as_extension = "artin-schreier-extension";
inline constexpr const char* norm_family_p = "norm-family-p";

} // namespace ffdef::clause

#endif
