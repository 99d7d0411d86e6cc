#ifndef FFDEF_ERRORS_HPP
#define FFDEF_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ffdef {

enum class errc {
    non_prime_characteristic,
    reducible_modulus,
    zero_input,
    no_such_root,
    inconsistent_constraints,
    no_nonresidue,
    qth_power_input,
    missing_root_of_unity,
    reducible_extension,
    degenerate_input,
    indeterminate_generator,
    phi_violation,
    hensel_hypothesis_failed,
    ell_budget_exceeded,
    budget_exceeded,
    not_in_ring,
    non_unit_violation,
    constant_input,
    infinite_place,
    hypothesis_failed,
    not_a_polynomial,
    discriminant_vanishes,
    constant_field_collapse,
    rooted_polynomial,
    non_polynomial_occurrence,
    parse_error,
    unknown_suite,
    internal
};

const char* errc_name(errc c);

class error : public std::runtime_error {
  public:
    error(errc c, const std::string& what)
        : std::runtime_error(std::string(errc_name(c)) + ": " + what), code_(c) {}
    errc code() const { return code_; }

  private:
    errc code_;
};

// Contract violations carry a spec'd error code; internal invariant breaks
// use errc::internal and indicate a bug, not bad input.
[[noreturn]] inline void fail(errc c, const std::string& what) { throw error(c, what); }

} // namespace ffdef

#endif
