#ifndef FFDEF_SERIES_HPP
#define FFDEF_SERIES_HPP

#include "ffdef/place.hpp"

namespace ffdef {

// Truncated Laurent series sum c[i] * pi^(val+i) over the residue field of a
// place, pi the canonical uniformizer (monic generator, or 1/t at infinity).
// Coefficients are canonical residue representatives.  The series is known
// on the exponent window [val, prec).
struct LaurentSeries {
    int val = 0;
    int prec = 0;
    std::vector<Poly> c; // size prec - val (possibly 0)
};

class Completion {
  public:
    explicit Completion(const Place& P) : P_(P), rf_(P) {}

    const Place& place() const { return P_; }
    const ResidueField& residue_field() const { return rf_; }

    LaurentSeries expand(const RatFunc& x, int prec) const;
    LaurentSeries from_residue(const Poly& r, int prec) const; // constant series
    LaurentSeries zero(int prec) const;

    // exact order if a nonzero coefficient lies in the window, else prec
    // (meaning "at least prec")
    int ord(const LaurentSeries& a) const;
    bool known_zero(const LaurentSeries& a) const { return ord(a) >= a.prec; }

    LaurentSeries add(const LaurentSeries& a, const LaurentSeries& b) const;
    LaurentSeries sub(const LaurentSeries& a, const LaurentSeries& b) const;
    LaurentSeries neg(const LaurentSeries& a) const;
    LaurentSeries mul(const LaurentSeries& a, const LaurentSeries& b) const;
    LaurentSeries inv(const LaurentSeries& a) const;
    LaurentSeries pow(const LaurentSeries& a, long long e) const;

    // Newton iteration for r with r^q = d, q invertible in the residue
    // field, starting from a simple root of X^q - d0 in the residue field.
    LaurentSeries qth_root(const LaurentSeries& d, int q, const Poly& initial_root) const;

    std::string str(const LaurentSeries& a) const;

  private:
    LaurentSeries normalized(LaurentSeries a) const;
    Place P_;
    ResidueField rf_;
};

struct HenselLift {
    LaurentSeries x0;
    LaurentSeries x1;
    int residual_ord; // order of x0^p - a^(p-1) x0 x1^(p-1) + x1^p - z
    int steps;
};

// Newton-lift the norm-form equation x0^p - a^(p-1) x0 x1^(p-1) + x1^p = z
// in the completion at P, starting from (x0, x1) = (0, 1).  Requires
// ord_P a > 0, ord_P z = 0 and ord_P(1 - z) > 2 (p-1) ord_P a.
HenselLift hensel_lift_norm_form(const RatFunc& a, const RatFunc& z, const Place& P, int precision);

} // namespace ffdef

#endif
