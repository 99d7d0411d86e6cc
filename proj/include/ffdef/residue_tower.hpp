#ifndef FFDEF_RESIDUE_TOWER_HPP
#define FFDEF_RESIDUE_TOWER_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include "ffdef/place.hpp"

namespace ffdef {

using bigint = boost::multiprecision::cpp_int;

class TowerField;
using TowerPtr = std::shared_ptr<const TowerField>;

// Element of a residue-field tower: at the leaf a canonical representative
// modulo the place generator, above that a coefficient vector over the
// previous level.
struct TElem {
    Poly leaf;               // depth 0 payload
    std::vector<TElem> kids; // depth > 0 payload, dense, size = level degree
    int depth = 0;
};

// A finite field presented as the residue field of a place of K extended by
// a chain of quotients (each level adjoins a root of a monic irreducible
// polynomial over the previous level).  Sizes can exceed machine words, so
// exponents are bigint.
class TowerField : public std::enable_shared_from_this<TowerField> {
  public:
    static TowerPtr leaf(const Place& P);
    // minpoly: ascending coefficients over *this*, monic, degree >= 2;
    // irreducibility is the caller's obligation (it is what the classifiers
    // establish before extending)
    TowerPtr extend(std::vector<TElem> minpoly) const;

    bool is_leaf() const { return !base_; }
    const TowerPtr& base() const { return base_; }
    const ResidueField& leaf_field() const;
    int level_degree() const { return deg_; }
    int absolute_degree() const { return absdeg_; } // over F_p
    int p() const;
    const bigint& size() const { return size_; }
    int depth() const { return depth_; }

    TElem zero() const;
    TElem one() const;
    TElem from_int(long long k) const;
    TElem embed(const TElem& lower) const;      // from base tower (one level down)
    TElem embed_leaf(const Poly& a) const;      // from the leaf residue field
    TElem generator() const;                    // the adjoined root (depth > 0)

    bool is_zero(const TElem& a) const;
    bool eq(const TElem& a, const TElem& b) const;
    TElem add(const TElem& a, const TElem& b) const;
    TElem sub(const TElem& a, const TElem& b) const;
    TElem neg(const TElem& a) const;
    TElem mul(const TElem& a, const TElem& b) const;
    TElem inv(const TElem& a) const;
    TElem pow(const TElem& a, const bigint& e) const;

    bool is_qth_power(const TElem& a, int q) const;
    // root existence for T^p - abar^(p-1) T - 1 via the absolute trace
    bool artin_schreier_has_root(const TElem& abar) const;

  private:
    TowerField() = default;
    TowerPtr base_;
    std::optional<ResidueField> leafrf_;
    std::vector<TElem> minpoly_;
    int deg_ = 1;
    int absdeg_ = 1;
    int depth_ = 0;
    bigint size_ = 0;
};

} // namespace ffdef

#endif
