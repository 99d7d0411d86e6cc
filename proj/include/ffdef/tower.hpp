#ifndef FFDEF_TOWER_HPP
#define FFDEF_TOWER_HPP

#include "ffdef/residue_tower.hpp"
#include "ffdef/splitting.hpp"

namespace ffdef {

struct TowerStep {
    enum class Kind { Kummer, ArtinSchreier } kind;
    int degree;  // q for Kummer, p for Artin-Schreier
    RatFunc gen; // Kummer: the q-th root of gen is adjoined; AS: the parameter a
};

struct TowerSpec {
    FieldPtr field;
    std::vector<TowerStep> steps;
    int degree() const {
        int d = 1;
        for (auto& s : steps) d *= s.degree;
        return d;
    }
    std::string str() const; // nested radical expression dump
};

// L1 = K((1+1/x)^(1/q)), L2 = L1((1+1/(bx^q+b^q))^(1/q)),
// L3 = L2((1+(c+1/c)/x)^(1/q))
TowerSpec build_l3(const RatFunc& x, const RatFunc& b, const RatFunc& c, int q);
// L4 = K((1+1/x)^(1/q), (1+(c+1/c)/x)^(1/q))
TowerSpec build_l4(const RatFunc& x, const RatFunc& c, int q);

struct StepDecomposition {
    SplittingType type = SplittingType::Split;
    int e = 1, f = 1, g = 1;
    bool determinate = true; // false: split-vs-inert (or the class itself) unresolved
    bool trivial = false;    // generator was already a q-th power: degree-1 step
};

// Transport of a base place through a tower: exact ramification bookkeeping,
// the residue field as a quotient tower, and on-demand unit-part residues of
// K-elements with respect to the accumulated uniformizer (a monomial in the
// base uniformizer and the adjoined radicals).
class PlaceTransport {
  public:
    PlaceTransport(const Place& P, const TowerSpec& tower);

    const Place& base_place() const { return P_; }
    const std::vector<StepDecomposition>& steps() const { return steps_; }
    int e_total() const { return e_; }
    int f_total() const { return f_; }
    bool residues_valid() const { return residues_valid_; }
    bool unit_parts_valid() const { return unit_parts_valid_; }
    const TowerPtr& residue_tower() const { return tower_; }

    // valuation of a K-element at (any factor of) the transported place,
    // normalized so a uniformizer has valuation 1
    long long valuation(const RatFunc& z) const;
    // unit-part residue of a nonzero K-element in the top residue field;
    // nullopt when the bookkeeping cannot resolve it
    std::optional<TElem> unit_residue(const RatFunc& z) const;

  private:
    struct Radical {
        RatFunc g;   // r^deg = g
        int deg;
        long long v; // valuation of r at the level it was created, in the new normalization
    };
    struct Monomial {
        RatFunc kpart;
        std::vector<long long> rad_exp; // aligned with radicals_
    };

    std::optional<TElem> unit_residue_at(const RatFunc& z, const TowerPtr& tw, int e_now,
                                         const Monomial& unif, size_t nradicals) const;

    Place P_;
    std::vector<StepDecomposition> steps_;
    int e_ = 1, f_ = 1;
    bool residues_valid_ = true;
    bool unit_parts_valid_ = true;
    TowerPtr tower_;
    std::vector<Radical> radicals_;
    Monomial unif_;
};

// spec-facing summary: per-step (e,f,g) plus tracked element data
struct TrackedElement {
    RatFunc value;
    long long ord_base;
    long long ord_top;
    bool residue_known = false;
    bool residue_is_qth_power = false; // w.r.t. the query exponent
};

struct PlaceDecomposition {
    explicit PlaceDecomposition(Place base) : base_place(std::move(base)) {}
    Place base_place;
    std::vector<StepDecomposition> steps;
    int e_total = 1, f_total = 1;
    int residue_degree_over_constants = 1;
    bool residues_valid = true;
    std::vector<TrackedElement> tracked;
};

PlaceDecomposition transport_place(const Place& P, const TowerSpec& tower,
                                   const std::vector<RatFunc>& tracked, int residue_query_q = 0);

} // namespace ffdef

#endif
