#include "ffdef/splitting.hpp"

namespace ffdef {

const char* splitting_name(SplittingType t) {
    switch (t) {
        case SplittingType::Split: return "split";
        case SplittingType::Inert: return "inert";
        case SplittingType::Ramified: return "ramified";
    }
    return "?";
}

EFG efg_of(SplittingType t, int n) {
    switch (t) {
        case SplittingType::Split: return {1, 1, n};
        case SplittingType::Inert: return {1, n, 1};
        case SplittingType::Ramified: return {n, 1, 1};
    }
    return {};
}

std::optional<RatFunc> qth_root_in_k(const RatFunc& b, int q) {
    if (b.is_zero()) return RatFunc::zero(b.field());
    Poly gn = Poly::one(b.field()), gd = Poly::one(b.field());
    for (auto& [g, m] : b.num().factor()) {
        if (m % q != 0) return std::nullopt;
        gn = gn * g.pow(m / q);
    }
    for (auto& [g, m] : b.den().factor()) {
        if (m % q != 0) return std::nullopt;
        gd = gd * g.pow(m / q);
    }
    FElem lead = b.num().lead(); // denominator is monic
    // leading constant must itself be a q-th power
    if (!b.field()->is_qth_power(lead, q)) return std::nullopt;
    for (int i = 0; i < b.field()->size(); ++i) {
        FElem c = b.field()->elem(i);
        if (!c.is_zero() && c.pow(q) == lead) {
            RatFunc root(gn * c, gd);
            if (root.pow(q) != b) fail(errc::internal, "q-th root reconstruction failed");
            return root;
        }
    }
    return std::nullopt;
}

bool is_qth_power_in_k(const RatFunc& b, int q) { return qth_root_in_k(b, q).has_value(); }

SplittingType classify_kummer(const RatFunc& b, int q, const Place& P) {
    const FieldPtr& f = P.field();
    if ((f->size() - 1) % q != 0) fail(errc::missing_root_of_unity, "constant field has no primitive q-th root of unity");
    if (b.is_zero()) fail(errc::zero_input, "classify_kummer(0)");
    if (is_qth_power_in_k(b, q)) fail(errc::qth_power_input, "generator is a q-th power in K");
    long long v = ord_at(b, P);
    if (v % q != 0) return SplittingType::Ramified;
    // unramified: split vs inert by the unit-part residue, uniformizer = the
    // place's monic generator (1/t at infinity)
    Poly u = unit_residue_at(b, P);
    ResidueField rf(P);
    return rf.is_qth_power(u, q) ? SplittingType::Split : SplittingType::Inert;
}

bool artin_schreier_irreducible_over_k(const RatFunc& a) {
    if (a.is_zero()) fail(errc::zero_input, "Artin-Schreier parameter must be nonzero");
    int p = a.field()->p();
    RatFunc ap = a.pow(p - 1);
    bool has_root = false;
    for_each_ratfunc_of_height(a.field(), a.height() + 1, [&](const RatFunc& x) {
        if (x.is_zero()) return true;
        if (x.pow(p) - ap * x - RatFunc::one(a.field()) == RatFunc::zero(a.field())) {
            has_root = true;
            return false;
        }
        return true;
    });
    return !has_root;
}

SplittingType classify_artin_schreier(const RatFunc& a, const Place& P) {
    if (a.is_zero()) fail(errc::zero_input, "classify_artin_schreier(0)");
    if (!artin_schreier_irreducible_over_k(a))
        fail(errc::reducible_extension, "T^p - a^(p-1) T - 1 has a root in K");
    int p = a.field()->p();
    long long v = ord_at(a, P);
    if (v < 0) return SplittingType::Split; // poles of a split completely
    if (v > 0 && v % p != 0) return SplittingType::Ramified;
    Poly abar = residue_at(a, P);
    ResidueField rf(P);
    return rf.artin_schreier_has_root(abar) ? SplittingType::Split : SplittingType::Inert;
}

FElem find_as_generator(const FieldPtr& field) {
    int p = field->p();
    for (int i = 1; i < field->size(); ++i) {
        FElem a = field->elem(i);
        FElem ap = a.pow(p - 1);
        bool root = false;
        for (int x = 0; x < field->size() && !root; ++x) {
            FElem t = field->elem(x);
            if (t.pow(p) - ap * t - field->one() == field->zero()) root = true;
        }
        if (!root) return a;
    }
    fail(errc::internal, "counting argument violated: no Artin-Schreier generator");
}

} // namespace ffdef
