#include "ffdef/approx.hpp"

#include <algorithm>

namespace ffdef {

namespace {

// CRT over pairwise coprime monic moduli
Poly poly_crt(const FieldPtr& f, const std::vector<std::pair<Place, Poly>>& constraints) {
    Poly acc = Poly::zero(f);
    Poly mod_all = Poly::one(f);
    for (auto& [P, target] : constraints) {
        const Poly& m = P.gen();
        // solve acc' = acc mod mod_all, acc' = target mod m
        Poly u(f), v(f);
        Poly g = mod_all.xgcd(m, u, v);
        if (g.degree() != 0) fail(errc::inconsistent_constraints, "constraint places not coprime");
        Poly diff = (target % m) - (acc % m);
        Poly lift = (diff * u) % m; // acc + mod_all * lift = target (mod m)
        acc = acc + mod_all * lift;
        mod_all = mod_all * m;
        acc = acc % mod_all;
    }
    return acc;
}

Poly first_coprime_irreducible(const FieldPtr& f, const std::vector<std::pair<Place, Poly>>& constraints) {
    Poly found(f);
    for_each_monic_irreducible(f, 8, [&](const Poly& g) {
        for (auto& [P, target] : constraints)
            if (P.gen() == g) return true;
        found = g;
        return false;
    });
    if (found.is_zero()) fail(errc::internal, "no auxiliary place available");
    return found;
}

} // namespace

RatFunc crt_element(const FieldPtr& f, const std::vector<std::pair<Place, Poly>>& constraints,
                    long long infinity_ord) {
    for (auto& [P, target] : constraints)
        if (P.is_infinite()) fail(errc::inconsistent_constraints, "constraint places must be finite");
    for (size_t i = 0; i < constraints.size(); ++i)
        for (size_t j = i + 1; j < constraints.size(); ++j)
            if (constraints[i].first == constraints[j].first)
                fail(errc::inconsistent_constraints, "duplicate constraint place");

    long long deg_prod = 0;
    Poly prod = Poly::one(f);
    for (auto& [P, target] : constraints) {
        prod = prod * P.gen();
        deg_prod += P.degree();
    }

    RatFunc x;
    if (infinity_ord <= -deg_prod) {
        // polynomial branch: CRT solution plus a monic monomial multiple of
        // the modulus product fixing the degree exactly
        Poly n0 = poly_crt(f, constraints);
        x = RatFunc(n0 + prod.shift_mul_x(int(-infinity_ord - deg_prod)));
    } else {
        // fractional branch: x = N / delta^m
        Poly delta = constraints.empty() ? Poly::x(f) : first_coprime_irreducible(f, constraints);
        long long m = 1;
        while (m * delta.degree() - infinity_ord < deg_prod || m * delta.degree() - infinity_ord < 0) ++m;
        long long num_deg = m * delta.degree() - infinity_ord;
        Poly dm = delta.pow(m);
        std::vector<std::pair<Place, Poly>> scaled;
        for (auto& [P, target] : constraints) {
            ResidueField rf(P);
            scaled.emplace_back(P, rf.mul(target, dm % P.gen()));
        }
        Poly n0 = poly_crt(f, scaled);
        Poly N = n0 + prod.shift_mul_x(int(num_deg - deg_prod));
        x = RatFunc(N, dm);
    }

    // self-check: every congruence plus the exact infinite order
    for (auto& [P, target] : constraints) {
        ResidueField rf(P);
        if (!rf.sub(residue_at(x, P), target).is_zero())
            fail(errc::inconsistent_constraints, "constructed element misses a congruence");
    }
    if (ord_at(x, Place::infinity(f)) != infinity_ord)
        fail(errc::inconsistent_constraints, "constructed element has wrong order at infinity");
    return x;
}

RatFunc nonresidue_with_pole(const Place& P, int q, int n) {
    if (P.is_infinite()) fail(errc::infinite_place, "nonresidue_with_pole needs a finite place");
    if (n < P.degree() + 1) fail(errc::degenerate_input, "n must be at least deg P + 1");
    ResidueField rf(P);
    if ((rf.size() - 1) % q != 0) fail(errc::no_nonresidue, "q does not divide |residue field| - 1");
    Poly target = rf.first_nonresidue(q);
    return crt_element(P.field(), {{P, target}}, -n);
}

RatFunc artin_schreier_nonsplit_with_pole(const Place& P, int n) {
    if (P.is_infinite()) fail(errc::infinite_place, "needs a finite place");
    if (n < P.degree() + 1) fail(errc::degenerate_input, "n must be at least deg P + 1");
    ResidueField rf(P);
    Poly target = rf.first_artin_schreier_nonsplit();
    return crt_element(P.field(), {{P, target}}, -n);
}

bool is_in_phi(const RatFunc& c, const std::vector<Place>& S) {
    RatFunc cm1 = c - RatFunc::one(c.field());
    for (auto& P : S)
        if (ord_at(cm1, P) <= 0) return false;
    return true;
}

RatFunc nonresidue_in_phi(const Place& P, int q, const std::vector<Place>& S) {
    if (P.is_infinite()) fail(errc::infinite_place, "nonresidue place must be finite");
    for (auto& Q : S)
        if (Q == P) fail(errc::inconsistent_constraints, "nonresidue place lies in S");
    ResidueField rf(P);
    if ((rf.size() - 1) % q != 0) fail(errc::no_nonresidue, "q does not divide |residue field| - 1");
    Poly nr = rf.first_nonresidue(q);
    // c = 1 + u with u = nr - 1 mod P, u = 0 mod each finite S-place, and a
    // zero at infinity when S contains it
    std::vector<std::pair<Place, Poly>> cons;
    cons.emplace_back(P, rf.sub(nr, rf.from_constant(P.field()->one())));
    bool inf_in_S = false;
    long long deg_prod = P.degree();
    for (auto& Q : S) {
        if (Q.is_infinite()) {
            inf_in_S = true;
            continue;
        }
        cons.emplace_back(Q, Poly::zero(P.field()));
        deg_prod += Q.degree();
    }
    long long iord = inf_in_S ? 1 : -deg_prod;
    RatFunc u = crt_element(P.field(), cons, iord);
    RatFunc c = RatFunc::one(P.field()) + u;
    if (!is_in_phi(c, S) || rf.is_qth_power(residue_at(c, P), q))
        fail(errc::internal, "nonresidue_in_phi construction failed its contract");
    return c;
}

} // namespace ffdef
