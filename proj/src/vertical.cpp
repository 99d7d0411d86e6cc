#include "ffdef/vertical.hpp"

#include <set>

namespace ffdef {

namespace {

// determinant of a q x q matrix over M by Gaussian elimination
MField::Elem mdet(const MField& M, std::vector<std::vector<MField::Elem>> A) {
    int n = int(A.size());
    MField::Elem det = M.one();
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = col; r < n; ++r)
            if (!M.is_zero(A[r][col])) {
                piv = r;
                break;
            }
        if (piv < 0) return M.zero();
        if (piv != col) {
            std::swap(A[piv], A[col]);
            det = M.neg(det);
        }
        det = M.mul(det, A[col][col]);
        MField::Elem inv = M.inv(A[col][col]);
        for (int r = col + 1; r < n; ++r) {
            if (M.is_zero(A[r][col])) continue;
            MField::Elem factor = M.mul(A[r][col], inv);
            for (int c = col; c < n; ++c) A[r][c] = M.sub(A[r][c], M.mul(factor, A[col][c]));
        }
    }
    return det;
}

} // namespace

CramerResult cramer_coords(const MField::Elem& w, const ExtensionData& ext) {
    const MField& M = ext.M;
    int q = M.q();
    if (ext.disc.is_zero()) fail(errc::discriminant_vanishes, "basis discriminant vanishes");
    // system matrix S[j][i] = sigma_j(omega_i), right side sigma_j(w)
    std::vector<std::vector<MField::Elem>> S(q, std::vector<MField::Elem>(q, M.zero()));
    std::vector<MField::Elem> rhs(q, M.zero());
    for (int j = 0; j < q; ++j) {
        for (int i = 0; i < q; ++i) S[j][i] = M.conj(M.root(i), j);
        rhs[j] = M.conj(w, j);
    }
    MField::Elem D = mdet(M, S);
    if (M.is_zero(D)) fail(errc::discriminant_vanishes, "Cramer determinant vanishes");
    CramerResult out;
    for (int i = 0; i < q; ++i) {
        auto Si = S;
        for (int j = 0; j < q; ++j) Si[j][i] = rhs[j];
        MField::Elem Ni = mdet(M, Si);
        MField::Elem ai = M.mul(Ni, M.inv(D));
        if (!M.in_k(ai)) fail(errc::internal, "Cramer coordinate fell outside K");
        out.coords.push_back(ai[0]);
    }
    // the solution must reproduce w
    MField::Elem acc = M.zero();
    for (int i = 0; i < q; ++i) acc = M.add(acc, M.mul_k(M.root(i), out.coords[i]));
    if (!M.eq(acc, w)) fail(errc::internal, "Cramer solution does not reproduce the element");

    // integrality report at qualifying places: collect candidate places from
    // the coordinate supports and the divisor of disc
    std::set<Place> places;
    for (auto& c : out.coords) {
        if (c.is_zero()) continue;
        Divisor Dv = divisor_of(c);
        for (auto& [P, m] : Dv.support()) places.insert(P);
    }
    {
        Divisor Dv = divisor_of(ext.disc);
        for (auto& [P, m] : Dv.support()) places.insert(P);
    }
    for (auto& P : places) {
        if (P.is_infinite()) continue;
        if (ord_at(ext.disc, P) != 0) continue; // not qualifying
        bool basis_ok = true;
        for (int i = 1; i < q; ++i)
            for (long long o : M.ords_above(M.root(i), P))
                if (o < 0) basis_ok = false;
        bool w_ok = true;
        if (!M.is_zero(w))
            for (long long o : M.ords_above(w, P))
                if (o < 0) w_ok = false;
        if (!basis_ok || !w_ok) continue;
        bool coords_ok = true;
        for (auto& c : out.coords)
            if (ord_at(c, P) < 0) coords_ok = false;
        out.integrality.emplace_back(P, coords_ok);
        if (!coords_ok) fail(errc::internal, "integral element with non-integral Cramer coordinate");
    }
    return out;
}

VerticalReport weak_vertical(const MField::Elem& w, const ExtensionData& ext,
                             const std::vector<std::pair<Place, FElem>>& V) {
    const MField& M = ext.M;
    int q = M.q();
    VerticalReport rep;
    rep.coords.assign(w.begin(), w.end());
    // hypothesis checks place by place
    for (auto& [A, b] : V) {
        if (A.is_infinite()) {
            rep.outcome = VerticalOutcome::Inapplicable;
            rep.reason = "infinite place in V";
            return rep;
        }
        if (M.place_type(A) == SplittingType::Ramified) {
            rep.outcome = VerticalOutcome::Inapplicable;
            rep.reason = "ramified place in V";
            return rep;
        }
        if (ord_at(ext.disc, A) != 0) {
            rep.outcome = VerticalOutcome::Inapplicable;
            rep.reason = "discriminant vanishes at a place of V";
            return rep;
        }
        for (auto& c : w)
            if (!c.is_zero() && ord_at(c, A) < 0) {
                rep.outcome = VerticalOutcome::Inapplicable;
                rep.reason = "coordinate has a pole at a place of V";
                return rep;
            }
        // congruence w = b mod A at every factor: all coordinate residues of
        // w - b vanish (Vandermonde in the residue roots)
        ResidueField rf(A);
        Poly r0 = residue_at(w[0] - RatFunc::constant(b), A);
        if (!r0.is_zero()) {
            rep.outcome = VerticalOutcome::Inapplicable;
            rep.reason = "congruence fails at a place of V";
            return rep;
        }
        for (int i = 1; i < q; ++i) {
            if (w[i].is_zero()) continue;
            if (!residue_at(w[i], A).is_zero()) {
                rep.outcome = VerticalOutcome::Inapplicable;
                rep.reason = "congruence fails at a place of V";
                return rep;
            }
        }
    }
    long long maxh = 0;
    for (int i = 1; i < q; ++i)
        if (!w[i].is_zero() && !w[i].is_constant()) maxh = std::max(maxh, static_cast<long long>(w[i].height()));
    if (!(static_cast<long long>(V.size()) > maxh)) {
        rep.outcome = VerticalOutcome::Inapplicable;
        rep.reason = "not enough places for the coordinate heights";
        return rep;
    }
    for (int i = 1; i < q; ++i) {
        if (!w[i].is_zero()) {
            // constants with zero residues at some place are zero; a
            // nonconstant survivor would contradict the proposition
            fail(errc::internal, "weak vertical hypotheses hold but a higher coordinate is nonzero");
        }
    }
    rep.outcome = VerticalOutcome::InK;
    rep.reason = "all higher coordinates vanish";
    return rep;
}

ChebotarevCount chebotarev_count(const ExtensionData& ext, int s) {
    const FieldPtr& F = ext.M.constants();
    if (s % F->s() != 0) fail(errc::degenerate_input, "s must be a multiple of the constant degree");
    ChebotarevCount out;
    out.extended_constants = s == F->s() ? F : Field::make(F->p(), s);
    RatFunc d = ext.M.d();
    if (s != F->s()) {
        Embedding e(F, out.extended_constants);
        d = embed_coeffs(d, e);
    }
    // constant-field collapse: d = u g^q makes the extension trivial or a
    // constant-field extension
    {
        bool all_divisible = true;
        Divisor Dv = divisor_of(d);
        for (auto& [P, m] : Dv.support())
            if (m % ext.M.q() != 0) all_divisible = false;
        if (all_divisible) fail(errc::constant_field_collapse, "generator is a constant times a q-th power");
    }
    out.p_to_s = 1;
    for (int i = 0; i < s; ++i) out.p_to_s *= F->p();
    for (int a = 0; a < out.extended_constants->size(); ++a) {
        Poly gen = Poly::from_coeffs(out.extended_constants,
                                     {-out.extended_constants->elem(a), out.extended_constants->one()});
        if (classify_kummer(d, ext.M.q(), Place::finite(gen)) == SplittingType::Inert) ++out.count;
    }
    out.pass = out.count * out.count > out.p_to_s;
    return out;
}

PipelineReport use_order_pipeline(const MField::Elem& f, int s, const ExtensionData& ext) {
    const MField& M = ext.M;
    const FieldPtr& F = M.constants();
    int q = M.q();
    PipelineReport rep;

    // constants short-circuit
    bool is_const = M.in_k(f) && (f[0].is_zero() || f[0].is_constant());
    if (is_const) {
        rep.in_k = true;
        return rep;
    }

    // height hypothesis: p^(s/2) > h_M(f) + C_M + h_M(det)^2 max h_M(omega) + e_M + h_M(t)
    long long hf = M.height_m(f);
    long long maxbh = 0;
    for (auto h : ext.basis_heights) maxbh = std::max(maxbh, h);
    long long hdet = M.height_m_of_k(ext.disc) / 2; // h(det) = h(det^2)/2
    long long ht = M.height_m_of_k(RatFunc(Poly::x(F)));
    long long bound = hf + ext.c_bound + hdet * hdet * maxbh + ext.e_m + ht;
    rep.height_bound = bound;
    rep.height_of_f = hf;
    long long ps = 1;
    for (int i = 0; i < s; ++i) ps *= F->p();
    // integer-safe p^(s/2) > bound  <=>  p^s > bound^2
    if (!(ps > bound * bound)) fail(errc::hypothesis_failed, "height inequality fails");

    // order condition: (f^(p^s) - f)/(t^(p^s) - t) integral away from the
    // exceptional places (divisor of t, ramified places)
    MField::Elem fp = M.frobenius(f, s);
    MField::Elem num = M.sub(fp, f);
    RatFunc tK(Poly::x(F));
    RatFunc den = tK.frobenius_pow(s) - tK;
    MField::Elem ratio = M.mul_k(num, den.inv());
    std::set<Place> candidates;
    for (auto& c : ratio) {
        if (c.is_zero()) continue;
        Divisor Dv = divisor_of(c);
        for (auto& [P, m] : Dv.support())
            if (m < 0) candidates.insert(P);
    }
    for (auto& P : candidates) {
        if (P.is_infinite() || P.gen() == Poly::x(F)) continue; // divisor of t
        bool exceptional = false;
        for (auto& R : ext.ramified)
            if (R == P) exceptional = true;
        if (exceptional) continue;
        if (M.is_zero(ratio)) continue;
        for (long long o : M.ords_above(ratio, P))
            if (o < 0) fail(errc::hypothesis_failed, "order condition fails away from the exceptional set");
    }

    // Chebotarev place set over the extended constants
    ChebotarevCount CC = chebotarev_count(ext, s);
    FieldPtr FE = CC.extended_constants;
    Embedding emb(F, FE);
    RatFunc dE = embed_coeffs(M.d(), emb);
    ExtensionData extE = make_extension(dE, q);
    MField::Elem fE;
    for (auto& c : f) fE.push_back(embed_coeffs(c, emb));

    std::vector<std::pair<Place, FElem>> V;
    for (int a = 0; a < FE->size(); ++a) {
        Poly gen = Poly::from_coeffs(FE, {-FE->elem(a), FE->one()});
        Place A = Place::finite(gen);
        if (classify_kummer(dE, q, A) != SplittingType::Inert) continue;
        if (ord_at(extE.disc, A) != 0) continue;
        bool integral = true;
        for (auto& c : fE)
            if (!c.is_zero() && ord_at(c, A) < 0) integral = false;
        if (!integral) continue;
        // congruence target from the residue of the K-coordinate; the higher
        // coordinates must already vanish there for a target to exist
        bool higher_zero = true;
        for (int i = 1; i < q; ++i)
            if (!fE[i].is_zero() && !residue_at(fE[i], A).is_zero()) higher_zero = false;
        if (!higher_zero) continue;
        Poly r = residue_at(fE[0], A);
        if (r.degree() > 0) fail(errc::internal, "degree-one place with nonconstant residue");
        V.emplace_back(A, r.is_zero() ? FE->zero() : r.coeff(0));
    }
    rep.places_used = static_cast<long long>(V.size());

    VerticalReport W = weak_vertical(fE, extE, V);
    if (W.outcome == VerticalOutcome::Inapplicable) fail(errc::hypothesis_failed, W.reason);
    rep.in_k = W.outcome == VerticalOutcome::InK;
    return rep;
}

} // namespace ffdef
