#include "ffdef/residue_tower.hpp"

namespace ffdef {

TowerPtr TowerField::leaf(const Place& P) {
    auto t = std::shared_ptr<TowerField>(new TowerField());
    t->leafrf_.emplace(P);
    t->deg_ = t->leafrf_->degree() * P.field()->s();
    t->absdeg_ = t->deg_;
    t->depth_ = 0;
    t->size_ = 1;
    for (int i = 0; i < t->absdeg_; ++i) t->size_ *= P.field()->p();
    return t;
}

TowerPtr TowerField::extend(std::vector<TElem> minpoly) const {
    if (minpoly.size() < 3) fail(errc::internal, "tower step needs degree >= 2");
    auto t = std::shared_ptr<TowerField>(new TowerField());
    t->base_ = shared_from_this();
    t->minpoly_ = std::move(minpoly);
    t->deg_ = int(t->minpoly_.size()) - 1;
    if (!eq(t->minpoly_.back(), one())) fail(errc::internal, "tower step minpoly must be monic");
    t->absdeg_ = absdeg_ * t->deg_;
    t->depth_ = depth_ + 1;
    t->size_ = 1;
    for (int i = 0; i < t->absdeg_; ++i) t->size_ *= p();
    return t;
}

const ResidueField& TowerField::leaf_field() const {
    const TowerField* t = this;
    while (t->base_) t = t->base_.get();
    return *t->leafrf_;
}

int TowerField::p() const { return leaf_field().constants()->p(); }

TElem TowerField::zero() const {
    TElem e;
    e.depth = depth_;
    if (!base_) {
        e.leaf = Poly::zero(leaf_field().constants());
    } else {
        e.kids.assign(deg_, base_->zero());
    }
    return e;
}

TElem TowerField::one() const { return from_int(1); }

TElem TowerField::from_int(long long k) const {
    if (!base_) {
        TElem e;
        e.depth = 0;
        e.leaf = Poly::constant(leaf_field().constants()->from_int(k));
        return e;
    }
    TElem e = zero();
    e.kids[0] = base_->from_int(k);
    return e;
}

TElem TowerField::embed(const TElem& lower) const {
    if (!base_) fail(errc::internal, "leaf has no lower level");
    TElem e = zero();
    e.kids[0] = lower;
    return e;
}

TElem TowerField::embed_leaf(const Poly& a) const {
    if (!base_) {
        TElem e;
        e.depth = 0;
        e.leaf = leaf_field().reduce(a);
        return e;
    }
    return embed(base_->embed_leaf(a));
}

TElem TowerField::generator() const {
    if (!base_) fail(errc::internal, "leaf has no adjoined generator");
    TElem e = zero();
    e.kids[1] = base_->one();
    return e;
}

bool TowerField::is_zero(const TElem& a) const {
    if (!base_) return leaf_field().is_zero(a.leaf);
    for (auto& k : a.kids)
        if (!base_->is_zero(k)) return false;
    return true;
}

bool TowerField::eq(const TElem& a, const TElem& b) const { return is_zero(sub(a, b)); }

TElem TowerField::add(const TElem& a, const TElem& b) const {
    if (!base_) {
        TElem e;
        e.depth = 0;
        e.leaf = leaf_field().add(a.leaf, b.leaf);
        return e;
    }
    TElem e = zero();
    for (int i = 0; i < deg_; ++i) e.kids[i] = base_->add(a.kids[i], b.kids[i]);
    return e;
}

TElem TowerField::neg(const TElem& a) const {
    if (!base_) {
        TElem e;
        e.depth = 0;
        e.leaf = leaf_field().sub(Poly::zero(leaf_field().constants()), a.leaf);
        return e;
    }
    TElem e = zero();
    for (int i = 0; i < deg_; ++i) e.kids[i] = base_->neg(a.kids[i]);
    return e;
}

TElem TowerField::sub(const TElem& a, const TElem& b) const { return add(a, neg(b)); }

TElem TowerField::mul(const TElem& a, const TElem& b) const {
    if (!base_) {
        TElem e;
        e.depth = 0;
        e.leaf = leaf_field().mul(a.leaf, b.leaf);
        return e;
    }
    // schoolbook product of coefficient vectors, then reduction by the monic
    // minpoly: x^deg = -(lower coefficients)
    std::vector<TElem> prod(2 * deg_ - 1, base_->zero());
    for (int i = 0; i < deg_; ++i) {
        if (base_->is_zero(a.kids[i])) continue;
        for (int j = 0; j < deg_; ++j) {
            if (base_->is_zero(b.kids[j])) continue;
            prod[i + j] = base_->add(prod[i + j], base_->mul(a.kids[i], b.kids[j]));
        }
    }
    for (int k = 2 * deg_ - 2; k >= deg_; --k) {
        if (base_->is_zero(prod[k])) continue;
        TElem c = prod[k];
        for (int i = 0; i < deg_; ++i)
            prod[k - deg_ + i] = base_->sub(prod[k - deg_ + i], base_->mul(c, minpoly_[i]));
        prod[k] = base_->zero();
    }
    TElem e = zero();
    for (int i = 0; i < deg_; ++i) e.kids[i] = prod[i];
    return e;
}

TElem TowerField::pow(const TElem& a, const bigint& e) const {
    if (e < 0) return pow(inv(a), -e);
    TElem r = one(), b = a;
    bigint k = e;
    while (k > 0) {
        if ((k & 1) != 0) r = mul(r, b);
        b = mul(b, b);
        k >>= 1;
    }
    return r;
}

TElem TowerField::inv(const TElem& a) const {
    if (is_zero(a)) fail(errc::zero_input, "tower inverse of zero");
    if (!base_) {
        TElem e;
        e.depth = 0;
        e.leaf = leaf_field().inv(a.leaf);
        return e;
    }
    return pow(a, size_ - 2);
}

bool TowerField::is_qth_power(const TElem& a, int q) const {
    if (is_zero(a)) fail(errc::zero_input, "is_qth_power(0) in tower field");
    bigint m = size_ - 1;
    if (m % q != 0) return true;
    return eq(pow(a, m / q), one());
}

bool TowerField::artin_schreier_has_root(const TElem& abar) const {
    if (is_zero(abar)) return true;
    int pp = p();
    TElem beta = pow(inv(abar), pp);
    TElem tr = zero(), x = beta;
    for (int i = 0; i < absdeg_; ++i) {
        tr = add(tr, x);
        x = pow(x, pp);
    }
    return is_zero(tr);
}

} // namespace ffdef
