#ifndef FFDEF_GALOIS_HPP
#define FFDEF_GALOIS_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ffdef/errors.hpp"

namespace ffdef {

class Field;
using FieldPtr = std::shared_ptr<const Field>;

// An element of F_{p^s}, stored as its index: the residue polynomial
// c0 + c1 x + ... read as the base-p integer sum c_i p^i.
class FElem {
  public:
    FElem() = default;
    FElem(FieldPtr f, int idx) : f_(std::move(f)), idx_(idx) {}

    const FieldPtr& field() const { return f_; }
    int index() const { return idx_; }
    bool is_zero() const { return idx_ == 0; }
    bool is_one() const { return idx_ == 1; }
    std::vector<int> rep() const; // ascending coefficients over F_p, length s

    FElem operator+(const FElem& o) const;
    FElem operator-(const FElem& o) const;
    FElem operator-() const;
    FElem operator*(const FElem& o) const;
    FElem operator/(const FElem& o) const;
    FElem inv() const;
    FElem pow(long long e) const;
    FElem frobenius(int times = 1) const; // x -> x^(p^times)

    bool operator==(const FElem& o) const;
    bool operator!=(const FElem& o) const { return !(*this == o); }

    std::string str() const;

  private:
    FieldPtr f_;
    int idx_ = 0;
};

// F_{p^s} given by characteristic, degree and a monic irreducible modulus
// over F_p (absent when s = 1).  Immutable; operations are pure.
class Field : public std::enable_shared_from_this<Field> {
  public:
    // When modulus is absent and s > 1 the first irreducible in index order
    // (ascending coefficient vectors) is used, so auto-generated fields are
    // reproducible across runs.
    static FieldPtr make(int p, int s, std::optional<std::vector<int>> modulus = std::nullopt);

    int p() const { return p_; }
    int s() const { return s_; }
    int size() const { return q_; }
    const std::vector<int>& modulus() const { return modulus_; } // size s+1, monic; {0,1}-free for s==1 (empty)

    FElem zero() const { return FElem(shared_from_this(), 0); }
    FElem one() const { return FElem(shared_from_this(), 1 % q_); }
    FElem elem(int idx) const;
    FElem from_int(long long k) const; // image of the integer k (prime subfield)
    FElem from_rep(const std::vector<int>& coeffs) const;

    bool same_field(const Field& o) const;

    int add_idx(int a, int b) const;
    int neg_idx(int a) const;
    int mul_idx(int a, int b) const;
    int inv_idx(int a) const;

    // true iff x^q = a has a solution; every nonzero element qualifies when
    // q does not divide p^s - 1.
    bool is_qth_power(const FElem& a, int q) const;
    FElem primitive_root_of_unity(int q) const; // xi with xi^q = 1, xi != 1

    std::string str() const; // GF(p^s; modulus=[...])

  private:
    Field(int p, int s, std::vector<int> modulus);
    void build_tables();

    int p_, s_, q_;
    std::vector<int> modulus_;
    std::vector<int32_t> mul_;   // q*q when tables enabled
    std::vector<int32_t> inv_;   // q
    bool tables_ = false;

    friend class FElem;
};

// Subfield embedding F_{p^a} -> F_{p^b} for a | b, fixed by mapping the
// small field's generator to the lexicographically least root of the small
// modulus in the big field.
class Embedding {
  public:
    Embedding(FieldPtr from, FieldPtr to);
    const FieldPtr& from() const { return from_; }
    const FieldPtr& to() const { return to_; }
    FElem operator()(const FElem& x) const;

  private:
    FieldPtr from_, to_;
    std::vector<int32_t> map_; // index -> index
};

// Modulus utilities over F_p (coefficients as ints mod p).
bool poly_irreducible_over_fp(int p, const std::vector<int>& poly);

} // namespace ffdef

#endif
