#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "redvar/common.hpp"

namespace redvar {

/// Element of a Field, encoded as the packed base-p value of its coefficient
/// vector with respect to the polynomial basis 1, x, ..., x^{deg-1}.
/// 0 is the zero element and 1 is the multiplicative identity in every field.
using fel = u32;

/// F_{p^deg}, realized as F_p[x]/(modulus) with the lexicographically smallest
/// monic irreducible modulus of the given degree.  Immutable after
/// construction; all operations are pure, so a Field can be shared freely
/// across worker threads.
///
/// Multiplication, inversion and powers go through log/exp tables for the
/// fixed generator (the smallest element index of full multiplicative order).
/// Addition is digit-wise base p, with a full table for small fields.
class Field {
public:
    Field(i64 p, int deg);

    i64 p() const { return p_; }
    int deg() const { return deg_; }
    i64 size() const { return q_; }
    /// Modulus coefficients c_0..c_deg (monic, c_deg = 1).
    const std::vector<i64>& modulus() const { return mod_; }
    fel gen() const { return gen_; }

    fel zero() const { return 0; }
    fel one() const { return 1; }

    fel add(fel a, fel b) const {
        if (p_ == 2) return a ^ b;
        if (!add_table_.empty()) return add_table_[size_t(a) * q_ + b];
        return add_slow(a, b);
    }
    fel neg(fel a) const {
        if (p_ == 2) return a;
        return a ? mul(a, minus_one_) : 0;
    }
    fel sub(fel a, fel b) const { return add(a, neg(b)); }
    fel mul(fel a, fel b) const {
        if (!a || !b) return 0;
        u64 l = u64(log_[a]) + log_[b];
        if (l >= ord_) l -= ord_;
        return exp_[l];
    }
    fel inv(fel a) const;
    fel div(fel a, fel b) const { return mul(a, inv(b)); }

    /// a^e with e any integer (negative allowed for nonzero a).
    fel pow(fel a, i64 e) const;
    /// a^{p^j}, j any integer; the inverse Frobenius is exact.
    fel pow_p(fel a, i64 j) const;
    fel frob(fel a) const { return pow_p(a, 1); }

    /// Image of an integer under Z -> F_p -> F_{p^deg}.
    fel from_int(i64 v) const {
        v %= p_;
        if (v < 0) v += p_;
        return fel(v);
    }
    /// Integer lift 0..p-1 of a prime-subfield element (throws otherwise).
    i64 lift(fel a) const;

    bool in_prime_field(fel a) const { return a < u32(p_); }

    std::vector<int> digits(fel a) const;
    fel from_digits(const std::vector<int>& d) const;

    std::string to_string(fel a) const { return std::to_string(a); }
    /// "GF(p^deg;modulus digits)" — used in canonical system texts.
    std::string describe() const;

private:
    fel add_slow(fel a, fel b) const;

    i64 p_;
    int deg_;
    i64 q_;        // p^deg
    u64 ord_;      // q - 1
    std::vector<i64> mod_;
    std::vector<i64> ppow_;  // p^i, i = 0..deg
    fel gen_ = 0;
    fel minus_one_ = 1;
    std::vector<fel> exp_;   // exp_[i] = gen^i, i in [0, ord)
    std::vector<u32> log_;   // log_[a] for a != 0
    std::vector<fel> add_table_;  // only for small fields
};

/// Global field registry: one immutable Field per (p, deg), built lazily.
/// Field sizes are capped (tables are precomputed); requests beyond the cap
/// throw BudgetExceeded.
const Field& field(i64 p, int deg);
constexpr i64 kFieldSizeCap = i64(1) << 22;

/// Subfield embedding F_{p^a} -> F_{p^b} for a | b, determined by sending the
/// residue class of x to the smallest root of the degree-a modulus in the big
/// field.  Computed once per ordered pair and cached.
class Embedding {
public:
    Embedding(const Field& sub, const Field& big);
    const Field& sub() const { return *sub_; }
    const Field& big() const { return *big_; }
    fel up(fel a) const { return up_[a]; }
    /// Partial inverse; nullopt if the element is not in the subfield image.
    std::optional<fel> down(fel b) const;

private:
    const Field* sub_;
    const Field* big_;
    std::vector<fel> up_;
    std::unordered_map<fel, fel> down_;
};

const Embedding& embedding(const Field& sub, const Field& big);

/// Tr_{big/sub}(x) = sum of x^{|sub|^i}; the result lies in sub.
fel trace(const Field& big, const Field& sub, fel x);
fel norm(const Field& big, const Field& sub, fel x);

/// Quadratic residue symbol of F_q, q odd: x^{(q-1)/2} read in {+1,-1}.
int quad_res_symbol(const Field& F, fel x);

/// Jacobi symbol (a | m) for odd positive m with gcd(a, m) = 1.
int jacobi_symbol(i64 a, i64 m);

bool is_prime(i64 p);

/// The tower F_p < F_q < F_{q^e} with q = p^f.  Compatibility between levels
/// is via the registry embeddings; all levels share element encoding rules.
struct FieldTower {
    i64 p;
    int f, e;
    const Field* prime;
    const Field* base;  // F_q
    const Field* top;   // F_{q^e}

    /// Validates p prime and p^{f*e} <= 2^31.
    static FieldTower make(i64 p, int f, int e);

    i64 q() const { return base->size(); }

    /// Tr from the top level F_{q^e} to F_{q^d}; requires d | e.
    /// The result is an element of field(p, f*d).
    fel trace_to(fel x, int d) const;
};

}  // namespace redvar
