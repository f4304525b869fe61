#pragma once

#include <vector>

#include "redvar/common.hpp"
#include "redvar/gf.hpp"

namespace redvar {

/// Exact element of Z[zeta_M] for M prime (cyclotomic ring of the p-th roots
/// of unity; M = 2 gives plain Z) or M = 4 (Gaussian integers, needed for the
/// Heisenberg representations in characteristic 2).  Coefficients are int64
/// on the power basis zeta^0..zeta^{phi(M)-1}.
class CycInt {
public:
    CycInt() : m_(2), c_{0} {}
    explicit CycInt(i64 m) : m_(m), c_(phi(m), 0) { check_order(m); }

    static CycInt integer(i64 m, i64 v) {
        CycInt r(m);
        r.c_[0] = v;
        return r;
    }
    static CycInt zeta_pow(i64 m, i64 k);

    i64 order() const { return m_; }
    const std::vector<i64>& coeffs() const { return c_; }

    CycInt operator+(const CycInt& o) const;
    CycInt operator-(const CycInt& o) const;
    CycInt operator-() const;
    CycInt operator*(const CycInt& o) const;
    CycInt& operator+=(const CycInt& o) { return *this = *this + o; }
    CycInt& operator-=(const CycInt& o) { return *this = *this - o; }
    CycInt& operator*=(const CycInt& o) { return *this = *this * o; }
    bool operator==(const CycInt& o) const;
    bool operator!=(const CycInt& o) const { return !(*this == o); }

    CycInt scaled(i64 k) const;
    CycInt pow(u64 e) const;
    /// Complex conjugation zeta -> zeta^{-1}.
    CycInt conj() const;

    bool is_zero() const;
    bool is_integer() const;
    /// Integer value; throws if not rational.
    i64 as_integer() const;

    /// Integer-coefficient polynomial in "z", e.g. "1+2z" or "-3+z^2".
    std::string to_string() const;

private:
    static i64 phi(i64 m) { return m == 4 ? 2 : m - 1; }
    static void check_order(i64 m);
    static CycInt reduce(i64 m, const std::vector<i64>& slots);  // slots over zeta^0..zeta^{m-1}

    i64 m_;
    std::vector<i64> c_;
};

/// Additive character psi_a of F = F_{p^m}: psi_a(x) = zeta_p^{Tr_{F/F_p}(a x)}.
/// Nontrivial iff a != 0.  Values are taken in Z[zeta_M]; M defaults to p and
/// may be any multiple order supported by CycInt (M = 4 for p = 2).
struct AdditiveChar {
    const Field* F;
    fel a;

    AdditiveChar(const Field& field_, fel scale) : F(&field_), a(scale) {}

    bool trivial() const { return a == 0; }
    /// Exponent of zeta_p, i.e. the integer lift of Tr_{F/F_p}(a x).
    i64 exponent(fel x) const;
    CycInt eval(fel x) const { return CycInt::zeta_pow(F->p(), exponent(x)); }
    CycInt eval_in(i64 m, fel x) const {
        return CycInt::zeta_pow(m, (m / F->p()) * exponent(x));
    }
    /// The character psi_a o Tr_{big/F} of a bigger field, which is again an
    /// additive character with the embedded scale.
    AdditiveChar lifted_to(const Field& big) const {
        return AdditiveChar(big, embedding(*F, big).up(a));
    }
};

CycInt psi_eval(const AdditiveChar& chi, fel x);

/// g(psi) = sum_{x in F} psi(x^2), by direct summation.
CycInt gauss_sum(const AdditiveChar& chi);

}  // namespace redvar
