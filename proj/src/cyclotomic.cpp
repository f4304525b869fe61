#include "redvar/cyclotomic.hpp"

namespace redvar {

void CycInt::check_order(i64 m) {
    if (m == 4) return;
    if (m >= 2 && is_prime(m)) return;
    throw std::invalid_argument("CycInt: root order must be prime or 4");
}

CycInt CycInt::reduce(i64 m, const std::vector<i64>& slots) {
    CycInt r(m);
    if (m == 4) {
        r.c_[0] = slots[0] - slots[2];
        r.c_[1] = slots[1] - slots[3];
    } else {
        // zeta^{m-1} = -(1 + zeta + ... + zeta^{m-2})
        i64 top = slots[m - 1];
        for (i64 i = 0; i < m - 1; ++i) r.c_[i] = slots[i] - top;
    }
    return r;
}

CycInt CycInt::zeta_pow(i64 m, i64 k) {
    check_order(m);
    k %= m;
    if (k < 0) k += m;
    std::vector<i64> slots(m, 0);
    slots[k] = 1;
    return reduce(m, slots);
}

CycInt CycInt::operator+(const CycInt& o) const {
    if (m_ != o.m_) throw std::invalid_argument("CycInt: mixed root orders");
    CycInt r(m_);
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i] + o.c_[i];
    return r;
}

CycInt CycInt::operator-(const CycInt& o) const {
    if (m_ != o.m_) throw std::invalid_argument("CycInt: mixed root orders");
    CycInt r(m_);
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i] - o.c_[i];
    return r;
}

CycInt CycInt::operator-() const {
    CycInt r(m_);
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = -c_[i];
    return r;
}

CycInt CycInt::operator*(const CycInt& o) const {
    if (m_ != o.m_) throw std::invalid_argument("CycInt: mixed root orders");
    std::vector<i64> slots(m_, 0);
    for (size_t i = 0; i < c_.size(); ++i) {
        if (!c_[i]) continue;
        for (size_t j = 0; j < o.c_.size(); ++j)
            slots[(i + j) % m_] += c_[i] * o.c_[j];
    }
    return reduce(m_, slots);
}

bool CycInt::operator==(const CycInt& o) const { return m_ == o.m_ && c_ == o.c_; }

CycInt CycInt::scaled(i64 k) const {
    CycInt r(m_);
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i] * k;
    return r;
}

CycInt CycInt::pow(u64 e) const {
    CycInt r = integer(m_, 1);
    CycInt b = *this;
    while (e) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

CycInt CycInt::conj() const {
    std::vector<i64> slots(m_, 0);
    for (size_t i = 0; i < c_.size(); ++i) slots[(m_ - i64(i)) % m_] += c_[i];
    return reduce(m_, slots);
}

bool CycInt::is_zero() const {
    for (i64 v : c_)
        if (v) return false;
    return true;
}

bool CycInt::is_integer() const {
    for (size_t i = 1; i < c_.size(); ++i)
        if (c_[i]) return false;
    return true;
}

i64 CycInt::as_integer() const {
    if (!is_integer()) throw std::domain_error("CycInt::as_integer: not rational: " + to_string());
    return c_[0];
}

std::string CycInt::to_string() const {
    std::string s;
    for (size_t i = 0; i < c_.size(); ++i) {
        i64 v = c_[i];
        if (!v) continue;
        if (!s.empty() && v > 0) s += "+";
        if (i == 0) {
            s += std::to_string(v);
        } else {
            if (v == -1) s += "-";
            else if (v != 1) s += std::to_string(v) + "*";
            s += "z";
            if (i > 1) s += "^" + std::to_string(i);
        }
    }
    return s.empty() ? "0" : s;
}

i64 AdditiveChar::exponent(fel x) const {
    if (x >= u32(F->size())) throw std::domain_error("AdditiveChar: element level mismatch");
    if (!a) return 0;
    fel t = trace(*F, field(F->p(), 1), F->mul(a, x));
    return field(F->p(), 1).lift(t);
}

CycInt psi_eval(const AdditiveChar& chi, fel x) { return chi.eval(x); }

CycInt gauss_sum(const AdditiveChar& chi) {
    const Field& F = *chi.F;
    std::vector<i64> hist(F.p(), 0);
    for (i64 x = 0; x < F.size(); ++x) hist[chi.exponent(F.mul(fel(x), fel(x)))]++;
    CycInt r(F.p());
    for (i64 k = 0; k < F.p(); ++k) r += CycInt::zeta_pow(F.p(), k).scaled(hist[k]);
    return r;
}

}  // namespace redvar
