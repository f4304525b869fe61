#include "redvar/poly.hpp"

#include <algorithm>

namespace redvar {

Poly Poly::constant(const Field& F, int nvars, fel c) {
    Poly p(F, nvars);
    if (c) p.t_[Expo(nvars, 0)] = c;
    return p;
}

Poly Poly::variable(const Field& F, int nvars, int i, u32 e, fel c) {
    Poly p(F, nvars);
    if (c) {
        Expo ex(nvars, 0);
        ex[i] = e;
        p.t_[ex] = c;
    }
    return p;
}

void Poly::add_term(const Expo& e, fel c) {
    if (!c) return;
    auto it = t_.find(e);
    if (it == t_.end()) {
        t_[e] = c;
    } else {
        it->second = F_->add(it->second, c);
        if (!it->second) t_.erase(it);
    }
}

Poly Poly::operator+(const Poly& o) const {
    Poly r = *this;
    for (const auto& [e, c] : o.t_) r.add_term(e, c);
    return r;
}

Poly Poly::operator-(const Poly& o) const {
    Poly r = *this;
    for (const auto& [e, c] : o.t_) r.add_term(e, F_->neg(c));
    return r;
}

Poly Poly::operator-() const {
    Poly r(*F_, nvars_);
    for (const auto& [e, c] : t_) r.t_[e] = F_->neg(c);
    return r;
}

Poly Poly::operator*(const Poly& o) const {
    Poly r(*F_, nvars_);
    for (const auto& [e1, c1] : t_)
        for (const auto& [e2, c2] : o.t_) {
            Expo e(nvars_);
            for (int i = 0; i < nvars_; ++i) e[i] = e1[i] + e2[i];
            r.add_term(e, F_->mul(c1, c2));
        }
    return r;
}

Poly Poly::scaled(fel c) const {
    Poly r(*F_, nvars_);
    if (!c) return r;
    for (const auto& [e, cc] : t_) r.t_[e] = F_->mul(cc, c);
    return r;
}

Poly Poly::pow_q(int j) const {
    if (j < 0) throw std::invalid_argument("Poly::pow_q: negative power");
    i64 qj = 1;
    for (int i = 0; i < j; ++i) qj *= F_->size();
    Poly r(*F_, nvars_);
    for (const auto& [e, c] : t_) {
        Expo ee(nvars_);
        for (int i = 0; i < nvars_; ++i) ee[i] = u32(e[i] * qj);
        r.t_[ee] = F_->pow_p(c, i64(F_->deg()) * j);
    }
    return r;
}

u32 Poly::total_degree() const {
    u32 d = 0;
    for (const auto& [e, c] : t_) {
        u32 s = 0;
        for (u32 v : e) s += v;
        d = std::max(d, s);
    }
    return d;
}

Poly Poly::homogeneous_part(u32 d) const {
    Poly r(*F_, nvars_);
    for (const auto& [e, c] : t_) {
        u32 s = 0;
        for (u32 v : e) s += v;
        if (s == d) r.t_[e] = c;
    }
    return r;
}

Poly Poly::derivative(int var) const {
    Poly r(*F_, nvars_);
    for (const auto& [e, c] : t_) {
        if (!e[var]) continue;
        fel nc = F_->mul(c, F_->from_int(e[var]));
        if (!nc) continue;
        Expo ee = e;
        ee[var]--;
        r.add_term(ee, nc);
    }
    return r;
}

Poly Poly::compose(const std::vector<Poly>& images) const {
    if (int(images.size()) != nvars_) throw std::invalid_argument("Poly::compose: arity mismatch");
    int out_vars = images.empty() ? nvars_ : images[0].nvars();
    Poly r(*F_, out_vars);
    for (const auto& [e, c] : t_) {
        Poly term = Poly::constant(*F_, out_vars, c);
        for (int i = 0; i < nvars_; ++i)
            for (u32 k = 0; k < e[i]; ++k) term = term * images[i];
        r += term;
    }
    return r;
}

fel Poly::eval(const std::vector<fel>& x) const {
    fel acc = 0;
    for (const auto& [e, c] : t_) {
        fel m = c;
        for (int i = 0; i < nvars_; ++i)
            if (e[i]) m = F_->mul(m, F_->pow(x[i], e[i]));
        acc = F_->add(acc, m);
    }
    return acc;
}

std::string Poly::text(const std::vector<std::string>& names) const {
    if (t_.empty()) return "0";
    std::string s;
    for (const auto& [e, c] : t_) {
        if (!s.empty()) s += " + ";
        std::string mono;
        for (int i = 0; i < nvars_; ++i) {
            if (!e[i]) continue;
            if (!mono.empty()) mono += "*";
            mono += names[i];
            if (e[i] > 1) mono += "^" + std::to_string(e[i]);
        }
        if (mono.empty()) s += F_->to_string(c);
        else if (c == F_->one()) s += mono;
        else s += F_->to_string(c) + "*" + mono;
    }
    return s;
}

CompiledPoly::CompiledPoly(const Poly& p, const Field& big) : big_(&big) {
    const Embedding& emb = embedding(p.field_ref(), big);
    for (const auto& [e, c] : p.terms()) {
        Term t;
        t.coef = emb.up(c);
        for (int i = 0; i < p.nvars(); ++i)
            if (e[i]) t.factors.emplace_back(u32(i), e[i]);
        terms_.push_back(std::move(t));
    }
}

fel CompiledPoly::eval(const fel* x) const {
    fel acc = 0;
    for (const Term& t : terms_) {
        fel m = t.coef;
        for (auto [v, e] : t.factors) {
            if (!x[v]) { m = 0; break; }
            m = big_->mul(m, big_->pow(x[v], e));
        }
        acc = big_->add(acc, m);
    }
    return acc;
}

CycInt exp_sum(const Poly& P, const AdditiveChar& chi, int e, u64 budget) {
    const Field& base = *chi.F;
    if (&P.field_ref() != &base) throw std::invalid_argument("exp_sum: field mismatch");
    int m = P.nvars();
    u64 qe = u64(ipow_checked(base.size(), e, i64(1) << 40));
    u64 total = 1;
    for (int i = 0; i < m; ++i) {
        if (total > budget) break;
        total *= qe;
    }
    if (total > budget) throw BudgetExceeded(total);

    const Field& big = field(base.p(), base.deg() * e);
    AdditiveChar chi_big = chi.lifted_to(big);
    CompiledPoly cp(P, big);

    std::vector<i64> hist(base.p(), 0);
    std::vector<fel> x(std::max(m, 1), 0);
    u64 n = u64(big.size());
    for (u64 idx = 0; idx < total; ++idx) {
        u64 v = idx;
        for (int i = 0; i < m; ++i) { x[i] = fel(v % n); v /= n; }
        hist[chi_big.exponent(cp.eval(x.data()))]++;
    }
    CycInt r(base.p());
    for (i64 k = 0; k < base.p(); ++k) r += CycInt::zeta_pow(base.p(), k).scaled(hist[k]);
    return r;
}

}  // namespace redvar
