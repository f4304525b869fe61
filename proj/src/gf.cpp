#include "redvar/gf.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>

namespace redvar {

namespace {

// Dense polynomial arithmetic over F_p, used only while bootstrapping a
// Field's tables (modulus search, generator search).
using Poly = std::vector<i64>;

void ptrim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly pmulmod(const Poly& a, const Poly& b, const Poly& f, i64 p) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    // reduce mod monic f
    int df = int(f.size()) - 1;
    for (int i = int(r.size()) - 1; i >= df; --i) {
        i64 c = r[i];
        if (!c) continue;
        r[i] = 0;
        for (int j = 0; j < df; ++j) r[i - df + j] = ((r[i - df + j] - c * f[j]) % p + p) % p;
    }
    ptrim(r);
    return r;
}

Poly ppowmod(Poly base, u64 e, const Poly& f, i64 p) {
    Poly r{1};
    while (e) {
        if (e & 1) r = pmulmod(r, base, f, p);
        base = pmulmod(base, base, f, p);
        e >>= 1;
    }
    return r;
}

Poly pgcd(Poly a, Poly b, i64 p) {
    ptrim(a);
    ptrim(b);
    while (!b.empty()) {
        // a mod b, b monic-ized on the fly
        i64 lead = b.back();
        i64 il = 1;
        // inverse of lead mod p
        for (i64 t = 1; t < p; ++t)
            if (lead * t % p == 1) { il = t; break; }
        Poly bm = b;
        for (auto& c : bm) c = c * il % p;
        Poly r = a;
        while (r.size() >= bm.size() && !r.empty()) {
            i64 c = r.back();
            if (c) {
                size_t sh = r.size() - bm.size();
                for (size_t j = 0; j < bm.size(); ++j)
                    r[sh + j] = ((r[sh + j] - c * bm[j]) % p + p) % p;
            }
            ptrim(r);
            if (r.size() < bm.size()) break;
        }
        a = b;
        b = r;
    }
    return a;
}

// x^{p^k} mod f via k successive p-th powers.
Poly frob_iter(const Poly& f, i64 p, int k) {
    Poly x{0, 1};
    Poly r = x;
    for (int i = 0; i < k; ++i) r = ppowmod(r, u64(p), f, p);
    return r;
}

bool poly_irreducible(const Poly& f, i64 p) {
    int d = int(f.size()) - 1;
    if (d == 1) return true;
    // x^{p^d} == x mod f
    Poly xpd = frob_iter(f, p, d);
    if (!(xpd.size() == 2 && xpd[0] == 0 && xpd[1] == 1)) return false;
    // gcd(x^{p^{d/l}} - x, f) = 1 for prime l | d
    int dd = d;
    for (int l = 2; l <= dd; ++l) {
        if (dd % l) continue;
        while (dd % l == 0) dd /= l;
        Poly g = frob_iter(f, p, d / l);
        // g - x
        if (g.size() < 2) g.resize(2, 0);
        g[1] = ((g[1] - 1) % p + p) % p;
        ptrim(g);
        Poly h = pgcd(f, g, p);
        if (!(h.size() == 1)) return false;
    }
    return true;
}

std::vector<i64> prime_factors(i64 n) {
    std::vector<i64> fs;
    for (i64 d = 2; d * d <= n; ++d)
        if (n % d == 0) {
            fs.push_back(d);
            while (n % d == 0) n /= d;
        }
    if (n > 1) fs.push_back(n);
    return fs;
}

}  // namespace

bool is_prime(i64 p) {
    if (p < 2) return false;
    for (i64 d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

Field::Field(i64 p, int deg) : p_(p), deg_(deg) {
    if (!is_prime(p)) throw std::invalid_argument("Field: p must be prime");
    if (deg < 1) throw std::invalid_argument("Field: degree must be >= 1");
    q_ = ipow_checked(p, deg, kFieldSizeCap);
    if (q_ > kFieldSizeCap) throw BudgetExceeded(u64(q_));
    ord_ = u64(q_ - 1);

    ppow_.resize(deg + 1);
    ppow_[0] = 1;
    for (int i = 1; i <= deg; ++i) ppow_[i] = ppow_[i - 1] * p;

    // Lexicographically smallest monic irreducible: smallest packed value of
    // the non-leading coefficients.  Deterministic and reproducible.
    mod_.assign(deg + 1, 0);
    mod_[deg] = 1;
    if (deg == 1) {
        mod_[0] = 0;  // modulus x: F_p itself
    } else {
        bool found = false;
        for (i64 packed = 0; packed < ppow_[deg]; ++packed) {
            Poly f(deg + 1, 0);
            f[deg] = 1;
            i64 v = packed;
            for (int i = 0; i < deg; ++i) { f[i] = v % p; v /= p; }
            if (poly_irreducible(f, p)) {
                for (int i = 0; i < deg; ++i) mod_[i] = f[i];
                found = true;
                break;
            }
        }
        if (!found) throw std::logic_error("Field: no irreducible modulus found");
    }

    // Generator: smallest element index of multiplicative order q-1.
    Poly f(mod_.begin(), mod_.end());
    auto facs = prime_factors(i64(ord_));
    auto elem_poly = [&](fel a) {
        Poly e;
        i64 v = a;
        while (v) { e.push_back(v % p); v /= p; }
        return e;
    };
    auto poly_elem = [&](const Poly& e) {
        i64 v = 0;
        for (int i = int(e.size()) - 1; i >= 0; --i) v = v * p + e[i];
        return fel(v);
    };
    for (fel g = 2; g < fel(q_); ++g) {
        Poly ge = elem_poly(g);
        bool ok = true;
        for (i64 l : facs) {
            Poly t = ppowmod(ge, u64(ord_ / u64(l)), f, p);
            if (t.size() == 1 && t[0] == 1) { ok = false; break; }
        }
        if (ok) { gen_ = g; break; }
    }
    if (!gen_) {
        if (q_ == 2) gen_ = 1;  // trivial group
        else throw std::logic_error("Field: no generator found");
    }

    // log/exp tables by repeated slow multiplication.
    exp_.assign(ord_ ? ord_ : 1, 1);
    log_.assign(q_, 0);
    Poly acc{1};
    Poly ge = elem_poly(gen_);
    for (u64 i = 0; i < ord_; ++i) {
        fel v = poly_elem(acc);
        exp_[i] = v;
        log_[v] = u32(i);
        acc = pmulmod(acc, ge, f, p);
    }

    if (p_ != 2) {
        minus_one_ = fel(p_ - 1);
    }

    if (p_ != 2 && q_ <= 2048) {
        add_table_.resize(size_t(q_) * q_);
        for (i64 a = 0; a < q_; ++a)
            for (i64 b = 0; b < q_; ++b) add_table_[size_t(a) * q_ + b] = add_slow(fel(a), fel(b));
    }
}

fel Field::add_slow(fel a, fel b) const {
    i64 r = 0;
    i64 av = a, bv = b;
    for (int i = 0; i < deg_ && (av || bv); ++i) {
        i64 d = (av % p_ + bv % p_) % p_;
        r += d * ppow_[i];
        av /= p_;
        bv /= p_;
    }
    return fel(r);
}

fel Field::inv(fel a) const {
    if (!a) throw std::domain_error("Field::inv(0)");
    u64 l = log_[a];
    return exp_[l ? ord_ - l : 0];
}

fel Field::pow(fel a, i64 e) const {
    if (!a) {
        if (e < 0) throw std::domain_error("Field::pow: 0^negative");
        return e == 0 ? 1 : 0;
    }
    if (ord_ == 0) return 1;
    i64 l = (i64(log_[a]) * (e % i64(ord_))) % i64(ord_);
    if (l < 0) l += i64(ord_);
    return exp_[l];
}

fel Field::pow_p(fel a, i64 j) const {
    if (!a) return 0;
    if (ord_ == 0) return 1;
    j %= deg_;
    if (j < 0) j += deg_;
    // p^j mod ord
    u64 e = 1;
    for (i64 i = 0; i < j; ++i) e = e * u64(p_) % ord_;
    u64 l = u64(log_[a]) * e % ord_;
    return exp_[l];
}

i64 Field::lift(fel a) const {
    if (!in_prime_field(a)) throw std::domain_error("Field::lift: not in prime subfield");
    return i64(a);
}

std::vector<int> Field::digits(fel a) const {
    std::vector<int> d(deg_, 0);
    i64 v = a;
    for (int i = 0; i < deg_ && v; ++i) { d[i] = int(v % p_); v /= p_; }
    return d;
}

fel Field::from_digits(const std::vector<int>& d) const {
    i64 v = 0;
    for (int i = int(d.size()) - 1; i >= 0; --i) v = v * p_ + (d[i] % p_ + p_) % p_;
    return fel(v);
}

std::string Field::describe() const {
    std::string s = "GF(" + std::to_string(p_) + "^" + std::to_string(deg_) + ";";
    for (int i = 0; i <= deg_; ++i) {
        if (i) s += ",";
        s += std::to_string(mod_[i]);
    }
    s += ")";
    return s;
}

namespace {
std::mutex g_reg_mutex;
std::map<std::pair<i64, int>, std::unique_ptr<Field>> g_fields;
std::map<std::pair<const Field*, const Field*>, std::unique_ptr<Embedding>> g_embeddings;
}  // namespace

const Field& field(i64 p, int deg) {
    std::lock_guard<std::mutex> lk(g_reg_mutex);
    auto key = std::make_pair(p, deg);
    auto it = g_fields.find(key);
    if (it == g_fields.end())
        it = g_fields.emplace(key, std::make_unique<Field>(p, deg)).first;
    return *it->second;
}

Embedding::Embedding(const Field& sub, const Field& big) : sub_(&sub), big_(&big) {
    if (sub.p() != big.p() || big.deg() % sub.deg() != 0)
        throw std::invalid_argument("Embedding: not a subfield pair");
    // Smallest root of the subfield modulus in the big field.
    fel root = 0;
    bool found = false;
    if (sub.deg() == 1) {
        // modulus is x; root 0: the embedding is the prime-field inclusion.
        root = 0;
        found = true;
    } else {
        for (i64 c = 0; c < big.size(); ++c) {
            fel acc = 0;
            // Horner on the monic modulus
            const auto& m = sub.modulus();
            for (int i = sub.deg(); i >= 0; --i) {
                acc = big.add(big.mul(acc, fel(c)), big.from_int(m[i]));
            }
            if (!acc) { root = fel(c); found = true; break; }
        }
    }
    if (!found) throw std::logic_error("Embedding: no root of subfield modulus");
    up_.resize(sub.size());
    for (i64 a = 0; a < sub.size(); ++a) {
        auto d = sub.digits(fel(a));
        fel acc = 0;
        for (int i = sub.deg() - 1; i >= 0; --i)
            acc = big.add(big.mul(acc, root), big.from_int(d[i]));
        up_[a] = acc;
        down_[acc] = fel(a);
    }
}

std::optional<fel> Embedding::down(fel b) const {
    auto it = down_.find(b);
    if (it == down_.end()) return std::nullopt;
    return it->second;
}

const Embedding& embedding(const Field& sub, const Field& big) {
    std::lock_guard<std::mutex> lk(g_reg_mutex);
    auto key = std::make_pair(&sub, &big);
    auto it = g_embeddings.find(key);
    if (it == g_embeddings.end())
        it = g_embeddings.emplace(key, std::make_unique<Embedding>(sub, big)).first;
    return *it->second;
}

fel trace(const Field& big, const Field& sub, fel x) {
    if (big.deg() % sub.deg() != 0)
        throw std::invalid_argument("trace: target degree does not divide source degree");
    int steps = big.deg() / sub.deg();
    fel acc = 0, t = x;
    for (int i = 0; i < steps; ++i) {
        acc = big.add(acc, t);
        t = big.pow_p(t, sub.deg());
    }
    auto r = embedding(sub, big).down(acc);
    if (!r) throw std::logic_error("trace: result not in subfield");
    return *r;
}

fel norm(const Field& big, const Field& sub, fel x) {
    if (big.deg() % sub.deg() != 0)
        throw std::invalid_argument("norm: target degree does not divide source degree");
    int steps = big.deg() / sub.deg();
    fel acc = 1, t = x;
    for (int i = 0; i < steps; ++i) {
        acc = big.mul(acc, t);
        t = big.pow_p(t, sub.deg());
    }
    auto r = embedding(sub, big).down(acc);
    if (!r) throw std::logic_error("norm: result not in subfield");
    return *r;
}

int quad_res_symbol(const Field& F, fel x) {
    if (F.p() == 2) throw std::domain_error("quad_res_symbol: q must be odd");
    if (!x) throw std::domain_error("quad_res_symbol: x must be nonzero");
    fel r = F.pow(x, (F.size() - 1) / 2);
    return r == F.one() ? 1 : -1;
}

int jacobi_symbol(i64 a, i64 m) {
    if (m <= 0 || m % 2 == 0) throw std::domain_error("jacobi_symbol: m must be odd positive");
    a %= m;
    if (a < 0) a += m;
    if (gcd_i64(a, m) != 1) throw std::domain_error("jacobi_symbol: gcd(a, m) != 1");
    int s = 1;
    while (a) {
        while (a % 2 == 0) {
            a /= 2;
            i64 r = m % 8;
            if (r == 3 || r == 5) s = -s;
        }
        std::swap(a, m);
        if (a % 4 == 3 && m % 4 == 3) s = -s;
        a %= m;
    }
    return m == 1 ? s : 0;
}

FieldTower FieldTower::make(i64 p, int f, int e) {
    if (!is_prime(p)) throw std::invalid_argument("make_tower: p must be prime");
    if (f < 1 || e < 1) throw std::invalid_argument("make_tower: degrees must be >= 1");
    if (ipow_checked(p, f * e, i64(1) << 31) > (i64(1) << 31))
        throw std::invalid_argument("make_tower: p^(f*e) exceeds enumeration bound 2^31");
    FieldTower t;
    t.p = p;
    t.f = f;
    t.e = e;
    t.prime = &field(p, 1);
    t.base = &field(p, f);
    t.top = &field(p, f * e);
    // Force embeddings now so the tower is ready for concurrent use.
    embedding(*t.prime, *t.top);
    embedding(*t.base, *t.top);
    return t;
}

fel FieldTower::trace_to(fel x, int d) const {
    if (d < 1 || e % d != 0) throw std::invalid_argument("trace_to: d must divide e");
    return trace(*top, field(p, f * d), x);
}

}  // namespace redvar
