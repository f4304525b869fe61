#include "redvar/cyclic.hpp"

#include <algorithm>

namespace redvar {

GroupAlgebra::GroupAlgebra(const Field& field_, i64 order) : k(&field_), n(order) {
    if (n < 1) throw std::invalid_argument("GroupAlgebra: order must be positive");
    if (n % k->p() == 0) throw std::invalid_argument("GroupAlgebra: p divides n");
}

Vec GroupAlgebra::convolve(const Vec& x, const Vec& y) const {
    Vec r(n, 0);
    for (i64 i = 0; i < n; ++i) {
        if (!x[i]) continue;
        for (i64 j = 0; j < n; ++j) r[(i + j) % n] = k->add(r[(i + j) % n], k->mul(x[i], y[j]));
    }
    return r;
}

Vec GroupAlgebra::shift(const Vec& x, i64 s) const {
    s %= n;
    if (s < 0) s += n;
    Vec r(n, 0);
    for (i64 i = 0; i < n; ++i) r[(i + s) % n] = x[i];
    return r;
}

Vec GroupAlgebra::involution(const Vec& x) const {
    Vec r(n, 0);
    for (i64 i = 0; i < n; ++i) r[(n - i) % n] = x[i];
    return r;
}

std::vector<std::vector<i64>> char_orbits(i64 n, const Field& k) {
    if (n % k.p() == 0) throw std::invalid_argument("char_orbits: p divides n");
    i64 q = k.size();
    std::vector<bool> seen(n, false);
    std::vector<std::vector<i64>> orbits;
    for (i64 j = 0; j < n; ++j) {
        if (seen[j]) continue;
        std::vector<i64> orb;
        i64 t = j;
        while (!seen[t]) {
            seen[t] = true;
            orb.push_back(t);
            t = t * (q % n) % n;
        }
        std::sort(orb.begin(), orb.end());
        orbits.push_back(orb);
    }
    return orbits;
}

SubmoduleBasis coset_submodule(const GroupAlgebra& A, i64 a) {
    if (a < 1 || A.n % a != 0) throw std::invalid_argument("coset_submodule: a must divide n");
    SubmoduleBasis S;
    S.label = "k[G/G^" + std::to_string(a) + "]";
    for (i64 r = 0; r < a; ++r) {
        Vec v(A.n, 0);
        for (i64 t = r; t < A.n; t += a) v[t] = 1;
        S.basis.push_back(v);
    }
    return S;
}

SubmoduleBasis idempotent_submodule(const GroupAlgebra& A, i64 a, i64 b) {
    i64 n = A.n;
    if (a < 1 || b % a != 0 || n % b != 0)
        throw std::invalid_argument("idempotent_submodule: need a | b | n");
    const Field& k = *A.k;
    SubmoduleBasis S;
    S.label = "I(" + std::to_string(a) + "," + std::to_string(b) + ")";
    if (n == 1 || a == b) return S;

    // splitting degree: smallest s with n | q^s - 1
    int s = 1;
    {
        i64 t = k.size() % n;
        while (t != 1 % n) {
            t = t * (k.size() % n) % n;
            ++s;
        }
    }
    const Field& big = field(k.p(), k.deg() * s);
    const Embedding& emb = embedding(k, big);
    // element of exact order n
    fel zeta = big.pow(big.gen(), (big.size() - 1) / n);
    fel ninv = k.inv(k.from_int(n));

    for (const auto& orb : char_orbits(n, k)) {
        i64 j0 = orb[0];
        bool in_b = (j0 * b) % n == 0;   // chi^b = 1
        bool in_a = (j0 * a) % n == 0;   // chi^a = 1
        if (!(in_b && !in_a)) continue;
        // E_O coefficients: c_m = n^{-1} sum_{j in O} zeta^{-jm}, Galois-stable
        Vec E(n, 0);
        for (i64 m = 0; m < n; ++m) {
            fel sum = 0;
            for (i64 j : orb) sum = big.add(sum, big.pow(zeta, ((n - j % n) % n) * m % n));
            auto down = emb.down(sum);
            if (!down) throw std::logic_error("idempotent_submodule: orbit sum not rational");
            E[m] = k.mul(ninv, *down);
        }
        // basis of V_O: shifts of E_O, reduced to an independent set
        Mat shifts;
        for (i64 t = 0; t < n; ++t) shifts.push_back(A.shift(E, t));
        Mat ind = independent_subset(k, shifts);
        if (i64(ind.size()) != i64(orb.size()))
            throw std::logic_error("idempotent_submodule: isotypic dimension mismatch");
        for (auto& v : ind) S.basis.push_back(v);
    }
    return S;
}

QuadForm q_gamma(const GroupAlgebra& A) {
    const Field& k = *A.k;
    if (k.p() == 2) throw std::domain_error("q_gamma: p must be odd");
    // eps(x xbar) = sum_i x_i^2
    QuadForm Q(k, int(A.n));
    for (i64 i = 0; i < A.n; ++i) Q.set_coeff(int(i), int(i), 1);
    return Q;
}

QuadForm q_nu_form(const Field& k, i64 n, i64 nu) {
    if (nu < 1 || nu >= 2 * n || nu % 2 == 0)
        throw std::invalid_argument("q_nu_form: need odd nu in [1, 2n)");
    i64 mu = (nu - 1) / 2;
    QuadForm Q(k, int(n));
    if (nu <= n) {
        for (i64 i = 1; i <= n; ++i)
            for (i64 j = i + 1; j <= n; ++j)
                if (mu < j - i && j - i < n - mu)
                    Q.set_coeff(int(i - 1), int(j - 1), k.neg(k.one()));
    } else {
        for (i64 i = 1; i <= n; ++i)
            for (i64 j = i + 1; j <= n; ++j)
                if (n - mu <= j - i && j - i <= mu) Q.set_coeff(int(i - 1), int(j - 1), 1);
    }
    return Q;
}

QuadForm q_nu_restricted_to_V(const Field& k, i64 n, i64 nu) {
    QuadForm Q = q_nu_form(k, n, nu);
    Mat basis;
    for (i64 i = 1; i < n; ++i) {
        Vec v(n, 0);
        v[0] = k.neg(k.one());
        v[i] = 1;
        basis.push_back(v);
    }
    return Q.restricted(basis);
}

RestrictedInvariantReport restricted_invariants(const Field& k, i64 n, i64 nu) {
    RestrictedInvariantReport R;
    R.n = n;
    R.nu = nu;
    R.d = gcd_i64(n, nu);
    i64 d = R.d;
    GroupAlgebra A(k, n);
    QuadForm Q = q_nu_form(k, n, nu);

    SubmoduleBasis outer = idempotent_submodule(A, d, n);  // I(d, n)
    SubmoduleBasis inner = idempotent_submodule(A, 1, d);  // I(1, d)
    R.dims_ok = outer.dim() == int(n - d) && inner.dim() == int(d - 1);

    // Q_nu vanishes identically on I(1, d)
    R.vanishes_on_inner = true;
    for (int i = 0; i < inner.dim(); ++i) {
        if (Q.eval(inner.basis[i])) R.vanishes_on_inner = false;
        for (int j = i + 1; j < inner.dim(); ++j)
            if (Q.polar(inner.basis[i], inner.basis[j])) R.vanishes_on_inner = false;
    }

    // orthogonal decomposition I(1,n) = I(d,n) + I(1,d)
    R.orthogonal = true;
    for (const Vec& u : outer.basis)
        for (const Vec& v : inner.basis)
            if (Q.polar(u, v)) R.orthogonal = false;

    if (d == n) {
        // no quadratic part; nothing further to check
        R.nondegenerate = true;
        R.closed_form_matches = true;
        R.detail = "d=n: I(n,n)=0";
        return R;
    }

    QuadForm res = Q.restricted(outer.basis);
    FormInvariants inv = invariants(res);
    R.nondegenerate = inv.rank == int(n - d) && inv.zero_lines == 0 && inv.nonzero_lines == 0;

    i64 mu = (nu - 1) / 2;
    if (k.p() != 2) {
        i64 target = (n % 2 == 1) ? (n / d) % k.p() : ((mu % 2 ? -1 : 1) * 2 * (n / d)) % k.p();
        fel t = k.from_int(target);
        bool target_square = quad_res_symbol(k, t) == 1;
        R.closed_form_matches = inv.det_is_square == target_square;
        R.detail = "det target " + std::to_string(target);
    } else {
        int target_sign = jacobi_symbol(k.size(), n / d);  // n odd when p = 2
        R.closed_form_matches = inv.arf_sign == target_sign;
        R.detail = "arf sign target " + std::to_string(target_sign);
    }
    return R;
}

}  // namespace redvar
