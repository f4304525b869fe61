#include "redvar/qform.hpp"

#include <algorithm>

#include "redvar/linalg.hpp"

namespace redvar {

QuadForm::QuadForm(const Field& F, int dim) : F_(&F), m_(dim), c_(size_t(dim) * dim, 0) {
    if (dim < 0) throw std::invalid_argument("QuadForm: negative dimension");
}

void QuadForm::set_coeff(int i, int j, fel v) {
    if (i > j) std::swap(i, j);
    c_[idx(i, j)] = v;
}

fel QuadForm::eval(const std::vector<fel>& x) const {
    fel s = 0;
    for (int i = 0; i < m_; ++i) {
        if (!x[i]) continue;
        for (int j = i; j < m_; ++j) {
            fel c = c_[idx(i, j)];
            if (!c || !x[j]) continue;
            s = F_->add(s, F_->mul(c, F_->mul(x[i], x[j])));
        }
    }
    return s;
}

fel QuadForm::polar(const std::vector<fel>& u, const std::vector<fel>& v) const {
    std::vector<fel> w(m_);
    for (int i = 0; i < m_; ++i) w[i] = F_->add(u[i], v[i]);
    return F_->sub(F_->sub(eval(w), eval(u)), eval(v));
}

std::vector<std::vector<fel>> QuadForm::polar_gram() const {
    Mat A(m_, Vec(m_, 0));
    for (int i = 0; i < m_; ++i)
        for (int j = 0; j < m_; ++j) {
            if (i == j) A[i][j] = F_->mul(F_->from_int(2), c_[idx(i, i)]);
            else A[i][j] = c_[idx(std::min(i, j), std::max(i, j))];
        }
    return A;
}

QuadForm QuadForm::transformed(const std::vector<std::vector<fel>>& M) const {
    return restricted(M);
}

QuadForm QuadForm::restricted(const std::vector<std::vector<fel>>& basis) const {
    int k = int(basis.size());
    QuadForm R(*F_, k);
    for (int i = 0; i < k; ++i) R.set_coeff(i, i, eval(basis[i]));
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) R.set_coeff(i, j, polar(basis[i], basis[j]));
    return R;
}

QuadForm QuadForm::direct_sum(const QuadForm& o) const {
    QuadForm R(*F_, m_ + o.m_);
    for (int i = 0; i < m_; ++i)
        for (int j = i; j < m_; ++j) R.set_coeff(i, j, coeff(i, j));
    for (int i = 0; i < o.m_; ++i)
        for (int j = i; j < o.m_; ++j) R.set_coeff(m_ + i, m_ + j, o.coeff(i, j));
    return R;
}

bool QuadForm::is_zero() const {
    for (fel v : c_)
        if (v) return false;
    return true;
}

std::string QuadForm::text() const {
    std::string s = F_->describe() + " dim=" + std::to_string(m_) + ":";
    for (int i = 0; i < m_; ++i)
        for (int j = i; j < m_; ++j)
            if (coeff(i, j))
                s += " [" + std::to_string(i) + "," + std::to_string(j) + "]=" +
                     F_->to_string(coeff(i, j));
    return s;
}

QuadForm Decomposition::block_form(const Field& F) const {
    int m = 0;
    for (const FormBlock& b : blocks) m += (b.kind == FormBlock::kHyperbolic) ? 2 : 1;
    QuadForm Q(F, m);
    int pos = 0;
    for (const FormBlock& b : blocks) {
        switch (b.kind) {
            case FormBlock::kDiagonal:
            case FormBlock::kNonzeroLine:
                Q.set_coeff(pos, pos, b.a);
                pos += 1;
                break;
            case FormBlock::kZeroLine:
                pos += 1;
                break;
            case FormBlock::kHyperbolic:
                Q.set_coeff(pos, pos, b.a);
                Q.set_coeff(pos, pos + 1, 1);
                Q.set_coeff(pos + 1, pos + 1, b.b);
                pos += 2;
                break;
        }
    }
    return Q;
}

namespace {

Vec vec_sub_scaled(const Field& F, const Vec& v, fel c, const Vec& u) {
    Vec r = v;
    for (size_t i = 0; i < r.size(); ++i) r[i] = F.sub(r[i], F.mul(c, u[i]));
    return r;
}

// Complement of the radical spanned by unit vectors, greedily.
Mat radical_complement(const Field& F, const Mat& rad, int m) {
    Mat acc = rad;
    Mat comp;
    for (int i = 0; i < m; ++i) {
        Vec e(m, 0);
        e[i] = 1;
        Mat trial = acc;
        trial.push_back(e);
        if (int(independent_subset(F, trial).size()) > int(acc.size())) {
            acc.push_back(e);
            comp.push_back(e);
        }
    }
    return comp;
}

}  // namespace

Decomposition decompose(const QuadForm& Q) {
    const Field& F = Q.field_ref();
    int m = Q.dim();
    Decomposition D;
    Mat A = Q.polar_gram();
    Mat rad = m ? nullspace(F, A) : Mat{};
    Mat work = radical_complement(F, rad, m);

    if (F.p() != 2) {
        // Symmetric diagonalization of b_Q = polar/2 on the complement.
        while (!work.empty()) {
            work = independent_subset(F, work);
            if (work.empty()) break;
            // pivot with Q(u) != 0; else combine a pair
            int pi = -1;
            for (size_t i = 0; i < work.size(); ++i)
                if (Q.eval(work[i])) { pi = int(i); break; }
            Vec u;
            if (pi >= 0) {
                u = work[pi];
                work.erase(work.begin() + pi);
            } else {
                bool found = false;
                for (size_t i = 0; i < work.size() && !found; ++i)
                    for (size_t j = i + 1; j < work.size() && !found; ++j)
                        if (Q.polar(work[i], work[j])) {
                            u = work[i];
                            for (int t = 0; t < m; ++t) u[t] = F.add(u[t], work[j][t]);
                            work.erase(work.begin() + j);
                            found = true;
                        }
                if (!found) throw std::logic_error("decompose: degenerate complement (p odd)");
            }
            fel d = Q.eval(u);
            // b(v,u)/b(u,u) = polar(v,u)/polar(u,u); polar(u,u) = 2d
            fel pd = F.mul(F.from_int(2), d);
            for (Vec& v : work) v = vec_sub_scaled(F, v, F.div(Q.polar(v, u), pd), u);
            D.basis.push_back(u);
            D.blocks.push_back({FormBlock::kDiagonal, d, 0});
        }
    } else {
        // Hyperbolic-pair extraction on the alternating form a_Q.
        while (!work.empty()) {
            work = independent_subset(F, work);
            if (work.empty()) break;
            Vec u = work[0];
            work.erase(work.begin());
            int vi = -1;
            for (size_t i = 0; i < work.size(); ++i)
                if (Q.polar(u, work[i])) { vi = int(i); break; }
            if (vi < 0) throw std::logic_error("decompose: degenerate complement (p = 2)");
            Vec v = work[vi];
            work.erase(work.begin() + vi);
            fel s = F.inv(Q.polar(u, v));
            for (int t = 0; t < m; ++t) v[t] = F.mul(v[t], s);  // a_Q(u,v) = 1
            for (Vec& w : work) {
                Vec w2 = vec_sub_scaled(F, w, Q.polar(w, v), u);
                w2 = vec_sub_scaled(F, w2, Q.polar(w, u), v);
                w = w2;
            }
            D.basis.push_back(u);
            D.basis.push_back(v);
            D.blocks.push_back({FormBlock::kHyperbolic, Q.eval(u), Q.eval(v)});
        }
    }

    // Radical: the quasi-linear part.  sqrt(Q) is k-linear on it for p = 2,
    // so at most one nonzero line survives after normalization.
    if (F.p() == 2) {
        Mat zeros;
        int star = -1;
        for (size_t i = 0; i < rad.size(); ++i)
            if (Q.eval(rad[i])) { star = int(i); break; }
        if (star < 0) {
            zeros = rad;
        } else {
            Vec rs = rad[star];
            fel qs = Q.eval(rs);
            fel sq_qs = F.pow_p(qs, -1);  // sqrt in char 2
            for (size_t i = 0; i < rad.size(); ++i) {
                if (int(i) == star) continue;
                fel qi = Q.eval(rad[i]);
                if (!qi) { zeros.push_back(rad[i]); continue; }
                fel lam = F.div(F.pow_p(qi, -1), sq_qs);
                zeros.push_back(vec_sub_scaled(F, rad[i], lam, rs));
            }
            D.basis.push_back(rs);
            D.blocks.push_back({FormBlock::kNonzeroLine, qs, 0});
        }
        for (const Vec& z : zeros) {
            D.basis.push_back(z);
            D.blocks.push_back({FormBlock::kZeroLine, 0, 0});
        }
    } else {
        for (const Vec& z : rad) {
            D.basis.push_back(z);
            D.blocks.push_back({FormBlock::kZeroLine, 0, 0});
        }
    }
    return D;
}

FormInvariants invariants(const QuadForm& Q) {
    const Field& F = Q.field_ref();
    Decomposition D = decompose(Q);
    FormInvariants inv;
    fel det = 1;
    fel arf = 0;
    for (const FormBlock& b : D.blocks) {
        switch (b.kind) {
            case FormBlock::kDiagonal:
                inv.rank += 1;
                det = F.mul(det, b.a);
                break;
            case FormBlock::kHyperbolic:
                inv.rank += 2;
                arf = F.add(arf, F.mul(b.a, b.b));
                break;
            case FormBlock::kNonzeroLine:
                inv.nonzero_lines += 1;
                break;
            case FormBlock::kZeroLine:
                inv.zero_lines += 1;
                break;
        }
    }
    if (F.p() != 2) {
        inv.det_is_square = inv.rank == 0 || quad_res_symbol(F, det) == 1;
        inv.det_rep = inv.det_is_square ? F.one() : F.gen();
    } else {
        inv.arf_trace = int(field(2, 1).lift(trace(F, field(2, 1), arf)));
        inv.arf_sign = inv.arf_trace ? -1 : 1;
    }
    return inv;
}

u64 fiber_count(const QuadForm& Q, fel t, u64 budget) {
    const Field& F = Q.field_ref();
    int m = Q.dim();
    u64 total = 1;
    for (int i = 0; i < m; ++i) {
        total *= u64(F.size());
        if (total > budget) throw BudgetExceeded(total);
    }
    u64 cnt = 0;
    std::vector<fel> x(std::max(m, 1), 0);
    u64 n = u64(F.size());
    for (u64 idx = 0; idx < total; ++idx) {
        u64 v = idx;
        for (int i = 0; i < m; ++i) { x[i] = fel(v % n); v /= n; }
        if (Q.eval(x) == t) ++cnt;
    }
    return cnt;
}

int arf_by_counting(const QuadForm& Q) {
    const Field& F = Q.field_ref();
    if (F.size() != 2) throw std::domain_error("arf_by_counting: base field must be F_2");
    int m = Q.dim();
    if (m % 2) throw std::domain_error("arf_by_counting: dimension must be even");
    u64 rp = u64(1) << (m / 2 - 1);  // 2^{r'-1}
    u64 half = u64(1) << (m - 1);    // 2^{m-1}
    u64 n1 = fiber_count(Q, 1);
    if (n1 == half - rp) return 0;
    if (n1 == half + rp) return 1;
    throw std::domain_error("arf_by_counting: fiber size matches neither branch (form degenerate?)");
}

}  // namespace redvar
