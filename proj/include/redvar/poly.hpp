#pragma once

#include <map>
#include <vector>

#include "redvar/common.hpp"
#include "redvar/cyclotomic.hpp"
#include "redvar/gf.hpp"

namespace redvar {

/// Sparse multivariate polynomial over a Field.  Terms are kept in a map
/// keyed by exponent vector (lex order), which fixes the canonical text form.
class Poly {
public:
    using Expo = std::vector<u32>;

    Poly(const Field& F, int nvars) : F_(&F), nvars_(nvars) {}

    static Poly constant(const Field& F, int nvars, fel c);
    static Poly variable(const Field& F, int nvars, int i, u32 e = 1, fel c = 1);

    const Field& field_ref() const { return *F_; }
    int nvars() const { return nvars_; }
    const std::map<Expo, fel>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }

    void add_term(const Expo& e, fel c);

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator-() const;
    Poly operator*(const Poly& o) const;
    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    bool operator==(const Poly& o) const { return t_ == o.t_; }

    Poly scaled(fel c) const;
    /// The q^j-th power: exponents scale, coefficients Frobenius.
    Poly pow_q(int j) const;
    u32 total_degree() const;
    Poly homogeneous_part(u32 d) const;
    Poly derivative(int var) const;

    /// Substitute each variable by the given polynomial (all in one ring).
    Poly compose(const std::vector<Poly>& images) const;

    fel eval(const std::vector<fel>& x) const;

    /// Canonical printable form with the given variable names.
    std::string text(const std::vector<std::string>& names) const;

private:
    const Field* F_;
    int nvars_;
    std::map<Expo, fel> t_;
};

/// Term list compiled against an extension field for fast repeated evaluation.
class CompiledPoly {
public:
    CompiledPoly(const Poly& p, const Field& big);
    fel eval(const fel* x) const;
    const Field& field_ref() const { return *big_; }

private:
    struct Term {
        fel coef;
        std::vector<std::pair<u32, u32>> factors;  // (var, exponent)
    };
    const Field* big_;
    std::vector<Term> terms_;
};

/// sum over x in F_{q^e}^m of psi(Tr_{F_{q^e}/F_q}(P(x))), exact in Z[zeta_p].
/// P lives over F_q = chi's field; the total number of points q^{em} must fit
/// in the budget.
CycInt exp_sum(const Poly& P, const AdditiveChar& chi, int e, u64 budget);

}  // namespace redvar
