#pragma once

#include <string>
#include <vector>

#include "redvar/linalg.hpp"
#include "redvar/qform.hpp"

namespace redvar {

/// The group algebra k[Gamma] for Gamma = Z/n, gcd(n, p) = 1.  Elements are
/// coefficient vectors indexed by exponents 0..n-1 of the generator gamma.
struct GroupAlgebra {
    const Field* k;
    i64 n;

    GroupAlgebra(const Field& field_, i64 order);

    Vec convolve(const Vec& x, const Vec& y) const;
    /// gamma^s * x
    Vec shift(const Vec& x, i64 s) const;
    /// The standard involution gamma -> gamma^{-1}.
    Vec involution(const Vec& x) const;
    /// epsilon: coefficient of the identity group element.
    fel epsilon(const Vec& x) const { return x[0]; }
};

/// Frobenius orbits of the characters of Z/n valued in kbar: orbits of the
/// exponent classes 0..n-1 under multiplication by q.  The orbit of the
/// trivial character {0} comes first; orbits are sorted by smallest member.
std::vector<std::vector<i64>> char_orbits(i64 n, const Field& k);

struct SubmoduleBasis {
    std::string label;
    Mat basis;  // vectors in k^n
    int dim() const { return int(basis.size()); }
};

/// k[Gamma/Gamma^a] = k[Gamma]^{Gamma^a} for a | n: orbit sums over the
/// Gamma^a-cosets.
SubmoduleBasis coset_submodule(const GroupAlgebra& A, i64 a);

/// I_k(Gamma; a, b) for a | b | n: the sum of the isotypic components V_chi
/// with chi^b = 1 and chi^a != 1, realized by Galois-stable idempotent sums
/// computed in the splitting field F_{q^s} and descended to k.
SubmoduleBasis idempotent_submodule(const GroupAlgebra& A, i64 a, i64 b);

/// Q_Gamma(x) = epsilon(x * xbar), the standard Gamma-invariant form; p != 2.
QuadForm q_gamma(const GroupAlgebra& A);

/// The quadratic form Q_nu on the coordinate space k^n, for odd nu in [1,2n):
///   -sum_{mu < j-i < n-mu} y_i y_j          if nu <= n (empty for nu = n)
///   +sum_{n-mu <= j-i <= mu} y_i y_j        if n < nu < 2n
/// with nu = 2 mu + 1.
QuadForm q_nu_form(const Field& k, i64 n, i64 nu);

/// Q_nu restricted to V = {sum y_i = 0} by eliminating y_1, in coords y_2..y_n.
QuadForm q_nu_restricted_to_V(const Field& k, i64 n, i64 nu);

/// Verification of the closed-form invariants of Q_nu restricted to I(d, n),
/// d = gcd(n, nu):
///   p odd:  det class = n/d (n odd),  (-1)^mu 2n/d (n even)
///   p = 2:  psi_0(Tr Arf) = jacobi(q | n/d)
/// plus nondegeneracy on I(d,n), vanishing on I(1,d) and orthogonality of the
/// two.  Mismatches signal implementation bugs (these are theorems).
struct RestrictedInvariantReport {
    i64 n = 0, nu = 0, d = 0;
    bool dims_ok = false;
    bool vanishes_on_inner = false;
    bool orthogonal = false;
    bool nondegenerate = false;
    bool closed_form_matches = false;
    std::string detail;

    bool ok() const {
        return dims_ok && vanishes_on_inner && orthogonal && nondegenerate &&
               closed_form_matches;
    }
};

RestrictedInvariantReport restricted_invariants(const Field& k, i64 n, i64 nu);

}  // namespace redvar
