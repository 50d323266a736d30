#pragma once

#include <map>
#include <string>
#include <string_view>

#include "kschur/abc.hpp"
#include "kschur/partition.hpp"
#include "kschur/tpoly.hpp"

namespace kschur {

enum class Basis { monomial, homogeneous, schur, hall_littlewood, dual_kschur, kschur_t };

std::string_view to_string(Basis b) noexcept;
/// Accepts the JSON names plus the short forms m, h, s, hl.
Basis parse_basis(std::string_view name);

/// Homogeneous symmetric function of degree n written in one basis, with
/// coefficients in Z[t]. The k-Schur bases carry their k; the indices of
/// those bases must be k-bounded.
class SymFunc {
public:
    using Terms = std::map<Partition, TPoly, CanonicalOrder>;

    SymFunc(Basis basis, int degree, int k = 0);

    Basis basis() const noexcept { return basis_; }
    int degree() const noexcept { return degree_; }
    int k() const noexcept { return k_; }
    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    TPoly coeff(const Partition& index) const;
    /// Adds c to the coefficient of `index`; zero coefficients are dropped.
    void add(const Partition& index, const TPoly& c);

    SymFunc& operator+=(const SymFunc& o);
    SymFunc& operator-=(const SymFunc& o);
    SymFunc& operator*=(const TPoly& c);
    friend SymFunc operator+(SymFunc a, const SymFunc& b) { return a += b; }
    friend SymFunc operator-(SymFunc a, const SymFunc& b) { return a -= b; }
    friend SymFunc operator*(const TPoly& c, SymFunc f) { return f *= c; }

    /// Specialise t to an integer.
    SymFunc at(const Integer& t) const;

    friend bool operator==(const SymFunc&, const SymFunc&) = default;

    /// Terms from the least to the most dominant index, e.g.
    /// "H[1,1] - t*H[2]".
    std::string str() const;

private:
    void require_same_space(const SymFunc& o) const;

    Basis basis_;
    int degree_;
    int k_;
    Terms terms_;
};

/// Kostka numbers |SSYT(lambda, mu)| against the monomial basis.
SymFunc schur_to_monomial(const Partition& lambda);

/// Product of monomial-basis expansions; coefficient of m_nu in
/// m_lambda m_mu counts the ways to split nu's exponent vector into
/// rearrangements of lambda and mu.
SymFunc multiply_monomial(const SymFunc& f, const SymFunc& g);

/// h_mu = h_{mu_1} h_{mu_2} ... with h_m = sum of all m_nu, nu |- m.
SymFunc h_to_monomial(const Partition& mu);

/// H_mu[X;t] = sum over lambda of K_{lambda,mu}(t) s_lambda.
SymFunc hall_littlewood_to_schur(const Partition& mu);

/// Dual k-Schur function: m_mu coefficient counts ABCs of k-weight mu with
/// inner shape c(lambda). Throws input_error(bound_violation) if lambda_1 > k.
SymFunc dual_kschur_to_monomial(const Partition& lambda, int k);

/// [K^(k)_{lambda,mu}(t)] over partitions of n in P^k, rows lambda, columns
/// mu, canonical order. Columns are assembled on `threads` workers; the
/// result does not depend on the worker count. anomaly(triangularity) if the
/// matrix is not upper unitriangular.
struct KostkaMatrixK {
    int k = 1;
    int n = 0;
    TPolyMatrix matrix;
};

KostkaMatrixK kostka_matrix_k(int k, int n, unsigned threads = 1,
                              InsertionRule rule = InsertionRule::largest_column);

/// Classical Kostka-Foulkes matrix over all partitions of n.
TPolyMatrix kostka_foulkes_matrix(int n);

/// s^(k)_lambda[X;t] = sum_mu (K^-1)_{mu,lambda} H_mu[X;t], returned in
/// `target` (hall_littlewood, schur, monomial or homogeneous). The
/// orientation is the one making H_mu = sum_lambda K^(k)_{lambda,mu}
/// s^(k)_lambda.
SymFunc kschur_t(const Partition& lambda, int k, Basis target = Basis::hall_littlewood);

SymFunc to_monomial(const SymFunc& f);
SymFunc to_schur(const SymFunc& f);
SymFunc to_homogeneous(const SymFunc& f);
SymFunc convert(const SymFunc& f, Basis target);

/// <f, g> with f expanded in h and g in m, using <h_lambda, m_mu> = delta.
/// Throws input_error(size_mismatch) on unequal degrees.
TPoly hall_inner_product(const SymFunc& f, const SymFunc& g);

}  // namespace kschur
