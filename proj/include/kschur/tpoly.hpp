#pragma once

#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "kschur/partition.hpp"

namespace kschur {

using Integer = boost::multiprecision::cpp_int;

/// Polynomial in t with arbitrary-precision integer coefficients.
/// coeffs()[e] is the coefficient of t^e; no trailing zeros are stored, so
/// the zero polynomial has no coefficients.
class TPoly {
public:
    TPoly() = default;
    TPoly(Integer constant);  // NOLINT: integers embed as constants
    TPoly(int constant) : TPoly(Integer(constant)) {}  // NOLINT
    explicit TPoly(std::vector<Integer> coeffs);

    static TPoly monomial(Integer c, int exponent);
    static TPoly t() { return monomial(1, 1); }

    const std::vector<Integer>& coeffs() const noexcept { return coeffs_; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    Integer coeff(int exponent) const;
    Integer eval(const Integer& at) const;
    bool has_nonnegative_coeffs() const;

    TPoly& operator+=(const TPoly& o);
    TPoly& operator-=(const TPoly& o);
    TPoly& operator*=(const TPoly& o);
    friend TPoly operator+(TPoly a, const TPoly& b) { return a += b; }
    friend TPoly operator-(TPoly a, const TPoly& b) { return a -= b; }
    friend TPoly operator*(TPoly a, const TPoly& b) { return a *= b; }
    friend TPoly operator-(TPoly a);

    friend bool operator==(const TPoly&, const TPoly&) = default;

    /// Ascending human form, e.g. "1 - t + 2*t^3"; "0" for zero.
    std::string str() const;

private:
    void normalize();
    std::vector<Integer> coeffs_;
};

/// Square matrix of TPoly entries indexed by partitions in strictly
/// canonical (reverse-lexicographic) order.
class TPolyMatrix {
public:
    TPolyMatrix() = default;
    /// Zero matrix. Throws input_error(structure) if the index is not
    /// strictly canonically ordered.
    explicit TPolyMatrix(std::vector<Partition> index);
    static TPolyMatrix identity(std::vector<Partition> index);

    int size() const noexcept { return static_cast<int>(index_.size()); }
    const std::vector<Partition>& index() const noexcept { return index_; }
    /// Position of a partition in the index, or -1.
    int position(const Partition& p) const;

    TPoly& operator()(int i, int j) { return entries_[flat(i, j)]; }
    const TPoly& operator()(int i, int j) const { return entries_[flat(i, j)]; }

    TPolyMatrix transpose() const;
    bool is_upper_unitriangular() const;
    bool is_lower_unitriangular() const;

    friend TPolyMatrix operator*(const TPolyMatrix& a, const TPolyMatrix& b);
    friend bool operator==(const TPolyMatrix&, const TPolyMatrix&) = default;

private:
    std::size_t flat(int i, int j) const {
        return static_cast<std::size_t>(i) * index_.size() + static_cast<std::size_t>(j);
    }
    std::vector<Partition> index_;
    std::vector<TPoly> entries_;
};

/// Exact inverse of an upper- or lower-unitriangular matrix by
/// back-substitution. Throws input_error(structure) otherwise.
TPolyMatrix unitriangular_inverse(const TPolyMatrix& m);

}  // namespace kschur
