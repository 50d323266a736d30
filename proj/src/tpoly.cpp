#include "kschur/tpoly.hpp"

#include <algorithm>

#include "kschur/error.hpp"

namespace kschur {

TPoly::TPoly(Integer constant) {
    coeffs_.push_back(std::move(constant));
    normalize();
}

TPoly::TPoly(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

TPoly TPoly::monomial(Integer c, int exponent) {
    std::vector<Integer> v(static_cast<std::size_t>(exponent) + 1, 0);
    v.back() = std::move(c);
    return TPoly(std::move(v));
}

void TPoly::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0)
        coeffs_.pop_back();
}

Integer TPoly::coeff(int exponent) const {
    if (exponent < 0 || exponent > degree())
        return 0;
    return coeffs_[static_cast<std::size_t>(exponent)];
}

Integer TPoly::eval(const Integer& at) const {
    Integer acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * at + *it;
    return acc;
}

bool TPoly::has_nonnegative_coeffs() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Integer& c) { return c >= 0; });
}

TPoly& TPoly::operator+=(const TPoly& o) {
    if (o.coeffs_.size() > coeffs_.size())
        coeffs_.resize(o.coeffs_.size(), 0);
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
        coeffs_[i] += o.coeffs_[i];
    normalize();
    return *this;
}

TPoly& TPoly::operator-=(const TPoly& o) {
    if (o.coeffs_.size() > coeffs_.size())
        coeffs_.resize(o.coeffs_.size(), 0);
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
        coeffs_[i] -= o.coeffs_[i];
    normalize();
    return *this;
}

TPoly& TPoly::operator*=(const TPoly& o) {
    if (is_zero() || o.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    std::vector<Integer> out(coeffs_.size() + o.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
            out[i + j] += coeffs_[i] * o.coeffs_[j];
    coeffs_ = std::move(out);
    normalize();
    return *this;
}

TPoly operator-(TPoly a) {
    for (auto& c : a.coeffs_)
        c = -c;
    return a;
}

std::string TPoly::str() const {
    if (is_zero())
        return "0";
    std::string s;
    for (std::size_t e = 0; e < coeffs_.size(); ++e) {
        const Integer& c = coeffs_[e];
        if (c == 0)
            continue;
        const bool negative = c < 0;
        const Integer mag = negative ? Integer(-c) : c;
        if (s.empty())
            s += negative ? "-" : "";
        else
            s += negative ? " - " : " + ";
        std::string var = e == 0 ? "" : (e == 1 ? "t" : "t^" + std::to_string(e));
        if (var.empty())
            s += mag.str();
        else if (mag == 1)
            s += var;
        else
            s += mag.str() + "*" + var;
    }
    return s;
}

TPolyMatrix::TPolyMatrix(std::vector<Partition> index)
    : index_(std::move(index)), entries_(index_.size() * index_.size()) {
    for (std::size_t i = 1; i < index_.size(); ++i)
        if (!CanonicalOrder{}(index_[i - 1], index_[i]))
            throw input_error(errc::structure, "matrix index must be strictly canonically ordered");
}

TPolyMatrix TPolyMatrix::identity(std::vector<Partition> index) {
    TPolyMatrix m(std::move(index));
    for (int i = 0; i < m.size(); ++i)
        m(i, i) = 1;
    return m;
}

int TPolyMatrix::position(const Partition& p) const {
    auto it = std::lower_bound(index_.begin(), index_.end(), p, CanonicalOrder{});
    return (it != index_.end() && *it == p) ? static_cast<int>(it - index_.begin()) : -1;
}

TPolyMatrix TPolyMatrix::transpose() const {
    TPolyMatrix out(index_);
    for (int i = 0; i < size(); ++i)
        for (int j = 0; j < size(); ++j)
            out(j, i) = (*this)(i, j);
    return out;
}

bool TPolyMatrix::is_upper_unitriangular() const {
    for (int i = 0; i < size(); ++i) {
        if ((*this)(i, i) != TPoly(1))
            return false;
        for (int j = 0; j < i; ++j)
            if (!(*this)(i, j).is_zero())
                return false;
    }
    return true;
}

bool TPolyMatrix::is_lower_unitriangular() const { return transpose().is_upper_unitriangular(); }

TPolyMatrix operator*(const TPolyMatrix& a, const TPolyMatrix& b) {
    if (a.index_ != b.index_)
        throw input_error(errc::structure, "matrix indices differ");
    TPolyMatrix out(a.index_);
    for (int i = 0; i < a.size(); ++i)
        for (int l = 0; l < a.size(); ++l) {
            if (a(i, l).is_zero())
                continue;
            for (int j = 0; j < a.size(); ++j)
                if (!b(l, j).is_zero())
                    out(i, j) += a(i, l) * b(l, j);
        }
    return out;
}

namespace {

TPolyMatrix upper_inverse(const TPolyMatrix& u) {
    const int n = u.size();
    TPolyMatrix x = TPolyMatrix::identity(u.index());
    for (int j = 0; j < n; ++j)
        for (int i = j - 1; i >= 0; --i) {
            TPoly acc;
            for (int l = i + 1; l <= j; ++l)
                if (!u(i, l).is_zero() && !x(l, j).is_zero())
                    acc += u(i, l) * x(l, j);
            x(i, j) = -acc;
        }
    return x;
}

}  // namespace

TPolyMatrix unitriangular_inverse(const TPolyMatrix& m) {
    TPolyMatrix inv;
    if (m.is_upper_unitriangular())
        inv = upper_inverse(m);
    else if (m.is_lower_unitriangular())
        inv = upper_inverse(m.transpose()).transpose();
    else
        throw input_error(errc::structure, "matrix is not unitriangular");
    if (!(m * inv == TPolyMatrix::identity(m.index())))
        throw anomaly(errc::structure, "back-substitution failed to invert");
    return inv;
}

}  // namespace kschur
