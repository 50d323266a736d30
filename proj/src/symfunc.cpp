#include "kschur/symfunc.hpp"

#include <algorithm>
#include <future>

#include "kschur/charge.hpp"
#include "kschur/core.hpp"
#include "kschur/error.hpp"

namespace kschur {

std::string_view to_string(Basis b) noexcept {
    switch (b) {
    case Basis::monomial: return "monomial";
    case Basis::homogeneous: return "homogeneous";
    case Basis::schur: return "schur";
    case Basis::hall_littlewood: return "hall_littlewood";
    case Basis::dual_kschur: return "dual_kschur";
    case Basis::kschur_t: return "kschur_t";
    }
    return "unknown";
}

Basis parse_basis(std::string_view name) {
    if (name == "monomial" || name == "m")
        return Basis::monomial;
    if (name == "homogeneous" || name == "h")
        return Basis::homogeneous;
    if (name == "schur" || name == "s")
        return Basis::schur;
    if (name == "hall_littlewood" || name == "hall-littlewood" || name == "hl" || name == "H")
        return Basis::hall_littlewood;
    if (name == "dual_kschur" || name == "dual-kschur")
        return Basis::dual_kschur;
    if (name == "kschur_t" || name == "kschur-t")
        return Basis::kschur_t;
    throw input_error(errc::structure, "unknown basis '" + std::string(name) + "'");
}

namespace {

bool k_basis(Basis b) { return b == Basis::dual_kschur || b == Basis::kschur_t; }

std::string_view symbol(Basis b) {
    switch (b) {
    case Basis::monomial: return "m";
    case Basis::homogeneous: return "h";
    case Basis::schur: return "s";
    case Basis::hall_littlewood: return "H";
    case Basis::dual_kschur: return "dks";
    case Basis::kschur_t: return "ks";
    }
    return "?";
}

std::string bracket(const Partition& p) {
    std::string s = "[";
    for (int i = 1; i <= p.length(); ++i)
        s += (i > 1 ? "," : "") + std::to_string(p.row(i));
    return s + "]";
}

}  // namespace

SymFunc::SymFunc(Basis basis, int degree, int k) : basis_(basis), degree_(degree), k_(k) {
    if (degree < 0)
        throw input_error(errc::size_mismatch, "negative degree");
    if (k_basis(basis) && k < 1)
        throw input_error(errc::bound_violation, "k-Schur bases need k >= 1");
    if (!k_basis(basis))
        k_ = 0;
}

TPoly SymFunc::coeff(const Partition& index) const {
    auto it = terms_.find(index);
    return it == terms_.end() ? TPoly{} : it->second;
}

void SymFunc::add(const Partition& index, const TPoly& c) {
    if (index.size() != degree_)
        throw input_error(errc::size_mismatch, "index " + index.str() + " has the wrong size");
    if (k_basis(basis_) && index.first() > k_)
        throw input_error(errc::bound_violation, "index " + index.str() + " is not k-bounded");
    if (c.is_zero())
        return;
    auto [it, inserted] = terms_.try_emplace(index, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

void SymFunc::require_same_space(const SymFunc& o) const {
    if (o.basis_ != basis_ || o.k_ != k_)
        throw input_error(errc::structure, "symmetric functions are in different bases");
    if (o.degree_ != degree_)
        throw input_error(errc::size_mismatch, "symmetric functions have different degrees");
}

SymFunc& SymFunc::operator+=(const SymFunc& o) {
    require_same_space(o);
    for (const auto& [idx, c] : o.terms_)
        add(idx, c);
    return *this;
}

SymFunc& SymFunc::operator-=(const SymFunc& o) {
    require_same_space(o);
    for (const auto& [idx, c] : o.terms_)
        add(idx, -c);
    return *this;
}

SymFunc& SymFunc::operator*=(const TPoly& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [idx, v] : terms_)
        v *= c;
    return *this;
}

SymFunc SymFunc::at(const Integer& t) const {
    SymFunc out(basis_, degree_, k_);
    for (const auto& [idx, c] : terms_)
        out.add(idx, TPoly(c.eval(t)));
    return out;
}

std::string SymFunc::str() const {
    if (terms_.empty())
        return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const std::string elem = std::string(symbol(basis_)) + bracket(it->first);
        const TPoly& c = it->second;
        const bool single = std::count_if(c.coeffs().begin(), c.coeffs().end(),
                                          [](const Integer& x) { return x != 0; }) == 1;
        if (single) {
            const bool negative = c.coeffs().back() < 0;
            const TPoly mag = negative ? -c : c;
            if (out.empty())
                out += negative ? "-" : "";
            else
                out += negative ? " - " : " + ";
            out += (mag == TPoly(1)) ? elem : mag.str() + "*" + elem;
        } else {
            out += (out.empty() ? "" : " + ") + ("(" + c.str() + ")*" + elem);
        }
    }
    return out;
}

// ---------------------------------------------------------------------------

SymFunc schur_to_monomial(const Partition& lambda) {
    SymFunc out(Basis::monomial, lambda.size());
    for (const Partition& mu : partitions_of(lambda.size())) {
        const auto count = ssyt_enumerate(lambda, mu.parts()).size();
        out.add(mu, TPoly(static_cast<int>(count)));
    }
    return out;
}

namespace {

// Coefficient of m_nu in m_lambda * m_mu.
Integer monomial_product_coeff(const Partition& lambda, const Partition& mu, const Partition& nu) {
    const int len = nu.length();
    if (lambda.length() > len || mu.length() > len)
        return 0;
    std::vector<int> a(lambda.vec());
    a.resize(static_cast<std::size_t>(len), 0);
    std::sort(a.begin(), a.end());
    std::vector<int> want(mu.vec());
    Integer count = 0;
    do {
        std::vector<int> rest;
        bool ok = true;
        for (int i = 0; i < len && ok; ++i) {
            const int r = nu.row(i + 1) - a[static_cast<std::size_t>(i)];
            if (r < 0)
                ok = false;
            else if (r > 0)
                rest.push_back(r);
        }
        if (!ok)
            continue;
        std::sort(rest.begin(), rest.end(), std::greater<>());
        if (rest == want)
            ++count;
    } while (std::next_permutation(a.begin(), a.end()));
    return count;
}

}  // namespace

SymFunc multiply_monomial(const SymFunc& f, const SymFunc& g) {
    if (f.basis() != Basis::monomial || g.basis() != Basis::monomial)
        throw input_error(errc::structure, "multiply_monomial expects monomial-basis inputs");
    const int n = f.degree() + g.degree();
    SymFunc out(Basis::monomial, n);
    const auto targets = partitions_of(n);
    for (const auto& [lambda, a] : f.terms())
        for (const auto& [mu, b] : g.terms())
            for (const Partition& nu : targets) {
                Integer c = monomial_product_coeff(lambda, mu, nu);
                if (c != 0)
                    out.add(nu, a * b * TPoly(c));
            }
    return out;
}

SymFunc h_to_monomial(const Partition& mu) {
    SymFunc acc(Basis::monomial, 0);
    acc.add(Partition{}, 1);
    for (int part : mu.parts()) {
        SymFunc h(Basis::monomial, part);
        for (const Partition& nu : partitions_of(part))
            h.add(nu, 1);
        acc = multiply_monomial(acc, h);
    }
    return acc;
}

SymFunc hall_littlewood_to_schur(const Partition& mu) {
    SymFunc out(Basis::schur, mu.size());
    for (const Partition& lambda : partitions_of(mu.size()))
        out.add(lambda, kostka_foulkes(lambda, mu));
    return out;
}

SymFunc dual_kschur_to_monomial(const Partition& lambda, int k) {
    if (lambda.first() > k)
        throw input_error(errc::bound_violation, lambda.str() + " is not k-bounded");
    const Partition inner = core_from_bounded(lambda, k).shape();
    SymFunc out(Basis::monomial, lambda.size());
    for (const Partition& mu : partitions_of(lambda.size(), k)) {
        const auto count = abc_enumerate(k, mu.parts(), inner).size();
        out.add(mu, TPoly(static_cast<int>(count)));
    }
    return out;
}

namespace {

std::vector<TPoly> kostka_column(int k, const Partition& mu, const TPolyMatrix& shape, InsertionRule rule) {
    std::vector<TPoly> column(static_cast<std::size_t>(shape.size()));
    for (const Abc& a : abc_enumerate(k, mu.parts())) {
        const Partition lambda = bounded_from_core(a.inner, k);
        const int row = shape.position(lambda);
        if (row < 0)
            throw anomaly(errc::structure, "inner shape " + a.inner.str() + " maps outside P^k");
        column[static_cast<std::size_t>(row)] += TPoly::monomial(1, statistics(a, rule).k_charge);
    }
    return column;
}

}  // namespace

KostkaMatrixK kostka_matrix_k(int k, int n, unsigned threads, InsertionRule rule) {
    if (k < 1 || n < 0)
        throw input_error(errc::bound_violation, "kostka_matrix_k needs k >= 1 and n >= 0");
    KostkaMatrixK out{k, n, TPolyMatrix(partitions_of(n, k))};
    const auto& index = out.matrix.index();
    std::vector<std::vector<TPoly>> columns(index.size());
    if (threads <= 1) {
        for (std::size_t j = 0; j < index.size(); ++j)
            columns[j] = kostka_column(k, index[j], out.matrix, rule);
    } else {
        // Columns are independent; each worker takes a stride of them.
        std::vector<std::future<void>> workers;
        for (unsigned w = 0; w < threads; ++w)
            workers.push_back(std::async(std::launch::async, [&, w] {
                for (std::size_t j = w; j < index.size(); j += threads)
                    columns[j] = kostka_column(k, index[j], out.matrix, rule);
            }));
        for (auto& f : workers)
            f.get();
    }
    for (std::size_t j = 0; j < index.size(); ++j)
        for (std::size_t i = 0; i < index.size(); ++i)
            out.matrix(static_cast<int>(i), static_cast<int>(j)) = std::move(columns[j][i]);
    if (!out.matrix.is_upper_unitriangular())
        throw anomaly(errc::triangularity, "K^(" + std::to_string(k) + ") for n = " +
                                               std::to_string(n) + " is not unitriangular");
    return out;
}

TPolyMatrix kostka_foulkes_matrix(int n) {
    TPolyMatrix m(partitions_of(n));
    for (int i = 0; i < m.size(); ++i)
        for (int j = 0; j < m.size(); ++j)
            m(i, j) = kostka_foulkes(m.index()[static_cast<std::size_t>(i)],
                                     m.index()[static_cast<std::size_t>(j)]);
    return m;
}

SymFunc kschur_t(const Partition& lambda, int k, Basis target) {
    if (lambda.first() > k)
        throw input_error(errc::bound_violation, lambda.str() + " is not k-bounded");
    const auto kk = kostka_matrix_k(k, lambda.size());
    const TPolyMatrix inv = unitriangular_inverse(kk.matrix);
    const int col = kk.matrix.position(lambda);
    SymFunc out(Basis::hall_littlewood, lambda.size());
    for (int mu = 0; mu < inv.size(); ++mu)
        out.add(kk.matrix.index()[static_cast<std::size_t>(mu)], inv(mu, col));
    return convert(out, target);
}

// ---------------------------------------------------------------------------
// Basis changes

namespace {

TPolyMatrix kostka_number_matrix(int n) {
    TPolyMatrix m(partitions_of(n));
    for (int i = 0; i < m.size(); ++i) {
        const SymFunc s = schur_to_monomial(m.index()[static_cast<std::size_t>(i)]);
        for (const auto& [mu, c] : s.terms())
            m(i, m.position(mu)) = c;
    }
    return m;
}

}  // namespace

SymFunc to_monomial(const SymFunc& f) {
    SymFunc out(Basis::monomial, f.degree());
    for (const auto& [idx, c] : f.terms()) {
        SymFunc piece(Basis::monomial, f.degree());
        switch (f.basis()) {
        case Basis::monomial: piece.add(idx, 1); break;
        case Basis::homogeneous: piece = h_to_monomial(idx); break;
        case Basis::schur: piece = schur_to_monomial(idx); break;
        case Basis::hall_littlewood: piece = to_monomial(hall_littlewood_to_schur(idx)); break;
        case Basis::dual_kschur: piece = dual_kschur_to_monomial(idx, f.k()); break;
        case Basis::kschur_t: piece = kschur_t(idx, f.k(), Basis::monomial); break;
        }
        out += c * piece;
    }
    return out;
}

SymFunc to_schur(const SymFunc& f) {
    SymFunc out(Basis::schur, f.degree());
    switch (f.basis()) {
    case Basis::schur: return f;
    case Basis::hall_littlewood:
        for (const auto& [idx, c] : f.terms())
            out += c * hall_littlewood_to_schur(idx);
        return out;
    case Basis::kschur_t:
        for (const auto& [idx, c] : f.terms())
            out += c * kschur_t(idx, f.k(), Basis::schur);
        return out;
    default: break;
    }
    // m_mu = sum_lambda c_lambda K_{lambda,mu}  =>  c = (K^-1)^T m.
    const SymFunc m = to_monomial(f);
    const TPolyMatrix inv = unitriangular_inverse(kostka_number_matrix(f.degree()));
    for (int l = 0; l < inv.size(); ++l) {
        TPoly c;
        for (const auto& [mu, v] : m.terms())
            c += inv(inv.position(mu), l) * v;
        out.add(inv.index()[static_cast<std::size_t>(l)], c);
    }
    return out;
}

SymFunc to_homogeneous(const SymFunc& f) {
    if (f.basis() == Basis::homogeneous)
        return f;
    // h_mu = sum_lambda K_{lambda,mu} s_lambda  =>  s-coefficients c give
    // h-coefficients K^-1 c.
    const SymFunc s = to_schur(f);
    const TPolyMatrix inv = unitriangular_inverse(kostka_number_matrix(f.degree()));
    SymFunc out(Basis::homogeneous, f.degree());
    for (int mu = 0; mu < inv.size(); ++mu) {
        TPoly c;
        for (const auto& [lambda, v] : s.terms())
            c += inv(mu, inv.position(lambda)) * v;
        out.add(inv.index()[static_cast<std::size_t>(mu)], c);
    }
    return out;
}

SymFunc convert(const SymFunc& f, Basis target) {
    if (f.basis() == target)
        return f;
    switch (target) {
    case Basis::monomial: return to_monomial(f);
    case Basis::schur: return to_schur(f);
    case Basis::homogeneous: return to_homogeneous(f);
    case Basis::hall_littlewood: {
        // HL is unitriangular against Schur; peel off the most dominant term.
        SymFunc rest = to_schur(f);
        SymFunc out(Basis::hall_littlewood, f.degree());
        while (!rest.is_zero()) {
            const auto& [lambda, c] = *rest.terms().begin();
            const Partition lead = lambda;
            const TPoly coef = c;
            out.add(lead, coef);
            rest -= coef * hall_littlewood_to_schur(lead);
        }
        return out;
    }
    default: break;
    }
    throw input_error(errc::structure, "cannot convert into the " + std::string(to_string(target)) + " basis");
}

TPoly hall_inner_product(const SymFunc& f, const SymFunc& g) {
    if (f.degree() != g.degree())
        throw input_error(errc::size_mismatch, "inner product of different degrees");
    const SymFunc h = to_homogeneous(f);
    const SymFunc m = to_monomial(g);
    TPoly out;
    for (const auto& [idx, c] : h.terms())
        out += c * m.coeff(idx);
    return out;
}

}  // namespace kschur
