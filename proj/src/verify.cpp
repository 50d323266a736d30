#include "kschur/verify.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <map>
#include <optional>
#include <sstream>

#include "kschur/charge.hpp"
#include "kschur/core.hpp"
#include "kschur/error.hpp"
#include "kschur/strong_order.hpp"
#include "kschur/symfunc.hpp"

namespace kschur {

std::string_view to_string(Suite s) noexcept {
    switch (s) {
    case Suite::paper_examples: return "paper-examples";
    case Suite::classical: return "classical";
    case Suite::triangularity: return "triangularity";
    case Suite::structure: return "structure";
    case Suite::charge_consistency: return "charge-consistency";
    case Suite::basis: return "basis";
    case Suite::all: return "all";
    }
    return "unknown";
}

Suite parse_suite(std::string_view name) {
    for (Suite s : {Suite::paper_examples, Suite::classical, Suite::triangularity, Suite::structure,
                    Suite::charge_consistency, Suite::basis, Suite::all})
        if (to_string(s) == name)
            return s;
    throw input_error(errc::structure, "unknown suite '" + std::string(name) + "'");
}

std::pair<int, int> parse_k_range(std::string_view text) {
    auto number = [&](std::string_view s) {
        int v = 0;
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec != std::errc{} || ptr != s.data() + s.size() || v < 1)
            throw input_error(errc::bound_violation, "bad k range '" + std::string(text) + "'");
        return v;
    };
    const auto dots = text.find("..");
    if (dots == std::string_view::npos) {
        const int k = number(text);
        return {k, k};
    }
    const int lo = number(text.substr(0, dots));
    const int hi = number(text.substr(dots + 2));
    if (lo > hi)
        throw input_error(errc::bound_violation, "empty k range '" + std::string(text) + "'");
    return {lo, hi};
}

bool VerifyReport::passed() const noexcept {
    return std::all_of(checks.begin(), checks.end(), [](const CheckOutcome& c) { return c.passed; });
}

bool VerifyReport::anomalous() const noexcept {
    return std::any_of(checks.begin(), checks.end(), [](const CheckOutcome& c) { return c.anomalous; });
}

int VerifyReport::failures() const noexcept {
    return static_cast<int>(
        std::count_if(checks.begin(), checks.end(), [](const CheckOutcome& c) { return !c.passed; }));
}

namespace {

using Failure = std::optional<std::string>;

class Recorder {
public:
    Recorder(VerifyReport& report, std::string suite) : report_(report), suite_(std::move(suite)) {}

    void check(std::string name, const std::function<Failure()>& body) {
        CheckOutcome out{suite_, std::move(name), true, false, {}};
        try {
            if (auto failure = body()) {
                out.passed = false;
                out.detail = *failure;
            }
        } catch (const anomaly& e) {
            out.passed = false;
            out.anomalous = true;
            out.detail = std::string(to_string(e.code())) + ": " + e.what();
        } catch (const std::exception& e) {
            out.passed = false;
            out.detail = e.what();
        }
        report_.checks.push_back(std::move(out));
    }

private:
    VerifyReport& report_;
    std::string suite_;
};

template <class T>
std::string show(const std::vector<T>& v) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < v.size(); ++i)
        os << (i ? "," : "") << v[i];
    os << ')';
    return os.str();
}

std::string show(const std::vector<CounterCell>& cells) {
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < cells.size(); ++i)
        os << (i ? "," : "") << '(' << cells[i].row << ',' << cells[i].col << ')';
    os << '}';
    return os.str();
}

template <class T>
Failure expect_eq(const T& got, const T& want, const std::string& what) {
    if (got == want)
        return std::nullopt;
    return what + ": got " + show(got) + ", expected " + show(want);
}

Failure expect_int(long long got, long long want, const std::string& what) {
    if (got == want)
        return std::nullopt;
    return what + ": got " + std::to_string(got) + ", expected " + std::to_string(want);
}

std::string join_lines(std::initializer_list<const char*> lines) {
    std::string s;
    for (const char* l : lines)
        s += std::string(l) + '\n';
    return s;
}

/// The ABC of the given weight whose text rendering is `picture`.
std::optional<Abc> find_abc(int k, std::vector<int> weight, const std::string& picture) {
    for (Abc& a : abc_enumerate(k, weight))
        if (render_text(a) == picture)
            return std::move(a);
    return std::nullopt;
}

std::vector<CounterCell> cells(std::initializer_list<std::pair<int, int>> list) {
    std::vector<CounterCell> out;
    for (auto [r, c] : list)
        out.push_back({r, c});
    return out;
}

std::string chain_str(const Chain& c) {
    std::string s = "[";
    for (std::size_t i = 0; i < c.cores.size(); ++i)
        s += (i ? "," : "") + c.cores[i].shape().str();
    return s + "]";
}

// ---------------------------------------------------------------------------

const std::string kAbc3331 = join_lines({". 4 2 1 1", ". . 4 3 2' 2' 2' 2", ". . . 4' 4' 4 3' 3' 3",
                                         ". . . . . . 4 4 4' 4' 4"});
const std::string kExt3331 = join_lines({". 4 2 1 1 1' 1' 1' 1' 1", ". . 4 3 2' 2' 2' 2 2' 2' 2 2 2",
                                         ". . . 4' 4' 4 3' 3' 3 3' 3' 3' 3 3",
                                         ". . . . . . 4 4 4' 4' 4 4 4 4 4 4"});
const std::string kAbc1117 = join_lines({"2 1 1", "5 3 2 2", ". 4 3' 3' 3", ". 6 5 4 4",
                                         ". 7' 7' 5' 5' 5", ". . . 6 6' 6'", ". . . 7' 7' 7"});
const std::string kExt1117 =
    join_lines({"2 1 1 1' 1' 1", "5 3 2 2 2' 2' 2", ". 4 3' 3' 3 3 3 3", ". 6 5 4 4 4' 4' 4",
                ". 7' 7' 5' 5' 5 5 5 5", ". . . 6 6' 6' 6 6 6", ". . . 7' 7' 7 7 7 7"});
const std::string kAbc1115 = join_lines({"3 1 1", ". 2 2' 2'", ". 4 3 3", ". 5' 5' 4 4", ". . . 5 5' 5'"});

void paper_examples(Recorder& rec) {
    rec.check("charge of (3,5,1,4,2)", [] { return expect_int(charge_word(std::vector{3, 5, 1, 4, 2}), 6, "ch"); });
    rec.check("charge subwords of (5,2,3,4,4,1,1,1,2,2,3)", []() -> Failure {
        const Word w{5, 2, 3, 4, 4, 1, 1, 1, 2, 2, 3};
        const auto sub = charge_subwords(w);
        const std::vector<Word> want{{5, 2, 4, 1, 3}, {3, 4, 1, 2}, {1, 2}};
        if (sub != want)
            return "unexpected subwords";
        return expect_int(charge_word(w), 8, "ch");
    });
    rec.check("core of (6,2,2,1) at k=6", []() -> Failure {
        const Core c = core_from_bounded(Partition{6, 2, 2, 1}, 6);
        if (c.shape() != Partition{8, 2, 2, 1})
            return "got " + c.shape().str();
        if (bounded_from_core(c) != Partition{6, 2, 2, 1})
            return "round trip gave " + bounded_from_core(c).str();
        return std::nullopt;
    });
    rec.check("bottom strong strip (8,3)/(4,2) at k=5", []() -> Failure {
        auto ch = bottom_strong_chain(Core(Partition{4, 2}, 6), Core(Partition{3}, 6), 5);
        if (!ch)
            return "no chain";
        const std::string s = chain_str(*ch);
        if (s != "[(4,2),(7,2),(8,3)]")
            return "got " + s;
        return std::nullopt;
    });
    rec.check("(5,2,1)/(3) is not a bottom strong strip at k=3", []() -> Failure {
        auto ch = bottom_strong_chain(Core(Partition{3}, 4), Core(Partition{2, 1}, 4), 3);
        if (ch)
            return "found chain " + chain_str(*ch);
        return std::nullopt;
    });
    rec.check("bottom strong strip (6,3,1,1)/(4,1,1,1) at k=3", []() -> Failure {
        auto ch = bottom_strong_chain(Core(Partition{4, 1, 1, 1}, 4), Core(Partition{3, 1, 1}, 4), 3);
        if (!ch)
            return "no chain";
        const std::string s = chain_str(*ch);
        if (s != "[(4,1,1,1),(6,3,1,1)]")
            return "got " + s;
        return std::nullopt;
    });
    rec.check("ABC displays of k-weight (3,3,1), (4,4,2,1), (1^7)", []() -> Failure {
        const std::vector<std::tuple<int, std::vector<int>, std::string>> displays{
            {5, {3, 3, 1}, join_lines({"3 3 2 1 1", ". . . 3 2' 2' 2' 2", ". . . . 3 3 3' 3' 3"})},
            {6, {4, 4, 2, 1},
             join_lines({". 4 2 2 1 1", ". . 3 3 3 3' 3' 3' 2 2", ". . 4 4 4' 4' 4 4 3 3 3 3' 3' 3'",
                         ". . . . . . . . 4 4 4' 4' 4 4"})},
            {3, {1, 1, 1, 1, 1, 1, 1}, kAbc1117},
            {7, {1, 1, 1, 1, 1, 1, 1},
             join_lines({"2 1 1 1 1 1 1", "4 3 2 2 2 2 2 2", "5 4 3 3 3 3 3' 3' 3", "6 6 5 4 4 4 4 4 4",
                         ". 7 7 5 5 5 5 5' 5' 5", ". . . 6 6 6 6 6 6' 6'", ". . . 7 7 7' 7' 7 7 7"})},
        };
        for (const auto& [k, weight, picture] : displays) {
            auto a = find_abc(k, weight, picture);
            if (!a)
                return "missing ABC of " + std::to_string(k) + "-weight " + show(weight) + ":\n" + picture;
            if (auto v = abc_validate(*a); !v)
                return v.diagnostic;
        }
        return std::nullopt;
    });
    rec.check("ext, V_A and E-sets of the 5-weight (3,3,3,1) ABC", []() -> Failure {
        auto a = find_abc(5, {3, 3, 3, 1}, kAbc3331);
        if (!a)
            return "ABC not enumerated";
        const ExtendedAbc e = extend(*a);
        if (render_text(e) != kExt3331)
            return "ext(A) differs:\n" + render_text(e);
        if (auto f = expect_eq(e.marked,
                               cells({{1, 7}, {1, 8}, {1, 9}, {2, 6}, {2, 7}, {2, 10}, {3, 8}, {3, 11}, {3, 12},
                                      {4, 10}}),
                               "V_A"))
            return f;
        const auto es = e_sets(e);
        const std::vector<std::vector<CounterCell>> want{cells({{1, 9}, {2, 7}, {3, 12}, {4, 10}}),
                                                         cells({{1, 8}, {2, 6}, {3, 11}}),
                                                         cells({{1, 7}, {2, 10}, {3, 8}})};
        if (es.size() != want.size())
            return "expected three E-sets";
        for (std::size_t r = 0; r < want.size(); ++r)
            if (auto f = expect_eq(es[r].cells, want[r], "E^" + std::to_string(r + 1)))
                return f;
        const auto chs = word_charges(e);
        int total = 0;
        for (int c : chs)
            total += c;
        return expect_int(total, 5, "sum of word charges");
    });
    rec.check("V_A and reading word of the 3-weight (1^7) ABC", []() -> Failure {
        auto a = find_abc(3, {1, 1, 1, 1, 1, 1, 1}, kAbc1117);
        if (!a)
            return "ABC not enumerated";
        const ExtendedAbc e = extend(*a);
        if (render_text(e) != kExt1117)
            return "ext(A) differs:\n" + render_text(e);
        if (auto f = expect_eq(e.marked, cells({{1, 5}, {2, 6}, {3, 4}, {4, 7}, {5, 5}, {6, 6}, {7, 5}}), "V_A"))
            return f;
        const auto es = e_sets(e);
        return expect_eq(reading_word(es.at(0)), Word{3, 7, 5, 6, 1, 2, 4}, "w(A)");
    });
    rec.check("off, beta and 3-charge of the 3-weight (1^5) ABC", []() -> Failure {
        auto a = find_abc(3, {1, 1, 1, 1, 1}, kAbc1115);
        if (!a)
            return "ABC not enumerated";
        const AbcStatistics s = statistics(*a);
        if (auto f = expect_int(s.off, 1, "off"))
            return f;
        if (auto f = expect_int(s.beta, 1, "beta"))
            return f;
        if (auto f = expect_int(s.charge, 5, "charge"))
            return f;
        return expect_int(s.k_charge, 3, "k-charge");
    });
}

// ---------------------------------------------------------------------------

Failure compare_matrices(const TPolyMatrix& got, const TPolyMatrix& want) {
    if (got.index() != want.index())
        return "index mismatch";
    for (int i = 0; i < got.size(); ++i)
        for (int j = 0; j < got.size(); ++j)
            if (got(i, j) != want(i, j))
                return "entry " + got.index()[static_cast<std::size_t>(i)].str() + "," +
                       got.index()[static_cast<std::size_t>(j)].str() + ": got " + got(i, j).str() +
                       ", expected " + want(i, j).str();
    return std::nullopt;
}

void classical(Recorder& rec, const VerifyOptions& o) {
    for (int n = 1; n <= o.max_n; ++n)
        for (int k : {n, n + 1})
            rec.check("K^(" + std::to_string(k) + ") = Kostka-Foulkes, n=" + std::to_string(n), [&, n, k] {
                return compare_matrices(kostka_matrix_k(k, n, o.threads, o.rule).matrix, kostka_foulkes_matrix(n));
            });
}

void triangularity(Recorder& rec, const VerifyOptions& o) {
    for (int k = o.k_min; k <= o.k_max; ++k)
        for (int n = 1; n <= o.max_n; ++n)
            rec.check("K^(" + std::to_string(k) + ") unitriangular, n=" + std::to_string(n), [&, k, n]() -> Failure {
                const TPolyMatrix m = kostka_matrix_k(k, n, o.threads, o.rule).matrix;
                const auto& idx = m.index();
                for (int i = 0; i < m.size(); ++i)
                    for (int j = 0; j < m.size(); ++j) {
                        const TPoly& e = m(i, j);
                        if (!e.has_nonnegative_coeffs())
                            return "negative coefficient at " + idx[i].str() + "," + idx[j].str();
                        if (!e.is_zero() && !dominance_leq(idx[static_cast<std::size_t>(j)],
                                                          idx[static_cast<std::size_t>(i)]))
                            return "entry " + idx[i].str() + "," + idx[j].str() + " = " + e.str() +
                                   " outside the dominance order";
                    }
                return std::nullopt;
            });
}

void structure(Recorder& rec, const VerifyOptions& o) {
    const int max_deg = std::min(12, 2 * o.max_n);
    for (int k = std::max(1, o.k_min); k <= o.k_max; ++k) {
        const int p = k + 1;
        const std::string tag = ", k=" + std::to_string(k);
        rec.check("strong covers are translated ribbons" + tag, [&, k, p]() -> Failure {
            for (int d = 0; d < max_deg; ++d)
                for (const Core& rho : enumerate_cores(p, d))
                    for (const Core& up : strong_covers_within(rho, strip_target(rho.shape(), k), k)) {
                        auto v = validate_cover(make_cover(rho, up), k);
                        if (!v)
                            return rho.shape().str() + " < " + up.shape().str() + ": " + v.diagnostic;
                    }
            return std::nullopt;
        });
        rec.check("core growth law" + tag, [&, k, p]() -> Failure {
            for (int d = 0; d <= max_deg; ++d)
                for (const Core& rho : enumerate_cores(p, d)) {
                    const Partition up = strip_target(rho.shape(), k);
                    if (!is_p_core(up, p) || degree(up, p) != d + k)
                        return rho.shape().str() + " -> " + up.str();
                }
            return std::nullopt;
        });
        rec.check("bounded partitions and cores round trip" + tag, [&, k]() -> Failure {
            for (int n = 0; n <= max_deg; ++n)
                for (const Partition& lambda : partitions_of(n, k)) {
                    const Core c = core_from_bounded(lambda, k);
                    if (bounded_from_core(c) != lambda || degree(c) != n)
                        return lambda.str() + " -> " + c.shape().str();
                }
            return std::nullopt;
        });
        rec.check("ABC counts invariant under weight reordering" + tag, [&, k]() -> Failure {
            for (int n = 1; n <= o.max_n; ++n)
                for (const auto& alpha : compositions_of(n, k)) {
                    std::vector<int> sorted = alpha;
                    std::sort(sorted.begin(), sorted.end(), std::greater<>());
                    std::map<Partition, int> a, b;
                    for (const Abc& x : abc_enumerate(k, alpha))
                        ++a[x.inner];
                    for (const Abc& x : abc_enumerate(k, sorted))
                        ++b[x.inner];
                    if (a != b)
                        return "weights " + show(alpha) + " and " + show(sorted);
                }
            return std::nullopt;
        });
        rec.check("ABC strips, offsets and k-charge" + tag, [&, k]() -> Failure {
            for (int n = 1; n <= o.max_n; ++n)
                for (const Partition& mu : partitions_of(n, k))
                    for (const Abc& a : abc_enumerate(k, mu.parts())) {
                        if (auto v = abc_validate(a); !v)
                            return v.diagnostic;
                        const AbcStatistics s = statistics(a, o.rule);
                        if (k == n && (s.off != 0 || s.beta != 0))
                            return "off/beta nonzero for weight " + mu.str() + ":\n" + render_text(a);
                        if (s.k_charge < 0)
                            return "negative k-charge:\n" + render_text(a);
                    }
            return std::nullopt;
        });
    }
}

void charge_consistency(Recorder& rec, const VerifyOptions& o) {
    for (int k = std::max(1, o.k_min); k <= o.k_max; ++k)
        rec.check("word charge equals column statistic, k=" + std::to_string(k), [&, k]() -> Failure {
            for (int n = 1; n <= o.max_n; ++n)
                for (const Partition& mu : partitions_of(n, k))
                    for (const Abc& a : abc_enumerate(k, mu.parts())) {
                        const ExtendedAbc e = extend(a);
                        for (const ESet& es : e_sets(e)) {
                            const Word w = reading_word(es, o.rule);
                            if (charge_permutation(w) != column_statistic(es))
                                return "E^" + std::to_string(es.r) + " " + show(es.cells) + " of\n" +
                                       render_text(a);
                        }
                    }
            return std::nullopt;
        });
}

// ---------------------------------------------------------------------------

struct KData {
    TPolyMatrix kk;
    TPolyMatrix inv;
    std::map<Partition, SymFunc, CanonicalOrder> kschur_m;  // s^(k)_lambda[X;t] in m
};

void basis(Recorder& rec, const VerifyOptions& o) {
    const int k_hi = std::min(o.k_max, 4);
    for (int n = 1; n <= o.max_n; ++n) {
        std::map<Partition, SymFunc, CanonicalOrder> hl_m;
        for (const Partition& mu : partitions_of(n)) {
            SymFunc h(Basis::hall_littlewood, n);
            h.add(mu, 1);
            hl_m.emplace(mu, to_monomial(h));
        }
        const std::string tn = "n=" + std::to_string(n);
        rec.check("H_mu[X;1] = h_mu, " + tn, [&]() -> Failure {
            for (const auto& [mu, f] : hl_m)
                if (f.at(1) != h_to_monomial(mu))
                    return mu.str();
            return std::nullopt;
        });
        for (int k = 1; k <= k_hi; ++k) {
            const std::string tag = ", k=" + std::to_string(k) + ", " + tn;
            std::optional<KData> data;
            rec.check("k-Schur functions at parameter t" + tag, [&, k]() -> Failure {
                const auto km = kostka_matrix_k(k, n, o.threads, o.rule);
                KData d{km.matrix, unitriangular_inverse(km.matrix), {}};
                if (!d.inv.is_upper_unitriangular())
                    return "inverse is not unitriangular";
                for (int l = 0; l < d.kk.size(); ++l) {
                    SymFunc f(Basis::monomial, n);
                    for (int mu = 0; mu < d.kk.size(); ++mu)
                        f += d.inv(mu, l) * hl_m.at(d.kk.index()[static_cast<std::size_t>(mu)]);
                    d.kschur_m.emplace(d.kk.index()[static_cast<std::size_t>(l)], std::move(f));
                }
                data = std::move(d);
                return std::nullopt;
            });
            if (!data)
                continue;
            const KData& d = *data;
            rec.check("H_mu = sum K(t) s^(k)" + tag, [&]() -> Failure {
                for (int mu = 0; mu < d.kk.size(); ++mu) {
                    const Partition& pm = d.kk.index()[static_cast<std::size_t>(mu)];
                    SymFunc sum(Basis::monomial, n);
                    for (int l = 0; l < d.kk.size(); ++l)
                        sum += d.kk(l, mu) * d.kschur_m.at(d.kk.index()[static_cast<std::size_t>(l)]);
                    if (sum != hl_m.at(pm))
                        return pm.str();
                }
                return std::nullopt;
            });
            rec.check("h_mu = sum K(1) s^(k)[X;1]" + tag, [&]() -> Failure {
                for (int mu = 0; mu < d.kk.size(); ++mu) {
                    const Partition& pm = d.kk.index()[static_cast<std::size_t>(mu)];
                    SymFunc sum(Basis::monomial, n);
                    for (int l = 0; l < d.kk.size(); ++l)
                        sum += TPoly(d.kk(l, mu).eval(1)) *
                               d.kschur_m.at(d.kk.index()[static_cast<std::size_t>(l)]).at(1);
                    if (sum != h_to_monomial(pm))
                        return pm.str();
                }
                return std::nullopt;
            });
            rec.check("dual k-Schur duality" + tag, [&, k]() -> Failure {
                for (const auto& [lambda, f] : d.kschur_m) {
                    const SymFunc dual = dual_kschur_to_monomial(lambda, k);
                    for (const auto& [mu, g] : d.kschur_m) {
                        const TPoly ip = hall_inner_product(g.at(1), dual);
                        if (ip != TPoly(lambda == mu ? 1 : 0))
                            return "<" + lambda.str() + "," + mu.str() + "> = " + ip.str();
                    }
                }
                return std::nullopt;
            });
            if (k >= n)
                rec.check("s^(k)_lambda = s_lambda" + tag, [&]() -> Failure {
                    for (const auto& [lambda, f] : d.kschur_m)
                        if (f != schur_to_monomial(lambda))
                            return lambda.str();
                    return std::nullopt;
                });
        }
    }
}

}  // namespace

VerifyReport run_suite(Suite suite, const VerifyOptions& options) {
    if (options.max_n < 0 || options.k_min < 1 || options.k_min > options.k_max)
        throw input_error(errc::bound_violation, "bad verification bounds");
    VerifyReport report;
    auto run = [&](Suite s) {
        Recorder rec(report, std::string(to_string(s)));
        switch (s) {
        case Suite::paper_examples: paper_examples(rec); break;
        case Suite::classical: classical(rec, options); break;
        case Suite::triangularity: triangularity(rec, options); break;
        case Suite::structure: structure(rec, options); break;
        case Suite::charge_consistency: charge_consistency(rec, options); break;
        case Suite::basis: basis(rec, options); break;
        case Suite::all: break;
        }
    };
    if (suite == Suite::all) {
        for (Suite s : {Suite::paper_examples, Suite::classical, Suite::triangularity, Suite::structure,
                        Suite::charge_consistency, Suite::basis})
            run(s);
    } else {
        run(suite);
    }
    return report;
}

}  // namespace kschur
