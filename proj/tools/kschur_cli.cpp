#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "kschur/abc.hpp"
#include "kschur/charge.hpp"
#include "kschur/core.hpp"
#include "kschur/error.hpp"
#include "kschur/json_io.hpp"
#include "kschur/strong_order.hpp"
#include "kschur/symfunc.hpp"
#include "kschur/verify.hpp"

using namespace kschur;

namespace {

enum exit_code : int { ok = 0, bad_input = 1, verification_failed = 2, internal_anomaly = 3 };

struct Options {
    int k = 0;
    std::string partition, inner, base, weight, inner_shape, lambda, mu, basis = "hl", format = "text";
    std::string word, rule = "largest-column", suite = "all", k_range = "2..4";
    std::string direction, kind, charge_mode;
    int degree = 0;
    int max_n = 6;
    unsigned threads = 1;
    std::optional<long long> t_eval;
    bool stats = false;
};

Word parse_word(const std::string& text) {
    Word w;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            std::size_t used = 0;
            w.push_back(std::stoi(tok, &used));
            if (used != tok.size())
                throw std::invalid_argument(tok);
        } catch (const std::exception&) {
            throw input_error(errc::structure, "bad word entry '" + tok + "'");
        }
    }
    return w;
}

InsertionRule parse_rule(const std::string& s) {
    if (s == "largest-column")
        return InsertionRule::largest_column;
    if (s == "largest-index")
        return InsertionRule::largest_index;
    throw input_error(errc::structure, "unknown insertion rule '" + s + "'");
}

void require_format(const std::string& f, std::initializer_list<const char*> allowed) {
    for (const char* a : allowed)
        if (f == a)
            return;
    throw input_error(errc::structure, "format '" + f + "' is not available here");
}

TPoly evaluated(const TPoly& p, const std::optional<long long>& t) {
    return t ? TPoly(p.eval(Integer(*t))) : p;
}

int cmd_core(const Options& o) {
    const Partition p = parse_partition(o.partition);
    if (o.direction == "to-core")
        std::cout << json(core_from_bounded(p, o.k).shape()).dump() << '\n';
    else
        std::cout << json(bounded_from_core(p, o.k)).dump() << '\n';
    return ok;
}

int cmd_strip(const Options& o) {
    const int p = o.k + 1;
    const auto chain = bottom_strong_chain(Core(parse_partition(o.inner), p), Core(parse_partition(o.base), p), o.k);
    if (!chain)
        std::cout << "not a strip\n";
    else
        std::cout << json(*chain).dump() << '\n';
    return ok;
}

int cmd_abc(const Options& o) {
    require_format(o.format, {"json", "text", "latex"});
    const Word weight = parse_word(o.weight);
    std::optional<Partition> inner;
    if (!o.inner_shape.empty())
        inner = parse_partition(o.inner_shape);
    const InsertionRule rule = parse_rule(o.rule);
    const auto abcs = abc_enumerate(o.k, weight, inner);
    if (o.format == "json") {
        json out = json::array();
        for (const Abc& a : abcs) {
            json j = a;
            if (o.stats)
                j["statistics"] = statistics(a, rule);
            out.push_back(std::move(j));
        }
        std::cout << out.dump() << '\n';
        return ok;
    }
    bool first = true;
    for (const Abc& a : abcs) {
        if (!first)
            std::cout << '\n';
        first = false;
        std::cout << (o.format == "latex" ? render_latex(a) + "\n" : render_text(a));
        if (o.stats) {
            const AbcStatistics s = statistics(a, rule);
            std::cout << "inner " << a.inner.str() << "  words";
            for (const Word& w : s.words)
                std::cout << ' ' << json(w).dump();
            std::cout << "  charges " << json(s.charge_words).dump() << "  off " << s.off << "  beta " << s.beta
                      << "  k-charge " << s.k_charge << '\n';
        }
    }
    std::cout << abcs.size() << (abcs.size() == 1 ? " ABC\n" : " ABCs\n");
    return ok;
}

int cmd_kostka(const Options& o) {
    require_format(o.format, {"json", "text", "latex"});
    KostkaMatrixK m = kostka_matrix_k(o.k, o.degree, o.threads, parse_rule(o.rule));
    for (int i = 0; i < m.matrix.size(); ++i)
        for (int j = 0; j < m.matrix.size(); ++j)
            m.matrix(i, j) = evaluated(m.matrix(i, j), o.t_eval);
    const auto& idx = m.matrix.index();
    if (o.format == "json") {
        std::cout << kostka_to_json(m).dump() << '\n';
    } else if (o.format == "text") {
        for (int i = 0; i < m.matrix.size(); ++i) {
            std::cout << idx[static_cast<std::size_t>(i)].str() << ':';
            for (int j = 0; j < m.matrix.size(); ++j)
                std::cout << (j ? " | " : " ") << m.matrix(i, j).str();
            std::cout << '\n';
        }
    } else {
        std::cout << "\\begin{tabular}{c|" << std::string(idx.size(), 'c') << "}\n";
        for (const Partition& p : idx)
            std::cout << " & $" << p.str() << "$";
        std::cout << " \\\\\n\\hline\n";
        for (int i = 0; i < m.matrix.size(); ++i) {
            std::cout << '$' << idx[static_cast<std::size_t>(i)].str() << '$';
            for (int j = 0; j < m.matrix.size(); ++j)
                std::cout << " & $" << m.matrix(i, j).str() << '$';
            std::cout << " \\\\\n";
        }
        std::cout << "\\end{tabular}\n";
    }
    return ok;
}

int cmd_expand(const Options& o) {
    require_format(o.format, {"json", "text"});
    const Partition lambda = parse_partition(o.lambda);
    const Basis target = parse_basis(o.basis);
    SymFunc f(Basis::monomial, lambda.size());
    if (o.kind == "kschur-t") {
        f = kschur_t(lambda, o.k);
    } else if (o.kind == "dual-kschur") {
        f = dual_kschur_to_monomial(lambda, o.k);
    } else {
        const Basis b = o.kind == "hall-littlewood" ? Basis::hall_littlewood
                        : o.kind == "schur"         ? Basis::schur
                                                    : Basis::homogeneous;
        f = SymFunc(b, lambda.size());
        f.add(lambda, 1);
    }
    f = convert(f, target);
    if (o.t_eval)
        f = f.at(Integer(*o.t_eval));
    if (o.format == "json")
        std::cout << json(f).dump() << '\n';
    else
        std::cout << f.str() << '\n';
    return ok;
}

int cmd_charge(const Options& o) {
    if (o.charge_mode == "kf") {
        std::cout << kostka_foulkes(parse_partition(o.lambda), parse_partition(o.mu)).str() << '\n';
        return ok;
    }
    const Word w = parse_word(o.word);
    if (o.charge_mode == "word") {
        std::cout << charge_word(w) << '\n';
    } else {
        json out = charge_subwords(w);
        std::cout << out.dump() << '\n';
    }
    return ok;
}

int cmd_verify(const Options& o) {
    VerifyOptions vo;
    vo.max_n = o.max_n;
    std::tie(vo.k_min, vo.k_max) = parse_k_range(o.k_range);
    vo.threads = o.threads;
    vo.rule = parse_rule(o.rule);
    const VerifyReport report = run_suite(parse_suite(o.suite), vo);
    for (const CheckOutcome& c : report.checks) {
        std::cout << (c.passed ? "PASS " : c.anomalous ? "ANOMALY " : "FAIL ") << c.suite << ": " << c.name << '\n';
        if (!c.passed)
            std::cout << "  " << c.detail << '\n';
    }
    std::cout << report.checks.size() - static_cast<std::size_t>(report.failures()) << '/' << report.checks.size()
              << " checks passed\n";
    if (report.passed())
        return ok;
    return report.anomalous() ? internal_anomaly : verification_failed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"k-Schur functions with a parameter t via affine Bruhat counter-tableaux"};
    app.require_subcommand(1);
    Options o;
    const auto add_threads = [&](CLI::App* c) {
        c->add_option("--threads", o.threads, "Worker threads for matrix assembly")->check(CLI::Range(1u, 256u));
    };
    const auto add_rule = [&](CLI::App* c) {
        c->add_option("--rule", o.rule, "Reading-word insertion rule: largest-column or largest-index");
    };

    auto* core = app.add_subcommand("core", "Map between k-bounded partitions and (k+1)-cores");
    core->add_option("direction", o.direction, "to-core or to-bounded")
        ->required()
        ->check(CLI::IsMember({"to-core", "to-bounded"}));
    core->add_option("--k", o.k)->required();
    core->add_option("--partition", o.partition)->required();

    auto* strip = app.add_subcommand("strip", "Bottom strong strip (k + base_1, base) / inner");
    strip->add_option("--k", o.k)->required();
    strip->add_option("--inner", o.inner)->required();
    strip->add_option("--base", o.base)->required();

    auto* abc = app.add_subcommand("abc", "Enumerate ABCs of a k-weight");
    abc->add_option("--k", o.k)->required();
    abc->add_option("--weight", o.weight, "Comma-separated k-weight")->required();
    abc->add_option("--inner-shape", o.inner_shape, "Restrict to one inner shape (a core)");
    abc->add_flag("--stats", o.stats, "Print reading words, off, beta and k-charge");
    abc->add_option("--format", o.format, "json, text or latex");
    add_rule(abc);

    auto* kostka = app.add_subcommand("kostka", "k-Kostka matrix K^(k)(t) of a degree");
    kostka->add_option("--k", o.k)->required();
    kostka->add_option("--degree", o.degree)->required();
    kostka->add_option("--format", o.format, "json, text or latex");
    kostka->add_option("--t-eval", o.t_eval, "Specialise t to an integer");
    add_threads(kostka);
    add_rule(kostka);

    auto* expand = app.add_subcommand("expand", "Expand a symmetric function in a basis");
    expand->add_option("kind", o.kind)
        ->required()
        ->check(CLI::IsMember({"kschur-t", "dual-kschur", "hall-littlewood", "schur", "h"}));
    expand->add_option("--k", o.k, "Required for kschur-t and dual-kschur");
    expand->add_option("--lambda", o.lambda)->required();
    expand->add_option("--basis", o.basis, "m, h, s or hl");
    expand->add_option("--t-eval", o.t_eval, "Specialise t to an integer");
    expand->add_option("--format", o.format, "json or text");

    auto* charge = app.add_subcommand("charge", "Charge of words and Kostka-Foulkes polynomials");
    charge->require_subcommand(1);
    auto* cword = charge->add_subcommand("word", "Charge of a word with partition content");
    cword->add_option("word", o.word)->required();
    auto* csub = charge->add_subcommand("subwords", "Charge subwords of a word");
    csub->add_option("word", o.word)->required();
    auto* ckf = charge->add_subcommand("kf", "Kostka-Foulkes polynomial K_{lambda,mu}(t)");
    ckf->add_option("--lambda", o.lambda)->required();
    ckf->add_option("--mu", o.mu)->required();

    auto* verify = app.add_subcommand("verify", "Run verification suites");
    verify->add_option("--suite", o.suite,
                       "paper-examples, classical, triangularity, structure, charge-consistency, basis or all");
    verify->add_option("--max-n", o.max_n)->check(CLI::Range(0, 8));
    verify->add_option("--k-range", o.k_range, "a..b");
    add_threads(verify);
    add_rule(verify);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return bad_input;
    }

    try {
        if (*core)
            return cmd_core(o);
        if (*strip)
            return cmd_strip(o);
        if (*abc)
            return cmd_abc(o);
        if (*kostka)
            return cmd_kostka(o);
        if (*expand) {
            if ((o.kind == "kschur-t" || o.kind == "dual-kschur") && o.k < 1)
                throw input_error(errc::bound_violation, o.kind + " needs --k");
            return cmd_expand(o);
        }
        if (*charge) {
            o.charge_mode = *cword ? "word" : *csub ? "subwords" : "kf";
            return cmd_charge(o);
        }
        if (*verify)
            return cmd_verify(o);
    } catch (const input_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return bad_input;
    } catch (const anomaly& e) {
        std::cerr << "anomaly (" << to_string(e.code()) << "): " << e.what() << '\n';
        return internal_anomaly;
    }
    return ok;
}
