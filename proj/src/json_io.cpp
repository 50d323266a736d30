#include "kschur/json_io.hpp"

#include <map>
#include <limits>

#include "kschur/error.hpp"

namespace kschur {

namespace {

[[noreturn]] void schema_error(const std::string& what) {
    throw input_error(errc::structure, "json: " + what);
}

template <class T>
T field(const json& j, const char* name) {
    if (!j.is_object() || !j.contains(name))
        schema_error(std::string("missing field '") + name + "'");
    try {
        return j.at(name).get<T>();
    } catch (const json::exception& e) {
        schema_error(std::string("field '") + name + "': " + e.what());
    }
}

}  // namespace

void to_json(json& j, const Partition& p) { j = p.vec(); }

void from_json(const json& j, Partition& p) {
    if (!j.is_array())
        schema_error("partition must be an array");
    std::vector<int> parts;
    for (const auto& x : j) {
        if (!x.is_number_integer())
            schema_error("partition parts must be integers");
        parts.push_back(x.get<int>());
    }
    p = Partition(std::move(parts));
}

void to_json(json& j, const TPoly& p) {
    j = json::array();
    if (p.is_zero()) {
        j.push_back(0);
        return;
    }
    for (const Integer& c : p.coeffs()) {
        if (c >= std::numeric_limits<std::int64_t>::min() && c <= std::numeric_limits<std::int64_t>::max())
            j.push_back(static_cast<std::int64_t>(c));
        else
            j.push_back(c.str());
    }
}

void from_json(const json& j, TPoly& p) {
    if (!j.is_array())
        schema_error("polynomial must be an array of coefficients");
    std::vector<Integer> coeffs;
    for (const auto& c : j) {
        if (c.is_number_integer())
            coeffs.emplace_back(c.get<std::int64_t>());
        else if (c.is_string()) {
            try {
                coeffs.emplace_back(c.get<std::string>());
            } catch (const std::exception&) {
                schema_error("bad coefficient '" + c.get<std::string>() + "'");
            }
        } else
            schema_error("coefficients must be integers");
    }
    p = TPoly(std::move(coeffs));
}

void to_json(json& j, const Chain& c) {
    j = json::array();
    for (const Core& core : c.cores)
        j.push_back(core.shape());
}

void to_json(json& j, const Abc& a) {
    json rows = json::array();
    for (const AbcRow& r : a.rows) {
        json cells = json::array();
        for (const AbcCell& c : r.cells)
            cells.push_back({{"col", c.col}, {"letter", c.letter}, {"ribbon", c.ribbon}});
        rows.push_back({{"length", r.length}, {"cells", std::move(cells)}});
    }
    j = {{"k", a.k}, {"weight", a.weight}, {"rows", std::move(rows)}, {"inner_shape", a.inner}};
}

namespace {

// Same letters everywhere and the same grouping of cells into ribbons.
bool same_layout(const Abc& candidate, const Abc& parsed) {
    if (candidate.rows.size() != parsed.rows.size())
        return false;
    std::map<int, int> forward, backward;
    for (std::size_t r = 0; r < parsed.rows.size(); ++r) {
        const AbcRow& x = candidate.rows[r];
        const AbcRow& y = parsed.rows[r];
        if (x.length != y.length || x.cells.size() != y.cells.size())
            return false;
        for (std::size_t c = 0; c < x.cells.size(); ++c) {
            if (x.cells[c].col != y.cells[c].col || x.cells[c].letter != y.cells[c].letter)
                return false;
            auto [f, fnew] = forward.try_emplace(y.cells[c].ribbon, x.cells[c].ribbon);
            auto [b, bnew] = backward.try_emplace(x.cells[c].ribbon, y.cells[c].ribbon);
            if (f->second != x.cells[c].ribbon || b->second != y.cells[c].ribbon)
                return false;
        }
    }
    return true;
}

}  // namespace

void from_json(const json& j, Abc& a) {
    Abc parsed;
    parsed.k = field<int>(j, "k");
    parsed.weight = field<std::vector<int>>(j, "weight");
    parsed.inner = field<Partition>(j, "inner_shape");
    if (!j.at("rows").is_array())
        schema_error("'rows' must be an array");
    for (const auto& r : j.at("rows")) {
        AbcRow row;
        row.length = field<int>(r, "length");
        if (!r.contains("cells") || !r.at("cells").is_array())
            schema_error("row without 'cells'");
        for (const auto& c : r.at("cells"))
            row.cells.push_back({field<int>(c, "col"), field<int>(c, "letter"), field<int>(c, "ribbon")});
        parsed.rows.push_back(std::move(row));
    }
    if (parsed.k < 1)
        throw input_error(errc::bound_violation, "json: k must be positive");
    std::optional<Partition> inner;
    try {
        inner = parsed.inner;
        for (Abc& candidate : abc_enumerate(parsed.k, parsed.weight, inner)) {
            if (same_layout(candidate, parsed)) {
                a = std::move(candidate);
                return;
            }
        }
    } catch (const input_error& e) {
        schema_error(e.what());
    }
    schema_error("rows do not form an ABC of the stated weight and inner shape");
}

void to_json(json& j, const AbcStatistics& s) {
    j = {{"words", s.words},
         {"charge_words", s.charge_words},
         {"off", s.off},
         {"beta", s.beta},
         {"k_charge", s.k_charge}};
}

void to_json(json& j, const SymFunc& f) {
    json terms = json::array();
    for (const auto& [idx, c] : f.terms())
        terms.push_back({{"index", idx}, {"coeff", c}});
    j = {{"basis", to_string(f.basis())}, {"degree", f.degree()}};
    if (f.k() > 0)
        j["k"] = f.k();
    j["terms"] = std::move(terms);
}

SymFunc symfunc_from_json(const json& j) {
    const Basis basis = parse_basis(field<std::string>(j, "basis"));
    const int k = j.contains("k") ? field<int>(j, "k") : 0;
    SymFunc f(basis, field<int>(j, "degree"), k);
    if (!j.contains("terms") || !j.at("terms").is_array())
        schema_error("missing 'terms'");
    for (const auto& t : j.at("terms"))
        f.add(field<Partition>(t, "index"), field<TPoly>(t, "coeff"));
    return f;
}

json kostka_to_json(const KostkaMatrixK& m) {
    json matrix = json::array();
    for (int i = 0; i < m.matrix.size(); ++i) {
        json row = json::array();
        for (int c = 0; c < m.matrix.size(); ++c)
            row.push_back(m.matrix(i, c));
        matrix.push_back(std::move(row));
    }
    return {{"k", m.k}, {"degree", m.n}, {"index", m.matrix.index()}, {"matrix", std::move(matrix)}};
}

KostkaMatrixK kostka_from_json(const json& j) {
    KostkaMatrixK out{field<int>(j, "k"), field<int>(j, "degree"),
                      TPolyMatrix(field<std::vector<Partition>>(j, "index"))};
    const auto rows = field<std::vector<std::vector<TPoly>>>(j, "matrix");
    const auto n = static_cast<std::size_t>(out.matrix.size());
    if (rows.size() != n)
        schema_error("matrix does not match the index");
    for (std::size_t i = 0; i < n; ++i) {
        if (rows[i].size() != n)
            schema_error("matrix row does not match the index");
        for (std::size_t c = 0; c < n; ++c)
            out.matrix(static_cast<int>(i), static_cast<int>(c)) = rows[i][c];
    }
    return out;
}

json parse_json(std::string_view text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        schema_error(e.what());
    }
}

}  // namespace kschur
