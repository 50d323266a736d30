#pragma once

#include <json.hpp>

#include "kschur/abc.hpp"
#include "kschur/partition.hpp"
#include "kschur/strong_order.hpp"
#include "kschur/symfunc.hpp"
#include "kschur/tpoly.hpp"

namespace kschur {

using json = nlohmann::json;

// Partitions are arrays of descending integers; [] is the empty partition.
void to_json(json& j, const Partition& p);
void from_json(const json& j, Partition& p);

// Ascending coefficient arrays, [0] for the zero polynomial. Coefficients
// beyond 64 bits are written as decimal strings.
void to_json(json& j, const TPoly& p);
void from_json(const json& j, TPoly& p);

void to_json(json& j, const Chain& c);

// {"k","weight","rows":[{"length","cells":[{"col","letter","ribbon"}]}],
//  "inner_shape"}. Parsing re-derives the strips, so cover positions are
// restored and malformed tableaux are rejected with input_error(structure).
void to_json(json& j, const Abc& a);
void from_json(const json& j, Abc& a);

// {"words","charge_words","off","beta","k_charge"}
void to_json(json& j, const AbcStatistics& s);

// {"basis","degree","k"?,"terms":[{"index","coeff"}]}, terms from the most
// dominant index down.
void to_json(json& j, const SymFunc& f);
SymFunc symfunc_from_json(const json& j);

// {"k","degree","index","matrix"}; matrix[i][j] = K_{index[i], index[j]}.
json kostka_to_json(const KostkaMatrixK& m);
KostkaMatrixK kostka_from_json(const json& j);

/// Parse with input_error(structure) for malformed text or schema.
json parse_json(std::string_view text);

}  // namespace kschur
