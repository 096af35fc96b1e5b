#pragma once

#include <string>

#include "json.hpp"
#include "wxz/matrix.hpp"
#include "wxz/symmetry.hpp"

namespace wxz {

/// Exact scalars encode as {"re": "p/q", "im": "p/q"}; approximate ones as
/// {"re": x, "im": y, "approx": true}.
nlohmann::ordered_json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(const nlohmann::json& j);

/// {"dim": n, "rows": [[scalar, ...], ...]}
nlohmann::ordered_json matrix_to_json(const SquareMatrix& m);
SquareMatrix matrix_from_json(const nlohmann::json& j);

SquareMatrix matrix_from_file(const std::string& path);
void json_to_file(const nlohmann::ordered_json& j, const std::string& path);

/// Symmetry operations serialize as {"kind": "continuous"|"discrete"|
/// "lemma1"|"lemma2", ...} so a run can be replayed from its log.
nlohmann::ordered_json continuous_sym_to_json(const ContinuousSym& s);
nlohmann::ordered_json discrete_sym_to_json(const DiscreteSym& s);
nlohmann::ordered_json lemma1_to_json(const SquareMatrix& t, const SquareMatrix& a,
                                      Lemma1Variant variant);
nlohmann::ordered_json lemma2_to_json(const SquareMatrix& s, const SquareMatrix& a,
                                      Lemma2Variant variant);

/// Applies a serialized symmetry operation to a triple.
WxzTriple apply_sym_json(const nlohmann::json& op, const WxzTriple& triple);

} // namespace wxz
