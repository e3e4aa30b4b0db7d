#pragma once

#include <cmath>
#include <optional>
#include <string>
#include <string_view>

#include "psombor/bounds.hpp"

namespace psombor::detail {

struct CheckSpec {
    std::string_view id;
    std::string_view statement;
    PDomain domain = PDomain::all;
};

BoundReport not_applicable(const GraphAnalysis& a, const CheckSpec& spec, std::string reason);

// Fills holds, slack and the equality fields. A non-finite bound makes the
// report not applicable.
BoundReport evaluate(const GraphAnalysis& a, const CheckSpec& spec, double value, std::optional<double> lower,
                     std::optional<double> upper, Side expected, const BoundOptions& opt,
                     std::optional<double> holds_tol = std::nullopt);

inline double pow2(double e) { return std::exp2(e); }

}  // namespace psombor::detail
