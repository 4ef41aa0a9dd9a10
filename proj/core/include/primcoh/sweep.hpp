#pragma once

#include "primcoh/bundle.hpp"
#include "primcoh/model.hpp"
#include "primcoh/polynomial.hpp"

#include <optional>
#include <string_view>
#include <vector>

namespace primcoh {

// One row of the tensor-power sweep. invertible <=> det_phi != 0, and every
// invertible row with computed dims has all dims zero (checked on every run).
struct SweepRow {
    int n = 0;
    Rational det_phi;
    bool invertible = false;
    std::optional<std::vector<int>> dims;

    bool operator==(const SweepRow&) const = default;
};

// Rows for n = 0..n_max: det from the evaluated determinant polynomial, and
// (when compute_dims) the full cone cohomology of tensor_power(e, l, n).
// RankError unless l has rank 1; FlatnessError naming the failing bundle when
// e or l is not cone-flat for spec's eta.
std::vector<SweepRow> sweep(const BundleData& e, const BundleData& l, const ModelSpec& spec,
                            int n_max, bool compute_dims, std::string_view e_name = "E",
                            std::string_view l_name = "L");

// Smallest n0 >= 0 with det(Phi^E + n f I) != 0 for every integer n >= n0;
// nullopt ("never") iff the determinant polynomial is identically zero, which
// happens only when f = 0 and det Phi^E = 0.
std::optional<int> threshold(const BundleData& e, const BundleData& l);

} // namespace primcoh
