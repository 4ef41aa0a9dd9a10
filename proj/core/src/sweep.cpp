#include "primcoh/sweep.hpp"

#include "primcoh/cone.hpp"

#include <limits>

namespace primcoh {

std::vector<SweepRow> sweep(const BundleData& e, const BundleData& l, const ModelSpec& spec,
                            int n_max, bool compute_dims, std::string_view e_name,
                            std::string_view l_name) {
    if (l.rank != 1) {
        throw RankError("sweep needs a rank-1 bundle for L, \"" + std::string(l_name) +
                        "\" has rank " + std::to_string(l.rank));
    }
    if (const auto r = check_cone_flat(e, spec); !r.passed) {
        throw FlatnessError("bundle \"" + std::string(e_name) + "\" is not cone-flat: " +
                            to_string(r.failures.front()));
    }
    if (const auto r = check_cone_flat(l, spec); !r.passed) {
        throw FlatnessError("bundle \"" + std::string(l_name) + "\" is not cone-flat: " +
                            to_string(r.failures.front()));
    }

    const Polynomial poly = phi_det_poly(e, l);
    std::vector<SweepRow> rows;
    for (int n = 0; n <= n_max; ++n) {
        SweepRow row;
        row.n = n;
        row.det_phi = poly(Rational(n));
        row.invertible = row.det_phi != 0;
        if (compute_dims) {
            const ConeComplex c = assemble(tensor_power(e, l, n), spec);
            row.dims = cohomology_dims(c);
            if (row.invertible) {
                for (int h : *row.dims) {
                    if (h != 0) {
                        throw Error("internal: invertible Phi at n = " + std::to_string(n) +
                                    " but nonzero cohomology — vanishing violated");
                    }
                }
            }
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

std::optional<int> threshold(const BundleData& e, const BundleData& l) {
    if (l.rank != 1) {
        throw RankError("threshold needs a rank-1 bundle for L, got rank " +
                        std::to_string(l.rank));
    }
    const Polynomial poly = phi_det_poly(e, l);
    if (poly.is_zero()) return std::nullopt; // det vanishes for every n
    const auto root = largest_nonnegative_integer_root(poly);
    if (!root) return 0;
    if (*root >= std::numeric_limits<int>::max()) {
        throw Error("threshold exceeds supported range");
    }
    return static_cast<int>(*root) + 1;
}

} // namespace primcoh
