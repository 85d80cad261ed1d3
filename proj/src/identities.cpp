#include "qwhitney/identities.hpp"

#include "qwhitney/whitney_first.hpp"
#include "qwhitney/whitney_second.hpp"

namespace qwhitney {

CheckResult orthogonality_check(const ParameterSet& p, int dim) {
    const auto w1 = SquareMatrix<QLaurentPoly>::from_triangle(whitney_first::build_by_recurrence(p, dim));
    const auto w2 = SquareMatrix<QLaurentPoly>::from_triangle(whitney_second::build_by_recurrence(p, dim));
    const QLaurentPoly one(Int(1));
    for (const auto& prod : {w2 * w1, w1 * w2}) {
        for (int n = 0; n < dim; ++n) {
            for (int j = 0; j < dim; ++j) {
                const QLaurentPoly expected = n == j ? one : QLaurentPoly();
                if (prod.at(n, j) != expected) {
                    return CheckResult::fail(n, j, prod.at(n, j).to_string(), expected.to_string());
                }
            }
        }
    }
    return CheckResult::pass();
}

std::vector<QLaurentPoly> inverse_relation_apply(const ParameterSet& p,
                                                 const std::vector<QLaurentPoly>& f,
                                                 InverseDirection direction) {
    const int len = static_cast<int>(f.size());
    if (len > p.capacity()) {
        throw DimensionError("sequence of length " + std::to_string(len) +
                             " exceeds parameter capacity " + std::to_string(p.capacity()));
    }
    const TriangleW1 t = direction == InverseDirection::FirstKind
                             ? whitney_first::build_by_recurrence(p, len)
                             : whitney_second::build_by_recurrence(p, len);
    std::vector<QLaurentPoly> g(f.size());
    for (int n = 0; n < len; ++n) {
        QLaurentPoly acc;
        for (int k = 0; k <= n; ++k) {
            acc += t.at(n, k) * f[static_cast<std::size_t>(k)];
        }
        g[static_cast<std::size_t>(n)] = std::move(acc);
    }
    return g;
}

ParameterSet special_case_reduce(const std::string& name, int capacity, long long r,
                                 const std::vector<long long>& beta) {
    if (name == "q_stirling_1" || name == "q_stirling_2") {
        return ParameterSet(1, Preset::zero(), capacity);
    }
    if (name == "noncentral_q_stirling") {
        return ParameterSet(1, Preset::constant(r), capacity);
    }
    if (name == "q_comtet") {
        return ParameterSet(1, Preset::affine(beta), capacity);
    }
    throw UnknownPreset("unknown special case '" + name + "'");
}

}  // namespace qwhitney
