#include "levelghost/criterion.hpp"

#include <algorithm>
#include <cstddef>
#include <string>

#include "levelghost/errors.hpp"

namespace levelghost {

OneCochain odot_cochain(const StableGraph& graph, Level level, const OneCochain& twist,
                        const OneCochain& multiplicity) {
    if (twist.values.size() != graph.edges().size() ||
        multiplicity.values.size() != graph.edges().size()) {
        throw DomainError("twist and multiplicity must both have one value per edge");
    }
    OneCochain out;
    out.values.reserve(graph.edges().size());
    for (std::size_t i = 0; i < graph.edges().size(); ++i) {
        out.values.push_back(odot(twist.values[i], multiplicity.values[i], level));
    }
    return out;
}

std::vector<int> support(const StableGraph& graph, Level level, const OneCochain& twist) {
    if (twist.values.size() != graph.edges().size()) {
        throw DomainError("twist must have one value per edge");
    }
    std::vector<int> out;
    for (std::size_t i = 0; i < graph.edges().size(); ++i) {
        if (canon(twist.values[i], level) != 0) {
            out.push_back(graph.edges()[i].id);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::variant<GhostWitness, RejectionReason> check_junior_ghost(
    const StableGraph& graph, Level level, const OneCochain& multiplicity,
    const OneCochain& twist, SupportPolicy policy) {
    if (!validate_stable(graph)) {
        throw DomainError("check_junior_ghost requires a stable graph");
    }
    if (twist.values.size() != graph.edges().size() ||
        multiplicity.values.size() != graph.edges().size()) {
        throw DomainError("twist and multiplicity must both have one value per edge");
    }

    const std::size_t edge_count = graph.edges().size();
    OneCochain m_canon, a_canon;
    m_canon.values.reserve(edge_count);
    a_canon.values.reserve(edge_count);
    for (std::size_t i = 0; i < edge_count; ++i) {
        m_canon.values.push_back(canon(multiplicity.values[i], level));
        a_canon.values.push_back(canon(twist.values[i], level));
    }

    for (std::size_t i = 0; i < edge_count; ++i) {
        if (!is_compatible_at_edge(a_canon.values[i], m_canon.values[i], level)) {
            return RejectionReason::Incompatible;
        }
    }
    if (!in_ker_boundary(graph, level, m_canon)) {
        return RejectionReason::NotInKerBoundary;
    }
    const OneCochain action = odot_cochain(graph, level, a_canon, m_canon);
    if (!in_im_coboundary(graph, level, action)) {
        return RejectionReason::NotInImCoboundary;
    }
    const AgeValue age = age_sum(a_canon.values, level);
    if (!is_junior(age)) {
        return RejectionReason::NotJunior;
    }
    std::vector<int> twisted = support(graph, level, a_canon);
    if (policy == SupportPolicy::Full && twisted.size() != edge_count) {
        return RejectionReason::SupportViolation;
    }

    // The stratum a ghost certifies has one boundary divisor per twisted
    // edge, so its codimension is the support size (= the edge count under
    // the Full policy).
    const int codimension = static_cast<int>(twisted.size());
    GhostWitness witness{graph,
                         level,
                         std::move(m_canon),
                         std::move(a_canon),
                         age,
                         std::move(twisted),
                         codimension,
                         GhostChecks{true, true, true, true}};
    return witness;
}

} // namespace levelghost
