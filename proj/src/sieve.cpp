#include "levelghost/sieve.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "levelghost/errors.hpp"

namespace levelghost {

std::vector<CandidateTriple> enumerate_candidate_triples(Level level) {
    const std::int64_t l = level.modulus();
    if (l < 4) {
        throw DomainError("candidate triples need a level of at least 4, got " +
                          std::to_string(l));
    }
    std::vector<CandidateTriple> out;
    for (std::int64_t a = 1; a < l; ++a) {
        for (std::int64_t b = a; b < l; ++b) {
            for (std::int64_t c = b; c < l; ++c) {
                if (a + b + c < l) {
                    out.push_back({{a, b, c}});
                }
            }
        }
    }
    return out;
}

std::vector<SieveAdmissible> sieve_triple(Level level, const CandidateTriple& triple) {
    const std::int64_t l = level.modulus();

    // Distinct arrangements of the multiset, with the outer mirror symmetry
    // (a1, a2, a3) ~ (a3, a2, a1) deduplicated by keeping a1 <= a3.
    std::set<std::array<Residue, 3>> arrangements;
    std::array<Residue, 3> p = triple.parts;
    std::sort(p.begin(), p.end());
    do {
        if (p[0] <= p[2]) {
            arrangements.insert(p);
        }
    } while (std::next_permutation(p.begin(), p.end()));

    std::vector<SieveAdmissible> out;
    for (const auto& [a1, a2, a3] : arrangements) {
        for (Residue m1 = 1; m1 < l; ++m1) {
            if (!is_compatible_at_edge(a1, m1, level)) {
                continue;
            }
            const Residue x = odot(a1, m1, level);
            for (Residue m2 = 1; m2 < l; ++m2) {
                if (!is_compatible_at_edge(a2, m2, level) ||
                    canon(x + odot(a2, m2, level), level) != 0) {
                    continue;
                }
                for (Residue m3 = 1; m3 < l; ++m3) {
                    if (!is_compatible_at_edge(a3, m3, level) || odot(a3, m3, level) != x) {
                        continue;
                    }
                    const bool in_kernel = canon(m1 + m3 - m2, level) == 0;
                    out.push_back({{a1, a2, a3}, {m1, m2, m3}, in_kernel});
                }
            }
        }
    }
    return out;
}

SieveReport run_sieve(Level level) {
    SieveReport report;
    report.level = level.modulus();
    for (const CandidateTriple& triple : enumerate_candidate_triples(level)) {
        SieveEntry entry{triple, sieve_triple(level, triple)};
        if (entry.survives()) {
            ++report.survivor_count;
        }
        for (const SieveAdmissible& adm : entry.admissible) {
            report.any_kernel_admissible = report.any_kernel_admissible || adm.in_kernel;
        }
        report.entries.push_back(std::move(entry));
    }
    return report;
}

} // namespace levelghost
