#include "levelghost/families.hpp"

#include <cstddef>
#include <utility>

#include "levelghost/errors.hpp"

namespace levelghost {

namespace {

// Run the full decision procedure and insist on success.  Used for values
// this library constructs itself, where a rejection can only mean a bug.
GhostWitness must_verify(const StableGraph& graph, Level level, const OneCochain& m,
                         const OneCochain& a, SupportPolicy policy, const char* what) {
    auto outcome = check_junior_ghost(graph, level, m, a, policy);
    if (auto* witness = std::get_if<GhostWitness>(&outcome)) {
        return std::move(*witness);
    }
    throw InternalConsistencyError(std::string(what) + ": constructed candidate failed re-verification");
}

bool is_prime(std::int64_t n) {
    if (n < 2) {
        return false;
    }
    for (std::int64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            return false;
        }
    }
    return true;
}

} // namespace

GhostWitness lift_witness(const GhostWitness& witness, std::int64_t k) {
    if (k < 1) {
        throw DomainError("lift factor must be at least 1, got " + std::to_string(k));
    }
    if (k > Level::kMaxModulus / witness.level.modulus()) {
        throw DomainError("lift factor " + std::to_string(k) + " would push the level past " +
                          std::to_string(Level::kMaxModulus));
    }
    const Level lifted(witness.level.modulus() * k);
    OneCochain m, a;
    m.values.reserve(witness.multiplicity.values.size());
    a.values.reserve(witness.twist.values.size());
    for (Residue v : witness.multiplicity.values) {
        m.values.push_back(canon(v * k, lifted));
    }
    for (Residue v : witness.twist.values) {
        a.values.push_back(canon(v * k, lifted));
    }

    // Scaling cannot shrink the support: k*v with 0 < v < l stays nonzero
    // below k*l.  Re-verify under the policy the original support satisfies.
    const SupportPolicy policy = witness.support.size() == witness.graph.edges().size()
                                     ? SupportPolicy::Full
                                     : SupportPolicy::Any;
    GhostWitness out = must_verify(witness.graph, lifted, m, a, policy, "lift_witness");
    if (!age_equal(out.age, witness.age) || out.support != witness.support) {
        throw InternalConsistencyError("lift_witness: scaling changed the age or the support");
    }
    return out;
}

GhostWitness construct_prime_family(std::int64_t prime_level, Residue n) {
    if (prime_level <= 3 || !is_prime(prime_level)) {
        throw DomainError("the closed-form family needs a prime level greater than 3, got " +
                          std::to_string(prime_level));
    }
    const Level level(prime_level);
    if (canon(n, level) == 0) {
        throw DomainError("the closed-form family needs n != 0 mod the level");
    }
    const Residue nn = canon(n, level);
    const OneCochain m{{nn, canon(2 * nn, level), nn}};
    const OneCochain a{{1, (prime_level - 1) / 2, 1}};
    GhostWitness witness =
        must_verify(theta_graph(), level, m, a, SupportPolicy::Full, "construct_prime_family");
    if (!age_equal(witness.age, AgeValue{prime_level + 3, 2 * prime_level})) {
        throw InternalConsistencyError("construct_prime_family: age is not (p+3)/(2p)");
    }
    return witness;
}

GhostWitness preset_witness(const std::string& name) {
    if (name == "l8") {
        return must_verify(theta_graph(), Level(8), OneCochain{{1, 3, 2}}, OneCochain{{2, 2, 2}},
                           SupportPolicy::Full, "preset l8");
    }
    if (name == "l9") {
        return must_verify(theta_graph(), Level(9), OneCochain{{1, 2, 1}}, OneCochain{{1, 4, 1}},
                           SupportPolicy::Full, "preset l9");
    }
    if (name == "l12codim4") {
        return must_verify(banana_graph(4), Level(12), OneCochain{{1, 5, 2, 2}},
                           OneCochain{{2, 2, 2, 2}}, SupportPolicy::Full, "preset l12codim4");
    }
    throw DomainError("unknown preset '" + name + "' (expected l8, l9 or l12codim4)");
}

std::vector<std::string> preset_names() {
    return {"l8", "l9", "l12codim4"};
}

std::vector<GhostWitness> preset_witnesses() {
    std::vector<GhostWitness> out;
    for (const std::string& name : preset_names()) {
        out.push_back(preset_witness(name));
    }
    return out;
}

} // namespace levelghost
