#include "levelghost/residue.hpp"

#include <numeric>
#include <string>

#include "levelghost/errors.hpp"

namespace levelghost {

Level::Level(std::int64_t modulus) : modulus_(modulus) {
    if (modulus < 2) {
        throw DomainError("level must be at least 2, got " + std::to_string(modulus));
    }
    if (modulus > kMaxModulus) {
        throw DomainError("level " + std::to_string(modulus) + " exceeds the exactness bound " +
                          std::to_string(kMaxModulus));
    }
}

Residue canon(std::int64_t value, Level level) {
    const std::int64_t l = level.modulus();
    const std::int64_t r = value % l;
    return r < 0 ? r + l : r;
}

std::int64_t gcd_with_level(Residue m, Level level) {
    // std::gcd(0, l) == l, which is precisely the wanted convention.
    return std::gcd(canon(m, level), level.modulus());
}

bool is_compatible_at_edge(Residue a, Residue m, Level level) {
    return canon(a, level) % gcd_with_level(m, level) == 0;
}

Residue odot(Residue a, Residue m, Level level) {
    const std::int64_t ac = canon(a, level);
    const std::int64_t mc = canon(m, level);
    const std::int64_t d = gcd_with_level(mc, level);
    if (ac % d != 0) {
        throw CompatibilityError("twist value " + std::to_string(ac) + " is not divisible by gcd(" +
                                 std::to_string(mc) + ", " + std::to_string(level.modulus()) +
                                 ") = " + std::to_string(d));
    }
    return ((ac / d) * mc) % level.modulus();
}

AgeValue age_sum(std::span<const Residue> values, Level level) {
    std::int64_t total = 0;
    for (Residue v : values) {
        total += canon(v, level);
    }
    return AgeValue{total, level.modulus()};
}

bool is_junior(AgeValue age) {
    return 0 < age.numerator && age.numerator < age.denominator;
}

bool age_equal(AgeValue lhs, AgeValue rhs) {
    if (lhs.denominator <= 0 || rhs.denominator <= 0) {
        throw DomainError("age denominators must be positive");
    }
    return lhs.numerator * rhs.denominator == rhs.numerator * lhs.denominator;
}

} // namespace levelghost
