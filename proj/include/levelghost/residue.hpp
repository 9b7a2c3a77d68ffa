#pragma once

#include <cstdint>
#include <span>

namespace levelghost {

// A residue mod l, always held as its canonical representative in [0, l).
// Plain int64_t keeps the arithmetic transparent; canon() is the only
// sanctioned way to produce one from an arbitrary integer.
using Residue = std::int64_t;

// The level l >= 2 that every residue computation is carried out against.
// The upper bound keeps all intermediate products (< l^2) comfortably inside
// int64_t, so every operation in this library is exact.
class Level {
public:
    explicit Level(std::int64_t modulus);

    std::int64_t modulus() const { return modulus_; }

    friend bool operator==(const Level&, const Level&) = default;

    static constexpr std::int64_t kMaxModulus = 1'000'000;

private:
    std::int64_t modulus_;
};

// Canonical representative of value mod l in [0, l); exact for any int64_t.
Residue canon(std::int64_t value, Level level);

// gcd(m, l) with the convention gcd(0, l) = l: an edge of multiplicity 0
// admits only the zero twist, and l is exactly the divisor that enforces it.
std::int64_t gcd_with_level(Residue m, Level level);

// Divisibility test gcd(M(e), l) | a(e).  a = 0 is compatible with every
// multiplicity; a != 0 on a multiplicity-0 edge never is.
bool is_compatible_at_edge(Residue a, Residue m, Level level);

// a (.) m = (a / gcd(m, l)) * m  (mod l), the action of a twist value on a
// multiplicity value.  Requires compatibility; throws CompatibilityError
// otherwise.  The quotient is at most l and m is below l, so the product
// stays below l^2 and the result is exact.
Residue odot(Residue a, Residue m, Level level);

// Exact rational age of a twist: (sum of canonical values) / l.  Stored
// unreduced on purpose — 6/8 stays 6/8 — so the numerator remains the plain
// sum of per-edge values; compare across levels with age_equal.
struct AgeValue {
    std::int64_t numerator;
    std::int64_t denominator;

    // Exact field-wise equality (6/8 != 3/4 here; see age_equal).
    friend bool operator==(const AgeValue&, const AgeValue&) = default;
};

AgeValue age_sum(std::span<const Residue> values, Level level);

// Junior means strictly between 0 and 1.
bool is_junior(AgeValue age);

// Equality as rational numbers, by cross-multiplication: 4/5 == 8/10.
bool age_equal(AgeValue lhs, AgeValue rhs);

} // namespace levelghost
