#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "orchard/arrangement.hpp"

namespace orchard {

struct BigIntDivMod;

/// Arbitrary-precision signed integer, sign + little-endian 32-bit limbs.
/// Only what exact rational geometry needs: ring operations, division with
/// remainder, gcd, small-modulus reduction and decimal text.
class BigInt {
public:
    BigInt() = default;
    BigInt(std::int64_t v);
    static BigInt from_string(const std::string& text);

    bool is_zero() const { return limbs_.empty(); }
    bool is_negative() const { return sign_ < 0; }
    int sign() const { return sign_; }

    BigInt operator+(const BigInt& rhs) const;
    BigInt operator-(const BigInt& rhs) const;
    BigInt operator*(const BigInt& rhs) const;
    BigInt operator-() const;

    /// Truncated division: quotient rounds toward zero, remainder keeps the
    /// dividend's sign; rhs must be nonzero.
    BigIntDivMod divmod(const BigInt& rhs) const;
    BigInt operator/(const BigInt& rhs) const;
    BigInt operator%(const BigInt& rhs) const;

    /// |this| mod m for a small positive modulus.
    std::uint32_t mod_u32(std::uint32_t m) const;

    static BigInt gcd(BigInt a, BigInt b); // nonnegative

    int compare(const BigInt& rhs) const; // -1, 0, +1
    bool operator==(const BigInt& rhs) const { return compare(rhs) == 0; }
    bool operator!=(const BigInt& rhs) const { return compare(rhs) != 0; }
    bool operator<(const BigInt& rhs) const { return compare(rhs) < 0; }

    std::string str() const;

private:
    int compare_magnitude(const BigInt& rhs) const;
    static std::vector<std::uint32_t> add_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b);
    static std::vector<std::uint32_t> sub_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b);
    void trim();

    int sign_ = 0;                     // 0 iff limbs_ empty
    std::vector<std::uint32_t> limbs_; // little-endian, no high zero limbs
};

struct BigIntDivMod {
    BigInt quotient;
    BigInt remainder;
};

inline BigInt BigInt::operator/(const BigInt& rhs) const { return divmod(rhs).quotient; }
inline BigInt BigInt::operator%(const BigInt& rhs) const { return divmod(rhs).remainder; }

/// Exact rational in lowest terms with positive denominator.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(std::int64_t v) : num_(v), den_(1) {}
    Rational(BigInt num, BigInt den);
    /// Parses "a" or "a/b" with optional sign.
    static Rational parse(const std::string& text);

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_integer() const;

    Rational operator+(const Rational& rhs) const;
    Rational operator-(const Rational& rhs) const;
    Rational operator*(const Rational& rhs) const;
    Rational operator-() const;
    bool operator==(const Rational& rhs) const { return num_ == rhs.num_ && den_ == rhs.den_; }
    bool operator!=(const Rational& rhs) const { return !(*this == rhs); }

    std::string str() const;

private:
    void canonicalize();

    BigInt num_;
    BigInt den_;
};

/// Point of the rational projective plane: affine (x, y) or the point at
/// infinity (0:1:0).
struct RationalPoint {
    Rational x;
    Rational y;
    bool at_infinity = false;

    static RationalPoint infinity() { return {Rational(), Rational(), true}; }
    static RationalPoint affine(Rational px, Rational py) { return {std::move(px), std::move(py), false}; }

    bool operator==(const RationalPoint& rhs) const;
};

/// Exact collinearity: the 3x3 determinant with rows (x, y, 1) - or
/// (0, 1, 0) for the point at infinity - vanishes identically.
bool rational_collinear(const RationalPoint& a, const RationalPoint& b, const RationalPoint& c);

/// All 3-rich lines among up to 64 pairwise distinct points, as sorted index
/// triples in lexicographic order. Four collinear points raise FourCollinear
/// (such a set cannot come from a nonsingular cubic).
std::vector<std::array<int, 3>> rational_three_rich_lines(const std::vector<RationalPoint>& points);

/// True when the point satisfies y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x
/// + a6 exactly over the rationals (integer coefficients a1,a2,a3,a4,a6).
bool rational_on_curve(const RationalPoint& point, const std::array<std::int64_t, 5>& coeffs);

/// Reduction mod p into PG(2,p): each coordinate becomes num * den^-1.
/// A denominator divisible by p raises DenominatorDivisibleByP.
std::vector<ProjPoint> rational_reduce_mod_p(const std::vector<RationalPoint>& points,
                                             const FieldPtr& prime_field);

/// Reduces the rational configuration mod p and compares its 3-rich lines
/// (computed on the rational side) with the geometric scan of the reduced
/// points; when curve coefficients are given the reduced points are also
/// checked against the reduced curve equation.
struct ReductionReport {
    std::int64_t p = 0;
    bool points_distinct = false;
    bool on_reduced_curve = false; // vacuously true without a curve
    bool lines_match = false;
    int n_points = 0;
    int n_lines = 0;
    bool ok() const { return points_distinct && on_reduced_curve && lines_match; }
};
ReductionReport check_reduction_mod_p(const std::vector<RationalPoint>& points,
                                      const std::vector<std::array<int, 3>>& rational_lines,
                                      std::int64_t p,
                                      const std::optional<std::array<std::int64_t, 5>>& curve_coeffs);

} // namespace orchard
