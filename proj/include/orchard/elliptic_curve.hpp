#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "orchard/finite_field.hpp"

namespace orchard {

/// Point of PG(2,q), kept in one of the two normalized shapes: (x, y, 1)
/// for affine points, or exactly (0, 1, 0) for the point at infinity.
/// Normalization makes equality a plain coefficient comparison.
struct ProjPoint {
    FieldElement X, Y, Z;

    static ProjPoint infinity(const Field& f);
    static ProjPoint affine(const FieldElement& x, const FieldElement& y);

    bool is_infinity() const { return Z.is_zero(); }
    bool operator==(const ProjPoint& rhs) const { return X == rhs.X && Y == rhs.Y && Z == rhs.Z; }
    bool operator!=(const ProjPoint& rhs) const { return !(*this == rhs); }

    /// Injective key: 0 for the point at infinity, else 1 + index(x)*q + index(y).
    std::int64_t key() const;

    std::string str() const; // "X Y Z", coordinates in field-element text form
};

/// Invariant-factor presentation n1 | n2 | ... of a finite abelian group.
/// An empty factor list is the trivial group.
struct AbelianStructure {
    std::vector<std::int64_t> factors;

    std::int64_t order() const;
    std::int64_t exponent() const { return factors.empty() ? 1 : factors.back(); }
    bool is_cyclic() const { return factors.size() <= 1; }
    /// Validates n_i >= 2 and the divisibility chain.
    void validate() const;
    std::string str() const; // "2,4"; "1" for the trivial group

    bool operator==(const AbelianStructure& rhs) const { return factors == rhs.factors; }
};

enum class SupersingularTest { Deuring, Trace };

/// General Weierstrass discriminant via the b2/b4/b6/b8 covariants; valid in
/// every characteristic and reduces to -16(4A^3+27B^2) in short form.
FieldElement weierstrass_discriminant(const FieldElement& a1, const FieldElement& a2,
                                      const FieldElement& a3, const FieldElement& a4,
                                      const FieldElement& a6);

/// y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6 over F_q, nonsingular.
/// Immutable; every operation is a const member, safe for concurrent use.
class EllipticCurve {
public:
    /// Throws SingularCurve when the discriminant vanishes.
    EllipticCurve(FieldPtr field, FieldElement a1, FieldElement a2, FieldElement a3,
                  FieldElement a4, FieldElement a6);

    /// Convenience for integer coefficients (reduced mod p).
    static EllipticCurve from_ints(const FieldPtr& field, std::int64_t a1, std::int64_t a2,
                                   std::int64_t a3, std::int64_t a4, std::int64_t a6);
    /// y^2 = x^3 + Ax + B.
    static EllipticCurve short_form(const FieldPtr& field, std::int64_t A, std::int64_t B);

    const Field& field() const { return *field_; }
    const FieldPtr& field_ptr() const { return field_; }
    const FieldElement& a1() const { return a1_; }
    const FieldElement& a2() const { return a2_; }
    const FieldElement& a3() const { return a3_; }
    const FieldElement& a4() const { return a4_; }
    const FieldElement& a6() const { return a6_; }

    bool is_short_form() const { return a1_.is_zero() && a2_.is_zero() && a3_.is_zero(); }
    FieldElement discriminant() const;
    /// j = 1728 * 4A^3 / (4A^3 + 27B^2); short form, odd characteristic.
    FieldElement j_invariant() const;

    ProjPoint infinity() const { return ProjPoint::infinity(*field_); }
    ProjPoint affine(std::int64_t x, std::int64_t y) const;

    bool is_on_curve(const ProjPoint& P) const;
    ProjPoint negate(const ProjPoint& P) const;
    /// Chord-tangent group law in full generality; throws NotOnCurve if an
    /// operand fails the curve equation.
    ProjPoint add(const ProjPoint& P, const ProjPoint& Q) const;
    ProjPoint scalar_mul(std::int64_t m, const ProjPoint& P) const;

    /// All points of E(F_q): the point at infinity first, then affine points
    /// ordered by (index(x), index(y)). Capped at q <= 2^14.
    std::vector<ProjPoint> points() const;
    std::int64_t order() const { return static_cast<std::int64_t>(points().size()); }

    /// q + 1 + sum over x of the Legendre symbol of x^3+Ax+B; short form,
    /// odd characteristic only.
    std::int64_t count_legendre() const;

    /// Trace of Frobenius t = q + 1 - #E(F_q); checks the Hasse bound.
    std::int64_t trace() const;

    bool is_supersingular(SupersingularTest method) const;

    /// Invariant factors of E(F_q), computed from point orders. Capped at
    /// q <= 2^12. Cross-checks n1 | n2 and n1 | q-1 (or the full-4q-trace
    /// exception where n1 = n2 is allowed instead).
    AbelianStructure group_structure() const;

    std::string str() const;

private:
    ProjPoint add_unchecked(const ProjPoint& P, const ProjPoint& Q) const;

    FieldPtr field_;
    FieldElement a1_, a2_, a3_, a4_, a6_;
};

} // namespace orchard
