#include "orchard/elliptic_curve.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace orchard {

namespace {

constexpr std::int64_t kPointsCap = 1 << 14;
constexpr std::int64_t kStructureCap = 1 << 12;

std::vector<std::int64_t> prime_factors(std::int64_t n) {
    std::vector<std::int64_t> out;
    for (std::int64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

} // namespace

ProjPoint ProjPoint::infinity(const Field& f) {
    ProjPoint P;
    P.X = f.zero();
    P.Y = f.one();
    P.Z = f.zero();
    return P;
}

ProjPoint ProjPoint::affine(const FieldElement& x, const FieldElement& y) {
    ProjPoint P;
    P.X = x;
    P.Y = y;
    P.Z = x.field().one();
    return P;
}

std::int64_t ProjPoint::key() const {
    if (is_infinity()) return 0;
    return 1 + X.index() * X.field().q() + Y.index();
}

std::string ProjPoint::str() const {
    return X.str() + " " + Y.str() + " " + Z.str();
}

std::int64_t AbelianStructure::order() const {
    std::int64_t n = 1;
    for (auto f : factors) n *= f;
    return n;
}

void AbelianStructure::validate() const {
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (factors[i] < 2) fail(Errc::ParseError, "invariant factors must be >= 2");
        if (i > 0 && factors[i] % factors[i - 1] != 0)
            fail(Errc::ParseError, "invariant factor chain violates divisibility");
    }
}

std::string AbelianStructure::str() const {
    if (factors.empty()) return "1";
    std::ostringstream os;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (i) os << ',';
        os << factors[i];
    }
    return os.str();
}

FieldElement weierstrass_discriminant(const FieldElement& a1, const FieldElement& a2,
                                      const FieldElement& a3, const FieldElement& a4,
                                      const FieldElement& a6) {
    const Field& f = a1.field();
    auto k = [&](std::int64_t v) { return f.from_int(v); };
    FieldElement b2 = a1 * a1 + k(4) * a2;
    FieldElement b4 = k(2) * a4 + a1 * a3;
    FieldElement b6 = a3 * a3 + k(4) * a6;
    FieldElement b8 = a1 * a1 * a6 + k(4) * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4;
    return -(b2 * b2 * b8) - k(8) * b4 * b4 * b4 - k(27) * b6 * b6 + k(9) * b2 * b4 * b6;
}

EllipticCurve::EllipticCurve(FieldPtr field, FieldElement a1, FieldElement a2, FieldElement a3,
                             FieldElement a4, FieldElement a6)
    : field_(std::move(field)), a1_(a1), a2_(a2), a3_(a3), a4_(a4), a6_(a6) {
    if (&a1.field() != field_.get() || &a2.field() != field_.get() || &a3.field() != field_.get() ||
        &a4.field() != field_.get() || &a6.field() != field_.get())
        fail(Errc::SpecMismatch, "curve coefficients must belong to the given field");
    if (discriminant().is_zero())
        fail(Errc::SingularCurve, "discriminant vanishes");
}

EllipticCurve EllipticCurve::from_ints(const FieldPtr& field, std::int64_t a1, std::int64_t a2,
                                       std::int64_t a3, std::int64_t a4, std::int64_t a6) {
    return EllipticCurve(field, field->from_int(a1), field->from_int(a2), field->from_int(a3),
                         field->from_int(a4), field->from_int(a6));
}

EllipticCurve EllipticCurve::short_form(const FieldPtr& field, std::int64_t A, std::int64_t B) {
    return from_ints(field, 0, 0, 0, A, B);
}

FieldElement EllipticCurve::discriminant() const {
    return weierstrass_discriminant(a1_, a2_, a3_, a4_, a6_);
}

FieldElement EllipticCurve::j_invariant() const {
    if (!is_short_form() || !field_->has_odd_characteristic())
        fail(Errc::WrongForm, "j-invariant requires short form in odd characteristic");
    auto k = [&](std::int64_t v) { return field_->from_int(v); };
    FieldElement a3c = k(4) * a4_ * a4_ * a4_;
    FieldElement den = a3c + k(27) * a6_ * a6_;
    return k(1728) * a3c * den.inverse();
}

ProjPoint EllipticCurve::affine(std::int64_t x, std::int64_t y) const {
    return ProjPoint::affine(field_->from_int(x), field_->from_int(y));
}

bool EllipticCurve::is_on_curve(const ProjPoint& P) const {
    if (&P.X.field() != field_.get()) fail(Errc::SpecMismatch, "point belongs to a different field");
    if (P.is_infinity()) return true;
    const FieldElement &x = P.X, &y = P.Y;
    FieldElement lhs = y * y + a1_ * x * y + a3_ * y;
    FieldElement rhs = ((x + a2_) * x + a4_) * x + a6_;
    return lhs == rhs;
}

ProjPoint EllipticCurve::negate(const ProjPoint& P) const {
    if (P.is_infinity()) return P;
    return ProjPoint::affine(P.X, -P.Y - a1_ * P.X - a3_);
}

ProjPoint EllipticCurve::add(const ProjPoint& P, const ProjPoint& Q) const {
    if (!is_on_curve(P) || !is_on_curve(Q)) fail(Errc::NotOnCurve, "addition operand not on curve");
    return add_unchecked(P, Q);
}

ProjPoint EllipticCurve::add_unchecked(const ProjPoint& P, const ProjPoint& Q) const {
    if (P.is_infinity()) return Q;
    if (Q.is_infinity()) return P;
    const FieldElement &x1 = P.X, &y1 = P.Y, &x2 = Q.X, &y2 = Q.Y;

    FieldElement lambda = x1.field().zero();
    if (x1 == x2) {
        if (y2 == -y1 - a1_ * x1 - a3_) return infinity(); // Q = -P (covers 2-torsion doubling)
        // Tangent slope; the denominator is nonzero since P is not 2-torsion.
        FieldElement num = field_->from_int(3) * x1 * x1 + field_->from_int(2) * a2_ * x1 + a4_ - a1_ * y1;
        FieldElement den = y1 + y1 + a1_ * x1 + a3_;
        lambda = num * den.inverse();
    } else {
        lambda = (y2 - y1) * (x2 - x1).inverse();
    }
    FieldElement x3 = lambda * lambda + a1_ * lambda - a2_ - x1 - x2;
    FieldElement y3 = lambda * (x1 - x3) - y1 - a1_ * x3 - a3_;
    return ProjPoint::affine(x3, y3);
}

ProjPoint EllipticCurve::scalar_mul(std::int64_t m, const ProjPoint& P) const {
    if (!is_on_curve(P)) fail(Errc::NotOnCurve, "scalar multiplication operand not on curve");
    if (m < 0) return scalar_mul(-m, negate(P));
    ProjPoint acc = infinity();
    ProjPoint base = P;
    while (m > 0) {
        if (m & 1) acc = add_unchecked(acc, base);
        base = add_unchecked(base, base);
        m >>= 1;
    }
    return acc;
}

std::vector<ProjPoint> EllipticCurve::points() const {
    const std::int64_t q = field_->q();
    if (q > static_cast<std::int64_t>(effective_q_cap(kPointsCap)))
        fail(Errc::TooLarge, "point enumeration capped at q <= 2^14");

    std::vector<ProjPoint> out;
    out.push_back(infinity());
    auto els = field_->elements();

    if (a1_.is_zero()) {
        // y^2 + a3 y is independent of x: bucket its values once, then walk x.
        std::vector<std::vector<std::uint32_t>> by_value(static_cast<std::size_t>(q));
        for (std::int64_t yi = 0; yi < q; ++yi) {
            const FieldElement& y = els[static_cast<std::size_t>(yi)];
            FieldElement v = y * y + a3_ * y;
            by_value[static_cast<std::size_t>(v.index())].push_back(static_cast<std::uint32_t>(yi));
        }
        for (std::int64_t xi = 0; xi < q; ++xi) {
            const FieldElement& x = els[static_cast<std::size_t>(xi)];
            FieldElement rhs = ((x + a2_) * x + a4_) * x + a6_;
            for (std::uint32_t yi : by_value[static_cast<std::size_t>(rhs.index())])
                out.push_back(ProjPoint::affine(x, els[yi]));
        }
        return out;
    }

    for (std::int64_t xi = 0; xi < q; ++xi) {
        const FieldElement& x = els[static_cast<std::size_t>(xi)];
        FieldElement rhs = ((x + a2_) * x + a4_) * x + a6_;
        FieldElement a1x_a3 = a1_ * x + a3_;
        for (std::int64_t yi = 0; yi < q; ++yi) {
            const FieldElement& y = els[static_cast<std::size_t>(yi)];
            if (y * y + a1x_a3 * y == rhs) out.push_back(ProjPoint::affine(x, y));
        }
    }
    return out;
}

std::int64_t EllipticCurve::count_legendre() const {
    if (!field_->has_odd_characteristic())
        fail(Errc::EvenCharacteristic, "Legendre count requires odd characteristic");
    if (!is_short_form()) fail(Errc::WrongForm, "Legendre count requires short form");
    std::int64_t total = field_->q() + 1;
    for (const auto& x : field_->elements()) {
        FieldElement fx = (x * x + a4_) * x + a6_;
        total += fx.legendre();
    }
    return total;
}

std::int64_t EllipticCurve::trace() const {
    std::int64_t t = field_->q() + 1 - order();
    if (t * t > 4 * field_->q()) fail(Errc::Internal, "Hasse bound violated");
    return t;
}

bool EllipticCurve::is_supersingular(SupersingularTest method) const {
    if (method == SupersingularTest::Trace) {
        std::int64_t t = trace();
        std::int64_t p = field_->p();
        return ((t % p) + p) % p == 0;
    }
    // Deuring criterion: coefficient of x^(p-1) in f(x)^((p-1)/2) for
    // y^2 = f(x); only meaningful for odd characteristic short form.
    if (!field_->has_odd_characteristic() || !is_short_form())
        fail(Errc::WrongForm, "Deuring criterion requires short form and p > 2");
    const std::int64_t p = field_->p();
    std::vector<FieldElement> f = {a6_, a4_, field_->zero(), field_->one()};
    std::vector<FieldElement> acc = {field_->one()};
    for (std::int64_t e = 0; e < (p - 1) / 2; ++e) {
        std::vector<FieldElement> next(acc.size() + 3, field_->zero());
        for (std::size_t i = 0; i < acc.size(); ++i) {
            if (acc[i].is_zero()) continue;
            for (std::size_t j = 0; j < 4; ++j) next[i + j] += acc[i] * f[j];
        }
        acc = std::move(next);
    }
    return acc[static_cast<std::size_t>(p - 1)].is_zero();
}

AbelianStructure EllipticCurve::group_structure() const {
    const std::int64_t q = field_->q();
    if (q > static_cast<std::int64_t>(effective_q_cap(kStructureCap)))
        fail(Errc::TooLarge, "group structure capped at q <= 2^12");

    auto pts = points();
    const std::int64_t N = static_cast<std::int64_t>(pts.size());
    if (N == 1) return AbelianStructure{};

    auto primes = prime_factors(N);
    std::int64_t exponent = 1;
    for (const auto& P : pts) {
        if (P.is_infinity()) continue;
        std::int64_t d = N;
        for (auto ell : primes)
            while (d % ell == 0 && scalar_mul(d / ell, P).is_infinity()) d /= ell;
        exponent = std::lcm(exponent, d);
        if (exponent == N) break;
    }

    if (N % exponent != 0) fail(Errc::Internal, "group exponent does not divide order");
    std::int64_t n1 = N / exponent;
    if (n1 > 1 && exponent % n1 != 0)
        fail(Errc::Internal, "point orders are not consistent with rank <= 2");

    // Sanity: n1 | q-1 except in the full double-root trace case t^2 = 4q
    // with even extension degree, where n1 = n2 is the allowed shape.
    if (n1 > 1 && (q - 1) % n1 != 0) {
        std::int64_t t = q + 1 - N;
        bool ruck_exception = field_->degree() % 2 == 0 && t * t == 4 * q && n1 == exponent;
        if (!ruck_exception) fail(Errc::Internal, "small invariant factor violates structure theory");
    }

    AbelianStructure s;
    if (n1 > 1) s.factors.push_back(n1);
    if (exponent > 1) s.factors.push_back(exponent);
    return s;
}

std::string EllipticCurve::str() const {
    std::ostringstream os;
    os << field_->str() << ';' << a1_.str() << ',' << a2_.str() << ',' << a3_.str() << ','
       << a4_.str() << ',' << a6_.str();
    return os.str();
}

} // namespace orchard
