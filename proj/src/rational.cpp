#include "orchard/rational.hpp"

#include <algorithm>
#include <unordered_set>

namespace orchard {

// ---------------------------------------------------------------------------
// BigInt

BigInt::BigInt(std::int64_t v) {
    if (v == 0) return;
    sign_ = v < 0 ? -1 : 1;
    std::uint64_t mag = v < 0 ? ~static_cast<std::uint64_t>(v) + 1 : static_cast<std::uint64_t>(v);
    while (mag != 0) {
        limbs_.push_back(static_cast<std::uint32_t>(mag & 0xffffffffu));
        mag >>= 32;
    }
}

void BigInt::trim() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
    if (limbs_.empty()) sign_ = 0;
}

int BigInt::compare_magnitude(const BigInt& rhs) const {
    if (limbs_.size() != rhs.limbs_.size())
        return limbs_.size() < rhs.limbs_.size() ? -1 : 1;
    for (std::size_t i = limbs_.size(); i-- > 0;) {
        if (limbs_[i] != rhs.limbs_[i]) return limbs_[i] < rhs.limbs_[i] ? -1 : 1;
    }
    return 0;
}

int BigInt::compare(const BigInt& rhs) const {
    if (sign_ != rhs.sign_) return sign_ < rhs.sign_ ? -1 : 1;
    int mag = compare_magnitude(rhs);
    return sign_ >= 0 ? mag : -mag;
}

std::vector<std::uint32_t> BigInt::add_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
    std::vector<std::uint32_t> out;
    out.reserve(std::max(a.size(), b.size()) + 1);
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < std::max(a.size(), b.size()); ++i) {
        std::uint64_t s = carry;
        if (i < a.size()) s += a[i];
        if (i < b.size()) s += b[i];
        out.push_back(static_cast<std::uint32_t>(s & 0xffffffffu));
        carry = s >> 32;
    }
    if (carry) out.push_back(static_cast<std::uint32_t>(carry));
    return out;
}

// Requires |a| >= |b|.
std::vector<std::uint32_t> BigInt::sub_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
    std::vector<std::uint32_t> out;
    out.reserve(a.size());
    std::int64_t borrow = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::int64_t s = static_cast<std::int64_t>(a[i]) - borrow - (i < b.size() ? b[i] : 0);
        if (s < 0) {
            s += static_cast<std::int64_t>(1) << 32;
            borrow = 1;
        } else {
            borrow = 0;
        }
        out.push_back(static_cast<std::uint32_t>(s));
    }
    return out;
}

BigInt BigInt::operator+(const BigInt& rhs) const {
    if (is_zero()) return rhs;
    if (rhs.is_zero()) return *this;
    BigInt out;
    if (sign_ == rhs.sign_) {
        out.sign_ = sign_;
        out.limbs_ = add_mag(limbs_, rhs.limbs_);
    } else {
        int mag = compare_magnitude(rhs);
        if (mag == 0) return BigInt();
        const BigInt& big = mag > 0 ? *this : rhs;
        const BigInt& small = mag > 0 ? rhs : *this;
        out.sign_ = big.sign_;
        out.limbs_ = sub_mag(big.limbs_, small.limbs_);
    }
    out.trim();
    return out;
}

BigInt BigInt::operator-() const {
    BigInt out = *this;
    out.sign_ = -out.sign_;
    return out;
}

BigInt BigInt::operator-(const BigInt& rhs) const { return *this + (-rhs); }

BigInt BigInt::operator*(const BigInt& rhs) const {
    if (is_zero() || rhs.is_zero()) return BigInt();
    BigInt out;
    out.sign_ = sign_ * rhs.sign_;
    out.limbs_.assign(limbs_.size() + rhs.limbs_.size(), 0);
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
        std::uint64_t carry = 0;
        for (std::size_t j = 0; j < rhs.limbs_.size(); ++j) {
            std::uint64_t cur = static_cast<std::uint64_t>(limbs_[i]) * rhs.limbs_[j] +
                                out.limbs_[i + j] + carry;
            out.limbs_[i + j] = static_cast<std::uint32_t>(cur & 0xffffffffu);
            carry = cur >> 32;
        }
        std::size_t k = i + rhs.limbs_.size();
        while (carry) {
            std::uint64_t cur = out.limbs_[k] + carry;
            out.limbs_[k] = static_cast<std::uint32_t>(cur & 0xffffffffu);
            carry = cur >> 32;
            ++k;
        }
    }
    out.trim();
    return out;
}

BigIntDivMod BigInt::divmod(const BigInt& rhs) const {
    if (rhs.is_zero()) fail(Errc::Internal, "division by zero");
    if (compare_magnitude(rhs) < 0) return {BigInt(), *this};

    // Binary long division on magnitudes.
    BigInt rhs_mag = rhs;
    rhs_mag.sign_ = 1;
    const std::size_t bits = limbs_.size() * 32;
    BigInt q, r;
    q.limbs_.assign(limbs_.size(), 0);
    for (std::size_t i = bits; i-- > 0;) {
        // r = (r << 1) | bit_i(|this|)
        std::uint32_t carry = (limbs_[i / 32] >> (i % 32)) & 1u;
        for (std::size_t j = 0; j < r.limbs_.size(); ++j) {
            std::uint32_t next = r.limbs_[j] >> 31;
            r.limbs_[j] = (r.limbs_[j] << 1) | carry;
            carry = next;
        }
        if (carry) r.limbs_.push_back(carry);
        r.sign_ = 1;
        r.trim();
        if (!r.is_zero() && r.compare_magnitude(rhs_mag) >= 0) {
            r.limbs_ = sub_mag(r.limbs_, rhs_mag.limbs_);
            r.trim();
            q.limbs_[i / 32] |= 1u << (i % 32);
        }
    }
    q.sign_ = 1;
    q.trim();
    if (!q.is_zero()) q.sign_ = sign_ * rhs.sign_;
    if (!r.is_zero()) r.sign_ = sign_;
    return {q, r};
}

std::uint32_t BigInt::mod_u32(std::uint32_t m) const {
    if (m == 0) fail(Errc::Internal, "zero modulus");
    std::uint64_t r = 0;
    for (std::size_t i = limbs_.size(); i-- > 0;) r = ((r << 32) | limbs_[i]) % m;
    return static_cast<std::uint32_t>(r);
}

BigInt BigInt::gcd(BigInt a, BigInt b) {
    a.sign_ = a.is_zero() ? 0 : 1;
    b.sign_ = b.is_zero() ? 0 : 1;
    while (!b.is_zero()) {
        BigInt r = a % b;
        a = b;
        b = r;
        a.sign_ = a.is_zero() ? 0 : 1;
        b.sign_ = b.is_zero() ? 0 : 1;
    }
    return a;
}

BigInt BigInt::from_string(const std::string& text) {
    std::size_t pos = 0;
    int sign = 1;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
        if (text[pos] == '-') sign = -1;
        ++pos;
    }
    if (pos == text.size()) fail(Errc::ParseError, "empty integer literal");
    BigInt out;
    BigInt ten(10);
    for (; pos < text.size(); ++pos) {
        if (text[pos] < '0' || text[pos] > '9')
            fail(Errc::ParseError, "bad digit in integer literal");
        out = out * ten + BigInt(text[pos] - '0');
    }
    if (sign < 0) out = -out;
    return out;
}

std::string BigInt::str() const {
    if (is_zero()) return "0";
    std::string digits;
    BigInt cur = *this;
    cur.sign_ = 1;
    BigInt base(1000000000);
    while (!cur.is_zero()) {
        auto [q, r] = cur.divmod(base);
        std::uint64_t chunk = 0;
        for (std::size_t i = r.limbs_.size(); i-- > 0;) chunk = (chunk << 32) | r.limbs_[i];
        for (int i = 0; i < 9; ++i) {
            digits.push_back(static_cast<char>('0' + chunk % 10));
            chunk /= 10;
        }
        cur = q;
    }
    while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
    if (sign_ < 0) digits.push_back('-');
    std::reverse(digits.begin(), digits.end());
    return digits;
}

// ---------------------------------------------------------------------------
// Rational

Rational::Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
    canonicalize();
}

void Rational::canonicalize() {
    if (den_.is_zero()) fail(Errc::ParseError, "zero denominator");
    if (den_.is_negative()) {
        num_ = -num_;
        den_ = -den_;
    }
    if (num_.is_zero()) {
        den_ = BigInt(1);
        return;
    }
    BigInt g = BigInt::gcd(num_, den_);
    num_ = num_ / g;
    den_ = den_ / g;
}

Rational Rational::parse(const std::string& text) {
    auto slash = text.find('/');
    if (slash == std::string::npos) return Rational(BigInt::from_string(text), BigInt(1));
    return Rational(BigInt::from_string(text.substr(0, slash)),
                    BigInt::from_string(text.substr(slash + 1)));
}

bool Rational::is_integer() const { return den_ == BigInt(1); }

Rational Rational::operator+(const Rational& rhs) const {
    return Rational(num_ * rhs.den_ + rhs.num_ * den_, den_ * rhs.den_);
}

Rational Rational::operator-(const Rational& rhs) const { return *this + (-rhs); }

Rational Rational::operator*(const Rational& rhs) const {
    return Rational(num_ * rhs.num_, den_ * rhs.den_);
}

Rational Rational::operator-() const {
    Rational out = *this;
    out.num_ = -out.num_;
    return out;
}

std::string Rational::str() const {
    if (is_integer()) return num_.str();
    return num_.str() + "/" + den_.str();
}

// ---------------------------------------------------------------------------
// Rational projective geometry

bool RationalPoint::operator==(const RationalPoint& rhs) const {
    if (at_infinity || rhs.at_infinity) return at_infinity == rhs.at_infinity;
    return x == rhs.x && y == rhs.y;
}

bool rational_collinear(const RationalPoint& a, const RationalPoint& b, const RationalPoint& c) {
    if (a == b || b == c || a == c) fail(Errc::DuplicatePoints, "collinearity needs distinct points");
    struct Row {
        Rational x, y, z;
    };
    auto row = [](const RationalPoint& p) {
        if (p.at_infinity) return Row{Rational(0), Rational(1), Rational(0)};
        return Row{p.x, p.y, Rational(1)};
    };
    Row r0 = row(a), r1 = row(b), r2 = row(c);
    Rational det = r0.x * (r1.y * r2.z - r1.z * r2.y) - r0.y * (r1.x * r2.z - r1.z * r2.x) +
                   r0.z * (r1.x * r2.y - r1.y * r2.x);
    return det.is_zero();
}

std::vector<std::array<int, 3>> rational_three_rich_lines(const std::vector<RationalPoint>& points) {
    const int n = static_cast<int>(points.size());
    if (n > 64) fail(Errc::TooLarge, "rational enumeration capped at 64 points");
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (points[static_cast<std::size_t>(i)] == points[static_cast<std::size_t>(j)])
                fail(Errc::DuplicatePoints, "input points must be distinct");

    std::vector<std::array<int, 3>> lines;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            int found = -1, count = 0;
            for (int k = 0; k < n; ++k) {
                if (k == i || k == j) continue;
                if (rational_collinear(points[static_cast<std::size_t>(i)],
                                       points[static_cast<std::size_t>(j)],
                                       points[static_cast<std::size_t>(k)])) {
                    ++count;
                    found = k;
                }
            }
            if (count >= 2)
                fail(Errc::FourCollinear, "four or more points on one line");
            if (count == 1 && found > j) lines.push_back({i, j, found});
        }
    }
    std::sort(lines.begin(), lines.end());
    return lines;
}

bool rational_on_curve(const RationalPoint& point, const std::array<std::int64_t, 5>& coeffs) {
    if (point.at_infinity) return true;
    Rational a1(coeffs[0]), a2(coeffs[1]), a3(coeffs[2]), a4(coeffs[3]), a6(coeffs[4]);
    const Rational &x = point.x, &y = point.y;
    Rational lhs = y * y + a1 * x * y + a3 * y;
    Rational rhs = ((x + a2) * x + a4) * x + a6;
    return lhs == rhs;
}

std::vector<ProjPoint> rational_reduce_mod_p(const std::vector<RationalPoint>& points,
                                             const FieldPtr& prime_field) {
    if (prime_field->degree() != 1)
        fail(Errc::ParseError, "reduction target must be a prime field");
    const std::int64_t p = prime_field->p();
    auto reduce = [&](const Rational& r) {
        std::uint32_t den = r.den().mod_u32(static_cast<std::uint32_t>(p));
        if (den == 0)
            fail(Errc::DenominatorDivisibleByP, "denominator divisible by " + std::to_string(p));
        std::int64_t num = r.num().mod_u32(static_cast<std::uint32_t>(p));
        if (r.num().is_negative()) num = (p - num) % p;
        return prime_field->from_int(num) * prime_field->from_int(den).inverse();
    };
    std::vector<ProjPoint> out;
    out.reserve(points.size());
    for (const auto& rp : points) {
        if (rp.at_infinity)
            out.push_back(ProjPoint::infinity(*prime_field));
        else
            out.push_back(ProjPoint::affine(reduce(rp.x), reduce(rp.y)));
    }
    return out;
}

ReductionReport check_reduction_mod_p(const std::vector<RationalPoint>& points,
                                      const std::vector<std::array<int, 3>>& rational_lines,
                                      std::int64_t p,
                                      const std::optional<std::array<std::int64_t, 5>>& curve_coeffs) {
    ReductionReport report;
    report.p = p;
    auto field = Field::make(p, 1);
    auto reduced = rational_reduce_mod_p(points, field);
    report.n_points = static_cast<int>(reduced.size());

    std::unordered_set<std::int64_t> keys;
    for (const auto& P : reduced) keys.insert(P.key());
    report.points_distinct = keys.size() == reduced.size();

    report.on_reduced_curve = true;
    if (curve_coeffs) {
        EllipticCurve curve = EllipticCurve::from_ints(field, (*curve_coeffs)[0], (*curve_coeffs)[1],
                                                       (*curve_coeffs)[2], (*curve_coeffs)[3],
                                                       (*curve_coeffs)[4]);
        for (const auto& P : reduced)
            if (!curve.is_on_curve(P)) report.on_reduced_curve = false;
    }

    if (report.points_distinct) {
        Arrangement geo = lines_geometric(reduced, field);
        report.n_lines = geo.n_lines();
        report.lines_match = geo.lines == rational_lines;
    }
    return report;
}

} // namespace orchard
