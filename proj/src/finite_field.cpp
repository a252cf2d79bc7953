#include "orchard/finite_field.hpp"

#include <algorithm>
#include <sstream>

namespace orchard {

namespace {

constexpr std::int64_t kFieldSizeCap = 1 << 20;

std::uint32_t reduce_mod(std::int64_t v, std::int64_t p) {
    std::int64_t r = v % p;
    if (r < 0) r += p;
    return static_cast<std::uint32_t>(r);
}

// Dense polynomials over F_p, constant term first, used only at field
// construction time (irreducibility search). Hot-path arithmetic lives in
// FieldElement with fixed-size buffers.
using Poly = std::vector<std::uint32_t>;

int poly_degree(const Poly& f) {
    for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i)
        if (f[static_cast<std::size_t>(i)] != 0) return i;
    return -1;
}

// Remainder of f by a monic divisor d, both constant-first.
Poly poly_rem_monic(Poly f, const Poly& d, std::int64_t p) {
    int dd = poly_degree(d);
    for (int i = poly_degree(f); i >= dd; --i) {
        std::uint64_t lead = f[static_cast<std::size_t>(i)];
        if (lead == 0) continue;
        for (int j = 0; j <= dd; ++j) {
            std::uint64_t sub = lead * d[static_cast<std::size_t>(j)] % static_cast<std::uint64_t>(p);
            std::uint64_t cur = f[static_cast<std::size_t>(i - dd + j)];
            f[static_cast<std::size_t>(i - dd + j)] =
                static_cast<std::uint32_t>((cur + static_cast<std::uint64_t>(p) - sub) % static_cast<std::uint64_t>(p));
        }
    }
    return f;
}

// Enumerates monic polynomials of the given degree in base-p counting order
// of their non-leading coefficients.
bool divides_some_monic_of_degree(const Poly& f, int deg, std::int64_t p) {
    std::int64_t count = 1;
    for (int i = 0; i < deg; ++i) count *= p;
    Poly d(static_cast<std::size_t>(deg) + 1, 0);
    d[static_cast<std::size_t>(deg)] = 1;
    for (std::int64_t v = 0; v < count; ++v) {
        std::int64_t rest = v;
        for (int i = 0; i < deg; ++i) {
            d[static_cast<std::size_t>(i)] = static_cast<std::uint32_t>(rest % p);
            rest /= p;
        }
        if (poly_degree(poly_rem_monic(f, d, p)) < 0) return true;
    }
    return false;
}

std::int64_t int_inverse_mod(std::int64_t a, std::int64_t p) {
    std::int64_t t = 0, new_t = 1, r = p, new_r = a % p;
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        std::int64_t tmp = t - q * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - q * new_r;
        r = new_r;
        new_r = tmp;
    }
    if (r != 1) fail(Errc::Internal, "inverse of noninvertible residue");
    return t < 0 ? t + p : t;
}

} // namespace

bool is_prime(std::int64_t v) {
    if (v < 2) return false;
    if (v % 2 == 0) return v == 2;
    for (std::int64_t d = 3; d * d <= v; d += 2)
        if (v % d == 0) return false;
    return true;
}

bool is_irreducible_mod_p(const Poly& poly, std::int64_t p) {
    int n = poly_degree(poly);
    if (n <= 0) return false;
    if (n == 1) return true;
    for (int deg = 1; deg <= n / 2; ++deg)
        if (divides_some_monic_of_degree(poly, deg, p)) return false;
    return true;
}

FieldPtr Field::make(std::int64_t p, int n, std::optional<Poly> modulus) {
    if (!is_prime(p)) fail(Errc::NotPrime, std::to_string(p) + " is not prime");
    if (n < 1) fail(Errc::TooSmall, "extension degree must be at least 1");

    std::int64_t q = 1;
    const std::int64_t cap = static_cast<std::int64_t>(effective_q_cap(kFieldSizeCap));
    for (int i = 0; i < n; ++i) {
        if (q > cap / p) fail(Errc::TooLarge, "field size exceeds cap");
        q *= p;
    }
    if (q > cap) fail(Errc::TooLarge, "field size exceeds cap");

    Poly mod;
    if (modulus.has_value()) {
        mod = *modulus;
        for (auto& c : mod) c = reduce_mod(static_cast<std::int64_t>(c), p);
        if (poly_degree(mod) != n || mod[static_cast<std::size_t>(n)] != 1)
            fail(Errc::Reducible, "modulus must be monic of degree n");
        if (n == 1) {
            if (mod[0] != 0)
                fail(Errc::ParseError, "prime field modulus must be the polynomial x");
        } else if (!is_irreducible_mod_p(mod, p)) {
            fail(Errc::Reducible, "supplied modulus is not irreducible");
        }
    } else if (n == 1) {
        mod = {0, 1};
    } else {
        // Smallest monic irreducible of degree n under the base-p integer
        // encoding of the non-leading coefficients. A nonzero constant term
        // is required for n >= 2, so start the scan at 1.
        std::int64_t count = 1;
        for (int i = 0; i < n; ++i) count *= p;
        mod.assign(static_cast<std::size_t>(n) + 1, 0);
        mod[static_cast<std::size_t>(n)] = 1;
        bool found = false;
        for (std::int64_t v = 1; v < count && !found; ++v) {
            if (v % p == 0) continue;
            std::int64_t rest = v;
            for (int i = 0; i < n; ++i) {
                mod[static_cast<std::size_t>(i)] = static_cast<std::uint32_t>(rest % p);
                rest /= p;
            }
            found = is_irreducible_mod_p(mod, p);
        }
        if (!found) fail(Errc::Internal, "no irreducible modulus found");
    }

    auto f = std::shared_ptr<Field>(new Field());
    f->p_ = p;
    f->n_ = n;
    f->q_ = q;
    for (int i = 0; i <= n; ++i) f->mod_[static_cast<std::size_t>(i)] = mod[static_cast<std::size_t>(i)];
    return f;
}

Poly Field::modulus() const {
    return Poly(mod_.begin(), mod_.begin() + n_ + 1);
}

FieldElement Field::zero() const {
    FieldElement e;
    e.field_ = this;
    for (int i = 0; i < n_; ++i) e.c_[static_cast<std::size_t>(i)] = 0;
    return e;
}

FieldElement Field::one() const { return from_int(1); }

FieldElement Field::from_int(std::int64_t v) const {
    FieldElement e = zero();
    e.c_[0] = reduce_mod(v, p_);
    return e;
}

FieldElement Field::element(const std::vector<std::int64_t>& coeffs) const {
    if (static_cast<int>(coeffs.size()) > n_)
        fail(Errc::ParseError, "too many coefficients for this field");
    FieldElement e = zero();
    for (std::size_t i = 0; i < coeffs.size(); ++i) e.c_[i] = reduce_mod(coeffs[i], p_);
    return e;
}

FieldElement Field::from_index(std::int64_t idx) const {
    if (idx < 0 || idx >= q_) fail(Errc::ParseError, "element index out of range");
    FieldElement e;
    e.field_ = this;
    for (int i = 0; i < n_; ++i) {
        e.c_[static_cast<std::size_t>(i)] = static_cast<std::uint32_t>(idx % p_);
        idx /= p_;
    }
    return e;
}

std::vector<FieldElement> Field::elements() const {
    std::vector<FieldElement> out;
    out.reserve(static_cast<std::size_t>(q_));
    for (std::int64_t i = 0; i < q_; ++i) out.push_back(from_index(i));
    return out;
}

std::string Field::str() const {
    std::ostringstream os;
    os << p_ << '^' << n_;
    bool default_mod = true;
    if (n_ > 1) {
        auto def = Field::make(p_, n_);
        for (int i = 0; i <= n_; ++i)
            if (def->mod_[static_cast<std::size_t>(i)] != mod_[static_cast<std::size_t>(i)]) default_mod = false;
    }
    if (!default_mod) {
        os << ':';
        for (int i = 0; i <= n_; ++i) {
            if (i) os << ',';
            os << mod_[static_cast<std::size_t>(i)];
        }
    }
    return os.str();
}

namespace detail {

void throw_spec_mismatch() { fail(Errc::SpecMismatch, "operands belong to different fields"); }

} // namespace detail

FieldElement FieldElement::inverse() const {
    if (is_zero()) fail(Errc::ZeroInverse, "zero has no multiplicative inverse");
    if (field_->n_ == 1) {
        FieldElement out;
        out.field_ = field_;
        out.c_[0] = static_cast<std::uint32_t>(int_inverse_mod(c_[0], field_->p_));
        return out;
    }
    // a^(q-2); at most 2*log2(q) multiplications, plenty fast at desk scale.
    return pow(field_->q_ - 2);
}

FieldElement FieldElement::pow(std::int64_t e) const {
    if (e < 0) return inverse().pow(-e);
    FieldElement base = *this;
    FieldElement out = field_->one();
    while (e > 0) {
        if (e & 1) out = out * base;
        base = base * base;
        e >>= 1;
    }
    return out;
}

int FieldElement::legendre() const {
    if (!field_->has_odd_characteristic())
        fail(Errc::EvenCharacteristic, "Legendre symbol undefined in characteristic 2");
    if (is_zero()) return 0;
    return pow((field_->q_ - 1) / 2).is_one() ? 1 : -1;
}

std::string FieldElement::str() const {
    std::ostringstream os;
    for (int i = 0; i < field_->n_; ++i) {
        if (i) os << ',';
        os << c_[static_cast<std::size_t>(i)];
    }
    return os.str();
}

} // namespace orchard
