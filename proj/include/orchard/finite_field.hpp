#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "orchard/common.hpp"

namespace orchard {

class Field;
using FieldPtr = std::shared_ptr<const Field>;

/// Largest extension degree reachable under the q <= 2^20 cap (p = 2, n = 20).
inline constexpr int kMaxExtensionDegree = 20;

/// Element of F_{p^n}, stored as n residues mod p, constant term first.
/// Elements are plain values; the Field they belong to must outlive them
/// (curves and arrangements keep their Field alive via FieldPtr).
/// Arithmetic is inline: the exhaustive sweeps add tens of millions of
/// curve points and live entirely on these operators.
class FieldElement {
public:
    FieldElement() = default;

    bool is_zero() const;
    bool is_one() const;
    const Field& field() const { return *field_; }
    std::uint32_t coeff(int i) const { return c_[static_cast<std::size_t>(i)]; }

    /// Position of this element in the field's canonical enumeration:
    /// sum of coeff(i) * p^i. Index 0 is zero, index 1 is one.
    std::int64_t index() const;

    FieldElement operator+(const FieldElement& rhs) const;
    FieldElement operator-(const FieldElement& rhs) const;
    FieldElement operator*(const FieldElement& rhs) const;
    FieldElement operator-() const;
    FieldElement& operator+=(const FieldElement& rhs) { return *this = *this + rhs; }
    FieldElement& operator-=(const FieldElement& rhs) { return *this = *this - rhs; }
    FieldElement& operator*=(const FieldElement& rhs) { return *this = *this * rhs; }

    bool operator==(const FieldElement& rhs) const;
    bool operator!=(const FieldElement& rhs) const { return !(*this == rhs); }

    /// Multiplicative inverse; throws ZeroInverse on 0.
    FieldElement inverse() const;
    FieldElement pow(std::int64_t e) const;

    /// Generalized Legendre symbol: 0 for zero, +1 for a nonzero square,
    /// -1 otherwise. Odd characteristic only.
    int legendre() const;

    /// Text form: decimal residue for prime fields, comma-joined residues
    /// (constant term first) for extensions, e.g. "1,1,0".
    std::string str() const;

private:
    friend class Field;
    // Only the first degree() entries are meaningful; the tail is left
    // untouched on purpose (zeroing it dominated the hot loops).
    const Field* field_ = nullptr;
    std::array<std::uint32_t, kMaxExtensionDegree> c_;
};

/// F_{p^n} as F_p[x] modulo a monic irreducible polynomial of degree n.
/// Immutable after construction; all methods are safe to call concurrently.
class Field {
public:
    /// Builds a field, validating primality of p, the size cap q <= 2^20,
    /// and irreducibility of the modulus. With no modulus the canonical
    /// default is chosen: the monic irreducible polynomial of degree n
    /// whose coefficient vector, read as a base-p integer with the constant
    /// term as least significant digit, is smallest. That makes every
    /// derived output reproducible bit for bit.
    static FieldPtr make(std::int64_t p, int n,
                         std::optional<std::vector<std::uint32_t>> modulus = std::nullopt);

    std::int64_t p() const { return p_; }
    int degree() const { return n_; }
    std::int64_t q() const { return q_; }
    bool has_odd_characteristic() const { return p_ != 2; }

    /// Modulus coefficients, constant term first, length degree()+1, monic.
    std::vector<std::uint32_t> modulus() const;
    std::uint32_t modulus_coeff(int i) const { return mod_[static_cast<std::size_t>(i)]; }

    FieldElement zero() const;
    FieldElement one() const;
    /// Embeds an integer as a constant (reduced mod p; negatives allowed).
    FieldElement from_int(std::int64_t v) const;
    /// Element with the given coefficients, reduced mod p. Must supply at
    /// most degree() coefficients.
    FieldElement element(const std::vector<std::int64_t>& coeffs) const;
    /// Inverse of FieldElement::index(); idx must lie in [0, q).
    FieldElement from_index(std::int64_t idx) const;

    /// All q elements in canonical enumeration order (index 0, 1, ..., q-1).
    std::vector<FieldElement> elements() const;

    /// Spec text form "p^n" or "p^n:c0,c1,...,cn" for non-default moduli.
    std::string str() const;

    bool same_field(const Field& other) const { return this == &other; }

private:
    friend class FieldElement;
    Field() = default;

    std::int64_t p_ = 0;
    int n_ = 0;
    std::int64_t q_ = 0;
    std::array<std::uint32_t, kMaxExtensionDegree + 1> mod_{};
};

/// Trial-division primality test, adequate for the desk-scale cap.
bool is_prime(std::int64_t v);

/// True if the monic polynomial (constant first, length n+1) is irreducible
/// over F_p, by exhaustive search for monic divisors of degree <= n/2.
bool is_irreducible_mod_p(const std::vector<std::uint32_t>& poly, std::int64_t p);

// ---------------------------------------------------------------------------
// Inline element arithmetic.

namespace detail {
[[noreturn]] void throw_spec_mismatch();
}

inline bool FieldElement::is_zero() const {
    const int n = field_->degree();
    for (int i = 0; i < n; ++i)
        if (c_[static_cast<std::size_t>(i)] != 0) return false;
    return true;
}

inline bool FieldElement::is_one() const {
    if (c_[0] != 1) return false;
    const int n = field_->degree();
    for (int i = 1; i < n; ++i)
        if (c_[static_cast<std::size_t>(i)] != 0) return false;
    return true;
}

inline std::int64_t FieldElement::index() const {
    std::int64_t idx = 0;
    for (int i = field_->degree() - 1; i >= 0; --i)
        idx = idx * field_->p() + c_[static_cast<std::size_t>(i)];
    return idx;
}

inline FieldElement FieldElement::operator+(const FieldElement& rhs) const {
    if (field_ != rhs.field_) detail::throw_spec_mismatch();
    const auto p = static_cast<std::uint32_t>(field_->p());
    const int n = field_->degree();
    FieldElement out;
    out.field_ = field_;
    for (int i = 0; i < n; ++i) {
        std::uint32_t s = c_[static_cast<std::size_t>(i)] + rhs.c_[static_cast<std::size_t>(i)];
        out.c_[static_cast<std::size_t>(i)] = s >= p ? s - p : s;
    }
    return out;
}

inline FieldElement FieldElement::operator-(const FieldElement& rhs) const {
    if (field_ != rhs.field_) detail::throw_spec_mismatch();
    const auto p = static_cast<std::uint32_t>(field_->p());
    const int n = field_->degree();
    FieldElement out;
    out.field_ = field_;
    for (int i = 0; i < n; ++i) {
        std::uint32_t a = c_[static_cast<std::size_t>(i)], b = rhs.c_[static_cast<std::size_t>(i)];
        out.c_[static_cast<std::size_t>(i)] = a >= b ? a - b : a + p - b;
    }
    return out;
}

inline FieldElement FieldElement::operator-() const {
    const auto p = static_cast<std::uint32_t>(field_->p());
    const int n = field_->degree();
    FieldElement out;
    out.field_ = field_;
    for (int i = 0; i < n; ++i) {
        std::uint32_t v = c_[static_cast<std::size_t>(i)];
        out.c_[static_cast<std::size_t>(i)] = v == 0 ? 0 : p - v;
    }
    return out;
}

inline FieldElement FieldElement::operator*(const FieldElement& rhs) const {
    if (field_ != rhs.field_) detail::throw_spec_mismatch();
    const auto p = static_cast<std::uint64_t>(field_->p());
    const int n = field_->degree();
    FieldElement out;
    out.field_ = field_;
    if (n == 1) {
        out.c_[0] = static_cast<std::uint32_t>(static_cast<std::uint64_t>(c_[0]) * rhs.c_[0] % p);
        return out;
    }
    std::array<std::uint64_t, 2 * kMaxExtensionDegree> acc{};
    for (int i = 0; i < n; ++i) {
        const std::uint64_t a = c_[static_cast<std::size_t>(i)];
        if (a == 0) continue;
        for (int j = 0; j < n; ++j)
            acc[static_cast<std::size_t>(i + j)] += a * rhs.c_[static_cast<std::size_t>(j)] % p;
    }
    // Fold degrees >= n back down using the monic modulus.
    for (int i = 2 * n - 2; i >= n; --i) {
        std::uint64_t lead = acc[static_cast<std::size_t>(i)] % p;
        if (lead == 0) continue;
        acc[static_cast<std::size_t>(i)] = 0;
        for (int j = 0; j < n; ++j) {
            std::uint64_t sub = lead * field_->modulus_coeff(j) % p;
            std::uint64_t& cur = acc[static_cast<std::size_t>(i - n + j)];
            cur = (cur + p - sub) % p;
        }
    }
    for (int i = 0; i < n; ++i)
        out.c_[static_cast<std::size_t>(i)] = static_cast<std::uint32_t>(acc[static_cast<std::size_t>(i)] % p);
    return out;
}

inline bool FieldElement::operator==(const FieldElement& rhs) const {
    if (field_ != rhs.field_) detail::throw_spec_mismatch();
    const int n = field_->degree();
    for (int i = 0; i < n; ++i)
        if (c_[static_cast<std::size_t>(i)] != rhs.c_[static_cast<std::size_t>(i)]) return false;
    return true;
}

} // namespace orchard
