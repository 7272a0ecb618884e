#pragma once

#include <cstdint>
#include <memory>
#include <string>

#include <gmpxx.h>

namespace preproj {

/// Element of the coefficient field: either an exact rational or an element
/// of a prime field F_p.  Rationals use a 64-bit fast path and transparently
/// promote to GMP on overflow; prime-field values carry their modulus.
class Scalar {
public:
    Scalar() = default;
    Scalar(int64_t v) : num_(v) {}  // NOLINT: integers convert implicitly

    static Scalar rational(int64_t num, int64_t den);
    static Scalar modular(int64_t value, uint32_t p);

    uint32_t modulus() const { return mod_; }
    bool is_zero() const { return !big_ && num_ == 0; }
    bool is_one() const { return !big_ && num_ == 1 && den_ == 1; }
    bool is_integer() const { return !big_ ? den_ == 1 : big_->get_den() == 1; }

    /// Rough size measure used for pivot selection.
    uint64_t height() const;

    Scalar operator-() const;
    Scalar inverse() const;
    /// Image of a rational in F_p (denominator must be prime to p).
    Scalar reduce_mod(uint32_t p) const;

    friend Scalar operator+(const Scalar& a, const Scalar& b);
    friend Scalar operator-(const Scalar& a, const Scalar& b);
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    friend Scalar operator/(const Scalar& a, const Scalar& b);
    friend bool operator==(const Scalar& a, const Scalar& b);
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

    /// Total order on rationals (used only for canonical sorting); prime-field
    /// values compare by representative.
    friend bool operator<(const Scalar& a, const Scalar& b);

    std::string str() const;

private:
    mpq_class to_mpq() const;
    static Scalar from_mpq(mpq_class q);
    static Scalar make_small(int64_t num, int64_t den);

    int64_t num_ = 0;
    int64_t den_ = 1;
    std::shared_ptr<const mpq_class> big_;
    uint32_t mod_ = 0;
};

/// Coefficient field selector: p == 0 means the rationals.
struct Field {
    uint32_t p = 0;

    static Field rationals() { return {}; }
    static Field prime(uint32_t modulus);

    bool is_rational() const { return p == 0; }
    Scalar from_int(int64_t v) const { return p == 0 ? Scalar(v) : Scalar::modular(v, p); }
    Scalar zero() const { return from_int(0); }
    Scalar one() const { return from_int(1); }
    Scalar convert(const Scalar& s) const;
    std::string name() const;

    friend bool operator==(const Field& a, const Field& b) { return a.p == b.p; }
};

bool is_prime(uint64_t p);

}  // namespace preproj
