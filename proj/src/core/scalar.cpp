#include "scalar.hpp"

#include <numeric>
#include <stdexcept>

#include "errors.hpp"

namespace preproj {

namespace {

int64_t mod_reduce(int64_t v, uint32_t p) {
    int64_t r = v % static_cast<int64_t>(p);
    return r < 0 ? r + p : r;
}

int64_t mod_inverse(int64_t a, uint32_t p) {
    int64_t t = 0, new_t = 1, r = p, new_r = a;
    while (new_r != 0) {
        int64_t q = r / new_r;
        t = std::exchange(new_t, t - q * new_t);
        r = std::exchange(new_r, r - q * new_r);
    }
    if (r != 1) fail(ErrorCode::FieldDegenerate, "element not invertible modulo " + std::to_string(p));
    return t < 0 ? t + p : t;
}

uint32_t common_modulus(const Scalar& a, const Scalar& b) {
    uint32_t ma = a.modulus(), mb = b.modulus();
    if (ma == mb || mb == 0) return ma;
    if (ma == 0) return mb;
    throw std::logic_error("mixing scalars from different prime fields");
}

}  // namespace

Scalar Scalar::rational(int64_t num, int64_t den) {
    if (den == 0) throw std::domain_error("zero denominator");
    if (den < 0) {
        if (num == INT64_MIN || den == INT64_MIN) return from_mpq(mpq_class(num, 1) / mpq_class(den, 1));
        num = -num;
        den = -den;
    }
    return make_small(num, den);
}

Scalar Scalar::make_small(int64_t num, int64_t den) {
    int64_t g = std::gcd(num, den);
    Scalar s;
    if (g > 1) {
        num /= g;
        den /= g;
    }
    s.num_ = num;
    s.den_ = num == 0 ? 1 : den;
    return s;
}

Scalar Scalar::modular(int64_t value, uint32_t p) {
    Scalar s;
    s.mod_ = p;
    s.num_ = mod_reduce(value, p);
    return s;
}

mpq_class Scalar::to_mpq() const {
    if (big_) return *big_;
    mpz_class n, d;
    mpz_set_si(n.get_mpz_t(), num_);
    mpz_set_si(d.get_mpz_t(), den_);
    mpq_class q(n, d);
    return q;
}

Scalar Scalar::from_mpq(mpq_class q) {
    q.canonicalize();
    Scalar s;
    if (q.get_num().fits_slong_p() && q.get_den().fits_slong_p()) {
        s.num_ = q.get_num().get_si();
        s.den_ = q.get_den().get_si();
        if (s.num_ != INT64_MIN) return s;
    }
    s.num_ = 0;
    s.den_ = 1;
    s.big_ = std::make_shared<const mpq_class>(std::move(q));
    return s;
}

uint64_t Scalar::height() const {
    if (big_) return UINT64_MAX;
    if (mod_) return num_ == 0 ? 0 : 1;
    uint64_t a = num_ < 0 ? -static_cast<uint64_t>(num_) : static_cast<uint64_t>(num_);
    return a + static_cast<uint64_t>(den_) - 1;
}

Scalar Scalar::operator-() const {
    if (mod_) return modular(num_ == 0 ? 0 : mod_ - num_, mod_);
    if (big_ || num_ == INT64_MIN) return from_mpq(-to_mpq());
    Scalar s = *this;
    s.num_ = -num_;
    return s;
}

Scalar Scalar::inverse() const {
    if (is_zero()) {
        if (mod_) fail(ErrorCode::FieldDegenerate, "division by zero in F_" + std::to_string(mod_));
        throw std::domain_error("division by zero");
    }
    if (mod_) return modular(mod_inverse(num_, mod_), mod_);
    if (big_) return from_mpq(1 / to_mpq());
    return rational(den_, num_);
}

Scalar Scalar::reduce_mod(uint32_t p) const {
    if (mod_ == p) return *this;
    if (mod_ != 0) throw std::logic_error("cannot convert between prime fields");
    if (!big_) {
        Scalar n = modular(num_, p);
        return den_ == 1 ? n : n * modular(den_, p).inverse();
    }
    mpq_class q = to_mpq();
    mpz_class pn = p;
    mpz_class n = q.get_num() % pn, d = q.get_den() % pn;
    return modular(n.get_si(), p) / modular(d.get_si(), p);
}

Scalar operator+(const Scalar& a, const Scalar& b) {
    if (uint32_t p = common_modulus(a, b)) {
        Scalar x = a.reduce_mod(p), y = b.reduce_mod(p);
        return Scalar::modular(x.num_ + y.num_, p);
    }
    if (!a.big_ && !b.big_) {
        if (a.den_ == 1 && b.den_ == 1) {
            int64_t r;
            if (!__builtin_add_overflow(a.num_, b.num_, &r) && r != INT64_MIN) return Scalar(r);
        } else {
            int64_t x, y, n, d;
            if (!__builtin_mul_overflow(a.num_, b.den_, &x) && !__builtin_mul_overflow(b.num_, a.den_, &y) &&
                !__builtin_add_overflow(x, y, &n) && !__builtin_mul_overflow(a.den_, b.den_, &d) &&
                n != INT64_MIN)
                return Scalar::make_small(n, d);
        }
    }
    return Scalar::from_mpq(a.to_mpq() + b.to_mpq());
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

Scalar operator*(const Scalar& a, const Scalar& b) {
    if (uint32_t p = common_modulus(a, b)) {
        int64_t x = a.reduce_mod(p).num_, y = b.reduce_mod(p).num_;
        return Scalar::modular(static_cast<int64_t>((static_cast<__int128>(x) * y) % p), p);
    }
    if (!a.big_ && !b.big_) {
        if (a.num_ == 0 || b.num_ == 0) return Scalar();
        int64_t g1 = std::gcd(a.num_, b.den_), g2 = std::gcd(b.num_, a.den_);
        int64_t n, d;
        if (!__builtin_mul_overflow(a.num_ / g1, b.num_ / g2, &n) &&
            !__builtin_mul_overflow(a.den_ / g2, b.den_ / g1, &d) && n != INT64_MIN) {
            Scalar s;
            s.num_ = n;
            s.den_ = d;
            return s;
        }
    }
    return Scalar::from_mpq(a.to_mpq() * b.to_mpq());
}

Scalar operator/(const Scalar& a, const Scalar& b) {
    if (uint32_t p = common_modulus(a, b)) {
        return a * b.reduce_mod(p).inverse();
    }
    return a * b.inverse();
}

bool operator==(const Scalar& a, const Scalar& b) {
    if (a.mod_ || b.mod_) {
        uint32_t p = common_modulus(a, b);
        return a.reduce_mod(p).num_ == b.reduce_mod(p).num_;
    }
    if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
    return a.to_mpq() == b.to_mpq();
}

bool operator<(const Scalar& a, const Scalar& b) {
    if (a.mod_ || b.mod_) return a.num_ < b.num_;
    return a.to_mpq() < b.to_mpq();
}

std::string Scalar::str() const {
    if (big_) return big_->get_str();
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

bool is_prime(uint64_t p) {
    if (p < 2) return false;
    for (uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

Field Field::prime(uint32_t modulus) {
    if (!is_prime(modulus)) fail(ErrorCode::ValidationError, "field modulus " + std::to_string(modulus) + " is not prime");
    if (modulus > (1u << 31)) fail(ErrorCode::ValidationError, "field modulus must be below 2^31");
    return Field{modulus};
}

Scalar Field::convert(const Scalar& s) const {
    if (p == 0 || s.modulus() == p) return s;
    if (s.modulus() != 0) throw std::logic_error("cannot convert between prime fields");
    return s.reduce_mod(p);
}

std::string Field::name() const { return p == 0 ? "rational" : "fp:" + std::to_string(p); }

const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::DiagonalNotTwo: return "DiagonalNotTwo";
        case ErrorCode::PositivityViolation: return "PositivityViolation";
        case ErrorCode::AsymmetricZeroPattern: return "AsymmetricZeroPattern";
        case ErrorCode::NoSymmetrizer: return "NoSymmetrizer";
        case ErrorCode::NotASymmetrizer: return "NotASymmetrizer";
        case ErrorCode::InvalidOrientation: return "InvalidOrientation";
        case ErrorCode::CapExceeded: return "CapExceeded";
        case ErrorCode::FieldDegenerate: return "FieldDegenerate";
        case ErrorCode::VerificationFailed: return "VerificationFailed";
        case ErrorCode::NotDynkin: return "NotDynkin";
        case ErrorCode::SocleNotSimple: return "SocleNotSimple";
        case ErrorCode::RadicalUnavailable: return "RadicalUnavailable";
        case ErrorCode::NotMutable: return "NotMutable";
        case ErrorCode::ReportFailure: return "ReportFailure";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::ValidationError: return "ValidationError";
        case ErrorCode::InvalidArgument: return "InvalidArgument";
        case ErrorCode::Internal: return "Internal";
    }
    return "Unknown";
}

}  // namespace preproj
