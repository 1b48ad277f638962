#ifndef KRD_SCALAR_HPP
#define KRD_SCALAR_HPP

#include <array>
#include <compare>
#include <cstdint>
#include <string>

#include "krd/errors.hpp"

namespace krd {

// An exact scalar of the form zeta24^k * q^e where zeta24 = exp(2*pi*i/24)
// and e is a rational with denominator dividing 12.  This group contains
// every spectral parameter and every denominator root that occurs in the
// supported affine types: -1, sqrt(-1), the third roots of unity, q_s =
// q^{1/2}, q_t = q^{1/3}, and the half-exponents created by the z -> z^2
// substitution for D_{n+1}^(2).
//
// The exponent is stored as an integer count of twelfths, so arithmetic is
// exact and overflow-free at any scale this library reaches.
class QMonomial {
   public:
    constexpr QMonomial() : zeta_(0), t12_(0) {}

    // zeta24 exponent in [0,24), q-exponent num/den with den | 12.
    static QMonomial make(int zeta, std::int64_t num, std::int64_t den = 1);

    static QMonomial one() { return QMonomial(); }
    static QMonomial q(std::int64_t e = 1) { return make(0, e); }
    static QMonomial minus_one() { return make(12, 0); }
    static QMonomial minus_q(std::int64_t e = 1);  // (-q)^e
    static QMonomial qs(std::int64_t e = 1) { return make(0, e, 2); }
    static QMonomial minus_qs(std::int64_t e = 1);  // (-q_s)^e
    static QMonomial qt(std::int64_t e = 1) { return make(0, e, 3); }
    static QMonomial minus_qt(std::int64_t e = 1);  // (-q_t)^e
    static QMonomial sqrt_minus_one() { return make(6, 0); }
    static QMonomial omega() { return make(8, 0); }  // primitive cube root of 1

    int zeta24() const { return zeta_; }
    // q-exponent as a reduced fraction {num, den}.
    std::pair<std::int64_t, std::int64_t> qexp() const;
    std::int64_t qexp_twelfths() const { return t12_; }

    bool is_one() const { return zeta_ == 0 && t12_ == 0; }
    bool has_positive_qexp() const { return t12_ > 0; }

    QMonomial operator*(const QMonomial& o) const;
    QMonomial inverse() const;
    QMonomial pow(std::int64_t n) const;

    // Bar involution: q^{1/gamma} -> q^{-1/gamma}, roots of unity conjugated.
    QMonomial bar() const;

    // The two square roots of *this; the canonical first entry has zeta in
    // [0,12).  Requires the q-exponent to have denominator dividing 6 and the
    // zeta24 exponent to be even.
    std::array<QMonomial, 2> square_roots() const;
    // The three cube roots; requires zeta24 and the twelfths count to be
    // divisible by 3.  Canonical first entry has the smallest zeta.
    std::array<QMonomial, 3> cube_roots() const;

    std::string str() const;
    static QMonomial parse(const std::string& text);

    friend bool operator==(const QMonomial&, const QMonomial&) = default;
    // Canonical order: by q-exponent, then by zeta.  RootMultiset relies on
    // this to print factor lists deterministically.
    friend std::strong_ordering operator<=>(const QMonomial& a, const QMonomial& b) {
        if (a.t12_ != b.t12_) return a.t12_ <=> b.t12_;
        return a.zeta_ <=> b.zeta_;
    }

   private:
    int zeta_;           // exponent of zeta24, reduced mod 24
    std::int64_t t12_;   // q-exponent in twelfths
};

}  // namespace krd

#endif
