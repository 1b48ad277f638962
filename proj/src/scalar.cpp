#include "krd/scalar.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <numeric>
#include <sstream>

namespace krd {

namespace {

int mod24(std::int64_t k) {
    int r = static_cast<int>(k % 24);
    return r < 0 ? r + 24 : r;
}

}  // namespace

QMonomial QMonomial::make(int zeta, std::int64_t num, std::int64_t den) {
    if (den == 0) throw ExponentOverflow("q-exponent with zero denominator");
    if (den < 0) {
        den = -den;
        num = -num;
    }
    if ((12 * num) % den != 0)
        throw ExponentOverflow("q-exponent denominator must divide 12: " + std::to_string(num) +
                               "/" + std::to_string(den));
    QMonomial m;
    m.zeta_ = mod24(zeta);
    m.t12_ = 12 * num / den;
    return m;
}

QMonomial QMonomial::minus_q(std::int64_t e) {
    QMonomial m;
    m.zeta_ = mod24(12 * e);
    m.t12_ = 12 * e;
    return m;
}

QMonomial QMonomial::minus_qs(std::int64_t e) {
    QMonomial m;
    m.zeta_ = mod24(12 * e);
    m.t12_ = 6 * e;
    return m;
}

QMonomial QMonomial::minus_qt(std::int64_t e) {
    QMonomial m;
    m.zeta_ = mod24(12 * e);
    m.t12_ = 4 * e;
    return m;
}

std::pair<std::int64_t, std::int64_t> QMonomial::qexp() const {
    std::int64_t g = std::gcd(std::llabs(t12_), std::int64_t{12});
    if (t12_ == 0) return {0, 1};
    return {t12_ / g, 12 / g};
}

QMonomial QMonomial::operator*(const QMonomial& o) const {
    QMonomial m;
    m.zeta_ = mod24(zeta_ + o.zeta_);
    m.t12_ = t12_ + o.t12_;
    return m;
}

QMonomial QMonomial::inverse() const {
    QMonomial m;
    m.zeta_ = mod24(-zeta_);
    m.t12_ = -t12_;
    return m;
}

QMonomial QMonomial::pow(std::int64_t n) const {
    QMonomial m;
    m.zeta_ = mod24(static_cast<std::int64_t>(zeta_) * n);
    m.t12_ = t12_ * n;
    return m;
}

QMonomial QMonomial::bar() const {
    return inverse();  // conjugation on roots of unity, q^{1/gamma} -> q^{-1/gamma}
}

std::array<QMonomial, 2> QMonomial::square_roots() const {
    if (t12_ % 2 != 0)
        throw ExponentOverflow("square root would exceed the exponent denominator bound of 12");
    if (zeta_ % 2 != 0)
        throw NotRepresentable("square root of zeta24^" + std::to_string(zeta_) +
                               " is not a 24th root of unity");
    QMonomial r;
    r.t12_ = t12_ / 2;
    r.zeta_ = zeta_ / 2;
    if (r.zeta_ >= 12) r.zeta_ -= 12;
    QMonomial minus = r;
    minus.zeta_ = mod24(r.zeta_ + 12);
    return {r, minus};
}

std::array<QMonomial, 3> QMonomial::cube_roots() const {
    if (t12_ % 3 != 0)
        throw NotRepresentable("cube root of q-exponent " + str() + " is not representable");
    if (zeta_ % 3 != 0)
        throw NotRepresentable("cube root of zeta24^" + std::to_string(zeta_) +
                               " is not a 24th root of unity");
    std::array<QMonomial, 3> roots;
    int base = zeta_ / 3;
    // The three candidates are base + 8j; pick the smallest zeta first.
    std::array<int, 3> zs = {mod24(base), mod24(base + 8), mod24(base + 16)};
    std::sort(zs.begin(), zs.end());
    for (int j = 0; j < 3; ++j) {
        roots[j].zeta_ = zs[j];
        roots[j].t12_ = t12_ / 3;
    }
    return roots;
}

std::string QMonomial::str() const {
    std::string coeff;
    bool coeff_nontrivial = true;
    switch (zeta_) {
        case 0: coeff = ""; coeff_nontrivial = false; break;
        case 12: coeff = "-"; break;
        case 6: coeff = "i"; break;
        case 18: coeff = "-i"; break;
        case 8: coeff = "w"; break;
        case 16: coeff = "w^2"; break;
        case 20: coeff = "-w"; break;
        case 4: coeff = "-w^2"; break;
        default: coeff = "z24^" + std::to_string(zeta_); break;
    }
    if (t12_ == 0) {
        if (!coeff_nontrivial) return "1";
        if (coeff == "-") return "-1";
        return coeff;
    }
    std::string qpart;
    auto [num, den] = qexp();
    if (num == 1 && den == 1)
        qpart = "q";
    else if (den == 1)
        qpart = "q^{" + std::to_string(num) + "}";
    else
        qpart = "q^{" + std::to_string(num) + "/" + std::to_string(den) + "}";
    if (!coeff_nontrivial) return qpart;
    if (coeff == "-") return "-" + qpart;
    return coeff + "*" + qpart;
}

namespace {

struct Cursor {
    const std::string& s;
    size_t i = 0;
    bool eat(char c) {
        if (i < s.size() && s[i] == c) {
            ++i;
            return true;
        }
        return false;
    }
    bool eat(const char* lit) {
        size_t n = std::string(lit).size();
        if (s.compare(i, n, lit) == 0) {
            i += n;
            return true;
        }
        return false;
    }
    std::int64_t integer() {
        size_t start = i;
        if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == start || (i == start + 1 && !std::isdigit(static_cast<unsigned char>(s[start]))))
            throw MalformedSpec("expected integer in scalar: " + s);
        return std::stoll(s.substr(start, i - start));
    }
};

}  // namespace

QMonomial QMonomial::parse(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) throw MalformedSpec("empty scalar");
    Cursor cur{s};

    int zeta = 0;
    if (cur.eat('-')) zeta += 12;
    if (cur.eat("z24^")) {
        zeta += static_cast<int>(cur.integer());
        cur.eat('*');
    } else if (cur.eat("i")) {
        zeta += 6;
        cur.eat('*');
    } else if (cur.eat("w^2")) {
        zeta += 16;
        cur.eat('*');
    } else if (cur.eat("w")) {
        zeta += 8;
        cur.eat('*');
    }

    std::int64_t num = 0, den = 1;
    if (cur.eat('q')) {
        num = 1;
        if (cur.eat('^')) {
            bool braces = cur.eat('{');
            num = cur.integer();
            if (cur.eat('/')) den = cur.integer();
            if (braces && !cur.eat('}')) throw MalformedSpec("unterminated exponent: " + text);
        }
    } else if (cur.eat('1')) {
        // bare unit, nothing to do
    }
    if (cur.i != s.size()) throw MalformedSpec("trailing junk in scalar: " + text);
    return make(zeta, num, den);
}

}  // namespace krd
