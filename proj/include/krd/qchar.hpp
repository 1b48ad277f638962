#ifndef KRD_QCHAR_HPP
#define KRD_QCHAR_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <compare>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "krd/affine.hpp"

namespace krd {

using Coeff = boost::multiprecision::cpp_int;

struct YVar {
    int node;
    QMonomial spectral;
    friend bool operator==(const YVar&, const YVar&) = default;
    friend std::strong_ordering operator<=>(const YVar& a, const YVar& b) {
        if (a.node != b.node) return a.node <=> b.node;
        return a.spectral <=> b.spectral;
    }
};

// A Laurent monomial in the variables Y_{i,a}.
class YMonomial {
   public:
    YMonomial() = default;

    void mul_var(int node, const QMonomial& spectral, int exp);
    YMonomial operator*(const YMonomial& o) const;
    YMonomial inverse() const;
    // multiply every spectral parameter by c (evaluation shift)
    YMonomial spectral_shift(const QMonomial& c) const;

    bool dominant() const;  // all exponents >= 0
    bool trivial() const { return exps_.empty(); }
    const std::map<YVar, int>& exps() const { return exps_; }

    // classical weight: exponent sum per node, indexed 1..n
    std::vector<int> weight(int n) const;

    std::string str() const;

    friend bool operator==(const YMonomial&, const YMonomial&) = default;
    friend bool operator<(const YMonomial& a, const YMonomial& b) { return a.exps_ < b.exps_; }

   private:
    std::map<YVar, int> exps_;
};

// An integer-coefficient Laurent polynomial in the Y_{i,a}.
class QCharacter {
   public:
    QCharacter() = default;
    static QCharacter unit() {
        QCharacter c;
        c.add(YMonomial(), 1);
        return c;
    }

    void add(const YMonomial& m, const Coeff& c);
    QCharacter operator+(const QCharacter& o) const;
    QCharacter operator*(const QCharacter& o) const;

    Coeff coefficient(const YMonomial& m) const;
    Coeff dimension() const;  // sum of coefficients
    const std::map<YMonomial, Coeff>& terms() const { return terms_; }
    size_t size() const { return terms_.size(); }

    std::vector<std::pair<YMonomial, Coeff>> dominant_monomials() const;

    friend bool operator==(const QCharacter&, const QCharacter&) = default;

   private:
    std::map<YMonomial, Coeff> terms_;
};

// Letters are encoded as ints: 1..n plain, 0 the zero letter, -k the barred
// letter.  Which letters are valid depends on the type.
enum class BoxWidth { Full, Half };

struct Column {
    std::vector<int> letters;  // top to bottom
    BoxWidth width = BoxWidth::Full;
};

struct Tableau {
    std::vector<Column> columns;  // left to right

    int height() const { return columns.empty() ? 0 : static_cast<int>(columns[0].letters.size()); }
    int width() const { return static_cast<int>(columns.size()); }

    // Rows comma-separated, letters space-separated, "b3" for barred 3,
    // "0" for the zero letter; a leading "h:" marks every column half-width.
    static Tableau parse(const std::string& text);
    std::string str() const;
};

// single-box q-character per the per-type tables
YMonomial box_monomial(const CartanData& cd, int letter, const QMonomial& a,
                       BoxWidth width = BoxWidth::Full);

// chi_q of a column at spectral a: product of boxes at a * qtilde^{k+1-2h}
YMonomial column_qchar(const CartanData& cd, const Column& col, const QMonomial& a);

// chi_q of a rectangular tableau at spectral a: product of its columns at
// a * q^{1-m+2j}
YMonomial tableau_qchar(const CartanData& cd, const Tableau& t, const QMonomial& a);

// Default column admissibility: strictly increasing in the type's letter
// order (an over-approximation outside type A).  Callers may plug their own.
using ColumnPredicate = std::function<bool(const CartanData&, const Column&)>;
bool column_semistandard(const CartanData& cd, const Column& col);
bool tableau_semistandard(const CartanData& cd, const Tableau& t);

// Exact q-character of V(k^m)_a for type A_{n-1}^(1): the sum over k x m
// rectangular semistandard tableaux with entries 1..n, calibrated so that the
// unique dominant monomial equals kr_highest_monomial(cd, k, m, a).
QCharacter kr_qcharacter_typeA(const CartanData& cd, int k, int m, const QMonomial& a,
                               long long max_tableaux = 2000000);

// highest-weight monomial of V(k^m)_a
YMonomial kr_highest_monomial(const CartanData& cd, int k, int m, const QMonomial& a);

Coeff classical_dimension(const QCharacter& chi);
std::vector<int> weight(const CartanData& cd, const YMonomial& m);

}  // namespace krd

#endif
