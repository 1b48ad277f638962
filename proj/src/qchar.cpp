#include "krd/qchar.hpp"

#include <algorithm>
#include <sstream>

namespace krd {

void YMonomial::mul_var(int node, const QMonomial& spectral, int exp) {
    if (exp == 0) return;
    YVar v{node, spectral};
    auto it = exps_.find(v);
    if (it == exps_.end())
        exps_.emplace(v, exp);
    else {
        it->second += exp;
        if (it->second == 0) exps_.erase(it);
    }
}

YMonomial YMonomial::operator*(const YMonomial& o) const {
    YMonomial out = *this;
    for (const auto& [v, e] : o.exps_) out.mul_var(v.node, v.spectral, e);
    return out;
}

YMonomial YMonomial::inverse() const {
    YMonomial out;
    for (const auto& [v, e] : exps_) out.exps_.emplace(v, -e);
    return out;
}

YMonomial YMonomial::spectral_shift(const QMonomial& c) const {
    YMonomial out;
    for (const auto& [v, e] : exps_) out.mul_var(v.node, v.spectral * c, e);
    return out;
}

bool YMonomial::dominant() const {
    for (const auto& [v, e] : exps_)
        if (e < 0) return false;
    return true;
}

std::vector<int> YMonomial::weight(int n) const {
    std::vector<int> wt(n, 0);
    for (const auto& [v, e] : exps_)
        if (v.node >= 1 && v.node <= n) wt[v.node - 1] += e;
    return wt;
}

std::string YMonomial::str() const {
    if (exps_.empty()) return "1";
    std::string out;
    for (const auto& [v, e] : exps_) {
        if (!out.empty()) out += "*";
        out += "Y[" + std::to_string(v.node) + "," + v.spectral.str() + "]";
        if (e != 1) out += "^" + std::to_string(e);
    }
    return out;
}

void QCharacter::add(const YMonomial& m, const Coeff& c) {
    if (c == 0) return;
    auto it = terms_.find(m);
    if (it == terms_.end())
        terms_.emplace(m, c);
    else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

QCharacter QCharacter::operator+(const QCharacter& o) const {
    QCharacter out = *this;
    for (const auto& [m, c] : o.terms_) out.add(m, c);
    return out;
}

QCharacter QCharacter::operator*(const QCharacter& o) const {
    QCharacter out;
    for (const auto& [m1, c1] : terms_)
        for (const auto& [m2, c2] : o.terms_) out.add(m1 * m2, c1 * c2);
    return out;
}

Coeff QCharacter::coefficient(const YMonomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Coeff(0) : it->second;
}

Coeff QCharacter::dimension() const {
    Coeff d = 0;
    for (const auto& [m, c] : terms_) d += c;
    return d;
}

std::vector<std::pair<YMonomial, Coeff>> QCharacter::dominant_monomials() const {
    std::vector<std::pair<YMonomial, Coeff>> out;
    for (const auto& [m, c] : terms_)
        if (m.dominant()) out.emplace_back(m, c);
    return out;
}

// ---------------------------------------------------------------------------
// letters and orders
// ---------------------------------------------------------------------------

namespace {

bool is_D_shape(const CartanData& cd) {
    // types whose letter poset has the incomparable spin pair
    return cd.type.family == Family::D;
}

// Number of plain letters: n of the tableau alphabet.
int alphabet_n(const CartanData& cd) {
    switch (cd.type.family) {
        case Family::A: return cd.type.twist == 1 ? cd.n + 1 : cd.n;
        case Family::B: return cd.n;
        case Family::C: return cd.n;
        case Family::D:
            if (cd.type.twist == 1) return cd.n;
            if (cd.type.twist == 2) return cd.n + 1;
            return 4;  // D_4^(3)
        case Family::G: return 3;
    }
    throw Error("unreachable");
}

bool has_zero_letter(const CartanData& cd) {
    return cd.type.family == Family::B || cd.type.family == Family::G;
}

// Position of a letter in the type's order; the incomparable spin pair of the
// D shapes gets one shared position.
int letter_pos(const CartanData& cd, int letter) {
    const int n = alphabet_n(cd);
    const bool dsh = is_D_shape(cd);
    if (letter > 0 && letter <= n) return dsh && letter == n ? n : letter;
    if (letter == 0) {
        if (!has_zero_letter(cd)) throw InvalidLetter("type has no zero letter");
        return n + 1;
    }
    if (letter < 0 && -letter <= n) {
        int k = -letter;
        if (cd.type.family == Family::A) throw InvalidLetter("type A has no barred letters");
        if (dsh) return k == n ? n : 2 * n - k;  // bar(n) shares the level of n
        return 2 * n + 2 - k - (has_zero_letter(cd) ? 0 : 1);
    }
    throw InvalidLetter("invalid letter " + std::to_string(letter) + " for " + cd.type.str());
}

bool letters_incomparable(const CartanData& cd, int a, int b) {
    if (!is_D_shape(cd)) return false;
    const int n = alphabet_n(cd);
    return (a == n && b == -n) || (a == -n && b == n);
}

QMonomial qtilde(const CartanData& cd) {
    if (cd.type.family == Family::B) return QMonomial::qs();
    if (cd.type.family == Family::G) return QMonomial::qt();
    return QMonomial::q();
}

}  // namespace

bool column_semistandard(const CartanData& cd, const Column& col) {
    for (size_t i = 0; i + 1 < col.letters.size(); ++i) {
        int a = col.letters[i], b = col.letters[i + 1];
        if (letters_incomparable(cd, a, b)) continue;  // n over bar(n) is allowed
        if (letter_pos(cd, a) >= letter_pos(cd, b)) return false;
    }
    return true;
}

bool tableau_semistandard(const CartanData& cd, const Tableau& t) {
    for (const auto& col : t.columns) {
        if (static_cast<int>(col.letters.size()) != t.height()) return false;
        if (!column_semistandard(cd, col)) return false;
    }
    for (int j = 0; j + 1 < t.width(); ++j)
        for (int h = 0; h < t.height(); ++h) {
            int a = t.columns[j].letters[h], b = t.columns[j + 1].letters[h];
            if (letters_incomparable(cd, a, b)) return false;  // rows need comparability
            if (letter_pos(cd, a) > letter_pos(cd, b)) return false;
        }
    return true;
}

// ---------------------------------------------------------------------------
// box tables
// ---------------------------------------------------------------------------

namespace {

struct YBuilder {
    YMonomial m;
    const QMonomial& a;
    void Y(int node, const QMonomial& shift, int exp = 1) { m.mul_var(node, a * shift, exp); }
};

YMonomial box_A(const CartanData& cd, int i, const QMonomial& a) {
    const int n = alphabet_n(cd);
    if (i < 1 || i > n) throw InvalidLetter("type A letter out of range");
    YBuilder b{{}, a};
    if (i - 1 >= 1) b.Y(i - 1, QMonomial::q(i), -1);
    if (i <= n - 1) b.Y(i, QMonomial::q(i - 1), 1);
    return b.m;
}

YMonomial box_B(const CartanData& cd, int i, const QMonomial& a, BoxWidth w) {
    const int n = cd.n;
    YBuilder b{{}, a};
    auto qs = [](std::int64_t e) { return QMonomial::qs(e); };
    if (w == BoxWidth::Full) {
        if (i >= 1 && i <= n - 1) {
            if (i - 1 >= 1) b.Y(i - 1, qs(2 * i), -1);
            b.Y(i, qs(2 * (i - 1)), 1);
        } else if (i == n) {
            b.Y(n - 1, qs(2 * n), -1);
            b.Y(n, qs(2 * n - 3), 1);
            b.Y(n, qs(2 * n - 1), 1);
        } else if (i == 0) {
            b.Y(n, qs(2 * n + 1), -1);
            b.Y(n, qs(2 * n - 3), 1);
        } else if (i == -n) {
            b.Y(n - 1, qs(2 * n - 2), 1);
            b.Y(n, qs(2 * n - 1), -1);
            b.Y(n, qs(2 * n + 1), -1);
        } else if (i < 0 && -i <= n - 1) {
            int k = -i;
            if (k - 1 >= 1) b.Y(k - 1, qs(2 * (2 * n - k - 1)), 1);
            b.Y(k, qs(2 * (2 * n - k)), -1);
        } else {
            throw InvalidLetter("invalid type B letter");
        }
    } else {
        if (i >= 1 && i <= n - 1) {
            if (i - 1 >= 1) b.Y(i - 1, qs(i - 1), -1);
            b.Y(i, qs(i - 2), 1);
        } else if (i == n) {
            b.Y(n, qs(n - 1), -1);
        } else if (i == 0) {
            b.Y(n, qs(n), 1);
        } else if (i == -n) {
            b.Y(n, qs(n + 2), -2);
        } else if (i < 0 && -i <= n - 1) {
            // trivial
        } else {
            throw InvalidLetter("invalid type B letter");
        }
    }
    return b.m;
}

YMonomial box_C(const CartanData& cd, int i, const QMonomial& a) {
    const int n = cd.n;
    YBuilder b{{}, a};
    auto qs = [](std::int64_t e) { return QMonomial::qs(e); };
    if (i >= 1 && i <= n) {
        if (i - 1 >= 1) b.Y(i - 1, qs(i), -1);
        if (i <= n) b.Y(i, qs(i - 1), 1);
    } else if (i < 0 && -i <= n) {
        int k = -i;
        if (k - 1 >= 1) b.Y(k - 1, qs(2 * n - k + 2), 1);
        b.Y(k, qs(2 * n - k + 3), -1);
    } else {
        throw InvalidLetter("invalid type C letter");
    }
    return b.m;
}

YMonomial box_D1(const CartanData& cd, int i, const QMonomial& a, BoxWidth w) {
    const int n = cd.n;
    YBuilder b{{}, a};
    auto qq = [](std::int64_t e) { return QMonomial::q(e); };
    if (w == BoxWidth::Full) {
        if (i >= 1 && i <= n - 2) {
            if (i - 1 >= 1) b.Y(i - 1, qq(i), -1);
            b.Y(i, qq(i - 1), 1);
        } else if (i == n - 1) {
            b.Y(n - 2, qq(n - 1), -1);
            b.Y(n - 1, qq(n - 2), 1);
            b.Y(n, qq(n - 2), 1);
        } else if (i == n) {
            b.Y(n - 1, qq(n), -1);
            b.Y(n, qq(n - 2), 1);
        } else if (i == -n) {
            b.Y(n - 1, qq(n - 2), 1);
            b.Y(n, qq(n), -1);
        } else if (i == -(n - 1)) {
            b.Y(n - 2, qq(n - 1), 1);
            b.Y(n - 1, qq(n), -1);
            b.Y(n, qq(n), -1);
        } else if (i < 0 && -i <= n - 2) {
            int k = -i;
            if (k - 1 >= 1) b.Y(k - 1, qq(2 * n - k - 2), 1);
            b.Y(k, qq(2 * n - k - 1), -1);
        } else {
            throw InvalidLetter("invalid type D letter");
        }
    } else {
        if (i >= 1 && i <= n - 2) {
            if (i - 1 >= 1) b.Y(i - 1, qq(i - 1), -1);
            b.Y(i, qq(i - 2), 1);
        } else if (i == n - 1) {
            b.Y(n - 2, qq(n - 2), -1);
        } else if (i == n) {
            b.Y(n, qq(n - 1), 1);
        } else if (i == -n) {
            b.Y(n - 1, qq(n - 1), 1);
        } else if (i == -(n - 1)) {
            b.Y(n - 1, qq(n + 1), -1);
            b.Y(n, qq(n + 1), -1);
        } else if (i < 0 && -i <= n - 2) {
            // trivial
        } else {
            throw InvalidLetter("invalid type D letter");
        }
    }
    return b.m;
}

YMonomial box_G(const CartanData&, int i, const QMonomial& a) {
    YBuilder b{{}, a};
    auto qt = [](std::int64_t e) { return QMonomial::qt(e); };
    switch (i) {
        case 1: b.Y(2, QMonomial::one(), 1); break;
        case 2:
            b.Y(1, qt(1), 1);
            b.Y(2, qt(2), -1);
            break;
        case 3:
            b.Y(1, qt(7), -1);
            b.Y(2, qt(4), 1);
            b.Y(2, qt(6), 1);
            break;
        case 0:
            b.Y(2, qt(4), 1);
            b.Y(2, qt(8), -1);
            break;
        case -3:
            b.Y(1, qt(5), 1);
            b.Y(2, qt(6), -1);
            b.Y(2, qt(8), -1);
            break;
        case -2:
            b.Y(1, qt(12), -1);
            b.Y(2, qt(10), 1);
            break;
        case -1: b.Y(2, qt(12), -1); break;
        default: throw InvalidLetter("invalid type G2 letter");
    }
    return b.m;
}

YMonomial box_D2(const CartanData& cd, int i, const QMonomial& a, BoxWidth w) {
    const int n = cd.n;  // alphabet plain letters go to n+1
    YMonomial m;
    auto qq = [](std::int64_t e) { return QMonomial::q(e); };
    if (w == BoxWidth::Full) {
        // the node-n entries live at b with b^2 = a; the canonical branch is
        // immaterial because +-b both occur together
        QMonomial bb = a.square_roots()[0];
        auto Y = [&](int node, const QMonomial& s, int exp) { m.mul_var(node, s, exp); };
        if (i >= 1 && i <= n - 1) {
            if (i - 1 >= 1) Y(i - 1, a * qq(2 * i), -1);
            Y(i, a * qq(2 * (i - 1)), 1);
        } else if (i == n) {
            Y(n - 1, a * qq(n), -1);
            Y(n, bb * qq(n - 1), 1);
            Y(n, QMonomial::minus_one() * bb * qq(n - 1), 1);
        } else if (i == n + 1) {
            Y(n, bb * qq(n + 1), -1);
            Y(n, QMonomial::minus_one() * bb * qq(n - 1), 1);
        } else if (i == -(n + 1)) {
            Y(n, bb * qq(n - 1), 1);
            Y(n, QMonomial::minus_one() * bb * qq(n + 1), -1);
        } else if (i == -n) {
            Y(n - 1, a * qq(2 * n), 1);
            Y(n, bb * qq(n + 1), -1);
            Y(n, QMonomial::minus_one() * bb * qq(n + 1), -1);
        } else if (i < 0 && -i <= n - 1) {
            int k = -i;
            if (k - 1 >= 1) Y(k - 1, a * qq(2 * (2 * n - k)), 1);
            Y(k, a * qq(2 * (2 * n + 1 - k)), -1);
        } else {
            throw InvalidLetter("invalid type D~2 letter");
        }
    } else {
        QMonomial a2 = a.pow(2);
        auto Y = [&](int node, const QMonomial& s, int exp) { m.mul_var(node, s, exp); };
        if (i >= 1 && i <= n - 1) {
            if (i - 1 >= 1) Y(i - 1, a2 * qq(2 * (i - 1)), -1);
            Y(i, a2 * qq(2 * (i - 2)), 1);
        } else if (i == n) {
            Y(n - 1, a2 * qq(2 * (n - 2)), -1);
        } else if (i == n + 1) {
            Y(n, a * qq(n), 1);
        } else if (i == -(n + 1)) {
            Y(n, QMonomial::minus_one() * a * qq(n), 1);
        } else if (i == -n) {
            Y(n, a * qq(n + 2), -1);
            Y(n, QMonomial::minus_one() * a * qq(n + 2), -1);
        } else if (i < 0 && -i <= n - 1) {
            // trivial
        } else {
            throw InvalidLetter("invalid type D~2 letter");
        }
    }
    return m;
}

YMonomial box_D3(const CartanData&, int i, const QMonomial& a) {
    YMonomial m;
    auto Y = [&](int node, const QMonomial& s, int exp) { m.mul_var(node, s, exp); };
    const QMonomial w = QMonomial::omega(), w2 = QMonomial::omega().pow(2);
    const QMonomial a3 = a.pow(3);
    auto qq = [](std::int64_t e) { return QMonomial::q(e); };
    switch (i) {
        case 1: Y(1, a, 1); break;
        case 2:
            Y(1, a * qq(2), -1);
            Y(2, a3 * qq(3), 1);
            break;
        case 3:
            Y(2, a3 * qq(9), -1);
            Y(1, a * w * qq(2), 1);
            Y(1, a * w2 * qq(2), 1);
            break;
        case 4:
            Y(1, a * w * qq(2), 1);
            Y(1, a * w2 * qq(4), -1);
            break;
        case -4:
            Y(1, a * w2 * qq(2), 1);
            Y(1, a * w * qq(4), -1);
            break;
        case -3:
            Y(1, a * w * qq(4), -1);
            Y(1, a * w2 * qq(4), -1);
            Y(2, a3 * qq(9), 1);
            break;
        case -2:
            Y(1, a * qq(4), 1);
            Y(2, a3 * qq(15), -1);
            break;
        case -1: Y(1, a * qq(6), -1); break;
        default: throw InvalidLetter("invalid type D4~3 letter");
    }
    return m;
}

}  // namespace

YMonomial box_monomial(const CartanData& cd, int letter, const QMonomial& a, BoxWidth width) {
    switch (cd.type.family) {
        case Family::A:
            if (cd.type.twist == 1) return box_A(cd, letter, a);
            throw InvalidLetter("no box table for " + cd.type.str());
        case Family::B:
            return box_B(cd, letter, a, width);
        case Family::C:
            if (width == BoxWidth::Half) throw InvalidLetter("type C has no half-width boxes");
            return box_C(cd, letter, a);
        case Family::D:
            if (cd.type.twist == 1) return box_D1(cd, letter, a, width);
            if (cd.type.twist == 2) return box_D2(cd, letter, a, width);
            if (width == BoxWidth::Half) throw InvalidLetter("D4~3 has no half-width boxes");
            return box_D3(cd, letter, a);
        case Family::G:
            if (width == BoxWidth::Half) throw InvalidLetter("G2~1 has no half-width boxes");
            return box_G(cd, letter, a);
    }
    throw Error("unreachable");
}

YMonomial column_qchar(const CartanData& cd, const Column& col, const QMonomial& a) {
    const int k = static_cast<int>(col.letters.size());
    const QMonomial qt = qtilde(cd);
    YMonomial out;
    for (int h = 1; h <= k; ++h)
        out = out * box_monomial(cd, col.letters[h - 1], a * qt.pow(k + 1 - 2 * h), col.width);
    return out;
}

YMonomial tableau_qchar(const CartanData& cd, const Tableau& t, const QMonomial& a) {
    const int m = t.width();
    YMonomial out;
    for (int j = 1; j <= m; ++j)
        out = out * column_qchar(cd, t.columns[j - 1], a * QMonomial::q(1 - m + 2 * j));
    return out;
}

Tableau Tableau::parse(const std::string& text) {
    Tableau t;
    std::string s = text;
    BoxWidth width = BoxWidth::Full;
    size_t start = s.find_first_not_of(" \t");
    if (start != std::string::npos && s.compare(start, 2, "h:") == 0) {
        width = BoxWidth::Half;
        s = s.substr(start + 2);
    }
    std::vector<std::vector<int>> rows;
    std::istringstream in(s);
    std::string row;
    while (std::getline(in, row, ',')) {
        std::istringstream rs(row);
        std::string tok;
        std::vector<int> letters;
        while (rs >> tok) {
            if (tok[0] == 'b')
                letters.push_back(-std::stoi(tok.substr(1)));
            else
                letters.push_back(std::stoi(tok));
        }
        if (!letters.empty()) rows.push_back(std::move(letters));
    }
    if (rows.empty()) throw MalformedSpec("empty tableau");
    const size_t m = rows[0].size();
    for (const auto& r : rows)
        if (r.size() != m) throw MalformedSpec("ragged tableau rows");
    t.columns.resize(m);
    for (size_t j = 0; j < m; ++j) {
        t.columns[j].width = width;
        for (const auto& r : rows) t.columns[j].letters.push_back(r[j]);
    }
    return t;
}

std::string Tableau::str() const {
    std::string out;
    for (int h = 0; h < height(); ++h) {
        if (h) out += ", ";
        for (int j = 0; j < width(); ++j) {
            if (j) out += " ";
            int v = columns[j].letters[h];
            out += v < 0 ? "b" + std::to_string(-v) : std::to_string(v);
        }
    }
    return out;
}

YMonomial kr_highest_monomial(const CartanData& cd, int k, int m, const QMonomial& a) {
    QMonomial base = cd.type.twist == 1 ? QMonomial::minus_one() * cd.qk(k) : QMonomial::minus_q();
    YMonomial out;
    for (int j = 1; j <= m; ++j) out.mul_var(k, a * base.pow(m + 1 - 2 * j), 1);
    return out;
}

QCharacter kr_qcharacter_typeA(const CartanData& cd, int k, int m, const QMonomial& a,
                               long long max_tableaux) {
    if (cd.type.family != Family::A || cd.type.twist != 1)
        throw Error("exact KR q-characters are implemented for type A~1 only");
    const int n = alphabet_n(cd);
    if (k < 1 || k > n - 1) throw Error("node out of range: k must satisfy 1 <= k <= n-1");
    if (m < 1) throw Error("KR multiplicity must be >= 1");

    // columns are k-subsets of 1..n; a tableau is a chain of entrywise
    // weakly increasing columns
    std::vector<std::vector<int>> subsets;
    std::vector<int> cur(k);
    auto gen = [&](auto&& self, int pos, int lo) -> void {
        if (pos == k) {
            subsets.push_back(cur);
            return;
        }
        for (int v = lo; v <= n - (k - pos - 1); ++v) {
            cur[pos] = v;
            self(self, pos + 1, v + 1);
        }
    };
    gen(gen, 0, 1);

    const size_t S = subsets.size();
    std::vector<std::vector<size_t>> next(S);
    for (size_t i = 0; i < S; ++i)
        for (size_t j = 0; j < S; ++j) {
            bool ok = true;
            for (int h = 0; h < k; ++h)
                if (subsets[i][h] > subsets[j][h]) {
                    ok = false;
                    break;
                }
            if (ok) next[i].push_back(j);
        }

    // count first so the cap aborts before any expensive work
    std::vector<long long> ways(S, 1);
    long long total = 0;
    for (int col = m - 1; col >= 1; --col) {
        std::vector<long long> acc(S, 0);
        for (size_t i = 0; i < S; ++i)
            for (size_t j : next[i]) {
                acc[i] += ways[j];
                if (acc[i] > max_tableaux) throw EnumerationCapExceeded("tableau count exceeds cap");
            }
        ways = std::move(acc);
    }
    for (size_t i = 0; i < S; ++i) {
        total += ways[i];
        if (total > max_tableaux) throw EnumerationCapExceeded("tableau count exceeds cap");
    }

    // calibration: the all-[1..k] tableau must land on kr_highest_monomial
    const QMonomial base = a * QMonomial::minus_one().pow(m + 1) * QMonomial::q(-2);

    // per-subset column values at the generic spectral, shifted per column
    std::vector<YMonomial> colval(S);
    for (size_t i = 0; i < S; ++i) {
        Column c;
        c.letters = subsets[i];
        colval[i] = column_qchar(cd, c, QMonomial::one());
    }

    QCharacter chi;
    auto rec = [&](auto&& self, int col, size_t subset, const YMonomial& mono) -> void {
        YMonomial here =
            mono * colval[subset].spectral_shift(base * QMonomial::q(1 - m + 2 * (col + 1)));
        if (col + 1 == m) {
            chi.add(here, 1);
            return;
        }
        for (size_t j : next[subset]) self(self, col + 1, j, here);
    };
    for (size_t i = 0; i < S; ++i) rec(rec, 0, i, YMonomial());
    return chi;
}

Coeff classical_dimension(const QCharacter& chi) { return chi.dimension(); }

std::vector<int> weight(const CartanData& cd, const YMonomial& m) { return m.weight(cd.n); }

}  // namespace krd
