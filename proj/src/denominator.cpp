#include "krd/denominator.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace krd {

void RootMultiset::add(const QMonomial& root, int mult) {
    if (mult == 0) return;
    auto it = factors_.find(root);
    if (it == factors_.end())
        factors_.emplace(root, mult);
    else {
        it->second += mult;
        if (it->second == 0) factors_.erase(it);
    }
}

RootMultiset& RootMultiset::operator*=(const RootMultiset& o) {
    for (const auto& [root, mult] : o.factors_) add(root, mult);
    return *this;
}

RootMultiset RootMultiset::shifted(const QMonomial& c) const {
    RootMultiset out;
    QMonomial cinv = c.inverse();
    for (const auto& [root, mult] : factors_) out.add(root * cinv, mult);
    return out;
}

int RootMultiset::multiplicity(const QMonomial& root) const {
    auto it = factors_.find(root);
    return it == factors_.end() ? 0 : it->second;
}

int RootMultiset::degree() const {
    int d = 0;
    for (const auto& [root, mult] : factors_) d += mult;
    return d;
}

std::string RootMultiset::str() const {
    if (factors_.empty()) return "1";
    std::string out;
    for (const auto& [root, mult] : factors_) {
        std::string r = root.str();
        // fold a leading sign into the factor for readability
        if (!r.empty() && r[0] == '-')
            out += "(z+" + r.substr(1) + ")";
        else
            out += "(z-" + r + ")";
        if (mult != 1) out += "^" + std::to_string(mult);
    }
    return out;
}

void CycloSum::add(const QMonomial& m, long long c) {
    if (c == 0) return;
    auto it = terms.find(m);
    if (it == terms.end())
        terms.emplace(m, c);
    else {
        it->second += c;
        if (it->second == 0) terms.erase(it);
    }
}

std::string CycloSum::str() const {
    if (terms.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms) {
        long long a = c;
        if (first) {
            if (a < 0) {
                out += "-";
                a = -a;
            }
        } else {
            out += a < 0 ? " - " : " + ";
            if (a < 0) a = -a;
        }
        if (a != 1 || m.is_one()) out += std::to_string(a);
        if (!m.is_one()) {
            if (a != 1) out += "*";
            out += m.str();
        }
        first = false;
    }
    return out;
}

std::vector<CycloSum> expand(const RootMultiset& r) {
    std::vector<CycloSum> coeffs(1);
    coeffs[0].add(QMonomial::one(), 1);
    for (const auto& [root, mult] : r.factors()) {
        for (int rep = 0; rep < mult; ++rep) {
            std::vector<CycloSum> next(coeffs.size() + 1);
            for (size_t i = 0; i < coeffs.size(); ++i) {
                for (const auto& [m, c] : coeffs[i].terms) {
                    next[i].add(m, c);                 // z * coeff
                    next[i + 1].add(m * root, -c);     // (-root) * coeff
                }
            }
            coeffs = std::move(next);
        }
    }
    return coeffs;
}

void FundamentalTable::set(const AffineType& type, int k, int l, RootMultiset roots) {
    if (k > l) std::swap(k, l);
    entries_[type.str() + "|" + std::to_string(k) + "|" + std::to_string(l)] = std::move(roots);
}

std::optional<RootMultiset> FundamentalTable::get(const AffineType& type, int k, int l) const {
    if (k > l) std::swap(k, l);
    auto it = entries_.find(type.str() + "|" + std::to_string(k) + "|" + std::to_string(l));
    if (it == entries_.end()) return std::nullopt;
    return it->second;
}

FundamentalTable FundamentalTable::parse(const std::string& text, const std::string& origin) {
    FundamentalTable tab;
    tab.source_ = origin;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream ls(line);
        std::string type_str;
        if (!(ls >> type_str)) continue;  // blank
        int k, l;
        std::string colon;
        if (!(ls >> k >> l >> colon) || colon != ":")
            throw MalformedSpec(origin + ":" + std::to_string(lineno) +
                                ": expected 'TYPE k l : root(;root)*'");
        AffineType type = parse_type(type_str);
        std::string rest;
        std::getline(ls, rest);
        RootMultiset roots;
        std::string tok;
        std::istringstream rs(rest);
        while (std::getline(rs, tok, ';')) {
            // trim
            size_t a = tok.find_first_not_of(" \t");
            size_t b = tok.find_last_not_of(" \t");
            if (a == std::string::npos) continue;
            roots.add(QMonomial::parse(tok.substr(a, b - a + 1)));
        }
        if (roots.empty())
            throw MalformedSpec(origin + ":" + std::to_string(lineno) + ": no roots given");
        tab.set(type, k, l, roots);
    }
    return tab;
}

FundamentalTable FundamentalTable::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open extension table: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse(ss.str(), path);
}

namespace {

// --- building blocks ----------------------------------------------------

RootMultiset from_roots(std::initializer_list<QMonomial> roots) {
    RootMultiset r;
    for (const auto& rho : roots) r.add(rho);
    return r;
}

// prod_{t=0}^{min(m,p)-1} d(unit^{-|p-m|-2t} z): the generic product form.
RootMultiset normal_form(const RootMultiset& fund, const QMonomial& unit, int m, int p) {
    RootMultiset out;
    int tmax = std::min(m, p) - 1;
    int gap = std::abs(p - m);
    for (int t = 0; t <= tmax; ++t) {
        QMonomial c = unit.pow(gap + 2 * t);
        for (const auto& [root, mult] : fund.factors()) out.add(root * c, mult);
    }
    return out;
}

QMonomial sign_pow(long long e) {  // (-1)^e
    return e % 2 == 0 ? QMonomial::one() : QMonomial::minus_one();
}

// --- fundamental denominators per type -----------------------------------

RootMultiset fund_A1(int n, int k, int l) {
    RootMultiset r;
    int bound = std::min(std::min(k, l), std::min(n - k, n - l));
    for (int s = 1; s <= bound; ++s) r.add(QMonomial::minus_q(2 * s + std::abs(k - l)));
    return r;
}

RootMultiset fund_B1(int n, int k, int l) {
    RootMultiset r;
    if (k > l) std::swap(k, l);
    if (l < n) {
        for (int s = 1; s <= k; ++s) {
            r.add(QMonomial::minus_q(std::abs(k - l) + 2 * s));
            r.add(QMonomial::minus_one() * QMonomial::minus_q(2 * n - k - l - 1 + 2 * s));
        }
    } else if (k < n) {
        for (int s = 1; s <= k; ++s)
            r.add(sign_pow(n + k) * QMonomial::qs(2 * n - 2 * k - 1 + 4 * s));
    } else {
        for (int s = 1; s <= n; ++s) r.add(QMonomial::qs(4 * s - 2));
    }
    return r;
}

RootMultiset fund_C1(int n, int k, int l) {
    RootMultiset r;
    int b1 = std::min(std::min(k, l), std::min(n - k, n - l));
    for (int s = 1; s <= b1; ++s) r.add(QMonomial::minus_qs(std::abs(k - l) + 2 * s));
    for (int s = 1; s <= std::min(k, l); ++s)
        r.add(QMonomial::minus_qs(2 * n + 2 - k - l + 2 * s));
    return r;
}

// Type D_N^(1) fundamentals with (-q) replaced by `unit` (the D_{n+1}^(2)
// substitution feeds unit = -q^2 here).
RootMultiset fund_D1(int N, int k, int l, const QMonomial& unit) {
    RootMultiset r;
    if (k > l) std::swap(k, l);
    if (l <= N - 2) {
        for (int s = 1; s <= k; ++s) {
            r.add(unit.pow(std::abs(k - l) + 2 * s));
            r.add(unit.pow(2 * N - 2 - k - l + 2 * s));
        }
    } else if (k <= N - 2) {
        for (int s = 1; s <= k; ++s) r.add(unit.pow(N - k - 1 + 2 * s));
    } else if (k == l) {
        for (int s = 1; s <= N / 2; ++s) r.add(unit.pow(4 * s - 2));
    } else {
        // the cross pair (N-1, N)
        for (int s = 1; s <= (N - 1) / 2; ++s) r.add(unit.pow(4 * s));
    }
    return r;
}

const QMonomial kGammaShiftG2 = QMonomial::minus_qt();

RootMultiset fund_G2(int k, int l) {
    if (k > l) std::swap(k, l);
    if (k == 1 && l == 1)
        return from_roots({QMonomial::qt(6), QMonomial::qt(8), QMonomial::qt(10), QMonomial::qt(12)});
    if (k == 1 && l == 2)
        return from_roots({QMonomial::minus_one() * QMonomial::qt(7),
                           QMonomial::minus_one() * QMonomial::qt(11)});
    return from_roots({QMonomial::qt(2), QMonomial::qt(8), QMonomial::qt(12)});
}

RootMultiset fund_A2(int n, int k, int l) {  // A_{2n-1}^(2)
    RootMultiset r;
    if (k > l) std::swap(k, l);
    for (int s = 1; s <= k; ++s) {
        r.add(QMonomial::minus_q(std::abs(k - l) + 2 * s));
        r.add(QMonomial::minus_one() * QMonomial::minus_q(2 * n - k - l + 2 * s));
    }
    return r;
}

RootMultiset fund_D3(int k, int l) {  // D_4^(3), pair (2,2) only
    RootMultiset r;
    if (!(k == 2 && l == 2))
        throw FundamentalDataUnavailable(
            "D4~3 fundamental d_{" + std::to_string(k) + "," + std::to_string(l) +
            "} is not printed; supply an extension table");
    auto add_cubic = [&r](std::int64_t e, int mult) {
        for (const auto& rho : QMonomial::q(e).cube_roots()) r.add(rho, mult);
    };
    add_cubic(6, 1);
    add_cubic(12, 2);
    add_cubic(18, 1);
    return r;
}

// Roots of d(z) where d(eps * z^2) = prod (Z - rho) over the given multiset;
// eps is +1 or -1.  Each quadratic factor splits via square_roots.
RootMultiset split_square(const RootMultiset& quad, bool negate) {
    RootMultiset out;
    for (const auto& [rho, mult] : quad.factors()) {
        QMonomial target = negate ? QMonomial::minus_one() * rho : rho;
        for (const auto& root : target.square_roots()) out.add(root, mult);
    }
    return out;
}

RootMultiset negate_roots(const RootMultiset& r) {
    RootMultiset out;
    for (const auto& [rho, mult] : r.factors()) out.add(QMonomial::minus_one() * rho, mult);
    return out;
}

const QMonomial kMinusQSquared = QMonomial::minus_one() * QMonomial::q(2);

// D_{n+1}^(2) via the substitutions from the D_{n+1}^(1) formulas:
//   d(z;q) = d^{D1}(z^2;q^2)    for k,l <= n-1,
//   d(z;q) = d^{D1}(-z^2;q^2)   for l <= n-1, k = n,
//   d(z;q) = d^{D1}_{n,n}(-z;q^2) d^{D1}_{n,n+1}(-z;q^2)  for k = l = n.
RootMultiset kr_D2(int n, int k, int m, int l, int p) {
    const int N = n + 1;
    if (k > l) {
        std::swap(k, l);
        std::swap(m, p);
    }
    if (l <= n - 1) {
        RootMultiset inner = normal_form(fund_D1(N, k, l, kMinusQSquared), kMinusQSquared, m, p);
        return split_square(inner, false);
    }
    if (k <= n - 1) {
        RootMultiset inner = normal_form(fund_D1(N, k, N, kMinusQSquared), kMinusQSquared, m, p);
        return split_square(inner, true);
    }
    RootMultiset same = normal_form(fund_D1(N, N - 1, N - 1, kMinusQSquared), kMinusQSquared, m, p);
    RootMultiset cross = normal_form(fund_D1(N, N - 1, N, kMinusQSquared), kMinusQSquared, m, p);
    return negate_roots(same) * negate_roots(cross);
}

}  // namespace

RootMultiset fundamental_denominator(const CartanData& cd, int k, int l,
                                     const FundamentalTable* ext) {
    const AffineType& t = cd.type;
    if (k < 1 || k > cd.n || l < 1 || l > cd.n)
        throw Error("node out of range for " + t.str() + ": (" + std::to_string(k) + "," +
                    std::to_string(l) + ")");

    if (cd.extension_required) {  // A_{2n}^(2)
        if (ext)
            if (auto r = ext->get(t, k, l)) return *r;
        throw FundamentalDataUnavailable("fundamental denominators of " + t.str() +
                                         " require an extension table");
    }
    if (t.family == Family::D && t.twist == 3 && std::min(k, l) == 1) {
        if (ext)
            if (auto r = ext->get(t, k, l)) return *r;
        return fund_D3(std::min(k, l), std::max(k, l));  // raises with the exact message
    }

    switch (t.family) {
        case Family::A:
            if (t.twist == 1) return fund_A1(t.rank + 1, k, l);
            return fund_A2(cd.n, k, l);
        case Family::B:
            return fund_B1(cd.n, k, l);
        case Family::C:
            return fund_C1(cd.n, k, l);
        case Family::D:
            if (t.twist == 1) return fund_D1(t.rank, k, l, QMonomial::minus_q());
            if (t.twist == 2) return kr_D2(cd.n, k, 1, l, 1);
            return fund_D3(2, 2);
        case Family::G:
            return fund_G2(k, l);
    }
    throw Error("unreachable");
}

RootMultiset kr_denominator(const CartanData& cd, int k, int m, int l, int p,
                            const FundamentalTable* ext) {
    const AffineType& t = cd.type;
    if (m < 1 || p < 1) throw Error("KR multiplicities must be >= 1");
    const int n = cd.n;

    auto fund = [&](int a, int b) { return fundamental_denominator(cd, a, b, ext); };

    switch (t.family) {
        case Family::A:
            // untwisted and twisted A both follow the generic product form
            return normal_form(fund(k, l), QMonomial::minus_q(), m, p);
        case Family::B: {
            if (k < n && l < n) return normal_form(fund(k, l), QMonomial::minus_q(), m, p);
            if (k == n && l == n) return normal_form(fund(n, n), QMonomial::minus_qs(), m, p);
            // one spin node: d_{l^p,n^m} with l < n
            int ll = k < n ? k : l;
            int pp = k < n ? m : p;  // multiplicity at the non-spin node
            int mm = k < n ? p : m;  // multiplicity at the spin node
            RootMultiset r;
            int tmax = std::min(2 * pp, mm) - 1;
            for (int tt = 0; tt <= tmax; ++tt)
                for (int s = 1; s <= ll; ++s)
                    r.add(sign_pow(n + ll + pp + mm) *
                          QMonomial::qs(2 * n - 2 * ll - 2 + std::abs(2 * pp - mm) + 4 * s + 2 * tt));
            return r;
        }
        case Family::C: {
            if (k < n && l < n) {
                if (std::max(m, p) == 1) return fund(k, l);
                RootMultiset r;
                int tmax = std::min(m, p) - 1;
                for (int tt = 0; tt <= tmax; ++tt)
                    for (int s = 1; s <= std::min(k, l); ++s) {
                        r.add(QMonomial::minus_qs(std::abs(k - l) + std::abs(m - p) +
                                                  2 * (s + tt)));
                        r.add(QMonomial::minus_qs(2 * n + 2 - k - l + std::abs(m - p) +
                                                  2 * (s + tt)));
                    }
                return r;
            }
            if (k == n && l == n) {
                RootMultiset r;
                int tmax = std::min(m, p) - 1;
                for (int tt = 0; tt <= tmax; ++tt)
                    for (int s = 1; s <= n; ++s)
                        r.add(sign_pow(m + p) *
                              QMonomial::qs(2 + 2 * std::abs(m - p) + 2 * s + 4 * tt));
                return r;
            }
            // d_{l^p,n^m} with l < n; the long node carries multiplicity m
            int ll = k < n ? k : l;
            int pp = k < n ? m : p;
            int mm = k < n ? p : m;
            RootMultiset r;
            int tmax = std::min(pp, 2 * mm) - 1;
            for (int tt = 0; tt <= tmax; ++tt)
                for (int s = 1; s <= ll; ++s)
                    r.add(sign_pow(n + pp + ll + mm) *
                          QMonomial::qs(n + 1 - ll + std::abs(2 * mm - pp) + 2 * s + 2 * tt));
            return r;
        }
        case Family::D:
            if (t.twist == 1) return normal_form(fund(k, l), QMonomial::minus_q(), m, p);
            if (t.twist == 2) return kr_D2(n, k, m, l, p);
            return normal_form(fund(k, l), QMonomial::minus_q(), m, p);  // D_4^(3)
        case Family::G: {
            if (k == 1 && l == 1) return normal_form(fund(1, 1), QMonomial::minus_q(), m, p);
            if (k == 2 && l == 2) {
                if (m == 1 && p == 1) return fund(2, 2);
                if (m == 2 && p == 2)
                    return from_roots({QMonomial::qt(2), QMonomial::qt(4), QMonomial::qt(8),
                                       QMonomial::qt(8), QMonomial::qt(10), QMonomial::qt(12),
                                       QMonomial::qt(14)});
                RootMultiset r;
                int tmax = std::min(m, p) - 1;
                for (int tt = 0; tt <= tmax; ++tt)
                    for (int s = 1; s <= 2; ++s) {
                        r.add(QMonomial::minus_qt(-2 + std::abs(m - p) + 4 * s + 2 * tt));
                        r.add(QMonomial::minus_qt(4 + std::abs(m - p) + 4 * s + 2 * tt));
                    }
                return r;
            }
            // d_{1^p,2^m}: node 1 carries p, node 2 carries m
            int pp = k == 1 ? m : p;
            int mm = k == 1 ? p : m;
            RootMultiset fund12 = fund_G2(1, 2);
            RootMultiset r;
            int tmax = std::min(3 * pp, mm) - 1;
            for (int tt = 0; tt <= tmax; ++tt) {
                QMonomial c = kGammaShiftG2.pow(std::abs(3 * pp - mm) - 2 + 2 * tt);
                for (const auto& [root, mult] : fund12.factors()) r.add(root * c, mult);
            }
            return r;
        }
    }
    throw Error("unreachable");
}

}  // namespace krd
