#include "krd/tsystem.hpp"

#include <algorithm>

namespace krd {

std::string KRLabel::str() const {
    std::string out = conv == Convention::W ? "W" : "V";
    out += "(" + std::to_string(node) + "^" + std::to_string(mult) + ")";
    if (!spectral.is_one()) out += "@" + spectral.str();
    return out;
}

KRLabel w_to_v(const CartanData& cd, const KRLabel& label) {
    if (label.conv == Convention::V) return label;
    KRLabel out = label;
    out.conv = Convention::V;
    if (label.mult > 0) {
        QMonomial shift = (QMonomial::minus_one() * cd.qchk(label.node)).pow(label.mult - 1);
        out.spectral = label.spectral * shift;
    }
    return out;
}

KRLabel v_to_w(const CartanData& cd, const KRLabel& label) {
    if (label.conv == Convention::W) return label;
    KRLabel out = label;
    out.conv = Convention::W;
    if (label.mult > 0) {
        QMonomial shift = (QMonomial::minus_one() * cd.qchk(label.node)).pow(1 - label.mult);
        out.spectral = label.spectral * shift;
    }
    return out;
}

namespace {

KRLabel W(int node, int mult, const QMonomial& spectral) {
    return KRLabel{Convention::W, node, std::max(mult, 0), spectral};
}

KRLabel V(int node, int mult, const QMonomial& spectral) {
    return KRLabel{Convention::V, node, std::max(mult, 0), spectral};
}

}  // namespace

std::vector<TSystemIdentity> tsystem_identities(const CartanData& cd, int i, int k,
                                                const QMonomial& a, Convention conv) {
    const AffineType& t = cd.type;
    const int n = cd.n;
    if (i < 1 || i > n) throw Error("node out of range");
    if (k < 1) throw Error("T-system level must be >= 1");

    TSystemIdentity id;
    id.type = t;
    auto mq = [](std::int64_t e) { return QMonomial::minus_q(e); };
    auto mqs = [](std::int64_t e) { return QMonomial::minus_qs(e); };
    auto mqt = [](std::int64_t e) { return QMonomial::minus_qt(e); };

    const bool simply_laced_like =
        (t.family == Family::A && t.twist == 1) || (t.family == Family::D && t.twist == 1);

    if (simply_laced_like) {
        id.family = "ADE";
        for (int j = 1; j <= n; ++j)
            if (cd.adjacent(i, j)) id.sub.push_back(W(j, k, a * mq(1)));
        id.mid = {W(i, k, a * mq(2)), W(i, k, a)};
        id.quot = {W(i, k - 1, a * mq(2)), W(i, k + 1, a)};
    } else if (t.family == Family::B) {
        if (i <= n - 2) {
            id.family = "B:low";
            if (i - 1 >= 1) id.sub.push_back(W(i - 1, k, a * mq(1)));
            id.sub.push_back(W(i + 1, k, a * mq(1)));
            id.mid = {W(i, k, a * mq(2)), W(i, k, a)};
            id.quot = {W(i, k - 1, a * mq(2)), W(i, k + 1, a)};
        } else if (i == n - 1) {
            id.family = "B:n-1";
            if (n - 2 >= 1) id.sub.push_back(W(n - 2, k, a * mq(1)));
            id.sub.push_back(W(n, 2 * k, a * mqs(1)));
            id.mid = {W(n - 1, k, a * mq(2)), W(n - 1, k, a)};
            id.quot = {W(n - 1, k - 1, a * mq(2)), W(n - 1, k + 1, a)};
        } else if (k % 2 == 0) {
            id.family = "B:spin-even";
            const int kk = k / 2;
            id.sub.push_back(W(n - 1, kk, a));
            id.sub.push_back(W(n - 1, kk, a * QMonomial::q(1)));
            id.mid = {W(n, k, a * mqs(1)), W(n, k, a * mqs(-1))};
            id.quot = {W(n, k - 1, a * mqs(1)), W(n, k + 1, a * mqs(-1))};
        } else {
            id.family = "B:spin-odd";
            const int kk = (k - 1) / 2;
            id.sub.push_back(W(n - 1, kk + 1, a));
            id.sub.push_back(W(n - 1, kk, a * QMonomial::q(1)));
            id.mid = {W(n, k, a * mqs(1)), W(n, k, a * mqs(-1))};
            id.quot = {W(n, k - 1, a * mqs(1)), W(n, k + 1, a * mqs(-1))};
        }
    } else if (t.family == Family::C) {
        if (i <= n - 2) {
            id.family = "C:low";
            if (i - 1 >= 1) id.sub.push_back(W(i - 1, k, a * mqs(1)));
            id.sub.push_back(W(i + 1, k, a * mqs(1)));
            id.mid = {W(i, k, a * mqs(2)), W(i, k, a)};
            id.quot = {W(i, k - 1, a * mqs(2)), W(i, k + 1, a)};
        } else if (i == n - 1 && k % 2 == 0) {
            id.family = "C:n-1-even";
            const int kk = k / 2;
            if (n - 2 >= 1) id.sub.push_back(W(n - 2, k, a * mqs(1)));
            id.sub.push_back(W(n, kk, a * mqs(1)));
            id.sub.push_back(W(n, kk, a * mqs(3)));
            id.mid = {W(n - 1, k, a * mqs(2)), W(n - 1, k, a)};
            id.quot = {W(n - 1, k - 1, a * mqs(2)), W(n - 1, k + 1, a)};
        } else if (i == n - 1) {
            id.family = "C:n-1-odd";
            const int r = (k - 1) / 2;
            if (n - 2 >= 1) id.sub.push_back(W(n - 2, k, a * mqs(1)));
            id.sub.push_back(W(n, r + 1, a * mqs(1)));
            if (r >= 1) id.sub.push_back(W(n, r, a * mqs(3)));
            id.mid = {W(n - 1, k, a * mqs(2)), W(n - 1, k, a)};
            id.quot = {W(n - 1, k - 1, a * mqs(2)), W(n - 1, k + 1, a)};
        } else {
            id.family = "C:long";
            id.sub.push_back(W(n - 1, 2 * k, a * mqs(1)));
            id.mid = {W(n, k, a * mqs(4)), W(n, k, a)};
            id.quot = {W(n, k - 1, a * mqs(4)), W(n, k + 1, a)};
        }
    } else if (t.family == Family::G) {
        if (i == 1) {
            id.family = "G2:long";
            id.sub.push_back(W(2, 3 * k, a * mqt(1)));
            id.mid = {W(1, k, a * mqt(6)), W(1, k, a)};
            id.quot = {W(1, k - 1, a * mqt(6)), W(1, k + 1, a)};
        } else {
            const int r = k / 3, rem = k % 3;
            id.mid = {W(2, k, a * mqt(2)), W(2, k, a)};
            id.quot = {W(2, k - 1, a * mqt(2)), W(2, k + 1, a)};
            if (rem == 0) {
                id.family = "G2:short-0";
                id.sub.push_back(W(1, r, a * mqt(1)));
                id.sub.push_back(W(1, r, a * mqt(3)));
                id.sub.push_back(W(1, r, a * mqt(5)));
            } else if (rem == 1) {
                id.family = "G2:short-1";
                id.sub.push_back(W(1, r + 1, a * mqt(1)));
                id.sub.push_back(W(1, r, a * mqt(3)));
                id.sub.push_back(W(1, r, a * mqt(5)));
            } else {
                id.family = "G2:short-2";
                id.sub.push_back(W(1, r + 1, a * mqt(1)));
                id.sub.push_back(W(1, r + 1, a * mqt(3)));
                id.sub.push_back(W(1, r, a * mqt(5)));
            }
            // drop trivial factors from the r = 0 boundary
            std::erase_if(id.sub, [](const KRLabel& l) { return l.mult == 0; });
        }
    } else if (t.family == Family::A) {  // A^(2)
        const bool odd = t.rank % 2 == 1;  // A_{2n-1}^(2) vs A_{2n}^(2)
        if (i <= n - (odd ? 2 : 1)) {
            id.family = "A2:low";
            if (i - 1 >= 1) id.sub.push_back(W(i - 1, k, a * mq(1)));
            if (i + 1 <= n) id.sub.push_back(W(i + 1, k, a * mq(1)));
            id.mid = {W(i, k, a * mq(2)), W(i, k, a)};
            id.quot = {W(i, k - 1, a * mq(2)), W(i, k + 1, a)};
        } else if (!odd) {
            // A_{2n}^(2) node n (A_2^(2) included with the sub factor W_{k,aq})
            id.family = "A2:fixed";
            if (n - 1 >= 1) id.sub.push_back(W(n - 1, k, a * mq(1)));
            id.sub.push_back(W(n, k, a * QMonomial::q(1)));
            id.mid = {W(n, k, a * mq(2)), W(n, k, a)};
            id.quot = {W(n, k + 1, a), W(n, k - 1, a * mq(2))};
        } else if (i == n - 1) {
            id.family = "A2:n-1";
            if (n - 2 >= 1) id.sub.push_back(W(n - 2, k, a * mq(1)));
            id.sub.push_back(W(n, k, a.pow(2) * mq(2)));
            id.mid = {W(n - 1, k, a * mq(2)), W(n - 1, k, a)};
            id.quot = {W(n - 1, k + 1, a), W(n - 1, k - 1, a * mq(2))};
        } else {
            id.family = "A2:long";
            QMonomial ap = a.square_roots()[0];
            id.sub.push_back(W(n - 1, k, ap * mq(1)));
            id.sub.push_back(W(n - 1, k, ap * QMonomial::q(1)));
            id.mid = {W(n, k, a * mq(4)), W(n, k, a)};
            id.quot = {W(n, k + 1, a), W(n, k - 1, a * mq(4))};
        }
    } else if (t.family == Family::D && t.twist == 2) {
        if (i <= n - 2) {
            id.family = "D2:low";
            if (i - 1 >= 1) id.sub.push_back(W(i - 1, k, a * mq(2)));
            id.sub.push_back(W(i + 1, k, a * mq(2)));
            id.mid = {W(i, k, a * mq(4)), W(i, k, a)};
            id.quot = {W(i, k - 1, a * mq(4)), W(i, k + 1, a)};
        } else if (i == n - 1) {
            id.family = "D2:n-1";
            if (n - 2 >= 1) id.sub.push_back(W(n - 2, k, a * mq(2)));
            auto roots = a.square_roots();
            id.sub.push_back(W(n, k, roots[0] * mq(1)));
            id.sub.push_back(W(n, k, roots[1] * mq(1)));
            id.mid = {W(n - 1, k, a * mq(4)), W(n - 1, k, a)};
            id.quot = {W(n - 1, k + 1, a), W(n - 1, k - 1, a * mq(4))};
        } else {
            id.family = "D2:short";
            id.sub.push_back(W(n - 1, k, a.pow(2) * mq(2)));
            id.mid = {W(n, k, a * mq(2)), W(n, k, a)};
            id.quot = {W(n, k + 1, a), W(n, k - 1, a * mq(2))};
        }
    } else if (t.family == Family::D && t.twist == 3) {
        if (i == 2) {
            id.family = "D3:short";
            id.sub.push_back(W(1, k, a.pow(3) * mq(3)));
            id.mid = {W(2, k, a * mq(2)), W(2, k, a)};
            id.quot = {W(2, k - 1, a * mq(2)), W(2, k + 1, a)};
        } else {
            id.family = "D3:long";
            QMonomial app = a.cube_roots()[0];
            const QMonomial w = QMonomial::omega();
            id.sub.push_back(W(2, k, app * mq(1)));
            id.sub.push_back(W(2, k, app * w * mq(1)));
            id.sub.push_back(W(2, k, app * w.pow(2) * mq(1)));
            id.mid = {W(1, k, a * mq(6)), W(1, k, a)};
            id.quot = {W(1, k + 1, a), W(1, k - 1, a * mq(6))};
        }
    } else {
        throw UnsupportedIdentity("no T-system table for " + t.str());
    }

    std::vector<TSystemIdentity> out;
    out.push_back(conv == Convention::W ? id : convert_identity(cd, id));
    return out;
}

TSystemIdentity convert_identity(const CartanData& cd, const TSystemIdentity& id) {
    TSystemIdentity out = id;
    for (auto& l : out.sub) l = w_to_v(cd, l);
    for (auto& l : out.mid) l = w_to_v(cd, l);
    for (auto& l : out.quot) l = w_to_v(cd, l);
    return out;
}

TSystemIdentity printed_v_tsystem(const CartanData& cd, int i, int k, const QMonomial& a) {
    const AffineType& t = cd.type;
    const int n = cd.n;
    if (t.twist != 1) throw UnsupportedIdentity("printed V-list covers untwisted types only");
    TSystemIdentity id;
    id.type = t;
    auto mq = [](std::int64_t e) { return QMonomial::minus_q(e); };
    auto mqs = [](std::int64_t e) { return QMonomial::minus_qs(e); };
    auto mqt = [](std::int64_t e) { return QMonomial::minus_qt(e); };
    auto sgn = [](int e) { return e % 2 == 0 ? QMonomial::one() : QMonomial::minus_one(); };

    if (t.family == Family::A || t.family == Family::D) {
        id.family = "ADE";
        for (int j = 1; j <= n; ++j)
            if (cd.adjacent(i, j)) id.sub.push_back(V(j, k, a));
        id.mid = {V(i, k, a * mq(1)), V(i, k, a * mq(-1))};
        id.quot = {V(i, k - 1, a), V(i, k + 1, a)};
    } else if (t.family == Family::B) {
        if (i <= n - 2) {
            id.family = "B:low";
            if (i - 1 >= 1) id.sub.push_back(V(i - 1, k, a));
            id.sub.push_back(V(i + 1, k, a));
            id.mid = {V(i, k, a * mq(1)), V(i, k, a * mq(-1))};
            id.quot = {V(i, k - 1, a), V(i, k + 1, a)};
        } else if (i == n - 1) {
            id.family = "B:n-1";
            if (n - 2 >= 1) id.sub.push_back(V(n - 2, k, a));
            id.sub.push_back(V(n, 2 * k, a * sgn(k)));
            id.mid = {V(n - 1, k, a * mq(1)), V(n - 1, k, a * mq(-1))};
            id.quot = {V(n - 1, k - 1, a), V(n - 1, k + 1, a)};
        } else if (k % 2 == 0) {
            // The printed second factor reads (-1)^{k+1} a qs; conversion of
            // the W list forces (-1)^k (cf. the odd-level line below, which
            // matches as printed).
            id.family = "B:spin-even";
            const int kk = k / 2;
            id.sub.push_back(V(n - 1, kk, a * sgn(kk) * QMonomial::qs(-1)));
            id.sub.push_back(V(n - 1, kk, a * sgn(kk) * QMonomial::qs(1)));
            id.mid = {V(n, k, a * mqs(1)), V(n, k, a * mqs(-1))};
            id.quot = {V(n, k - 1, a), V(n, k + 1, a)};
        } else {
            id.family = "B:spin-odd";
            const int kk = (k - 1) / 2;
            id.sub.push_back(V(n - 1, kk + 1, a * sgn(kk)));
            id.sub.push_back(V(n - 1, kk, a * sgn(kk + 1)));
            id.mid = {V(n, k, a * mqs(1)), V(n, k, a * mqs(-1))};
            id.quot = {V(n, k - 1, a), V(n, k + 1, a)};
        }
    } else if (t.family == Family::C) {
        if (i <= n - 2) {
            id.family = "C:low";
            if (i - 1 >= 1) id.sub.push_back(V(i - 1, k, a));
            id.sub.push_back(V(i + 1, k, a));
            id.mid = {V(i, k, a * mqs(1)), V(i, k, a * mqs(-1))};
            id.quot = {V(i, k - 1, a), V(i, k + 1, a)};
        } else if (i == n - 1 && k % 2 == 0) {
            id.family = "C:n-1-even";
            const int kk = k / 2;
            if (n - 2 >= 1) id.sub.push_back(V(n - 2, k, a));
            id.sub.push_back(V(n, kk, a * sgn(kk) * QMonomial::qs(-1)));
            id.sub.push_back(V(n, kk, a * sgn(kk) * QMonomial::qs(1)));
            id.mid = {V(n - 1, k, a * mqs(-1)), V(n - 1, k, a * mqs(1))};
            id.quot = {V(n - 1, k - 1, a), V(n - 1, k + 1, a)};
        } else if (i == n - 1) {
            // Printed third factor reads (-1)^k a; conversion forces
            // (-1)^{k+1} on the lower multiplicity.
            id.family = "C:n-1-odd";
            const int r = (k - 1) / 2;
            if (n - 2 >= 1) id.sub.push_back(V(n - 2, k, a));
            id.sub.push_back(V(n, r + 1, a * sgn(r)));
            if (r >= 1) id.sub.push_back(V(n, r, a * sgn(r + 1)));
            id.mid = {V(n - 1, k, a * mqs(1)), V(n - 1, k, a * mqs(-1))};
            id.quot = {V(n - 1, k - 1, a), V(n - 1, k + 1, a)};
        } else {
            // Printed sub reads (-1)^{1+k} a; conversion forces (-1)^k.
            id.family = "C:long";
            id.sub.push_back(V(n - 1, 2 * k, a * sgn(k)));
            id.mid = {V(n, k, a * mq(1)), V(n, k, a * mq(-1))};
            id.quot = {V(n, k - 1, a), V(n, k + 1, a)};
        }
    } else if (t.family == Family::G) {
        if (i == 1) {
            id.family = "G2:long";
            id.sub.push_back(V(2, 3 * k, a));
            id.mid = {V(1, k, a * mq(1)), V(1, k, a * mq(-1))};
            id.quot = {V(1, k - 1, a), V(1, k + 1, a)};
        } else {
            const int r = k / 3, rem = k % 3;
            id.mid = {V(2, k, a * mqt(1)), V(2, k, a * mqt(-1))};
            id.quot = {V(2, k - 1, a), V(2, k + 1, a)};
            if (rem == 0) {
                id.family = "G2:short-0";
                id.sub.push_back(V(1, r, a * mqt(-2)));
                id.sub.push_back(V(1, r, a));
                id.sub.push_back(V(1, r, a * mqt(2)));
            } else if (rem == 1) {
                id.family = "G2:short-1";
                id.sub.push_back(V(1, r + 1, a));
                id.sub.push_back(V(1, r, a * mqt(-1)));
                id.sub.push_back(V(1, r, a * mqt(1)));
            } else {
                id.family = "G2:short-2";
                id.sub.push_back(V(1, r + 1, a * mqt(-1)));
                id.sub.push_back(V(1, r + 1, a * mqt(1)));
                id.sub.push_back(V(1, r, a));
            }
            std::erase_if(id.sub, [](const KRLabel& l) { return l.mult == 0; });
        }
    }
    return id;
}

namespace {

// multiset comparison of label lists after scaling lhs spectrals by u
bool labels_match(std::vector<KRLabel> lhs, std::vector<KRLabel> rhs, const QMonomial& u) {
    if (lhs.size() != rhs.size()) return false;
    for (auto& l : lhs)
        if (l.mult > 0) l.spectral = l.spectral * u;
    auto key = [](const KRLabel& l) {
        return std::tuple(l.node, l.mult, l.mult > 0 ? l.spectral : QMonomial::one());
    };
    auto cmp = [&](const KRLabel& x, const KRLabel& y) { return key(x) < key(y); };
    std::sort(lhs.begin(), lhs.end(), cmp);
    std::sort(rhs.begin(), rhs.end(), cmp);
    for (size_t i = 0; i < lhs.size(); ++i)
        if (key(lhs[i]) != key(rhs[i])) return false;
    return true;
}

}  // namespace

bool identities_match_mod_unit(const TSystemIdentity& id, const TSystemIdentity& printed) {
    // anchor the global unit on the first mid factor (both mids share node
    // and mult by construction)
    for (int flip = 0; flip < 2; ++flip) {
        const KRLabel& anchor = printed.mid[flip];
        if (anchor.node != id.mid[0].node || anchor.mult != id.mid[0].mult) continue;
        QMonomial u = anchor.spectral * id.mid[0].spectral.inverse();
        if (labels_match({id.mid.begin(), id.mid.end()}, {printed.mid.begin(), printed.mid.end()},
                         u) &&
            labels_match({id.quot.begin(), id.quot.end()},
                         {printed.quot.begin(), printed.quot.end()}, u) &&
            labels_match(id.sub, printed.sub, u))
            return true;
    }
    return false;
}

TSystemIdentity convert_identity_checked(const CartanData& cd, const TSystemIdentity& id) {
    TSystemIdentity out = convert_identity(cd, id);
    if (cd.type.twist == 1) {
        const KRLabel& m = id.mid[1];
        TSystemIdentity printed = printed_v_tsystem(cd, m.node, m.mult, QMonomial::one());
        if (!identities_match_mod_unit(out, printed))
            throw MismatchAgainstPrintedList("conversion of " + id.family +
                                             " disagrees with the printed V list");
    }
    return out;
}

bool weights_balance(const CartanData& cd, const TSystemIdentity& id) {
    const int n = cd.n;
    auto wt = [&](const std::vector<KRLabel>& ls) {
        std::vector<long long> w(n, 0);
        for (const auto& l : ls)
            if (l.mult > 0 && l.node >= 1 && l.node <= n) w[l.node - 1] += l.mult;
        return w;
    };
    std::vector<KRLabel> mid(id.mid.begin(), id.mid.end());
    std::vector<KRLabel> quot(id.quot.begin(), id.quot.end());
    auto wm = wt(mid), wq = wt(quot), ws = wt(id.sub);
    if (wm != wq) return false;
    return dominates_by_roots(cd, wm, ws);
}

QCharacter label_qcharacter(const CartanData& cd, const KRLabel& label, long long max_tableaux) {
    KRLabel v = w_to_v(cd, label);
    if (v.mult == 0) return QCharacter::unit();
    if (cd.type.family == Family::A && cd.type.twist == 1 && v.node == cd.n + 1)
        return QCharacter::unit();  // the determinant node of type A
    return kr_qcharacter_typeA(cd, v.node, v.mult, v.spectral, max_tableaux);
}

bool verify_tsystem_qchar(const CartanData& cd, const TSystemIdentity& id,
                          long long max_tableaux) {
    if (!(cd.type.family == Family::A && cd.type.twist == 1))
        throw Error("q-character verification is implemented for type A~1 only");
    QCharacter lhs =
        label_qcharacter(cd, id.mid[0], max_tableaux) * label_qcharacter(cd, id.mid[1], max_tableaux);
    QCharacter sub = QCharacter::unit();
    for (const auto& l : id.sub) sub = sub * label_qcharacter(cd, l, max_tableaux);
    QCharacter rhs = sub + label_qcharacter(cd, id.quot[0], max_tableaux) *
                               label_qcharacter(cd, id.quot[1], max_tableaux);
    return lhs == rhs;
}

}  // namespace krd
