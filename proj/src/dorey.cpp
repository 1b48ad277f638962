#include "krd/dorey.hpp"

namespace krd {

std::string DoreyInstance::str() const {
    std::string out = "V(" + std::to_string(factors[0].node) + "^" +
                      std::to_string(factors[0].mult) + ")@" + factors[0].spectral.str() + " (x) " +
                      "V(" + std::to_string(factors[1].node) + "^" +
                      std::to_string(factors[1].mult) + ")@" + factors[1].spectral.str() + " ->> ";
    for (size_t i = 0; i < target.size(); ++i) {
        if (i) out += " (x) ";
        out += "V(" + std::to_string(target[i].node) + "^" + std::to_string(target[i].mult) + ")";
        if (!target[i].spectral.is_one()) out += "@" + target[i].spectral.str();
    }
    return out;
}

namespace {

QMonomial sgn(int e) { return e % 2 == 0 ? QMonomial::one() : QMonomial::minus_one(); }

void require(bool cond, const std::string& what) {
    if (!cond) throw CaseConditionViolated("condition violated: " + what);
}

}  // namespace

std::vector<DoreyInstance> higher_dorey_instances(const CartanData& cd, int case_id, int k, int l,
                                                  int m) {
    const AffineType& t = cd.type;
    const int n = cd.n;
    require(m >= 1, "m >= 1");
    std::vector<DoreyInstance> out;
    DoreyInstance inst;
    inst.type = t;
    inst.case_id = case_id;

    switch (case_id) {
        case 1: {
            const bool typeA = t.family == Family::A && t.twist == 1;
            const bool typeD1 = t.family == Family::D && t.twist == 1;
            require(k >= 1 && l >= 1, "1 <= k, l");
            if (typeA)
                require(k + l <= n, "k + l <= n");
            else if (typeD1)
                require(k + l < n - 1, "k + l < n - 1");
            else
                require(k + l < n, "k + l < n");
            inst.factors = {KRModule{l, m, QMonomial::minus_q(-k)},
                            KRModule{k, m, QMonomial::minus_q(l)}};
            inst.target = {KRModule{k + l, m, QMonomial::one()}};
            out.push_back(inst);
            break;
        }
        case 2: {
            require(t.family == Family::B, "type B_n~1");
            require(k >= 1 && k <= n - 1, "1 <= k <= n - 1");
            inst.factors = {KRModule{k, m, sgn(n + m - k) * QMonomial::q(-(n - k))},
                            KRModule{n - k, m, sgn(k + m) * QMonomial::q(k)}};
            inst.target = {KRModule{n, 2 * m, QMonomial::one()}};
            out.push_back(inst);
            break;
        }
        case 3: {
            require(t.family == Family::C, "type C_n~1");
            require(k >= 1 && k <= n - 1, "1 <= k <= n - 1");
            inst.factors = {KRModule{n, m, sgn(n + m - k) * QMonomial::qs(-1 - n + k)},
                            KRModule{n, m, sgn(n + m - k) * QMonomial::qs(n + 1 - k)}};
            inst.target = {KRModule{k, 2 * m, QMonomial::one()}};
            out.push_back(inst);
            break;
        }
        case 4: {
            require(t.family == Family::D && t.twist == 1, "type D_n~1");
            require(l >= 1 && l <= n - 2, "1 <= l <= n - 2");
            for (int np : {n - 1, n})
                for (int npp : {n - 1, n}) {
                    if (((np - npp) - (n - l)) % 2 != 0) continue;
                    inst.factors = {KRModule{np, m, QMonomial::minus_q(-n + l + 1)},
                                    KRModule{npp, m, QMonomial::minus_q(n - l - 1)}};
                    inst.target = {KRModule{l, m, QMonomial::one()}};
                    out.push_back(inst);
                }
            break;
        }
        case 5: {
            require(t.family == Family::D && t.twist == 1, "type D_n~1");
            require(k >= 1 && l >= 1 && k + l == n - 1, "k + l == n - 1");
            inst.factors = {KRModule{l, m, QMonomial::minus_q(-k)},
                            KRModule{k, m, QMonomial::minus_q(l)}};
            inst.target = {KRModule{n - 1, m, QMonomial::one()}, KRModule{n, m, QMonomial::one()}};
            out.push_back(inst);
            break;
        }
        case 6: {
            require(t.family == Family::G, "type G2~1");
            inst.factors = {KRModule{1, m, QMonomial::minus_qt(-3)},
                            KRModule{1, m, QMonomial::minus_qt(3)}};
            inst.target = {KRModule{2, 3 * m, QMonomial::one()}};
            out.push_back(inst);
            break;
        }
        case 7: {
            require(t.family == Family::D && t.twist == 2, "type D_{n+1}~2");
            require(k >= 1 && k <= n - 1, "1 <= k <= n - 1");
            require((n - k) % 2 == 0, "n - k even");
            const QMonomial iota = QMonomial::sqrt_minus_one();
            const QMonomial mq2 = QMonomial::minus_one() * QMonomial::q(2);
            for (int s = 0; s < 2; ++s) {
                QMonomial u = s == 0 ? iota : iota.inverse();
                inst.factors = {KRModule{n, m, u * mq2.pow(-(n - k) / 2)},
                                KRModule{n, m, u.inverse() * mq2.pow((n - k) / 2)}};
                inst.target = {KRModule{k, m, QMonomial::one()}};
                out.push_back(inst);
            }
            break;
        }
        case 8: {
            require(t.family == Family::D && t.twist == 3, "type D4~3");
            inst.factors = {KRModule{1, m, QMonomial::minus_q(-1)},
                            KRModule{1, m, QMonomial::minus_q(1)}};
            inst.target = {KRModule{2, m, QMonomial::one()}};
            out.push_back(inst);
            break;
        }
        default:
            throw CaseConditionViolated("unknown theorem case " + std::to_string(case_id));
    }
    return out;
}

bool dorey_weights_balance(const CartanData& cd, const DoreyInstance& inst) {
    const int n = cd.n;
    std::vector<long long> lhs(n, 0), rhs(n, 0);
    for (const auto& f : inst.factors) lhs[f.node - 1] += f.mult;
    for (const auto& tmod : inst.target) rhs[tmod.node - 1] += tmod.mult;
    return dominates_by_roots(cd, lhs, rhs);
}

Coeff verify_dominant_multiplicity(const CartanData& cd, const DoreyInstance& inst,
                                   long long max_tableaux) {
    if (!(cd.type.family == Family::A && cd.type.twist == 1))
        throw Error("dominant-multiplicity verification is implemented for type A~1 only");
    QCharacter prod = QCharacter::unit();
    for (const auto& f : inst.factors)
        prod = prod * kr_qcharacter_typeA(cd, f.node, f.mult, f.spectral, max_tableaux);
    YMonomial want;
    for (const auto& tm : inst.target)
        want = want * kr_highest_monomial(cd, tm.node, tm.mult, tm.spectral);
    return prod.coefficient(want);
}

}  // namespace krd
