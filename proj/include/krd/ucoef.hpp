#ifndef KRD_UCOEF_HPP
#define KRD_UCOEF_HPP

#include <map>
#include <string>
#include <vector>

#include "krd/denominator.hpp"

namespace krd {

// A universal coefficient as a formal signed product of infinite Pochhammer
// blocks (c z; base)_infty, all sharing one base (always p*^2 of the ambient
// type).  Nothing is ever evaluated; reduce_ratio below is pure bookkeeping
// plus the single telescoping identity
//     (a z; b)_infty / (a b^k z; b)_infty = prod_{j=0}^{k-1} (1 - a b^j z).
class PochhammerProduct {
   public:
    PochhammerProduct() = default;
    explicit PochhammerProduct(QMonomial base) : base_(base) {}

    const QMonomial& base() const { return base_; }
    const std::map<QMonomial, int>& blocks() const { return blocks_; }

    void add_block(const QMonomial& arg, int mult = 1);
    PochhammerProduct& operator*=(const PochhammerProduct& o);
    PochhammerProduct inverse() const;

    // d(c z) substitution: every block argument is multiplied by c.
    PochhammerProduct shifted(const QMonomial& c) const;

    bool empty() const { return blocks_.empty(); }
    std::string str() const;

   private:
    QMonomial base_ = QMonomial::one();
    std::map<QMonomial, int> blocks_;  // arg -> multiplicity (sign = num/den)
};

// A finite product of linear factors (1 - c z)^mult, tracked mod units.
struct LinearFactorProduct {
    std::map<QMonomial, int> factors;  // c -> multiplicity

    void add(const QMonomial& c, int mult = 1);
    // as (z - rho) roots, for display: rho = c^{-1}
    RootMultiset as_roots() const;
    bool empty() const { return factors.empty(); }
    bool all_nonnegative() const;
    std::string str() const;
};

struct RatioReport {
    PochhammerProduct residual_blocks;  // blocks that failed to telescope
    LinearFactorProduct finite_part;
    bool is_laurent = false;  // residual empty and all finite multiplicities >= 0
};

// num/den as a single reduced report.
RatioReport reduce_ratio(const PochhammerProduct& num, const PochhammerProduct& den);

bool canonical_eq_mod_units(const PochhammerProduct& p1, const PochhammerProduct& p2);

// a_{l^p,k^m}(z) from the closed forms collected in the universal-coefficient
// tables (types A, B, C, D untwisted, G_2^(1), D_4^(3), plus the fundamental
// m=p=1 form for A_{2N-1}^(2)).
PochhammerProduct universal_coefficient(const CartanData& cd, int k, int m, int l, int p);

// a_{l^p,k^m}(z) rebuilt from denominator roots:
//   prod_nu (p* y_nu z)(p* ybar_nu z) / prod_nu (x_nu z)(p*^2 xbar_nu z)
// where x runs over d_{l^p,k^m} and y over d_{(l*)^p,k^m}.
PochhammerProduct ucoef_from_denominators(const CartanData& cd, int k, int m, int l, int p,
                                          const FundamentalTable* ext = nullptr);

// One KR module with a spectral parameter, the common currency of the ratio
// checks below and of the tsystem/dorey/commuting modules.
struct KRModule {
    int node = 1;
    int mult = 1;
    QMonomial spectral;  // V(node^mult)_{spectral}

    std::string str() const;
};

enum class AKSide { Left, Right };  // eq (2.6a) / eq (2.6b)

// The ratio d_{N,M'} d_{N,M''} a_{N,M} / (d_{N,M} a_{N,M'} a_{N,M''}) of the
// Akasaka-Kashiwara lemma for a surjection M' (x) M'' ->> M probed by N
// (Right swaps every pair).  The caller asserts the surjection; this only
// decides Laurent membership.
RatioReport ak_ratio_check(const CartanData& cd, const KRModule& m1, const KRModule& m2,
                           const KRModule& target, const KRModule& probe,
                           AKSide side = AKSide::Left, const FundamentalTable* ext = nullptr);

}  // namespace krd

#endif
