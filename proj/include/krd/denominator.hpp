#ifndef KRD_DENOMINATOR_HPP
#define KRD_DENOMINATOR_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "krd/affine.hpp"

namespace krd {

// A denominator polynomial d(z), stored as the multiset of its roots: each
// occurrence of rho is one linear factor (z - rho).  Multiset equality is the
// natural congruence mod units of ko[z^{+-1}], which is how the paper states
// every denominator identity.
class RootMultiset {
   public:
    RootMultiset() = default;

    void add(const QMonomial& root, int mult = 1);
    // union of multisets
    RootMultiset& operator*=(const RootMultiset& o);
    friend RootMultiset operator*(RootMultiset a, const RootMultiset& b) { return a *= b; }

    // d(c z): every root rho becomes rho / c.
    RootMultiset shifted(const QMonomial& c) const;

    int multiplicity(const QMonomial& root) const;
    int degree() const;
    bool empty() const { return factors_.empty(); }

    const std::map<QMonomial, int>& factors() const { return factors_; }

    bool operator==(const RootMultiset&) const = default;

    std::string str() const;  // e.g. "(z-q^{2})(z+q^{4})^2"

   private:
    std::map<QMonomial, int> factors_;  // root -> multiplicity, canonically ordered
};

// A formal Z-linear combination of q-monomials; the coefficients produced by
// expanding a root multiset into a monic polynomial.
struct CycloSum {
    std::map<QMonomial, long long> terms;

    void add(const QMonomial& m, long long c);
    bool is_zero() const { return terms.empty(); }
    bool is_single_monomial() const { return terms.size() == 1 && terms.begin()->second == 1; }
    std::string str() const;
};

// Monic coefficient sequence of prod (z - rho), highest degree first.
std::vector<CycloSum> expand(const RootMultiset& r);

inline int root_multiplicity(const RootMultiset& r, const QMonomial& rho) {
    return r.multiplicity(rho);
}

// User-supplied fundamental denominators for the cases the closed formulas do
// not cover (all of A_{2n}^(2); the D_4^(3) pairs (1,1) and (1,2)).
class FundamentalTable {
   public:
    void set(const AffineType& type, int k, int l, RootMultiset roots);
    std::optional<RootMultiset> get(const AffineType& type, int k, int l) const;

    // Line grammar: TYPE k l : root(;root)*   with '#' comments.
    static FundamentalTable load(const std::string& path);
    static FundamentalTable parse(const std::string& text, const std::string& origin = "<string>");

    const std::string& source() const { return source_; }

   private:
    std::map<std::string, RootMultiset> entries_;
    std::string source_;
};

// d_{V(k),V(l)}(z) between fundamental modules.
RootMultiset fundamental_denominator(const CartanData& cd, int k, int l,
                                     const FundamentalTable* ext = nullptr);

// d_{k^m, l^p}(z) between the KR modules V(k^m) and V(l^p).
RootMultiset kr_denominator(const CartanData& cd, int k, int m, int l, int p,
                            const FundamentalTable* ext = nullptr);

}  // namespace krd

#endif
