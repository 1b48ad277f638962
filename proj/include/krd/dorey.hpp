#ifndef KRD_DOREY_HPP
#define KRD_DOREY_HPP

#include <vector>

#include "krd/qchar.hpp"
#include "krd/ucoef.hpp"

namespace krd {

// One higher-level Dorey surjection: factors[0] (x) factors[1] ->> (x) target.
struct DoreyInstance {
    AffineType type;
    int case_id = 1;
    std::array<KRModule, 2> factors;
    std::vector<KRModule> target;  // one module, two for the D spin-pair case

    std::string str() const;
};

// The instances of the given theorem case at parameters (k, l, m); cases use
// the parameters they need (see the CLI help for the roles).  Throws
// CaseConditionViolated naming the violated side condition.
std::vector<DoreyInstance> higher_dorey_instances(const CartanData& cd, int case_id, int k, int l,
                                                  int m);

bool dorey_weights_balance(const CartanData& cd, const DoreyInstance& inst);

// Coefficient of the target's dominant monomial in the product q-character of
// the factors; the theorem predicts 1.  Type A~1 only.
Coeff verify_dominant_multiplicity(const CartanData& cd, const DoreyInstance& inst,
                                   long long max_tableaux = 2000000);

}  // namespace krd

#endif
