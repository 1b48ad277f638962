#ifndef KRD_TSYSTEM_HPP
#define KRD_TSYSTEM_HPP

#include <vector>

#include "krd/qchar.hpp"

namespace krd {

enum class Convention { W, V };

// A KR module label in either convention; mult == 0 denotes the trivial
// module (the k=1 boundary of the T-system).
struct KRLabel {
    Convention conv = Convention::W;
    int node = 1;
    int mult = 1;
    QMonomial spectral;

    bool operator==(const KRLabel&) const = default;
    std::string str() const;
};

KRLabel w_to_v(const CartanData& cd, const KRLabel& label);
KRLabel v_to_w(const CartanData& cd, const KRLabel& label);

// One short exact sequence 0 -> sub -> mid1 (x) mid2 -> quot1 (x) quot2 -> 0.
struct TSystemIdentity {
    AffineType type;
    std::vector<KRLabel> sub;
    std::array<KRLabel, 2> mid;
    std::array<KRLabel, 2> quot;
    std::string family;  // table tag, e.g. "B:spin-even"
};

// The T-system instance whose middle term is W^(i)_{k,.} (x) W^(i)_{k,.}
// with the printed spectral anchor set to a, in the requested convention.
std::vector<TSystemIdentity> tsystem_identities(const CartanData& cd, int i, int k,
                                                const QMonomial& a,
                                                Convention conv = Convention::W);

// Convert every label of a W-convention identity to the V convention.
TSystemIdentity convert_identity(const CartanData& cd, const TSystemIdentity& id);

// The corresponding identity transcribed from the printed V-convention list
// (untwisted types only), anchored at spectral a.
TSystemIdentity printed_v_tsystem(const CartanData& cd, int i, int k, const QMonomial& a);

// True iff `id` equals `printed` as labelled multisets after multiplying all
// of id's spectral parameters by one global unit.
bool identities_match_mod_unit(const TSystemIdentity& id, const TSystemIdentity& printed);

// Throws MismatchAgainstPrintedList if conversion of the W identity disagrees
// with the printed V list (test-mode guard against transcription drift).
TSystemIdentity convert_identity_checked(const CartanData& cd, const TSystemIdentity& id);

// Weight balance: quot and mid carry the same classical weight and
// wt(mid) - wt(sub) is a nonnegative integer combination of simple roots.
bool weights_balance(const CartanData& cd, const TSystemIdentity& id);

// chi(mid1) chi(mid2) == chi((x) sub) + chi(quot1) chi(quot2), decided exactly
// by full tableau enumeration.  Type A~1 only.
bool verify_tsystem_qchar(const CartanData& cd, const TSystemIdentity& id,
                          long long max_tableaux = 2000000);

// q-character of a labelled KR module (type A~1 only; trivial labels and the
// determinant node are the unit character).
QCharacter label_qcharacter(const CartanData& cd, const KRLabel& label,
                            long long max_tableaux = 2000000);

}  // namespace krd

#endif
