#ifndef KRD_ARQUIVER_HPP
#define KRD_ARQUIVER_HPP

#include <map>
#include <optional>
#include <set>
#include <vector>

#include "krd/ucoef.hpp"

namespace krd {

// A positive root of a simply-laced system, in simple-root coordinates.
using Root = std::vector<int>;

enum class SLFamily { A, D };

// Simply-laced root system data (types A_r and D_r; everything the folded
// constructions need).
struct RootSystemSL {
    SLFamily family;
    int rank;
    std::vector<std::vector<int>> cartan;
    std::vector<Root> positive;  // canonical order
    std::set<Root> positive_set;

    static RootSystemSL build(SLFamily family, int rank);

    Root simple(int i) const;
    // s_i(beta); may leave the positive system
    Root reflect(int i, const Root& beta) const;
    bool is_positive(const Root& beta) const { return positive_set.count(beta) > 0; }
    std::string root_name(const Root& beta) const;  // [a,b] / <a,+-b> display
};

// The coordinate quiver Gamma of an affine type: the (folded) AR quiver with
// rows indexed by the classical nodes of g_0 and columns by the height
// coordinate p.
struct CoordQuiver {
    AffineType affine;
    RootSystemSL sl;
    CartanData g0;                       // classical data of the affine type
    std::map<Root, std::pair<int, int>> coords;  // beta -> (row, p)
    std::vector<std::pair<Root, Root>> arrows;   // recomputed from coords

    std::optional<Root> root_at(int i, int p) const;
    bool has_arrow(const Root& from, const Root& to) const;
    std::vector<Root> arrow_targets(const Root& from) const;
    bool is_sink_vertex(const Root& beta) const;

    // Spectral assignment of the fundamental module V_Q(beta) at (i,p).
    KRModule module_of(const Root& beta) const;

    std::string str() const;
    std::string dot() const;
};

// Builds Gamma from the canonical tau and sigma of the type correspondence
// (A_n~1 -> A_n, B_n~1 -> A_{2n-1}, C_n~1 -> D_{n+1}, D_n~1 -> D_n,
// G2~1 -> D_4), with height function normalized by xi_1.
CoordQuiver build_gamma(const AffineType& type, int xi1);

// Reflection functor at the simple root alpha_i of the simply-laced system;
// alpha_i must label a sink vertex.
CoordQuiver reflect(const CoordQuiver& gamma, int i);

// alpha precedes beta iff there is a path from beta to alpha; the matrix of
// the convex order.
struct ConvexOrder {
    std::vector<Root> roots;                 // index order
    std::map<Root, int> index;
    std::vector<std::vector<bool>> less;     // less[a][b]: root a < root b

    bool lt(const Root& a, const Root& b) const { return less[index.at(a)][index.at(b)]; }
};

ConvexOrder convex_order(const CoordQuiver& gamma);

// All reduced words of w_0 in the commutation class of Gamma, as linear
// extensions of the convex order.  Each word is a list of simple-root
// indices.
std::vector<std::vector<int>> class_words(const CoordQuiver& gamma, long long cap = 500000);

// A sequence in the sense of the bi-lexicographic order: a multiset of
// positive roots (multiplicities 0/1 here: pairs and singletons).
using RootSequence = std::vector<Root>;

// u < v in the bi-lex order induced by the word w (a total order on roots).
bool bilex_less(const std::vector<Root>& word_order, const RootSequence& u,
                const RootSequence& v);

// u < v for every word in the class
bool class_bilex_less(const CoordQuiver& gamma, const std::vector<std::vector<int>>& words_cache,
                      const RootSequence& u, const RootSequence& v);

// All [Q]-minimal pairs (alpha, beta), alpha + beta = gamma_root, ordered so
// that alpha precedes gamma_root in the convex order.
std::vector<std::pair<Root, Root>> minimal_pairs(const CoordQuiver& gamma, const Root& gamma_root,
                                                 long long cap = 500000);

struct DoreyTriple {
    Root alpha, beta, gamma;
    KRModule first, second, head;  // V(beta) (x) V(alpha) ->> V(gamma)
};

std::vector<DoreyTriple> dorey_triples(const CoordQuiver& gamma, long long cap = 500000);

// expose word orders for tests (each word as the induced root order)
std::vector<std::vector<Root>> class_word_orders(const CoordQuiver& gamma, long long cap = 500000);

}  // namespace krd

#endif
