#ifndef KRD_AFFINE_HPP
#define KRD_AFFINE_HPP

#include <string>
#include <vector>

#include "krd/scalar.hpp"

namespace krd {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', G = 'G' };

// An affine type descriptor, written FAMILY<subscript>~<twist> (e.g. "A3~1",
// "D5~2").  The stored rank is the subscript as printed in the usual naming,
// so A3~1 is A_3^(1) with classical part of rank 3.
struct AffineType {
    Family family;
    int rank;
    int twist;

    bool operator==(const AffineType&) const = default;

    std::string str() const;

    // Number of classical nodes (the size of I_0).  For the twisted A and D
    // families this differs from the printed subscript.
    int nodes() const;

    bool is_twisted() const { return twist > 1; }
    bool is_supported() const;
};

AffineType parse_type(const std::string& spec);
std::string format_type(const AffineType& t);

// All type-dependent constants used by the other modules.  Nodes are indexed
// 1..n matching the labels in the formulas; vectors below are 0-based with
// entry i-1 for node i.
struct CartanData {
    AffineType type;
    int n = 0;                           // |I_0|
    std::vector<std::vector<int>> cartan;  // a_{ij} of the classical subdiagram
    std::vector<int> d;                  // symmetrizing integers, min = 1
    int gamma = 1;                       // smallest k with k(alpha_i,alpha_i)/2 integral
    std::vector<QMonomial> qnode;        // q_k = q^{(alpha_k,alpha_k)/2}
    std::vector<QMonomial> qcheck;       // q_k except A_{2n}^(2) node n, which is q
    QMonomial pstar;
    std::vector<int> istar;              // involution on I_0 induced by w_0
    std::vector<int> mi;                 // m_i of the spectral-write convention
    bool extension_required = false;     // A_{2n}^(2): fundamentals not in closed form

    int a(int i, int j) const { return cartan[i - 1][j - 1]; }
    int di(int i) const { return d[i - 1]; }
    const QMonomial& qk(int i) const { return qnode[i - 1]; }
    const QMonomial& qchk(int i) const { return qcheck[i - 1]; }
    int star(int i) const { return istar[i - 1]; }
    bool adjacent(int i, int j) const { return i != j && a(i, j) != 0; }
    // graph distance in the classical Dynkin diagram
    int dynkin_distance(int i, int j) const;
};

CartanData cartan_data(const AffineType& type);

// True iff lhs - rhs (in fundamental-weight coordinates over I_0) is a
// nonnegative rational combination of simple roots.  Exact.
bool dominates_by_roots(const CartanData& cd, const std::vector<long long>& lhs,
                        const std::vector<long long>& rhs);

}  // namespace krd

#endif
