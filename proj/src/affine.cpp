#include "krd/affine.hpp"

#include <cctype>
#include <queue>

namespace krd {

std::string AffineType::str() const {
    return std::string(1, static_cast<char>(family)) + std::to_string(rank) + "~" +
           std::to_string(twist);
}

std::string format_type(const AffineType& t) { return t.str(); }

int AffineType::nodes() const {
    if (twist == 1) return rank;
    if (family == Family::A) return (rank + 1) / 2;  // A_{2n-1}^(2) -> n, A_{2n}^(2) -> n
    if (family == Family::D && twist == 2) return rank - 1;  // D_{n+1}^(2) -> n
    if (family == Family::D && twist == 3) return 2;         // D_4^(3)
    return rank;
}

bool AffineType::is_supported() const {
    switch (family) {
        case Family::A:
            if (twist == 1) return rank >= 1;
            if (twist == 2) return rank >= 2;  // A_{2n-1}^(2) n>=2 odd, A_{2n}^(2) n>=1 even
            return false;
        case Family::B:
            return twist == 1 && rank >= 2;
        case Family::C:
            return twist == 1 && rank >= 2;
        case Family::D:
            if (twist == 1) return rank >= 4;
            if (twist == 2) return rank >= 3;  // D_{n+1}^(2), n >= 2
            if (twist == 3) return rank == 4;
            return false;
        case Family::G:
            return twist == 1 && rank == 2;
    }
    return false;
}

AffineType parse_type(const std::string& spec) {
    if (spec.size() < 4) throw MalformedSpec("type spec too short: " + spec);
    char fam = spec[0];
    size_t i = 1;
    size_t sub_start = i;
    while (i < spec.size() && std::isdigit(static_cast<unsigned char>(spec[i]))) ++i;
    if (i == sub_start || i >= spec.size() || spec[i] != '~')
        throw MalformedSpec("type spec must match FAMILY<subscript>~<twist>: " + spec);
    int rank = std::stoi(spec.substr(sub_start, i - sub_start));
    ++i;
    size_t tw_start = i;
    while (i < spec.size() && std::isdigit(static_cast<unsigned char>(spec[i]))) ++i;
    if (i == tw_start || i != spec.size())
        throw MalformedSpec("type spec must match FAMILY<subscript>~<twist>: " + spec);
    int twist = std::stoi(spec.substr(tw_start, i - tw_start));

    Family family;
    switch (fam) {
        case 'A': family = Family::A; break;
        case 'B': family = Family::B; break;
        case 'C': family = Family::C; break;
        case 'D': family = Family::D; break;
        case 'G': family = Family::G; break;
        case 'E':
        case 'F':
            throw UnsupportedType("type " + spec + " is out of scope");
        default:
            throw MalformedSpec("unknown family letter in: " + spec);
    }
    AffineType t{family, rank, twist};
    if (!t.is_supported()) throw UnsupportedType("unsupported affine type: " + spec);
    return t;
}

int CartanData::dynkin_distance(int i, int j) const {
    if (i == j) return 0;
    std::vector<int> dist(n + 1, -1);
    std::queue<int> bfs;
    bfs.push(i);
    dist[i] = 0;
    while (!bfs.empty()) {
        int v = bfs.front();
        bfs.pop();
        for (int w = 1; w <= n; ++w)
            if (adjacent(v, w) && dist[w] < 0) {
                dist[w] = dist[v] + 1;
                bfs.push(w);
            }
    }
    return dist[j];
}

namespace {

// Path-shaped Cartan matrix a_{ij}; callers then adjust the multiple edges.
std::vector<std::vector<int>> path_cartan(int n) {
    std::vector<std::vector<int>> a(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i) {
        a[i][i] = 2;
        if (i + 1 < n) a[i][i + 1] = a[i + 1][i] = -1;
    }
    return a;
}

}  // namespace

namespace {

long long int_det(std::vector<std::vector<long long>>& mm) {
    const size_t sz = mm.size();
    if (sz == 1) return mm[0][0];
    long long acc = 0, sign = 1;
    for (size_t c = 0; c < sz; ++c) {
        std::vector<std::vector<long long>> minor(sz - 1, std::vector<long long>(sz - 1, 0));
        for (size_t r = 1; r < sz; ++r) {
            size_t cc = 0;
            for (size_t c2 = 0; c2 < sz; ++c2) {
                if (c2 == c) continue;
                minor[r - 1][cc++] = mm[r][c2];
            }
        }
        acc += sign * mm[0][c] * int_det(minor);
        sign = -sign;
    }
    return acc;
}

}  // namespace

bool dominates_by_roots(const CartanData& cd, const std::vector<long long>& lhs,
                        const std::vector<long long>& rhs) {
    const int n = cd.n;
    // columns of the transposed Cartan matrix express alpha_j in the
    // fundamental-weight basis; solve M c = lhs - rhs by Cramer's rule
    std::vector<std::vector<long long>> M(n, std::vector<long long>(n, 0));
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) M[r][c] = cd.cartan[c][r];
    long long d0 = int_det(M);
    if (d0 == 0) return false;
    for (int j = 0; j < n; ++j) {
        auto Mj = M;
        for (int r = 0; r < n; ++r) Mj[r][j] = lhs[r] - rhs[r];
        long long dj = int_det(Mj);
        if (dj != 0 && (dj > 0) != (d0 > 0)) return false;
    }
    return true;
}

CartanData cartan_data(const AffineType& type) {
    if (!type.is_supported()) throw UnsupportedType("unsupported affine type: " + type.str());
    CartanData cd;
    cd.type = type;
    cd.n = type.nodes();
    const int n = cd.n;
    cd.istar.resize(n);
    for (int i = 1; i <= n; ++i) cd.istar[i - 1] = i;
    cd.mi.assign(n, 1);

    switch (type.family) {
        case Family::A: {
            if (type.twist == 1) {
                // A_{rank}^(1); the paper's n is rank+1.
                cd.cartan = path_cartan(n);
                cd.d.assign(n, 1);
                cd.gamma = 1;
                cd.qnode.assign(n, QMonomial::q());
                cd.pstar = QMonomial::minus_q(type.rank + 1);
                for (int i = 1; i <= n; ++i) cd.istar[i - 1] = n + 1 - i;
            } else if (type.rank % 2 == 1) {
                // A_{2n-1}^(2): classical part C_n, node n long.
                cd.cartan = path_cartan(n);
                cd.cartan[n - 2][n - 1] = -2;
                cd.d.assign(n, 1);
                cd.d[n - 1] = 2;
                cd.gamma = 1;
                cd.qnode.assign(n, QMonomial::q());
                cd.qnode[n - 1] = QMonomial::q(2);
                cd.pstar = QMonomial::minus_one() * QMonomial::q(type.rank + 1);
                cd.mi[n - 1] = 2;
            } else {
                // A_{2n}^(2): classical part C_n with the short node n;
                // fundamental denominators come only from extension data.
                cd.cartan = path_cartan(n);
                if (n >= 2) cd.cartan[n - 1][n - 2] = -2;
                cd.d.assign(n, 2);
                cd.d[n - 1] = 1;
                cd.gamma = 2;
                cd.qnode.assign(n, QMonomial::q());
                cd.qnode[n - 1] = QMonomial::qs();
                cd.pstar = QMonomial::minus_one() * QMonomial::q(type.rank + 1);
                cd.extension_required = true;
            }
            break;
        }
        case Family::B: {
            const int nn = type.rank;
            cd.cartan = path_cartan(nn);
            cd.cartan[nn - 2][nn - 1] = -2;  // a_{n-1,n} = -2: alpha_n short
            cd.d.assign(nn, 2);
            cd.d[nn - 1] = 1;
            cd.gamma = 2;
            cd.qnode.assign(nn, QMonomial::q());
            cd.qnode[nn - 1] = QMonomial::qs();
            cd.pstar = QMonomial::minus_one() * QMonomial::minus_q(2 * nn - 1);
            break;
        }
        case Family::C: {
            const int nn = type.rank;
            cd.cartan = path_cartan(nn);
            cd.cartan[nn - 1][nn - 2] = -2;  // a_{n,n-1} = -2: alpha_n long
            cd.d.assign(nn, 1);
            cd.d[nn - 1] = 2;
            cd.gamma = 2;
            cd.qnode.assign(nn, QMonomial::qs());
            cd.qnode[nn - 1] = QMonomial::q();
            cd.pstar = QMonomial::minus_qs(2 * nn + 2);
            break;
        }
        case Family::D: {
            if (type.twist == 1) {
                const int nn = type.rank;
                cd.cartan = path_cartan(nn);
                // fork: nodes n-1 and n both attach to n-2
                cd.cartan[nn - 2][nn - 1] = cd.cartan[nn - 1][nn - 2] = 0;
                cd.cartan[nn - 3][nn - 1] = cd.cartan[nn - 1][nn - 3] = -1;
                cd.d.assign(nn, 1);
                cd.gamma = 1;
                cd.qnode.assign(nn, QMonomial::q());
                cd.pstar = QMonomial::minus_q(2 * nn - 2);
                if (nn % 2 == 1) {
                    cd.istar[nn - 2] = nn;
                    cd.istar[nn - 1] = nn - 1;
                }
            } else if (type.twist == 2) {
                // D_{n+1}^(2): classical part shaped like B_n, node n short.
                cd.cartan = path_cartan(n);
                cd.cartan[n - 1][n - 2] = -2;
                cd.d.assign(n, 2);
                cd.d[n - 1] = 1;
                cd.gamma = 1;
                cd.qnode.assign(n, QMonomial::q(2));
                cd.qnode[n - 1] = QMonomial::q();
                cd.pstar = QMonomial::minus_one() * QMonomial::minus_q(2).pow(n);
                for (int i = 0; i + 1 < n; ++i) cd.mi[i] = 2;
            } else {
                // D_4^(3): classical part shaped like G_2, node 2 long.
                cd.cartan = {{2, -3}, {-1, 2}};
                cd.d = {1, 3};
                cd.gamma = 1;
                cd.qnode = {QMonomial::q(), QMonomial::q(3)};
                cd.pstar = QMonomial::q(6);
                cd.mi = {1, 3};
            }
            break;
        }
        case Family::G: {
            // G_2^(1): node 1 long (d=3), node 2 short (d=1).
            cd.cartan = {{2, -1}, {-3, 2}};
            cd.d = {3, 1};
            cd.gamma = 3;
            cd.qnode = {QMonomial::q(), QMonomial::qt()};
            cd.pstar = QMonomial::qt(12);
            break;
        }
    }
    cd.qcheck = cd.qnode;
    if (type.family == Family::A && type.twist == 2 && type.rank % 2 == 0)
        cd.qcheck[n - 1] = QMonomial::q();  // the A_{2n}^(2) exception
    return cd;
}

}  // namespace krd
