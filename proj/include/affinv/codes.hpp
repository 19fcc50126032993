#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "field.hpp"
#include "poset.hpp"

namespace affinv {

using BigCount = boost::multiprecision::cpp_int;
using Ideal3 = std::set<Point3>;
using SigmaVector = std::array<coord, 3>;

inline constexpr std::int64_t default_scan_cap = 10'000'000;
inline constexpr std::int64_t default_field_cap = 4096;

inline SigmaVector sigma(std::uint64_t s, const Params& P) {
    const std::uint64_t N = static_cast<std::uint64_t>(checked_pow(P.p, P.m));
    if (s >= N) throw OutOfRange("exponent must lie in [0, p^m - 1]");
    SigmaVector v{0, 0, 0};
    for (int i = 0; i < P.m; ++i) {
        v[i % 3] += static_cast<coord>(s % P.p);
        s /= P.p;
    }
    return v;
}

inline SigmaVector sigma(const BigCount& s, const Params& P) {
    if (s < 0) throw OutOfRange("exponent must be nonnegative");
    BigCount t = s;
    SigmaVector v{0, 0, 0};
    for (int i = 0; i < P.m; ++i) {
        v[i % 3] += static_cast<coord>(static_cast<long long>(t % P.p));
        t /= P.p;
    }
    if (t != 0) throw OutOfRange("exponent must lie in [0, p^m - 1]");
    return v;
}

// N[t] = number of strings of m/3 digits in [0,p-1] with digit sum t.
inline std::vector<BigCount> digit_sum_counts(const Params& P) {
    std::vector<BigCount> N(P.n + 1, 0);
    N[0] = 1;
    for (int pos = 0; pos < P.m / 3; ++pos) {
        std::vector<BigCount> next(P.n + 1, 0);
        for (coord t = 0; t <= P.n; ++t) {
            if (N[t] == 0) continue;
            for (coord d = 0; d < P.p && t + d <= P.n; ++d) next[t + d] += N[t];
        }
        N = std::move(next);
    }
    return N;
}

inline BigCount sigma_preimage_count(const Ideal3& I, const Params& P) {
    auto N = digit_sum_counts(P);
    BigCount total = 0;
    for (Point3 u : I) {
        if (u.x < 0 || u.y < 0 || u.z < 0 || u.x > P.n || u.y > P.n || u.z > P.n) continue;
        total += N[u.x] * N[u.y] * N[u.z];
    }
    return total;
}

inline std::vector<std::uint64_t> sigma_preimage_list(const Ideal3& I, const Params& P,
                                                      std::int64_t cap = default_scan_cap) {
    const std::int64_t N = checked_pow(P.p, P.m);
    if (N > cap) throw CapExceeded("p^m = " + std::to_string(N) + " exceeds the scan cap");
    std::vector<std::uint64_t> out;
    for (std::uint64_t s = 0; s < static_cast<std::uint64_t>(N); ++s) {
        SigmaVector v = sigma(s, P);
        if (I.count({v[0], v[1], v[2]})) out.push_back(s);
    }
    return out;
}

// Empty string when I is an A^r-invariant ideal of [0,n]^3, otherwise the
// first violated condition.
inline std::string invariance_violation(const Ideal3& I, const Params& P) {
    const coord n = P.n;
    for (Point3 u : I) {
        if (u.x < 0 || u.y < 0 || u.z < 0 || u.x > n || u.y > n || u.z > n)
            return "point outside [0,n]^3";
        for (coord x = 0; x <= n; ++x)
            for (coord y = 0; y <= n; ++y)
                for (coord z = 0; z <= n; ++z)
                    if (!I.count({x, y, z}) && precedes3({x, y, z}, u, P.p))
                        return "not downward closed: (" + std::to_string(x) + "," + std::to_string(y) + "," +
                               std::to_string(z) + ") is missing";
        if (P.r == 1 && !I.count(rotate(u)))
            return "not fixed by the rotation: image of (" + std::to_string(u.x) + "," + std::to_string(u.y) + "," +
                   std::to_string(u.z) + ") is missing";
    }
    return {};
}

inline bool is_Ar_invariant(const Ideal3& I, const Params& P) { return invariance_violation(I, P).empty(); }

// ---- linear algebra over a subfield stored inside a SmallField --------------

using Row = std::vector<int>;

struct Echelon {
    std::vector<Row> rows; // reduced, one per pivot
    std::vector<int> pivots;
};

inline Echelon row_reduce(const SmallField& F, std::vector<Row> M, int ncols) {
    Echelon E;
    size_t r = 0;
    for (int col = 0; col < ncols && r < M.size(); ++col) {
        size_t piv = r;
        while (piv < M.size() && M[piv][col] == 0) ++piv;
        if (piv == M.size()) continue;
        std::swap(M[r], M[piv]);
        int inv = F.inv(M[r][col]);
        for (int& v : M[r]) v = F.mul(v, inv);
        for (size_t i = 0; i < M.size(); ++i) {
            if (i == r || M[i][col] == 0) continue;
            int f = M[i][col];
            for (int j = col; j < ncols; ++j)
                if (M[r][j]) M[i][j] = F.sub(M[i][j], F.mul(f, M[r][j]));
        }
        E.pivots.push_back(col);
        ++r;
    }
    M.resize(r);
    E.rows = std::move(M);
    return E;
}

inline std::vector<Row> kernel_basis(const SmallField& F, const Echelon& E, int ncols) {
    std::vector<char> is_piv(ncols, 0);
    for (int c : E.pivots) is_piv[c] = 1;
    std::vector<Row> basis;
    for (int f = 0; f < ncols; ++f) {
        if (is_piv[f]) continue;
        Row v(ncols, 0);
        v[f] = 1;
        for (size_t i = 0; i < E.rows.size(); ++i) v[E.pivots[i]] = F.neg(E.rows[i][f]);
        basis.push_back(v);
    }
    return basis;
}

// ---- codes -----------------------------------------------------------------

// Coordinates of F_{p^m} over its subfield of order p^k with respect to the
// basis g^(offset), ..., g^(offset + m/k - 1).
struct SubfieldCoords {
    std::vector<int> subfield;           // 0 then powers of a generator
    std::vector<std::vector<int>> coords; // element -> coordinates
    std::vector<int> basis;

    SubfieldCoords(const SmallField& F, int k, int offset = 0) {
        const int q = F.order(), qs = static_cast<int>(checked_pow(F.p(), k));
        const int dim = F.degree() / k;
        const int delta = F.power_of_generator((q - 1) / (qs - 1));
        subfield.push_back(0);
        for (int j = 0, x = 1; j < qs - 1; ++j, x = F.mul(x, delta)) subfield.push_back(x);
        for (int t = 0; t < dim; ++t) basis.push_back(F.power_of_generator(offset + t));
        coords.assign(q, {});
        std::vector<int> digit(dim, 0);
        for (std::int64_t idx = 0; idx < checked_pow(qs, dim); ++idx) {
            std::int64_t rest = idx;
            int value = 0;
            std::vector<int> c(dim);
            for (int t = 0; t < dim; ++t, rest /= qs) {
                c[t] = subfield[static_cast<size_t>(rest % qs)];
                value = F.add(value, F.mul(c[t], basis[t]));
            }
            if (!coords[value].empty()) throw InvalidParams("chosen elements are not a basis");
            coords[value] = c;
        }
    }

    int combine(const SmallField& F, const std::vector<int>& c) const {
        int value = 0;
        for (size_t t = 0; t < c.size(); ++t) value = F.add(value, F.mul(c[t], basis[t]));
        return value;
    }
};

struct CodeSpec {
    Params params;
    Ideal3 ideal;
    BigCount defining_count = 0;
    std::vector<std::uint64_t> exponents;
    std::shared_ptr<const SmallField> field; // F_{p^m}
    std::vector<int> positions;              // coordinate order of the field elements
    std::vector<Row> constraints;            // parity checks over F_{p^r}
    Echelon echelon;

    int length() const { return static_cast<int>(positions.size()); }
};

inline CodeSpec build_code_from_exponents(const std::vector<std::uint64_t>& exps, const Params& P,
                                          std::int64_t field_cap = default_field_cap) {
    const std::int64_t len = checked_pow(P.p, P.m);
    if (len > field_cap) throw CapExceeded("p^m = " + std::to_string(len) + " exceeds the field cap");
    CodeSpec spec;
    spec.params = P;
    spec.exponents = exps;
    spec.defining_count = exps.size();
    spec.field = std::make_shared<SmallField>(static_cast<int>(P.p), P.m, field_cap);
    const SmallField& F = *spec.field;
    spec.positions = F.elements();
    SubfieldCoords K(F, P.r);
    const int dim = P.m / P.r;
    for (std::uint64_t s : exps) {
        std::vector<Row> rows(dim, Row(spec.positions.size(), 0));
        for (size_t g = 0; g < spec.positions.size(); ++g) {
            int v = F.pow(spec.positions[g], s);
            const auto& c = K.coords[v];
            for (int t = 0; t < dim; ++t) rows[t][g] = c[t];
        }
        for (auto& r : rows) spec.constraints.push_back(std::move(r));
    }
    spec.echelon = row_reduce(F, spec.constraints, spec.length());
    return spec;
}

inline CodeSpec build_code(const Ideal3& I, const Params& P, std::int64_t field_cap = default_field_cap) {
    if (auto why = invariance_violation(I, P); !why.empty()) throw NotInvariant(why);
    const std::int64_t len = checked_pow(P.p, P.m);
    if (len > field_cap) throw CapExceeded("p^m = " + std::to_string(len) + " exceeds the field cap");
    CodeSpec spec = build_code_from_exponents(sigma_preimage_list(I, P, field_cap), P, field_cap);
    spec.ideal = I;
    spec.defining_count = sigma_preimage_count(I, P);
    return spec;
}

inline int code_dimension(const CodeSpec& spec) {
    return spec.length() - static_cast<int>(spec.echelon.rows.size());
}

inline bool is_codeword(const CodeSpec& spec, const Row& c) {
    const SmallField& F = *spec.field;
    for (const Row& r : spec.constraints) {
        int acc = 0;
        for (size_t g = 0; g < c.size(); ++g)
            if (r[g] && c[g]) acc = F.add(acc, F.mul(r[g], c[g]));
        if (acc) return false;
    }
    return true;
}

inline std::vector<Row> code_basis(const CodeSpec& spec) {
    return kernel_basis(*spec.field, spec.echelon, spec.length());
}

// Every codeword has zero coordinate sum.
inline bool inside_sum_zero(const CodeSpec& spec) {
    const SmallField& F = *spec.field;
    for (const Row& c : code_basis(spec)) {
        int acc = 0;
        for (int v : c) acc = F.add(acc, v);
        if (acc) return false;
    }
    return true;
}

using Perm = std::vector<int>;

// Generators of AGL(m/3, F_{p^3}) acting on coordinate positions, through
// F_{p^m} = F_{p^3}^(m/3) with basis g^offset, g^(offset+1), ...
inline std::vector<Perm> agl_generators(const CodeSpec& spec, int offset = 0) {
    const SmallField& F = *spec.field;
    const int q = F.order();
    const int dim = spec.params.m / 3;
    SubfieldCoords L(F, 3, offset);
    std::vector<int> pos_of(q);
    for (int i = 0; i < q; ++i) pos_of[spec.positions[i]] = i;
    const int omega = L.subfield.size() > 1 ? L.subfield[2 % L.subfield.size()] : 1;
    auto from_map = [&](auto f) {
        Perm perm(q);
        for (int i = 0; i < q; ++i) perm[i] = pos_of[f(spec.positions[i])];
        return perm;
    };
    std::vector<Perm> gens;
    for (int t = 0; t < dim; ++t) gens.push_back(from_map([&](int x) { return F.add(x, L.basis[t]); }));
    gens.push_back(from_map([&](int x) {
        auto c = L.coords[x];
        c[0] = F.mul(c[0], omega);
        return L.combine(F, c);
    }));
    if (dim >= 2) {
        gens.push_back(from_map([&](int x) {
            auto c = L.coords[x];
            c[0] = F.add(c[0], c[1]);
            return L.combine(F, c);
        }));
        gens.push_back(from_map([&](int x) {
            auto c = L.coords[x];
            std::rotate(c.rbegin(), c.rbegin() + 1, c.rend());
            return L.combine(F, c);
        }));
    }
    return gens;
}

// Size of the permutation group generated by gens (orbit closure).
inline std::int64_t group_order(const std::vector<Perm>& gens, std::int64_t limit = 2'000'000) {
    if (gens.empty()) return 1;
    const size_t q = gens[0].size();
    Perm id(q);
    for (size_t i = 0; i < q; ++i) id[i] = static_cast<int>(i);
    std::set<Perm> seen{id};
    std::vector<Perm> frontier{id};
    while (!frontier.empty()) {
        std::vector<Perm> next;
        for (const Perm& a : frontier)
            for (const Perm& g : gens) {
                Perm b(q);
                for (size_t i = 0; i < q; ++i) b[i] = g[a[i]];
                if (seen.insert(b).second) {
                    if (static_cast<std::int64_t>(seen.size()) > limit) throw CapExceeded("group too large");
                    next.push_back(std::move(b));
                }
            }
        frontier = std::move(next);
    }
    return static_cast<std::int64_t>(seen.size());
}

inline bool verify_invariance(const CodeSpec& spec, const std::vector<Perm>& gens) {
    auto basis = code_basis(spec);
    for (const Perm& g : gens)
        for (const Row& c : basis) {
            Row moved(c.size(), 0);
            for (size_t i = 0; i < c.size(); ++i) moved[g[i]] = c[i];
            if (!is_codeword(spec, moved)) return false;
        }
    return true;
}

// Reduced parity-check rows; equal for two specs exactly when the codes agree.
inline const std::vector<Row>& code_fingerprint(const CodeSpec& spec) { return spec.echelon.rows; }

} // namespace affinv
