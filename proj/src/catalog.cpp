#include "fhopf/catalog.hpp"

#include <functional>

namespace fhopf {

void check_group(const CayleyTable& table) {
    const int n = static_cast<int>(table.size());
    if (n == 0) throw std::invalid_argument("empty group table");
    for (const auto& row : table) {
        if (static_cast<int>(row.size()) != n) throw std::invalid_argument("group table is not square");
        for (int v : row)
            if (v < 0 || v >= n) throw std::invalid_argument("group table entry out of range");
    }
    for (int a = 0; a < n; ++a)
        if (table[0][a] != a || table[a][0] != a) throw std::invalid_argument("element 0 is not the identity");
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (table[table[a][b]][c] != table[a][table[b][c]])
                    throw std::invalid_argument("group table is not associative");
    for (int a = 0; a < n; ++a) {
        bool has_inverse = false;
        for (int b = 0; b < n; ++b) has_inverse = has_inverse || (table[a][b] == 0 && table[b][a] == 0);
        if (!has_inverse) throw std::invalid_argument("group element without inverse");
    }
}

CayleyTable cyclic_group(int n) {
    CayleyTable t(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) t[a][b] = (a + b) % n;
    return t;
}

CayleyTable dihedral_group(int n) {
    // r^i s^j, with s r = r^-1 s
    CayleyTable t(2 * n, std::vector<int>(2 * n));
    for (int a = 0; a < 2 * n; ++a)
        for (int b = 0; b < 2 * n; ++b) {
            int i = a % n, j = a / n, k = b % n, l = b / n;
            int rot = j == 0 ? (i + k) % n : (i - k + n) % n;
            t[a][b] = rot + n * ((j + l) % 2);
        }
    return t;
}

CayleyTable quaternion_group() {
    // elements i^a j^b with a in 0..3, b in 0..1, index a + 4b; j^2 = i^2, j i = i^3 j
    CayleyTable t(8, std::vector<int>(8));
    for (int x = 0; x < 8; ++x)
        for (int y = 0; y < 8; ++y) {
            int a = x % 4, b = x / 4, c = y % 4, d = y / 4;
            int e = b == 0 ? (a + c) % 4 : (a + 4 - c) % 4;
            int f = b + d;
            if (f == 2) {
                e = (e + 2) % 4;
                f = 0;
            }
            t[x][y] = e + 4 * f;
        }
    return t;
}

CayleyTable direct_product(const CayleyTable& a, const CayleyTable& b) {
    const int na = static_cast<int>(a.size()), nb = static_cast<int>(b.size());
    CayleyTable t(na * nb, std::vector<int>(na * nb));
    for (int x = 0; x < na * nb; ++x)
        for (int y = 0; y < na * nb; ++y) t[x][y] = a[x / nb][y / nb] * nb + b[x % nb][y % nb];
    return t;
}

template <class S>
HopfAlgebra<S> group_algebra(const CayleyTable& table, const Field<S>& F, const std::vector<std::string>& names) {
    check_group(table);
    const Index n = static_cast<Index>(table.size());
    HopfAlgebra<S> H;
    H.alg = make_algebra(F, n, [&](Index i, Index j) { return unit_vector(F, n, table[i][j]); },
                         unit_vector(F, n, 0));
    std::vector<Eigen::Triplet<S>> triplets;
    for (Index i = 0; i < n; ++i) triplets.emplace_back(i * n + i, i, F.one());
    H.comul = SpMat<S>(n * n, n);
    H.comul.setFromTriplets(triplets.begin(), triplets.end());
    H.counit = RowVec<S>::Constant(n, F.one());
    H.antipode = zeros(F, n, n);
    for (Index i = 0; i < n; ++i)
        for (Index j = 0; j < n; ++j)
            if (table[i][j] == 0) H.antipode(j, i) = F.one();
    if (names.empty()) {
        for (Index i = 0; i < n; ++i) H.names.push_back(i == 0 ? "1" : "g" + std::to_string(i));
    } else {
        H.names = names;
    }
    return H;
}

namespace {

std::string power_name(const char* base, int e) {
    if (e == 0) return "";
    if (e == 1) return base;
    return std::string(base) + "^" + std::to_string(e);
}

template <class S>
S power(const Field<S>& F, const S& q, long e) {
    S r = F.one();
    for (long k = 0; k < e; ++k) r *= q;
    return r;
}

}  // namespace

template <class S>
HopfAlgebra<S> taft_algebra(const Field<S>& F, int n, const S& q) {
    if (n < 2) throw std::invalid_argument("Taft algebra needs n >= 2");
    for (int k = 1; k < n; ++k)
        if (power(F, q, k).is_one()) throw std::invalid_argument("q has order smaller than n");
    if (!power(F, q, n).is_one()) throw std::invalid_argument("q^n is not 1");
    const Index dim = static_cast<Index>(n) * n;
    auto index = [n](int i, int j) -> Index { return static_cast<Index>(j) * n + i; };

    HopfAlgebra<S> H;
    H.alg = make_algebra(
        F, dim,
        [&](Index u, Index v) {
            int a = static_cast<int>(u % n), b = static_cast<int>(u / n);
            int c = static_cast<int>(v % n), d = static_cast<int>(v / n);
            Vec<S> out = Vec<S>::Constant(dim, F.zero());
            if (b + d < n) out(index((a + c) % n, b + d)) = power(F, q, static_cast<long>(b) * c);
            return out;
        },
        unit_vector(F, dim, 0));

    // Delta and S are multiplicative (resp. anti-multiplicative), so they are
    // determined by their values on g and x.
    StructureAlgebra<S> T = tensor_algebra(H.alg, H.alg);
    auto tensor = [&](Index a, Index b) { return unit_vector(F, dim * dim, a * dim + b); };
    Vec<S> delta_g = tensor(index(1, 0), index(1, 0));
    Vec<S> delta_x = tensor(index(0, 1), index(0, 0)) + tensor(index(1, 0), index(0, 1));
    std::vector<Vec<S>> g_powers{tensor(0, 0)}, x_powers{tensor(0, 0)};
    for (int k = 1; k < n; ++k) {
        g_powers.push_back(multiply(T, g_powers.back(), delta_g));
        x_powers.push_back(multiply(T, x_powers.back(), delta_x));
    }
    std::vector<Eigen::Triplet<S>> triplets;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Vec<S> d = multiply(T, g_powers[i], x_powers[j]);
            for (Index r = 0; r < d.size(); ++r)
                if (!is_zero(d(r))) triplets.emplace_back(r, index(i, j), d(r));
        }
    H.comul = SpMat<S>(dim * dim, dim);
    H.comul.setFromTriplets(triplets.begin(), triplets.end());

    H.counit = RowVec<S>::Constant(dim, F.zero());
    for (int i = 0; i < n; ++i) H.counit(index(i, 0)) = F.one();

    Vec<S> s_g = unit_vector(F, dim, index(n - 1, 0));
    Vec<S> s_x = -unit_vector(F, dim, index(n - 1, 1));
    H.antipode = zeros(F, dim, dim);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Vec<S> v = unit_vector(F, dim, 0);
            for (int k = 0; k < j; ++k) v = multiply(H.alg, v, s_x);
            for (int k = 0; k < i; ++k) v = multiply(H.alg, v, s_g);
            H.antipode.col(index(i, j)) = v;
        }

    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) {
            std::string name = power_name("g", i) + power_name("x", j);
            H.names.push_back(name.empty() ? "1" : name);
        }
    return H;
}

template <class S>
HopfAlgebra<S> sweedler(const Field<S>& F) {
    return taft_algebra(F, 2, F(-1));
}

HopfAlgebra<Rational> sweedler() {
    return sweedler(RationalField{});
}

HopfAlgebra<Fp> taft(int n, std::uint64_t p, long q) {
    PrimeField F(p);
    return taft_algebra(F, n, F(q));
}

namespace {

std::vector<std::string> cyclic_names(int n) {
    std::vector<std::string> names{"1"};
    for (int k = 1; k < n; ++k) names.push_back(power_name("g", k));
    return names;
}

std::vector<std::string> dihedral_names(int n) {
    std::vector<std::string> names;
    for (int j = 0; j < 2; ++j)
        for (int i = 0; i < n; ++i) {
            std::string s = power_name("r", i) + power_name("s", j);
            names.push_back(s.empty() ? "1" : s);
        }
    return names;
}

AnyHopf group_hopf(const CayleyTable& table, std::uint64_t p, std::vector<std::string> names) {
    if (p == 0) return group_algebra(table, RationalField{}, names);
    return group_algebra(table, PrimeField(p), names);
}

struct Recipe {
    std::string name;
    std::string description;
    bool unimodular;
    bool involutive;
    bool separable;
    std::function<AnyHopf()> build;
};

Recipe group_recipe(std::string name, std::string description, std::function<CayleyTable()> table, std::uint64_t p,
                    std::function<std::vector<std::string>()> names) {
    std::size_t order = table().size();
    bool separable = p == 0 || order % p != 0;
    return {std::move(name), std::move(description), true, true, separable,
            [table, p, names] { return group_hopf(table(), p, names()); }};
}

const std::vector<Recipe>& recipes() {
    static const std::vector<Recipe> all = [] {
        auto none = [] { return std::vector<std::string>{}; };
        std::vector<Recipe> r;
        r.push_back(group_recipe("qc2", "group algebra of C2 over Q", [] { return cyclic_group(2); }, 0,
                                 [] { return cyclic_names(2); }));
        r.push_back(group_recipe("qc3", "group algebra of C3 over Q", [] { return cyclic_group(3); }, 0,
                                 [] { return cyclic_names(3); }));
        r.push_back(group_recipe("f3c3", "group algebra of C3 over F_3", [] { return cyclic_group(3); }, 3,
                                 [] { return cyclic_names(3); }));
        r.push_back(group_recipe("qs3", "group algebra of S3 over Q", [] { return dihedral_group(3); }, 0,
                                 [] { return dihedral_names(3); }));
        r.push_back({"sweedler", "Sweedler's 4-dimensional Hopf algebra over Q", false, false, false,
                     [] { return AnyHopf(sweedler()); }});
        r.push_back({"taft-3-7-2", "Taft algebra n=3, q=2 over F_7", false, false, false,
                     [] { return AnyHopf(taft(3, 7, 2)); }});
        r.push_back({"taft-4-5-2", "Taft algebra n=4, q=2 over F_5", false, false, false,
                     [] { return AnyHopf(taft(4, 5, 2)); }});
        r.push_back(group_recipe("f2c2", "group algebra of C2 over F_2", [] { return cyclic_group(2); }, 2,
                                 [] { return cyclic_names(2); }));
        r.push_back(group_recipe("f5c5", "group algebra of C5 over F_5", [] { return cyclic_group(5); }, 5,
                                 [] { return cyclic_names(5); }));
        r.push_back(group_recipe("f7c3", "group algebra of C3 over F_7", [] { return cyclic_group(3); }, 7,
                                 [] { return cyclic_names(3); }));
        r.push_back(group_recipe("qk4", "group algebra of C2 x C2 over Q",
                                 [] { return direct_product(cyclic_group(2), cyclic_group(2)); }, 0, none));
        r.push_back(group_recipe("qd4", "group algebra of the dihedral group of order 8 over Q",
                                 [] { return dihedral_group(4); }, 0, [] { return dihedral_names(4); }));
        r.push_back(group_recipe("qq8", "group algebra of the quaternion group over Q", [] { return quaternion_group(); },
                                 0, none));
        return r;
    }();
    return all;
}

CatalogEntry realise(const Recipe& r) {
    AnyHopf h = r.build();
    Report report = std::visit([](const auto& H) { return verify_hopf(H); }, h);
    if (!report.passed()) throw std::logic_error("catalog entry " + r.name + ": " + report.first_failure()->detail);
    return {r.name, r.description, r.unimodular, r.involutive, r.separable, std::move(h)};
}

}  // namespace

std::vector<CatalogEntry> catalog() {
    std::vector<CatalogEntry> out;
    for (const Recipe& r : recipes()) out.push_back(realise(r));
    return out;
}

std::vector<std::string> catalog_names() {
    std::vector<std::string> names;
    for (const Recipe& r : recipes()) names.push_back(r.name);
    return names;
}

std::optional<CatalogEntry> catalog_entry(const std::string& name) {
    for (const Recipe& r : recipes())
        if (r.name == name) return realise(r);
    return std::nullopt;
}

#define FHOPF_INSTANTIATE_CATALOG(S)                                                                          \
    template HopfAlgebra<S> group_algebra(const CayleyTable&, const Field<S>&, const std::vector<std::string>&); \
    template HopfAlgebra<S> taft_algebra(const Field<S>&, int, const S&);                                     \
    template HopfAlgebra<S> sweedler(const Field<S>&);

FHOPF_INSTANTIATE_CATALOG(Rational)
FHOPF_INSTANTIATE_CATALOG(Fp)

}  // namespace fhopf
