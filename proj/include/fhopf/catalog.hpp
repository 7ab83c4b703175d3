#ifndef FHOPF_CATALOG_HPP
#define FHOPF_CATALOG_HPP

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "fhopf/hopf.hpp"

namespace fhopf {

/// Multiplication table of a finite group: table[a][b] is the index of a*b.
using CayleyTable = std::vector<std::vector<int>>;

/// Throws std::invalid_argument unless the table is a group with identity 0.
void check_group(const CayleyTable& table);

CayleyTable cyclic_group(int n);
/// Dihedral group of order 2n: r^i s^j has index i + n*j.
CayleyTable dihedral_group(int n);
CayleyTable quaternion_group();
CayleyTable direct_product(const CayleyTable& a, const CayleyTable& b);

/// kG with Delta g = g (x) g, eps(g) = 1, S(g) = g^-1.
template <class S>
HopfAlgebra<S> group_algebra(const CayleyTable& table, const Field<S>& F,
                             const std::vector<std::string>& names = {});

/// Taft-type algebra on g^i x^j (index j*n + i): g^n = 1, x^n = 0, x g = q g x,
/// Delta g = g (x) g, Delta x = x (x) 1 + g (x) x. q must have order exactly n.
template <class S>
HopfAlgebra<S> taft_algebra(const Field<S>& F, int n, const S& q);

/// Sweedler's four-dimensional algebra on {1, g, x, gx}.
template <class S>
HopfAlgebra<S> sweedler(const Field<S>& F);

HopfAlgebra<Rational> sweedler();

/// Taft algebra over F_p; throws std::invalid_argument if q does not have order n.
HopfAlgebra<Fp> taft(int n, std::uint64_t p, long q);

using AnyHopf = std::variant<HopfAlgebra<Rational>, HopfAlgebra<Fp>>;

/// Named corpus entry with its documented (and re-derived in tests) properties.
struct CatalogEntry {
    std::string name;
    std::string description;
    bool unimodular;
    bool involutive;
    bool separable;
    AnyHopf hopf;
};

std::vector<std::string> catalog_names();
std::optional<CatalogEntry> catalog_entry(const std::string& name);
std::vector<CatalogEntry> catalog();

}  // namespace fhopf

#endif  // FHOPF_CATALOG_HPP
