#ifndef FHOPF_IO_HPP
#define FHOPF_IO_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "fhopf/catalog.hpp"
#include "fhopf/subext.hpp"

namespace fhopf {

/// "rational" or "prime P" (also accepted as "prime:P").
struct FieldSpec {
    std::uint64_t prime = 0;  // 0 for Q
    static FieldSpec parse(const std::string& text);
    std::string str() const;
};

/// Text format, one keyword or entry per line, '#' comments and blank lines ignored:
///
///   format 1
///   field rational | field prime P
///   dim N
///   names n_0 ... n_{N-1}          (optional)
///   unit      i c         ... end
///   counit    i c         ... end
///   mul       i j k c     ... end   (coefficient c of e_k in e_i e_j)
///   comul     i j k c     ... end   (coefficient c of e_j (x) e_k in Delta(e_i))
///   antipode  i j c       ... end   (coefficient c of e_j in S(e_i))
///
/// Omitted entries are zero. Rationals are written a/b or a; prime-field
/// scalars as integers (a/b is accepted and reduced). Errors throw ParseError
/// with "source:line: message". `field` overrides the header field.
AnyHopf read_hopf(std::istream& in, const std::string& source, std::optional<FieldSpec> field = std::nullopt);
AnyHopf read_hopf_file(const std::string& path, std::optional<FieldSpec> field = std::nullopt);

/// Canonical emission: sections in the order above, nonzero entries only, in
/// increasing index order. Emit, parse, emit is byte-identical.
template <class S>
void write_hopf(std::ostream& out, const HopfAlgebra<S>& H);
void write_hopf(std::ostream& out, const AnyHopf& H);
void write_hopf_file(const std::string& path, const AnyHopf& H);

/// Matrix file:
///
///   format 1
///   field ...
///   matrix ROWS COLS
///   r c value ... end
using AnyMatrix = std::variant<Mat<Rational>, Mat<Fp>>;
AnyMatrix read_matrix(std::istream& in, const std::string& source, std::optional<FieldSpec> field = std::nullopt);
AnyMatrix read_matrix_file(const std::string& path, std::optional<FieldSpec> field = std::nullopt);
template <class S>
void write_matrix(std::ostream& out, const Field<S>& F, const Mat<S>& M);

/// Right module file, one action matrix per basis element of K:
///
///   format 1
///   field ...
///   module DIM COUNT
///   action b
///   r c value ... end                (matrix of m -> m . e_b)
///   ... (COUNT action blocks)
using AnyModule = std::variant<RightModule<Rational>, RightModule<Fp>>;
AnyModule read_module(std::istream& in, const std::string& source, std::optional<FieldSpec> field = std::nullopt);
AnyModule read_module_file(const std::string& path, std::optional<FieldSpec> field = std::nullopt);
template <class S>
void write_module(std::ostream& out, const Field<S>& F, const RightModule<S>& M);

}  // namespace fhopf

#endif  // FHOPF_IO_HPP
