#include "fhopf/io.hpp"

#include <charconv>
#include <fstream>
#include <limits>
#include <map>
#include <set>
#include <sstream>

namespace fhopf {

namespace {

class LineReader {
   public:
    LineReader(std::istream& in, std::string source) : in_(in), source_(std::move(source)) {}

    /// Next non-blank line with comments stripped, split on whitespace.
    bool next(std::vector<std::string>& tokens) {
        std::string text;
        while (std::getline(in_, text)) {
            ++line_;
            if (auto hash = text.find('#'); hash != std::string::npos) text.erase(hash);
            std::istringstream words(text);
            tokens.clear();
            for (std::string w; words >> w;) tokens.push_back(w);
            if (!tokens.empty()) return true;
        }
        return false;
    }

    std::vector<std::string> require(const std::string& what) {
        std::vector<std::string> tokens;
        if (!next(tokens)) fail("unexpected end of file, expected " + what);
        return tokens;
    }

    [[noreturn]] void fail(const std::string& message) const {
        throw ParseError(source_ + ":" + std::to_string(line_) + ": " + message);
    }

    Index index(const std::string& token, Index bound) const {
        long value = 0;
        auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (ec != std::errc() || end != token.data() + token.size()) fail("malformed index '" + token + "'");
        if (value < 0 || value >= bound)
            fail("index " + token + " out of range [0, " + std::to_string(bound) + ")");
        return value;
    }

    template <class S>
    S scalar(const Field<S>& F, const std::string& token) const {
        if constexpr (std::is_same_v<S, Fp>) {
            if (auto slash = token.find('/'); slash != std::string::npos) {
                const Fp den = parse_scalar(F, token.substr(slash + 1));
                if (is_zero(den)) fail("denominator of '" + token + "' vanishes in " + F.describe());
                return parse_scalar(F, token.substr(0, slash)) / den;
            }
        }
        return parse_scalar(F, token);
    }

    template <class S>
    S parse_scalar(const Field<S>& F, const std::string& token) const {
        try {
            return F.parse(token);
        } catch (const ParseError& e) {
            fail(e.what());
        }
    }

   private:
    std::istream& in_;
    std::string source_;
    int line_ = 0;
};

FieldSpec read_header(LineReader& r, std::optional<FieldSpec> override_field) {
    auto format = r.require("'format 1'");
    if (format.size() != 2 || format[0] != "format") r.fail("expected 'format 1'");
    if (format[1] != "1") r.fail("unsupported format version " + format[1]);
    auto field = r.require("field line");
    if (field[0] != "field") r.fail("expected 'field rational' or 'field prime P'");
    std::string spec;
    for (size_t i = 1; i < field.size(); ++i) spec += (i > 1 ? " " : "") + field[i];
    FieldSpec parsed;
    try {
        parsed = FieldSpec::parse(spec);
    } catch (const std::exception& e) {
        r.fail(e.what());
    }
    return override_field ? *override_field : parsed;
}

template <class Body>
auto with_field(const FieldSpec& spec, Body&& body) {
    if (spec.prime == 0) return body(RationalField{});
    return body(PrimeField(spec.prime));
}

void expect_count(const LineReader& r, const std::vector<std::string>& tokens, size_t count, const std::string& what) {
    if (tokens.size() != count) r.fail("expected " + what);
}

/// Reads "r c value" lines up to "end".
template <class S>
Mat<S> read_entries(LineReader& r, const Field<S>& F, Index rows, Index cols) {
    Mat<S> M = zeros(F, rows, cols);
    std::set<std::pair<Index, Index>> seen;
    for (;;) {
        auto t = r.require("matrix entry or 'end'");
        if (t[0] == "end" && t.size() == 1) return M;
        expect_count(r, t, 3, "'row column value'");
        Index i = r.index(t[0], rows), j = r.index(t[1], cols);
        if (!seen.insert({i, j}).second) r.fail("duplicate entry");
        M(i, j) = r.scalar(F, t[2]);
    }
}

template <class S>
HopfAlgebra<S> read_hopf_body(LineReader& r, const Field<S>& F) {
    auto dim = r.require("'dim N'");
    expect_count(r, dim, 2, "'dim N'");
    const Index n = r.index(dim[1], std::numeric_limits<int>::max());
    if (n == 0) r.fail("dimension must be positive");

    HopfAlgebra<S> H;
    H.alg.field = F;
    H.alg.dim = n;
    H.alg.unit = Vec<S>::Constant(n, F.zero());
    H.counit = RowVec<S>::Constant(n, F.zero());
    H.antipode = zeros(F, n, n);
    std::vector<Eigen::Triplet<S>> mul, comul;
    std::set<std::string> done;
    const std::set<std::string> required{"unit", "counit", "mul", "comul", "antipode"};
    const std::map<std::string, size_t> arity{{"unit", 2}, {"counit", 2}, {"mul", 4}, {"comul", 4}, {"antipode", 3}};

    std::vector<std::string> t;
    while (r.next(t)) {
        const std::string section = t[0];
        if (section == "names") {
            if (done.count(section)) r.fail("duplicate section 'names'");
            if (static_cast<Index>(t.size()) != n + 1) r.fail("expected " + std::to_string(n) + " names");
            H.names.assign(t.begin() + 1, t.end());
            done.insert(section);
            continue;
        }
        if (!required.count(section)) r.fail("unknown section '" + section + "'");
        if (t.size() != 1) r.fail("section header '" + section + "' takes no arguments");
        if (!done.insert(section).second) r.fail("duplicate section '" + section + "'");
        std::set<std::vector<Index>> seen;
        for (;;) {
            t = r.require("entry or 'end'");
            if (t[0] == "end" && t.size() == 1) break;
            expect_count(r, t, arity.at(section), std::to_string(arity.at(section) - 1) + " indices and a value");
            std::vector<Index> idx;
            for (size_t k = 0; k + 1 < t.size(); ++k) idx.push_back(r.index(t[k], n));
            if (!seen.insert(idx).second) r.fail("duplicate entry in '" + section + "'");
            const S c = r.scalar(F, t.back());
            if (section == "unit") H.alg.unit(idx[0]) = c;
            else if (section == "counit") H.counit(idx[0]) = c;
            else if (section == "mul") mul.emplace_back(idx[2], idx[0] * n + idx[1], c);
            else if (section == "comul") comul.emplace_back(idx[1] * n + idx[2], idx[0], c);
            else H.antipode(idx[1], idx[0]) = c;
        }
    }
    for (const std::string& s : required)
        if (!done.count(s)) r.fail("missing section '" + s + "'");
    H.alg.mul = SpMat<S>(n, n * n);
    H.alg.mul.setFromTriplets(mul.begin(), mul.end());
    H.comul = SpMat<S>(n * n, n);
    H.comul.setFromTriplets(comul.begin(), comul.end());
    return H;
}

std::ifstream open(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(path + ":0: cannot open file");
    return in;
}

template <class S>
void write_header(std::ostream& out, const Field<S>& F) {
    out << "format 1\nfield " << F.describe() << "\n";
}

template <class S>
void write_entries(std::ostream& out, const Field<S>& F, const Mat<S>& M) {
    for (Index i = 0; i < M.rows(); ++i)
        for (Index j = 0; j < M.cols(); ++j)
            if (!is_zero(M(i, j))) out << i << " " << j << " " << F.format(M(i, j)) << "\n";
    out << "end\n";
}

}  // namespace

FieldSpec FieldSpec::parse(const std::string& text) {
    if (text == "rational") return FieldSpec{};
    std::string rest;
    if (text.rfind("prime ", 0) == 0) rest = text.substr(6);
    else if (text.rfind("prime:", 0) == 0) rest = text.substr(6);
    else throw std::invalid_argument("unknown field '" + text + "', expected 'rational' or 'prime P'");
    std::uint64_t p = 0;
    auto [end, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), p);
    if (ec != std::errc() || end != rest.data() + rest.size()) throw std::invalid_argument("malformed prime '" + rest + "'");
    PrimeField check(p);
    return FieldSpec{p};
}

std::string FieldSpec::str() const { return prime == 0 ? "rational" : "prime " + std::to_string(prime); }

AnyHopf read_hopf(std::istream& in, const std::string& source, std::optional<FieldSpec> field) {
    LineReader r(in, source);
    const FieldSpec spec = read_header(r, field);
    return with_field(spec, [&](const auto& F) -> AnyHopf {
        auto H = read_hopf_body(r, F);
        try {
            check_shape(H);
        } catch (const std::invalid_argument& e) {
            throw ParseError(source + ": " + e.what());
        }
        return H;
    });
}

AnyHopf read_hopf_file(const std::string& path, std::optional<FieldSpec> field) {
    std::ifstream in = open(path);
    return read_hopf(in, path, field);
}

template <class S>
void write_hopf(std::ostream& out, const HopfAlgebra<S>& H) {
    const Field<S>& F = H.field();
    const Index n = H.dim();
    write_header(out, F);
    out << "dim " << n << "\n";
    if (!H.names.empty()) {
        out << "names";
        for (const std::string& name : H.names) out << " " << name;
        out << "\n";
    }
    out << "unit\n";
    for (Index i = 0; i < n; ++i)
        if (!is_zero(H.alg.unit(i))) out << i << " " << F.format(H.alg.unit(i)) << "\n";
    out << "end\ncounit\n";
    for (Index i = 0; i < n; ++i)
        if (!is_zero(H.counit(i))) out << i << " " << F.format(H.counit(i)) << "\n";
    out << "end\nmul\n";
    for (Index c = 0; c < n * n; ++c) {
        std::map<Index, S> column;
        for (typename SpMat<S>::InnerIterator it(H.alg.mul, c); it; ++it)
            if (!is_zero(it.value())) column.emplace(it.row(), it.value());
        for (const auto& [k, v] : column) out << c / n << " " << c % n << " " << k << " " << F.format(v) << "\n";
    }
    out << "end\ncomul\n";
    for (Index i = 0; i < n; ++i) {
        std::map<Index, S> column;
        for (typename SpMat<S>::InnerIterator it(H.comul, i); it; ++it)
            if (!is_zero(it.value())) column.emplace(it.row(), it.value());
        for (const auto& [r, v] : column) out << i << " " << r / n << " " << r % n << " " << F.format(v) << "\n";
    }
    out << "end\nantipode\n";
    for (Index i = 0; i < n; ++i)
        for (Index j = 0; j < n; ++j)
            if (!is_zero(H.antipode(j, i))) out << i << " " << j << " " << F.format(H.antipode(j, i)) << "\n";
    out << "end\n";
}

void write_hopf(std::ostream& out, const AnyHopf& H) {
    std::visit([&](const auto& h) { write_hopf(out, h); }, H);
}

void write_hopf_file(const std::string& path, const AnyHopf& H) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    write_hopf(out, H);
}

AnyMatrix read_matrix(std::istream& in, const std::string& source, std::optional<FieldSpec> field) {
    LineReader r(in, source);
    const FieldSpec spec = read_header(r, field);
    auto shape = r.require("'matrix ROWS COLS'");
    if (shape.size() != 3 || shape[0] != "matrix") r.fail("expected 'matrix ROWS COLS'");
    const Index rows = r.index(shape[1], std::numeric_limits<int>::max());
    const Index cols = r.index(shape[2], std::numeric_limits<int>::max());
    return with_field(spec, [&](const auto& F) -> AnyMatrix { return read_entries(r, F, rows, cols); });
}

AnyMatrix read_matrix_file(const std::string& path, std::optional<FieldSpec> field) {
    std::ifstream in = open(path);
    return read_matrix(in, path, field);
}

template <class S>
void write_matrix(std::ostream& out, const Field<S>& F, const Mat<S>& M) {
    write_header(out, F);
    out << "matrix " << M.rows() << " " << M.cols() << "\n";
    write_entries(out, F, M);
}

AnyModule read_module(std::istream& in, const std::string& source, std::optional<FieldSpec> field) {
    LineReader r(in, source);
    const FieldSpec spec = read_header(r, field);
    auto shape = r.require("'module DIM COUNT'");
    if (shape.size() != 3 || shape[0] != "module") r.fail("expected 'module DIM COUNT'");
    const Index dim = r.index(shape[1], std::numeric_limits<int>::max());
    const Index count = r.index(shape[2], std::numeric_limits<int>::max());
    return with_field(spec, [&](const auto& F) -> AnyModule {
        using S = typename std::decay_t<decltype(F)>::Scalar;
        RightModule<S> M;
        M.action.assign(count, Mat<S>());
        std::vector<bool> seen(count, false);
        for (Index k = 0; k < count; ++k) {
            auto head = r.require("'action b'");
            if (head.size() != 2 || head[0] != "action") r.fail("expected 'action b'");
            const Index b = r.index(head[1], count);
            if (seen[b]) r.fail("duplicate action block");
            seen[b] = true;
            M.action[b] = read_entries(r, F, dim, dim);
        }
        return M;
    });
}

AnyModule read_module_file(const std::string& path, std::optional<FieldSpec> field) {
    std::ifstream in = open(path);
    return read_module(in, path, field);
}

template <class S>
void write_module(std::ostream& out, const Field<S>& F, const RightModule<S>& M) {
    write_header(out, F);
    out << "module " << M.dim() << " " << M.action.size() << "\n";
    for (size_t b = 0; b < M.action.size(); ++b) {
        out << "action " << b << "\n";
        write_entries(out, F, M.action[b]);
    }
}

#define FHOPF_INSTANTIATE_IO(S)                                                      \
    template void write_hopf(std::ostream&, const HopfAlgebra<S>&);                  \
    template void write_matrix(std::ostream&, const Field<S>&, const Mat<S>&);       \
    template void write_module(std::ostream&, const Field<S>&, const RightModule<S>&);

FHOPF_INSTANTIATE_IO(Rational)
FHOPF_INSTANTIATE_IO(Fp)

}  // namespace fhopf
