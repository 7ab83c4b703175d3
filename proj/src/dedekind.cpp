#include "fhopf/dedekind.hpp"

#include <random>
#include <stdexcept>

namespace fhopf {

namespace {

using Row = std::array<mpz_class, 2>;
using Rational4 = std::vector<std::vector<mpq_class>>;

/// Hermite form rows (a, b), (0, c) of the lattice spanned by `rows`, with the
/// integer combinations producing them.
struct Hermite {
    mpz_class a, b, c;
    std::vector<mpz_class> first, second;
};

Hermite hermite(const std::vector<Row>& rows) {
    struct Tracked {
        Row row;
        std::vector<mpz_class> coeffs;
    };
    const size_t n = rows.size();
    std::vector<Tracked> t;
    for (size_t i = 0; i < n; ++i) {
        Tracked r{rows[i], std::vector<mpz_class>(n, 0)};
        r.coeffs[i] = 1;
        t.push_back(std::move(r));
    }
    auto subtract = [](Tracked& x, const Tracked& y, const mpz_class& q) {
        for (int k = 0; k < 2; ++k) x.row[k] -= q * y.row[k];
        for (size_t k = 0; k < x.coeffs.size(); ++k) x.coeffs[k] -= q * y.coeffs[k];
    };
    auto negate = [](Tracked& x) {
        for (auto& v : x.row) v = -v;
        for (auto& v : x.coeffs) v = -v;
    };
    // Euclid on column `col` over rows[from..]; leaves the pivot at position `from`.
    auto eliminate = [&](int col, size_t from) {
        for (;;) {
            size_t pivot = n;
            for (size_t i = from; i < n; ++i)
                if (t[i].row[col] != 0 && (pivot == n || abs(t[i].row[col]) < abs(t[pivot].row[col]))) pivot = i;
            if (pivot == n) throw std::invalid_argument("lattice does not have rank 2");
            bool done = true;
            for (size_t i = from; i < n; ++i) {
                if (i == pivot || t[i].row[col] == 0) continue;
                mpz_class q;
                mpz_fdiv_q(q.get_mpz_t(), t[i].row[col].get_mpz_t(), t[pivot].row[col].get_mpz_t());
                subtract(t[i], t[pivot], q);
                if (t[i].row[col] != 0) done = false;
            }
            if (done) {
                std::swap(t[from], t[pivot]);
                if (t[from].row[col] < 0) negate(t[from]);
                return;
            }
        }
    };
    if (n < 2) throw std::invalid_argument("lattice does not have rank 2");
    eliminate(0, 0);
    eliminate(1, 1);
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), t[0].row[1].get_mpz_t(), t[1].row[1].get_mpz_t());
    subtract(t[0], t[1], q);
    return Hermite{t[0].row[0], t[0].row[1], t[1].row[1], t[0].coeffs, t[1].coeffs};
}

std::string rational_str(const mpq_class& q) { return q.get_str(); }

mpq_class determinant(Rational4 m) {
    const size_t n = m.size();
    mpq_class det = 1;
    for (size_t col = 0; col < n; ++col) {
        size_t pivot = col;
        while (pivot < n && m[pivot][col] == 0) ++pivot;
        if (pivot == n) return 0;
        if (pivot != col) {
            std::swap(m[pivot], m[col]);
            det = -det;
        }
        det *= m[col][col];
        for (size_t r = col + 1; r < n; ++r) {
            if (m[r][col] == 0) continue;
            const mpq_class f = m[r][col] / m[col][col];
            for (size_t k = col; k < n; ++k) m[r][k] -= f * m[col][k];
        }
    }
    return det;
}

void append_coordinates(std::vector<mpq_class>& out, const QuadElement& x) {
    out.push_back(x.rational_part());
    out.push_back(x.w_part());
}

bool integral(const QuadMatrix& m) {
    for (const auto& row : m)
        for (const QuadElement& x : row)
            if (!x.is_integral()) return false;
    return true;
}

QuadMatrix add(const QuadMatrix& x, const QuadMatrix& y) {
    QuadMatrix s;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) s[i][j] = x[i][j] + y[i][j];
    return s;
}

/// The eight matrices alpha e_ij for alpha in the Z-basis of I.
std::vector<QuadMatrix> lattice_generators(const QuadraticIdeal& I) {
    std::vector<QuadMatrix> out;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (const QuadElement& alpha : I.basis()) {
                QuadMatrix m = matrix_unit(i, j);
                m[i][j] = alpha;
                out.push_back(m);
            }
    return out;
}

QuadMatrix psi(const QuadMatrix& C, const QuadMatrix& X) { return transpose(multiply(C, X)); }

/// Y . X = X Y^t.
QuadMatrix act(const QuadMatrix& Y, const QuadMatrix& X) { return multiply(X, transpose(Y)); }

}  // namespace

QuadElement::QuadElement(mpz_class a, mpz_class b, mpz_class d) : a_(std::move(a)), b_(std::move(b)), d_(std::move(d)) {
    if (d_ == 0) throw std::domain_error("zero denominator");
    if (d_ < 0) {
        a_ = -a_;
        b_ = -b_;
        d_ = -d_;
    }
    if (a_ == 0 && b_ == 0) {
        d_ = 1;
        return;
    }
    mpz_class g = gcd(gcd(a_, b_), d_);
    if (g != 1) {
        a_ /= g;
        b_ /= g;
        d_ /= g;
    }
}

mpq_class QuadElement::norm() const {
    mpq_class n(a_ * a_ + 5 * b_ * b_, d_ * d_);
    n.canonicalize();
    return n;
}

QuadElement QuadElement::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero");
    return QuadElement(a_ * d_, -b_ * d_, a_ * a_ + 5 * b_ * b_);
}

std::string QuadElement::str() const {
    const mpq_class p = rational_part(), q = w_part();
    if (q == 0) return rational_str(p);
    std::string w = (q == 1 ? "" : q == -1 ? "-" : rational_str(q) + "*") + "sqrt(-5)";
    if (p == 0) return w;
    return rational_str(p) + (q > 0 ? "+" : "") + w;
}

QuadElement operator+(const QuadElement& x, const QuadElement& y) {
    return QuadElement(x.a_ * y.d_ + y.a_ * x.d_, x.b_ * y.d_ + y.b_ * x.d_, x.d_ * y.d_);
}

QuadElement operator-(const QuadElement& x, const QuadElement& y) { return x + (-y); }

QuadElement operator*(const QuadElement& x, const QuadElement& y) {
    return QuadElement(x.a_ * y.a_ - 5 * x.b_ * y.b_, x.a_ * y.b_ + x.b_ * y.a_, x.d_ * y.d_);
}

QuadElement root() { return QuadElement(0, 1); }

QuadraticIdeal QuadraticIdeal::generated_by(const std::vector<QuadElement>& generators) {
    std::vector<Row> rows;
    for (const QuadElement& g : generators) {
        if (!g.is_integral()) throw std::invalid_argument("ideal generator " + g.str() + " is not integral");
        if (g.is_zero()) continue;
        rows.push_back({g.a(), g.b()});
        rows.push_back({-5 * g.b(), g.a()});
    }
    if (rows.empty()) throw std::invalid_argument("the zero ideal is not allowed");
    Hermite h = hermite(rows);
    return QuadraticIdeal(h.a, h.b, h.c);
}

QuadraticIdeal QuadraticIdeal::unit() { return QuadraticIdeal(1, 0, 1); }

std::array<QuadElement, 2> QuadraticIdeal::basis() const {
    return {QuadElement(a_, b_, 1), QuadElement(0, c_, 1)};
}

bool QuadraticIdeal::contains(const QuadElement& x) const {
    if (!x.is_integral() || !mpz_divisible_p(x.a().get_mpz_t(), a_.get_mpz_t())) return false;
    mpz_class rest = x.b() - (x.a() / a_) * b_;
    return mpz_divisible_p(rest.get_mpz_t(), c_.get_mpz_t()) != 0;
}

QuadraticIdeal QuadraticIdeal::conjugate() const {
    auto [x, y] = basis();
    return generated_by({x.conjugate(), y.conjugate()});
}

std::string QuadraticIdeal::str() const {
    auto [x, y] = basis();
    return "Z<" + x.str() + ", " + y.str() + ">";
}

QuadraticIdeal operator*(const QuadraticIdeal& x, const QuadraticIdeal& y) {
    std::vector<QuadElement> products;
    for (const QuadElement& u : x.basis())
        for (const QuadElement& v : y.basis()) products.push_back(u * v);
    return QuadraticIdeal::generated_by(products);
}

FractionalIdeal::FractionalIdeal(QuadraticIdeal numerator, mpz_class denominator)
    : numerator_(std::move(numerator)), denominator_(std::move(denominator)) {
    if (denominator_ == 0) throw std::domain_error("zero denominator");
    if (denominator_ < 0) denominator_ = -denominator_;
    mpz_class g = gcd(gcd(gcd(numerator_.a_, numerator_.b_), numerator_.c_), denominator_);
    if (g != 1) {
        numerator_.a_ /= g;
        numerator_.b_ /= g;
        numerator_.c_ /= g;
        denominator_ /= g;
    }
}

FractionalIdeal operator*(const FractionalIdeal& x, const FractionalIdeal& y) {
    return FractionalIdeal(x.numerator_ * y.numerator_, x.denominator_ * y.denominator_);
}

FractionalIdeal inverse(const QuadraticIdeal& I) { return FractionalIdeal(I.conjugate(), I.norm()); }

std::optional<QuadElement> principal_generator(const QuadraticIdeal& I) {
    const mpz_class N = I.norm();
    for (mpz_class b = 0; 5 * b * b <= N; ++b)
        for (mpz_class a = 0; a * a + 5 * b * b <= N; ++a) {
            if (a * a + 5 * b * b != N) continue;
            for (const QuadElement& x : {QuadElement(a, b, 1), QuadElement(-a, b, 1), QuadElement(a, -b, 1),
                                         QuadElement(-a, -b, 1)})
                if (QuadraticIdeal::generated_by({x}) == I) return x;
        }
    return std::nullopt;
}

QuadMatrix multiply(const QuadMatrix& x, const QuadMatrix& y) {
    QuadMatrix p;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) p[i][j] = x[i][0] * y[0][j] + x[i][1] * y[1][j];
    return p;
}

QuadMatrix transpose(const QuadMatrix& x) {
    QuadMatrix t;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) t[i][j] = x[j][i];
    return t;
}

QuadMatrix matrix_unit(int p, int q) {
    QuadMatrix e;
    e[p][q] = QuadElement(1);
    return e;
}

std::string str(const QuadMatrix& x) {
    return "[[" + x[0][0].str() + ", " + x[0][1].str() + "], [" + x[1][0].str() + ", " + x[1][1].str() + "]]";
}

std::optional<SteinitzData> steinitz_matrix(const QuadraticIdeal& I, const QuadElement& alpha1,
                                            const QuadElement& alpha2) {
    if (!(QuadraticIdeal::generated_by({alpha1, alpha2}) == I))
        throw std::invalid_argument("the given elements do not generate the ideal");
    auto gamma = principal_generator(I * I);
    if (!gamma) return std::nullopt;

    // alpha1 conj(I) + alpha2 conj(I) = N(I) R, so N(I) is an integer combination
    // of the products alpha_i eps_j.
    const auto eps = I.conjugate().basis();
    const std::array<QuadElement, 2> alpha{alpha1, alpha2};
    std::vector<Row> rows;
    for (const QuadElement& x : alpha)
        for (const QuadElement& e : eps) {
            QuadElement p = x * e;
            rows.push_back({p.a(), p.b()});
        }
    const mpz_class N = I.norm();
    Hermite h = hermite(rows);
    if (!mpz_divisible_p(N.get_mpz_t(), h.a.get_mpz_t())) return std::nullopt;
    const mpz_class x0 = N / h.a;
    const mpz_class rest = -x0 * h.b;
    if (!mpz_divisible_p(rest.get_mpz_t(), h.c.get_mpz_t())) return std::nullopt;
    const mpz_class x1 = rest / h.c;

    SteinitzData s{alpha1, alpha2, QuadElement(), QuadElement(), *gamma, {}};
    std::array<QuadElement, 2> beta;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            mpz_class coeff = x0 * h.first[i * 2 + j] + x1 * h.second[i * 2 + j];
            beta[i] = beta[i] + QuadElement(coeff, 0, N) * eps[j];
        }
    s.beta1 = beta[0];
    s.beta2 = beta[1];
    if (s.beta1 * alpha1 + s.beta2 * alpha2 != QuadElement(1))
        throw std::logic_error("Bezout combination does not sum to 1");
    s.C = {{{s.beta1, s.beta2}, {-alpha2 / s.gamma, alpha1 / s.gamma}}};
    return s;
}

std::optional<SteinitzData> steinitz_matrix(const QuadraticIdeal& I) {
    if (auto g = principal_generator(I)) return steinitz_matrix(I, *g, QuadElement());
    auto [x, y] = I.basis();
    return steinitz_matrix(I, x, y);
}

Report verify_steinitz(const QuadraticIdeal& I, const QuadMatrix& C) {
    Report r;
    r.add("steinitz matrix", true, str(C));
    Rational4 images;
    bool inside = true;
    for (int slot = 0; slot < 2; ++slot)
        for (const QuadElement& alpha : I.basis()) {
            std::array<QuadElement, 2> v;
            v[slot] = alpha;
            std::vector<mpq_class> coords;
            for (int i = 0; i < 2; ++i) {
                QuadElement image = C[i][0] * v[0] + C[i][1] * v[1];
                inside = inside && image.is_integral();
                append_coordinates(coords, image);
            }
            images.push_back(coords);
        }
    r.add("image of I+I lies in R+R", inside);
    const mpq_class det = determinant(images);
    r.add("lattice determinant is a unit", abs(det) == 1, "det " + det.get_str());
    const QuadElement detC = C[0][0] * C[1][1] - C[0][1] * C[1][0];
    const mpq_class n = mpq_class(I.norm());
    r.add("N(det C) N(I)^2 = 1", detC.norm() * n * n == 1, "det C = " + detC.str());
    return r;
}

Report verify_matrix_hom_isomorphism(const QuadraticIdeal& I, const QuadMatrix& C, std::uint64_t seed, int pairs) {
    Report r;
    const std::vector<QuadMatrix> gens = lattice_generators(I);

    // f_B(a) = sum a_ij B_ij represents the R-linear map with f(e_ij) = B_ij.
    auto evaluate = [](const QuadMatrix& B, const QuadMatrix& a) {
        QuadElement s;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) s = s + a[i][j] * B[i][j];
        return s;
    };
    bool identification = true;
    for (int p = 0; p < 2; ++p)
        for (int q = 0; q < 2; ++q)
            for (const QuadMatrix& B : gens) {
                const QuadMatrix X = matrix_unit(p, q);
                QuadMatrix read;
                for (int i = 0; i < 2; ++i)
                    for (int j = 0; j < 2; ++j) read[i][j] = evaluate(B, multiply(matrix_unit(i, j), X));
                identification = identification && read == act(X, B);
            }
    r.add("Hom(A, I) = M2(I) is A-linear", identification);

    bool units = true;
    for (int p = 0; p < 2; ++p)
        for (int q = 0; q < 2; ++q)
            for (const QuadMatrix& X : gens) {
                const QuadMatrix Y = matrix_unit(p, q);
                units = units && psi(C, act(Y, X)) == multiply(Y, psi(C, X));
            }
    r.add("Psi(Y.X) = Y Psi(X) on matrix units", units);

    std::mt19937_64 gen(seed);
    std::uniform_int_distribution<long> coeff(-10, 10);
    const auto basis = I.basis();
    bool random = true;
    for (int t = 0; t < pairs; ++t) {
        QuadMatrix Y, X;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) {
                Y[i][j] = QuadElement(coeff(gen), coeff(gen));
                X[i][j] = QuadElement(coeff(gen)) * basis[0] + QuadElement(coeff(gen)) * basis[1];
            }
        random = random && psi(C, act(Y, X)) == multiply(Y, psi(C, X));
    }
    r.add("Psi(Y.X) = Y Psi(X) on random pairs", random, std::to_string(pairs) + " pairs");

    bool inside = true;
    Rational4 images;
    for (const QuadMatrix& X : gens) {
        const QuadMatrix image = psi(C, X);
        inside = inside && integral(image);
        std::vector<mpq_class> coords;
        for (const auto& row : image)
            for (const QuadElement& x : row) append_coordinates(coords, x);
        images.push_back(coords);
    }
    r.add("Psi maps M2(I) into M2(R)", inside);
    const mpq_class det = determinant(images);
    r.add("Psi is bijective on lattices", abs(det) == 1, "det " + det.get_str());
    r.add("Psi is additive", psi(C, add(gens[0], gens[7])) == add(psi(C, gens[0]), psi(C, gens[7])));
    return r;
}

}  // namespace fhopf
