#include "fhopf/cli.hpp"

#include <fstream>
#include <iostream>
#include <random>

#include "CLI11.hpp"
#include "fhopf/catalog.hpp"
#include "fhopf/dedekind.hpp"
#include "fhopf/double.hpp"
#include "fhopf/frobenius.hpp"
#include "fhopf/io.hpp"
#include "fhopf/separability.hpp"
#include "fhopf/subext.hpp"
#include "json.hpp"

namespace fhopf::cli {

namespace {

template <class S, class V>
std::string format_vector(const Field<S>& F, const V& v) {
    std::string s = "[";
    for (Index i = 0; i < v.size(); ++i) s += (i ? ", " : "") + F.format(F.tag(v(i)));
    return s + "]";
}

template <class S>
std::string format_matrix(const Field<S>& F, const Mat<S>& M) {
    std::string s;
    for (Index i = 0; i < M.rows(); ++i) s += "\n  " + format_vector(F, RowVec<S>(M.row(i)));
    return s;
}

/// Collects sections of checks, prints them, and writes the JSON summary.
class Session {
   public:
    explicit Session(std::ostream& out) : out_(out) {}

    void section(const std::string& title, const Report& r) {
        out_ << title << ": " << (r.passed() ? "PASS" : "FAIL") << "\n";
        for (const Check& c : r.checks())
            if (!c.passed) out_ << "  failed: " << c.name << (c.detail.empty() ? "" : " (" + c.detail + ")") << "\n";
        report_.merge(r, title + ": ");
    }

    void value(const std::string& key, const std::string& text) {
        out_ << key << " = " << text << "\n";
        values_[key] = text;
    }

    void line(const std::string& text) { out_ << text << "\n"; }

    int exit_code() const { return report_.passed() ? ok : check_failed; }

    void write_json(const std::string& path, const std::string& command, int code, const std::string& error) const {
        nlohmann::json j;
        j["command"] = command;
        j["exit_code"] = code;
        j["passed"] = code == ok;
        if (!error.empty()) j["error"] = error;
        j["checks"] = nlohmann::json::array();
        for (const Check& c : report_.checks())
            j["checks"].push_back({{"name", c.name}, {"status", c.passed ? "PASS" : "FAIL"}, {"detail", c.detail}});
        j["values"] = values_;
        std::ofstream f(path);
        if (!f) throw std::runtime_error("cannot write report " + path);
        f << j.dump(2) << "\n";
    }

   private:
    std::ostream& out_;
    Report report_;
    nlohmann::json values_ = nlohmann::json::object();
};

template <class S>
S random_nonzero(const Field<S>& F, std::mt19937_64& gen) {
    if constexpr (std::is_same_v<S, Rational>) {
        std::uniform_int_distribution<long> num(-97, 97), den(1, 97);
        for (;;) {
            Rational r(mpz_class(num(gen)), mpz_class(den(gen)));
            if (!is_zero(r)) return r;
        }
    } else {
        std::uniform_int_distribution<long> d(1, static_cast<long>(F.p) - 1);
        return F(d(gen));
    }
}

template <class S>
bool axioms(Session& s, const HopfAlgebra<S>& H) {
    Report r = verify_hopf(H);
    s.section("Hopf axioms", r);
    return r.passed();
}

template <class S>
void frobenius_pipeline(Session& s, const HopfAlgebra<S>& H, std::uint64_t seed) {
    if (!axioms(s, H)) return;
    const Field<S>& F = H.field();
    IntegralData<S> data = build_integral_data(H);
    s.value("psi", format_vector(F, data.psi));
    s.value("N", format_vector(F, data.norm));
    s.value("m", format_vector(F, data.m));
    s.value("b", format_vector(F, data.b));
    FrobeniusSystem<S> sys = frobenius_system_from_norm(H, data);
    s.value("nu", format_matrix(F, sys.nakayama));

    s.section("Frobenius system", verify_frobenius_system(H.alg, sys));
    s.section("Nakayama closed form", verify_nakayama_closed_form(H, data, sys.nakayama));
    Comparison<S> c = compare_systems(H.alg, sys, transform_by_antipode(H, data, sys));
    Report transform = c.report;
    transform.add("derivative equals b", c.derivative == data.b, format_vector(F, c.derivative));
    s.section("Antipode transform", transform);
    s.section("Integral identities", verify_prop_G(H, data));
    const Report radford = verify_radford(H, data);
    s.section("Radford", radford);

    Orders o = orders(H, data);
    s.line("ord(S)=" + std::to_string(o.antipode) + " ord(nu)=" + std::to_string(o.nakayama) +
           " ord(S^2)=" + std::to_string(o.antipode_squared));
    Report divides;
    divides.add("ord(S) divides 4 dim", o.antipode_divides);
    divides.add("ord(nu) divides 2 dim", o.nakayama_divides);
    s.section("Orders", divides);
    s.section("Dual Frobenius", dual_frobenius_check(H, data));
    s.section("Modular invariants", verify_modular_invariants(H, data, sys));

    std::mt19937_64 gen(seed);
    Report rescaling;
    for (int t = 0; t < 3; ++t) {
        const S k = random_nonzero(F, gen);
        IntegralData<S> scaled = build_integral_data(H, RowVec<S>(k * data.psi));
        const std::string label = " (psi scaled by " + F.format(k) + ")";
        rescaling.add("m unchanged" + label, scaled.m == data.m);
        rescaling.add("b unchanged" + label, scaled.b == data.b);
        rescaling.add("nu unchanged" + label, solve_nakayama(H.alg, scaled.psi) == sys.nakayama);
        rescaling.add("Radford verdict unchanged" + label, verify_radford(H, scaled).passed() == radford.passed());
    }
    s.section("Rescaling invariance", rescaling);
}

template <class S>
void separable_pipeline(Session& s, const HopfAlgebra<S>& H) {
    if (!axioms(s, H)) return;
    const Field<S>& F = H.field();
    IntegralData<S> data = build_integral_data(H);
    SeparabilityVerdict<S> v = is_separable_hopf(H, data);
    s.value("eps(N)", F.format(F.tag((H.counit * data.norm)(0, 0))));
    s.value("separable", v.separable ? "yes" : "no");
    if (v.certificate) s.section("Separability idempotent", verify_separability_certificate(H.alg, *v.certificate));
    FrobeniusSystem<S> sys = frobenius_system_from_norm(H, data);
    auto k = strong_separability(H.alg, sys);
    s.value("Kanzaki element", k ? "yes" : "no");
    if (k) s.section("Kanzaki element", verify_separability_certificate(H.alg, *k));
    s.section("Etingof-Gelaki", etingof_gelaki_check(H, data));
    IdempotentSearch<S> search = search_separability_idempotent(H.alg);
    if (search.ran) {
        Report r;
        r.add("criterion agrees with idempotent search", v.separable == search.idempotent.has_value());
        s.section("Idempotent search", r);
    }
}

template <class S>
void double_pipeline(Session& s, const HopfAlgebra<S>& H, const std::string& output) {
    if (!axioms(s, H)) return;
    DoubleReport<S> d = double_fh_check(H);
    s.value("dim D(H)", std::to_string(d.double_algebra.dim()));
    s.value("unimodular", d.unimodular ? "yes" : "no");
    s.section("Double", d.report);
    if (!output.empty()) write_hopf_file(output, d.double_algebra);
}

template <class S>
void dual_pipeline(Session& s, const HopfAlgebra<S>& H, const std::string& output) {
    if (!axioms(s, H)) return;
    HopfAlgebra<S> D = dual_hopf(H);
    Report r = verify_hopf(D);
    r.add("double dual is H", same_structure(dual_hopf(D), H));
    s.section("Dual", r);
    if (!output.empty()) write_hopf_file(output, D);
}

template <class S>
void subcheck_pipeline(Session& s, const SubalgebraEmbedding<S>& emb, const std::vector<RightModule<S>>& extra) {
    const Field<S>& F = emb.H.field();
    Report e = verify_embedding(emb);
    s.section("Embedding", e);
    if (!e.passed()) return;
    RelativeNakayama<S> rn = relative_nakayama(emb);
    s.value("beta", format_matrix(F, rn.by_composition));
    s.section("Relative Nakayama", rn.report);
    if (!rn.report.passed()) return;

    Report freeness;
    auto us = right_free_basis(emb);
    freeness.add("H is free over K of rank dim H / dim K",
                 us && static_cast<Index>(us->size()) * emb.K.dim() == emb.H.dim(),
                 us ? "rank " + std::to_string(us->size()) : "greedy search inconclusive");
    s.section("Freeness", freeness);
    if (!us) return;

    RelativeFrobeniusData<S> data = beta_frobenius_structure(emb, rn.by_composition);
    s.value("E", format_matrix(F, data.E));
    s.section("Relative Frobenius", verify_relative_frobenius(emb, data));
    s.section("Induction (trivial module)", induction_coinduction_check(emb, data, trivial_module(emb.K)));
    s.section("Induction (regular module)", induction_coinduction_check(emb, data, regular_module(emb.K.alg)));
    for (size_t i = 0; i < extra.size(); ++i)
        s.section("Induction (module " + std::to_string(i + 1) + ")", induction_coinduction_check(emb, data, extra[i]));
}

void dedekind_demo(Session& s, std::uint64_t seed) {
    const QuadraticIdeal R = QuadraticIdeal::unit();
    const QuadraticIdeal I = QuadraticIdeal::generated_by({QuadElement(2), QuadElement(1, 1)});
    s.value("I", "(2, 1+sqrt(-5)) = " + I.str());
    s.value("N(I)", I.norm().get_str());
    Report ideals;
    ideals.add("I is not principal", !principal_generator(I));
    ideals.add("I^2 = (2)", I * I == QuadraticIdeal::generated_by({QuadElement(2)}));
    ideals.add("I I^-1 = R", FractionalIdeal(I) * inverse(I) == FractionalIdeal(R));
    ideals.add("R R = R", R * R == R);
    s.section("Ideal arithmetic", ideals);

    const QuadElement beta2 = -QuadElement(mpz_class(1), mpz_class(-1), mpz_class(2));
    const QuadElement gamma(2);
    const QuadMatrix C{{{QuadElement(2), beta2}, {-QuadElement(1, 1) / gamma, QuadElement(2) / gamma}}};
    s.section("Steinitz matrix", verify_steinitz(I, C));
    auto solved = steinitz_matrix(I);
    Report solved_report;
    if (solved) solved_report.merge(verify_steinitz(I, solved->C));
    else solved_report.add("Steinitz matrix found", false);
    s.section("Solved Steinitz matrix", solved_report);
    s.section("Hom(M2(R), I) = M2(R)", verify_matrix_hom_isomorphism(I, C, seed, 20));
}

template <class S>
const S& same_field(const AnyHopf& any, const Field<typename S::Scalar>& F, const std::string& what) {
    const S* h = std::get_if<S>(&any);
    if (!h || !(h->field() == F)) throw std::invalid_argument(what + " is not over " + F.describe());
    return *h;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact verification of finite-dimensional Hopf algebras", "fhopf"};
    app.require_subcommand(1);

    std::string file, second, output, report_path, field_text, iota_path, name;
    std::vector<std::string> modules;
    std::uint64_t seed = 1;
    auto common = [&](CLI::App* sub) {
        sub->add_option("--report", report_path, "write a JSON summary of every check");
        sub->add_option("--field", field_text, "override the field: rational or prime:P");
    };
    auto* verify = app.add_subcommand("verify", "check the Hopf algebra axioms");
    verify->add_option("FILE", file)->required();
    common(verify);
    auto* frob = app.add_subcommand("frobenius", "integrals, Frobenius system, Nakayama, Radford, orders");
    frob->add_option("FILE", file)->required();
    frob->add_option("--seed", seed, "seed for the rescaling checks");
    common(frob);
    auto* sep = app.add_subcommand("separable", "separability criterion, idempotents and Kanzaki elements");
    sep->add_option("FILE", file)->required();
    common(sep);
    auto* dbl = app.add_subcommand("double", "build and check the Drinfeld double");
    dbl->add_option("FILE", file)->required();
    dbl->add_option("-o", output, "write D(H) here");
    common(dbl);
    auto* dual = app.add_subcommand("dual", "build and check the dual Hopf algebra");
    dual->add_option("FILE", file)->required();
    dual->add_option("-o", output, "write H* here");
    common(dual);
    auto* sub = app.add_subcommand("subcheck", "Hopf subalgebra pair K in H as a twisted Frobenius extension");
    sub->add_option("H", file)->required();
    sub->add_option("K", second)->required();
    sub->add_option("--iota", iota_path, "matrix file of the embedding K -> H")->required();
    sub->add_option("--module", modules, "right K-module file (repeatable)");
    common(sub);
    auto* ded = app.add_subcommand("dedekind-demo", "matrix algebra over Z[sqrt(-5)] with a non-principal I");
    ded->add_option("--seed", seed, "seed for the random pairs");
    ded->add_option("--report", report_path, "write a JSON summary of every check");
    auto* cat = app.add_subcommand("catalog", "list or emit built-in Hopf algebras");
    cat->require_subcommand(1);
    auto* list = cat->add_subcommand("list", "list entries");
    auto* emit = cat->add_subcommand("emit", "write an entry in the text format");
    emit->add_option("NAME", name)->required();
    emit->add_option("-o", output, "output file (default: standard output)");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? ok : invalid_input;
    }

    Session session(out);
    const std::string command = args.empty() ? "" : args.front();
    auto finish = [&](int code, const std::string& error) {
        if (!report_path.empty()) session.write_json(report_path, command, code, error);
        return code;
    };
    try {
        std::optional<FieldSpec> field;
        if (!field_text.empty()) field = FieldSpec::parse(field_text);

        if (*verify) {
            std::visit([&](const auto& H) { axioms(session, H); }, read_hopf_file(file, field));
        } else if (*frob) {
            std::visit([&](const auto& H) { frobenius_pipeline(session, H, seed); }, read_hopf_file(file, field));
        } else if (*sep) {
            std::visit([&](const auto& H) { separable_pipeline(session, H); }, read_hopf_file(file, field));
        } else if (*dbl) {
            std::visit([&](const auto& H) { double_pipeline(session, H, output); }, read_hopf_file(file, field));
        } else if (*dual) {
            std::visit([&](const auto& H) { dual_pipeline(session, H, output); }, read_hopf_file(file, field));
        } else if (*sub) {
            const AnyHopf K = read_hopf_file(second, field);
            const AnyMatrix iota = read_matrix_file(iota_path, field);
            std::vector<AnyModule> extra;
            for (const std::string& m : modules) extra.push_back(read_module_file(m, field));
            std::visit(
                [&](const auto& H) {
                    using HA = std::decay_t<decltype(H)>;
                    using S = typename HA::Scalar;
                    SubalgebraEmbedding<S> emb{same_field<HA>(K, H.field(), "K"), H, {}};
                    const Mat<S>* M = std::get_if<Mat<S>>(&iota);
                    if (!M) throw std::invalid_argument("embedding matrix is over a different field");
                    emb.iota = *M;
                    std::vector<RightModule<S>> ms;
                    for (const AnyModule& a : extra) {
                        const RightModule<S>* m = std::get_if<RightModule<S>>(&a);
                        if (!m) throw std::invalid_argument("module is over a different field");
                        ms.push_back(*m);
                    }
                    subcheck_pipeline(session, emb, ms);
                },
                read_hopf_file(file, field));
        } else if (*ded) {
            dedekind_demo(session, seed);
        } else if (*list) {
            for (const CatalogEntry& e : catalog()) out << e.name << "\t" << e.description << "\n";
        } else if (*emit) {
            auto entry = catalog_entry(name);
            if (!entry) throw std::invalid_argument("unknown catalog entry '" + name + "'");
            if (output.empty()) write_hopf(out, entry->hopf);
            else write_hopf_file(output, entry->hopf);
        }
        return finish(session.exit_code(), "");
    } catch (const TheoremViolation& e) {
        err << "theorem violation: " << e.what() << "\n";
        return finish(check_failed, e.what());
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        try {
            return finish(invalid_input, e.what());
        } catch (const std::exception&) {
            return invalid_input;
        }
    }
}

}  // namespace fhopf::cli
