// k3rm: exact constructions for K3 transcendental lattices with real
// multiplication and their Kuga-Satake invariants.
//
// Every subcommand prints one JSON document to stdout. Exit codes: 0 on
// success, 2 on domain errors (JSON with an "error" key), 1 on usage
// errors. Reports echo their input; byte-identical output for identical
// input and seed.

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "k3rm/json_io.hpp"
#include "k3rm/k3rm.hpp"

using k3rm::io::json;
using namespace k3rm;

namespace {

constexpr std::uint64_t kDefaultSeed = 0x6b33726dULL; // "k3rm"

// Inline JSON when the argument starts with '{' or '[', a file path otherwise.
json load_json_arg(const std::string& arg) {
    std::string s = arg;
    size_t first = s.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && (s[first] == '{' || s[first] == '[')) {
        try {
            return json::parse(s);
        } catch (const json::parse_error& e) {
            fail(errc::bad_input, std::string("invalid JSON argument: ") + e.what());
        }
    }
    std::ifstream in(arg);
    if (!in) fail(errc::bad_input, "cannot open '" + arg + "'");
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        fail(errc::bad_input, "invalid JSON in '" + arg + "': " + e.what());
    }
}

// "-a=-3/5" keeps the '=' with short options; accept that spelling
std::string strip_eq(const std::string& s) { return (!s.empty() && s[0] == '=') ? s.substr(1) : s; }

std::vector<std::string> split_commas(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    std::stringstream ss(s);
    while (std::getline(ss, cur, ',')) out.push_back(cur);
    if (out.empty()) fail(errc::bad_input, "empty list argument");
    return out;
}

// --field FILE|JSON takes precedence over --minpoly STRING.
std::optional<NumberField> resolve_field(const std::string& field_arg, const std::string& minpoly_arg) {
    if (!field_arg.empty()) return io::parse_field(load_json_arg(field_arg));
    if (!minpoly_arg.empty()) return NumberField::make(io::parse_poly_string(minpoly_arg));
    return std::nullopt;
}

// --form FILE|JSON, or --diagonal over the resolved field (the rationals
// when no field was given).
KQuadraticForm resolve_form(const std::optional<NumberField>& field, const std::string& form_arg,
                            const std::string& diagonal_arg) {
    if (!form_arg.empty()) {
        json j = load_json_arg(form_arg);
        KQuadraticForm q = io::parse_form(j, field ? &*field : nullptr);
        if (field && j.contains("field") && !(q.field == *field))
            fail(errc::bad_input, "--field and the form descriptor disagree");
        return q;
    }
    if (diagonal_arg.empty()) fail(errc::bad_input, "need --form or --diagonal");
    NumberField f = field ? *field : NumberField::make(QPoly({Rat(0), Rat(1)}));
    std::vector<FieldElement> entries;
    for (const auto& piece : split_commas(diagonal_arg)) entries.push_back(io::parse_element_string(f, piece));
    return diagonal_form(f, entries);
}

json lattice_analysis(const Mat& g, const KQuadraticForm* source, bool doubled) {
    LatticeSummary s = summarize_lattice(g, doubled ? nullptr : source);
    json r;
    r["gram"] = io::mat_json(s.gram);
    r["det"] = io::rat_str(s.det);
    r["integral"] = s.integral;
    r["even"] = s.even;
    auto sig = signature_of_gram(s.gram);
    r["signature"] = json::array({sig.first, sig.second});
    r["elementary_divisors"] = io::ints_json(s.elementary_divisors);
    r["disc_form_values"] = json(nullptr);
    if (s.integral && s.even && s.det != 0) r["disc_form_values"] = io::rats_json(discriminant_group(g).q_values);
    r["embeddability"] = s.embeddability ? io::embeddability_json(*s.embeddability) : json(nullptr);
    r["lemma_check"] = (!doubled && s.disc) ? io::disc_check_json(*s.disc) : json(nullptr);
    return r;
}

// ---------------------------------------------------------------- selftest

struct Rng {
    std::mt19937_64 g;
    explicit Rng(std::uint64_t seed) : g(seed) {}
    long pick(long lo, long hi) { return lo + static_cast<long>(g() % static_cast<std::uint64_t>(hi - lo + 1)); }
    Rat rat() { return Rat(pick(-9, 9), pick(1, 9)); }
    Rat nonzero_rat() {
        Rat r = rat();
        return r == 0 ? Rat(1) : r;
    }
    FieldElement element(const NumberField& f) {
        std::vector<Rat> c;
        for (int i = 0; i < f.degree(); ++i) c.push_back(rat());
        return f.element(c);
    }
    FieldElement nonzero_element(const NumberField& f) {
        for (int tries = 0; tries < 64; ++tries) {
            FieldElement e = element(f);
            if (!f.is_zero(e)) return e;
        }
        return f.one();
    }
};

// coordinates of a K-vector in the power-basis Z-module underlying Cor
std::vector<Rat> stack_coords(const NumberField& f, const std::vector<FieldElement>& v) {
    std::vector<Rat> x;
    for (const auto& e : v)
        for (int j = 0; j < f.degree(); ++j) x.push_back(e.coords[static_cast<size_t>(j)]);
    return x;
}

Rat bilinear(const Mat& g, const std::vector<Rat>& x, const std::vector<Rat>& y) {
    Rat acc(0);
    for (size_t i = 0; i < g.size(); ++i)
        for (size_t j = 0; j < g.size(); ++j) acc += x[i] * g[i][j] * y[j];
    return acc;
}

struct Check {
    std::string name;
    bool ok = false;
    std::string detail;
};

void run_check(std::vector<Check>& out, const std::string& name, const std::function<void()>& body) {
    Check c{name, true, ""};
    try {
        body();
    } catch (const std::exception& e) {
        c.ok = false;
        c.detail = e.what();
    }
    out.push_back(std::move(c));
}

void expect(bool cond, const std::string& what) {
    if (!cond) fail(errc::bad_input, "check failed: " + what);
}

std::vector<Check> selftest_paper_identities(std::uint64_t seed) {
    std::vector<Check> checks;

    run_check(checks, "number-fields", [&] {
        NumberField f = NumberField::make(io::parse_poly_string("x^2-2"));
        expect(f.degree() == 2 && f.disc_order() == 8, "Q(sqrt 2) basics");
        bool threw = false;
        try {
            NumberField::make(io::parse_poly_string("x^2+1"));
        } catch (const error& e) {
            threw = e.kind() == errc::not_totally_real;
        }
        expect(threw, "x^2+1 rejected");
        threw = false;
        try {
            NumberField::make(io::parse_poly_string("x^2-4"));
        } catch (const error& e) {
            threw = e.kind() == errc::reducible;
        }
        expect(threw, "x^2-4 rejected");
        FieldElement u = io::parse_element_string(f, "a-1");
        expect(f.trace(f.gen()) == 0 && f.trace(f.one()) == 2, "traces");
        expect(f.norm(u) == Rat(-1), "norm of sqrt2 - 1");
        expect(f.mul(u, f.invert(u)) == f.one(), "inverse");
    });

    run_check(checks, "corestrict-rank-1", [&] {
        NumberField f = NumberField::make(io::parse_poly_string("x^2-2"));
        KQuadraticForm q = diagonal_form(f, {f.one()});
        Mat g = corestrict(q);
        Mat want = {{Rat(2), Rat(0)}, {Rat(0), Rat(4)}};
        expect(g == want, "Cor<1> over Q(sqrt 2) is diag(2,4)");
    });

    run_check(checks, "disc-lemma", [&] {
        NumberField f = NumberField::make(io::parse_poly_string("x^2-2"));
        FieldElement u = io::parse_element_string(f, "a-1");
        KQuadraticForm q = diagonal_form(f, {u, u, f.from_rational(Rat(-1))});
        Mat g = corestrict(q);
        DiscCheck c = disc_check(q, g);
        expect(c.match_lemma && c.det_abs == 512, "lemma exponent on the worked form");
        expect(c.predicted_thm_main && *c.predicted_thm_main == 64, "exponent-2 value reported");
        Rng rng(seed);
        for (const auto& fld : catalog_fields()) {
            if (fld.degree() > 3) continue;
            for (int n = 1; n <= 2; ++n) {
                std::vector<FieldElement> entries;
                for (int i = 0; i < n; ++i) entries.push_back(rng.nonzero_element(fld));
                KQuadraticForm r = diagonal_form(fld, entries);
                expect(disc_check(r, corestrict(r)).match_lemma, "lemma on a random form");
            }
        }
    });

    run_check(checks, "trace-identity", [&] {
        Rng rng(seed + 1);
        for (const auto& f : catalog_fields()) {
            const int n = 2;
            std::vector<FieldElement> entries{rng.nonzero_element(f), rng.nonzero_element(f)};
            KQuadraticForm q = diagonal_form(f, entries);
            Mat g = corestrict(q);
            for (int trial = 0; trial < 20; ++trial) {
                FieldElement k = rng.element(f);
                std::vector<FieldElement> v{rng.element(f), rng.element(f)};
                std::vector<FieldElement> w{rng.element(f), rng.element(f)};
                Mat m = multiplication_operator(f, n, k);
                Rat lhs = bilinear(g, mat_apply(m, stack_coords(f, v)), stack_coords(f, w));
                FieldElement qvw = f.zero();
                for (int i = 0; i < n; ++i)
                    for (int j = 0; j < n; ++j)
                        qvw = f.add(qvw, f.mul(q.gram[static_cast<size_t>(i)][static_cast<size_t>(j)],
                                               f.mul(v[static_cast<size_t>(i)], w[static_cast<size_t>(j)])));
                Rat rhs = f.trace(f.mul(k, qvw));
                expect(lhs == rhs, "G(M_k v, w) = Tr(k Q(v,w))");
            }
        }
    });

    run_check(checks, "hilbert-symbols", [&] {
        expect(hilbert_q(Rat(1), Rat(7), PlaceQ::infinity()) == 1, "(1,7)_inf");
        expect(hilbert_q(Rat(-1), Rat(-1), PlaceQ::infinity()) == -1, "(-1,-1)_inf");
        expect(hilbert_q(Rat(-1), Rat(-1), PlaceQ::prime(Int(2))) == -1, "(-1,-1)_2");
        BrauerClass ram = ramification_q(Rat(-1), Rat(-1));
        expect(ram.infinite && ram.primes == std::set<Int>{Int(2)}, "ram(-1,-1) = {2, inf}");
        Rng rng(seed + 2);
        for (int trial = 0; trial < 20; ++trial) {
            Rat a = rng.nonzero_rat(), b = rng.nonzero_rat();
            expect(ramification_q(a, b).size() % 2 == 0, "product formula (even ramification)");
        }
    });

    run_check(checks, "corestriction-class", [&] {
        NumberField f = NumberField::make(io::parse_poly_string("x^2-2"));
        FieldElement u = io::parse_element_string(f, "a-1");
        QuaternionAlgebra b = make_quaternion(f, u, u);
        BrauerClass c = corestriction_class(b);
        expect(c.infinite && c.primes == std::set<Int>{Int(2)}, "Cor class {2, inf}");
        QuaternionAlgebra rep = quaternion_from_class(c);
        expect(rep.base.degree() == 1, "representative over Q");
        expect(rep.alpha.coords[0] == Rat(-1) && rep.beta.coords[0] == Rat(-1), "representative (-1,-1)");
    });

    run_check(checks, "clifford", [&] {
        NumberField q0 = NumberField::make(QPoly({Rat(0), Rat(1)}));
        KQuadraticForm ones =
            diagonal_form(q0, {q0.one(), q0.one(), q0.one()});
        QuaternionAlgebra b = even_clifford_ternary(ones);
        expect(b.alpha.coords[0] == Rat(-1) && b.beta.coords[0] == Rat(-1), "C0<1,1,1> = (-1,-1)");
        BrauerClass ram = ramification_q(b);
        expect(ram.infinite && ram.primes == std::set<Int>{Int(2)}, "Hamilton ramifies at {2, inf}");
        KQuadraticForm d4 = diagonal_form(
            q0, {q0.one(), q0.one(), q0.one(), q0.from_rational(Rat(2))});
        EvenCliffordQuaternary e = even_clifford_quaternary(d4);
        expect(e.center_radicand == 2, "center Q(sqrt 2)");
        expect(e.algebra.alpha == e.center.from_rational(Rat(-1)) &&
                   e.algebra.beta == e.center.from_rational(Rat(-1)),
               "closed form (-d1 d2, -d1 d3)");
    });

    run_check(checks, "representations", [&] {
        for (int d = 2; d <= 6; ++d) {
            KsRepReport r = ks_representation_report(d);
            expect(r.parity_ok, "trivial-multiplicity parity");
            expect(r.lemma_identity, "wedge2(W+W) = 3 wedge2 W + Sym2 W");
            expect(r.ts_dim == 3 * d, "T(S) dimension 3d");
        }
        HodgeNumbers h = hodge_numbers(wedge2(irr_char(std::vector<int>{1, 1})), 2);
        expect(h.values == std::vector<Int>{Int(1), Int(4), Int(1)}, "wedge2 W11 is (1,4,1)");
        HodgeNumbers w22 = hodge_numbers(irr_char(std::vector<int>{2, 2}), 2);
        expect(w22.values == std::vector<Int>{Int(3), Int(3), Int(3)}, "W22 is (3,3,3)");
    });

    run_check(checks, "dictionary", [&] {
        NumberField f = NumberField::make(io::parse_poly_string("x^2-2"));
        FieldElement u = io::parse_element_string(f, "a-1");
        KQuadraticForm q = diagonal_form(f, {u, u, f.from_rational(Rat(-1))});
        K3Report r = k3_to_fourfold(f, q);
        expect(r.ks.ks_dim == 4, "ks_dim 4");
        expect(r.ks.endo_label == "B_Cor" && r.ks.endo_rep &&
                   r.ks.endo_rep->first == Rat(-1) && r.ks.endo_rep->second == Rat(-1),
               "Hamilton endomorphisms");
        expect(r.t.gram.size() == 6, "rank 6");
        auto sig = signature_of_gram(r.t.gram);
        expect(sig == std::make_pair(2, 4), "signature (2,4)");
        expect(r.t.embeddability && r.t.embeddability->verdict == Embeddability::embeds, "Embeds");
    });

    return checks;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact K3/RM transcendental lattices and Kuga-Satake invariants"};
    app.set_version_flag("--version", K3RM_VERSION);
    app.require_subcommand(1);
    app.fallthrough(); // global options (--seed) may follow the subcommand

    std::uint64_t seed = kDefaultSeed;
    app.add_option("--seed", seed, "seed for randomized drivers")->capture_default_str();

    // shared option storage
    std::string field_arg, minpoly_arg, form_arg, diagonal_arg, gram_arg;
    std::string a_arg, b_arg, v_arg, alpha_arg, beta_arg, weight_arg, op_arg = "report", suite_arg = "paper-identities";
    bool catalog_flag = false, double_flag = false, even_flag = false, table_flag = false;
    int rep_d = 2;

    auto add_field_opts = [&](CLI::App* sub) {
        sub->add_option("--field", field_arg, "field descriptor (file or inline JSON)");
        sub->add_option("--minpoly", minpoly_arg, "minimal polynomial, e.g. \"x^2-2\"");
    };
    auto add_form_opts = [&](CLI::App* sub) {
        sub->add_option("--form", form_arg, "form descriptor (file or inline JSON)");
        sub->add_option("--diagonal", diagonal_arg,
                        "diagonal entries in the generator letter, e.g. \"a-1,a-1,-1\"");
    };

    CLI::App* c_field = app.add_subcommand("field", "validate a totally real field and report its invariants");
    add_field_opts(c_field);
    c_field->add_flag("--catalog", catalog_flag, "list the built-in field catalog");

    CLI::App* c_form = app.add_subcommand("form", "signatures and K3-type verdict of a K-quadratic form");
    add_field_opts(c_form);
    add_form_opts(c_form);

    CLI::App* c_cor = app.add_subcommand("corestrict", "corestricted Gram matrix and lattice invariants");
    add_field_opts(c_cor);
    add_form_opts(c_cor);
    c_cor->add_flag("--double", double_flag, "also analyze the doubled lattice");

    CLI::App* c_lat = app.add_subcommand("lattice", "invariants of a rational Gram matrix");
    c_lat->add_option("--gram", gram_arg, "Gram matrix (file or inline JSON)")->required();

    CLI::App* c_hil = app.add_subcommand("hilbert", "Hilbert symbol (a,b)_v over the rationals");
    c_hil->add_option("-a,--a", a_arg, "first entry (rational; use -a=-3/5 for negative fractions)")->required();
    c_hil->add_option("-b,--b", b_arg, "second entry (rational)")->required();
    c_hil->add_option("-v,--place", v_arg, "place: a prime or \"inf\"")->required();

    CLI::App* c_cc = app.add_subcommand("cor-class", "corestriction Brauer class of a quaternion algebra over K");
    add_field_opts(c_cc);
    c_cc->add_option("--alpha", alpha_arg, "first entry, e.g. \"a-1\"")->required();
    c_cc->add_option("--beta", beta_arg, "second entry")->required();

    CLI::App* c_cliff = app.add_subcommand("clifford", "Clifford algebra structure constants and even parts");
    add_field_opts(c_cliff);
    add_form_opts(c_cliff);
    c_cliff->add_flag("--even", even_flag, "compute the even Clifford algebra (rank 3 or 4)");
    c_cliff->add_flag("--table", table_flag, "include the sparse multiplication table");

    CLI::App* c_rep = app.add_subcommand("rep", "(SL2)^d character arithmetic and the Kuga-Satake report");
    c_rep->add_option("-d,--d", rep_d, "number of SL2 factors")->required();
    c_rep->add_option("--op", op_arg, "report | sym2 | wedge2")->capture_default_str();
    c_rep->add_option("--weight", weight_arg, "highest weight, e.g. \"1,1\" (default all ones)");

    CLI::App* c_dict = app.add_subcommand("dict", "the K3 / Kuga-Satake dictionary");
    c_dict->require_subcommand(1);
    CLI::App* c_k2a = c_dict->add_subcommand("k3-to-av", "K3-type form to Kuga-Satake descriptor and lattice");
    add_field_opts(c_k2a);
    add_form_opts(c_k2a);
    CLI::App* c_a2k = c_dict->add_subcommand("av-to-k3", "rank-4 rational form to the split quadric report");
    add_form_opts(c_a2k);

    CLI::App* c_self = app.add_subcommand("selftest", "run the built-in identity suite");
    c_self->add_option("--suite", suite_arg, "suite name (paper-identities)")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        json err;
        err["error"] = {{"code", "Usage"}, {"message", e.what()}};
        std::cout << err.dump(2) << "\n";
        std::cerr << app.help() << "\n";
        return 1;
    }

    json envelope;
    envelope["tool"] = "k3rm";
    envelope["version"] = K3RM_VERSION;
    envelope["seed"] = seed;
    int exit_code = 0;

    try {
        if (c_field->parsed()) {
            envelope["subcommand"] = "field";
            json input;
            if (!minpoly_arg.empty()) input["minpoly"] = minpoly_arg;
            if (!field_arg.empty()) input["field"] = field_arg;
            input["catalog"] = catalog_flag;
            envelope["input"] = input;
            json result;
            if (catalog_flag) {
                json cat = json::array();
                for (const auto& f : catalog_fields()) cat.push_back(io::field_json(f));
                result["catalog"] = cat;
            } else {
                auto f = resolve_field(field_arg, minpoly_arg);
                if (!f) fail(errc::bad_input, "need --minpoly, --field, or --catalog");
                result = io::field_json(*f);
            }
            envelope["result"] = result;
        } else if (c_form->parsed()) {
            envelope["subcommand"] = "form";
            auto f = resolve_field(field_arg, minpoly_arg);
            KQuadraticForm q = resolve_form(f, form_arg, diagonal_arg);
            envelope["input"] = io::form_json(q);
            json result;
            result["det"] = io::element_json(det_form(q));
            DiagonalizeResult diag = diagonalize(q);
            json d = json::array();
            for (const auto& e : diag.diag) d.push_back(io::element_json(e));
            result["diagonal"] = d;
            result["transform"] = io::kmat_json(diag.transform);
            result["signatures"] = io::signature_json(signatures(q));
            result["k3_type"] = is_k3_type(q);
            envelope["result"] = result;
        } else if (c_cor->parsed()) {
            envelope["subcommand"] = "corestrict";
            auto f = resolve_field(field_arg, minpoly_arg);
            KQuadraticForm q = resolve_form(f, form_arg, diagonal_arg);
            envelope["input"] = io::form_json(q);
            Mat g = corestrict(q);
            json result = lattice_analysis(g, &q, false);
            if (double_flag) {
                Mat g2 = g;
                for (auto& row : g2)
                    for (auto& x : row) x *= 2;
                result["doubled"] = lattice_analysis(g2, nullptr, true);
            }
            envelope["result"] = result;
        } else if (c_lat->parsed()) {
            envelope["subcommand"] = "lattice";
            Mat g = io::parse_mat(load_json_arg(gram_arg));
            for (size_t i = 0; i < g.size(); ++i)
                for (size_t j = 0; j < i; ++j)
                    if (g[i][j] != g[j][i]) fail(errc::not_symmetric, "Gram matrix must be symmetric");
            envelope["input"] = json{{"gram", io::mat_json(g)}};
            envelope["result"] = lattice_analysis(g, nullptr, true);
        } else if (c_hil->parsed()) {
            envelope["subcommand"] = "hilbert";
            Rat a = io::parse_rat(strip_eq(a_arg)), b = io::parse_rat(strip_eq(b_arg));
            envelope["input"] = json{{"a", io::rat_str(a)}, {"b", io::rat_str(b)}, {"v", strip_eq(v_arg)}};
            PlaceQ v = PlaceQ::infinity();
            std::string v_str = strip_eq(v_arg);
            if (v_str != "inf") {
                Rat pr = io::parse_rat(v_str);
                if (denominator(pr) != 1 || numerator(pr) < 2) fail(errc::bad_input, "place must be a prime or \"inf\"");
                Int p = numerator(pr);
                auto fac = factor_int(p);
                if (fac.size() != 1 || fac.begin()->second != 1) fail(errc::bad_input, p.str() + " is not prime");
                v = PlaceQ::prime(p);
            }
            json result;
            result["symbol"] = hilbert_q(a, b, v);
            result["ramification"] = io::brauer_json(ramification_q(a, b));
            envelope["result"] = result;
        } else if (c_cc->parsed()) {
            envelope["subcommand"] = "cor-class";
            auto f = resolve_field(field_arg, minpoly_arg);
            if (!f) fail(errc::bad_input, "need --field or --minpoly");
            FieldElement alpha = io::parse_element_string(*f, strip_eq(alpha_arg));
            FieldElement beta = io::parse_element_string(*f, strip_eq(beta_arg));
            QuaternionAlgebra bq = make_quaternion(*f, alpha, beta);
            envelope["input"] = io::quaternion_json(bq);
            BrauerClass c = corestriction_class(bq);
            QuaternionAlgebra rep = quaternion_from_class(c);
            json result;
            result["cor_class"] = io::brauer_json(c);
            result["representative"] =
                json{{"a", io::rat_str(rep.alpha.coords[0])}, {"b", io::rat_str(rep.beta.coords[0])}};
            result["split"] = c.empty();
            envelope["result"] = result;
        } else if (c_cliff->parsed()) {
            envelope["subcommand"] = "clifford";
            auto f = resolve_field(field_arg, minpoly_arg);
            KQuadraticForm q = resolve_form(f, form_arg, diagonal_arg);
            envelope["input"] = io::form_json(q);
            auto diag = detail::diagonal_entries(q);
            CliffordAlgebra c = make_clifford(q.field, diag);
            json result;
            result["n"] = c.n;
            result["dim"] = static_cast<unsigned>(c.dim());
            json d = json::array();
            for (const auto& e : diag) d.push_back(io::element_json(e));
            result["diagonal"] = d;
            if (table_flag) result["table"] = io::clifford_table_json(c);
            if (even_flag) {
                if (q.rank() == 3) {
                    QuaternionAlgebra b = even_clifford_ternary(q);
                    json even;
                    even["algebra"] = io::quaternion_json(b);
                    if (q.field.degree() == 1) even["ramification"] = io::brauer_json(ramification_q(b));
                    result["even_ternary"] = even;
                } else if (q.rank() == 4) {
                    result["even_quaternary"] = io::even_quaternary_json(even_clifford_quaternary(q));
                } else {
                    fail(errc::bad_input, "--even needs a rank 3 or 4 form");
                }
            }
            envelope["result"] = result;
        } else if (c_rep->parsed()) {
            envelope["subcommand"] = "rep";
            envelope["input"] = json{{"d", rep_d}, {"op", op_arg}};
            json result;
            if (op_arg == "report") {
                KsRepReport r = ks_representation_report(rep_d);
                result = io::ks_rep_report_json(r);
                Character ts{rep_d, {}};
                for (int i = 0; i < rep_d; ++i) {
                    std::vector<int> w(static_cast<size_t>(rep_d), 0);
                    w[static_cast<size_t>(i)] = 2;
                    ts = char_add(ts, irr_char(w));
                }
                result["ts_hodge"] = io::hodge_json(hodge_numbers(ts, 2));
            } else if (op_arg == "sym2" || op_arg == "wedge2") {
                std::vector<int> w(static_cast<size_t>(rep_d), 1);
                if (!weight_arg.empty()) {
                    w.clear();
                    for (const auto& piece : split_commas(weight_arg)) {
                        Rat r = io::parse_rat(piece);
                        if (denominator(r) != 1 || numerator(r) < 0)
                            fail(errc::bad_input, "weights are nonnegative integers");
                        w.push_back(static_cast<int>(numerator(r).convert_to<long long>()));
                    }
                }
                envelope["input"]["weight"] = io::weight_key(w);
                Character cw = irr_char(w);
                Character out = (op_arg == "sym2") ? sym2(cw) : wedge2(cw);
                result["dim"] = char_dim(out).str();
                result["decomposition"] = io::decomposition_json(decompose(out));
                try {
                    result["hodge"] = io::hodge_json(hodge_numbers(out, 2));
                } catch (const error&) {
                    result["hodge"] = json(nullptr);
                }
            } else {
                fail(errc::bad_input, "--op must be report, sym2, or wedge2");
            }
            envelope["result"] = result;
        } else if (c_dict->parsed()) {
            envelope["subcommand"] = "dict";
            if (c_k2a->parsed()) {
                envelope["subcommand"] = "dict k3-to-av";
                auto f = resolve_field(field_arg, minpoly_arg);
                KQuadraticForm q = resolve_form(f, form_arg, diagonal_arg);
                envelope["input"] = io::form_json(q);
                K3Report r = k3_to_fourfold(q.field, q);
                envelope["result"] = io::k3_report_json(r);
            } else {
                envelope["subcommand"] = "dict av-to-k3";
                auto f = resolve_field(field_arg, minpoly_arg);
                KQuadraticForm q = resolve_form(f, form_arg, diagonal_arg);
                envelope["input"] = io::form_json(q);
                FourfoldReport r = fourfold_to_k3(q);
                envelope["result"] = io::fourfold_report_json(r);
            }
        } else if (c_self->parsed()) {
            envelope["subcommand"] = "selftest";
            envelope["input"] = json{{"suite", suite_arg}};
            if (suite_arg != "paper-identities") fail(errc::bad_input, "unknown suite '" + suite_arg + "'");
            auto checks = selftest_paper_identities(seed);
            json arr = json::array();
            bool all_ok = true;
            for (const auto& c : checks) {
                json jc;
                jc["name"] = c.name;
                jc["ok"] = c.ok;
                if (!c.ok) jc["detail"] = c.detail;
                all_ok = all_ok && c.ok;
                arr.push_back(jc);
            }
            envelope["result"] = json{{"checks", arr}, {"ok", all_ok}};
            if (!all_ok) {
                envelope["error"] = json{{"code", "SelftestFailed"}, {"message", "one or more checks failed"}};
                exit_code = 2;
            }
        }
    } catch (const error& e) {
        envelope["error"] = json{{"code", e.kind_name()}, {"message", e.what()}};
        exit_code = 2;
    } catch (const std::exception& e) {
        envelope["error"] = json{{"code", "Internal"}, {"message", e.what()}};
        exit_code = 2;
    }

    std::cout << envelope.dump(2) << "\n";
    return exit_code;
}
