#pragma once

// JSON encoding of every report type, and the input grammars: field
// descriptors {"minpoly": ["-2","0","1"]}, form descriptors
// {"field": ..., "gram": [[[c0,c1,...], ...]]}, and the human polynomial
// string form "x^2-2" (integer coefficients, one variable, caret powers).
// Rationals serialize as "p/q" strings, big integers as decimal strings,
// ramification sets as sorted lists with "inf" last.
//
// Needs the vendored single-header nlohmann json on the include path.

#include <json.hpp>

#include <cctype>
#include <optional>
#include <string>
#include <vector>

#include "k3rm/characters.hpp"
#include "k3rm/clifford.hpp"
#include "k3rm/corestriction.hpp"
#include "k3rm/dictionary.hpp"
#include "k3rm/errors.hpp"
#include "k3rm/number_field.hpp"
#include "k3rm/quadratic_form.hpp"
#include "k3rm/quaternion.hpp"
#include "k3rm/rational.hpp"

namespace k3rm {
namespace io {

using nlohmann::json;

// ---------------------------------------------------------------- scalars

inline std::string rat_str(const Rat& r) {
    Int num = numerator(r), den = denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

inline Rat parse_rat(const std::string& s) {
    size_t i = 0, n = s.size();
    auto digits = [&]() -> std::string {
        size_t start = i;
        while (i < n && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == start) fail(errc::bad_input, "not a rational: '" + s + "'");
        return s.substr(start, i - start);
    };
    int sign = 1;
    if (i < n && (s[i] == '+' || s[i] == '-')) {
        if (s[i] == '-') sign = -1;
        ++i;
    }
    Int num(digits());
    Int den(1);
    if (i < n && s[i] == '/') {
        ++i;
        den = Int(digits());
    }
    if (i != n) fail(errc::bad_input, "not a rational: '" + s + "'");
    if (den == 0) fail(errc::bad_input, "zero denominator: '" + s + "'");
    return Rat(sign * num, den);
}

inline Rat rat_from_json(const json& j) {
    if (j.is_string()) return parse_rat(j.get<std::string>());
    if (j.is_number_integer()) return Rat(j.get<long long>());
    fail(errc::bad_input, "expected a rational as a \"p/q\" string");
}

inline json rats_json(const std::vector<Rat>& v) {
    json a = json::array();
    for (const auto& r : v) a.push_back(rat_str(r));
    return a;
}

inline json ints_json(const std::vector<Int>& v) {
    json a = json::array();
    for (const auto& z : v) a.push_back(z.str());
    return a;
}

inline json mat_json(const Mat& g) {
    json a = json::array();
    for (const auto& row : g) a.push_back(rats_json(row));
    return a;
}

inline Mat parse_mat(const json& j) {
    if (!j.is_array() || j.empty()) fail(errc::bad_input, "expected a matrix as an array of rows");
    Mat g;
    for (const auto& row : j) {
        if (!row.is_array()) fail(errc::bad_input, "expected a matrix row as an array");
        std::vector<Rat> r;
        for (const auto& e : row) r.push_back(rat_from_json(e));
        g.push_back(std::move(r));
    }
    for (const auto& row : g)
        if (row.size() != g.size()) fail(errc::bad_input, "matrix is not square");
    return g;
}

// ------------------------------------------------- polynomial string form

namespace detail {

struct PolyTerm {
    Rat coeff;
    int exp = 0;
};

// "x^2-2", "2*x^3 - x + 1": signed integer coefficients, one variable
// letter, caret powers. Returns the term list; var_out reports the letter.
inline std::vector<PolyTerm> parse_poly_terms(const std::string& s, char& var_out) {
    std::vector<PolyTerm> terms;
    char var = 0;
    size_t i = 0, n = s.size();
    auto skip_ws = [&]() {
        while (i < n && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    };
    auto read_int = [&]() -> Int {
        size_t start = i;
        while (i < n && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == start) fail(errc::bad_input, "expected an integer in polynomial '" + s + "'");
        return Int(s.substr(start, i - start));
    };
    skip_ws();
    if (i == n) fail(errc::bad_input, "empty polynomial");
    bool first = true;
    while (i < n) {
        int sign = 1;
        skip_ws();
        if (i < n && (s[i] == '+' || s[i] == '-')) {
            sign = (s[i] == '-') ? -1 : 1;
            ++i;
        } else if (!first) {
            fail(errc::bad_input, "expected '+' or '-' in polynomial '" + s + "'");
        }
        skip_ws();
        if (i >= n) fail(errc::bad_input, "dangling sign in polynomial '" + s + "'");
        PolyTerm t{Rat(sign), 0};
        bool have_coeff = false;
        if (std::isdigit(static_cast<unsigned char>(s[i]))) {
            Int num = read_int();
            Int den(1);
            if (i < n && s[i] == '/') {
                ++i;
                den = read_int();
                if (den == 0) fail(errc::bad_input, "zero denominator in '" + s + "'");
            }
            t.coeff *= Rat(num, den);
            have_coeff = true;
            skip_ws();
            if (i < n && s[i] == '*') {
                ++i;
                skip_ws();
                if (i >= n || !std::isalpha(static_cast<unsigned char>(s[i])))
                    fail(errc::bad_input, "expected a variable after '*' in '" + s + "'");
            }
        }
        if (i < n && std::isalpha(static_cast<unsigned char>(s[i]))) {
            char c = s[i];
            if (var == 0) var = c;
            if (c != var) fail(errc::bad_input, std::string("two variables '") + var + "', '" + c + "' in '" + s + "'");
            ++i;
            t.exp = 1;
            skip_ws();
            if (i < n && s[i] == '^') {
                ++i;
                skip_ws();
                Int e = read_int();
                if (e > 64) fail(errc::bad_input, "exponent too large in '" + s + "'");
                t.exp = static_cast<int>(e);
            }
        } else if (!have_coeff) {
            fail(errc::bad_input, "expected a term in polynomial '" + s + "'");
        }
        terms.push_back(t);
        first = false;
        skip_ws();
    }
    var_out = var;
    return terms;
}

} // namespace detail

inline QPoly parse_poly_string(const std::string& s) {
    char var = 0;
    auto terms = detail::parse_poly_terms(s, var);
    int deg = 0;
    for (const auto& t : terms) deg = std::max(deg, t.exp);
    std::vector<Rat> c(static_cast<size_t>(deg) + 1, Rat(0));
    for (const auto& t : terms) c[static_cast<size_t>(t.exp)] += t.coeff;
    return QPoly(c);
}

// Element of f written in the generator letter, e.g. "a-1" or "2*a^2+a".
// Powers at or above the degree reduce through field arithmetic.
inline FieldElement parse_element_string(const NumberField& f, const std::string& s) {
    char var = 0;
    auto terms = detail::parse_poly_terms(s, var);
    FieldElement acc = f.zero();
    for (const auto& t : terms) {
        FieldElement m = f.pow(f.gen(), t.exp);
        acc = f.add(acc, f.mul(f.from_rational(t.coeff), m));
    }
    return acc;
}

// ------------------------------------------------------------ field, form

inline json field_json(const NumberField& f) {
    json j;
    std::vector<Rat> c;
    for (int i = 0; i <= f.degree(); ++i) c.push_back(f.minpoly().coeff(i));
    j["minpoly"] = rats_json(c);
    j["degree"] = f.degree();
    j["disc_order"] = f.disc_order().str();
    if (f.degree() == 2) j["disc_maximal"] = f.disc_maximal().str();
    json roots = json::array();
    for (const auto& I : f.roots()) roots.push_back(json::array({rat_str(I.lo), rat_str(I.hi)}));
    j["roots"] = roots;
    return j;
}

inline NumberField parse_field(const json& j) {
    if (j.is_string()) return NumberField::make(parse_poly_string(j.get<std::string>()));
    if (!j.is_object() || !j.contains("minpoly"))
        fail(errc::bad_input, "field descriptor needs a \"minpoly\" key");
    const json& mp = j["minpoly"];
    if (mp.is_string()) return NumberField::make(parse_poly_string(mp.get<std::string>()));
    if (!mp.is_array() || mp.empty())
        fail(errc::bad_input, "\"minpoly\" must be a string or a coefficient array");
    std::vector<Rat> c;
    for (const auto& e : mp) c.push_back(rat_from_json(e));
    return NumberField::make(QPoly(c));
}

inline json element_json(const FieldElement& x) { return rats_json(x.coords); }

inline FieldElement parse_element(const NumberField& f, const json& j) {
    if (j.is_string()) {
        const std::string s = j.get<std::string>();
        // bare rationals like "3/2" take the scalar path; anything with a
        // letter goes through the generator grammar
        bool has_alpha = false;
        for (char c : s)
            if (std::isalpha(static_cast<unsigned char>(c))) has_alpha = true;
        if (!has_alpha) return f.from_rational(parse_rat(s));
        return parse_element_string(f, s);
    }
    if (j.is_number_integer()) return f.from_rational(Rat(j.get<long long>()));
    if (j.is_array()) {
        std::vector<Rat> c;
        for (const auto& e : j) c.push_back(rat_from_json(e));
        if (static_cast<int>(c.size()) > f.degree())
            fail(errc::bad_input, "coordinate vector longer than the field degree");
        c.resize(static_cast<size_t>(f.degree()), Rat(0));
        return f.element(c);
    }
    fail(errc::bad_input, "expected a field element (string or coordinate array)");
}

inline json kmat_json(const KMat& m) {
    json rows = json::array();
    for (const auto& row : m) {
        json r = json::array();
        for (const auto& e : row) r.push_back(element_json(e));
        rows.push_back(r);
    }
    return rows;
}

inline json form_json(const KQuadraticForm& q) {
    json j;
    j["field"] = field_json(q.field);
    j["gram"] = kmat_json(q.gram);
    return j;
}

// Accepts {"field": ..., "gram": [[[...]]]} or {"field": ..., "diagonal": [...]}.
// The field key may be omitted when a default is supplied.
inline KQuadraticForm parse_form(const json& j, const NumberField* default_field = nullptr) {
    if (!j.is_object()) fail(errc::bad_input, "form descriptor must be an object");
    NumberField f = j.contains("field")      ? parse_field(j["field"])
                    : default_field != nullptr ? *default_field
                                               : NumberField::make(QPoly({Rat(0), Rat(1)}));
    if (j.contains("diagonal")) {
        const json& d = j["diagonal"];
        if (!d.is_array() || d.empty()) fail(errc::bad_input, "\"diagonal\" must be a nonempty array");
        std::vector<FieldElement> entries;
        for (const auto& e : d) entries.push_back(parse_element(f, e));
        return diagonal_form(f, entries);
    }
    if (!j.contains("gram")) fail(errc::bad_input, "form descriptor needs \"gram\" or \"diagonal\"");
    const json& g = j["gram"];
    if (!g.is_array() || g.empty()) fail(errc::bad_input, "\"gram\" must be a nonempty array of rows");
    KMat m;
    for (const auto& row : g) {
        if (!row.is_array() || row.size() != g.size())
            fail(errc::bad_input, "\"gram\" must be square");
        std::vector<FieldElement> r;
        for (const auto& e : row) r.push_back(parse_element(f, e));
        m.push_back(std::move(r));
    }
    return make_form(f, m);
}

// -------------------------------------------------------------- lattices

inline json signature_json(const SignatureVector& sigs) {
    json a = json::array();
    for (const auto& s : sigs) a.push_back(json::array({s.first, s.second}));
    return a;
}

inline json disc_check_json(const DiscCheck& c) {
    json j;
    j["det_abs"] = rat_str(c.det_abs);
    j["predicted_lemma"] = rat_str(c.predicted_lemma);
    j["predicted_thm_main"] = c.predicted_thm_main ? json(rat_str(*c.predicted_thm_main)) : json(nullptr);
    j["match_lemma"] = c.match_lemma;
    return j;
}

inline json disc_group_json(const DiscriminantGroup& g) {
    json j;
    j["divisors"] = ints_json(g.divisors);
    json gens = json::array();
    for (const auto& v : g.generators) gens.push_back(rats_json(v));
    j["generators"] = gens;
    j["even"] = g.even;
    j["q_values"] = rats_json(g.q_values);
    j["pairings"] = mat_json(g.pairings);
    return j;
}

inline json embeddability_json(const EmbeddabilityReport& r) {
    json j;
    j["verdict"] = embeddability_name(r.verdict);
    j["rank"] = r.rank;
    j["ell"] = r.ell;
    j["signature"] = json::array({r.signature.first, r.signature.second});
    j["reasons"] = r.reasons;
    return j;
}

inline json lattice_summary_json(const LatticeSummary& s) {
    json j;
    j["gram"] = mat_json(s.gram);
    j["det"] = rat_str(s.det);
    j["integral"] = s.integral;
    j["even"] = s.even;
    auto sig = signature_of_gram(s.gram);
    j["signature"] = json::array({sig.first, sig.second});
    j["disc_check"] = s.disc ? disc_check_json(*s.disc) : json(nullptr);
    j["elementary_divisors"] = ints_json(s.elementary_divisors);
    j["embeddability"] = s.embeddability ? embeddability_json(*s.embeddability) : json(nullptr);
    return j;
}

// ------------------------------------------------------------ quaternions

inline json brauer_json(const BrauerClass& c) {
    json a = json::array();
    for (const auto& p : c.primes) a.push_back(p.str());
    if (c.infinite) a.push_back("inf");
    return a;
}

inline json quaternion_json(const QuaternionAlgebra& b) {
    json j;
    j["field"] = field_json(b.base);
    j["alpha"] = element_json(b.alpha);
    j["beta"] = element_json(b.beta);
    return j;
}

inline json ks_descriptor_json(const KsDescriptor& k) {
    json j;
    j["d"] = k.d;
    j["ks_dim"] = k.ks_dim.str();
    j["cor_class"] = brauer_json(k.cor_class);
    j["endo_label"] = k.endo_label;
    j["endo_rep"] = k.endo_rep
                        ? json(json::array({rat_str(k.endo_rep->first), rat_str(k.endo_rep->second)}))
                        : json(nullptr);
    j["definite"] = k.definite;
    return j;
}

// --------------------------------------------------------------- clifford

inline json clifford_table_json(const CliffordAlgebra& c) {
    json entries = json::array();
    for (size_t s = 0; s < c.dim(); ++s)
        for (size_t t = 0; t < c.dim(); ++t) {
            const auto& cell = c.table[s][t];
            if (c.field.is_zero(cell.coeff)) continue;
            entries.push_back(json::array(
                {static_cast<unsigned>(s), static_cast<unsigned>(t), element_json(cell.coeff), cell.mask}));
        }
    return entries;
}

inline json even_quaternary_json(const EvenCliffordQuaternary& e) {
    json j;
    j["center_radicand"] = e.center_radicand.str();
    j["center"] = field_json(e.center);
    j["algebra"] = quaternion_json(e.algebra);
    return j;
}

inline json split_quadric_json(const SplitQuadricReport& r) {
    json j;
    json diag = json::array();
    for (const auto& e : r.diagonalization.diag) diag.push_back(element_json(e));
    j["diagonal"] = diag;
    j["transform"] = kmat_json(r.diagonalization.transform);
    j["center_radicand"] = r.center_radicand.str();
    j["center"] = field_json(r.center);
    j["algebra"] = quaternion_json(r.algebra);
    j["conic"] = form_json(r.conic);
    j["conic_conjugate"] = form_json(r.conic_conjugate);
    j["real_points"] = json::array({json::array({r.real_points[0][0], r.real_points[0][1]}),
                                    json::array({r.real_points[1][0], r.real_points[1][1]})});
    j["k3_type"] = r.k3_type;
    return j;
}

// ----------------------------------------------------------------- repwt

inline std::string weight_key(const Weight& w) {
    std::string s = "(";
    for (size_t i = 0; i < w.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(w[i]);
    }
    return s + ")";
}

inline json decomposition_json(const IrrDecomposition& d) {
    json j = json::object();
    for (const auto& [w, m] : d.mults) j[weight_key(w)] = m.convert_to<long long>();
    return j;
}

inline json character_json(const Character& c) {
    json j = json::object();
    for (const auto& [w, m] : c.weights) j[weight_key(w)] = m.convert_to<long long>();
    return j;
}

inline json hodge_json(const HodgeNumbers& h) {
    json a = json::array();
    for (const auto& v : h.values) a.push_back(v.convert_to<long long>());
    return a;
}

inline json ks_rep_report_json(const KsRepReport& r) {
    json j;
    j["d"] = r.d;
    j["dim_h1"] = r.dim_h1.str();
    j["sym2_two_copies"] = decomposition_json(r.sym2_two_copies);
    j["wedge2_two_copies"] = decomposition_json(r.wedge2_two_copies);
    j["sym2_two_trivial"] = r.sym2_two_trivial.convert_to<long long>();
    j["wedge2_two_trivial"] = r.wedge2_two_trivial.convert_to<long long>();
    j["sym2_one_trivial"] = r.sym2_one_trivial.convert_to<long long>();
    j["wedge2_one_trivial"] = r.wedge2_one_trivial.convert_to<long long>();
    j["parity_ok"] = r.parity_ok;
    j["lemma_identity"] = r.lemma_identity;
    json ts = json::array();
    for (const auto& w : r.ts_summands) ts.push_back(weight_key(w));
    j["ts_summands"] = ts;
    j["ts_dim"] = r.ts_dim.str();
    j["grading_note"] = r.grading_note;
    return j;
}

// ------------------------------------------------------------- dictionary

inline json k3_report_json(const K3Report& r) {
    json j;
    j["field"] = field_json(r.field);
    j["form"] = form_json(r.form);
    j["signatures"] = signature_json(r.sigs);
    j["k3_type"] = true;
    j["algebra"] = quaternion_json(r.algebra);
    j["ram_infinity_condition"] = r.ram_infinity;
    j["ks"] = ks_descriptor_json(r.ks);
    j["t"] = lattice_summary_json(r.t);
    j["t_doubled"] = r.t_doubled ? lattice_summary_json(*r.t_doubled) : json(nullptr);
    return j;
}

inline json fourfold_report_json(const FourfoldReport& r) {
    json j;
    j["input"] = form_json(r.input);
    j["split"] = split_quadric_json(r.split);
    j["cor_class"] = brauer_json(r.cor_class);
    j["endo_label"] = r.endo_label;
    j["endo_rep"] = r.endo_rep
                        ? json(json::array({rat_str(r.endo_rep->first), rat_str(r.endo_rep->second)}))
                        : json(nullptr);
    j["t"] = r.t ? lattice_summary_json(*r.t) : json(nullptr);
    return j;
}

} // namespace io
} // namespace k3rm
