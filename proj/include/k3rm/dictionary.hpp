#pragma once

// The correspondence pipeline between RM K3 data and abelian-fourfold
// invariants. K3 -> fourfold is the authoritative direction; the reverse is
// an analyzer that reports what the even Clifford algebra supports.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "k3rm/clifford.hpp"
#include "k3rm/corestriction.hpp"

namespace k3rm {

// one integral-lattice digest: determinant, discriminant data, embeddability
struct LatticeSummary {
    Mat gram;
    Rat det;
    bool integral = false;
    bool even = false;
    std::optional<DiscCheck> disc;              // against the source K-form, when meaningful
    std::vector<Int> elementary_divisors;       // divisors > 1, when integral
    std::optional<EmbeddabilityReport> embeddability; // when even
};

inline LatticeSummary summarize_lattice(const Mat& g, const KQuadraticForm* source) {
    LatticeSummary s;
    s.gram = g;
    s.det = det_rat(g);
    s.integral = is_integral(g);
    s.even = is_even(g);
    if (source) s.disc = disc_check(*source, g);
    if (s.integral && s.det != 0) s.elementary_divisors = discriminant_group(g).divisors;
    if (s.even && s.det != 0) s.embeddability = k3_embeddability(g);
    return s;
}

struct K3Report {
    NumberField field;
    KQuadraticForm form;
    SignatureVector sigs;
    QuaternionAlgebra algebra; // the even Clifford quaternion of the form
    bool ram_infinity = false;
    KsDescriptor ks;           // cor_class, endo label, ks_dim
    LatticeSummary t;          // Cor(Q)
    // the doubled lattice when Cor(Q) is integral but odd; the original stays
    std::optional<LatticeSummary> t_doubled;
};

inline K3Report k3_to_fourfold(const NumberField& f, const KQuadraticForm& q) {
    if (f.degree() != 2) fail(errc::not_quadratic_field, "the dictionary needs a real quadratic field");
    if (!(q.field == f)) fail(errc::bad_input, "form is not defined over the given field");
    if (q.rank() != 3) fail(errc::bad_input, "transcendental data is a ternary form");
    if (!is_k3_type(q)) fail(errc::not_k3_type, "form is not of K3 type");

    K3Report r{f, q, signatures(q), even_clifford_ternary(q), false, {}, {}, {}};
    r.ram_infinity = ram_infinity_condition(r.algebra);
    r.ks = ks_descriptor(r.algebra); // rechecks the condition, computes the class

    Mat t = corestrict(q);
    r.t = summarize_lattice(t, &q);
    if (r.t.integral && !r.t.even) {
        Mat dbl = t;
        for (auto& row : dbl)
            for (auto& e : row) e *= 2;
        r.t_doubled = summarize_lattice(dbl, nullptr);
    }
    return r;
}

struct FourfoldReport {
    KQuadraticForm input;
    SplitQuadricReport split;
    BrauerClass cor_class;
    std::string endo_label; // "split_M2" or "B_Cor"
    std::optional<std::pair<Rat, Rat>> endo_rep;
    // corestriction of the K3-type conic, when the verdict holds
    std::optional<LatticeSummary> t;
};

inline FourfoldReport fourfold_to_k3(const KQuadraticForm& d) {
    FourfoldReport r{d, split_quadric(d), {}, {}, {}, {}};
    r.cor_class = corestriction_class(r.split.algebra);
    if (r.cor_class.empty()) {
        r.endo_label = "split_M2";
    } else {
        r.endo_label = "B_Cor";
        auto rep = quaternion_from_class(r.cor_class);
        r.endo_rep = std::make_pair(rep.alpha.coords[0], rep.beta.coords[0]);
    }
    if (r.split.k3_type) {
        const KQuadraticForm& c = is_k3_type(r.split.conic) ? r.split.conic : r.split.conic_conjugate;
        r.t = summarize_lattice(corestrict(c), &c);
    }
    return r;
}

} // namespace k3rm
