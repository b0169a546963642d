#include <catch2/catch_amalgamated.hpp>

#include "k3rm/json_io.hpp"
#include "test_util.hpp"

using namespace k3rm;
using io::json;
using k3rm_test::throws_kind;

TEST_CASE("rational strings") {
    REQUIRE(io::rat_str(Rat(5)) == "5");
    REQUIRE(io::rat_str(Rat(-3, 2)) == "-3/2");
    REQUIRE(io::parse_rat("5") == Rat(5));
    REQUIRE(io::parse_rat("-3/2") == Rat(-3, 2));
    REQUIRE(io::parse_rat("+7/14") == Rat(1, 2));
    for (const char* bad : {"", "x", "3/", "/2", "1.5", "3/0", "2 "}) {
        INFO(bad);
        REQUIRE(throws_kind([&] { io::parse_rat(bad); }, errc::bad_input));
    }
}

TEST_CASE("polynomial grammar") {
    QPoly p = io::parse_poly_string("x^2-2");
    REQUIRE(p.degree() == 2);
    REQUIRE(p.coeff(0) == Rat(-2));
    REQUIRE(p.coeff(1) == 0);
    REQUIRE(p.coeff(2) == 1);
    QPoly q = io::parse_poly_string("2*t^3 - t + 4");
    REQUIRE(q.degree() == 3);
    REQUIRE(q.coeff(3) == 2);
    REQUIRE(q.coeff(1) == Rat(-1));
    REQUIRE(q.coeff(0) == 4);
    QPoly r = io::parse_poly_string("-x+3");
    REQUIRE(r.degree() == 1);
    REQUIRE(r.coeff(1) == Rat(-1));
    REQUIRE(r.coeff(0) == 3);
    QPoly s = io::parse_poly_string("x^6+x^5-5x^4-4x^3+6x^2+3x-1");
    REQUIRE(s.degree() == 6);
    REQUIRE(s.coeff(4) == Rat(-5));
    REQUIRE(s.coeff(0) == Rat(-1));
    QPoly c = io::parse_poly_string("7");
    REQUIRE(c.degree() == 0);
    REQUIRE(c.coeff(0) == 7);
    QPoly merged = io::parse_poly_string("x + x - 1");
    REQUIRE(merged.degree() == 1);
    REQUIRE(merged.coeff(1) == 2);
    for (const char* bad : {"", "x^2-2y", "x++2", "x^", "x^-2", "*x", "x 2", "3..2"}) {
        INFO(bad);
        bool threw = false;
        try {
            io::parse_poly_string(bad);
        } catch (const error&) {
            threw = true;
        }
        REQUIRE(threw);
    }
}

TEST_CASE("element grammar reduces powers") {
    NumberField f = NumberField::make(io::parse_poly_string("x^2-2"));
    FieldElement e = io::parse_element_string(f, "a-1");
    REQUIRE(e.coords[0] == Rat(-1));
    REQUIRE(e.coords[1] == 1);
    FieldElement sq = io::parse_element_string(f, "a^2");
    REQUIRE(sq.coords[0] == 2);
    REQUIRE(sq.coords[1] == 0);
    FieldElement c = io::parse_element_string(f, "5");
    REQUIRE(c.coords[0] == 5);
    REQUIRE(c.coords[1] == 0);
}

TEST_CASE("field round trip") {
    NumberField f = NumberField::make(io::parse_poly_string("x^2-2"));
    json j = io::field_json(f);
    REQUIRE(j["degree"] == 2);
    REQUIRE(j["disc_order"] == "8");
    REQUIRE(j["minpoly"][0] == "-2");
    REQUIRE(j["minpoly"][2] == "1");
    NumberField back = io::parse_field(j);
    REQUIRE(back == f);
    NumberField s = io::parse_field(json("x^2-5"));
    REQUIRE(s.disc_order() == 20);
    NumberField t = io::parse_field(json::parse(R"({"minpoly": ["-2","0","1"]})"));
    REQUIRE(t == f);
}

TEST_CASE("form round trip, diagonal and full gram") {
    NumberField f = NumberField::make(io::parse_poly_string("x^2-2"));
    FieldElement u = io::parse_element_string(f, "a-1");
    KQuadraticForm q = diagonal_form(f, {u, u, f.from_rational(Rat(-1))});
    json j = io::form_json(q);
    KQuadraticForm back = io::parse_form(j);
    REQUIRE(back.field == f);
    REQUIRE(back.rank() == 3);
    REQUIRE(back.gram[0][0] == u);
    REQUIRE(f.is_zero(back.gram[0][1]));

    json d = json::parse(R"({"field": {"minpoly": "x^2-2"}, "diagonal": ["a-1", "a-1", "-1"]})");
    KQuadraticForm qd = io::parse_form(d);
    REQUIRE(qd.gram[0][0] == u);
    REQUIRE(qd.gram[2][2] == f.from_rational(Rat(-1)));

    // default field is the rationals
    json r = json::parse(R"({"diagonal": ["1", "1", "-1", "-2"]})");
    KQuadraticForm qr = io::parse_form(r);
    REQUIRE(qr.field.degree() == 1);
    REQUIRE(qr.rank() == 4);
}

TEST_CASE("matrix round trip") {
    Mat g = {{Rat(2), Rat(0)}, {Rat(0), Rat(4)}};
    json j = io::mat_json(g);
    REQUIRE(j[1][1] == "4");
    Mat back = io::parse_mat(j);
    REQUIRE(back == g);
    bool threw = false;
    try {
        io::parse_mat(json::parse("[[1,2]]"));
    } catch (const error&) {
        threw = true;
    }
    REQUIRE(threw);
}

TEST_CASE("Brauer class ordering: primes ascending, inf last") {
    BrauerClass c;
    c.primes.insert(Int(7));
    c.primes.insert(Int(2));
    c.infinite = true;
    json j = io::brauer_json(c);
    REQUIRE(j.size() == 3);
    REQUIRE(j[0] == "2");
    REQUIRE(j[1] == "7");
    REQUIRE(j[2] == "inf");
}

TEST_CASE("K3 report carries the worked values") {
    NumberField f = NumberField::make(io::parse_poly_string("x^2-2"));
    FieldElement u = io::parse_element_string(f, "a-1");
    KQuadraticForm q = diagonal_form(f, {u, u, f.from_rational(Rat(-1))});
    K3Report rep = k3_to_fourfold(f, q);
    json j = io::k3_report_json(rep);
    REQUIRE(j["ks"]["ks_dim"] == "4");
    REQUIRE(j["ks"]["cor_class"][0] == "2");
    REQUIRE(j["ks"]["cor_class"][1] == "inf");
    REQUIRE(j["ks"]["endo_rep"][0] == "-1");
    REQUIRE((j["t"]["det"] == "-512" || j["t"]["det"] == "512"));
    REQUIRE(j["t"]["disc_check"]["predicted_thm_main"] == "64");
    REQUIRE(j["t"]["signature"][0] == 2);
    REQUIRE(j["t"]["signature"][1] == 4);
    REQUIRE(j["t"]["embeddability"]["verdict"] == "Embeds");
    REQUIRE(j["t_doubled"].is_null());
    std::string dumped = j.dump();
    REQUIRE(json::parse(dumped) == j);
}

TEST_CASE("fourfold report serializes") {
    NumberField Q = NumberField::make(QPoly({Rat(0), Rat(1)}));
    KQuadraticForm d = diagonal_form(Q, {Q.from_rational(Rat(1)), Q.from_rational(Rat(1)),
                                         Q.from_rational(Rat(-1)), Q.from_rational(Rat(-2))});
    FourfoldReport rep = fourfold_to_k3(d);
    json j = io::fourfold_report_json(rep);
    REQUIRE(j["endo_label"] == "split_M2");
    REQUIRE(j["split"]["center_radicand"] == "2");
    REQUIRE(j["split"]["k3_type"].is_boolean());
    REQUIRE(json::parse(j.dump()) == j);
}

TEST_CASE("representation report serializes") {
    KsRepReport r = ks_representation_report(2);
    json j = io::ks_rep_report_json(r);
    REQUIRE(j["dim_h1"] == "8");
    REQUIRE(j["wedge2_two_copies"].is_object());
    REQUIRE(j["ts_dim"] == "6");
    IrrDecomposition dec = decompose(wedge2(irr_char(std::vector<int>{1, 1})));
    json dj = io::decomposition_json(dec);
    REQUIRE(dj["(2,0)"] == 1);
    REQUIRE(dj["(0,2)"] == 1);
}

TEST_CASE("Clifford table entries") {
    NumberField Q = NumberField::make(QPoly({Rat(0), Rat(1)}));
    KQuadraticForm q3 = diagonal_form(
        Q, {Q.from_rational(Rat(1)), Q.from_rational(Rat(1)), Q.from_rational(Rat(1))});
    CliffordAlgebra c = make_clifford(Q, {Q.one(), Q.one(), Q.one()});
    json t = io::clifford_table_json(c);
    REQUIRE(t.is_array());
    // nondegenerate diagonal: every product lands on one cell
    REQUIRE(t.size() == c.dim() * c.dim());
    QuaternionAlgebra b = even_clifford_ternary(q3);
    json bj = io::quaternion_json(b);
    REQUIRE(bj["alpha"][0] == "-1");
    REQUIRE(bj["beta"][0] == "-1");
}
