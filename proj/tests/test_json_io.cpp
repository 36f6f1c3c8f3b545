#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "albert/json_io.hpp"
#include "albert/random.hpp"

using namespace albert;
using nlohmann::json;

TEST_CASE("jordan element round trips exactly") {
    for (Algebra alg : {Algebra::compact, Algebra::split}) {
        RandomSource rs(alg == Algebra::compact ? 1 : 2);
        for (int t = 0; t < 200; ++t) {
            const JordanElement x = random_jordan(rs, alg);
            const std::string s = to_json(x).dump();
            CHECK(jordan_from_json(json::parse(s)) == x);
        }
    }
}

TEST_CASE("jordan schema is strict") {
    json good = to_json(unit_E());
    CHECK_NOTHROW((void)jordan_from_json(good));

    json extra = good;
    extra["comment"] = "hi";
    CHECK_THROWS_AS((void)jordan_from_json(extra), ParseError);

    json missing = good;
    missing.erase("x2");
    CHECK_THROWS_AS((void)jordan_from_json(missing), ParseError);

    json short_array = good;
    short_array["x1"] = {0, 0, 0};
    CHECK_THROWS_AS((void)jordan_from_json(short_array), ParseError);

    json bad_algebra = good;
    bad_algebra["algebra"] = "octonionic";
    CHECK_THROWS_AS((void)jordan_from_json(bad_algebra), ParseError);

    json bad_type = good;
    bad_type["diag"][1] = "two";
    CHECK_THROWS_AS((void)jordan_from_json(bad_type), ParseError);

    CHECK_THROWS_AS((void)jordan_from_json(json::array()), ParseError);
}

TEST_CASE("generator payloads round trip") {
    RandomSource rs(3);
    const GeneratorSequence gens = {
        DeltaA(random_unit_octonion(rs, Algebra::compact)),
        DeltaA(random_unit_octonion(rs, Algebra::split)),
        RotO3(random_orthogonal3(rs)),
        SpThree(random_sp3_matrix(rs)),
        g2_map_to_e1(random_unit_imaginary(rs)),
    };
    for (const Generator& g : gens) {
        const Generator back = generator_from_json(json::parse(to_json(g).dump()));
        CHECK(back == g);
    }
    CHECK_THROWS_AS((void)generator_from_json(json{{"kind", "boost"}}), ParseError);
    CHECK_THROWS_AS((void)generator_from_json(json{{"t", json::array()}}), ParseError);
}

TEST_CASE("invalid generator payloads parse but fail validation") {
    // well-formed JSON carrying a non-orthogonal T must raise the generator's
    // own invariant error, not a parse error
    json j = {{"kind", "rot_o3"}, {"t", {1, 0.5, 0, 0, 1, 0, 0, 0, 1}}};
    CHECK_THROWS_AS((void)generator_from_json(j), InvalidGenerator);
    json d = {{"kind", "delta_a"},
              {"algebra", "compact"},
              {"a", {2, 0, 0, 0, 0, 0, 0, 0}}};
    CHECK_THROWS_AS((void)generator_from_json(d), NotUnit);
}

TEST_CASE("transcript round trips through JSON") {
    RandomSource rs(5);
    const JordanElement x = random_jordan(rs, Algebra::compact);
    const DiagonalizationTranscript tr = diagonalize(x);
    const std::string s = to_json(tr).dump(2);
    const DiagonalizationTranscript back = transcript_from_json(json::parse(s));
    CHECK(back.input == tr.input);
    CHECK(back.diagonal == tr.diagonal);
    CHECK(back.off_diag_residual == tr.off_diag_residual);
    CHECK(back.steps == tr.steps);
    CHECK(back.invariant_drift.trace == tr.invariant_drift.trace);
    CHECK(back.invariant_drift.det == tr.invariant_drift.det);

    // replay of the parsed transcript reproduces the diagonal
    const JordanElement replay = apply_sequence(back.steps, back.input);
    for (int i = 0; i < 3; ++i)
        CHECK(replay.diag[i] == doctest::Approx(back.diagonal[i]).epsilon(1e-12));
}

TEST_CASE("transcript schema is strict") {
    const DiagonalizationTranscript tr = diagonalize(unit_E());
    json j = to_json(tr);
    json extra = j;
    extra["note"] = 1;
    CHECK_THROWS_AS((void)transcript_from_json(extra), ParseError);
    json missing = j;
    missing.erase("invariant_drift");
    CHECK_THROWS_AS((void)transcript_from_json(missing), ParseError);
    json bad_drift = j;
    bad_drift["invariant_drift"].erase("sigma");
    CHECK_THROWS_AS((void)transcript_from_json(bad_drift), ParseError);
}

TEST_CASE("verdict serialization") {
    ObstructionVerdict v{-2.0, Verdict::obstructed};
    CHECK(to_json(v).dump() == R"({"inner_square":-2.0,"verdict":"obstructed"})");
    v = {3.0, Verdict::inconclusive};
    CHECK(to_json(v)["verdict"] == "inconclusive");
}

TEST_CASE("output keys are sorted for diffability") {
    const std::string s = to_json(unit_E()).dump();
    CHECK(s.find("\"algebra\"") < s.find("\"diag\""));
    CHECK(s.find("\"diag\"") < s.find("\"x1\""));
    CHECK(s.find("\"x1\"") < s.find("\"x2\""));
    CHECK(s.find("\"x2\"") < s.find("\"x3\""));
}

TEST_CASE("doubles survive the round trip bit-exactly") {
    RandomSource rs(9);
    for (int t = 0; t < 500; ++t) {
        const double v = rs.symmetric() * std::pow(10.0, int(rs.symmetric() * 8));
        const json j = json::parse(json(v).dump());
        CHECK(j.get<double>() == v);
    }
}
