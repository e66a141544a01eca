#include "pisot/io.h"

#include <fstream>
#include <sstream>

#include "gtest/gtest.h"

using namespace pisot;

TEST(substitution_spec, round_trip_is_bit_exact) {
    for (const auto &s : {Substitution::fibonacci(), Substitution::pell(), Substitution::padovan(),
                          Substitution::thue_morse()}) {
        std::string text = write_substitution_spec(s);
        Substitution parsed = parse_substitution_spec(text);
        ASSERT_EQ(parsed, s);
        ASSERT_EQ(write_substitution_spec(parsed), text);
    }
    ASSERT_EQ(write_substitution_spec(Substitution::fibonacci()),
              "{\"alphabet\": [\"0\", \"1\"], \"rules\": {\"0\": \"01\", \"1\": \"0\"}}\n");
}

TEST(substitution_spec, multi_char_alphabet) {
    std::string text = R"({"alphabet": ["a", "bb"], "rules": {"a": "a,bb", "bb": "a"}})";
    Substitution s = parse_substitution_spec(text);
    ASSERT_EQ(s.image(0).str(), "a,bb");
    ASSERT_EQ(parse_substitution_spec(write_substitution_spec(s)), s);
}

TEST(substitution_spec, validation_errors) {
    const char *bad[] = {
        "not json",
        "[]",
        R"({"alphabet": ["0", "1"]})",
        R"({"alphabet": ["0", "1"], "rules": {"0": "01"}})",
        R"({"alphabet": ["0", "1"], "rules": {"0": "01", "1": ""}})",
        R"({"alphabet": ["0", "1"], "rules": {"0": "01", "1": "2"}})",
        R"({"alphabet": ["0", "1"], "rules": {"0": "01", "1": "0", "2": "0"}})",
        R"({"alphabet": ["0", "0"], "rules": {"0": "01"}})",
        R"({"alphabet": ["0"], "rules": {"0": "00"}})",
        R"({"alphabet": ["0", "1"], "rules": {"0": "01", "1": 0}})",
        R"({"alphabet": ["0", "1"], "rules": {"0": "01", "1": "0"}, "extra": 1})",
    };
    for (const char *text : bad) {
        ASSERT_THROW(parse_substitution_spec(text), std::invalid_argument) << text;
    }
}

TEST(formatting, rationals_and_angles) {
    ASSERT_EQ(rational_string(Rational(20, 27)), "20/27");
    ASSERT_EQ(rational_string(Rational(4, 2)), "2");
    ASSERT_EQ(format_angle(1.6180339887498949), "1.61803398875");
    ASSERT_EQ(format_angle(0.0), "0");
}

TEST(reports, pisot_report_has_schema) {
    Substitution s = Substitution::pell();
    auto j = pisot_report_json(s, classify_pisot(s));
    ASSERT_EQ(j["schema"], 1);
    ASSERT_EQ(j["pisot"], true);
    ASSERT_EQ(j["char_poly"], nlohmann::ordered_json::parse("[-1,-2,1]"));
    ASSERT_EQ(j["leading_eigenvalue"]["approx"], "2.41421356237");
    auto pv = pv_certificate_json(IntPolynomial{-1, -1, 1}, certify_pv(IntPolynomial{-1, -1, 1}));
    ASSERT_EQ(pv["verdict"], "pv");
    ASSERT_EQ(pv["root_counts"]["outside"], 1);
}

TEST(csv, profile_and_angles) {
    Word w = fixed_point_prefix(Substitution::fibonacci(), 0, 100);
    std::string csv = profile_csv(complexity_profile(w, 3));
    ASSERT_EQ(csv, "n,p_n,estimate,sturmian\n1,2,1,1\n2,3,0.792481250361,1\n3,4,0.666666666667,1\n");
    std::string angles = angles_csv(roots_of_unity(4));
    std::istringstream in(angles);
    std::string header, first;
    std::getline(in, header);
    std::getline(in, first);
    ASSERT_EQ(header, "k,theta,x,y");
    ASSERT_EQ(first, "1,1.57079632679,6.12323399574e-17,1");
}

TEST(svg, deterministic_and_self_contained) {
    AngleList a = cusp_curve(IntPolynomial{-1, -2, 1}, 5);
    SvgOptions opt;
    opt.polyline = true;
    std::string s1 = angles_svg(a, opt), s2 = angles_svg(a, opt);
    ASSERT_EQ(s1, s2);
    ASSERT_EQ(s1.rfind("<?xml", 0), 0u);
    ASSERT_NE(s1.find("<polyline"), std::string::npos);
    ASSERT_EQ(s1.find("href"), std::string::npos);
    opt.size = 0;
    ASSERT_THROW(angles_svg(a, opt), std::invalid_argument);
}

TEST(quantum_records, csv_and_json) {
    auto bin = digit_alphabet(2);
    QuantumState psi({{Word::parse(bin, "01"), Amplitude(0.6, 0)}, {Word::parse(bin, "10"), Amplitude(0, 0.8)}});
    ASSERT_EQ(quantum_state_csv(psi), "word,re,im\n01,0.6,0\n10,0,0.8\n");
    auto j = quantum_state_json(psi);
    ASSERT_EQ(j.size(), 2u);
    ASSERT_EQ(j[1]["word"], "10");
}
