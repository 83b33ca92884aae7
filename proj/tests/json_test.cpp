#include <gtest/gtest.h>

#include "octf4/json_io.hpp"
#include "octf4/random.hpp"

using namespace octf4;

TEST(Json, ComplexIsAPair) {
  EXPECT_EQ(to_json(Complex(1.5, -2.0)).dump(), "[1.5,-2.0]");
  EXPECT_EQ(complex_from_json(Json::parse("[0.1, 3]")), Complex(0.1, 3.0));
  EXPECT_THROW(complex_from_json(Json::parse("\"1+2i\"")), Error);
}

TEST(Json, HermRoundTripIsBitExact) {
  Rng rng(1);
  for (int k = 0; k < 20; ++k) {
    const HermMat3 a = rng.herm(1e3);
    EXPECT_EQ(herm_from_json(parse_json(to_json(a).dump())), a);
  }
}

TEST(Json, HermLayout) {
  const Json j = to_json(canonical_form());
  EXPECT_EQ(j["diag"][0], Json::parse("[0.0, 1.0]"));
  EXPECT_EQ(j["x1"].size(), 8u);
  EXPECT_EQ(j["x1"][0], Json::parse("[1.0, 0.0]"));
}

TEST(Json, LettersOfEveryKind) {
  Rng rng(2);
  GeneratorWord w{random_spin9(rng), random_spin8(rng), random_orth3(rng),
                  random_real_orth12(rng)};
  const GeneratorWord back = word_from_json(parse_json(to_json(w).dump()));
  ASSERT_EQ(back.size(), w.size());
  const HermMat3 a = rng.herm();
  EXPECT_EQ(act(back, a), act(w, a));
  EXPECT_EQ(to_json(w[0])["kind"], "spin9");
  EXPECT_EQ(to_json(w[3])["kind"], "orth12");
}

TEST(Json, TraceRoundTripReverifies) {
  const HermMat3 a = sample_orbit(3, 1).front();
  const ReductionTrace t = reduce_to_canonical(a, Tolerances{});
  const ReductionTrace back = trace_from_json(parse_json(to_json(t).dump()));
  EXPECT_EQ(back.input, t.input);
  EXPECT_EQ(back.final, t.final);
  EXPECT_EQ(back.steps.size(), t.steps.size());
  EXPECT_EQ(back.residual, t.residual);
  EXPECT_TRUE(verify_trace(back, Tolerances{}).ok);
}

TEST(Json, TamperedTraceFailsVerification) {
  const ReductionTrace t = reduce_to_canonical(sample_orbit(4, 1).front(), Tolerances{});
  Json j = to_json(t);
  j["input"]["x3"][2][0] = j["input"]["x3"][2][0].get<double>() + 0.25;
  EXPECT_FALSE(verify_trace(trace_from_json(j), Tolerances{}).ok);
}

TEST(Json, RealMatrices) {
  const RealHermMat3 x = sample_real_orbit(5, 1).front();
  const RealHermMat3 y = real_herm_from_json(parse_json(to_json(x).dump()));
  EXPECT_EQ(y.diag, x.diag);
  EXPECT_EQ(y.x2, x.x2);
  EXPECT_THROW(real_herm_from_json(Json::parse(R"({"diag":[1,2]})")), Error);
}

TEST(Json, MalformedInputIsAParseError) {
  const auto code = [](const std::string& text) {
    try {
      herm_from_json(parse_json(text));
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::invalid_argument;
  };
  EXPECT_EQ(code("{"), ErrorCode::parse_error);
  EXPECT_EQ(code("[]"), ErrorCode::parse_error);
  EXPECT_EQ(code(R"({"diag":[[0,0],[0,0],[0,0]],"x1":[],"x2":[],"x3":[]})"), ErrorCode::parse_error);
  EXPECT_THROW(letter_from_json(Json::parse(R"({"kind":"spin10"})")), Error);
}

TEST(Json, ConfigOverridesAndValidation) {
  const Config c = config_from_json(Json::parse(R"({"seed": 42, "tolerance": {"accept": 1e-9}})"));
  EXPECT_EQ(c.seed, 42u);
  EXPECT_EQ(c.tol.accept, 1e-9);
  EXPECT_EQ(c.tol.classify, Config{}.tol.classify);
  EXPECT_THROW(config_from_json(Json::parse(R"({"tolerance": {"accept": -1}})")), Error);
  EXPECT_THROW(config_from_json(Json::parse(R"({"tolerance": {"accept": 1e-3}})")), Error);
  EXPECT_THROW(config_from_json(Json::parse(R"({"seed": "seven"})")), Error);
  EXPECT_EQ(config_from_json(to_json(c)).seed, 42u);
}

TEST(Json, DimsReport) {
  const Json d = dims_report();
  EXPECT_EQ(d["w1"], 52);
  EXPECT_EQ(d["w2"], 1274);
  EXPECT_EQ(d["w3"], 273);
  EXPECT_EQ(d["w4"], 26);
  EXPECT_EQ(d["parabolic"]["nilradical_dim"], 15);
  EXPECT_EQ(d["parabolic"]["parabolic_dim"], 37);
}
