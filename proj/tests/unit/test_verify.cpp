#include <doctest.h>

#include <nlohmann/json.hpp>

#include "dkn/random.hpp"
#include "dkn/serialize.hpp"
#include "dkn/verify.hpp"

using namespace dkn;
using R = Rational;
using nlohmann::json;

TEST_CASE("splitmix64 reference outputs") {
  // Reference sequence for state 0: outputs at states γ, 2γ, 3γ.
  CHECK(splitmix64(0) == 0xe220a8397b1dcdafULL);
  CHECK(splitmix64(0x9e3779b97f4a7c15ULL) == 0x6e789e6aa1b965f4ULL);
  CHECK(splitmix64(0x3c6ef372fe94f82aULL) == 0x06c45d188009454fULL);
}

TEST_CASE("counter rng is deterministic and stream separated") {
  CounterRng a(5, 1), b(5, 1), c(5, 2);
  bool differs = false;
  for (int i = 0; i < 20; ++i) {
    const auto x = a.next();
    CHECK(x == b.next());
    differs = differs || x != c.next();
  }
  CHECK(differs);
  CounterRng d(9, 0);
  for (int i = 0; i < 500; ++i) {
    const long v = d.uniform(-3, 4);
    CHECK(v >= -3);
    CHECK(v <= 4);
    const R q = d.rational(7);
    CHECK(q.abs() <= R(7));
  }
  CHECK_THROWS_AS(d.uniform(2, 1), std::invalid_argument);
  CHECK_THROWS_AS(d.rational(0), std::invalid_argument);
}

TEST_CASE("random configurations are valid and reproducible") {
  for (std::uint64_t i = 0; i < 50; ++i) {
    const auto c = random_configuration(71, i);
    CHECK_NOTHROW(validate_configuration(c));
    const auto again = random_configuration(71, i);
    CHECK(again.curve == c.curve);
    CHECK(again.gamma == c.gamma);
    CHECK(again.p == c.p);
  }
  CHECK_FALSE(random_configuration(71, 0).gamma == random_configuration(72, 0).gamma);
}

TEST_CASE("configuration validation") {
  ExactConfiguration c{SpectralCurve::elliptic(0, 0, 0), {R(1), R(2), R(3), R(5)}, R(2)};
  CHECK_THROWS_AS(validate_configuration(c), std::invalid_argument);  // p = γ_1
  c.p = R(1, 2);
  CHECK_NOTHROW(validate_configuration(c));  // F(1/2) = 1/8, not a square
  c.p = R(4);
  CHECK_THROWS_AS(validate_configuration(c), std::invalid_argument);  // F(4) = 64
  c.p = R(6);
  c.gamma[3] = R(0);
  CHECK_THROWS_AS(validate_configuration(c), std::invalid_argument);  // F(γ) = 0
  c.gamma = {R(1), R(2), R(1), R(5)};
  CHECK_THROWS_AS(validate_configuration(c), std::invalid_argument);  // repeated γ
}

TEST_CASE("serialization round trips") {
  const auto c = random_configuration(73, 3);
  const json j = configuration_json(c);
  CHECK(j.at("curve").size() == 3);
  const auto back = configuration_from_json(json::parse(j.dump()));
  CHECK(back.curve == c.curve);
  CHECK(back.gamma == c.gamma);
  CHECK(back.p == c.p);

  CHECK(curve_from_json(curve_json(SpectralCurve({1, 2, 3, 4, 5}))) == SpectralCurve({1, 2, 3, 4, 5}));
  CHECK_THROWS(curve_from_json(json::parse(R"(["1", "2"])")));
  CHECK_THROWS(configuration_from_json(json::parse(R"({"curve": ["0","0","0"], "gamma": ["1","1","2","3"], "p": "5"})")));
  CHECK(scalar_json(R(3, 4)) == json("3/4"));
}

TEST_CASE("suite selection") {
  CHECK(select_suites("all").size() == known_suites().size());
  const auto two = select_suites("chain,eigen");
  REQUIRE(two.size() == 2);
  CHECK(two[1] == "eigen");
  CHECK_THROWS_AS(select_suites("chain,bogus"), std::invalid_argument);
  CHECK_THROWS_AS(select_suites(""), std::invalid_argument);
}

TEST_CASE("every suite passes with closing constants") {
  VerifyOptions o;
  o.samples = 3;
  o.seed = 74;
  const auto configs = sample_configurations(o);
  for (const auto& s : known_suites()) {
    const auto report = run_suite(s, configs, o);
    INFO("suite " << s);
    CHECK(report.passed());
    CHECK(report.failures.empty());
  }
}

TEST_CASE("zero constants fail the chain and lax-y suites with replayable dumps") {
  VerifyOptions o;
  o.samples = 2;
  o.seed = 75;
  o.constants = TheoremConstants{};
  const auto configs = sample_configurations(o);
  const auto chain = run_suite("chain", configs, o);
  const auto lax_x = run_suite("lax-x", configs, o);
  const auto lax_y = run_suite("lax-y", configs, o);
  CHECK(chain.passes == 0);
  CHECK(lax_x.passed());
  CHECK(lax_y.passes == 0);
  CHECK(lax_y.max_residual > 0.0);

  const json report = report_json({chain, lax_x, lax_y}, o);
  CHECK_FALSE(report.at("passed").get<bool>());
  CHECK(report.at("constants") == "0/1,0/1,0/1,0/1,0/1,0/1");
  const auto replay = replay_configurations(json::parse(report.dump()));
  REQUIRE(replay.size() == configs.size());
  for (std::size_t i = 0; i < replay.size(); ++i) CHECK(replay[i].gamma == configs[i].gamma);
}

TEST_CASE("replay accepts single configurations and arrays") {
  const auto c = random_configuration(76, 0);
  CHECK(replay_configurations(configuration_json(c)).size() == 1);
  CHECK(replay_configurations(json::array({configuration_json(c), configuration_json(c)})).size() == 1);
  CHECK_THROWS_AS(replay_configurations(json(3)), std::invalid_argument);
}

TEST_CASE("report layout") {
  VerifyOptions o;
  o.samples = 1;
  const auto configs = sample_configurations(o);
  const json r = report_json({run_suite("eigen", configs, o)}, o);
  CHECK(r.at("seed") == 7);
  CHECK(r.at("constants") == "closing");
  CHECK(r.at("suites").at(0).at("suite") == "eigen");
  CHECK(r.at("passed").get<bool>());
  o.samples = 0;
  CHECK_THROWS_AS(sample_configurations(o), std::invalid_argument);
}
