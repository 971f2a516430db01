#include <doctest.h>

#include <set>
#include <string>
#include <vector>

#include "descent/json_io.hpp"

using namespace descent;

namespace {

Signature ack_sig() { return Signature({{"ack", 2}, {"0", 0}, {"s", 1}}); }

Term pt(const Signature& sig, std::string_view text) {
  return parse_term(text, sig, {"x", "y"});
}

std::vector<Rule> ack_rules(const Signature& sig) {
  return {{pt(sig, "ack(0,y)"), pt(sig, "s(y)")},
          {pt(sig, "ack(s(x),0)"), pt(sig, "ack(x,s(0))")},
          {pt(sig, "ack(s(x),s(y))"), pt(sig, "ack(x,ack(s(x),y))")}};
}

EdgeMatrix edges(std::size_t n, const std::vector<std::pair<int, int>>& pairs) {
  EdgeMatrix m(n);
  for (auto [i, j] : pairs) m.set(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
  return m;
}

nlohmann::json reparse(const OrderedJson& j) { return nlohmann::json::parse(j.dump()); }

}  // namespace

TEST_CASE("instance serialization round trip") {
  const PrincipleInstance inst = PrincipleInstance::make(
      {"a", "b", "c"}, edges(3, {{0, 1}, {1, 2}}), edges(3, {{0, 2}}),
      edges(3, {{0, 1}}), edges(3, {{1, 2}}));

  const OrderedJson j = instance_to_json(inst);
  CHECK(j["carrier"] == OrderedJson({"a", "b", "c"}));
  CHECK(j["succ"][0][1] == 1);
  CHECK(j["succ"][1][0] == 0);
  CHECK(j.contains("succ0"));
  CHECK(j.contains("gg"));

  const PrincipleInstance back = instance_from_json(reparse(j));
  CHECK(back.labels() == inst.labels());
  CHECK(back.succ() == inst.succ());
  CHECK(back.sub() == inst.sub());
  REQUIRE(back.succ0().has_value());
  CHECK(*back.succ0() == *inst.succ0());
  REQUIRE(back.gg().has_value());
  CHECK(*back.gg() == *inst.gg());

  // optional relations stay optional
  const PrincipleInstance bare =
      PrincipleInstance::make({"a", "b"}, edges(2, {{0, 1}}), EdgeMatrix(2));
  const OrderedJson jb = instance_to_json(bare);
  CHECK(!jb.contains("succ0"));
  CHECK(!jb.contains("gg"));
  const PrincipleInstance bare_back = instance_from_json(reparse(jb));
  CHECK(!bare_back.succ0().has_value());
  CHECK(!bare_back.gg().has_value());

  // boolean cells are accepted on input
  const nlohmann::json jbool = nlohmann::json::parse(
      R"({"carrier":["a","b"],"succ":[[false,true],[false,false]],"sub":[[0,0],[0,0]]})");
  CHECK(instance_from_json(jbool).succ().at(0, 1));
}

TEST_CASE("instance reader names the offending key") {
  auto expect_throw = [](const char* text, const char* needle) {
    try {
      (void)instance_from_json(nlohmann::json::parse(text));
      FAIL_CHECK("expected a shape error for ", text);
    } catch (const std::invalid_argument& e) {
      CHECK(std::string(e.what()).find(needle) != std::string::npos);
    }
  };

  expect_throw(R"([1,2])", "object");
  expect_throw(R"({"succ":[],"sub":[]})", "carrier");
  expect_throw(R"({"carrier":[1],"succ":[],"sub":[]})", "strings");
  expect_throw(R"({"carrier":["a"]})", "succ and sub");
  expect_throw(R"({"carrier":["a","b"],"succ":[[0,0]],"sub":[[0,0],[0,0]]})", "succ");
  expect_throw(R"({"carrier":["a"],"succ":[[2]],"sub":[[0]]})", "expected 0 or 1");
  expect_throw(R"({"carrier":["a"],"succ":[["x"]],"sub":[[0]]})", "expected 0 or 1");
  expect_throw(R"({"carrier":["a"],"succ":[[0]],"sub":[[1]]})", "cycle");

  // carrier caps apply on the way in
  nlohmann::json big;
  big["carrier"] = nlohmann::json::array();
  for (int i = 0; i < 13; ++i) big["carrier"].push_back("v" + std::to_string(i));
  big["succ"] = nlohmann::json::array();
  big["sub"] = nlohmann::json::array();
  for (int i = 0; i < 13; ++i) {
    big["succ"].push_back(std::vector<int>(13, 0));
    big["sub"].push_back(std::vector<int>(13, 0));
  }
  CHECK_THROWS_AS((void)instance_from_json(big), LimitError);
}

TEST_CASE("certificate serialization") {
  const Signature sig = ack_sig();
  const std::vector<Rule> rules = ack_rules(sig);

  SUBCASE("oriented system") {
    const Certificate cert = orient_trs(sig, rules, {});
    REQUIRE(cert.status == Certificate::Status::Yes);
    const OrderedJson j = certificate_to_json(cert, sig, rules);

    CHECK(j["status"] == "YES");
    CHECK(j["precedence"] == OrderedJson::array({{"ack", "0"}, {"0", "s"}}));
    CHECK(j["statuses"]["ack"] == "lex");
    CHECK(j["statuses"]["0"] == "lex");
    CHECK(j["statuses"]["s"] == "lex");
    REQUIRE(j["oriented"].size() == 3);
    for (std::size_t i = 0; i < 3; ++i) {
      CHECK(j["oriented"][i]["lhs"] == to_string(sig, rules[i].lhs));
      CHECK(j["oriented"][i]["rhs"] == to_string(sig, rules[i].rhs));
      CHECK(!j["oriented"][i]["clause_trace"].empty());
    }
    CHECK(j["candidates_tried"] == 1);
    CHECK(!j.contains("reason"));

    // deterministic search, deterministic serialization
    CHECK(j.dump() == certificate_to_json(orient_trs(sig, rules, {}), sig, rules).dump());
  }

  SUBCASE("no orientable candidate") {
    const Signature fsig({{"f", 1}, {"c", 0}});
    const std::vector<Rule> embed{{pt(fsig, "f(x)"), pt(fsig, "f(f(x))")}};
    const OrderedJson j = certificate_to_json(orient_trs(fsig, embed, {}), fsig, embed);
    CHECK(j["status"] == "NO_INSTANCE");
    CHECK(!j.contains("precedence"));
    CHECK(!j.contains("oriented"));
    CHECK(j["candidates_tried"] >= 1);
  }

  SUBCASE("unorientable rule carries the reason") {
    const std::vector<Rule> var_lhs{{Term::var("x"), pt(sig, "0")}};
    const OrderedJson j = certificate_to_json(orient_trs(sig, var_lhs, {}), sig, var_lhs);
    CHECK(j["status"] == "NO_INSTANCE");
    REQUIRE(j.contains("reason"));
    CHECK(j["reason"].get<std::string>().find("variable") != std::string::npos);
    CHECK(j["candidates_tried"] == 0);
  }

  SUBCASE("budget exhaustion") {
    SearchConfig cfg;
    cfg.candidate_budget = 0;
    const OrderedJson j = certificate_to_json(orient_trs(sig, rules, cfg), sig, rules);
    CHECK(j["status"] == "BUDGET");
    CHECK(j["candidates_tried"] == 0);
  }
}

TEST_CASE("phi trace serialization") {
  const PhiDomain dom = nat_gt_domain();
  const PhiOutcome out = phi(dom, consult_realizer(dom),
                             LazySequence<int>::eventually_constant({5, 4, 3}, 7), {});
  REQUIRE(out.trace.frames.size() == 2);
  const OrderedJson j = phi_trace_to_json(out.trace);
  REQUIRE(j.size() == 2);
  CHECK(j[0]["depth"] == 2);
  CHECK(j[0]["f_result"] == 0);
  CHECK(j[1]["depth"] == 1);
  CHECK(j[1]["spliced_at"] == 0);
  CHECK(j[1]["y"] == 3);
  CHECK(j[1]["f_result"] == 1);
}

TEST_CASE("campaign serialization") {
  CampaignConfig cfg;
  cfg.seed = 11;
  cfg.count = 25;

  const OrderedJson js = campaign_to_json(stp_campaign(cfg));
  CHECK(js["campaign"] == "stp");
  CHECK(js["seed"] == 11);
  CHECK(js["count"] == 25);
  CHECK(js["passed"] == true);
  CHECK(js["counters"].contains("hypotheses_passed"));
  CHECK(js["failures"].is_array());
  CHECK(js["failures"].empty());
  // insertion order is part of the contract
  CHECK(js.dump().rfind(R"({"campaign":"stp","seed":11,"count":25,"passed":true)", 0) == 0);

  const OrderedJson jm = campaign_to_json(mbs_campaign(cfg));
  CHECK(jm["campaign"] == "mbs");
  CHECK(jm["counters"].contains("bad_found"));
  CHECK(jm["counters"].contains("no_bad"));

  Lemma34CampaignConfig lcfg;
  lcfg.count = 25;
  const OrderedJson jl = campaign_to_json(lemma34_campaign(lcfg));
  CHECK(jl["campaign"] == "lemma34");
  CHECK(jl["counters"].contains("bar_hits"));
}
