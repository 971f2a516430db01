#include <doctest.h>

#include <string_view>
#include <vector>

#include "descent/rewrite.hpp"

using namespace descent;

namespace {

Signature nat_sig() {
  return Signature({{"0", 0}, {"s", 1}, {"ack", 2}});
}

Term pt(const Signature& sig, std::string_view text) {
  return parse_term(text, sig, {"x", "y"});
}

Trs ack_trs() {
  const Signature sig = nat_sig();
  return Trs(sig, {{pt(sig, "ack(0,y)"), pt(sig, "s(y)")},
                   {pt(sig, "ack(s(x),0)"), pt(sig, "ack(x,s(0))")},
                   {pt(sig, "ack(s(x),s(y))"), pt(sig, "ack(x,ack(s(x),y))")}});
}

Trs plus_trs() {
  const Signature sig({{"0", 0}, {"s", 1}, {"plus", 2}});
  return Trs(sig, {{pt(sig, "plus(0,y)"), pt(sig, "y")},
                   {pt(sig, "plus(s(x),y)"), pt(sig, "s(plus(x,y))")}});
}

// {f(x) -> f(f(x))} over {f, c}: every application of f loops
Trs embed_trs() {
  const Signature sig({{"f", 1}, {"c", 0}});
  return Trs(sig, {{pt(sig, "f(x)"), pt(sig, "f(f(x))")}});
}

// independent arithmetic for the Ackermann normal forms
long ack_value(long m, long n) {
  if (m == 0) return n + 1;
  if (n == 0) return ack_value(m - 1, 1);
  return ack_value(m - 1, ack_value(m, n - 1));
}

Term s_tower(const Signature& sig, long n) {
  Term t = Term::app(*sig.find("0"), {});
  for (long i = 0; i < n; ++i) t = Term::app(*sig.find("s"), {t});
  return t;
}

RpoInstance ack_instance() {
  const Signature sig = nat_sig();
  const std::vector<std::pair<std::string, std::string>> chain{{"ack", "s"}, {"s", "0"}};
  return {sig, PrecedenceStatus::make(sig, chain, std::vector<Lifting>(3, Lifting::Lexicographic))};
}

}  // namespace

TEST_CASE("rule set construction rejects bad rules") {
  const Signature sig = nat_sig();
  CHECK_THROWS_AS(Trs(sig, {{Term::var("x"), pt(sig, "0")}}), std::invalid_argument);
  CHECK_THROWS_AS(Trs(sig, {{pt(sig, "ack(0,y)"), pt(sig, "s(x)")}}), std::invalid_argument);
  CHECK_THROWS_AS(Trs(sig, {{Term::app(1, {}), Term::app(0, {})}}), std::invalid_argument);
}

TEST_CASE("matching") {
  const Signature sig = nat_sig();
  const auto got = match(pt(sig, "ack(0,y)"), pt(sig, "ack(0,s(0))"));
  REQUIRE(got.has_value());
  REQUIRE(got->lookup("y") != nullptr);
  CHECK(*got->lookup("y") == pt(sig, "s(0)"));

  CHECK(match(Term::var("x"), pt(sig, "ack(s(0),0)")).has_value());
  CHECK(!match(pt(sig, "ack(0,y)"), pt(sig, "ack(s(0),0)")).has_value());
  CHECK(!match(pt(sig, "s(x)"), Term::var("z")).has_value());

  // nonlinear pattern: both occurrences must match the same subject
  const Term nonlinear = pt(sig, "ack(x,x)");
  CHECK(match(nonlinear, pt(sig, "ack(s(0),s(0))")).has_value());
  CHECK(!match(nonlinear, pt(sig, "ack(s(0),0)")).has_value());
}

TEST_CASE("positions") {
  const Signature sig = nat_sig();
  const Term t = pt(sig, "ack(s(0),ack(0,0))");
  CHECK(subterm_at(t, {}) == t);
  CHECK(subterm_at(t, {0}) == pt(sig, "s(0)"));
  CHECK(subterm_at(t, {1, 0}) == pt(sig, "0"));
  CHECK(replace_at(t, {}, pt(sig, "0")) == pt(sig, "0"));
  CHECK(replace_at(t, {1}, pt(sig, "0")) == pt(sig, "ack(s(0),0)"));
  CHECK(replace_at(t, {0, 0}, pt(sig, "s(0)")) == pt(sig, "ack(s(s(0)),ack(0,0))"));

  CHECK(to_string(Position{}) == "root");
  CHECK(to_string(Position{0, 1}) == "0.1");
}

TEST_CASE("single rewrite steps") {
  const Trs trs = ack_trs();
  const Signature& sig = trs.sig();

  const auto a = rewrite_once(trs, pt(sig, "ack(0,0)"));
  REQUIRE(a.size() == 1);
  CHECK(a[0].term == pt(sig, "s(0)"));
  CHECK(a[0].rule == 0);
  CHECK(a[0].position.empty());

  CHECK(rewrite_once(trs, pt(sig, "s(0)")).empty());

  const auto b = rewrite_once(trs, pt(sig, "ack(s(0),s(0))"));
  REQUIRE(b.size() == 1);
  CHECK(b[0].term == pt(sig, "ack(0,ack(s(0),0))"));
  CHECK(b[0].rule == 2);
  CHECK(b[0].position.empty());

  // outermost first, then positions left to right
  const auto c = rewrite_once(trs, pt(sig, "ack(0,ack(0,0))"));
  REQUIRE(c.size() == 2);
  CHECK(c[0].position.empty());
  CHECK(c[0].term == pt(sig, "s(ack(0,0))"));
  CHECK(c[1].position == Position{1});
  CHECK(c[1].term == pt(sig, "ack(0,s(0))"));
}

TEST_CASE("normalization reaches the arithmetic value") {
  const Trs trs = ack_trs();
  const Signature& sig = trs.sig();

  for (long m = 0; m <= 2; ++m)
    for (long n = 0; n <= 2; ++n) {
      const Term start = Term::app(*sig.find("ack"), {s_tower(sig, m), s_tower(sig, n)});
      const NormalizeResult res = normalize(trs, start, 10000);
      REQUIRE(std::holds_alternative<Normalized>(res));
      const Normalized& norm = std::get<Normalized>(res);
      CHECK(norm.normal_form == s_tower(sig, ack_value(m, n)));
      CHECK(norm.trace.initial == start);
      CHECK(validate_derivation(trs, norm.trace));
    }
}

TEST_CASE("normalization edge cases") {
  const Trs trs = ack_trs();
  const Signature& sig = trs.sig();

  SUBCASE("normal form input: empty trace") {
    const NormalizeResult res = normalize(trs, pt(sig, "s(0)"), 10);
    REQUIRE(std::holds_alternative<Normalized>(res));
    CHECK(std::get<Normalized>(res).normal_form == pt(sig, "s(0)"));
    CHECK(std::get<Normalized>(res).trace.steps.empty());
  }

  SUBCASE("zero fuel still recognizes a normal form") {
    const NormalizeResult res = normalize(trs, pt(sig, "0"), 0);
    CHECK(std::holds_alternative<Normalized>(res));
  }

  SUBCASE("zero fuel on a redex reports exhaustion") {
    const NormalizeResult res = normalize(trs, pt(sig, "ack(0,0)"), 0);
    REQUIRE(std::holds_alternative<FuelExhausted>(res));
    CHECK(std::get<FuelExhausted>(res).trace.steps.empty());
  }

  SUBCASE("fuel one step short of the normal form") {
    const Trs plus = plus_trs();
    const Term start = pt(plus.sig(), "plus(s(s(0)),0)");
    const NormalizeResult short_run = normalize(plus, start, 2);
    REQUIRE(std::holds_alternative<FuelExhausted>(short_run));
    CHECK(std::get<FuelExhausted>(short_run).trace.steps.size() == 2);
    CHECK(validate_derivation(plus, std::get<FuelExhausted>(short_run).trace));

    const NormalizeResult full_run = normalize(plus, start, 3);
    REQUIRE(std::holds_alternative<Normalized>(full_run));
    CHECK(std::get<Normalized>(full_run).normal_form == pt(plus.sig(), "s(s(0))"));
  }
}

TEST_CASE("loop detection") {
  SUBCASE("immediate self-loop") {
    const Signature sig({{"f", 1}, {"c", 0}});
    const Trs trs(sig, {{pt(sig, "f(x)"), pt(sig, "f(x)")}});
    const NormalizeResult res = normalize(trs, pt(sig, "f(c)"), 10);
    REQUIRE(std::holds_alternative<LoopFound>(res));
    const LoopFound& loop = std::get<LoopFound>(res);
    CHECK(loop.trace.steps.size() == 1);
    CHECK(loop.loop_start == 0);
    CHECK(validate_derivation(trs, loop.trace));
  }

  SUBCASE("self-embedding rule: the start term reappears inside the successor") {
    const Trs trs = embed_trs();
    const Term start = pt(trs.sig(), "f(c)");
    const NormalizeResult res = normalize(trs, start, 50);
    REQUIRE(std::holds_alternative<LoopFound>(res));
    const LoopFound& loop = std::get<LoopFound>(res);
    CHECK(loop.loop_start == 0);
    REQUIRE(!loop.trace.steps.empty());
    CHECK(contains_subterm(loop.trace.steps.back().term, start));
    CHECK(validate_derivation(trs, loop.trace));
  }

  SUBCASE("terminating systems never report loops") {
    const Trs trs = ack_trs();
    for (const Term& t : enumerate_ground_terms(trs.sig(), 2))
      CHECK(!std::holds_alternative<LoopFound>(normalize(trs, t, 10000)));
  }
}

TEST_CASE("normalization is deterministic") {
  const Trs trs = ack_trs();
  const Term start = pt(trs.sig(), "ack(s(s(0)),s(0))");
  const NormalizeResult a = normalize(trs, start, 10000);
  const NormalizeResult b = normalize(trs, start, 10000);
  REQUIRE(std::holds_alternative<Normalized>(a));
  REQUIRE(std::holds_alternative<Normalized>(b));
  CHECK(std::get<Normalized>(a).normal_form == std::get<Normalized>(b).normal_form);
  CHECK(std::get<Normalized>(a).trace.steps.size() == std::get<Normalized>(b).trace.steps.size());
}

TEST_CASE("derivation validation catches tampering") {
  const Trs trs = ack_trs();
  const NormalizeResult res = normalize(trs, pt(trs.sig(), "ack(s(0),s(0))"), 1000);
  REQUIRE(std::holds_alternative<Normalized>(res));
  const DerivationTrace good = std::get<Normalized>(res).trace;
  REQUIRE(good.steps.size() >= 2);
  CHECK(validate_derivation(trs, good));

  DerivationTrace bad = good;
  bad.steps[1].term = pt(trs.sig(), "0");
  CHECK(!validate_derivation(trs, bad));

  bad = good;
  bad.steps[0].rule = 1;
  CHECK(!validate_derivation(trs, bad));

  bad = good;
  bad.steps[0].position = {0};
  CHECK(!validate_derivation(trs, bad));

  bad = good;
  bad.steps[0].rule = 99;
  CHECK(!validate_derivation(trs, bad));
}

TEST_CASE("rule orientation report") {
  const Trs trs = ack_trs();
  const RpoInstance inst = ack_instance();

  const OrientationReport yes = check_rule_orientation(trs, inst);
  CHECK(yes.all_oriented());
  REQUIRE(yes.entries.size() == 3);
  for (const auto& e : yes.entries) {
    CHECK(e.oriented);
    CHECK(revalidate_trace(inst, e.trace));
  }

  const Trs embed = embed_trs();
  const RpoInstance finst{
      embed.sig(),
      PrecedenceStatus::make(embed.sig(), {}, std::vector<Lifting>(2, Lifting::Lexicographic))};
  const OrientationReport no = check_rule_orientation(embed, finst);
  CHECK(!no.all_oriented());
  CHECK(!no.entries[0].oriented);
  CHECK(no.entries[0].trace.empty());

  const Trs empty(nat_sig(), {});
  CHECK(check_rule_orientation(empty, inst).all_oriented());
}

TEST_CASE("certified orientation forces descent along every rewrite step") {
  const Trs trs = ack_trs();
  const RpoInstance inst = ack_instance();
  REQUIRE(check_rule_orientation(trs, inst).all_oriented());
  for (const Term& t : enumerate_ground_terms(trs.sig(), 2))
    for (const RewriteResult& r : rewrite_once(trs, t)) CHECK(rpo_gt(inst, t, r.term));
}

TEST_CASE("empirical termination survey") {
  SUBCASE("terminating system: everything normalizes") {
    const TerminationSurvey s = empirical_termination(ack_trs(), 2, 500);
    CHECK(s.universe_size == 13);
    CHECK(s.normalized == 13);
    CHECK(s.loops.empty());
    CHECK(s.exhausted.empty());
  }

  SUBCASE("self-embedding system: every f-term loops") {
    const TerminationSurvey s = empirical_termination(embed_trs(), 2, 50);
    CHECK(s.universe_size == 3);  // c, f(c), f(f(c))
    CHECK(s.normalized == 1);
    CHECK(s.loops.size() == 2);
    CHECK(s.fuel_exhausted == 0);
  }

  SUBCASE("no rules: every term is already normal") {
    const TerminationSurvey s = empirical_termination(Trs(nat_sig(), {}), 2, 10);
    CHECK(s.universe_size == 13);
    CHECK(s.normalized == 13);
  }

  SUBCASE("modes agree") {
    const TerminationSurvey a = empirical_termination(embed_trs(), 2, 50, par::Mode::Serial);
    const TerminationSurvey b = empirical_termination(embed_trs(), 2, 50, par::Mode::Parallel);
    CHECK(a.universe_size == b.universe_size);
    CHECK(a.normalized == b.normalized);
    CHECK(a.fuel_exhausted == b.fuel_exhausted);
    CHECK(a.loops == b.loops);
    CHECK(a.exhausted == b.exhausted);
  }
}
