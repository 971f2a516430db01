#include "descent/json_io.hpp"

#include <algorithm>

namespace descent {

namespace {

OrderedJson trace_to_json(const Signature& sig, std::span<const ClauseStep> trace) {
  OrderedJson out = OrderedJson::array();
  for (const ClauseStep& step : trace) {
    OrderedJson entry;
    entry["lhs"] = to_string(sig, step.lhs);
    entry["rhs"] = to_string(sig, step.rhs);
    entry["clause"] = to_string(step.clause);
    out.push_back(std::move(entry));
  }
  return out;
}

// The search works over total precedences, so the stored closure linearizes
// back into a chain by counting dominated symbols.
std::vector<SymbolId> precedence_chain(const Signature& sig, const EdgeMatrix& prec) {
  std::vector<SymbolId> chain;
  for (std::size_t f = 0; f < sig.size(); ++f) chain.push_back(static_cast<SymbolId>(f));
  auto below_count = [&](SymbolId f) {
    std::size_t c = 0;
    for (std::size_t g = 0; g < sig.size(); ++g)
      if (prec.at(static_cast<std::size_t>(f), g)) ++c;
    return c;
  };
  std::stable_sort(chain.begin(), chain.end(),
                   [&](SymbolId a, SymbolId b) { return below_count(a) > below_count(b); });
  return chain;
}

}  // namespace

OrderedJson certificate_to_json(const Certificate& cert, const Signature& sig,
                                std::span<const Rule> rules) {
  OrderedJson out;
  switch (cert.status) {
    case Certificate::Status::Yes: out["status"] = "YES"; break;
    case Certificate::Status::NoInstance: out["status"] = "NO_INSTANCE"; break;
    case Certificate::Status::Budget: out["status"] = "BUDGET"; break;
  }
  if (cert.instance) {
    const PrecedenceStatus& order = cert.instance->order;
    OrderedJson prec = OrderedJson::array();
    std::vector<SymbolId> chain = precedence_chain(sig, order.precedence());
    for (std::size_t i = 0; i + 1 < chain.size(); ++i)
      if (order.above(chain[i], chain[i + 1]))
        prec.push_back({sig.name(chain[i]), sig.name(chain[i + 1])});
    out["precedence"] = std::move(prec);
    OrderedJson statuses;
    for (std::size_t f = 0; f < sig.size(); ++f)
      statuses[sig.name(static_cast<SymbolId>(f))] =
          to_string(order.status(static_cast<SymbolId>(f)));
    out["statuses"] = std::move(statuses);
    OrderedJson oriented = OrderedJson::array();
    for (const RuleOrientation& ro : cert.oriented) {
      OrderedJson entry;
      entry["lhs"] = to_string(sig, rules[ro.rule].lhs);
      entry["rhs"] = to_string(sig, rules[ro.rule].rhs);
      entry["clause_trace"] = trace_to_json(sig, ro.trace);
      oriented.push_back(std::move(entry));
    }
    out["oriented"] = std::move(oriented);
  }
  if (!cert.reason.empty()) out["reason"] = cert.reason;
  out["candidates_tried"] = cert.candidates_tried;
  return out;
}

namespace {

OrderedJson matrix_to_json(const EdgeMatrix& m) {
  OrderedJson rows = OrderedJson::array();
  for (std::size_t i = 0; i < m.size(); ++i) {
    OrderedJson row = OrderedJson::array();
    for (std::size_t j = 0; j < m.size(); ++j) row.push_back(m.at(i, j) ? 1 : 0);
    rows.push_back(std::move(row));
  }
  return rows;
}

EdgeMatrix matrix_from_json(const nlohmann::json& j, const char* key, std::size_t n) {
  if (!j.is_array() || j.size() != n)
    throw std::invalid_argument(std::string(key) + ": expected " + std::to_string(n) +
                                " matrix rows");
  EdgeMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    const nlohmann::json& row = j[i];
    if (!row.is_array() || row.size() != n)
      throw std::invalid_argument(std::string(key) + " row " + std::to_string(i) +
                                  ": expected " + std::to_string(n) + " cells");
    for (std::size_t k = 0; k < n; ++k) {
      const nlohmann::json& cell = row[k];
      bool value;
      if (cell.is_boolean()) {
        value = cell.get<bool>();
      } else if (cell.is_number()) {
        double d = cell.get<double>();
        if (d != 0.0 && d != 1.0)
          throw std::invalid_argument(std::string(key) + " cell (" + std::to_string(i) +
                                      "," + std::to_string(k) + "): expected 0 or 1");
        value = d == 1.0;
      } else {
        throw std::invalid_argument(std::string(key) + " cell (" + std::to_string(i) + "," +
                                    std::to_string(k) + "): expected 0 or 1");
      }
      m.set(i, k, value);
    }
  }
  return m;
}

}  // namespace

OrderedJson instance_to_json(const PrincipleInstance& inst) {
  OrderedJson out;
  out["carrier"] = inst.labels();
  out["succ"] = matrix_to_json(inst.succ());
  out["sub"] = matrix_to_json(inst.sub());
  if (inst.succ0()) out["succ0"] = matrix_to_json(*inst.succ0());
  if (inst.gg()) out["gg"] = matrix_to_json(*inst.gg());
  return out;
}

PrincipleInstance instance_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw std::invalid_argument("instance: expected a JSON object");
  if (!j.contains("carrier") || !j["carrier"].is_array())
    throw std::invalid_argument("instance: missing carrier array");
  std::vector<std::string> labels;
  for (const nlohmann::json& l : j["carrier"]) {
    if (!l.is_string()) throw std::invalid_argument("carrier: labels must be strings");
    labels.push_back(l.get<std::string>());
  }
  std::size_t n = labels.size();
  if (!j.contains("succ") || !j.contains("sub"))
    throw std::invalid_argument("instance: succ and sub are required");
  EdgeMatrix succ = matrix_from_json(j["succ"], "succ", n);
  EdgeMatrix sub = matrix_from_json(j["sub"], "sub", n);
  std::optional<EdgeMatrix> succ0, gg;
  if (j.contains("succ0")) succ0 = matrix_from_json(j["succ0"], "succ0", n);
  if (j.contains("gg")) gg = matrix_from_json(j["gg"], "gg", n);
  return PrincipleInstance::make(std::move(labels), std::move(succ), std::move(sub),
                                 std::move(succ0), std::move(gg));
}

OrderedJson phi_trace_to_json(const PhiTrace& trace) {
  OrderedJson out = OrderedJson::array();
  for (const PhiFrame& frame : trace.frames) {
    OrderedJson entry;
    entry["depth"] = frame.depth;
    entry["spliced_at"] = frame.spliced_at;
    entry["y"] = frame.y;
    entry["f_result"] = frame.f_result;
    out.push_back(std::move(entry));
  }
  return out;
}

namespace {

OrderedJson campaign_json(const char* name, std::uint64_t seed, std::size_t count,
                          std::initializer_list<std::pair<const char*, std::size_t>> counters,
                          const std::vector<CampaignFailure>& failures) {
  OrderedJson out;
  out["campaign"] = name;
  out["seed"] = seed;
  out["count"] = count;
  out["passed"] = failures.empty();
  OrderedJson cs;
  for (const auto& [key, value] : counters) cs[key] = value;
  out["counters"] = std::move(cs);
  OrderedJson fs = OrderedJson::array();
  for (const CampaignFailure& f : failures) {
    OrderedJson entry;
    entry["index"] = f.index;
    entry["seed"] = f.seed;
    entry["message"] = f.message;
    fs.push_back(std::move(entry));
  }
  out["failures"] = std::move(fs);
  return out;
}

}  // namespace

OrderedJson campaign_to_json(const StpCampaignResult& r) {
  return campaign_json("stp", r.master_seed, r.trials,
                       {{"hypotheses_passed", r.hypotheses_passed}}, r.failures);
}

OrderedJson campaign_to_json(const GlCampaignResult& r) {
  return campaign_json("gl", r.master_seed, r.trials, {{"gl_passed", r.gl_passed}},
                       r.failures);
}

OrderedJson campaign_to_json(const Lemma44CampaignResult& r) {
  return campaign_json("lemma44", r.master_seed, r.trials,
                       {{"sequences_tested", r.sequences_tested}}, r.failures);
}

OrderedJson campaign_to_json(const MbsCampaignResult& r) {
  return campaign_json("mbs", r.master_seed, r.trials,
                       {{"bad_found", r.bad_found}, {"no_bad", r.no_bad}}, r.failures);
}

OrderedJson campaign_to_json(const BiCampaignResult& r) {
  return campaign_json("bi", r.master_seed, r.trials,
                       {{"wellfounded_trials", r.wellfounded_trials},
                        {"cycle_trials", r.cycle_trials}},
                       r.failures);
}

OrderedJson campaign_to_json(const Lemma34CampaignResult& r) {
  return campaign_json("lemma34", r.master_seed, r.trials, {{"bar_hits", r.bar_hits}},
                       r.failures);
}

}  // namespace descent
