#pragma once

#include <cstdint>
#include <limits>
#include <ostream>
#include <span>
#include <string>
#include <string_view>

#include <json.hpp>

#include "recip/verify.hpp"

namespace recip {

enum class OutputFormat { text, json, csv };

inline OutputFormat parse_output_format(std::string_view s) {
  if (s == "text") return OutputFormat::text;
  if (s == "json") return OutputFormat::json;
  if (s == "csv") return OutputFormat::csv;
  throw precondition_error("unknown output format '" + std::string(s) + "'");
}

namespace detail {

// Integers that fit in 64 bits become JSON numbers, larger ones strings.
inline nlohmann::ordered_json integer_json(const Integer& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
    return v.convert_to<std::int64_t>();
  return v.str();
}

inline const char* bool_text(bool b) { return b ? "true" : "false"; }

}  // namespace detail

inline nlohmann::ordered_json to_json(const PairReport& r) {
  nlohmann::ordered_json j;
  j["p"] = r.p;
  j["q"] = r.q;
  j["rec_pq"] = detail::integer_json(r.rec_pq);
  j["rec_qp"] = detail::integer_json(r.rec_qp);
  j["legendre_qp"] = to_int(r.legendre_qp);
  j["legendre_pq"] = to_int(r.legendre_pq);
  j["res"] = detail::integer_json(r.res);
  j["product_law_ok"] = r.product_law_ok;
  j["congruence_ok"] = r.congruence_ok;
  return j;
}

inline nlohmann::ordered_json to_json(const SupplementReport& r) {
  nlohmann::ordered_json j;
  j["p"] = r.p;
  j["rec_phi4"] = detail::integer_json(r.rec_phi4);
  j["legendre_minus2"] = to_int(r.legendre_minus2);
  j["legendre_2"] = to_int(r.legendre_2);
  j["mod8_class"] = r.mod8_class;
  j["pattern_ok"] = r.pattern_ok;
  j["thm_b_ok"] = r.thm_b_ok;
  j["congruence_ok"] = r.congruence_ok;
  return j;
}

inline nlohmann::ordered_json to_json(const Witness& w) {
  nlohmann::ordered_json inputs = nlohmann::ordered_json::object();
  for (const auto& [k, v] : w.inputs) inputs[k] = v;
  nlohmann::ordered_json j;
  j["identity"] = w.identity;
  j["trial"] = w.trial;
  j["inputs"] = std::move(inputs);
  j["lhs"] = w.lhs;
  j["rhs"] = w.rhs;
  return j;
}

/// The suite report as one JSON document. Contains nothing that depends on
/// scheduling (in particular not the job count).
inline nlohmann::ordered_json to_json(const SuiteReport& r) {
  nlohmann::ordered_json j;
  j["config"] = {{"seed", r.config.seed},
                 {"trials", r.config.trials},
                 {"degree_cap", r.config.degree_cap},
                 {"coeff_cap", r.config.coeff_cap},
                 {"prime_cap", r.config.prime_cap}};
  auto& ids = j["identities"] = nlohmann::ordered_json::array();
  for (const auto& t : r.tallies)
    ids.push_back({{"name", t.name}, {"cases", t.cases}, {"passed", t.passed}, {"failed", t.failed()}});
  auto& ws = j["witnesses"] = nlohmann::ordered_json::array();
  for (const auto& w : r.witnesses) ws.push_back(to_json(w));
  auto& pairs = j["qr_pairs"] = nlohmann::ordered_json::array();
  for (const auto& p : r.pairs) pairs.push_back(to_json(p));
  auto& sup = j["supplement"] = nlohmann::ordered_json::array();
  for (const auto& s : r.supplements) sup.push_back(to_json(s));
  j["all_passed"] = r.all_passed();
  return j;
}

inline void write_pairs(std::ostream& os, std::span<const PairReport> pairs, OutputFormat fmt) {
  switch (fmt) {
    case OutputFormat::json: {
      nlohmann::ordered_json arr = nlohmann::ordered_json::array();
      for (const auto& p : pairs) arr.push_back(to_json(p));
      os << arr.dump(2) << '\n';
      return;
    }
    case OutputFormat::csv:
      os << "p,q,rec_pq,rec_qp,legendre_qp,legendre_pq,res,product_law_ok,congruence_ok\n";
      for (const auto& p : pairs)
        os << p.p << ',' << p.q << ',' << p.rec_pq << ',' << p.rec_qp << ','
           << to_int(p.legendre_qp) << ',' << to_int(p.legendre_pq) << ',' << p.res << ','
           << detail::bool_text(p.product_law_ok) << ',' << detail::bool_text(p.congruence_ok)
           << '\n';
      return;
    case OutputFormat::text: {
      std::size_t ok = 0;
      for (const auto& p : pairs) {
        ok += p.all_ok() ? 1 : 0;
        os << "(" << p.p << "," << p.q << ")  Rec(g_p,g_q)=" << p.rec_pq
           << " (q/p)=" << to_int(p.legendre_qp) << "  Rec(g_q,g_p)=" << p.rec_qp
           << " (p/q)=" << to_int(p.legendre_pq) << "  Res=" << p.res
           << (p.all_ok() ? "  ok" : "  FAIL") << '\n';
      }
      os << ok << "/" << pairs.size() << " pairs verified\n";
      return;
    }
  }
}

inline void write_supplements(std::ostream& os, std::span<const SupplementReport> reports,
                              OutputFormat fmt) {
  switch (fmt) {
    case OutputFormat::json: {
      nlohmann::ordered_json arr = nlohmann::ordered_json::array();
      for (const auto& r : reports) arr.push_back(to_json(r));
      os << arr.dump(2) << '\n';
      return;
    }
    case OutputFormat::csv:
      os << "p,rec_phi4,legendre_minus2,legendre_2,mod8_class,pattern_ok,thm_b_ok,congruence_ok\n";
      for (const auto& r : reports)
        os << r.p << ',' << r.rec_phi4 << ',' << to_int(r.legendre_minus2) << ','
           << to_int(r.legendre_2) << ',' << r.mod8_class << ',' << detail::bool_text(r.pattern_ok)
           << ',' << detail::bool_text(r.thm_b_ok) << ',' << detail::bool_text(r.congruence_ok)
           << '\n';
      return;
    case OutputFormat::text: {
      std::size_t ok = 0;
      for (const auto& r : reports) {
        ok += r.all_ok() ? 1 : 0;
        os << "p=" << r.p << " (p mod 8 = " << r.mod8_class << ")  Rec(Phi4,g_p)=" << r.rec_phi4
           << " (-2/p)=" << to_int(r.legendre_minus2) << " (2/p)=" << to_int(r.legendre_2)
           << (r.all_ok() ? "  ok" : "  FAIL") << '\n';
      }
      os << ok << "/" << reports.size() << " primes verified\n";
      return;
    }
  }
}

inline void write_suite(std::ostream& os, const SuiteReport& r, OutputFormat fmt) {
  switch (fmt) {
    case OutputFormat::json:
      os << to_json(r).dump(2) << '\n';
      return;
    case OutputFormat::csv:
      os << "identity,cases,passed,failed\n";
      for (const auto& t : r.tallies)
        os << t.name << ',' << t.cases << ',' << t.passed << ',' << t.failed() << '\n';
      return;
    case OutputFormat::text:
      os << "seed " << r.config.seed << ", " << r.config.trials << " trials, degree cap "
         << r.config.degree_cap << ", coefficient cap " << r.config.coeff_cap << ", primes up to "
         << r.config.prime_cap << "\n";
      for (const auto& t : r.tallies)
        os << (t.failed() == 0 ? "  pass  " : "  FAIL  ") << t.name << "  " << t.passed << "/"
           << t.cases << '\n';
      for (const auto& w : r.witnesses) {
        os << "witness " << w.identity << " #" << w.trial << ":";
        for (const auto& [k, v] : w.inputs) os << " " << k << "=" << v;
        os << "\n    lhs: " << w.lhs << "\n    rhs: " << w.rhs << '\n';
      }
      os << (r.all_passed() ? "all identities hold\n" : "verification FAILED\n");
      return;
  }
}

}  // namespace recip
