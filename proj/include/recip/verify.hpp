#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <functional>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "recip/numtheory.hpp"
#include "recip/parse.hpp"
#include "recip/reciprocal.hpp"
#include "recip/resultant.hpp"

namespace recip {

// ---------------------------------------------------------------------------
// Per-prime reports

struct PairReport {
  std::uint64_t p = 0;
  std::uint64_t q = 0;
  Integer rec_pq;  // Rec(g_p, g_q), raw
  Integer rec_qp;  // Rec(g_q, g_p), raw
  Sign legendre_qp = Sign::positive;
  Sign legendre_pq = Sign::positive;
  Integer res;  // Res(g_p, g_q)
  bool product_law_ok = false;
  bool congruence_ok = false;

  bool rec_pq_ok() const { return rec_pq == to_int(legendre_qp); }
  bool rec_qp_ok() const { return rec_qp == to_int(legendre_pq); }
  bool res_ok() const { return res == 1; }
  bool res_square_ok() const { return res == rec_pq * rec_pq; }
  bool all_ok() const {
    return rec_pq_ok() && rec_qp_ok() && res_ok() && res_square_ok() && product_law_ok &&
           congruence_ok;
  }
};

struct SupplementReport {
  std::uint64_t p = 0;
  Integer rec_phi4;  // Rec(Phi_4, g_p), raw
  Sign legendre_minus2 = Sign::positive;
  Sign legendre_2 = Sign::positive;
  unsigned mod8_class = 0;
  bool pattern_ok = false;
  bool thm_b_ok = false;
  bool congruence_ok = false;

  bool rec_ok() const { return rec_phi4 == to_int(legendre_minus2); }
  bool all_ok() const { return rec_ok() && pattern_ok && thm_b_ok && congruence_ok; }
};

inline IntPoly phi4() { return IntPoly{1, 0, 1}; }

/// Checks Rec(g_p, g_q) = (q/p), Rec(g_q, g_p) = (p/q), Res(g_p, g_q) = 1,
/// Res = Rec^2, the product law, and the mod-p congruence chain
///   Rec(g_p, g_q) = Rec((x-1)^(p-1), g_q) = q^((p-1)/2)   (mod p)
/// together with its mirror image mod q.
inline PairReport verify_qr_pair(const OddPrime& p, const OddPrime& q,
                                 const MatrixHook& hook = {}) {
  if (p == q) throw precondition_error("verify_qr_pair needs distinct primes");
  const std::uint64_t pv = p.value();
  const std::uint64_t qv = q.value();
  const IntPoly gp = make_gn(pv);
  const IntPoly gq = make_gn(qv);

  PairReport r;
  r.p = pv;
  r.q = qv;
  r.rec_pq = reciprocant(gp, gq, hook);
  r.rec_qp = reciprocant(gq, gp, hook);
  r.legendre_qp = legendre_euler(Integer(qv), p);
  r.legendre_pq = legendre_euler(Integer(pv), q);
  r.res = resultant_barnett(gp, gq, hook);

  // Res(g_q^#, g_p^#) = (-1)^{deg g_p^# deg g_q^#} Res(g_p^#, g_q^#)
  const Sign expected = minus_one_pow(((pv - 1) / 2) * ((qv - 1) / 2));
  r.product_law_ok = r.rec_pq * r.rec_qp == to_int(expected) &&
                     r.legendre_pq * r.legendre_qp == expected;

  const auto congruence = [&hook](const OddPrime& mod, const IntPoly& g_mod, const IntPoly& g_other,
                                  std::uint64_t other, const Integer& rec, Sign legendre) {
    const Modulus n = mod.modulus();
    const IntPoly shifted = make_power_of_linear(1, mod.value() - 1);
    if (poly_reduce_mod(g_mod, n) != poly_reduce_mod(shifted, n)) return false;
    const Integer via_shift = n.reduce(reciprocant(shifted, g_other, hook));
    const Integer power = mod_pow(Integer(other), (mod.value() - 1) / 2, n);
    return n.reduce(rec) == via_shift && via_shift == power &&
           power == n.reduce(Integer(to_int(legendre)));
  };
  r.congruence_ok = congruence(p, gp, gq, qv, r.rec_pq, r.legendre_qp) &&
                    congruence(q, gq, gp, pv, r.rec_qp, r.legendre_pq);
  return r;
}

/// Checks Rec(Phi_4, g_p) = (-2/p), the mod-8 pattern for (-2/p), and
/// (2/p) = (-1)^((p^2-1)/8) both directly and as (-1/p)(-2/p).
inline SupplementReport verify_supplement(const OddPrime& p, const MatrixHook& hook = {}) {
  const std::uint64_t pv = p.value();
  const IntPoly gp = make_gn(pv);

  SupplementReport r;
  r.p = pv;
  r.rec_phi4 = reciprocant(phi4(), gp, hook);
  r.legendre_minus2 = legendre_euler(Integer(-2), p);
  r.legendre_2 = legendre_euler(Integer(2), p);
  r.mod8_class = static_cast<unsigned>(pv % 8);

  const Sign pattern =
      (r.mod8_class == 1 || r.mod8_class == 3) ? Sign::positive : Sign::negative;
  r.pattern_ok = r.rec_phi4 == to_int(pattern) && r.legendre_minus2 == pattern;

  const Sign minus1 = legendre_euler(Integer(-1), p);
  const Sign direct = minus_one_pow((pv * pv - 1) / 8);
  r.thm_b_ok = r.legendre_2 == direct && r.legendre_2 == minus1 * r.legendre_minus2;

  // Rec(Phi_4, g_p) = Rec(Phi_4, (x-1)^(p-1)) = (-2)^((p-1)/2)   (mod p)
  const Modulus n = p.modulus();
  const IntPoly shifted = make_power_of_linear(1, pv - 1);
  const Integer via_shift = n.reduce(reciprocant(phi4(), shifted, hook));
  const Integer power = mod_pow(Integer(-2), (pv - 1) / 2, n);
  r.congruence_ok = poly_reduce_mod(gp, n) == poly_reduce_mod(shifted, n) &&
                    n.reduce(r.rec_phi4) == via_shift && via_shift == power &&
                    power == n.reduce(Integer(to_int(r.legendre_minus2)));
  return r;
}

/// Odd primes in [3, cap], ascending.
inline std::vector<OddPrime> odd_primes_up_to(std::uint64_t cap) {
  std::vector<OddPrime> out;
  for (std::uint64_t n = 3; n <= cap; n += 2)
    if (is_prime(n)) out.emplace_back(n);
  return out;
}

// ---------------------------------------------------------------------------
// Parallel map with schedule-independent output order

template <typename Result, typename Fn>
std::vector<Result> parallel_map(std::size_t count, unsigned jobs, Fn&& fn) {
  std::vector<Result> out(count);
  if (jobs <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) out[i] = fn(i);
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr first_error;
  std::atomic<bool> failed{false};
  std::vector<std::thread> workers;
  const unsigned n_workers = static_cast<unsigned>(std::min<std::size_t>(jobs, count));
  workers.reserve(n_workers);
  for (unsigned w = 0; w < n_workers; ++w) {
    workers.emplace_back([&] {
      for (std::size_t i; (i = next.fetch_add(1)) < count;) {
        try {
          out[i] = fn(i);
        } catch (...) {
          if (!failed.exchange(true)) first_error = std::current_exception();
          return;
        }
      }
    });
  }
  for (auto& t : workers) t.join();
  if (first_error) std::rethrow_exception(first_error);
  return out;
}

/// verify_qr_pair over all distinct odd primes p < q <= cap, sorted by (p, q).
inline std::vector<PairReport> verify_qr_range(std::uint64_t cap, unsigned jobs = 1,
                                               const MatrixHook& hook = {}) {
  const auto primes = odd_primes_up_to(cap);
  std::vector<std::pair<OddPrime, OddPrime>> pairs;
  for (std::size_t i = 0; i < primes.size(); ++i)
    for (std::size_t j = i + 1; j < primes.size(); ++j) pairs.emplace_back(primes[i], primes[j]);
  return parallel_map<PairReport>(pairs.size(), jobs, [&](std::size_t i) {
    return verify_qr_pair(pairs[i].first, pairs[i].second, hook);
  });
}

inline std::vector<SupplementReport> verify_supplement_range(std::uint64_t cap,
                                                             unsigned jobs = 1,
                                                             const MatrixHook& hook = {}) {
  const auto primes = odd_primes_up_to(cap);
  return parallel_map<SupplementReport>(primes.size(), jobs, [&](std::size_t i) {
    return verify_supplement(primes[i], hook);
  });
}

// ---------------------------------------------------------------------------
// Identity suite

struct SuiteConfig {
  std::uint64_t seed = 42;
  std::size_t trials = 200;
  std::size_t degree_cap = 8;
  long coeff_cap = 9;
  std::uint64_t prime_cap = 97;
  unsigned jobs = 1;
  // Test hook: perturb entry (0, 0) of every g(C_f) before its determinant.
  bool inject_fault = false;
};

struct Witness {
  std::string identity;
  std::size_t trial = 0;
  std::vector<std::pair<std::string, std::string>> inputs;
  std::string lhs;
  std::string rhs;

  friend bool operator==(const Witness&, const Witness&) = default;
};

struct IdentityTally {
  std::string name;
  std::size_t cases = 0;
  std::size_t passed = 0;
  std::size_t failed() const { return cases - passed; }
};

struct SuiteReport {
  SuiteConfig config;
  std::vector<IdentityTally> tallies;
  std::vector<Witness> witnesses;
  std::vector<PairReport> pairs;
  std::vector<SupplementReport> supplements;

  bool all_passed() const { return witnesses.empty(); }

  const IdentityTally* tally(std::string_view name) const {
    for (const auto& t : tallies)
      if (t.name == name) return &t;
    return nullptr;
  }
};

namespace detail {

/// Each (identity, trial) owns an independent stream derived from the seed,
/// so results do not depend on evaluation order.
class TrialRng {
 public:
  TrialRng(std::uint64_t seed, std::size_t identity, std::size_t trial)
      : engine_(mix(mix(mix(seed) ^ (identity + 1)) ^ (trial + 1))) {}

  /// Uniform-ish integer in [lo, hi]; modulo bias is irrelevant here.
  long between(long lo, long hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long>(engine_() % span);
  }

  std::size_t upto(std::size_t hi) { return static_cast<std::size_t>(between(0, static_cast<long>(hi))); }

 private:
  static std::uint64_t mix(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  std::mt19937_64 engine_;
};

inline IntPoly random_monic(TrialRng& rng, std::size_t degree, long coeff_cap) {
  std::vector<Integer> c(degree + 1);
  for (std::size_t k = 0; k < degree; ++k) c[k] = rng.between(-coeff_cap, coeff_cap);
  c[degree] = 1;
  return IntPoly(std::move(c));
}

inline IntPoly random_poly(TrialRng& rng, std::size_t degree, long coeff_cap) {
  std::vector<Integer> c(degree + 1);
  for (auto& a : c) a = rng.between(-coeff_cap, coeff_cap);
  return IntPoly(std::move(c));
}

struct Outcome {
  bool passed = true;
  std::vector<std::pair<std::string, std::string>> inputs;
  std::string lhs;
  std::string rhs;
  std::optional<PairReport> pair;
  std::optional<SupplementReport> supplement;
};

inline Outcome compare(std::string lhs, std::string rhs,
                       std::vector<std::pair<std::string, std::string>> inputs) {
  Outcome o;
  o.passed = lhs == rhs;
  o.lhs = std::move(lhs);
  o.rhs = std::move(rhs);
  o.inputs = std::move(inputs);
  return o;
}

struct TrialContext {
  const SuiteConfig& config;
  std::size_t trial;
  TrialRng rng;
  const MatrixHook& hook;
};

struct Identity {
  std::string name;
  std::function<std::size_t(const SuiteConfig&)> cases;
  std::function<Outcome(TrialContext&)> run;
};

inline std::vector<std::size_t> odd_numbers_up_to(std::size_t cap) {
  std::vector<std::size_t> v;
  for (std::size_t n = 1; n <= cap; n += 2) v.push_back(n);
  return v;
}

inline std::vector<std::pair<std::size_t, std::size_t>> g_grid(std::size_t cap) {
  std::vector<std::pair<std::size_t, std::size_t>> v;
  for (std::size_t m = 1; m <= cap; ++m)
    for (std::size_t n = m + 1; n <= cap; ++n) v.emplace_back(m, n);
  return v;
}

inline std::vector<std::pair<std::size_t, std::size_t>> coprime_grid(std::size_t cap) {
  auto v = g_grid(cap);
  std::erase_if(v, [](const auto& mn) { return std::gcd(mn.first, mn.second) != 1; });
  return v;
}

inline const std::vector<OddPrime>& cached_primes(std::uint64_t cap) {
  static const std::vector<OddPrime> oracle = odd_primes_up_to(200);
  static const std::vector<OddPrime> wide = odd_primes_up_to(10000);
  if (cap == 200) return oracle;
  if (cap == 10000) return wide;
  throw precondition_error("no cached prime table for this cap");
}

constexpr std::size_t kSharpValueCap = 999;

// g_n^# for odd n <= kSharpValueCap, indexed by (n - 1) / 2.
inline const std::vector<IntPoly>& sharp_table() {
  static const std::vector<IntPoly> table = gn_sharp_sequence(kSharpValueCap);
  return table;
}

constexpr std::size_t kGridCap = 40;
constexpr std::size_t kSharpCompareCap = 99;
constexpr std::size_t kHnCap = 20;
constexpr std::size_t kLucasCap = 41;
constexpr std::size_t kGnCap = 1000;
constexpr std::uint64_t kLegendreOracleCap = 200;
constexpr std::uint64_t kMinusOneCap = 10000;
constexpr std::uint64_t kResidueModuli[] = {2, 3, 7, 12, 97};

inline const std::vector<Identity>& identities() {
  static const std::vector<Identity> table = [] {
    std::vector<Identity> t;
    const auto per_trial = [](const SuiteConfig& c) { return c.trials; };
    const auto hook_res = [](const TrialContext& ctx, const IntPoly& f, const IntPoly& g) {
      return resultant_barnett(f, g, ctx.hook);
    };

    // --- polynomial arithmetic -------------------------------------------
    t.push_back({"gn_times_x_minus_1", [](const SuiteConfig&) { return kGnCap; },
                 [](TrialContext& ctx) {
                   const std::size_t n = ctx.trial + 1;
                   IntPoly expected = IntPoly::monomial(n) - IntPoly{1};
                   const IntPoly gn = make_gn(n);
                   const bool at_one = poly_eval(gn, 1) == Integer(n);
                   return compare(format_poly(gn * IntPoly{-1, 1}) + (at_one ? "" : " [g_n(1) != n]"),
                                  format_poly(expected), {{"n", std::to_string(n)}});
                 }});
    t.push_back({"gp_mod_p", [](const SuiteConfig&) { return odd_primes_up_to(97).size() + 1; },
                 [](TrialContext& ctx) {
                   const std::uint64_t p = ctx.trial == 0 ? 2 : odd_primes_up_to(97)[ctx.trial - 1].value();
                   const Modulus n{Integer(p)};
                   return compare(format_poly(poly_reduce_mod(make_power_of_linear(1, p - 1), n)),
                                  format_poly(poly_reduce_mod(make_gn(p), n)),
                                  {{"p", std::to_string(p)}});
                 }});
    t.push_back({"divrem_monic", per_trial, [](TrialContext& ctx) {
                   const auto& c = ctx.config;
                   const IntPoly f = random_monic(ctx.rng, 1 + ctx.rng.upto(c.degree_cap - 1), c.coeff_cap);
                   const IntPoly g = random_poly(ctx.rng, ctx.rng.upto(2 * c.degree_cap), c.coeff_cap);
                   const DivRem dr = poly_divrem_monic(g, f);
                   const bool small = dr.remainder.is_zero() || dr.remainder.degree() < f.degree();
                   return compare(format_poly(f * dr.quotient + dr.remainder) + (small ? "" : " [deg r >= deg f]"),
                                  format_poly(g), {{"f", format_poly(f)}, {"g", format_poly(g)}});
                 }});

    // --- linear algebra ----------------------------------------------------
    t.push_back({"companion_horner", per_trial, [](TrialContext& ctx) {
                   const auto& c = ctx.config;
                   const IntPoly f = random_monic(ctx.rng, ctx.rng.upto(c.degree_cap), c.coeff_cap);
                   const IntPoly g = random_poly(ctx.rng, ctx.rng.upto(c.degree_cap), c.coeff_cap);
                   const bool same = companion_poly_eval(g, f) == matrix_poly_eval(g, companion_matrix(f));
                   const bool cayley = matrix_poly_eval(f, companion_matrix(f)).is_zero();
                   return compare(same && cayley ? "agree" : "differ", "agree",
                                  {{"f", format_poly(f)}, {"g", format_poly(g)}});
                 }});

    // --- resultant identities ---------------------------------------------
    t.push_back({"res1", per_trial, [hook_res](TrialContext& ctx) {
                   const auto& c = ctx.config;
                   const std::size_t k = ctx.rng.upto(c.degree_cap);
                   IntPoly f{1};
                   std::vector<Integer> roots;
                   for (std::size_t i = 0; i < k; ++i) {
                     roots.emplace_back(ctx.rng.between(-c.coeff_cap, c.coeff_cap));
                     f = f * IntPoly(std::vector<Integer>{-roots.back(), Integer(1)});
                   }
                   const IntPoly g = random_monic(ctx.rng, ctx.rng.upto(c.degree_cap), c.coeff_cap);
                   Integer product = 1;
                   for (const auto& a : roots) product *= poly_eval(g, a);
                   return compare(hook_res(ctx, f, g).str(), product.str(),
                                  {{"f", format_poly(f)}, {"g", format_poly(g)}});
                 }});
    t.push_back({"res2", per_trial, [hook_res](TrialContext& ctx) {
                   const auto& c = ctx.config;
                   const IntPoly f = random_monic(ctx.rng, ctx.rng.upto(c.degree_cap), c.coeff_cap);
                   const IntPoly g = random_monic(ctx.rng, ctx.rng.upto(c.degree_cap), c.coeff_cap);
                   Integer rhs = hook_res(ctx, f, g);
                   if ((f.degree() * g.degree()) % 2 == 1) rhs = -rhs;
                   return compare(hook_res(ctx, g, f).str(), rhs.str(),
                                  {{"f", format_poly(f)}, {"g", format_poly(g)}});
                 }});
    t.push_back({"res3", per_trial, [hook_res](TrialContext& ctx) {
                   const auto& c = ctx.config;
                   const IntPoly f = random_monic(ctx.rng, ctx.rng.upto(c.degree_cap), c.coeff_cap);
                   const IntPoly g = random_monic(ctx.rng, ctx.rng.upto(c.degree_cap), c.coeff_cap);
                   const Integer over_z = hook_res(ctx, f, g);
                   std::string lhs, rhs;
                   for (std::uint64_t n : kResidueModuli) {
                     const Modulus mod{Integer(n)};
                     lhs += mod.reduce(over_z).str() + " ";
                     rhs += resultant_mod(f, g, mod).str() + " ";
                   }
                   return compare(lhs, rhs, {{"f", format_poly(f)}, {"g", format_poly(g)}});
                 }});
    t.push_back({"res4", per_trial, [](TrialContext& ctx) {
                   const auto& c = ctx.config;
                   const IntPoly f = random_monic(ctx.rng, 1 + ctx.rng.upto(c.degree_cap - 1), c.coeff_cap);
                   const IntPoly q = random_monic(ctx.rng, ctx.rng.upto(c.degree_cap), c.coeff_cap);
                   const IntPoly r = random_monic(ctx.rng, ctx.rng.upto(f.degree() - 1), c.coeff_cap);
                   const Res4Check chk = check_res4(f, q, r, ctx.hook);
                   return compare(chk.res_fg.str(), chk.res_fr.str(),
                                  {{"f", format_poly(f)}, {"q", format_poly(q)}, {"r", format_poly(r)}});
                 }});
    t.push_back({"barnett_sylvester", per_trial, [hook_res](TrialContext& ctx) {
                   const auto& c = ctx.config;
                   const IntPoly f = random_monic(ctx.rng, ctx.rng.upto(c.degree_cap), c.coeff_cap);
                   const IntPoly g = random_monic(ctx.rng, ctx.rng.upto(c.degree_cap), c.coeff_cap);
                   return compare(hook_res(ctx, f, g).str(), resultant_sylvester(f, g).str(),
                                  {{"f", format_poly(f)}, {"g", format_poly(g)}});
                 }});
    t.push_back({"g_grid", [](const SuiteConfig&) { return g_grid(kGridCap).size(); },
                 [hook_res](TrialContext& ctx) {
                   const auto [m, n] = g_grid(kGridCap)[ctx.trial];
                   const Integer expected = std::gcd(m, n) == 1 ? 1 : 0;
                   return compare(hook_res(ctx, make_gn(m), make_gn(n)).str(), expected.str(),
                                  {{"m", std::to_string(m)}, {"n", std::to_string(n)}});
                 }});
    t.push_back({"gchain", [](const SuiteConfig&) { return coprime_grid(kGridCap).size(); },
                 [hook_res](TrialContext& ctx) {
                   const auto [m, n] = coprime_grid(kGridCap)[ctx.trial];
                   const ChainResult chain = gchain_resultant(m, n);
                   // the chain is never longer than the integer Euclidean algorithm
                   std::size_t steps = 0;
                   for (std::size_t a = m, b = n; a != 0; ++steps) b = std::exchange(a, b % a);
                   const bool short_enough = chain.chain.pairs.size() <= steps;
                   return compare(chain.value.str() + (short_enough ? "" : " [chain too long]"),
                                  hook_res(ctx, make_gn(m), make_gn(n)).str(),
                                  {{"m", std::to_string(m)}, {"n", std::to_string(n)}});
                 }});

    // --- trace polynomials and reciprocants ---------------------------------
    t.push_back({"trace_roundtrip", per_trial, [](TrialContext& ctx) {
                   const auto& c = ctx.config;
                   const std::size_t m = ctx.rng.upto(c.degree_cap);
                   const IntPoly h = random_monic(ctx.rng, m, c.coeff_cap);
                   const IntPoly g = expand_trace(h, m);
                   const bool back = expand_trace(trace_poly(g), m) == g && is_reciprocal(g);
                   return compare(format_poly(trace_poly(g)) + (back ? "" : " [expand mismatch]"),
                                  format_poly(h), {{"h", format_poly(h)}, {"m", std::to_string(m)}});
                 }});
    t.push_back({"trace_product_formula", per_trial, [](TrialContext& ctx) {
                   const auto& c = ctx.config;
                   const std::size_t m = ctx.rng.upto(c.degree_cap);
                   // Even trials: units +-1 over Z. Odd trials: random units mod a prime.
                   constexpr std::uint64_t kPrimes[] = {3, 5, 7, 11, 13, 97};
                   const bool over_z = ctx.trial % 2 == 0;
                   const std::uint64_t p = over_z ? 0 : kPrimes[ctx.rng.upto(std::size(kPrimes) - 1)];
                   IntPoly g{1};
                   IntPoly expected{1};
                   std::string alphas;
                   for (std::size_t i = 0; i < m; ++i) {
                     Integer a, inv;
                     if (over_z) {
                       a = ctx.rng.between(0, 1) == 0 ? 1 : -1;
                       inv = a;
                     } else {
                       const Modulus mod{Integer(p)};
                       a = ctx.rng.between(1, static_cast<long>(p) - 1);
                       inv = mod_pow(a, p - 2, mod);
                     }
                     alphas += a.str() + " ";
                     g = g * IntPoly(std::vector<Integer>{-a, Integer(1)}) *
                         IntPoly(std::vector<Integer>{-inv, Integer(1)});
                     expected = expected * IntPoly(std::vector<Integer>{-(a + inv), Integer(1)});
                   }
                   IntPoly lhs;
                   if (over_z) {
                     lhs = trace_poly(g);
                   } else {
                     const Modulus mod{Integer(p)};
                     lhs = poly_reduce_mod(trace_poly(poly_reduce_mod(g, mod)), mod);
                     expected = poly_reduce_mod(expected, mod);
                   }
                   return compare(format_poly(lhs), format_poly(expected),
                                  {{"alphas", alphas}, {"modulus", std::to_string(p)}});
                 }});
    t.push_back({"res_square", per_trial, [](TrialContext& ctx) {
                   const auto& c = ctx.config;
                   const std::size_t m1 = ctx.rng.upto(c.degree_cap);
                   const std::size_t m2 = ctx.rng.upto(c.degree_cap);
                   const IntPoly f = expand_trace(random_monic(ctx.rng, m1, c.coeff_cap), m1);
                   const IntPoly g = expand_trace(random_monic(ctx.rng, m2, c.coeff_cap), m2);
                   const Integer rec = reciprocant(f, g, ctx.hook);
                   return compare(resultant_barnett(f, g, ctx.hook).str(), Integer(rec * rec).str(),
                                  {{"f", format_poly(f)}, {"g", format_poly(g)}});
                 }});
    t.push_back({"rec_mod_n", per_trial, [](TrialContext& ctx) {
                   const auto& c = ctx.config;
                   const long n = ctx.rng.between(2, 50);
                   const Modulus mod{Integer(n)};
                   const std::size_t m1 = ctx.rng.upto(c.degree_cap);
                   const std::size_t m2 = ctx.rng.upto(c.degree_cap);
                   const IntPoly g1 = expand_trace(random_monic(ctx.rng, m1, c.coeff_cap), m1);
                   IntPoly bump;
                   if (m1 > 0) bump = expand_trace(random_poly(ctx.rng, m1 - 1, c.coeff_cap), m1);
                   const IntPoly g2 = g1 + Integer(n) * bump;
                   const IntPoly h = expand_trace(random_monic(ctx.rng, m2, c.coeff_cap), m2);
                   const std::string lhs = mod.reduce(reciprocant(g1, h, ctx.hook)).str() + " " +
                                           mod.reduce(reciprocant(h, g1, ctx.hook)).str();
                   const std::string rhs = mod.reduce(reciprocant(g2, h, ctx.hook)).str() + " " +
                                           mod.reduce(reciprocant(h, g2, ctx.hook)).str();
                   return compare(lhs, rhs,
                                  {{"n", std::to_string(n)}, {"g1", format_poly(g1)},
                                   {"g2", format_poly(g2)}, {"h", format_poly(h)}});
                 }});
    t.push_back({"hn_identity", [](const SuiteConfig&) { return kHnCap + 1; },
                 [](TrialContext& ctx) {
                   const std::size_t n = ctx.trial;
                   return compare(format_poly(expand_trace(hn_poly(n), n)),
                                  format_poly(IntPoly::monomial(2 * n) + IntPoly{1}),
                                  {{"n", std::to_string(n)}});
                 }});
    t.push_back({"gn_sharp_sum", [](const SuiteConfig&) { return kHnCap + 1; },
                 [](TrialContext& ctx) {
                   const std::size_t n = ctx.trial;
                   IntPoly sum{1};
                   for (std::size_t k = 1; k <= n; ++k) sum = sum + hn_poly(k);
                   return compare(format_poly(gn_sharp(2 * n + 1)), format_poly(sum),
                                  {{"n", std::to_string(n)}});
                 }});
    t.push_back({"lucas_relation", [](const SuiteConfig&) { return odd_numbers_up_to(kLucasCap).size(); },
                 [](TrialContext& ctx) {
                   const std::size_t n = odd_numbers_up_to(kLucasCap)[ctx.trial];
                   return compare(format_poly(poly_shift(lucas_h(n), -2)), format_poly(gn_sharp(n)),
                                  {{"n", std::to_string(n)}});
                 }});
    t.push_back({"gn_sharp_vs_trace",
                 [](const SuiteConfig&) { return odd_numbers_up_to(kSharpCompareCap).size(); },
                 [](TrialContext& ctx) {
                   const std::size_t n = odd_numbers_up_to(kSharpCompareCap)[ctx.trial];
                   return compare(format_poly(trace_poly(make_gn(n))), format_poly(gn_sharp(n)),
                                  {{"n", std::to_string(n)}});
                 }});
    t.push_back({"gn_sharp_at_2",
                 [](const SuiteConfig&) { return odd_numbers_up_to(kSharpValueCap).size(); },
                 [](TrialContext& ctx) {
                   const std::size_t n = odd_numbers_up_to(kSharpValueCap)[ctx.trial];
                   return compare(poly_eval(sharp_table()[(n - 1) / 2], 2).str(), std::to_string(n),
                                  {{"n", std::to_string(n)}});
                 }});
    t.push_back({"gn_sharp_at_0",
                 [](const SuiteConfig&) { return odd_numbers_up_to(kSharpValueCap).size(); },
                 [](TrialContext& ctx) {
                   const std::size_t n = odd_numbers_up_to(kSharpValueCap)[ctx.trial];
                   const int expected = (n % 8 == 1 || n % 8 == 3) ? 1 : -1;
                   return compare(poly_eval(sharp_table()[(n - 1) / 2], 0).str(), std::to_string(expected),
                                  {{"n", std::to_string(n)}});
                 }});

    // --- Legendre symbol ------------------------------------------------------
    t.push_back({"euler_vs_bruteforce",
                 [](const SuiteConfig&) { return cached_primes(kLegendreOracleCap).size(); },
                 [](TrialContext& ctx) {
                   const OddPrime p = cached_primes(kLegendreOracleCap)[ctx.trial];
                   std::string lhs, rhs;
                   for (std::uint64_t a = 1; a < p.value(); ++a) {
                     lhs += to_int(legendre_euler(Integer(a), p)) > 0 ? '+' : '-';
                     rhs += to_int(legendre_bruteforce(Integer(a), p)) > 0 ? '+' : '-';
                   }
                   return compare(lhs, rhs, {{"p", std::to_string(p.value())}});
                 }});
    t.push_back({"legendre_multiplicative", per_trial, [](TrialContext& ctx) {
                   const auto& primes = cached_primes(kLegendreOracleCap);
                   const OddPrime p = primes[ctx.rng.upto(primes.size() - 1)];
                   const long pv = static_cast<long>(p.value());
                   const long a = ctx.rng.between(1, pv - 1) + pv * ctx.rng.between(-3, 3);
                   const long b = ctx.rng.between(1, pv - 1) + pv * ctx.rng.between(-3, 3);
                   const Sign lhs = legendre_euler(Integer(a) * b, p);
                   const Sign rhs = legendre_euler(Integer(a), p) * legendre_euler(Integer(b), p);
                   return compare(std::to_string(to_int(lhs)), std::to_string(to_int(rhs)),
                                  {{"a", std::to_string(a)}, {"b", std::to_string(b)},
                                   {"p", std::to_string(pv)}});
                 }});
    t.push_back({"minus_one_law", [](const SuiteConfig&) { return cached_primes(kMinusOneCap).size(); },
                 [](TrialContext& ctx) {
                   const OddPrime p = cached_primes(kMinusOneCap)[ctx.trial];
                   return compare(std::to_string(to_int(legendre_euler(Integer(-1), p))),
                                  std::to_string(to_int(minus_one_pow((p.value() - 1) / 2))),
                                  {{"p", std::to_string(p.value())}});
                 }});

    // --- the theorems ---------------------------------------------------------
    t.push_back({"qr_pair",
                 [](const SuiteConfig& c) {
                   const std::size_t k = odd_primes_up_to(c.prime_cap).size();
                   return k * (k - (k > 0 ? 1 : 0)) / 2;
                 },
                 [](TrialContext& ctx) {
                   const auto primes = odd_primes_up_to(ctx.config.prime_cap);
                   std::size_t idx = ctx.trial, i = 0;
                   while (idx >= primes.size() - i - 1) idx -= primes.size() - i++ - 1;
                   const OddPrime p = primes[i];
                   const OddPrime q = primes[i + 1 + idx];
                   PairReport r = verify_qr_pair(p, q, ctx.hook);
                   const std::string lhs = r.rec_pq.str() + " " + r.rec_qp.str() + " " + r.res.str() + " " +
                                           (r.product_law_ok ? "law" : "no-law") + " " +
                                           (r.congruence_ok ? "cong" : "no-cong");
                   const std::string rhs = std::to_string(to_int(r.legendre_qp)) + " " +
                                           std::to_string(to_int(r.legendre_pq)) + " " +
                                           Integer(r.rec_pq * r.rec_pq).str() + " law cong";
                   Outcome o = compare(lhs, rhs, {{"p", std::to_string(p.value())},
                                                  {"q", std::to_string(q.value())}});
                   o.passed = o.passed && r.all_ok();
                   o.pair = std::move(r);
                   return o;
                 }});
    t.push_back({"supplement", [](const SuiteConfig& c) { return odd_primes_up_to(c.prime_cap).size(); },
                 [](TrialContext& ctx) {
                   const OddPrime p = odd_primes_up_to(ctx.config.prime_cap)[ctx.trial];
                   SupplementReport r = verify_supplement(p, ctx.hook);
                   const int pattern = (r.mod8_class == 1 || r.mod8_class == 3) ? 1 : -1;
                   const std::string lhs = r.rec_phi4.str() + " " +
                                           (r.thm_b_ok ? "thm-b" : "no-thm-b") + " " +
                                           (r.congruence_ok ? "cong" : "no-cong");
                   const std::string rhs = std::to_string(to_int(r.legendre_minus2)) + " thm-b cong";
                   Outcome o = compare(lhs, rhs, {{"p", std::to_string(p.value())}});
                   o.passed = o.passed && r.all_ok() && pattern == to_int(r.legendre_minus2);
                   o.supplement = std::move(r);
                   return o;
                 }});
    return t;
  }();
  return table;
}

inline MatrixHook suite_hook(const SuiteConfig& config) {
  if (!config.inject_fault) return {};
  return [](IntMatrix& m) {
    if (m.dim() > 0) m(0, 0) += 1;
  };
}

inline Outcome run_case(const Identity& id, std::size_t identity_index, const SuiteConfig& config,
                        std::size_t trial, const MatrixHook& hook) {
  TrialContext ctx{config, trial, TrialRng(config.seed, identity_index, trial), hook};
  try {
    return id.run(ctx);
  } catch (const std::exception& e) {
    Outcome o;
    o.passed = false;
    o.lhs = std::string("exception: ") + e.what();
    o.rhs = "no exception";
    return o;
  }
}

inline std::size_t identity_index(std::string_view name) {
  const auto& ids = identities();
  for (std::size_t i = 0; i < ids.size(); ++i)
    if (ids[i].name == name) return i;
  throw precondition_error("unknown identity '" + std::string(name) + "'");
}

}  // namespace detail

/// Names of every identity the suite checks, in report order.
inline std::vector<std::string> suite_identity_names() {
  std::vector<std::string> out;
  for (const auto& id : detail::identities()) out.push_back(id.name);
  return out;
}

/// Runs one identity over all of its cases. Witness order follows case
/// order whatever config.jobs is.
inline SuiteReport run_identity(const SuiteConfig& config, std::string_view name) {
  SuiteReport report;
  report.config = config;
  const std::size_t index = detail::identity_index(name);
  const auto& id = detail::identities()[index];
  const MatrixHook hook = detail::suite_hook(config);
  const std::size_t cases = id.cases(config);
  auto outcomes = parallel_map<detail::Outcome>(cases, config.jobs, [&](std::size_t trial) {
    return detail::run_case(id, index, config, trial, hook);
  });
  IdentityTally tally{id.name, cases, 0};
  for (std::size_t trial = 0; trial < cases; ++trial) {
    auto& o = outcomes[trial];
    if (o.passed)
      ++tally.passed;
    else
      report.witnesses.push_back({id.name, trial, std::move(o.inputs), std::move(o.lhs), std::move(o.rhs)});
    if (o.pair) report.pairs.push_back(std::move(*o.pair));
    if (o.supplement) report.supplements.push_back(std::move(*o.supplement));
  }
  report.tallies.push_back(std::move(tally));
  return report;
}

/// Runs every identity. Failures are recorded as witnesses, never thrown.
inline SuiteReport run_suite(const SuiteConfig& config) {
  if (config.trials < 1) throw precondition_error("suite needs at least one trial");
  if (config.degree_cap < 1) throw precondition_error("suite needs degree_cap >= 1");
  if (config.coeff_cap < 1) throw precondition_error("suite needs coeff_cap >= 1");
  if (config.prime_cap < 3) throw precondition_error("suite needs prime_cap >= 3");

  const auto& ids = detail::identities();
  const MatrixHook hook = detail::suite_hook(config);

  std::vector<std::pair<std::size_t, std::size_t>> work;
  std::vector<std::size_t> counts;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    counts.push_back(ids[i].cases(config));
    for (std::size_t trial = 0; trial < counts.back(); ++trial) work.emplace_back(i, trial);
  }
  auto outcomes = parallel_map<detail::Outcome>(work.size(), config.jobs, [&](std::size_t k) {
    const auto [i, trial] = work[k];
    return detail::run_case(ids[i], i, config, trial, hook);
  });

  SuiteReport report;
  report.config = config;
  for (std::size_t i = 0; i < ids.size(); ++i) report.tallies.push_back({ids[i].name, counts[i], 0});
  for (std::size_t k = 0; k < work.size(); ++k) {
    const auto [i, trial] = work[k];
    auto& o = outcomes[k];
    if (o.passed)
      ++report.tallies[i].passed;
    else
      report.witnesses.push_back({ids[i].name, trial, std::move(o.inputs), std::move(o.lhs), std::move(o.rhs)});
    if (o.pair) report.pairs.push_back(std::move(*o.pair));
    if (o.supplement) report.supplements.push_back(std::move(*o.supplement));
  }
  return report;
}

/// Re-runs the case behind a witness. Returns the fresh witness if it fails
/// again, std::nullopt if it now passes.
inline std::optional<Witness> replay_witness(const SuiteConfig& config, const Witness& w) {
  const std::size_t index = detail::identity_index(w.identity);
  const auto& id = detail::identities()[index];
  auto o = detail::run_case(id, index, config, w.trial, detail::suite_hook(config));
  if (o.passed) return std::nullopt;
  return Witness{w.identity, w.trial, std::move(o.inputs), std::move(o.lhs), std::move(o.rhs)};
}

}  // namespace recip
