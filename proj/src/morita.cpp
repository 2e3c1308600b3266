#include "casson/morita.hpp"

#include <string>
#include <unordered_map>

namespace casson {

namespace {

// First packed key whose smallest index is >= g. Since i < j < k, every key
// at or past this point is a pure-y triple, so the pure-y terms form a
// contiguous tail of the sorted term map.
PackedTriple pure_y_start(Genus g) {
  return static_cast<PackedTriple>(g.value()) << 16;
}

bool is_pure_x(Genus g, const BasisTriple& t) { return t.k < g.value(); }

struct Step {
  const TriVector* tau;  // the generator's image; sign applies it or its negative
  int sign;
  const Int* lambda;  // lambda of the signed letter
};

struct ResolvedLetter {
  const TriVector* tau;
  Int lambda_pos;
  Int lambda_neg;
};

// Resolves each distinct name once; unknown letters are rejected here.
std::vector<Step> resolve_word(const Word& w, const GeneratorTable& t, const Splitting& s,
                               std::unordered_map<std::string, ResolvedLetter>& cache) {
  if (t.genus() != s.genus) throw InputError("genus mismatch between table and splitting");
  std::vector<Step> plan;
  plan.reserve(w.letters().size());
  for (const auto& letter : w.letters()) {
    auto it = cache.find(letter.name);
    if (it == cache.end()) {
      const Generator& gen = t.at(letter.name);
      Int self = delta_f(gen.tau, gen.tau, s);
      it = cache
               .emplace(letter.name,
                        ResolvedLetter{&gen.tau, gen.lambda, Int(-gen.lambda + 2 * self)})
               .first;
    }
    const ResolvedLetter& r = it->second;
    plan.push_back(Step{r.tau, letter.sign,
                        letter.sign > 0 ? &r.lambda_pos : &r.lambda_neg});
  }
  return plan;
}

}  // namespace

std::map<std::array<int, 3>, Int> extract_x_coeffs(const TriVector& v) {
  const Genus g = v.genus();
  std::map<std::array<int, 3>, Int> out;
  for (const auto& [key, c] : v.terms()) {
    const auto t = unpack_triple(key);
    if (!is_pure_x(g, t)) continue;
    out.emplace(std::array<int, 3>{t.i + 1, t.j + 1, t.k + 1}, c);
  }
  return out;
}

std::map<std::array<int, 3>, Int> extract_y_coeffs(const TriVector& v) {
  const Genus g = v.genus();
  std::map<std::array<int, 3>, Int> out;
  for (auto it = v.terms().lower_bound(pure_y_start(g)); it != v.terms().end(); ++it) {
    const auto t = unpack_triple(it->first);
    out.emplace(std::array<int, 3>{t.i - g.value() + 1, t.j - g.value() + 1,
                                   t.k - g.value() + 1},
                it->second);
  }
  return out;
}

Int delta_f(const TriVector& tau_phi, const TriVector& tau_psi, const Splitting& s) {
  const Genus g = s.genus;
  if (tau_phi.genus() != g || tau_psi.genus() != g) {
    throw InputError("genus mismatch in delta_f");
  }
  const PackedTriple shift = pure_y_start(g);
  Int acc = 0;
  for (auto it = tau_phi.terms().lower_bound(shift); it != tau_phi.terms().end(); ++it) {
    // (i,j,k) pure-y in the first argument pairs with the same-index pure-x
    // triple in the second; the packed x key is the y key minus g per slot.
    const PackedTriple x_key = it->first - (shift | (shift >> 8) | (shift >> 16));
    auto jt = tau_psi.terms().find(x_key);
    if (jt != tau_psi.terms().end()) acc += it->second * jt->second;
  }
  return acc;
}

Int compose_lambda(const Int& lam_phi, const Int& lam_psi, const TriVector& tau_phi,
                   const TriVector& tau_psi, const Splitting& s) {
  return lam_phi + lam_psi + 2 * delta_f(tau_phi, tau_psi, s);
}

Int letter_lambda(const GeneratorTable& t, const Letter& letter, const Splitting& s) {
  if (t.genus() != s.genus) throw InputError("genus mismatch between table and splitting");
  const Generator& gen = t.at(letter.name);
  if (letter.sign > 0) return gen.lambda;
  return -gen.lambda + 2 * delta_f(gen.tau, gen.tau, s);
}

Int accumulate_naive(const Word& w, const GeneratorTable& t, const Splitting& s) {
  std::unordered_map<std::string, ResolvedLetter> cache;
  const std::vector<Step> plan = resolve_word(w, t, s, cache);
  const std::size_t n = plan.size();
  Int total = 0;
  for (const auto& step : plan) total += *step.lambda;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    TriVector suffix(t.genus());
    for (std::size_t j = i + 1; j < n; ++j) {
      suffix.add_scaled(*plan[j].tau, plan[j].sign);
    }
    total += 2 * plan[i].sign * delta_f(*plan[i].tau, suffix, s);
  }
  return total;
}

Int accumulate_fast(const Word& w, const GeneratorTable& t, const Splitting& s) {
  std::unordered_map<std::string, ResolvedLetter> cache;
  const std::vector<Step> plan = resolve_word(w, t, s, cache);
  TriVector suffix(t.genus());
  Int total = 0;
  for (auto it = plan.rbegin(); it != plan.rend(); ++it) {
    total += *it->lambda + 2 * it->sign * delta_f(*it->tau, suffix, s);
    suffix.add_scaled(*it->tau, it->sign);
  }
  return total;
}

bool splitting_invariance_check(const TriVector& tau_phi, const TriVector& tau_psi,
                                const IntMatrix& m, const Splitting& s) {
  if (!is_symplectic(m)) {
    throw InputError("splitting invariance check requires a symplectic matrix");
  }
  if (!preserves_splitting(m, s)) {
    throw InputError("splitting invariance check requires a splitting-preserving matrix");
  }
  const Int before = delta_f(tau_phi, tau_psi, s);
  const Int after = delta_f(induced_map(m, tau_phi), induced_map(m, tau_psi), s);
  return before == after;
}

}  // namespace casson
