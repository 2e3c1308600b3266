// End-to-end acceptance suite. Each criterion prints exactly one PASS/FAIL
// line; the process exits nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "casson/errors.hpp"
#include "casson/growth.hpp"
#include "oracles.hpp"

using namespace casson;
using namespace testutil;

namespace {

struct Outcome {
  bool ok = true;
  std::string note;
};

std::string data_path(const char* name) {
  return std::string(CASSON_DATA_DIR) + "/" + name;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string format_seconds(double secs) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3fs", secs);
  return buf;
}

// 1. delta_f(nu, nu^m) = m exactly for 1 <= m <= 1000, in under a second.
Outcome paired_power_identity() {
  const Genus g(3);
  const Splitting s(g);
  const TriVector nu = nu_tau(g);
  const auto start = std::chrono::steady_clock::now();
  TriVector power(g);
  for (int m = 1; m <= 1000; ++m) {
    power += nu;
    if (delta_f(nu, power, s) != m) {
      return {false, "delta_f(nu, nu^" + std::to_string(m) + ") != " + std::to_string(m)};
    }
  }
  const double secs = seconds_since(start);
  if (secs >= 1.0) return {false, "took " + format_seconds(secs) + ", budget 1s"};
  return {true, format_seconds(secs)};
}

// 2. lambda(nu^n) = n*lambda_1 + n(n-1) for n <= 10^4 and lambda_1 in
//    {0, 7, -3}; the naive and fast accumulators agree for n <= 500; with
//    lambda_1 = 0 the ratio at n = 100 is exactly 99/100.
Outcome lower_bound_family() {
  const Genus g(3);
  const Splitting s(g);
  for (const long long lam : {0LL, 7LL, -3LL}) {
    const auto family = nu_family(10000, lam, g);
    if (family.size() != 10000) return {false, "family size " + std::to_string(family.size())};
    for (std::size_t i = 0; i < family.size(); ++i) {
      const Int n = Int(static_cast<unsigned>(i + 1));
      if (family[i].lambda != lam * n + n * (n - 1)) {
        return {false, "lambda(nu^" + std::to_string(i + 1) + ") off closed form at lambda_1 = " +
                           std::to_string(lam)};
      }
    }
    if (lam == 0 && (family[99].ratio_num != 99 || family[99].ratio_den != 100)) {
      return {false, "lambda(nu^100)/100^2 is not exactly 99/100"};
    }
    const GeneratorTable t = nu_table(g, lam);
    Word w;
    for (std::size_t n = 1; n <= 500; ++n) {
      w.append(Letter{"nu", +1});
      if (accumulate_naive(w, t, s) != family[n - 1].lambda) {
        return {false, "naive/fast disagreement at n = " + std::to_string(n) +
                           ", lambda_1 = " + std::to_string(lam)};
      }
    }
  }
  return {};
}

// 3. 10,000 seeded random words of lengths up to 500 over two distinct
//    tables all pass the full inequality chain of the quadratic bound.
Outcome upper_bound_certification() {
  std::vector<std::size_t> lengths;
  lengths.reserve(500);
  for (std::size_t n = 1; n <= 500; ++n) lengths.push_back(n);

  std::size_t certified = 0;
  const GeneratorTable nu = nu_table(Genus(3), 0);
  certified += sample_growth(nu, Splitting(nu.genus()), lengths, 10, 20260819).size();
  const GeneratorTable mixed = GeneratorTable::load_file(data_path("mixed.json"));
  certified += sample_growth(mixed, Splitting(mixed.genus()), lengths, 10, 20260819).size();

  if (certified != 10000) return {false, std::to_string(certified) + " of 10000 certified"};
  return {true, "10000 words, zero failures"};
}

// 4. accumulate(uv) = accumulate(u) + accumulate(v) + 2 delta_f(tau(u),
//    tau(v)) bit-exactly for 1,000 random pairs under both accumulator
//    variants, and accumulate(w w^-1) = 0 for 1,000 random words.
Outcome composition_law() {
  const GeneratorTable t = GeneratorTable::load_file(data_path("mixed.json"));
  const Splitting s(t.genus());
  std::mt19937_64 rng(44001);
  for (int q = 0; q < 1000; ++q) {
    const Word u = random_word(t.names(), rand_below(rng, 65), rng);
    const Word v = random_word(t.names(), rand_below(rng, 65), rng);
    const Int law = accumulate_fast(u, t, s) + accumulate_fast(v, t, s) +
                    2 * delta_f(tau_of_word(u, t), tau_of_word(v, t), s);
    const Word uv = u.concat(v);
    if (accumulate_fast(uv, t, s) != law) {
      return {false, "fast accumulator breaks the law at pair " + std::to_string(q)};
    }
    if (accumulate_naive(uv, t, s) != law) {
      return {false, "naive accumulator breaks the law at pair " + std::to_string(q)};
    }
  }
  for (int q = 0; q < 1000; ++q) {
    const Word w = random_word(t.names(), rand_below(rng, 65), rng);
    const Word round_trip = w.concat(w.inverse());
    if (accumulate_fast(round_trip, t, s) != 0 || accumulate_naive(round_trip, t, s) != 0) {
      return {false, "lambda(w w^-1) != 0 at word " + std::to_string(q)};
    }
  }
  return {true, "1000 pairs + 1000 inverses"};
}

// 5. |delta_f(u,v)| <= C(2g,3) * ell(u) * ell(v) on 10,000 random sparse
//    pairs across g in {3, 4, 5}.
Outcome pairing_bound() {
  std::mt19937_64 rng(44002);
  std::size_t checked = 0;
  for (const int gv : {3, 4, 5}) {
    const Genus g(gv);
    const Splitting s(g);
    const Int triples = wedge3_dim(g);
    const int reps = gv == 3 ? 3334 : 3333;
    for (int q = 0; q < reps; ++q) {
      const TriVector u = random_trivector(g, 12, 9, rng);
      const TriVector v = random_trivector(g, 12, 9, rng);
      if (boost::multiprecision::abs(delta_f(u, v, s)) > triples * ell_norm(u) * ell_norm(v)) {
        return {false, "bound violated at g = " + std::to_string(gv)};
      }
      ++checked;
    }
  }
  if (checked != 10000) return {false, "only " + std::to_string(checked) + " pairs checked"};
  return {true, "10000 pairs, g in {3,4,5}"};
}

// 6. delta_f is unchanged under 200 random splitting-preserving symplectic
//    transformations diag(A, (A^T)^-1) applied to random pairs.
Outcome basis_invariance() {
  std::mt19937_64 rng(44003);
  int checked = 0;
  for (const int gv : {3, 4}) {
    const Genus g(gv);
    const Splitting s(g);
    for (int q = 0; q < 100; ++q) {
      auto [a, a_inv] = random_unimodular(gv, rng);
      const IntMatrix m = splitting_block(a, a_inv);
      const TriVector u = random_trivector(g, 10, 6, rng);
      const TriVector v = random_trivector(g, 10, 6, rng);
      if (!splitting_invariance_check(u, v, m, s)) {
        return {false, "pairing changed under transform " + std::to_string(checked)};
      }
      ++checked;
    }
  }
  return {true, "200 transforms"};
}

// 7. wedge3 agrees with the dense expansion oracle and is antisymmetric and
//    multilinear on 1,000 random triples at each of g = 3 and g = 4; the
//    ell norm axioms hold on 1,000 random vectors.
Outcome algebra_kernel() {
  std::mt19937_64 rng(44004);
  for (const int gv : {3, 4}) {
    const Genus g(gv);
    for (int q = 0; q < 1000; ++q) {
      const HomologyVector a = random_homology(g, 5, rng);
      const HomologyVector b = random_homology(g, 5, rng);
      const HomologyVector c = random_homology(g, 5, rng);
      const TriVector w = wedge3(a, b, c);
      if (w != wedge3_oracle(a, b, c)) return {false, "oracle mismatch at g = " + std::to_string(gv)};
      if (wedge3(b, a, c) != -w || wedge3(a, c, b) != -w || wedge3(c, b, a) != -w ||
          wedge3(b, c, a) != w || wedge3(c, a, b) != w) {
        return {false, "antisymmetry broken at g = " + std::to_string(gv)};
      }
      const HomologyVector a2 = random_homology(g, 5, rng);
      if (wedge3(a + a2, b, c) != w + wedge3(a2, b, c) || wedge3(-2 * a, b, c) != -2 * w ||
          !wedge3(a, a, c).is_zero()) {
        return {false, "multilinearity broken at g = " + std::to_string(gv)};
      }
    }
  }
  const Genus g(3);
  for (int q = 0; q < 1000; ++q) {
    const TriVector u = random_trivector(g, 10, 8, rng);
    const TriVector v = random_trivector(g, 10, 8, rng);
    const bool ok = ell_norm(u + v) <= ell_norm(u) + ell_norm(v) &&
                    ell_norm(-7 * u) == 7 * ell_norm(u) && ell_norm(-u) == ell_norm(u) &&
                    (ell_norm(u) == 0) == u.is_zero();
    if (!ok) return {false, "norm axiom broken at vector " + std::to_string(q)};
  }
  return {true, "2000 triples + 1000 vectors"};
}

// 8. accumulate_fast handles a 10^5-letter word in under 2 seconds and its
//    value matches the closed form of the freely reduced word; naive and
//    fast agree on random words of length up to 500 over both tables.
Outcome performance_contract() {
  const Genus g(3);
  const Splitting s(g);
  const GeneratorTable nu = nu_table(g, 0);

  std::mt19937_64 stream = sample_stream(20260819, 100000, 0);
  const Word w = casson::random_word(nu, 100000, stream);
  Int signed_sum = 0;
  for (const auto& l : w.letters()) signed_sum += l.sign;

  const auto start = std::chrono::steady_clock::now();
  const Int fast = accumulate_fast(w, nu, s);
  const double secs = seconds_since(start);

  // free reduction collapses a +-nu word to nu^T with T the signed sum
  if (fast != signed_sum * (signed_sum - 1)) {
    return {false, "lambda of the 100000-letter word is off its closed form"};
  }
  if (secs >= 2.0) return {false, "took " + format_seconds(secs) + ", budget 2s"};

  const GeneratorTable mixed = GeneratorTable::load_file(data_path("mixed.json"));
  std::mt19937_64 rng(44005);
  for (const GeneratorTable* t : {&nu, &mixed}) {
    const Splitting split(t->genus());
    for (int q = 0; q < 30; ++q) {
      const Word r = random_word(t->names(), rand_below(rng, 501), rng);
      if (accumulate_naive(r, *t, split) != accumulate_fast(r, *t, split)) {
        return {false, "naive/fast disagreement at length " + std::to_string(r.norm())};
      }
    }
  }
  return {true, format_seconds(secs) + " for 100000 letters"};
}

struct Criterion {
  int number;
  const char* label;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "paired-power identity delta_f(nu, nu^m) = m for 1 <= m <= 1000",
       paired_power_identity},
      {2, "power family lambda(nu^n) = n*lambda_1 + n(n-1) up to n = 10000",
       lower_bound_family},
      {3, "quadratic bound certification of 10000 random words over two tables",
       upper_bound_certification},
      {4, "composition law on 1000 random pairs and lambda(w w^-1) = 0 on 1000 words",
       composition_law},
      {5, "pairing bound |delta_f| <= C(2g,3)*ell*ell on 10000 sparse pairs",
       pairing_bound},
      {6, "pairing invariance under 200 splitting-preserving symplectic maps",
       basis_invariance},
      {7, "wedge kernel against the expansion oracle plus norm axioms",
       algebra_kernel},
      {8, "fast accumulator: 100000 letters under 2s, naive agreement to length 500",
       performance_contract},
  };

  bool all_ok = true;
  for (const auto& criterion : criteria) {
    Outcome outcome;
    try {
      outcome = criterion.run();
    } catch (const std::exception& e) {
      outcome = {false, e.what()};
    }
    all_ok = all_ok && outcome.ok;
    std::cout << (outcome.ok ? "[PASS]" : "[FAIL]") << " criterion " << criterion.number
              << ": " << criterion.label;
    if (!outcome.note.empty()) std::cout << " (" << outcome.note << ")";
    std::cout << std::endl;
  }
  return all_ok ? 0 : 1;
}
