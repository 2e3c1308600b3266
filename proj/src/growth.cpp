#include "casson/growth.hpp"

#include <cstdint>
#include <limits>
#include <ostream>
#include <sstream>
#include <unordered_map>
#include <utility>

#include "casson/errors.hpp"

namespace casson {
namespace {

Int int_of(std::size_t n) { return Int(static_cast<std::uint64_t>(n)); }

// lambda / n^2 in lowest terms, denominator positive; 0/1 for n = 0.
std::pair<Int, Int> reduced_ratio(const Int& lambda, std::size_t n) {
  if (n == 0 || lambda == 0) return {Int(0), Int(1)};
  const Int den = int_of(n) * int_of(n);
  const Int a = boost::multiprecision::abs(lambda);
  const Int g = boost::multiprecision::gcd(a, den);
  return {lambda / g, den / g};
}

GrowthRecord make_record(std::size_t n, Int lambda, const BoundConstants& k) {
  GrowthRecord r;
  r.length = n;
  const Int nn = int_of(n);
  r.per_step_bound = k.c3 * nn + k.c2 * nn * (nn - 1);
  r.quadratic_bound = k.c * nn * nn;
  auto ratio = reduced_ratio(lambda, n);
  r.lambda = std::move(lambda);
  r.ratio_num = std::move(ratio.first);
  r.ratio_den = std::move(ratio.second);
  return r;
}

struct ResolvedLetter {
  const TriVector* tau;
  Int lambda_pos;
  Int lambda_neg;
};

// Evaluates the word right to left, checking every inequality the quadratic
// bound is assembled from.
GrowthRecord certify_with(const BoundConstants& k, const Word& w, const GeneratorTable& t,
                          const Splitting& s) {
  const auto& letters = w.letters();
  const std::size_t n = letters.size();

  std::unordered_map<std::string, ResolvedLetter> cache;
  auto resolve = [&](const std::string& name) -> const ResolvedLetter& {
    auto it = cache.find(name);
    if (it == cache.end()) {
      const Generator& gen = t.at(name);
      it = cache
               .emplace(name, ResolvedLetter{&gen.tau, gen.lambda,
                                             letter_lambda(t, Letter{name, -1}, s)})
               .first;
    }
    return it->second;
  };

  TriVector suffix(t.genus());
  Int total = 0;
  Int sum_abs_lambda = 0;
  Int sum_abs_delta = 0;
  for (std::size_t idx = n; idx-- > 0;) {
    const Letter& letter = letters[idx];
    const ResolvedLetter& r = resolve(letter.name);
    const Int& lam = letter.sign > 0 ? r.lambda_pos : r.lambda_neg;
    Int delta = delta_f(*r.tau, suffix, s);
    if (letter.sign < 0) delta = -delta;
    const Int abs_delta = boost::multiprecision::abs(delta);
    const Int step_cap = k.c2 * int_of(n - 1 - idx);
    if (abs_delta > step_cap) {
      throw CertificationError("per-step pairing bound violated at letter " +
                               std::to_string(idx + 1) + ": |delta| = " + abs_delta.str() +
                               " > c2*(n-i) = " + step_cap.str());
    }
    total += lam + 2 * delta;
    sum_abs_lambda += boost::multiprecision::abs(lam);
    sum_abs_delta += abs_delta;
    suffix.add_scaled(*r.tau, letter.sign);
  }

  const Int middle = sum_abs_lambda + 2 * sum_abs_delta;
  GrowthRecord record = make_record(n, std::move(total), k);
  const Int abs_lambda = boost::multiprecision::abs(record.lambda);
  if (abs_lambda > middle) {
    throw CertificationError("telescoping bound violated: |lambda| = " + abs_lambda.str() +
                             " > sum|lambda_i| + 2*sum|delta_i| = " + middle.str());
  }
  if (middle > record.per_step_bound) {
    throw CertificationError("per-step bound violated: sum|lambda_i| + 2*sum|delta_i| = " +
                             middle.str() + " > c3*n + c2*n*(n-1) = " +
                             record.per_step_bound.str());
  }
  if (record.per_step_bound > record.quadratic_bound) {
    throw CertificationError("quadratic bound violated: c3*n + c2*n*(n-1) = " +
                             record.per_step_bound.str() + " > c*n^2 = " +
                             record.quadratic_bound.str());
  }
  return record;
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

// Unbiased draw from [0, bound); mt19937_64 output is fully specified by the
// standard, so this is reproducible across platforms (the distribution
// classes are not).
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t rem = static_cast<std::uint64_t>(-bound) % bound;
  for (;;) {
    const std::uint64_t v = rng();
    if (v >= rem) return (v - rem) % bound;
  }
}

}  // namespace

// One engine per (length, trial), so rows never depend on evaluation order.
std::mt19937_64 sample_stream(std::uint64_t seed, std::size_t length, std::size_t trial) {
  std::uint64_t h = splitmix64(seed);
  h = splitmix64(h ^ static_cast<std::uint64_t>(length));
  h = splitmix64(h ^ static_cast<std::uint64_t>(trial));
  return std::mt19937_64(h);
}

BoundConstants compute_constants(const GeneratorTable& t) {
  const Splitting s(t.genus());
  BoundConstants k;
  k.c1 = 0;
  k.c3 = 0;
  for (const auto& [name, gen] : t.entries()) {
    const Int len = ell_norm(gen.tau);  // ell(-tau) = ell(tau) covers the inverse
    if (len > k.c1) k.c1 = len;
    const Int lam_pos = boost::multiprecision::abs(gen.lambda);
    if (lam_pos > k.c3) k.c3 = lam_pos;
    const Int lam_neg = boost::multiprecision::abs(letter_lambda(t, Letter{name, -1}, s));
    if (lam_neg > k.c3) k.c3 = lam_neg;
  }
  k.c2 = wedge3_dim(t.genus()) * k.c1 * k.c1;
  k.c = k.c3 + k.c2;
  return k;
}

GrowthRecord certify_bound(const Word& w, const GeneratorTable& t, const Splitting& s) {
  if (t.genus() != s.genus) throw InputError("genus mismatch between table and splitting");
  return certify_with(compute_constants(t), w, t, s);
}

GeneratorTable nu_table(Genus g, const Int& lambda_nu) {
  if (g.value() < 3) throw InputError("nu table requires genus >= 3");
  TriVector tau(g);
  tau.add_term(BasisTriple(0, 1, 2), 1);  // x1 ^ x2 ^ x3
  tau.add_term(BasisTriple(g.value(), g.value() + 1, g.value() + 2), 1);  // y1 ^ y2 ^ y3
  std::map<std::string, Generator> entries;
  entries.emplace("nu", Generator{std::move(tau), lambda_nu});
  return GeneratorTable(g, std::move(entries));
}

std::vector<GrowthRecord> nu_family(std::size_t n_max, const Int& lambda_nu, Genus g) {
  if (n_max < 1) throw InputError("nu_family requires n_max >= 1");
  const GeneratorTable t = nu_table(g, lambda_nu);
  const Splitting s(g);
  const BoundConstants k = compute_constants(t);

  std::vector<GrowthRecord> out;
  out.reserve(n_max);
  Word w;
  for (std::size_t n = 1; n <= n_max; ++n) {
    w.append(Letter{"nu", +1});
    out.push_back(make_record(n, accumulate_fast(w, t, s), k));
  }
  return out;
}

Word random_word(const GeneratorTable& t, std::size_t length, std::mt19937_64& rng) {
  const std::vector<std::string> names = t.names();
  Word w;
  for (std::size_t i = 0; i < length; ++i) {
    const std::uint64_t pick = uniform_below(rng, 2 * static_cast<std::uint64_t>(names.size()));
    w.append(Letter{names[static_cast<std::size_t>(pick >> 1)], (pick & 1) ? -1 : +1});
  }
  return w;
}

std::vector<SampleRow> sample_growth(const GeneratorTable& t, const Splitting& s,
                                     const std::vector<std::size_t>& lengths,
                                     std::size_t trials, std::uint64_t seed) {
  if (trials < 1) throw InputError("sample_growth requires trials >= 1");
  if (t.genus() != s.genus) throw InputError("genus mismatch between table and splitting");
  const BoundConstants k = compute_constants(t);

  std::vector<SampleRow> rows;
  rows.reserve(lengths.size() * trials);
  for (const std::size_t length : lengths) {
    for (std::size_t trial = 0; trial < trials; ++trial) {
      std::mt19937_64 rng = sample_stream(seed, length, trial);
      const Word w = random_word(t, length, rng);
      rows.push_back(SampleRow{length, trial, certify_with(k, w, t, s)});
    }
  }
  return rows;
}

void write_csv(std::ostream& out, const std::vector<SampleRow>& rows) {
  out << "length,trial,lambda,per_step_bound,quadratic_bound,ratio_num,ratio_den\n";
  for (const auto& row : rows) {
    out << row.length << ',' << row.trial << ',' << row.record.lambda << ','
        << row.record.per_step_bound << ',' << row.record.quadratic_bound << ','
        << row.record.ratio_num << ',' << row.record.ratio_den << '\n';
  }
}

std::string csv_string(const std::vector<SampleRow>& rows) {
  std::ostringstream out;
  write_csv(out, rows);
  return out.str();
}

}  // namespace casson
