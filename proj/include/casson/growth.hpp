#pragma once

#include <cstdint>
#include <iosfwd>
#include <random>
#include <vector>

#include "casson/morita.hpp"

namespace casson {

/// The explicit constants of the quadratic bound, computed over the signed
/// alphabet S^{+-1}:
///   c1 = max ell(tau(s)),  c2 = C(2g,3) * c1^2,  c3 = max |lambda(s)|,
///   c  = c3 + c2, so that c3*n + c2*n(n-1) <= c*n^2 for all n >= 1.
struct BoundConstants {
  Int c1, c2, c3, c;
};

BoundConstants compute_constants(const GeneratorTable& t);

/// One certified data point: a word length, its exact lambda, the two bound
/// values, and lambda/n^2 as a reduced exact fraction.
struct GrowthRecord {
  std::size_t length = 0;
  Int lambda;
  Int per_step_bound;   // c3*n + c2*n(n-1)
  Int quadratic_bound;  // c*n^2
  Int ratio_num;
  Int ratio_den;
};

/// Evaluates lambda and walks the full inequality chain
///   |lambda| <= sum|lambda(s_i)| + 2 sum|delta_i|
///            <= c3*n + c2*n(n-1) <= c*n^2,
/// checking every per-step |delta_i| <= c2*(n-i) along the way. Any violated
/// inequality throws CertificationError; that can only mean an arithmetic
/// bug, never a property of the input.
GrowthRecord certify_bound(const Word& w, const GeneratorTable& t, const Splitting& s);

/// The single-letter table {nu: x1^x2^x3 + y1^y2^y3} with the given lambda.
GeneratorTable nu_table(Genus g, const Int& lambda_nu);

/// Evaluates lambda(nu^n) for n = 1..n_max via the fast accumulator and
/// records the exact ratios lambda/n^2. With lambda_nu = 0 the ratio is
/// exactly (n-1)/n.
std::vector<GrowthRecord> nu_family(std::size_t n_max, const Int& lambda_nu, Genus g);

struct SampleRow {
  std::size_t length = 0;
  std::size_t trial = 0;
  GrowthRecord record;
};

/// The per-(length, trial) engine sample_growth draws from; exposed so the
/// exact words behind a CSV row can be reproduced.
std::mt19937_64 sample_stream(std::uint64_t seed, std::size_t length, std::size_t trial);

/// Uniform i.i.d. letters over S^{+-1} from a deterministic per-(length,
/// trial) stream derived from the seed.
Word random_word(const GeneratorTable& t, std::size_t length, std::mt19937_64& rng);

/// Certified records for every (length, trial) pair; byte-stable for a
/// fixed seed.
std::vector<SampleRow> sample_growth(const GeneratorTable& t, const Splitting& s,
                                     const std::vector<std::size_t>& lengths,
                                     std::size_t trials, std::uint64_t seed);

/// CSV with header `length,trial,lambda,per_step_bound,quadratic_bound,
/// ratio_num,ratio_den`; exact integers only.
void write_csv(std::ostream& out, const std::vector<SampleRow>& rows);
std::string csv_string(const std::vector<SampleRow>& rows);

}  // namespace casson
