#include <cstdint>
#include <exception>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "casson/errors.hpp"
#include "casson/exterior.hpp"
#include "casson/growth.hpp"
#include "casson/morita.hpp"
#include "casson/words.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUnexpected = 1;
constexpr int kExitInput = 2;
constexpr int kExitCertification = 3;

casson::GeneratorTable load_table(const std::string& path) {
  return casson::GeneratorTable::load_file(path);
}

void print_record(std::ostream& out, const casson::GrowthRecord& r) {
  out << "length = " << r.length << '\n'
      << "lambda = " << r.lambda << '\n'
      << "per_step_bound = " << r.per_step_bound << '\n'
      << "quadratic_bound = " << r.quadratic_bound << '\n'
      << "ratio = " << r.ratio_num << '/' << r.ratio_den << '\n';
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw casson::InputError("cannot open output path: " + path);
  out << text;
  if (!out) throw casson::InputError("failed writing output path: " + path);
}

std::vector<std::size_t> parse_lengths(const std::string& csv) {
  std::vector<std::size_t> out;
  std::size_t pos = 0;
  while (pos <= csv.size()) {
    const std::size_t comma = csv.find(',', pos);
    const std::string item =
        csv.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    if (item.empty()) throw casson::InputError("empty entry in --lengths list");
    std::size_t parsed = 0;
    try {
      std::size_t used = 0;
      const unsigned long long v = std::stoull(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      parsed = static_cast<std::size_t>(v);
    } catch (const std::exception&) {
      throw casson::InputError("bad length '" + item + "' in --lengths list");
    }
    out.push_back(parsed);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  if (out.empty()) throw casson::InputError("--lengths list is empty");
  return out;
}

int run(int argc, char** argv) {
  CLI::App app{"Exact-integer growth of the normalized Casson invariant over Torelli words"};
  app.require_subcommand(1);

  std::string table_path;
  std::string word_expr;
  std::string out_path;
  std::string lengths_csv;
  std::size_t n_max = 1;
  std::int64_t lambda_nu = 0;
  int genus = 3;
  std::size_t trials = 1;
  std::uint64_t seed = 0;

  auto* cmd_eval = app.add_subcommand("eval", "Evaluate lambda and tau of a word");
  cmd_eval->add_option("--table", table_path, "Generator table JSON")->required();
  cmd_eval->add_option("--word", word_expr, "Word expression")->required();

  auto* cmd_bound = app.add_subcommand("bound", "Certify the quadratic bound on a word");
  cmd_bound->add_option("--table", table_path, "Generator table JSON")->required();
  cmd_bound->add_option("--word", word_expr, "Word expression")->required();

  auto* cmd_family = app.add_subcommand("nu-family", "CSV of the lower-bound power family");
  cmd_family->add_option("--n-max", n_max, "Largest power")->required();
  cmd_family->add_option("--lambda-nu", lambda_nu, "lambda of the base letter");
  cmd_family->add_option("--genus", genus, "Surface genus");
  cmd_family->add_option("--out", out_path, "Output path (stdout if omitted)");

  auto* cmd_sample = app.add_subcommand("sample", "CSV of certified random words");
  cmd_sample->add_option("--table", table_path, "Generator table JSON")->required();
  cmd_sample->add_option("--lengths", lengths_csv, "Comma-separated word lengths")->required();
  cmd_sample->add_option("--trials", trials, "Trials per length")->required();
  cmd_sample->add_option("--seed", seed, "Sampling seed")->required();
  cmd_sample->add_option("--out", out_path, "Output path (stdout if omitted)");

  auto* cmd_constants = app.add_subcommand("constants", "Bound constants of a table");
  cmd_constants->add_option("--table", table_path, "Generator table JSON")->required();

  auto* cmd_validate = app.add_subcommand("validate", "Validate a table or tri-vector");
  std::string tri_text;
  int tri_genus = 3;
  cmd_validate->add_option("--table", table_path, "Generator table JSON");
  cmd_validate->add_option("--tri", tri_text, "Tri-vector text form");
  cmd_validate->add_option("--genus", tri_genus, "Genus for --tri");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);  // --help and friends
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  if (cmd_eval->parsed()) {
    const auto table = load_table(table_path);
    const casson::Splitting s(table.genus());
    const casson::Word w = casson::Word::parse(word_expr);
    const casson::Int lambda = casson::accumulate_fast(w, table, s);
    const casson::TriVector tau = casson::tau_of_word(w, table);
    std::cout << "lambda = " << lambda << '\n'
              << "tau = " << tau.to_text() << '\n'
              << "ell = " << casson::ell_norm(tau) << '\n'
              << "length = " << w.norm() << '\n';
    return kExitOk;
  }

  if (cmd_bound->parsed()) {
    const auto table = load_table(table_path);
    const casson::Splitting s(table.genus());
    const casson::Word w = casson::Word::parse(word_expr);
    const casson::GrowthRecord r = casson::certify_bound(w, table, s);
    print_record(std::cout, r);
    std::cout << "certification = PASS\n";
    return kExitOk;
  }

  if (cmd_family->parsed()) {
    const auto records =
        casson::nu_family(n_max, casson::Int(lambda_nu), casson::Genus(genus));
    std::vector<casson::SampleRow> rows;
    rows.reserve(records.size());
    for (const auto& r : records) rows.push_back(casson::SampleRow{r.length, 0, r});
    write_text(out_path, casson::csv_string(rows));
    return kExitOk;
  }

  if (cmd_sample->parsed()) {
    const auto table = load_table(table_path);
    const casson::Splitting s(table.genus());
    const auto rows =
        casson::sample_growth(table, s, parse_lengths(lengths_csv), trials, seed);
    write_text(out_path, casson::csv_string(rows));
    return kExitOk;
  }

  if (cmd_constants->parsed()) {
    const auto table = load_table(table_path);
    const casson::BoundConstants k = casson::compute_constants(table);
    std::cout << "genus = " << table.genus().value() << '\n'
              << "C1 = " << k.c1 << '\n'
              << "C2 = " << k.c2 << '\n'
              << "C3 = " << k.c3 << '\n'
              << "C = " << k.c << '\n';
    return kExitOk;
  }

  if (cmd_validate->parsed()) {
    if (table_path.empty() && tri_text.empty()) {
      throw casson::InputError("validate needs --table or --tri");
    }
    if (!table_path.empty()) {
      const auto table = load_table(table_path);  // loading runs every invariant
      std::cout << "table OK: genus " << table.genus().value() << ", " << table.size()
                << " generators\n";
    }
    if (!tri_text.empty()) {
      const auto v = casson::TriVector::parse_text(tri_text, casson::Genus(tri_genus));
      std::cout << "tri-vector OK: " << v.term_count() << " terms, ell = "
                << casson::ell_norm(v) << '\n';
    }
    return kExitOk;
  }

  return kExitInput;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const casson::CertificationError& e) {
    std::cerr << "certification failure: " << e.what() << '\n';
    std::cout << "certification = FAIL\n";
    return kExitCertification;
  } catch (const casson::InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "unexpected error: " << e.what() << '\n';
    return kExitUnexpected;
  }
}
