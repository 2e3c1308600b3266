#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "casson/exterior.hpp"

namespace casson {

/// One Torelli generator: a chosen lifted Johnson image and the lambda value
/// of the generator under the fixed Heegaard embedding.
struct Generator {
  TriVector tau;
  Int lambda;
};

/// Finite generating alphabet S with per-letter lifts and lambda data.
/// Tables are immutable after construction and require genus >= 3.
class GeneratorTable {
 public:
  GeneratorTable(Genus g, std::map<std::string, Generator> entries);

  /// Parses the JSON document format
  ///   { "genus": g, "generators": { "<name>": { "tau": [[i,j,k,c],...],
  ///     "lambda": int }, ... } }
  /// with 1-based indices into the ordered basis. "tau" defaults to zero and
  /// "lambda" to 0 when omitted; duplicate letters, duplicate triples,
  /// out-of-range indices and g < 3 are load errors.
  static GeneratorTable load_json(const std::string& text);
  static GeneratorTable load_file(const std::string& path);

  Genus genus() const { return genus_; }
  const std::map<std::string, Generator>& entries() const { return entries_; }
  const Generator& at(const std::string& name) const;
  std::vector<std::string> names() const;
  std::size_t size() const { return entries_.size(); }

  /// Canonical serialization (sorted letters, sorted triples).
  std::string to_json() const;

 private:
  Genus genus_;
  std::map<std::string, Generator> entries_;
};

/// A signed letter: a generator name or its inverse.
struct Letter {
  std::string name;
  int sign;  // +1 or -1
  friend bool operator==(const Letter& a, const Letter& b) {
    return a.sign == b.sign && a.name == b.name;
  }
};

/// A finite sequence of letters. The empty word is the identity. Letters are
/// not resolved against any table until a word is evaluated.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> letters);

  /// Grammar: whitespace-separated tokens, each `name`, `name^k` or
  /// `name^-k` (so `name^-1` is the inverse). `name^0` contributes nothing.
  static Word parse(const std::string& expr);

  const std::vector<Letter>& letters() const { return letters_; }
  /// Letter count of this expression (an upper bound for the true norm).
  std::size_t norm() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  void append(Letter letter);
  Word concat(const Word& other) const;
  Word inverse() const;
  /// Cancels adjacent s s^-1 pairs until none remain; same group image.
  Word free_reduced() const;

  /// Run-length rendering in the parse grammar.
  std::string to_string() const;

  friend bool operator==(const Word& a, const Word& b) { return a.letters_ == b.letters_; }

 private:
  std::vector<Letter> letters_;
};

/// Sum of the signed per-letter Johnson images: the abelian image of the
/// word, depending only on the signed letter multiset.
TriVector tau_of_word(const Word& w, const GeneratorTable& t);

/// Bounding-pair style builder: sum of wedge3(c, a_i, b_i) over the pairs.
TriVector bp_tau(const HomologyVector& c,
                 const std::vector<std::pair<HomologyVector, HomologyVector>>& pairs);

}  // namespace casson
