#include "casson/words.hpp"

#include <cctype>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>

#include "json.hpp"

namespace casson {

namespace {

using nlohmann::json;

// nlohmann collapses duplicate object keys silently, so duplicates are
// caught with a parse callback before the document is interpreted.
json parse_rejecting_duplicates(const std::string& text, const char* what) {
  std::vector<std::set<std::string>> key_stack;
  auto callback = [&](int /*depth*/, json::parse_event_t event, json& parsed) {
    switch (event) {
      case json::parse_event_t::object_start:
        key_stack.emplace_back();
        break;
      case json::parse_event_t::object_end:
        key_stack.pop_back();
        break;
      case json::parse_event_t::key: {
        const auto key = parsed.get<std::string>();
        if (!key_stack.back().insert(key).second) {
          throw InputError(std::string(what) + ": duplicate key \"" + key + "\"");
        }
        break;
      }
      default:
        break;
    }
    return true;
  };
  try {
    return json::parse(text, callback);
  } catch (const json::parse_error& e) {
    throw InputError(std::string(what) + ": " + e.what());
  }
}

void reject_unknown_keys(const json& obj, std::initializer_list<const char*> allowed,
                         const std::string& where) {
  for (const auto& [key, value] : obj.items()) {
    bool known = false;
    for (const char* a : allowed) {
      if (key == a) {
        known = true;
        break;
      }
    }
    if (!known) throw InputError(where + ": unknown key \"" + key + "\"");
  }
}

Int lambda_from_json(const json& v) {
  if (v.is_number_integer()) return Int(v.get<std::int64_t>());
  if (v.is_number_unsigned()) return Int(v.get<std::uint64_t>());
  if (v.is_string()) {
    // Reuse the tri-vector coefficient rules via a one-record parse.
    const std::string s = v.get<std::string>();
    std::size_t pos = (!s.empty() && s[0] == '-') ? 1 : 0;
    if (pos == s.size()) throw InputError("lambda: empty integer string");
    for (std::size_t q = pos; q < s.size(); ++q) {
      if (s[q] < '0' || s[q] > '9') {
        throw InputError("lambda: '" + s + "' is not a decimal integer");
      }
    }
    return Int(s);
  }
  throw InputError("lambda must be an integer (use a decimal string beyond 64 bits)");
}

bool fits_int64(const Int& v) {
  static const Int lo = std::numeric_limits<std::int64_t>::min();
  static const Int hi = std::numeric_limits<std::int64_t>::max();
  return v >= lo && v <= hi;
}

}  // namespace

GeneratorTable::GeneratorTable(Genus g, std::map<std::string, Generator> entries)
    : genus_(g), entries_(std::move(entries)) {
  if (genus_.value() < 3) {
    throw InputError("generator tables require genus >= 3, got " +
                     std::to_string(genus_.value()));
  }
  if (entries_.empty()) throw InputError("generator table must not be empty");
  for (const auto& [name, gen] : entries_) {
    if (name.empty()) throw InputError("generator names must be nonempty");
    if (gen.tau.genus() != genus_) {
      throw InputError("generator \"" + name + "\": tau genus does not match table genus");
    }
    if (!gen.tau.well_formed()) {
      throw InputError("generator \"" + name + "\": tau is not in canonical form");
    }
  }
}

GeneratorTable GeneratorTable::load_json(const std::string& text) {
  const json doc = parse_rejecting_duplicates(text, "generator table");
  if (!doc.is_object()) throw InputError("generator table: document must be a JSON object");
  reject_unknown_keys(doc, {"genus", "generators"}, "generator table");
  if (!doc.contains("genus")) throw InputError("generator table: missing \"genus\"");
  if (!doc["genus"].is_number_integer() && !doc["genus"].is_number_unsigned()) {
    throw InputError("generator table: \"genus\" must be an integer");
  }
  const std::int64_t g_raw = doc["genus"].get<std::int64_t>();
  if (g_raw < 3) {
    throw InputError("generator table: genus must be >= 3, got " + std::to_string(g_raw));
  }
  const Genus g(static_cast<int>(g_raw));

  if (!doc.contains("generators") || !doc["generators"].is_object()) {
    throw InputError("generator table: missing \"generators\" object");
  }
  if (doc["generators"].empty()) {
    throw InputError("generator table: \"generators\" must not be empty");
  }

  std::map<std::string, Generator> entries;
  for (const auto& [name, body] : doc["generators"].items()) {
    if (name.empty()) throw InputError("generator table: empty generator name");
    if (!body.is_object()) {
      throw InputError("generator \"" + name + "\": entry must be an object");
    }
    reject_unknown_keys(body, {"tau", "lambda"}, "generator \"" + name + "\"");
    TriVector tau(g);
    if (body.contains("tau")) {
      try {
        tau = TriVector::parse_text(body["tau"].dump(), g);
      } catch (const InputError& e) {
        throw InputError("generator \"" + name + "\": " + e.what());
      }
    }
    Int lambda = 0;
    if (body.contains("lambda")) {
      try {
        lambda = lambda_from_json(body["lambda"]);
      } catch (const InputError& e) {
        throw InputError("generator \"" + name + "\": " + e.what());
      }
    }
    entries.emplace(name, Generator{std::move(tau), std::move(lambda)});
  }
  return GeneratorTable(g, std::move(entries));
}

GeneratorTable GeneratorTable::load_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open table file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return load_json(buf.str());
}

const Generator& GeneratorTable::at(const std::string& name) const {
  auto it = entries_.find(name);
  if (it == entries_.end()) throw InputError("unknown letter \"" + name + "\"");
  return it->second;
}

std::vector<std::string> GeneratorTable::names() const {
  std::vector<std::string> out;
  out.reserve(entries_.size());
  for (const auto& [name, gen] : entries_) out.push_back(name);
  return out;
}

std::string GeneratorTable::to_json() const {
  std::ostringstream out;
  out << "{\"genus\":" << genus_.value() << ",\"generators\":{";
  bool first = true;
  for (const auto& [name, gen] : entries_) {
    if (!first) out << ',';
    first = false;
    out << json(name).dump() << ":{\"tau\":" << gen.tau.to_text() << ",\"lambda\":";
    if (fits_int64(gen.lambda)) {
      out << gen.lambda;
    } else {
      out << '"' << gen.lambda << '"';
    }
    out << '}';
  }
  out << "}}";
  return out.str();
}

Word::Word(std::vector<Letter> letters) : letters_(std::move(letters)) {
  for (const auto& l : letters_) {
    if (l.sign != 1 && l.sign != -1) throw InputError("letter sign must be +1 or -1");
    if (l.name.empty()) throw InputError("letter name must be nonempty");
  }
}

Word Word::parse(const std::string& expr) {
  // Expansion cap keeps a typo like nu^999999999999 from exhausting memory.
  constexpr std::size_t kMaxLetters = 10'000'000;
  Word w;
  std::size_t pos = 0;
  while (pos < expr.size()) {
    while (pos < expr.size() && std::isspace(static_cast<unsigned char>(expr[pos]))) ++pos;
    if (pos >= expr.size()) break;
    std::size_t end = pos;
    while (end < expr.size() && !std::isspace(static_cast<unsigned char>(expr[end]))) ++end;
    const std::string token = expr.substr(pos, end - pos);
    pos = end;

    const std::size_t caret = token.find('^');
    std::string name = token;
    long long exponent = 1;
    if (caret != std::string::npos) {
      name = token.substr(0, caret);
      const std::string exp_text = token.substr(caret + 1);
      if (name.empty()) throw InputError("word token \"" + token + "\": missing letter name");
      if (exp_text.empty() || exp_text.find('^') != std::string::npos) {
        throw InputError("word token \"" + token + "\": malformed exponent");
      }
      try {
        std::size_t used = 0;
        exponent = std::stoll(exp_text, &used);
        if (used != exp_text.size()) throw std::invalid_argument(exp_text);
      } catch (const std::exception&) {
        throw InputError("word token \"" + token + "\": exponent must be an integer");
      }
    }
    if (name.empty()) throw InputError("empty letter name in word expression");

    const int sign = exponent < 0 ? -1 : 1;
    const unsigned long long count =
        exponent < 0 ? -static_cast<unsigned long long>(exponent) : exponent;
    if (w.letters_.size() + count > kMaxLetters) {
      throw InputError("word expression expands past " + std::to_string(kMaxLetters) +
                       " letters");
    }
    for (unsigned long long q = 0; q < count; ++q) w.letters_.push_back(Letter{name, sign});
  }
  return w;
}

void Word::append(Letter letter) {
  if (letter.sign != 1 && letter.sign != -1) throw InputError("letter sign must be +1 or -1");
  if (letter.name.empty()) throw InputError("letter name must be nonempty");
  letters_.push_back(std::move(letter));
}

Word Word::concat(const Word& other) const {
  Word out = *this;
  out.letters_.insert(out.letters_.end(), other.letters_.begin(), other.letters_.end());
  return out;
}

Word Word::inverse() const {
  Word out;
  out.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) {
    out.letters_.push_back(Letter{it->name, -it->sign});
  }
  return out;
}

Word Word::free_reduced() const {
  Word out;
  out.letters_.reserve(letters_.size());
  for (const auto& l : letters_) {
    if (!out.letters_.empty() && out.letters_.back().name == l.name &&
        out.letters_.back().sign == -l.sign) {
      out.letters_.pop_back();
    } else {
      out.letters_.push_back(l);
    }
  }
  return out;
}

std::string Word::to_string() const {
  std::ostringstream out;
  std::size_t idx = 0;
  bool first = true;
  while (idx < letters_.size()) {
    std::size_t run = idx + 1;
    while (run < letters_.size() && letters_[run] == letters_[idx]) ++run;
    const long long repeat = static_cast<long long>(run - idx) * letters_[idx].sign;
    if (!first) out << ' ';
    first = false;
    out << letters_[idx].name;
    if (repeat != 1) out << '^' << repeat;
    idx = run;
  }
  return out.str();
}

TriVector tau_of_word(const Word& w, const GeneratorTable& t) {
  TriVector acc(t.genus());
  for (const auto& l : w.letters()) {
    acc.add_scaled(t.at(l.name).tau, l.sign);
  }
  return acc;
}

TriVector bp_tau(const HomologyVector& c,
                 const std::vector<std::pair<HomologyVector, HomologyVector>>& pairs) {
  TriVector acc(c.genus());
  for (const auto& [a, b] : pairs) {
    acc += wedge3(c, a, b);
  }
  return acc;
}

}  // namespace casson
