#include "lclab/problem.hpp"

#include <algorithm>
#include <cctype>
#include <iterator>
#include <limits>
#include <map>
#include <set>

#include "json.hpp"

namespace lclab {

namespace {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

struct Position {
  std::size_t line = 1;
  std::size_t column = 1;
};

Position position_of(std::string_view text, std::size_t offset) {
  Position p;
  for (std::size_t k = 0; k < offset && k < text.size(); ++k) {
    if (text[k] == '\n') {
      ++p.line;
      p.column = 1;
    } else {
      ++p.column;
    }
  }
  return p;
}

/// Forward iterator over the text that records how far the JSON lexer has read.
struct CountingIterator {
  using iterator_category = std::forward_iterator_tag;
  using value_type = char;
  using difference_type = std::ptrdiff_t;
  using pointer = const char*;
  using reference = const char&;

  const char* at = nullptr;
  const char* begin = nullptr;
  std::size_t* consumed = nullptr;

  reference operator*() const { return *at; }
  CountingIterator& operator++() {
    ++at;
    *consumed = std::max(*consumed, static_cast<std::size_t>(at - begin));
    return *this;
  }
  CountingIterator operator++(int) {
    auto old = *this;
    ++*this;
    return old;
  }
  friend bool operator==(const CountingIterator& a, const CountingIterator& b) { return a.at == b.at; }
};

std::string escape_pointer_token(const std::string& key) {
  std::string out;
  for (char c : key) {
    if (c == '~') out += "~0";
    else if (c == '/') out += "~1";
    else out += c;
  }
  return out;
}

/// SAX pass that remembers where every value and key starts, keyed by JSON pointer.
class Locator {
 public:
  Locator(std::string_view text, const std::size_t* consumed) : text_(text), consumed_(consumed) {}

  bool null() { return scalar(4); }
  bool boolean(bool v) { return scalar(v ? 4 : 5); }
  bool number_integer(json::number_integer_t) { return number(); }
  bool number_unsigned(json::number_unsigned_t) { return number(); }
  bool number_float(json::number_float_t, const json::string_t&) { return number(); }
  bool string(json::string_t& s) { return scalar(json(s).dump().size()); }
  bool binary(json::binary_t&) { return scalar(0); }

  bool start_object(std::size_t) { return open(false); }
  bool start_array(std::size_t) { return open(true); }
  bool end_object() { return close(); }
  bool end_array() { return close(); }

  bool key(json::string_t& k) {
    auto& frame = stack_.back();
    if (!frame.keys.insert(k).second) {
      error_offset = *consumed_ - json(k).dump().size();
      error_message = "duplicate key '" + k + "'";
      return false;
    }
    frame.key = k;
    keys[path_of_child()] = *consumed_ - json(k).dump().size();
    return true;
  }

  bool parse_error(std::size_t position, const std::string& last_token, const nlohmann::detail::exception& ex) {
    error_offset = position == 0 ? 0 : position - 1;
    std::string message = ex.what();
    if (const auto colon = message.find(": ", message.find("column")); colon != std::string::npos) {
      message = message.substr(colon + 2);
    }
    if (message.find("last read") == std::string::npos && !last_token.empty()) {
      message += "; last read: '" + last_token + "'";
    }
    error_message = message;
    return false;
  }

  std::map<std::string, std::size_t> values;
  std::map<std::string, std::size_t> keys;
  std::optional<std::size_t> error_offset;
  std::string error_message;

 private:
  struct Frame {
    bool array = false;
    std::size_t index = 0;
    std::string key;
    std::string path;
    std::set<std::string> keys;
  };

  std::string path_of_child() const {
    if (stack_.empty()) return "";
    const auto& f = stack_.back();
    return f.path + "/" + (f.array ? std::to_string(f.index) : escape_pointer_token(f.key));
  }
  void record(std::size_t start) {
    values[path_of_child()] = start;
    if (!stack_.empty() && stack_.back().array) ++stack_.back().index;
  }
  bool scalar(std::size_t length) {
    record(*consumed_ >= length ? *consumed_ - length : 0);
    return true;
  }
  bool number() {
    std::size_t end = std::min(*consumed_, text_.size());
    while (end > 0 && std::string_view("0123456789+-.eE").find(text_[end - 1]) == std::string_view::npos) --end;
    std::size_t start = end;
    while (start > 0 && std::string_view("0123456789+-.eE").find(text_[start - 1]) != std::string_view::npos) --start;
    record(start);
    return true;
  }
  bool open(bool array) {
    const std::size_t start = *consumed_ > 0 ? *consumed_ - 1 : 0;
    const std::string path = path_of_child();
    values[path] = start;
    stack_.push_back(Frame{array, 0, {}, path, {}});
    return true;
  }
  bool close() {
    stack_.pop_back();
    if (!stack_.empty() && stack_.back().array) ++stack_.back().index;
    return true;
  }

  std::string_view text_;
  const std::size_t* consumed_;
  std::vector<Frame> stack_;
};

/// Column-carrying error from the monomial lexer; offset is 0-based inside the string.
struct MonomialSyntaxError {
  std::size_t offset;
  std::string message;
};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

bool valid_identifier(const std::string& s) {
  return !s.empty() && ident_start(s[0]) && std::all_of(s.begin(), s.end(), ident_char);
}

Monomial lex_monomial(std::string_view text, const std::vector<std::string>& variables) {
  ExponentVector e(variables.size());
  std::size_t k = 0;
  auto skip_space = [&] {
    while (k < text.size() && std::isspace(static_cast<unsigned char>(text[k]))) ++k;
  };
  auto token_at = [&](std::size_t at) {
    std::size_t end = at;
    while (end < text.size() && !std::isspace(static_cast<unsigned char>(text[end])) && text[end] != '*' &&
           text[end] != '^')
      ++end;
    return std::string(text.substr(at, std::max<std::size_t>(end - at, at < text.size() ? 1 : 0)));
  };
  skip_space();
  if (k < text.size() && text[k] == '1') {
    ++k;
    skip_space();
    if (k != text.size()) throw MonomialSyntaxError{k, "unexpected '" + token_at(k) + "' after 1"};
    return Monomial(e);
  }
  for (;;) {
    skip_space();
    if (k >= text.size()) throw MonomialSyntaxError{k, "expected a variable, found end of monomial"};
    if (!ident_start(text[k])) throw MonomialSyntaxError{k, "expected a variable, found '" + token_at(k) + "'"};
    const std::size_t start = k;
    while (k < text.size() && ident_char(text[k])) ++k;
    const std::string name(text.substr(start, k - start));
    const auto it = std::find(variables.begin(), variables.end(), name);
    if (it == variables.end()) throw MonomialSyntaxError{start, "unknown variable '" + name + "'"};
    std::int64_t power = 1;
    skip_space();
    if (k < text.size() && text[k] == '^') {
      ++k;
      skip_space();
      const std::size_t digits = k;
      while (k < text.size() && std::isdigit(static_cast<unsigned char>(text[k]))) ++k;
      if (digits == k) throw MonomialSyntaxError{digits, "expected an exponent after '^'"};
      if (k - digits > 9) throw MonomialSyntaxError{digits, "exponent too large"};
      power = std::stoll(std::string(text.substr(digits, k - digits)));
      skip_space();
    }
    e[static_cast<std::size_t>(it - variables.begin())] += power;
    if (k == text.size()) break;
    if (text[k] != '*') throw MonomialSyntaxError{k, "expected '*' or end of monomial, found '" + token_at(k) + "'"};
    ++k;
  }
  return Monomial(e);
}

class Validator {
 public:
  Validator(std::string_view text, const Locator& where) : text_(text), where_(where) {}

  [[noreturn]] void fail_at(std::size_t offset, const std::string& message) const {
    const auto p = position_of(text_, offset);
    throw ProblemError(p.line, p.column, message);
  }
  [[noreturn]] void fail(const std::string& pointer, const std::string& message) const {
    auto it = where_.values.find(pointer);
    fail_at(it == where_.values.end() ? 0 : it->second, message);
  }
  [[noreturn]] void fail_key(const std::string& pointer, const std::string& message) const {
    auto it = where_.keys.find(pointer);
    fail_at(it == where_.keys.end() ? 0 : it->second, message);
  }

  void allowed_keys(const json& object, const std::string& pointer, std::initializer_list<const char*> keys) const {
    for (const auto& [k, v] : object.items()) {
      if (std::none_of(keys.begin(), keys.end(), [&](const char* a) { return k == a; }))
        fail_key(pointer + "/" + escape_pointer_token(k), "unknown key '" + k + "'");
    }
  }
  const json& object(const json& parent, const std::string& pointer, const char* key) const {
    if (!parent.contains(key)) fail(pointer, std::string("missing key '") + key + "'");
    const auto& v = parent.at(key);
    if (!v.is_object()) fail(pointer + "/" + key, std::string("'") + key + "' must be an object");
    return v;
  }
  const json& array(const json& v, const std::string& pointer, const std::string& what) const {
    if (!v.is_array()) fail(pointer, what + " must be an array");
    return v;
  }
  std::string string(const json& v, const std::string& pointer, const std::string& what) const {
    if (!v.is_string()) fail(pointer, what + " must be a string");
    return v.get<std::string>();
  }
  std::int64_t integer(const json& v, const std::string& pointer, const std::string& what, std::int64_t lo,
                       std::int64_t hi) const {
    if (!v.is_number_integer()) fail(pointer, what + " must be an integer");
    if (v.is_number_unsigned() && v.get<std::uint64_t>() > static_cast<std::uint64_t>(hi))
      fail(pointer, what + " must be at most " + std::to_string(hi));
    const auto x = v.get<std::int64_t>();
    if (x < lo || x > hi) fail(pointer, what + " must lie in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
    return x;
  }
  Monomial monomial(const json& v, const std::string& pointer, const std::vector<std::string>& variables) const {
    const auto text = string(v, pointer, "monomial");
    try {
      return lex_monomial(text, variables);
    } catch (const MonomialSyntaxError& e) {
      auto it = where_.values.find(pointer);
      fail_at((it == where_.values.end() ? 0 : it->second + 1) + e.offset, e.message + " in \"" + text + "\"");
    }
  }

 private:
  std::string_view text_;
  const Locator& where_;
};

}  // namespace

ProblemError::ProblemError(std::size_t line, std::size_t column, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
      line_(line),
      column_(column),
      detail_(message) {}

const std::vector<std::string>& task_vocabulary() {
  static const std::vector<std::string> tasks = {
      "local_cohomology", "cd_vs_dim", "koszul_limit", "composite",     "lemma1",          "theorem2",
      "saturation",       "regular_sequence", "fraction_field", "a2_check", "converse_search"};
  return tasks;
}

Monomial parse_monomial(std::string_view text, const std::vector<std::string>& variables) {
  try {
    return lex_monomial(text, variables);
  } catch (const MonomialSyntaxError& e) {
    throw ProblemError(1, e.offset + 1, e.message);
  }
}

std::string format_monomial(const Monomial& m, const std::vector<std::string>& variables) {
  if (m.ambient() != variables.size()) throw std::invalid_argument("monomial and variable list disagree");
  std::string out;
  for (std::size_t c = 0; c < variables.size(); ++c) {
    const auto k = m.exponent()[c];
    if (k == 0) continue;
    if (!out.empty()) out += '*';
    out += variables[c];
    if (k != 1) out += '^' + std::to_string(k);
  }
  return out.empty() ? "1" : out;
}

Problem parse_problem(std::string_view text) {
  std::size_t consumed = 0;
  Locator locator(text, &consumed);
  const CountingIterator first{text.data(), text.data(), &consumed};
  const CountingIterator last{text.data() + text.size(), text.data(), &consumed};
  const bool ok = json::sax_parse(first, last, &locator);
  if (!ok || locator.error_offset) {
    const auto p = position_of(text, locator.error_offset.value_or(consumed));
    throw ProblemError(p.line, p.column, locator.error_message.empty() ? "malformed JSON" : locator.error_message);
  }
  const json root = json::parse(text.begin(), text.end());
  const Validator v(text, locator);
  if (!root.is_object()) v.fail("", "problem must be a JSON object");
  v.allowed_keys(root, "", {"ring", "module", "sequence", "tasks", "box_radius", "options"});

  Problem p;
  const auto& ring = v.object(root, "", "ring");
  v.allowed_keys(ring, "/ring", {"variables", "field"});
  if (!ring.contains("variables")) v.fail("/ring", "missing key 'variables'");
  const auto& vars = v.array(ring.at("variables"), "/ring/variables", "'variables'");
  if (vars.empty()) v.fail("/ring/variables", "at least one variable is required");
  if (vars.size() > kMaxVariables)
    v.fail("/ring/variables", "at most " + std::to_string(kMaxVariables) + " variables are supported");
  for (std::size_t k = 0; k < vars.size(); ++k) {
    const std::string ptr = "/ring/variables/" + std::to_string(k);
    auto name = v.string(vars[k], ptr, "variable name");
    if (!valid_identifier(name)) v.fail(ptr, "variable name '" + name + "' is not an identifier");
    if (std::find(p.variables.begin(), p.variables.end(), name) != p.variables.end())
      v.fail(ptr, "duplicate variable '" + name + "'");
    p.variables.push_back(std::move(name));
  }
  if (ring.contains("field")) {
    const auto& f = v.object(ring, "/ring", "field");
    v.allowed_keys(f, "/ring/field", {"kind", "p"});
    if (!f.contains("kind")) v.fail("/ring/field", "missing key 'kind'");
    const auto kind = v.string(f.at("kind"), "/ring/field/kind", "field kind");
    if (kind == "rational") {
      if (f.contains("p")) v.fail_key("/ring/field/p", "a rational field takes no 'p'");
    } else if (kind == "prime") {
      if (!f.contains("p")) v.fail("/ring/field", "a prime field needs 'p'");
      const auto prime = v.integer(f.at("p"), "/ring/field/p", "'p'", 2, (std::int64_t{1} << 31) - 1);
      if (!is_prime(static_cast<std::uint32_t>(prime))) v.fail("/ring/field/p", std::to_string(prime) + " is not prime");
      p.field = Field::prime(static_cast<std::uint32_t>(prime));
    } else {
      v.fail("/ring/field/kind", "unknown field kind '" + kind + "', expected rational or prime");
    }
  }

  if (root.contains("module")) {
    const auto& module = v.object(root, "", "module");
    v.allowed_keys(module, "/module", {"ideal"});
    if (module.contains("ideal")) {
      const auto& gens = v.array(module.at("ideal"), "/module/ideal", "'ideal'");
      for (std::size_t k = 0; k < gens.size(); ++k)
        p.ideal.push_back(v.monomial(gens[k], "/module/ideal/" + std::to_string(k), p.variables));
    }
  }

  if (root.contains("sequence")) {
    const auto& items = v.array(root.at("sequence"), "/sequence", "'sequence'");
    if (items.size() > 31) v.fail("/sequence", "at most 31 sequence items are supported");
    for (std::size_t k = 0; k < items.size(); ++k) {
      const std::string ptr = "/sequence/" + std::to_string(k);
      auto m = v.monomial(items[k], ptr, p.variables);
      if (m.is_one()) v.fail(ptr, "sequence items must not be 1");
      p.sequence.push_back(std::move(m));
    }
  }

  if (!root.contains("tasks")) v.fail("", "missing key 'tasks'");
  const auto& tasks = v.array(root.at("tasks"), "/tasks", "'tasks'");
  for (std::size_t k = 0; k < tasks.size(); ++k) {
    const std::string ptr = "/tasks/" + std::to_string(k);
    auto name = v.string(tasks[k], ptr, "task");
    const auto& vocab = task_vocabulary();
    if (std::find(vocab.begin(), vocab.end(), name) == vocab.end()) v.fail(ptr, "unknown task '" + name + "'");
    p.tasks.push_back(std::move(name));
  }

  if (root.contains("box_radius")) p.box_radius = v.integer(root.at("box_radius"), "/box_radius", "'box_radius'", 0, 1000);

  if (root.contains("options")) {
    const auto& o = v.object(root, "", "options");
    v.allowed_keys(o, "/options",
                   {"split", "polynomial", "degree_bound", "a2_index", "max_degree", "max_i", "chamber_cap",
                    "box_cap", "hilbert_cap", "seed"});
    auto natural = [&](const char* key, std::int64_t lo, std::int64_t hi) -> std::optional<std::int64_t> {
      if (!o.contains(key)) return std::nullopt;
      return v.integer(o.at(key), std::string("/options/") + key, std::string("'") + key + "'", lo, hi);
    };
    constexpr auto big = std::numeric_limits<std::int64_t>::max();
    if (auto x = natural("split", 0, 31)) p.options.split = static_cast<std::size_t>(*x);
    if (auto x = natural("degree_bound", 1, 64)) p.options.degree_bound = *x;
    if (auto x = natural("a2_index", 1, 4)) p.options.a2_index = static_cast<std::size_t>(*x);
    if (auto x = natural("max_degree", 0, 16)) p.options.max_degree = *x;
    if (auto x = natural("max_i", 1, 8)) p.options.max_i = static_cast<std::size_t>(*x);
    if (auto x = natural("chamber_cap", 1, big)) p.options.chamber_cap = static_cast<std::size_t>(*x);
    if (auto x = natural("box_cap", 1, big)) p.options.box_cap = static_cast<std::size_t>(*x);
    if (auto x = natural("hilbert_cap", 1, big)) p.options.hilbert_cap = static_cast<std::size_t>(*x);
    if (o.contains("seed")) {
      const auto& seed = o.at("seed");
      if (!seed.is_number_unsigned()) v.fail("/options/seed", "'seed' must be an unsigned 64-bit integer");
      p.options.seed = seed.get<std::uint64_t>();
    }
    if (o.contains("polynomial")) {
      const auto& terms = v.array(o.at("polynomial"), "/options/polynomial", "'polynomial'");
      PolynomialTerms poly;
      for (std::size_t k = 0; k < terms.size(); ++k) {
        const std::string ptr = "/options/polynomial/" + std::to_string(k);
        const auto& t = terms[k];
        if (!t.is_object()) v.fail(ptr, "polynomial term must be an object");
        v.allowed_keys(t, ptr, {"coefficient", "monomial"});
        if (!t.contains("monomial")) v.fail(ptr, "missing key 'monomial'");
        std::int64_t coef = 1;
        if (t.contains("coefficient")) {
          coef = v.integer(t.at("coefficient"), ptr + "/coefficient", "'coefficient'", -(std::int64_t{1} << 62),
                           std::int64_t{1} << 62);
          if (coef == 0) v.fail(ptr + "/coefficient", "coefficient must be nonzero");
        }
        poly.emplace_back(coef, v.monomial(t.at("monomial"), ptr + "/monomial", p.variables));
      }
      p.options.polynomial = std::move(poly);
    }
  }
  return p;
}

std::string serialize_problem(const Problem& p) {
  ordered_json root;
  ordered_json field;
  if (p.field.is_rational()) {
    field["kind"] = "rational";
  } else {
    field["kind"] = "prime";
    field["p"] = p.field.characteristic();
  }
  root["ring"]["variables"] = p.variables;
  root["ring"]["field"] = field;
  root["module"]["ideal"] = ordered_json::array();
  for (const auto& m : p.ideal) root["module"]["ideal"].push_back(format_monomial(m, p.variables));
  root["sequence"] = ordered_json::array();
  for (const auto& m : p.sequence) root["sequence"].push_back(format_monomial(m, p.variables));
  root["tasks"] = p.tasks;
  root["box_radius"] = p.box_radius;
  ordered_json o = ordered_json::object();
  const auto& opt = p.options;
  if (opt.split) o["split"] = *opt.split;
  if (opt.polynomial) {
    o["polynomial"] = ordered_json::array();
    for (const auto& [c, m] : *opt.polynomial)
      o["polynomial"].push_back({{"coefficient", c}, {"monomial", format_monomial(m, p.variables)}});
  }
  if (opt.degree_bound) o["degree_bound"] = *opt.degree_bound;
  if (opt.a2_index) o["a2_index"] = *opt.a2_index;
  if (opt.max_degree) o["max_degree"] = *opt.max_degree;
  if (opt.max_i) o["max_i"] = *opt.max_i;
  if (opt.chamber_cap) o["chamber_cap"] = *opt.chamber_cap;
  if (opt.box_cap) o["box_cap"] = *opt.box_cap;
  if (opt.hilbert_cap) o["hilbert_cap"] = *opt.hilbert_cap;
  if (opt.seed) o["seed"] = *opt.seed;
  root["options"] = o;
  return root.dump(2) + "\n";
}

}  // namespace lclab
