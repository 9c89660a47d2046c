#include "capelli/serialize.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>

namespace capelli {

namespace {

std::string render_sum(const std::vector<std::pair<Rational, std::string>>& terms) {
  if (terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [c, body] : terms) {
    const bool negative = c < 0;
    const Rational a = abs(c);
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (body.empty()) {
      out += to_short_string(a);
    } else {
      if (a != 1) out += to_short_string(a) + "*";
      out += body;
    }
  }
  return out;
}

struct Factor {
  int a;
  int b;
  int power;
};

struct ParsedTerm {
  Rational coeff;
  std::vector<Factor> factors;
};

class TermParser {
 public:
  TermParser(std::string_view text, char letter) : letter_(letter) {
    // Typographic minus signs are accepted as '-'.
    std::string s(text);
    for (std::size_t p; (p = s.find("\xE2\x88\x92")) != std::string::npos;) s.replace(p, 3, "-");
    text_ = std::move(s);
  }

  std::vector<ParsedTerm> parse() {
    std::vector<ParsedTerm> out;
    skip();
    if (pos_ == text_.size()) fail("empty expression");
    bool first = true;
    while (pos_ < text_.size()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      ParsedTerm t = term();
      t.coeff *= sign;
      out.push_back(std::move(t));
      skip();
    }
    return out;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw std::invalid_argument("parse error at offset " + std::to_string(pos_) + ": " + why);
  }
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  std::string digits() {
    const std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected digits");
    return text_.substr(start, pos_ - start);
  }
  int small_int() {
    const std::string d = digits();
    if (d.size() > 3) fail("index too large");
    return std::stoi(d);
  }
  void expect(char c) {
    skip();
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
    skip();
  }

  ParsedTerm term() {
    ParsedTerm t{Rational(1), {}};
    bool have_number = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      std::string num = digits();
      if (peek() == '/') {
        ++pos_;
        num += "/" + digits();
      }
      t.coeff = parse_rational(num);
      have_number = true;
      skip();
      if (peek() == '*') {
        ++pos_;
        skip();
        if (peek() != letter_) fail("expected a factor after '*'");
      }
    }
    while (peek() == letter_) {
      ++pos_;
      expect('[');
      const int a = small_int();
      expect(',');
      const int b = small_int();
      skip();
      if (peek() != ']') fail("expected ']'");
      ++pos_;
      int power = 1;
      if (peek() == '^') {
        ++pos_;
        power = small_int();
      }
      t.factors.push_back(Factor{a, b, power});
      skip();
      if (peek() == '*') {
        ++pos_;
        skip();
        if (peek() != letter_) fail("expected a factor after '*'");
      }
    }
    if (!have_number && t.factors.empty()) fail("expected a term");
    return t;
  }

  std::string text_;
  std::size_t pos_ = 0;
  char letter_;
};

json rational_json(const Rational& q) { return to_fraction_string(q); }

Rational rational_from_json(const json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw std::invalid_argument("coefficient must be a \"p/q\" string or an integer");
}

}  // namespace

std::string to_text(const UglElement& x) {
  std::vector<std::pair<const Monomial*, const Rational*>> order;
  for (const auto& [m, c] : x.terms()) order.emplace_back(&m, &c);
  std::stable_sort(order.begin(), order.end(),
                   [](const auto& a, const auto& b) { return a.first->size() > b.first->size(); });
  std::vector<std::pair<Rational, std::string>> terms;
  for (const auto& [m, c] : order) {
    std::string body;
    for (const Generator& g : *m) body += "e[" + std::to_string(g.row) + "," + std::to_string(g.col) + "]";
    terms.emplace_back(*c, body);
  }
  return render_sum(terms);
}

json to_json(const UglElement& x) {
  std::vector<std::pair<const Monomial*, const Rational*>> order;
  for (const auto& [m, c] : x.terms()) order.emplace_back(&m, &c);
  std::stable_sort(order.begin(), order.end(),
                   [](const auto& a, const auto& b) { return a.first->size() > b.first->size(); });
  json out = json::array();
  for (const auto& [m, c] : order) {
    json mono = json::array();
    for (const Generator& g : *m) mono.push_back({g.row, g.col});
    out.push_back({{"coeff", rational_json(*c)}, {"monomial", mono}});
  }
  return out;
}

UglElement parse_ugl_text(std::string_view text, int n) {
  UglElement out(n);
  if (text.find_first_not_of(" \t\r\n") != std::string_view::npos &&
      text.substr(text.find_first_not_of(" \t\r\n")) == "0")
    return out;
  for (const ParsedTerm& t : TermParser(text, 'e').parse()) {
    Monomial word;
    for (const Factor& f : t.factors) {
      if (f.a < 1 || f.a > n || f.b < 1 || f.b > n) throw std::invalid_argument("generator index out of range");
      for (int k = 0; k < f.power; ++k)
        word.push_back(Generator{static_cast<std::uint8_t>(f.a), static_cast<std::uint8_t>(f.b)});
    }
    out += UglElement::from_word(n, word, t.coeff);
  }
  return out;
}

UglElement ugl_from_json(const json& j, int n) {
  if (!j.is_array()) throw std::invalid_argument("element JSON must be an array of terms");
  UglElement out(n);
  for (const json& term : j) {
    Monomial word;
    for (const json& g : term.at("monomial")) {
      const int a = g.at(0).get<int>(), b = g.at(1).get<int>();
      if (a < 1 || a > n || b < 1 || b > n) throw std::invalid_argument("generator index out of range");
      word.push_back(Generator{static_cast<std::uint8_t>(a), static_cast<std::uint8_t>(b)});
    }
    out += UglElement::from_word(n, word, rational_from_json(term.at("coeff")));
  }
  return out;
}

namespace {

std::vector<std::pair<const Exponents*, const Rational*>> mpoly_order(const MPoly& p) {
  std::vector<std::pair<const Exponents*, const Rational*>> order;
  for (const auto& [e, c] : p.terms()) order.emplace_back(&e, &c);
  std::stable_sort(order.begin(), order.end(), [](const auto& a, const auto& b) {
    const int da = std::accumulate(a.first->begin(), a.first->end(), 0);
    const int db = std::accumulate(b.first->begin(), b.first->end(), 0);
    if (da != db) return da > db;
    return *a.first > *b.first;
  });
  return order;
}

}  // namespace

std::string to_text(const MPoly& p) {
  std::vector<std::pair<Rational, std::string>> terms;
  for (const auto& [e, c] : mpoly_order(p)) {
    std::string body;
    for (std::size_t s = 0; s < e->size(); ++s) {
      const int x = (*e)[s];
      if (x == 0) continue;
      body += "x[" + std::to_string(static_cast<int>(s) / p.d() + 1) + "," +
              std::to_string(static_cast<int>(s) % p.d() + 1) + "]";
      if (x > 1) body += "^" + std::to_string(x);
    }
    terms.emplace_back(*c, body);
  }
  return render_sum(terms);
}

json to_json(const MPoly& p) {
  json terms = json::array();
  for (const auto& [e, c] : mpoly_order(p)) {
    json factors = json::array();
    for (std::size_t s = 0; s < e->size(); ++s)
      if ((*e)[s] > 0)
        factors.push_back({static_cast<int>(s) / p.d() + 1, static_cast<int>(s) % p.d() + 1, (*e)[s]});
    terms.push_back({{"coeff", rational_json(*c)}, {"factors", factors}});
  }
  return {{"n", p.n()}, {"d", p.d()}, {"terms", terms}};
}

MPoly parse_mpoly_text(std::string_view text, int n, int d) {
  MPoly out(n, d);
  if (text.find_first_not_of(" \t\r\n") != std::string_view::npos &&
      text.substr(text.find_first_not_of(" \t\r\n")) == "0")
    return out;
  for (const ParsedTerm& t : TermParser(text, 'x').parse()) {
    Exponents e(static_cast<std::size_t>(n * d), 0);
    for (const Factor& f : t.factors) {
      if (f.a < 1 || f.a > n || f.b < 1 || f.b > d) throw std::invalid_argument("variable index out of range");
      const auto s = static_cast<std::size_t>((f.a - 1) * d + (f.b - 1));
      if (e[s] + f.power > 255) throw std::invalid_argument("exponent too large");
      e[s] = static_cast<std::uint8_t>(e[s] + f.power);
    }
    out.add_term(e, t.coeff);
  }
  return out;
}

MPoly mpoly_from_json(const json& j, int n, int d) {
  MPoly out(n, d);
  for (const json& term : j.at("terms")) {
    Exponents e(static_cast<std::size_t>(n * d), 0);
    for (const json& f : term.at("factors")) {
      const int a = f.at(0).get<int>(), b = f.at(1).get<int>(), x = f.at(2).get<int>();
      if (a < 1 || a > n || b < 1 || b > d || x < 0 || x > 255) throw std::invalid_argument("bad polynomial factor");
      const auto s = static_cast<std::size_t>((a - 1) * d + (b - 1));
      e[s] = static_cast<std::uint8_t>(e[s] + x);
    }
    out.add_term(e, rational_from_json(term.at("coeff")));
  }
  return out;
}

json to_json(const Partition& p) { return p.parts(); }

json to_json(const YoungTableau& t) { return t.rows(); }

std::vector<int> parse_index_list(std::string_view text) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  if (pos == text.size()) return out;
  while (true) {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    const std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (start == pos || pos - start > 6) throw std::invalid_argument("malformed integer list: " + std::string(text));
    out.push_back(std::stoi(std::string(text.substr(start, pos - start))));
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == text.size()) break;
    if (text[pos] != ',') throw std::invalid_argument("malformed integer list: " + std::string(text));
    ++pos;
  }
  return out;
}

Partition parse_partition(std::string_view text) { return Partition(parse_index_list(text)); }

YoungTableau tableau_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("tableau must be an array of rows");
  std::vector<std::vector<int>> rows;
  for (const json& r : j) {
    if (!r.is_array()) throw std::invalid_argument("tableau rows must be arrays");
    std::vector<int> row;
    for (const json& x : r) {
      if (!x.is_number_integer() || x.get<long>() < 1) throw std::invalid_argument("tableau entries must be positive");
      row.push_back(x.get<int>());
    }
    rows.push_back(std::move(row));
  }
  return YoungTableau::from_rows(rows);
}

YoungTableau parse_tableau(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed tableau JSON: ") + e.what());
  }
  return tableau_from_json(j);
}

std::string to_text(const StdExpansion& e) {
  if (e.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [b, c] : e) {
    if (!first) out += "\n";
    first = false;
    out += to_short_string(c) + " * (" + to_json(b.left).dump() + " | " + to_json(b.right).dump() + ")";
  }
  return out;
}

json to_json(const StdExpansion& e) {
  json out = json::array();
  for (const auto& [b, c] : e)
    out.push_back({{"left", to_json(b.left)}, {"right", to_json(b.right)}, {"coeff", rational_json(c)}});
  return out;
}

StdExpansion expansion_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("expansion JSON must be an array");
  StdExpansion out;
  for (const json& item : j) {
    BitabSpec b{tableau_from_json(item.at("left")), tableau_from_json(item.at("right"))};
    const Rational c = rational_from_json(item.at("coeff"));
    if (c == 0) continue;
    auto [it, inserted] = out.try_emplace(b, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) out.erase(it);
    }
  }
  return out;
}

}  // namespace capelli
