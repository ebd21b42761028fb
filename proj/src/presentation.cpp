#include "octoprime/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "octoprime/errors.hpp"

namespace octoprime {

Word reduce_letters(std::vector<Letter> const &letters) { return Word(letters); }

Word::Word(std::vector<Letter> letters)
{
  for (auto const &l : letters) {
    if (l.exp == 0)
      continue;
    if (!letters_.empty() && letters_.back().gen == l.gen) {
      letters_.back().exp += l.exp;
      if (letters_.back().exp == 0)
        letters_.pop_back();
    } else {
      letters_.push_back(l);
    }
  }
}

Word Word::generator(std::uint32_t gen, std::int64_t exp) { return Word({Letter{gen, exp}}); }

std::uint64_t Word::length() const
{
  std::uint64_t n = 0;
  for (auto const &l : letters_)
    n += static_cast<std::uint64_t>(l.exp < 0 ? -l.exp : l.exp);
  return n;
}

std::uint32_t Word::generator_bound() const
{
  std::uint32_t b = 0;
  for (auto const &l : letters_)
    b = std::max(b, l.gen + 1);
  return b;
}

Word Word::operator*(Word const &other) const
{
  std::vector<Letter> joined = letters_;
  joined.insert(joined.end(), other.letters_.begin(), other.letters_.end());
  return Word(std::move(joined));
}

Word Word::pow(std::int64_t n) const
{
  if (n < 0)
    return invert_word(*this).pow(-n);
  if (letters_.size() == 1)
    return generator(letters_[0].gen, letters_[0].exp * n);
  Word result;
  for (std::int64_t i = 0; i < n; ++i)
    result = result * *this;
  return result;
}

Word invert_word(Word const &w)
{
  std::vector<Letter> out(w.letters().rbegin(), w.letters().rend());
  for (auto &l : out)
    l.exp = -l.exp;
  return Word(std::move(out));
}

Word conjugate(Word const &a, Word const &b) { return invert_word(b) * a * b; }

Word commutator(Word const &a, Word const &b) { return invert_word(a) * invert_word(b) * a * b; }

void Presentation::validate() const
{
  std::set<std::string> names(generators.begin(), generators.end());
  if (names.size() != generators.size())
    throw InvalidArgument("duplicate generator name");
  for (auto const &r : relators) {
    if (r.generator_bound() > generators.size())
      throw InvalidArgument("relator refers to an undeclared generator");
  }
}

namespace {

class Parser
{
public:
  Parser(std::string const &text, Params const &params, std::optional<std::vector<std::string>> const &gens)
    : text_(text), params_(params), fixed_(gens.has_value())
  {
    if (gens)
      generators_ = *gens;
  }

  Presentation parse_all()
  {
    Presentation pres;
    skip_ws();
    if (at_end())
      throw ParseError("empty presentation", pos_);
    parse_chain(pres.relators);
    while (accept(';')) {
      skip_ws();
      if (at_end())
        break;
      parse_chain(pres.relators);
    }
    skip_ws();
    if (!at_end())
      throw ParseError(std::string("unexpected '") + text_[pos_] + "'", pos_);
    pres.generators = generators_;
    return pres;
  }

  Word parse_single()
  {
    auto w = parse_word();
    skip_ws();
    if (!at_end())
      throw ParseError(std::string("unexpected '") + text_[pos_] + "'", pos_);
    return w.word;
  }

private:
  struct Parsed
  {
    Word word;
    bool literal_one = false;
  };

  std::string const &text_;
  Params const &params_;
  bool fixed_;
  std::vector<std::string> generators_;
  std::size_t pos_ = 0;

  bool at_end() const { return pos_ >= text_.size(); }

  void skip_ws()
  {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  char peek()
  {
    skip_ws();
    return at_end() ? '\0' : text_[pos_];
  }

  bool accept(char c)
  {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c)
  {
    if (!accept(c)) {
      if (at_end())
        throw ParseError(std::string("expected '") + c + "' but input ended", pos_);
      throw ParseError(std::string("expected '") + c + "'", pos_);
    }
  }

  static bool is_name_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }

  std::string read_name()
  {
    std::string name(1, text_[pos_++]);
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
      name += text_[pos_++];
    return name;
  }

  std::int64_t read_int()
  {
    std::size_t const start = pos_;
    std::int64_t v = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + (text_[pos_] - '0');
      if (v > (std::int64_t{1} << 40))
        throw ParseError("integer too large", start);
      ++pos_;
    }
    if (pos_ == start)
      throw ParseError("expected integer", pos_);
    return v;
  }

  std::uint32_t generator_index(std::string const &name, std::size_t at)
  {
    auto it = std::find(generators_.begin(), generators_.end(), name);
    if (it != generators_.end())
      return static_cast<std::uint32_t>(it - generators_.begin());
    if (fixed_)
      throw ParseError("unknown generator '" + name + "'", at);
    generators_.push_back(name);
    return static_cast<std::uint32_t>(generators_.size() - 1);
  }

  std::int64_t lookup_param(std::string const &name, std::size_t at)
  {
    auto it = params_.find(name);
    if (it == params_.end())
      throw ParseError("unbound symbolic exponent '" + name + "'", at);
    return it->second;
  }

  void parse_chain(std::vector<Word> &out)
  {
    std::vector<Parsed> parts;
    parts.push_back(parse_word());
    while (accept('='))
      parts.push_back(parse_word());
    if (parts.size() < 2)
      throw ParseError("expected '='", pos_);
    std::vector<Word> rels;
    if (parts.back().literal_one) {
      for (std::size_t i = 0; i + 1 < parts.size(); ++i)
        rels.push_back(parts[i].word);
    } else {
      for (std::size_t i = 0; i + 1 < parts.size(); ++i)
        rels.push_back(parts[i].word * invert_word(parts[i + 1].word));
    }
    for (auto &r : rels) {
      if (!r.empty())
        out.push_back(std::move(r));
    }
  }

  Parsed parse_word()
  {
    Parsed first = parse_term();
    if (peek() != '*')
      return first;
    Word w = first.word;
    while (accept('*'))
      w = w * parse_term().word;
    return {w, false};
  }

  Parsed parse_term()
  {
    Parsed base = parse_atom();
    while (accept('^')) {
      auto e = parse_exponent();
      if (e.conjugator)
        base = {conjugate(base.word, *e.conjugator), false};
      else
        base = {base.word.pow(e.value), false};
    }
    return base;
  }

  Parsed parse_atom()
  {
    char const c = peek();
    std::size_t const at = pos_;
    if (c == '\0')
      throw ParseError("unexpected end of input", pos_);
    if (is_name_start(c)) {
      auto name = read_name();
      return {Word::generator(generator_index(name, at)), false};
    }
    if (c == '1' && (pos_ + 1 >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_ + 1])))) {
      ++pos_;
      return {Word(), true};
    }
    if (c == '(') {
      ++pos_;
      auto inner = parse_word();
      if (accept(',')) {
        auto rhs = parse_word();
        expect(')');
        return {commutator(inner.word, rhs.word), false};
      }
      expect(')');
      return {inner.word, false};
    }
    throw ParseError(std::string("unexpected '") + c + "'", at);
  }

  struct Exponent
  {
    std::int64_t value = 1;
    std::optional<Word> conjugator;
  };

  Exponent parse_exponent()
  {
    char const c = peek();
    std::size_t const at = pos_;
    if (c == '{') {
      ++pos_;
      auto v = parse_sum();
      expect('}');
      return {v, std::nullopt};
    }
    if (c == '(') {
      ++pos_;
      auto v = parse_sum();
      expect(')');
      return {v, std::nullopt};
    }
    if (c == '-') {
      ++pos_;
      return {-parse_factor(), std::nullopt};
    }
    if (std::isdigit(static_cast<unsigned char>(c)))
      return {read_int(), std::nullopt};
    if (is_name_start(c)) {
      auto name = read_name();
      if (params_.count(name))
        return {params_.at(name), std::nullopt};
      return {1, Word::generator(generator_index(name, at))};
    }
    if (c == '\0')
      throw ParseError("missing exponent", at);
    throw ParseError(std::string("bad exponent '") + c + "'", at);
  }

  std::int64_t parse_sum()
  {
    std::int64_t v = 0;
    if (accept('-'))
      v = -parse_product();
    else
      v = parse_product();
    for (;;) {
      if (accept('+'))
        v += parse_product();
      else if (accept('-'))
        v -= parse_product();
      else
        return v;
    }
  }

  std::int64_t parse_product()
  {
    std::int64_t v = parse_factor();
    for (;;) {
      char const c = peek();
      if (c == '*') {
        ++pos_;
        v *= parse_factor();
      } else if (c == '/') {
        std::size_t const at = pos_++;
        auto d = parse_factor();
        if (d == 0 || v % d != 0)
          throw ParseError("inexact division in exponent", at);
        v /= d;
      } else if (c == '(' || is_name_start(c) || std::isdigit(static_cast<unsigned char>(c))) {
        v *= parse_factor();
      } else {
        return v;
      }
    }
  }

  std::int64_t parse_factor()
  {
    char const c = peek();
    std::size_t const at = pos_;
    if (c == '-') {
      ++pos_;
      return -parse_factor();
    }
    if (c == '(') {
      ++pos_;
      auto v = parse_sum();
      expect(')');
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c)))
      return read_int();
    if (is_name_start(c)) {
      auto name = read_name();
      return lookup_param(name, at);
    }
    if (c == '\0')
      throw ParseError("unexpected end of exponent", at);
    throw ParseError(std::string("bad exponent '") + c + "'", at);
  }
};

} // namespace

Presentation parse_presentation(std::string const &text, Params const &params,
                                std::optional<std::vector<std::string>> const &generators)
{
  if (generators) {
    Presentation check{*generators, {}};
    check.validate();
  }
  Parser parser(text, params, generators);
  return parser.parse_all();
}

Word parse_word(std::string const &text, std::vector<std::string> const &generators, Params const &params)
{
  Parser parser(text, params, generators);
  return parser.parse_single();
}

std::string format_word(Word const &w, std::vector<std::string> const &generators)
{
  if (w.empty())
    return "1";
  std::string out;
  for (auto const &l : w.letters()) {
    if (!out.empty())
      out += '*';
    out += l.gen < generators.size() ? generators[l.gen] : "g" + std::to_string(l.gen);
    if (l.exp != 1)
      out += '^' + std::to_string(l.exp);
  }
  return out;
}

std::string format_presentation(Presentation const &pres)
{
  std::string out;
  for (auto const &r : pres.relators) {
    out += format_word(r, pres.generators);
    out += '=';
  }
  out += '1';
  return out;
}

} // namespace octoprime
