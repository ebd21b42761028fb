#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace octoprime {

struct Letter
{
  std::uint32_t gen = 0;
  std::int64_t exp = 1;

  bool operator==(Letter const &) const = default;
};

/// Free-group word. Normalized: no zero exponents, no two adjacent letters on
/// the same generator.
class Word
{
public:
  Word() = default;
  explicit Word(std::vector<Letter> letters);

  static Word generator(std::uint32_t gen, std::int64_t exp = 1);

  std::vector<Letter> const &letters() const noexcept { return letters_; }
  bool empty() const noexcept { return letters_.empty(); }
  std::size_t size() const noexcept { return letters_.size(); }
  /// Sum of |exponent| over letters.
  std::uint64_t length() const;
  /// One past the largest generator index used, 0 for the empty word.
  std::uint32_t generator_bound() const;

  Word operator*(Word const &other) const;
  Word pow(std::int64_t n) const;

  bool operator==(Word const &) const = default;

private:
  std::vector<Letter> letters_;
};

/// Free inverse.
Word invert_word(Word const &w);

/// Free reduction of an arbitrary letter sequence.
Word reduce_letters(std::vector<Letter> const &letters);

/// b^-1 a b
Word conjugate(Word const &a, Word const &b);

/// a^-1 b^-1 a b
Word commutator(Word const &a, Word const &b);

struct Presentation
{
  std::vector<std::string> generators;
  std::vector<Word> relators;

  std::size_t generator_count() const noexcept { return generators.size(); }
  /// Throws InvalidArgument if a relator refers to an undeclared generator or
  /// names repeat.
  void validate() const;

  bool operator==(Presentation const &) const = default;
};

using Params = std::map<std::string, std::int64_t>;

/// Parses e.g. "a^4=b^2=a^b*a=1". Generators are numbered in order of first
/// appearance unless `generators` fixes the list, in which case any other name
/// is rejected. A bare exponent name not bound in `params` is a conjugation.
Presentation parse_presentation(std::string const &text, Params const &params = {},
                                std::optional<std::vector<std::string>> const &generators = std::nullopt);

/// Parses a single word over a fixed generator list.
Word parse_word(std::string const &text, std::vector<std::string> const &generators, Params const &params = {});

std::string format_word(Word const &w, std::vector<std::string> const &generators);

/// "r1=r2=...=1"; parsing this back yields the same relators.
std::string format_presentation(Presentation const &pres);

/// Product of generator images along `w`. Negative exponents use `inverse`.
template<class T, class Mul, class Inv>
T evaluate_word(Word const &w, std::vector<T> const &images, T identity, Mul multiply, Inv inverse)
{
  T result = identity;
  for (auto const &letter : w.letters()) {
    T base = letter.exp < 0 ? inverse(images.at(letter.gen)) : images.at(letter.gen);
    auto n = letter.exp < 0 ? -letter.exp : letter.exp;
    // square-and-multiply
    T acc = identity;
    while (n) {
      if (n & 1)
        acc = multiply(acc, base);
      n >>= 1;
      if (n)
        base = multiply(base, base);
    }
    result = multiply(result, acc);
  }
  return result;
}

/// Convenience form for types with operator*, inverse() and a supplied identity.
template<class T>
T evaluate_word(Word const &w, std::vector<T> const &images, T identity)
{
  return evaluate_word(
    w, images, identity, [](T const &x, T const &y) { return x * y; }, [](T const &x) { return x.inverse(); });
}

} // namespace octoprime
