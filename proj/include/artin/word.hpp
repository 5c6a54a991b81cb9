#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace artin {

/// A generator raised to +1 or -1. `gen` indexes a generator list held
/// elsewhere (a graph's vertices or a presentation's generators).
struct Letter {
  std::size_t gen;
  int exp;

  friend bool operator==(const Letter&, const Letter&) = default;
};

using Word = std::vector<Letter>;

Word inverse(const Word& w);
Word concat(const Word& a, const Word& b);
/// Cancel adjacent x x^-1 pairs.
Word freely_reduce(const Word& w);
/// Sum of exponents of every letter (the map sending each generator to 1).
long abelianized_sum(const Word& w);
/// Sum of exponents of one generator.
long exponent_sum(const Word& w, std::size_t gen);

/// Whitespace-separated letters "name" or "name^-1" (also "name^1").
/// Throws artin::Error on unknown names or bad exponents.
Word parse_word(std::string_view text, const std::vector<std::string>& names);
std::string format_word(const Word& w, const std::vector<std::string>& names);
/// Each letter as its own token, e.g. {"t", "a", "t^-1"}.
std::vector<std::string> word_tokens(const Word& w,
                                     const std::vector<std::string>& names);

}  // namespace artin
